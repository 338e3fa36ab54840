#pragma once

// Small conflict-driven clause learning solver used by the exact searches
// whose infeasibility proofs outgrow plain backtracking.

#include <cstdint>
#include <vector>

#include "toporep/error.hpp"

namespace toporep::cdcl {

/// Literals use DIMACS conventions: variable v >= 1 as +v / -v.
class Solver {
public:
    int new_var();
    int num_vars() const { return static_cast<int>(value_.size()); }
    /// Returns false once the formula is known unsatisfiable at level 0.
    bool add_clause(std::vector<int> lits);
    bool solve(const SearchBudget& budget = {});
    bool model_value(int v) const { return model_[v - 1]; }
    std::uint64_t conflicts() const { return conflicts_; }

private:
    struct Clause {
        std::vector<int> lits;  // internal literals
        bool learnt = false;
        bool deleted = false;
        int lbd = 0;
    };

    static int lit_of(int d) { return d > 0 ? 2 * (d - 1) : 2 * (-d - 1) + 1; }
    int lit_value(int l) const {  // 1 true, 0 false, -1 unassigned
        int v = value_[l >> 1];
        return v < 0 ? -1 : v ^ (l & 1);
    }
    void enqueue(int l, int reason);
    int propagate();
    void analyze(int confl, std::vector<int>& learnt, int& back_level);
    bool redundant(int l);
    void backtrack(int level);
    int pick_branch();
    void bump(int v);
    void attach(int ci);
    void reduce_db();

    void heap_insert(int v);
    void heap_up(int i);
    void heap_down(int i);
    int heap_pop();
    bool heap_less(int a, int b) const { return activity_[a] > activity_[b]; }

    std::vector<Clause> clauses_;
    std::vector<std::vector<int>> watches_;
    std::vector<std::int8_t> value_, phase_;
    std::vector<int> level_, reason_;
    std::vector<int> trail_, trail_lim_;
    std::size_t qhead_ = 0;
    std::vector<double> activity_;
    double var_inc_ = 1.0;
    std::vector<int> heap_, heap_pos_;
    std::vector<std::uint8_t> seen_;
    std::vector<bool> model_;
    bool unsat_ = false;
    std::uint64_t conflicts_ = 0;
};

}  // namespace toporep::cdcl
