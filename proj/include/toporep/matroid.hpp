#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "toporep/algebra.hpp"
#include "toporep/graph.hpp"

namespace toporep {

/// Subset of a matroid ground set, bit i = element i.
using ElementSet = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;

/// Matroid exposed through rank queries only. Copies share one memo table;
/// concurrent queries are safe.
class RankOracle {
public:
    enum class Kind { uniform, linear, transversal };

    static RankOracle uniform(int m, int r);
    /// Elements are the columns of `columns`.
    static RankOracle linear(ExactMatrix columns);
    /// Elements are the vertices `side` of the bipartite graph `b`, in order.
    static RankOracle transversal(Graph b, std::vector<int> side);

    Kind kind() const;
    int ground_size() const;
    const std::vector<std::string>& ground_ids() const;
    int element_index(const std::string& id) const;  // -1 when absent

    int rank(ElementSet s) const;
    int rank(const std::vector<int>& elements) const;
    int full_rank() const;
    bool is_loop(int e) const { return rank(ElementSet{1} << e) == 0; }

    // Construction data, for serialization.
    int uniform_rank() const;
    const ExactMatrix& matrix() const;
    const Graph& bipartite_graph() const;
    const std::vector<int>& side() const;

    std::size_t memo_size() const;

private:
    struct Data;
    struct Memo;
    RankOracle(std::shared_ptr<const Data> data);
    int compute(ElementSet s) const;

    std::shared_ptr<const Data> data_;
    std::shared_ptr<Memo> memo_;
};

/// Assignment of a ground element to each graph vertex (by vertex index).
struct MatroidAssignment {
    RankOracle oracle;
    std::vector<int> element;

    /// Union of the elements assigned to the vertices in `vertices`.
    ElementSet elements_of_vertices(std::uint64_t vertices) const;
};

ElementSet element_set(const std::vector<int>& elements);
std::vector<int> elements_of(ElementSet s);

/// {e in universe : rank(S + e) = rank(S)}.
ElementSet closure_trace(const RankOracle& m, ElementSet s, ElementSet universe);

/// Independent subset of `s` of size exactly k, scanning elements in index order.
ElementSet greedy_independent_subset(const RankOracle& m, ElementSet s, int k);

/// Transversal rank via deleting U \ S from the graph and matching the rest;
/// a second route used to cross-check the oracle.
int transversal_rank_by_deletion(const Graph& b, const std::vector<int>& side, ElementSet s);

}  // namespace toporep
