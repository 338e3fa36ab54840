#include "cdcl.hpp"

#include <algorithm>
#include <cstdlib>

namespace toporep::cdcl {

namespace {

double luby(double y, int x) {
    int size = 1, seq = 0;
    while (size < x + 1) ++seq, size = 2 * size + 1;
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        --seq;
        x = x % size;
    }
    double r = 1;
    for (int i = 0; i < seq; ++i) r *= y;
    return r;
}

}  // namespace

int Solver::new_var() {
    int v = num_vars();
    value_.push_back(-1);
    phase_.push_back(1);
    level_.push_back(0);
    reason_.push_back(-1);
    activity_.push_back(0);
    seen_.push_back(0);
    heap_pos_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_insert(v);
    return v + 1;
}

bool Solver::add_clause(std::vector<int> dimacs) {
    if (unsat_) return false;
    if (!trail_lim_.empty()) fail(ErrorKind::internal_error, "clauses must be added at the root");
    std::vector<int> lits;
    for (int d : dimacs) {
        if (d == 0 || std::abs(d) > num_vars()) fail(ErrorKind::internal_error, "literal out of range");
        lits.push_back(lit_of(d));
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<int> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i + 1 < lits.size() && (lits[i] ^ 1) == lits[i + 1]) return true;  // tautology
        int v = lit_value(lits[i]);
        if (v == 1) return true;
        if (v == -1) kept.push_back(lits[i]);
    }
    if (kept.empty()) return !(unsat_ = true);
    if (kept.size() == 1) {
        enqueue(kept[0], -1);
        if (propagate() >= 0) unsat_ = true;
        return !unsat_;
    }
    clauses_.push_back({std::move(kept), false, false, 0});
    attach(static_cast<int>(clauses_.size()) - 1);
    return true;
}

void Solver::attach(int ci) {
    const auto& c = clauses_[ci].lits;
    watches_[c[0]].push_back(ci);
    watches_[c[1]].push_back(ci);
}

void Solver::enqueue(int l, int reason) {
    int v = l >> 1;
    value_[v] = static_cast<std::int8_t>((l & 1) ^ 1);
    level_[v] = static_cast<int>(trail_lim_.size());
    reason_[v] = reason;
    trail_.push_back(l);
}

int Solver::propagate() {
    while (qhead_ < trail_.size()) {
        const int p = trail_[qhead_++];
        const int false_lit = p ^ 1;
        auto& ws = watches_[false_lit];
        std::size_t i = 0, j = 0;
        while (i < ws.size()) {
            const int ci = ws[i++];
            Clause& c = clauses_[ci];
            if (c.deleted) continue;
            auto& l = c.lits;
            if (l[0] == false_lit) std::swap(l[0], l[1]);
            if (lit_value(l[0]) == 1) {
                ws[j++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < l.size(); ++k)
                if (lit_value(l[k]) != 0) {
                    std::swap(l[1], l[k]);
                    watches_[l[1]].push_back(ci);
                    moved = true;
                    break;
                }
            if (moved) continue;
            ws[j++] = ci;
            if (lit_value(l[0]) == 0) {
                while (i < ws.size()) ws[j++] = ws[i++];
                ws.resize(j);
                qhead_ = trail_.size();
                return ci;
            }
            enqueue(l[0], ci);
        }
        ws.resize(j);
    }
    return -1;
}

void Solver::bump(int v) {
    if ((activity_[v] += var_inc_) > 1e100) {
        for (auto& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_pos_[v] >= 0) heap_up(heap_pos_[v]);
}

bool Solver::redundant(int l) {
    int r = reason_[l >> 1];
    if (r < 0) return false;
    for (std::size_t k = 1; k < clauses_[r].lits.size(); ++k) {
        int v = clauses_[r].lits[k] >> 1;
        if (!seen_[v] && level_[v] > 0) return false;
    }
    return true;
}

void Solver::analyze(int confl, std::vector<int>& learnt, int& back_level) {
    learnt.assign(1, -1);
    int path = 0, p = -1;
    int idx = static_cast<int>(trail_.size()) - 1;
    const int cur = static_cast<int>(trail_lim_.size());
    do {
        const auto& lits = clauses_[confl].lits;
        for (std::size_t k = (p < 0 ? 0 : 1); k < lits.size(); ++k) {
            int q = lits[k], v = q >> 1;
            if (seen_[v] || level_[v] == 0) continue;
            seen_[v] = 1;
            bump(v);
            if (level_[v] >= cur) ++path;
            else learnt.push_back(q);
        }
        while (!seen_[trail_[idx] >> 1]) --idx;
        p = trail_[idx--];
        confl = reason_[p >> 1];
        seen_[p >> 1] = 0;
        --path;
    } while (path > 0);
    learnt[0] = p ^ 1;

    std::vector<int> all(learnt.begin() + 1, learnt.end());
    std::size_t j = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i)
        if (!redundant(learnt[i])) learnt[j++] = learnt[i];
    learnt.resize(j);
    for (int q : all) seen_[q >> 1] = 0;

    back_level = 0;
    if (learnt.size() > 1) {
        std::size_t best = 1;
        for (std::size_t i = 2; i < learnt.size(); ++i)
            if (level_[learnt[i] >> 1] > level_[learnt[best] >> 1]) best = i;
        std::swap(learnt[1], learnt[best]);
        back_level = level_[learnt[1] >> 1];
    }
    var_inc_ /= 0.95;
}

void Solver::backtrack(int level) {
    if (static_cast<int>(trail_lim_.size()) <= level) return;
    for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[level]; --i) {
        int v = trail_[i] >> 1;
        phase_[v] = value_[v];
        value_[v] = -1;
        reason_[v] = -1;
        if (heap_pos_[v] < 0) heap_insert(v);
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = trail_.size();
}

int Solver::pick_branch() {
    while (!heap_.empty()) {
        int v = heap_pop();
        if (value_[v] < 0) return 2 * v + (phase_[v] ? 0 : 1);
    }
    return -1;
}

void Solver::reduce_db() {
    std::vector<int> learnts;
    for (int ci = 0; ci < static_cast<int>(clauses_.size()); ++ci) {
        const auto& c = clauses_[ci];
        if (!c.learnt || c.deleted || c.lbd <= 2) continue;
        int v = c.lits[0] >> 1;
        if (reason_[v] == ci && value_[v] >= 0) continue;  // locked
        learnts.push_back(ci);
    }
    std::sort(learnts.begin(), learnts.end(),
              [&](int a, int b) { return clauses_[a].lbd > clauses_[b].lbd; });
    for (std::size_t i = 0; i < learnts.size() / 2; ++i) {
        clauses_[learnts[i]].deleted = true;
        clauses_[learnts[i]].lits.clear();
        clauses_[learnts[i]].lits.shrink_to_fit();
    }
}

bool Solver::solve(const SearchBudget& budget) {
    if (unsat_) return false;
    if (propagate() >= 0) return !(unsat_ = true);
    std::vector<int> learnt;
    int restarts = 0;
    std::uint64_t next_reduce = 2000;
    while (true) {
        const auto limit = static_cast<std::uint64_t>(100 * luby(2, restarts++));
        for (std::uint64_t local = 0;;) {
            budget.tick();
            int confl = propagate();
            if (confl >= 0) {
                ++conflicts_;
                ++local;
                if (trail_lim_.empty()) return !(unsat_ = true);
                int back;
                analyze(confl, learnt, back);
                backtrack(back);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], -1);
                } else {
                    std::vector<int> levels;
                    for (int l : learnt) levels.push_back(level_[l >> 1]);
                    std::sort(levels.begin(), levels.end());
                    int lbd = static_cast<int>(std::unique(levels.begin(), levels.end()) - levels.begin());
                    clauses_.push_back({learnt, true, false, lbd});
                    int ci = static_cast<int>(clauses_.size()) - 1;
                    attach(ci);
                    enqueue(learnt[0], ci);
                }
                if (conflicts_ >= next_reduce) {
                    reduce_db();
                    next_reduce = conflicts_ + 2000 + 300 * (conflicts_ / 2000);
                }
                continue;
            }
            if (local >= limit) {
                backtrack(0);
                break;
            }
            int next = pick_branch();
            if (next < 0) {
                model_.assign(num_vars(), false);
                for (int v = 0; v < num_vars(); ++v) model_[v] = value_[v] == 1;
                backtrack(0);
                return true;
            }
            trail_lim_.push_back(static_cast<int>(trail_.size()));
            enqueue(next, -1);
        }
    }
}

void Solver::heap_insert(int v) {
    heap_pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_pos_[v]);
}

void Solver::heap_up(int i) {
    int v = heap_[i];
    while (i > 0) {
        int parent = (i - 1) / 2;
        if (!heap_less(v, heap_[parent])) break;
        heap_[i] = heap_[parent];
        heap_pos_[heap_[i]] = i;
        i = parent;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
}

void Solver::heap_down(int i) {
    int v = heap_[i];
    const int n = static_cast<int>(heap_.size());
    while (2 * i + 1 < n) {
        int child = 2 * i + 1;
        if (child + 1 < n && heap_less(heap_[child + 1], heap_[child])) ++child;
        if (!heap_less(heap_[child], v)) break;
        heap_[i] = heap_[child];
        heap_pos_[heap_[i]] = i;
        i = child;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
}

int Solver::heap_pop() {
    int v = heap_[0];
    heap_pos_[v] = -1;
    int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_[0] = last;
        heap_pos_[last] = 0;
        heap_down(0);
    }
    return v;
}

}  // namespace toporep::cdcl
