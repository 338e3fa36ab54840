#include "toporep/hardness.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace toporep {

CnfFormula Monotone3SatInstance::to_cnf() const {
    CnfFormula f;
    f.variables = variables;
    for (const auto& c : clauses) {
        std::vector<int> lits;
        for (int v : c.vars) lits.push_back(c.positive ? v : -v);
        f.clauses.push_back(std::move(lits));
    }
    return f;
}

Monotone3SatInstance monotone_from_cnf(const CnfFormula& f) {
    Monotone3SatInstance inst;
    inst.variables = f.variables;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& c = f.clauses[i];
        if (c.size() != 3)
            fail(ErrorKind::wrong_arity, "clause " + std::to_string(i + 1) + " has " + std::to_string(c.size()) +
                                             " literals, expected 3");
        bool pos = c[0] > 0;
        for (int lit : c)
            if ((lit > 0) != pos) fail(ErrorKind::not_monotone, "clause " + std::to_string(i + 1) + " mixes polarities");
        inst.clauses.push_back({pos, {std::abs(c[0]), std::abs(c[1]), std::abs(c[2])}});
    }
    return inst;
}

Monotone3SatInstance parse_monotone_3sat(const std::string& dimacs) {
    return monotone_from_cnf(CnfFormula::parse_dimacs(dimacs));
}

bool satisfies(const Monotone3SatInstance& inst, const SatAssignment& a) {
    if (static_cast<int>(a.size()) != inst.variables + 1) return false;
    for (const auto& c : inst.clauses) {
        bool sat = false;
        for (int v : c.vars) sat = sat || a[v] == c.positive;
        if (!sat) return false;
    }
    return true;
}

std::optional<SatAssignment> brute_force_sat(const Monotone3SatInstance& inst, Exec exec) {
    const int n = inst.variables;
    if (n > kMaxBruteForceVariables)
        fail(ErrorKind::instance_too_large, "brute force is limited to " + std::to_string(kMaxBruteForceVariables) +
                                                " variables");
    // clause i is satisfied by bits iff (bits & pos_mask) != 0 or (~bits & neg_mask) != 0
    std::vector<std::uint32_t> pos_mask, neg_mask;
    for (const auto& c : inst.clauses) {
        std::uint32_t m = 0;
        for (int v : c.vars) m |= std::uint32_t{1} << (v - 1);
        pos_mask.push_back(c.positive ? m : 0);
        neg_mask.push_back(c.positive ? 0 : m);
    }
    const std::size_t m = pos_mask.size();
    auto ok = [&](std::uint32_t bits) {
        for (std::size_t i = 0; i < m; ++i)
            if (!(bits & pos_mask[i]) && !(~bits & neg_mask[i])) return false;
        return true;
    };
    const std::int64_t total = std::int64_t{1} << n;
    std::int64_t found = total;
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) reduction(min : found)
        for (std::int64_t b = 0; b < total; ++b)
            if (b < found && ok(static_cast<std::uint32_t>(b))) found = b;
    } else {
        for (std::int64_t b = 0; b < total; ++b)
            if (ok(static_cast<std::uint32_t>(b))) {
                found = b;
                break;
            }
    }
    if (found == total) return std::nullopt;
    SatAssignment a(n + 1, false);
    for (int j = 1; j <= n; ++j) a[j] = (found >> (j - 1)) & 1;
    if (!satisfies(inst, a)) fail(ErrorKind::internal_error, "brute force returned a non-solution");
    return a;
}

SatGadget reduce_3sat_to_colorful(const Monotone3SatInstance& inst) {
    SatGadget out;
    std::vector<std::string> ids;
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t i = 0; i < inst.clauses.size(); ++i) {
            const auto& c = inst.clauses[i];
            if (c.positive != (pass == 0)) continue;
            std::set<int> vars(c.vars.begin(), c.vars.end());
            for (int j : vars) {
                ids.push_back((pass == 0 ? "x" : "y") + std::to_string(i + 1) + "." + std::to_string(j));
                out.side.push_back(pass);
                out.pair.emplace_back(static_cast<int>(i) + 1, j);
                out.graph.colors.push_back(static_cast<int>(i) + 1);
            }
        }
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < ids.size(); ++u)
        for (std::size_t v = u + 1; v < ids.size(); ++v)
            if (out.side[u] != out.side[v] && out.pair[u].second != out.pair[v].second)
                edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    out.graph.graph = Graph(std::move(ids), edges);
    if (!out.graph.is_proper()) fail(ErrorKind::internal_error, "gadget coloring is not proper");
    return out;
}

namespace {

void check_query(const ColoredGraph& g, const ColorfulQuery& q) {
    if (static_cast<int>(g.colors.size()) != g.graph.size())
        fail(ErrorKind::invalid_input, "coloring is not total");
    if (!g.is_proper()) fail(ErrorKind::invalid_input, "coloring is not proper");
    if (!q.sides.empty() && static_cast<int>(q.sides.size()) != g.graph.size())
        fail(ErrorKind::invalid_input, "side restriction must cover every vertex");
    if (q.mode == ColorfulMode::balanced && q.t < 0) fail(ErrorKind::invalid_parameter, "t must be nonnegative");
}

class ColorfulSearch {
public:
    ColorfulSearch(const ColoredGraph& g, const ColorfulQuery& q, const SearchBudget& budget)
        : g_(g), q_(q), budget_(budget) {
        std::map<int, std::vector<int>> classes;
        for (int v = 0; v < g.graph.size(); ++v) classes[g.colors[v]].push_back(v);
        for (auto& [c, vs] : classes) classes_.push_back(std::move(vs));
        std::stable_sort(classes_.begin(), classes_.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
    }

    std::optional<BipartiteWitness> run() {
        const int r = static_cast<int>(classes_.size());
        if (q_.mode == ColorfulMode::all_colors) {
            need_ = {r, r};
            total_ = r;
            skip_allowed_ = false;
            if (dfs(0)) return result();
            return std::nullopt;
        }
        const int lo = q_.t / 2, hi = q_.t - q_.t / 2;
        if (q_.t > r) return std::nullopt;
        skip_allowed_ = true;
        total_ = q_.t;
        for (auto [a, b] : {std::pair{lo, hi}, std::pair{hi, lo}}) {
            need_ = {a, b};
            exact_ = true;
            if (dfs(0)) return result();
            if (lo == hi) break;
        }
        return std::nullopt;
    }

private:
    bool fits(int v, int side) const {
        if (!q_.sides.empty() && q_.sides[v] != side) return false;
        for (int u : chosen_[1 - side])
            if (!g_.graph.adjacent(u, v)) return false;
        return true;
    }

    bool dfs(std::size_t ci) {
        budget_.tick();
        const int picked = static_cast<int>(chosen_[0].size() + chosen_[1].size());
        if (picked == total_ || ci == classes_.size()) {
            if (picked != total_) return false;
            if (exact_ && (static_cast<int>(chosen_[0].size()) != need_[0] ||
                           static_cast<int>(chosen_[1].size()) != need_[1]))
                return false;
            if (!exact_ && !q_.allow_empty_side && (chosen_[0].empty() || chosen_[1].empty())) return false;
            return true;
        }
        if (picked + static_cast<int>(classes_.size() - ci) < total_) return false;
        for (int side = 0; side < 2; ++side) {
            if (static_cast<int>(chosen_[side].size()) >= need_[side]) continue;
            for (int v : classes_[ci]) {
                if (!fits(v, side)) continue;
                chosen_[side].push_back(v);
                if (dfs(ci + 1)) return true;
                chosen_[side].pop_back();
            }
        }
        return skip_allowed_ && dfs(ci + 1);
    }

    BipartiteWitness result() const {
        BipartiteWitness w{chosen_[0], chosen_[1], {}, {}};
        std::sort(w.x.begin(), w.x.end());
        std::sort(w.y.begin(), w.y.end());
        for (int v : w.x) w.x_cert.push_back(g_.colors[v]);
        for (int v : w.y) w.y_cert.push_back(g_.colors[v]);
        return w;
    }

    const ColoredGraph& g_;
    const ColorfulQuery& q_;
    const SearchBudget& budget_;
    std::vector<std::vector<int>> classes_;
    std::array<std::vector<int>, 2> chosen_;
    std::array<int, 2> need_{};
    int total_ = 0;
    bool skip_allowed_ = false;
    bool exact_ = false;
};

}  // namespace

std::optional<std::string> check_colorful_witness(const ColoredGraph& g, const ColorfulQuery& q,
                                                  const BipartiteWitness& w) {
    const int n = g.graph.size();
    std::set<int> seen;
    std::array<std::set<int>, 2> colors;
    int side = 0;
    for (const auto* part : {&w.x, &w.y}) {
        for (int v : *part) {
            if (v < 0 || v >= n) return "vertex index out of range";
            if (!seen.insert(v).second) return "vertex " + g.graph.id(v) + " appears twice";
            if (!q.sides.empty() && q.sides[v] != side) return "vertex " + g.graph.id(v) + " is on a forbidden side";
            colors[side].insert(g.colors[v]);
        }
        ++side;
    }
    for (int x : w.x)
        for (int y : w.y)
            if (!g.graph.adjacent(x, y)) return g.graph.id(x) + " and " + g.graph.id(y) + " are not adjacent";
    const int a = static_cast<int>(colors[0].size()), b = static_cast<int>(colors[1].size());
    if (q.mode == ColorfulMode::all_colors) {
        std::set<int> all(g.colors.begin(), g.colors.end()), got = colors[0];
        got.insert(colors[1].begin(), colors[1].end());
        if (got != all) return "not every color is used";
        if (!q.allow_empty_side && (w.x.empty() || w.y.empty())) return "a side is empty";
    } else {
        const int lo = q.t / 2, hi = q.t - lo;
        if (!((a >= lo && b >= hi) || (a >= hi && b >= lo))) return "sides are not balanced for t";
    }
    return std::nullopt;
}

std::optional<BipartiteWitness> colorful_complete_bipartite_exists(const ColoredGraph& g, const ColorfulQuery& q,
                                                                    const SearchBudget& budget) {
    check_query(g, q);
    auto w = ColorfulSearch(g, q, budget).run();
    if (w)
        if (auto bad = check_colorful_witness(g, q, *w))
            fail(ErrorKind::internal_error, "colorful witness failed verification: " + *bad);
    return w;
}

namespace {

ColorfulQuery gadget_query(const SatGadget& gadget) {
    ColorfulQuery q;
    q.sides = gadget.side;
    q.allow_empty_side = true;
    return q;
}

}  // namespace

SatAssignment witness_to_assignment(const Monotone3SatInstance& inst, const BipartiteWitness& w) {
    const auto gadget = reduce_3sat_to_colorful(inst);
    if (auto bad = check_colorful_witness(gadget.graph, gadget_query(gadget), w))
        fail(ErrorKind::invalid_input, "not an all-colors witness of the gadget: " + *bad);
    SatAssignment a(inst.variables + 1, false);
    for (int v : w.x) a[gadget.pair[v].second] = true;
    if (!satisfies(inst, a)) fail(ErrorKind::internal_error, "lifted assignment does not satisfy the instance");
    return a;
}

BipartiteWitness assignment_to_witness(const Monotone3SatInstance& inst, const SatAssignment& a) {
    if (!satisfies(inst, a)) fail(ErrorKind::invalid_input, "assignment does not satisfy the instance");
    const auto gadget = reduce_3sat_to_colorful(inst);
    BipartiteWitness w;
    for (int v = 0; v < gadget.graph.graph.size(); ++v) {
        bool value = a[gadget.pair[v].second];
        if (gadget.side[v] == 0 && value) w.x.push_back(v), w.x_cert.push_back(gadget.graph.colors[v]);
        if (gadget.side[v] == 1 && !value) w.y.push_back(v), w.y_cert.push_back(gadget.graph.colors[v]);
    }
    if (auto bad = check_colorful_witness(gadget.graph, gadget_query(gadget), w))
        fail(ErrorKind::internal_error, "constructed witness is invalid: " + *bad);
    return w;
}

std::vector<BalancedMember> reduce_balanced(const ColoredGraph& g) {
    if (!g.is_proper()) fail(ErrorKind::invalid_input, "coloring is not proper");
    const int r = g.color_count();
    std::vector<BalancedMember> out;
    for (int s = 0; s < std::max(r, 1); ++s) out.push_back({s, s + r, augment_dummies(g, s)});
    return out;
}

Monotone3SatInstance random_monotone_instance(std::mt19937_64& rng, int max_vars, int max_clauses) {
    if (max_vars < 1 || max_clauses < 0) fail(ErrorKind::invalid_parameter, "bad instance size limits");
    Monotone3SatInstance inst;
    inst.variables = std::uniform_int_distribution<int>(1, max_vars)(rng);
    const int m = std::uniform_int_distribution<int>(0, max_clauses)(rng);
    std::uniform_int_distribution<int> var(1, inst.variables);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < m; ++i) inst.clauses.push_back({coin(rng), {var(rng), var(rng), var(rng)}});
    return inst;
}

ColoredGraph random_colored_graph(std::mt19937_64& rng, int max_vertices, int max_colors, double edge_prob) {
    if (max_vertices < 1 || max_colors < 1) fail(ErrorKind::invalid_parameter, "bad graph size limits");
    const int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    const int k = std::uniform_int_distribution<int>(1, max_colors)(rng);
    std::uniform_int_distribution<int> color(1, k);
    std::vector<int> raw(n);
    for (auto& c : raw) c = color(rng);
    // relabel to 1..r in order of first appearance
    std::map<int, int> relabel;
    std::vector<int> colors;
    for (int c : raw) colors.push_back(relabel.emplace(c, static_cast<int>(relabel.size()) + 1).first->second);
    std::bernoulli_distribution edge(edge_prob);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (colors[u] != colors[v] && edge(rng)) edges.emplace_back(u, v);
    std::vector<std::string> ids;
    for (int v = 0; v < n; ++v) ids.push_back("v" + std::to_string(v));
    return {Graph(std::move(ids), edges), std::move(colors)};
}

FuzzReport fuzz_reduction(std::uint64_t seed, int count, int max_vars, int max_clauses) {
    std::mt19937_64 rng(seed);
    FuzzReport rep;
    for (int k = 0; k < count; ++k) {
        const auto inst = random_monotone_instance(rng, max_vars, max_clauses);
        ++rep.instances;
        const auto sat = brute_force_sat(inst);
        const auto gadget = reduce_3sat_to_colorful(inst);
        const auto w = colorful_complete_bipartite_exists(gadget.graph, gadget_query(gadget));
        std::string tag = "instance " + std::to_string(k);
        if (sat) ++rep.satisfiable;
        if (sat.has_value() != w.has_value()) {
            ++rep.disagreements;
            rep.failures.push_back(tag + ": brute force and gadget disagree");
            continue;
        }
        try {
            if (w && !satisfies(inst, witness_to_assignment(inst, *w))) throw Error(ErrorKind::internal_error, "");
            if (sat) assignment_to_witness(inst, *sat);
        } catch (const Error& e) {
            ++rep.disagreements;
            rep.failures.push_back(tag + ": lifting failed: " + e.what());
        }
    }
    return rep;
}

FuzzReport fuzz_balanced(std::uint64_t seed, int count, int max_vertices, int max_colors) {
    std::mt19937_64 rng(seed);
    FuzzReport rep;
    for (int k = 0; k < count; ++k) {
        const auto g = random_colored_graph(rng, max_vertices, max_colors);
        ++rep.instances;
        ColorfulQuery all;  // both sides nonempty
        const bool lhs = colorful_complete_bipartite_exists(g, all).has_value();
        bool rhs = false;
        for (const auto& member : reduce_balanced(g)) {
            if (member.s > g.color_count() - 2) continue;
            ColorfulQuery bal{ColorfulMode::balanced, member.t, {}, false};
            auto w = colorful_complete_bipartite_exists(member.graph, bal);
            if (!w) continue;
            rhs = true;
            // dropping the dummies must leave an all-colors witness of G
            BipartiteWitness back;
            for (int v : w->x)
                if (v < g.graph.size()) back.x.push_back(v);
            for (int v : w->y)
                if (v < g.graph.size()) back.y.push_back(v);
            if (auto bad = check_colorful_witness(g, all, back)) {
                ++rep.disagreements;
                rep.failures.push_back("graph " + std::to_string(k) + ": projected witness invalid: " + *bad);
            }
            break;
        }
        if (lhs) ++rep.satisfiable;
        if (lhs != rhs) {
            ++rep.disagreements;
            rep.failures.push_back("graph " + std::to_string(k) + ": all-colors and balanced family disagree");
        }
    }
    return rep;
}

}  // namespace toporep
