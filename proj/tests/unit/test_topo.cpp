#include <doctest.h>

#include <bit>

#include "../support.hpp"
#include "toporep/error.hpp"
#include "toporep/representations.hpp"
#include "toporep/topo.hpp"

using namespace toporep;

namespace {

const auto Q = FieldSpec::rationals();

VectorAssignment c5_vectors() {
    VectorAssignment r{Q, 3, {}};
    for (auto v : std::vector<std::vector<long>>{{1, 1, 1}, {-1, -1, 2}, {3, 1, 2}, {-1, 5, -1}, {1, 0, -1}})
        r.vectors.push_back(ExactVector::from_ints(Q, v));
    return r;
}

// Every pair of disjoint nonempty sets spanning a complete bipartite graph.
std::size_t hom_count(const Graph& g) {
    std::size_t count = 0;
    const int n = g.size();
    for (std::uint32_t x = 1; x < (1u << n); ++x)
        for (std::uint32_t y = 1; y < (1u << n); ++y) {
            if (x & y) continue;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                for (int v = 0; v < n && ok; ++v)
                    if ((x >> u & 1u) && (y >> v & 1u) && !g.adjacent(u, v)) ok = false;
            count += ok;
        }
    return count;
}

// Plain backtracking over signed levels, one orbit at a time, comparing with
// every already-placed element (not only covers).
bool qn_map_exists(const HomPoset& hp, int n) {
    const auto& p = hp.poset;
    std::vector<int> val(p.size(), 0);
    const auto& order = p.topological_order();
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == order.size()) return true;
        int x = order[i];
        if (val[x]) return self(self, i + 1);
        for (int l = 1; l <= n + 1; ++l)
            for (int s : {1, -1}) {
                int v = s * l;
                bool ok = true;
                for (int y = 0; y < p.size() && ok; ++y) {
                    if (!val[y]) continue;
                    for (auto [a, av] : {std::pair{x, v}, std::pair{p.nu(x), -v}}) {
                        if (p.less(y, a) && !(val[y] == av || std::abs(val[y]) < std::abs(av))) ok = false;
                        if (p.less(a, y) && !(val[y] == av || std::abs(val[y]) > std::abs(av))) ok = false;
                    }
                }
                if (!ok) continue;
                val[x] = v, val[p.nu(x)] = -v;
                if (self(self, i + 1)) return true;
                val[x] = val[p.nu(x)] = 0;
            }
        return false;
    };
    return rec(rec, 0);
}

int brute_xind(const HomPoset& hp) {
    if (hp.poset.empty()) return -1;
    for (int n = 0;; ++n)
        if (qn_map_exists(hp, n)) return n;
}

// cd2 by trying every vertex subset in order of size.
int brute_cd2(const Hypergraph& h) {
    const int n = h.vertex_count();
    for (int d = 0; d <= n; ++d)
        for (std::uint32_t r = 0; r < (1u << n); ++r) {
            if (std::popcount(r) != d) continue;
            for (std::uint32_t c = 0; c < (1u << n); ++c) {
                if (c & r) continue;
                bool ok = true;
                for (const auto& e : h.edges()) {
                    bool inside = true, has1 = false, has2 = false;
                    for (int v : e) {
                        if (r >> v & 1u) inside = false;
                        (c >> v & 1u ? has1 : has2) = true;
                    }
                    if (inside && !(has1 && has2)) ok = false;
                }
                if (ok) return d;
            }
        }
    return n;
}

MatroidAssignment two_coloring_k2() { return coloring_assignment({1, 2}, 2); }

}  // namespace

TEST_CASE("Hom(K2,G) construction") {
    auto k2 = build_hom_poset(gen_complete(2));
    CHECK(k2.elements.size() == 2);
    CHECK(!k2.poset.comparable(0, 1));
    CHECK(k2.poset.nu(0) == 1);
    CHECK(build_hom_poset(gen_empty(2)).poset.empty());
    auto p = build_hom_poset(gen_kneser(5, 2).graph);
    CHECK(p.elements.size() == 110);
    CHECK(!p.poset.check_invariants());

    for (int n = 1; n <= 5; ++n)
        for (const auto& g : oracle::graphs_up_to_iso(n)) {
            auto hp = build_hom_poset(g);
            CHECK(hp.elements.size() == hom_count(g));
            CHECK(!hp.poset.check_invariants());
        }
    CHECK_THROWS_AS(build_hom_poset(gen_complete(6), 100), Error);
}

TEST_CASE("cross-index examples") {
    CHECK(xind(SignedPoset()) == -1);
    CHECK(xind(build_hom_poset(gen_complete(2)).poset) == 0);
    CHECK(xind(build_hom_poset(gen_cycle(5)).poset) == 1);
    CHECK(xind(build_hom_poset(gen_complete(4)).poset) == 2);
    auto hp = build_hom_poset(gen_cycle(5));
    std::vector<int> levels;
    REQUIRE(xind_feasible(hp.poset, 1, &levels));
    CHECK(is_qn_map(hp.poset, 1, levels));
    CHECK(!xind_feasible(hp.poset, 0));
}

TEST_CASE("cross-index against plain backtracking") {
    std::vector<Graph> gs;
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : oracle::graphs_up_to_iso(n)) gs.push_back(g);
    gs.push_back(gen_cycle(5));
    gs.push_back(oracle::from_mask(5, 0b0000011011));  // two triangles sharing a vertex
    for (const auto& g : gs) {
        auto hp = build_hom_poset(g);
        int x = xind(hp.poset);
        // K4 alone takes minutes here; its value comes from the core bound
        if (g.edge_count() < 6) CHECK(x == brute_xind(hp));
        CHECK(x <= std::max(hp.poset.height(), -1));
        auto b = xind_bounds(g, hp);
        CHECK(b.exact());
        CHECK(b.lower == x);
        if (!hp.poset.empty()) CHECK(is_qn_map(hp.poset, b.upper, b.levels));
    }
}

TEST_CASE("coloring maps into Q_{k-2}") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : oracle::graphs_up_to_iso(n)) {
            if (!g.edge_count()) continue;
            auto hp = build_hom_poset(g);
            auto chi = chromatic_number(g);
            CHECK(is_qn_map(hp.poset, chi.chi - 2, coloring_qn_map(hp, chi.witness.colors)));
        }
}

TEST_CASE("complete-graph cores") {
    CHECK(complete_core_lower_bound(1) == -1);
    CHECK(complete_core_lower_bound(2) == 0);
    CHECK(complete_core_lower_bound(3) == 1);
    CHECK(complete_core_lower_bound(4) == 2);
    CHECK(complete_core_lower_bound(5) == 3);
}

TEST_CASE("two-colorability defect") {
    Hypergraph singles({"1", "2", "3"}, {"a", "b", "c"}, {{0}, {1}, {2}});
    CHECK(cd2(singles).defect == 3);
    Hypergraph edge({"a", "b"}, {"e"}, {{0, 1}});
    CHECK(cd2(edge).defect == 0);
    auto r = cd2(gen_kneser(5, 2).hypergraph);
    CHECK(r.defect == 3);
    CHECK(r.removed.size() == 3);

    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 1}, {5, 2}, {6, 2}, {5, 1}, {6, 3}}) {
        auto kp = gen_kneser(n, k);
        CHECK(cd2(kp.hypergraph).defect == n - 2 * k + 2);
        CHECK(cd2(kp.hypergraph).defect == brute_cd2(kp.hypergraph));
    }
}

TEST_CASE("Dol'nikov and the hierarchy on small graphs") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : oracle::graphs_up_to_iso(n)) {
            if (!g.edge_count()) continue;
            auto h = kneser_representation(g);
            int d = cd2(h).defect;
            CHECK(chromatic_number(g).chi >= d);
            CHECK(xind(build_hom_poset(g).poset) + 2 >= d);
        }
}

TEST_CASE("phi maps") {
    auto k2 = gen_complete(2);
    auto hp = build_hom_poset(k2);
    auto phi = build_phi(k2, two_coloring_k2(), hp);
    CHECK(std::abs(phi.value[0]) == 2);
    CHECK(phi.value[0] == -phi.value[1]);

    auto c5 = gen_cycle(5);
    auto hc = build_hom_poset(c5);
    auto pc = build_phi(c5, linear_assignment(c5_vectors()), hc);
    CHECK(!check_fan_hypotheses(hc.poset, pc));
    for (std::size_t i = 0; i < hc.elements.size(); ++i) {
        CHECK(pc.value[i] == -pc.value[hc.poset.nu(static_cast<int>(i))]);
        int sz = std::popcount(hc.elements[i].x) + std::popcount(hc.elements[i].y);
        if (sz == 3) CHECK(std::abs(pc.value[i]) == 3);
    }
    auto serial = build_phi(c5, linear_assignment(c5_vectors()), hc, Exec::serial);
    CHECK(serial.value == pc.value);
}

TEST_CASE("alternating chains") {
    auto k2 = gen_complete(2);
    auto hp = build_hom_poset(k2);
    auto chain = longest_alternating_chain(hp.poset, build_phi(k2, two_coloring_k2(), hp));
    CHECK(chain.length() == 1);
    CHECK(chain.phi[0] == -2);

    CHECK(longest_alternating_chain(SignedPoset(), PhiMap{}).length() == 0);

    auto c5 = gen_cycle(5);
    auto hc = build_hom_poset(c5);
    auto pc = build_phi(c5, linear_assignment(c5_vectors()), hc);
    auto cc = longest_alternating_chain(hc.poset, pc);
    CHECK(cc.length() >= 2);
    CHECK(is_alternating_chain(hc.poset, pc, cc));
}

TEST_CASE("extraction pipeline") {
    auto k2 = extract_colorful_bipartite(gen_complete(2), two_coloring_k2());
    CHECK(k2.t_hat == 2);
    CHECK(k2.witness.x.size() == 1);
    CHECK(k2.witness.y.size() == 1);
    CHECK(k2.witness.x_cert != k2.witness.y_cert);

    auto c5 = gen_cycle(5);
    auto r = extract_colorful_bipartite(c5, linear_assignment(c5_vectors()));
    CHECK(r.t_hat >= 3);
    CHECK(r.witness.x.size() == static_cast<std::size_t>(r.t_hat / 2));
    CHECK(r.witness.y.size() == static_cast<std::size_t>((r.t_hat + 1) / 2));
    CHECK(verify_bipartite_witness(c5, linear_assignment(c5_vectors()), r.witness));

    auto p = gen_kneser(5, 2).graph;
    auto chi = chromatic_number(p);
    auto a = coloring_assignment(chi.witness.colors, chi.chi);
    auto pr = extract_colorful_bipartite(p, a);
    CHECK(pr.t_hat >= 3);
    CHECK(verify_bipartite_witness(p, a, pr.witness));
    auto serial = extract_colorful_bipartite(p, a, kDefaultPosetCap, Exec::serial);
    CHECK(serial.t_hat == pr.t_hat);
    CHECK(serial.chain.elements == pr.chain.elements);

    CHECK_THROWS_AS(extract_colorful_bipartite(gen_empty(2), coloring_assignment({1, 1}, 1)), Error);
}
