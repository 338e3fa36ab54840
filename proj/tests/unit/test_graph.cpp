#include <doctest.h>

#include <set>

#include "../support.hpp"
#include "toporep/error.hpp"
#include "toporep/graph.hpp"

using namespace toporep;

namespace {

bool same_labeled(const Graph& a, const Graph& b) {
    if (a.ids() != b.ids()) return false;
    for (int u = 0; u < a.size(); ++u)
        for (int v = 0; v < a.size(); ++v)
            if (u != v && a.adjacent(u, v) != b.adjacent(u, v)) return false;
    return true;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::internal_error;
}

}  // namespace

TEST_CASE("cycles") {
    CHECK(gen_cycle(3).edge_count() == 3);
    auto c5 = gen_cycle(5);
    CHECK(c5.size() == 5);
    CHECK(c5.edge_count() == 5);
    for (int i = 0; i < 5; ++i) CHECK(c5.adjacent(i, (i + 1) % 5));
    CHECK(kind_of([] { gen_cycle(2); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("kneser graphs") {
    auto p = gen_kneser(5, 2);
    CHECK(p.graph.size() == 10);
    CHECK(p.graph.edge_count() == 15);  // 10 * 3 / 2
    CHECK(p.hypergraph.vertex_count() == 5);
    CHECK(p.hypergraph.edge_count() == 10);
    CHECK(p.graph.index_of("1-2") >= 0);

    auto k2 = gen_kneser(2, 1).graph;
    CHECK(k2.size() == 2);
    CHECK(k2.edge_count() == 1);

    auto m = gen_kneser(4, 2).graph;
    CHECK(m.size() == 6);
    CHECK(m.edge_count() == 3);
    for (int v = 0; v < 6; ++v) CHECK(m.degree(v) == 1);

    CHECK(kind_of([] { gen_kneser(3, 2); }) == ErrorKind::invalid_parameter);
    CHECK(gen_kneser(3, 2, true).graph.edge_count() == 0);
}

TEST_CASE("kneser graph of a hypergraph") {
    Hypergraph single({"1", "2", "3"}, {"a", "b", "c"}, {{0}, {1}, {2}});
    auto k3 = kneser_graph_of(single);
    CHECK(k3.edge_count() == 3);

    auto p = gen_kneser(5, 2);
    CHECK(same_labeled(kneser_graph_of(p.hypergraph), p.graph));

    Hypergraph h({"1", "2"}, {"a", "b"}, {{0, 1}, {0}});
    CHECK(kneser_graph_of(h).edge_count() == 0);

    Hypergraph empty({"1"}, {}, {});
    CHECK(kind_of([&] { kneser_graph_of(empty); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("kneser representation round trip") {
    auto k2 = gen_complete(2);
    auto h = kneser_representation(k2);
    std::set<int> a(h.edge(0).begin(), h.edge(0).end());
    for (int x : h.edge(1)) CHECK(!a.count(x));

    auto e2 = gen_empty(2);
    CHECK(kneser_graph_of(kneser_representation(e2)).edge_count() == 0);

    CHECK(same_labeled(kneser_graph_of(kneser_representation(gen_cycle(5))), gen_cycle(5)));

    int checked = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : oracle::graphs_up_to_iso(n)) {
            CHECK(same_labeled(kneser_graph_of(kneser_representation(g)), g));
            ++checked;
        }
    CHECK(checked == 1 + 2 + 4 + 11 + 34 + 156);
}

TEST_CASE("H_t") {
    auto h1 = gen_H(1);
    CHECK(h1.size() == 1);
    CHECK(h1.ids()[0] == "1");
    CHECK(h1.edge_count() == 0);

    auto h3 = gen_H(3);
    CHECK(h3.size() == 4);
    int a = h3.index_of("100"), b = h3.index_of("010"), c = h3.index_of("001"), d = h3.index_of("111");
    CHECK(h3.adjacent(a, b));
    CHECK(h3.adjacent(b, c));
    CHECK(h3.adjacent(a, c));
    CHECK(h3.degree(d) == 0);

    for (int t = 1; t <= 7; ++t) {
        auto h = gen_H(t);
        CHECK(h.size() == 1 << (t - 1));
        // independent recount of degrees from the bitstrings
        for (int u = 0; u < h.size(); ++u) {
            int deg = 0;
            for (int v = 0; v < h.size(); ++v) {
                if (u == v) continue;
                int dot = 0;
                for (int i = 0; i < t; ++i) dot += (h.id(u)[i] == '1') && (h.id(v)[i] == '1');
                deg += dot % 2 == 0;
            }
            CHECK(h.degree(u) == deg);
        }
        // basis vectors form a clique
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) {
                std::string ei(t, '0'), ej(t, '0');
                ei[i] = ej[j] = '1';
                CHECK(h.adjacent(h.index_of(ei), h.index_of(ej)));
            }
    }
    auto h6 = gen_H(6);
    for (int v = 1; v < h6.size(); ++v) CHECK(h6.degree(v) == h6.degree(0));

    CHECK(kind_of([] { gen_H(0); }) == ErrorKind::invalid_parameter);
    CHECK(kind_of([] { gen_H(21); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("complement") {
    CHECK(complement(gen_complete(3)).edge_count() == 0);
    auto c5c = complement(gen_cycle(5));
    CHECK(c5c.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5c.degree(v) == 2);
    CHECK(complement(gen_empty(1)).size() == 1);
    for (const auto& g : oracle::graphs_up_to_iso(5)) CHECK(same_labeled(complement(complement(g)), g));
}

TEST_CASE("dummy augmentation") {
    ColoredGraph k2{gen_complete(2), {1, 2}};
    auto same = augment_dummies(k2, 0);
    CHECK(same.graph.size() == 2);
    CHECK(same.colors == k2.colors);

    auto tri = augment_dummies(k2, 1);
    CHECK(tri.graph.size() == 3);
    CHECK(tri.graph.edge_count() == 3);
    CHECK(tri.color_count() == 3);
    CHECK(tri.is_proper());

    ColoredGraph e2{gen_empty(2), {1, 2}};
    auto k22 = augment_dummies(e2, 2);
    CHECK(k22.graph.size() == 4);
    CHECK(k22.graph.edge_count() == 4);
    CHECK(!k22.graph.adjacent(2, 3));
    CHECK(!k22.graph.adjacent(0, 1));
    CHECK(k22.color_count() == 4);
    CHECK(k22.colors[0] == 1);
    CHECK(k22.colors[1] == 2);
}

TEST_CASE("edge list parsing") {
    auto g = parse_edge_list("# a path\na b\nb c\n");
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(kind_of([] { parse_edge_list("a a\n"); }) == ErrorKind::invalid_input);
}

TEST_CASE("graph invariants are enforced") {
    CHECK(kind_of([] { Graph({"a", "a"}, {}); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { Graph({"a", "b"}, {{0, 1}, {1, 0}}); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { Graph({"a"}, {{0, 0}}); }) == ErrorKind::invalid_input);
}
