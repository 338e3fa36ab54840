#include <doctest.h>

#include <random>

#include "toporep/error.hpp"
#include "toporep/hardness.hpp"

using namespace toporep;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::internal_error;
}

Monotone3SatInstance two_clause() { return parse_monotone_3sat("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"); }

}  // namespace

TEST_CASE("monotone 3SAT parsing") {
    auto inst = two_clause();
    CHECK(inst.variables == 3);
    REQUIRE(inst.clauses.size() == 2);
    CHECK(inst.clauses[0].positive);
    CHECK(!inst.clauses[1].positive);
    CHECK(kind_of([] { parse_monotone_3sat("p cnf 3 1\n1 -2 3 0\n"); }) == ErrorKind::not_monotone);
    CHECK(kind_of([] { parse_monotone_3sat("p cnf 2 1\n1 2 0\n"); }) == ErrorKind::wrong_arity);
    CHECK(kind_of([] { parse_monotone_3sat("p cnf x\n"); }) == ErrorKind::parse_error);
}

TEST_CASE("brute-force SAT") {
    CHECK(brute_force_sat(parse_monotone_3sat("p cnf 3 1\n1 2 3 0\n")));
    auto unsat = parse_monotone_3sat("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
    CHECK(!brute_force_sat(unsat));
    CHECK(!brute_force_sat(unsat, Exec::parallel));
    Monotone3SatInstance empty{2, {}};
    CHECK(brute_force_sat(empty));

    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        auto inst = random_monotone_instance(rng, 8, 10);
        auto s = brute_force_sat(inst, Exec::serial), p = brute_force_sat(inst, Exec::parallel);
        CHECK(s == p);
        if (s) CHECK(satisfies(inst, *s));
    }
}

TEST_CASE("3SAT gadget") {
    auto g = reduce_3sat_to_colorful(two_clause());
    CHECK(g.graph.graph.size() == 6);
    CHECK(g.graph.graph.edge_count() == 6);
    CHECK(g.graph.color_count() == 2);
    CHECK(g.graph.is_proper());

    auto one = reduce_3sat_to_colorful(parse_monotone_3sat("p cnf 3 1\n1 2 3 0\n"));
    CHECK(one.graph.graph.size() == 3);
    CHECK(one.graph.graph.edge_count() == 0);
    CHECK(one.graph.color_count() == 1);

    auto none = reduce_3sat_to_colorful(Monotone3SatInstance{0, {}});
    CHECK(none.graph.graph.size() == 0);
}

TEST_CASE("colorful witnesses and lifting") {
    auto inst = two_clause();
    auto gadget = reduce_3sat_to_colorful(inst);
    ColorfulQuery q{ColorfulMode::all_colors, 0, gadget.side, true};
    auto w = colorful_complete_bipartite_exists(gadget.graph, q);
    REQUIRE(w);
    CHECK(!check_colorful_witness(gadget.graph, q, *w));

    SatAssignment a{false, true, true, false};
    auto lifted = assignment_to_witness(inst, a);
    const auto& g = gadget.graph.graph;
    std::vector<std::string> x, y;
    for (int v : lifted.x) x.push_back(g.id(v));
    for (int v : lifted.y) y.push_back(g.id(v));
    CHECK(x == std::vector<std::string>{"x1.1", "x1.2"});
    CHECK(y == std::vector<std::string>{"y2.3"});
    CHECK(!check_colorful_witness(gadget.graph, q, lifted));
    CHECK(satisfies(inst, witness_to_assignment(inst, lifted)));

    auto unsat = parse_monotone_3sat("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
    auto ug = reduce_3sat_to_colorful(unsat);
    CHECK(!colorful_complete_bipartite_exists(ug.graph, {ColorfulMode::all_colors, 0, ug.side, true}));
    BipartiteWitness forged{{0}, {1}, {1}, {2}};
    CHECK_THROWS_AS(witness_to_assignment(unsat, forged), Error);

    Graph k22({"a", "b", "c", "d"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    ColoredGraph cg{k22, {1, 2, 3, 4}};
    CHECK(colorful_complete_bipartite_exists(cg, {ColorfulMode::balanced, 2, {}, false}));

    ColoredGraph bad{gen_complete(2), {1, 1}};
    CHECK(kind_of([&] { colorful_complete_bipartite_exists(bad, {}); }) == ErrorKind::invalid_input);
}

TEST_CASE("balanced family") {
    ColoredGraph k2{gen_complete(2), {1, 2}};
    auto fam = reduce_balanced(k2);
    REQUIRE(fam.size() == 2);
    CHECK(fam[0].s == 0);
    CHECK(fam[1].t == 3);

    ColoredGraph single{gen_empty(1), {1}};
    auto one = reduce_balanced(single);
    REQUIRE(one.size() == 1);
    bool all = colorful_complete_bipartite_exists(single, {ColorfulMode::all_colors, 0, {}, true}).has_value();
    bool bal = colorful_complete_bipartite_exists(one[0].graph, {ColorfulMode::balanced, 1, {}, true}).has_value();
    CHECK(all == bal);
}

TEST_CASE("reduction fuzzing") {
    auto r = fuzz_reduction(1, 200, 6, 6);
    CHECK(r.instances == 200);
    CHECK(r.disagreements == 0);
    CHECK(r.satisfiable > 0);
    CHECK(r.satisfiable < 200);
    auto b = fuzz_balanced(2, 50, 10, 4);
    CHECK(b.instances == 50);
    CHECK(b.disagreements == 0);
    CHECK(b.satisfiable > 0);
}

TEST_CASE("random colored graphs are proper") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        auto g = random_colored_graph(rng, 10, 4);
        CHECK(g.is_proper());
        CHECK(g.color_count() <= 4);
        for (const auto& m : reduce_balanced(g)) CHECK(m.graph.is_proper());
    }
}
