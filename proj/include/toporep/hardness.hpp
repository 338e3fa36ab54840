#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "toporep/error.hpp"
#include "toporep/graph.hpp"
#include "toporep/solvers.hpp"
#include "toporep/topo.hpp"

namespace toporep {

struct MonotoneClause {
    bool positive = true;
    std::array<int, 3> vars{};  // 1-based, repeats allowed
};

struct Monotone3SatInstance {
    int variables = 0;
    std::vector<MonotoneClause> clauses;

    CnfFormula to_cnf() const;
};

/// assignment[j] is the value of z_j; index 0 is unused.
using SatAssignment = std::vector<bool>;

/// Throws wrong_arity for clauses without exactly three literals,
/// not_monotone for mixed polarity, parse_error for malformed DIMACS.
Monotone3SatInstance parse_monotone_3sat(const std::string& dimacs);
Monotone3SatInstance monotone_from_cnf(const CnfFormula& f);

bool satisfies(const Monotone3SatInstance& inst, const SatAssignment& a);

inline constexpr int kMaxBruteForceVariables = 24;

/// Lowest satisfying assignment in the order sum_j z_j 2^(j-1), by full
/// enumeration; the OpenMP variant returns the same assignment.
std::optional<SatAssignment> brute_force_sat(const Monotone3SatInstance& inst, Exec exec = Exec::serial);

/// The bipartite gadget: X holds (i,j) for every variable z_j of a positive
/// clause C_i, Y the same for negative clauses, (i,j)~(i',j') iff j != j',
/// and (i,j) has color i. X vertices come first; ids are "x<i>.<j>" / "y<i>.<j>".
struct SatGadget {
    ColoredGraph graph;
    std::vector<int> side;  // 0 for X, 1 for Y
    std::vector<std::pair<int, int>> pair;  // (i, j) per vertex, 1-based
};

SatGadget reduce_3sat_to_colorful(const Monotone3SatInstance& inst);

enum class ColorfulMode { all_colors, balanced };

struct ColorfulQuery {
    ColorfulMode mode = ColorfulMode::all_colors;
    int t = 0;  // balanced: floor(t/2) colors on one side, ceil(t/2) on the other
    /// Optional per-vertex side restriction (0: only on the x side, 1: only
    /// on the y side). Empty means unrestricted.
    std::vector<int> sides;
    /// Whether one side of the complete bipartite subgraph may be empty.
    bool allow_empty_side = false;
};

/// Exact search; the witness uses one vertex per color it covers and carries
/// the colors of each side as certificates. Throws invalid_input when the
/// coloring is not proper.
std::optional<BipartiteWitness> colorful_complete_bipartite_exists(const ColoredGraph& g, const ColorfulQuery& q,
                                                                    const SearchBudget& budget = {});

/// Independent checker for colorful witnesses; returns the first problem found.
std::optional<std::string> check_colorful_witness(const ColoredGraph& g, const ColorfulQuery& q,
                                                  const BipartiteWitness& w);

/// All-colors witness of the gadget (sides as in the gadget) -> assignment;
/// z_j is true iff some (i,j) lies in the x side, others default to false.
SatAssignment witness_to_assignment(const Monotone3SatInstance& inst, const BipartiteWitness& w);
BipartiteWitness assignment_to_witness(const Monotone3SatInstance& inst, const SatAssignment& a);

struct BalancedMember {
    int s = 0;
    int t = 0;  // s + r
    ColoredGraph graph;
};

/// G_s = G plus s pairwise nonadjacent dummies joined to every vertex, each
/// with a fresh color, for s = 0..r-1.
std::vector<BalancedMember> reduce_balanced(const ColoredGraph& g);

Monotone3SatInstance random_monotone_instance(std::mt19937_64& rng, int max_vars, int max_clauses);
ColoredGraph random_colored_graph(std::mt19937_64& rng, int max_vertices, int max_colors, double edge_prob = 0.5);

struct FuzzReport {
    int instances = 0;
    int satisfiable = 0;
    int disagreements = 0;
    std::vector<std::string> failures;  // short descriptions
};

/// Random monotone instances: satisfiability vs. an all-colors witness of the
/// gadget (with the gadget's sides), plus both lifting directions.
FuzzReport fuzz_reduction(std::uint64_t seed, int count, int max_vars, int max_clauses);

/// Random properly colored graphs: an all-colors witness with both sides
/// nonempty exists iff some G_s with s <= r-2 has a balanced(s+r) witness.
FuzzReport fuzz_balanced(std::uint64_t seed, int count, int max_vertices, int max_colors);

}  // namespace toporep
