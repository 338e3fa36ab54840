#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toporep/error.hpp"
#include "toporep/graph.hpp"

namespace toporep {

struct CliqueResult {
    int size = 0;
    std::vector<int> vertices;  // sorted vertex indices
};

/// Proper coloring: colors[v] in 1..palette for every vertex index v.
struct Coloring {
    std::vector<int> colors;
    int palette = 0;
};

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
};

/// DIMACS-style CNF; literals are nonzero with |lit| <= variables.
struct CnfFormula {
    int variables = 0;
    std::vector<std::vector<int>> clauses;

    std::string to_dimacs() const;
    static CnfFormula parse_dimacs(const std::string& text);
    bool satisfied_by(const std::vector<bool>& assignment) const;  // assignment[0] unused
};

CliqueResult max_clique(const Graph& g, const SearchBudget& budget = {});

/// Exact k-colorability: a maximum clique is preseeded with distinct colors,
/// then DSATUR branching with a clique-cover capacity bound.
std::optional<Coloring> k_colorable(const Graph& g, int k, const SearchBudget& budget = {});

ChromaticResult chromatic_number(const Graph& g, const SearchBudget& budget = {});

/// Edge-preserving map V(g) -> V(h) (image indices), if one exists.
std::optional<std::vector<int>> homomorphism_exists(const Graph& g, const Graph& h,
                                                    const SearchBudget& budget = {});

/// 2-coloring (values 1/2 per hypergraph vertex) with no monochromatic edge.
std::optional<std::vector<int>> hypergraph_2colorable(const Hypergraph& h,
                                                      const SearchBudget& budget = {});

/// Maximum matching between `left` and the remaining vertices of `b`
/// (augmenting paths). Edges are returned as (left vertex, right vertex).
std::vector<Edge> max_bipartite_matching(const Graph& b, const std::vector<int>& left);

/// Augmenting-path matching from `left` without the bipartition check; only
/// edges leaving `left` are used.
std::vector<Edge> matching_from_side(const Graph& b, const std::vector<int>& left);

CnfFormula export_kcoloring_cnf(const Graph& g, int k);

// Independent witness checkers.
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);
bool is_clique(const Graph& g, const std::vector<int>& vertices);
bool is_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& map);

}  // namespace toporep
