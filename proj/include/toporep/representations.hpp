#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toporep/algebra.hpp"
#include "toporep/error.hpp"
#include "toporep/graph.hpp"
#include "toporep/matroid.hpp"
#include "toporep/solvers.hpp"
#include "toporep/topo.hpp"

namespace toporep {

/// One vector of F^dim per vertex index.
struct VectorAssignment {
    FieldSpec field = FieldSpec::rationals();
    int dim = 0;
    std::vector<ExactVector> vectors;
};

struct Violation {
    std::string kind;
    std::vector<int> vertices;
};

struct CheckResult {
    bool ok = true;
    std::vector<Violation> violations;
};

CheckResult verify_orthogonal_rep(const Graph& g, const VectorAssignment& r);

/// Linear matroid on the assigned vectors; vertex v gets element v.
MatroidAssignment linear_assignment(const VectorAssignment& r);

/// A proper coloring read as an assignment into U_r^r (color c -> element c-1).
MatroidAssignment coloring_assignment(const std::vector<int>& colors, int r);

CheckResult verify_independent_rep(const Graph& g, const MatroidAssignment& a);
CheckResult verify_independent_rep(const Graph& g, const VectorAssignment& r);

/// Nonzero diagonal, and zero at every distinct nonadjacent pair of `target`.
bool represents(const ExactMatrix& a, const Graph& target);

struct DimensionResult {
    int dim = 0;
    VectorAssignment witness;
};

/// Least t <= t_max admitting a t-dimensional orthogonal representation over
/// a prime field (backtracking over projective representatives).
std::optional<DimensionResult> orthogonality_dimension(const Graph& g, FieldSpec f, int t_max,
                                                       const SearchBudget& budget = {});

/// Least s <= s_max admitting an independent representation over F^s.
/// New vectors are taken either inside the span already used or as the next
/// standard basis vector, which is complete up to GL(s).
std::optional<DimensionResult> min_indrep_dimension(const Graph& g, FieldSpec f, int s_max,
                                                    const SearchBudget& budget = {});

struct MinrankResult {
    int rank = 0;
    ExactMatrix witness;  // diagonal normalized to 1
};

struct MinrankOptions {
    std::uint64_t node_limit = 2'000'000'000ull;
};

/// Exact minrank of `target` over a prime field: for r = 1, 2, ... the
/// normalized matrices are enumerated row by row, and once r independent rows
/// are fixed every later row is drawn from their span.
MinrankResult minrank_bruteforce(const Graph& target, FieldSpec f, MinrankOptions opts = {},
                                 const SearchBudget& budget = {});

/// Plain enumeration of all q^{free entries} normalized matrices; the serial
/// and OpenMP variants must agree. Throws instance_too_large above `limit`
/// matrices.
MinrankResult minrank_enumerate(const Graph& target, FieldSpec f, Exec exec,
                                std::uint64_t limit = std::uint64_t{1} << 26);

/// Rows of r = rank(A) independent columns of A, where A represents the
/// complement of g; the result is an independent representation of g.
VectorAssignment matrix_to_indrep(const Graph& g, const ExactMatrix& a);

/// Matrix with columns B y_v representing the complement of g, rank <= dim.
ExactMatrix indrep_to_matrix(const Graph& g, const VectorAssignment& r);

struct StarCheck {
    bool holds = true;
    bool independent_rep = true;
    int rank_m = 0;
    std::optional<HomElement> violation;
    int violation_sum = 0;  // rk S(X) + rk S(Y) at the violation
};

StarCheck check_star_condition(const Graph& g, const MatroidAssignment& a, bool balanced_only,
                               std::size_t cap = kDefaultPosetCap);

struct LocalChromaticResult {
    int psi = 0;
    Coloring witness;
};

/// Least r such that a proper coloring with at most m_max colors sees at most
/// r-1 colors in every open neighborhood.
LocalChromaticResult local_chromatic(const Graph& g, int m_max, const SearchBudget& budget = {});

/// Colors in the closed neighborhood, maximized over vertices.
int local_color_count(const Graph& g, const std::vector<int>& colors);

/// K_{a,b} subgraph whose a+b assigned vectors are pairwise orthogonal.
std::optional<BipartiteWitness> probe_pairwise_orthogonal_bipartite(const Graph& g,
                                                                    const VectorAssignment& r, int a,
                                                                    int b);

}  // namespace toporep
