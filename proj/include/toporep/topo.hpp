#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "toporep/error.hpp"
#include "toporep/graph.hpp"
#include "toporep/matroid.hpp"

namespace toporep {

inline constexpr std::size_t kDefaultPosetCap = 200000;

/// Finite free Z_2-poset given by its cover relation and a fixed-point-free
/// involution. Elements are 0..size()-1.
class SignedPoset {
public:
    SignedPoset() = default;
    /// `lower_covers[q]` lists the elements covered by q.
    SignedPoset(std::vector<std::vector<int>> lower_covers, std::vector<int> involution);

    int size() const { return static_cast<int>(nu_.size()); }
    bool empty() const { return nu_.empty(); }
    int nu(int p) const { return nu_[p]; }
    const std::vector<int>& lower_covers(int q) const { return lower_[q]; }
    const std::vector<int>& upper_covers(int p) const { return upper_[p]; }
    /// Linear extension: every element appears after all its lower covers.
    const std::vector<int>& topological_order() const { return order_; }

    /// Strict order p < q (reachability along covers).
    bool less(int p, int q) const;
    bool comparable(int p, int q) const { return p == q || less(p, q) || less(q, p); }
    /// Longest chain length minus one; -1 for the empty poset.
    int height() const;

    /// Checks nu∘nu = id, no fixed points, nu order preserving on covers,
    /// p and nu(p) incomparable; returns a description of the first failure.
    std::optional<std::string> check_invariants() const;

private:
    std::vector<std::vector<int>> lower_, upper_;
    std::vector<int> nu_;
    std::vector<int> order_;
};

/// Member (X,Y) of Hom(K_2,G): nonempty disjoint vertex sets, X fully joined to Y.
struct HomElement {
    VertexMask x = 0;
    VertexMask y = 0;
    bool operator==(const HomElement&) const = default;
};

struct HomElementHash {
    std::size_t operator()(const HomElement& e) const {
        return std::hash<std::uint64_t>{}(e.x * 0x9E3779B97F4A7C15ull ^ (e.y + 0x632BE59BD9B4E019ull));
    }
};

struct HomPoset {
    SignedPoset poset;
    std::vector<HomElement> elements;  // by grade |X|+|Y|, then (X,Y) masks

    int index_of(const HomElement& e) const;  // -1 when absent

    std::unordered_map<HomElement, int, HomElementHash> index;
};

/// Hom(K_2,G) ordered by componentwise inclusion with nu(X,Y) = (Y,X).
/// Throws poset_too_large when more than `cap` elements would be produced.
HomPoset build_hom_poset(const Graph& g, std::size_t cap = kDefaultPosetCap);

/// Cross-index: least n with an order-preserving Z_2-map P -> Q_n
/// (non-strict: p < q may share a signed level). -1 on the empty poset.
int xind(const SignedPoset& p, const SearchBudget& budget = {});

/// Decides whether an order-preserving Z_2-map into Q_n exists; on success
/// fills `levels` with the signed level of each element.
bool xind_feasible(const SignedPoset& p, int n, std::vector<int>* levels = nullptr,
                   const SearchBudget& budget = {});

/// True iff `levels` is an order-preserving Z_2-map into Q_n.
bool is_qn_map(const SignedPoset& p, int n, const std::vector<int>& levels);

/// Q_{k-2} map read off a proper k-coloring: (X,Y) goes to level
/// |c(X) u c(Y)| - 1, positive when the largest color sits in X.
std::vector<int> coloring_qn_map(const HomPoset& hp, const std::vector<int>& colors);

/// Best lower bound on Xind(Hom(K_2,K_m)) proven within `seconds`: the SAT
/// instance is split by the orientation of the minimal elements, one call per
/// tournament class under S_m and the global sign flip. Cached per m; m <= 7.
int complete_core_lower_bound(int m, double seconds = 10.0);

struct XindOptions {
    double core_seconds = 10.0;
};

/// Cross-index of Hom(K_2,g) bracketed between a clique-core lower bound and
/// the coloring map, then narrowed by SAT. Bounds stay apart only when the
/// budget runs out.
struct XindBounds {
    int lower = -1;
    int upper = -1;
    std::vector<int> levels;  // Q_upper map witnessing the upper bound
    bool exact() const { return lower == upper; }
};

XindBounds xind_bounds(const Graph& g, const HomPoset& hp, const SearchBudget& budget = {},
                       const XindOptions& opts = {});

struct Cd2Result {
    int defect = 0;
    std::vector<int> removed;   // hypergraph vertex indices
    std::vector<int> coloring;  // 1/2 on survivors, 0 on removed vertices
};

/// 2-colorability defect: fewest vertices to delete so that the edges
/// surviving entirely outside the deleted set admit a 2-coloring.
Cd2Result cd2(const Hypergraph& h, const SearchBudget& budget = {});

enum class Exec { serial, parallel };

/// Signed map phi on Hom(K_2,G) built from an independent representation.
struct PhiMap {
    std::vector<int> value;  // per poset element, nonzero
};

/// Comparison key of the span S(U): its rank and the (sorted) vertices whose
/// assigned element lies in S(U).
struct SpanKey {
    int rank = 0;
    std::vector<int> trace;
    auto operator<=>(const SpanKey&) const = default;
};

SpanKey span_key(const MatroidAssignment& a, VertexMask u, VertexMask assigned_vertices);

/// phi(X,Y) = +(rk S(X) + rk S(Y)) if key(S(X)) < key(S(Y)), negative otherwise.
/// Throws internal_error if two sides share a key or a fan-lemma hypothesis fails.
PhiMap build_phi(const Graph& g, const MatroidAssignment& a, const HomPoset& hp,
                 Exec exec = Exec::parallel);

/// Returns a description of the first violated hypothesis, if any:
/// antipodality, monotone magnitude, and "opposite values only on incomparable pairs".
std::optional<std::string> check_fan_hypotheses(const SignedPoset& p, const PhiMap& phi);

/// Chain p_1 < ... < p_r with 0 < -phi(p_1) < +phi(p_2) < -phi(p_3) < ...
struct Chain {
    std::vector<int> elements;
    std::vector<int> phi;
    int length() const { return static_cast<int>(elements.size()); }
};

/// Maximum-length alternating chain, by dynamic programming over covers.
Chain longest_alternating_chain(const SignedPoset& p, const PhiMap& phi);

bool is_alternating_chain(const SignedPoset& p, const PhiMap& phi, const Chain& c);

struct BipartiteWitness {
    std::vector<int> x, y;            // vertex indices
    std::vector<int> x_cert, y_cert;  // assigned elements or colors per side
};

struct ExtractionResult {
    int t_hat = 0;
    Chain chain;
    HomElement top;
    BipartiteWitness witness;
    int rank_lower_bound = 0;  // ceil(t_hat/2) + 1
    std::size_t poset_size = 0;
};

/// Hom poset -> phi -> longest alternating chain; the top chain element is
/// oriented so its larger-rank side is Y and independent sides of sizes
/// floor(t/2), ceil(t/2) are extracted greedily.
ExtractionResult extract_colorful_bipartite(const Graph& g, const MatroidAssignment& a,
                                            std::size_t cap = kDefaultPosetCap,
                                            Exec exec = Exec::parallel);

/// Complete bipartite check plus independence of the assigned elements per side.
bool verify_bipartite_witness(const Graph& g, const MatroidAssignment& a, const BipartiteWitness& w);

}  // namespace toporep
