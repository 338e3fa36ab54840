#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace toporep {

using Edge = std::pair<int, int>;
using VertexMask = std::uint64_t;

/// Simple undirected graph with opaque string vertex ids. Vertices are also
/// addressed by their position in `ids()`, which is the canonical order used
/// by every solver for tie-breaking.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> ids, const std::vector<Edge>& edges);

    static Graph from_id_edges(std::vector<std::string> ids,
                               const std::vector<std::pair<std::string, std::string>>& edges);

    int size() const { return static_cast<int>(ids_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(int v) const { return ids_[v]; }
    int index_of(const std::string& id) const;  // -1 when absent

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    std::vector<Edge> edges() const;  // u < v, lexicographic

    // Bitmask views; only valid when size() <= 64.
    bool fits_mask() const { return size() <= 64; }
    VertexMask neighbor_mask(int v) const;
    VertexMask all_mask() const;

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::string> ids_;
    std::vector<std::vector<int>> adj_;
    std::unordered_map<std::string, int> index_;
    std::size_t edge_count_ = 0;
};

/// Hypergraph with named edges; edges are kept as sorted vertex index lists.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::vector<std::string> vertex_ids, std::vector<std::string> edge_ids,
               std::vector<std::vector<int>> edges, bool allow_multi = false);

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<std::string>& edge_ids() const { return edge_ids_; }
    const std::vector<int>& edge(int e) const { return edges_[e]; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    bool is_multi() const { return multi_; }

private:
    std::vector<std::string> vertex_ids_;
    std::vector<std::string> edge_ids_;
    std::vector<std::vector<int>> edges_;
    bool multi_ = false;
};

struct ColoredGraph {
    Graph graph;
    std::vector<int> colors;  // per vertex index, positive

    int color_count() const;  // number of distinct colors used
    bool is_proper() const;
};

Graph gen_cycle(int n);
Graph gen_complete(int n);
Graph gen_empty(int n);

struct KneserPair {
    Graph graph;
    Hypergraph hypergraph;
};

/// KG(n,k) with its canonical representation ([n], k-subsets). Vertex and
/// edge ids are the subsets written as "1-2-5".
KneserPair gen_kneser(int n, int k, bool allow_degenerate = false);

Graph kneser_graph_of(const Hypergraph& h);

/// Hypergraph H with KG(H) equal to `g` under the identity on ids. Built from
/// the maximal independent sets of `g` plus one private token per vertex.
Hypergraph kneser_representation(const Graph& g);

/// H_t: odd-weight vectors of Z_2^t (ids are bitstrings), adjacent when
/// orthogonal over Z_2.
Graph gen_H(int t);

Graph complement(const Graph& g);

/// G_s: `s` pairwise nonadjacent dummy vertices joined to every original
/// vertex, each with a fresh color.
ColoredGraph augment_dummies(const ColoredGraph& g, int s);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Maximal independent sets in lexicographic order of their sorted members.
std::vector<std::vector<int>> maximal_independent_sets(const Graph& g);

/// Parses "u v" per line (ids are whitespace-separated tokens, '#' comments).
Graph parse_edge_list(const std::string& text);

}  // namespace toporep
