#include "toporep/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "toporep/error.hpp"

namespace toporep {

Graph::Graph(std::vector<std::string> ids, const std::vector<Edge>& edges)
    : ids_(std::move(ids)), adj_(ids_.size()) {
    const int n = size();
    for (int v = 0; v < n; ++v) {
        if (!index_.emplace(ids_[v], v).second)
            fail(ErrorKind::invalid_input, "duplicate vertex id '" + ids_[v] + "'");
    }
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorKind::invalid_input, "edge endpoint out of range");
        if (u == v) fail(ErrorKind::invalid_input, "loop at vertex '" + ids_[u] + "'");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            fail(ErrorKind::invalid_input, "parallel edge");
    }
    edge_count_ = edges.size();
}

Graph Graph::from_id_edges(std::vector<std::string> ids,
                           const std::vector<std::pair<std::string, std::string>>& edges) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) index.emplace(ids[i], i);
    std::vector<Edge> e;
    e.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            fail(ErrorKind::invalid_input, "edge references unknown vertex '" +
                                               (ia == index.end() ? a : b) + "'");
        e.emplace_back(ia->second, ib->second);
    }
    return Graph(std::move(ids), e);
}

int Graph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u].size() < adj_[v].size() ? adj_[u] : adj_[v];
    return std::binary_search(a.begin(), a.end(), &a == &adj_[u] ? v : u);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < size(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexMask Graph::neighbor_mask(int v) const {
    VertexMask m = 0;
    for (int u : adj_[v]) m |= VertexMask{1} << u;
    return m;
}

VertexMask Graph::all_mask() const {
    return size() == 64 ? ~VertexMask{0} : (VertexMask{1} << size()) - 1;
}

Hypergraph::Hypergraph(std::vector<std::string> vertex_ids, std::vector<std::string> edge_ids,
                       std::vector<std::vector<int>> edges, bool allow_multi)
    : vertex_ids_(std::move(vertex_ids)), edge_ids_(std::move(edge_ids)), edges_(std::move(edges)) {
    if (edge_ids_.size() != edges_.size())
        fail(ErrorKind::invalid_input, "hypergraph edge id count mismatch");
    std::set<std::string> seen_v(vertex_ids_.begin(), vertex_ids_.end());
    if (seen_v.size() != vertex_ids_.size())
        fail(ErrorKind::invalid_input, "duplicate hypergraph vertex id");
    std::set<std::string> seen_e(edge_ids_.begin(), edge_ids_.end());
    if (seen_e.size() != edge_ids_.size()) fail(ErrorKind::invalid_input, "duplicate edge id");
    std::set<std::vector<int>> distinct;
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.empty()) fail(ErrorKind::invalid_input, "empty hyperedge");
        if (e.front() < 0 || e.back() >= vertex_count())
            fail(ErrorKind::invalid_input, "hyperedge vertex out of range");
        if (!distinct.insert(e).second) multi_ = true;
    }
    if (multi_ && !allow_multi)
        fail(ErrorKind::invalid_input, "repeated hyperedge vertex sets (multi-hypergraph)");
}

int ColoredGraph::color_count() const {
    return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
}

bool ColoredGraph::is_proper() const {
    if (static_cast<int>(colors.size()) != graph.size()) return false;
    for (int c : colors)
        if (c <= 0) return false;
    for (auto [u, v] : graph.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

Graph gen_cycle(int n) {
    if (n < 3) fail(ErrorKind::invalid_parameter, "cycle needs n >= 3");
    std::vector<std::string> ids;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        ids.push_back(std::to_string(i));
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(std::move(ids), edges);
}

Graph gen_complete(int n) {
    if (n < 0) fail(ErrorKind::invalid_parameter, "negative vertex count");
    std::vector<std::string> ids;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        ids.push_back(std::to_string(i));
        for (int j = 0; j < i; ++j) edges.emplace_back(j, i);
    }
    return Graph(std::move(ids), edges);
}

Graph gen_empty(int n) {
    if (n < 0) fail(ErrorKind::invalid_parameter, "negative vertex count");
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    return Graph(std::move(ids), {});
}

namespace {

std::string subset_id(const std::vector<int>& members) {
    std::string s;
    for (int m : members) {
        if (!s.empty()) s += '-';
        s += std::to_string(m);
    }
    return s;
}

}  // namespace

KneserPair gen_kneser(int n, int k, bool allow_degenerate) {
    if (k < 1 || n < 1 || k > n) fail(ErrorKind::invalid_parameter, "Kneser needs 1 <= k <= n");
    if (n < 2 * k && !allow_degenerate)
        fail(ErrorKind::invalid_parameter, "Kneser KG(n,k) with n < 2k is edgeless");
    if (n > 30) fail(ErrorKind::invalid_parameter, "Kneser ground set too large");

    std::vector<std::uint32_t> subsets;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == k) subsets.push_back(m);
    // lexicographic on sorted members
    auto members = [n](std::uint32_t m) {
        std::vector<int> out;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1u) out.push_back(i + 1);
        return out;
    };
    std::sort(subsets.begin(), subsets.end(),
              [&](std::uint32_t a, std::uint32_t b) { return members(a) < members(b); });

    std::vector<std::string> ids;
    std::vector<std::vector<int>> hedges;
    for (auto m : subsets) {
        auto mem = members(m);
        ids.push_back(subset_id(mem));
        std::vector<int> e;
        for (int x : mem) e.push_back(x - 1);
        hedges.push_back(std::move(e));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if ((subsets[i] & subsets[j]) == 0) edges.emplace_back(int(i), int(j));

    std::vector<std::string> ground;
    for (int i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
    Graph g(ids, edges);
    Hypergraph h(std::move(ground), std::move(ids), std::move(hedges));
    return {std::move(g), std::move(h)};
}

Graph kneser_graph_of(const Hypergraph& h) {
    if (h.edge_count() == 0) fail(ErrorKind::invalid_parameter, "hypergraph has no edges");
    std::vector<Edge> edges;
    for (int a = 0; a < h.edge_count(); ++a) {
        for (int b = a + 1; b < h.edge_count(); ++b) {
            const auto& ea = h.edge(a);
            const auto& eb = h.edge(b);
            std::vector<int> common;
            std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                  std::back_inserter(common));
            if (common.empty()) edges.emplace_back(a, b);
        }
    }
    return Graph(h.edge_ids(), edges);
}

std::vector<std::vector<int>> maximal_independent_sets(const Graph& g) {
    // Bron-Kerbosch with pivoting on the complement.
    const int n = g.size();
    std::vector<std::vector<bool>> nonadj(n, std::vector<bool>(n, true));
    for (int v = 0; v < n; ++v) {
        nonadj[v][v] = false;
        for (int u : g.neighbors(v)) nonadj[v][u] = false;
    }
    std::vector<std::vector<int>> out;
    std::vector<int> r;
    auto rec = [&](auto&& self, std::vector<int> p, std::vector<int> x) -> void {
        if (p.empty() && x.empty()) {
            auto s = r;
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
            return;
        }
        int pivot = p.empty() ? x.front() : p.front();
        std::size_t best = 0;
        for (int u : p) {
            std::size_t c = 0;
            for (int w : p) c += nonadj[u][w];
            if (c > best) best = c, pivot = u;
        }
        auto candidates = p;
        for (int v : candidates) {
            if (nonadj[pivot][v]) continue;
            std::vector<int> np, nx;
            for (int w : p)
                if (nonadj[v][w]) np.push_back(w);
            for (int w : x)
                if (nonadj[v][w]) nx.push_back(w);
            r.push_back(v);
            self(self, np, nx);
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    };
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    if (n > 0) rec(rec, all, {});
    std::sort(out.begin(), out.end());
    return out;
}

Hypergraph kneser_representation(const Graph& g) {
    auto mis = maximal_independent_sets(g);
    std::vector<std::string> hv;
    for (std::size_t i = 0; i < mis.size(); ++i) hv.push_back("mis" + std::to_string(i));
    const int tokens_at = static_cast<int>(hv.size());
    for (const auto& id : g.ids()) hv.push_back("tok:" + id);

    std::vector<std::vector<int>> edges(g.size());
    for (int v = 0; v < g.size(); ++v) edges[v].push_back(tokens_at + v);
    for (std::size_t i = 0; i < mis.size(); ++i)
        for (int v : mis[i]) edges[v].push_back(static_cast<int>(i));
    return Hypergraph(std::move(hv), g.ids(), std::move(edges));
}

Graph gen_H(int t) {
    if (t < 1 || t > 20) fail(ErrorKind::invalid_parameter, "H_t needs 1 <= t <= 20");
    std::vector<std::uint32_t> vecs;
    for (std::uint32_t m = 0; m < (1u << t); ++m)
        if (std::popcount(m) % 2 == 1) vecs.push_back(m);
    // ids are bitstrings, first character = first coordinate
    auto bits = [t](std::uint32_t m) {
        std::string s(t, '0');
        for (int i = 0; i < t; ++i)
            if (m >> i & 1u) s[i] = '1';
        return s;
    };
    std::vector<std::pair<std::string, std::uint32_t>> named;
    for (auto m : vecs) named.emplace_back(bits(m), m);
    // by weight, then descending bitstring: the basis vectors 100.., 010.. lead
    std::sort(named.begin(), named.end(), [](const auto& a, const auto& b) {
        int wa = std::popcount(a.second), wb = std::popcount(b.second);
        return wa != wb ? wa < wb : a.first > b.first;
    });
    std::vector<std::string> ids;
    for (auto& [s, m] : named) ids.push_back(s);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < named.size(); ++i)
        for (std::size_t j = i + 1; j < named.size(); ++j)
            if (std::popcount(named[i].second & named[j].second) % 2 == 0)
                edges.emplace_back(int(i), int(j));
    return Graph(std::move(ids), edges);
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.ids(), edges);
}

ColoredGraph augment_dummies(const ColoredGraph& cg, int s) {
    if (s < 0) fail(ErrorKind::invalid_parameter, "negative dummy count");
    if (static_cast<int>(cg.colors.size()) != cg.graph.size())
        fail(ErrorKind::invalid_input, "coloring is not total");
    auto ids = cg.graph.ids();
    auto edges = cg.graph.edges();
    auto colors = cg.colors;
    int next_color = colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end()) + 1;
    const int n = cg.graph.size();
    for (int d = 0; d < s; ++d) {
        std::string id = "dummy" + std::to_string(d);
        while (cg.graph.index_of(id) >= 0) id = "_" + id;
        ids.push_back(id);
        for (int v = 0; v < n; ++v) edges.emplace_back(v, n + d);
        colors.push_back(next_color++);
    }
    return {Graph(std::move(ids), edges), std::move(colors)};
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<std::string> ids;
    std::vector<int> pos(g.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        pos[vertices[i]] = static_cast<int>(i);
        ids.push_back(g.id(vertices[i]));
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    return Graph(std::move(ids), edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> ids;
    std::set<std::string> seen;
    std::vector<std::pair<std::string, std::string>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() == 1) {  // isolated vertex
            if (seen.insert(tok[0]).second) ids.push_back(tok[0]);
            continue;
        }
        if (tok.size() != 2)
            fail(ErrorKind::parse_error, "edge list line " + std::to_string(lineno) +
                                             ": expected two vertex ids");
        for (auto& t : tok)
            if (seen.insert(t).second) ids.push_back(t);
        edges.emplace_back(tok[0], tok[1]);
    }
    return Graph::from_id_edges(std::move(ids), edges);
}

}  // namespace toporep
