#include "toporep/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "toporep/bitset.hpp"

namespace toporep {

namespace {

std::vector<Bitset> adjacency_bits(const Graph& g) {
    std::vector<Bitset> adj(g.size(), Bitset(g.size()));
    for (int v = 0; v < g.size(); ++v)
        for (int u : g.neighbors(v)) adj[v].set(u);
    return adj;
}

// Greedy sequential coloring of the candidate set; returns vertices ordered by
// color class and the color bound of each prefix (MCQ-style).
void color_sort(const std::vector<Bitset>& adj, const Bitset& cand, std::vector<int>& order,
                std::vector<int>& bound) {
    order.clear();
    bound.clear();
    Bitset uncolored = cand;
    int color = 0;
    while (uncolored.any()) {
        ++color;
        Bitset q = uncolored;
        while (q.any()) {
            int v = q.first();
            q.reset(v);
            q.subtract(adj[v]);
            uncolored.reset(v);
            order.push_back(v);
            bound.push_back(color);
        }
    }
}

struct CliqueSearch {
    const std::vector<Bitset>& adj;
    const SearchBudget& budget;
    std::vector<int> current, best;

    void expand(Bitset cand) {
        budget.tick();
        std::vector<int> order, bound;
        color_sort(adj, cand, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current.size()) + bound[i] <= static_cast<int>(best.size())) return;
            int v = order[i];
            current.push_back(v);
            Bitset next = cand & adj[v];
            if (next.none()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
            cand.reset(v);
        }
    }
};

}  // namespace

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.size()) return false;
    for (int c : colors)
        if (c <= 0) return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

bool is_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != g.size()) return false;
    for (int x : map)
        if (x < 0 || x >= h.size()) return false;
    for (auto [u, v] : g.edges())
        if (!h.adjacent(map[u], map[v])) return false;
    return true;
}

CliqueResult max_clique(const Graph& g, const SearchBudget& budget) {
    if (g.size() == 0) return {};
    auto adj = adjacency_bits(g);
    CliqueSearch s{adj, budget, {}, {}};
    s.expand(Bitset::full(g.size()));
    std::sort(s.best.begin(), s.best.end());
    if (!is_clique(g, s.best)) fail(ErrorKind::internal_error, "max_clique produced a non-clique");
    return {static_cast<int>(s.best.size()), s.best};
}

namespace {

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, int k, const SearchBudget& budget)
        : g_(g), n_(g.size()), k_(k), budget_(budget), adj_(adjacency_bits(g)),
          color_(n_, -1), nbr_count_(static_cast<std::size_t>(n_) * k, 0), sat_(n_, 0),
          classes_(k, Bitset(n_)), uncolored_(Bitset::full(n_)) {}

    std::optional<std::vector<int>> run(const std::vector<int>& seed_clique) {
        for (std::size_t i = 0; i < seed_clique.size(); ++i) assign(seed_clique[i], static_cast<int>(i));
        used_ = static_cast<int>(seed_clique.size());
        if (search()) return color_;
        return std::nullopt;
    }

private:
    void assign(int v, int c) {
        color_[v] = c;
        uncolored_.reset(v);
        classes_[c].set(v);
        for (int u : g_.neighbors(v))
            if (nbr_count_[u * k_ + c]++ == 0) ++sat_[u];
    }

    void unassign(int v) {
        int c = color_[v];
        color_[v] = -1;
        uncolored_.set(v);
        classes_[c].reset(v);
        for (int u : g_.neighbors(v))
            if (--nbr_count_[u * k_ + c] == 0) --sat_[u];
    }

    static int greedy_clique_cover(const std::vector<Bitset>& adj, const Bitset& set) {
        std::vector<Bitset> common;  // per clique: vertices adjacent to all members
        set.for_each([&](int v) {
            for (auto& c : common) {
                if (c.test(v)) {
                    c &= adj[v];
                    return;
                }
            }
            common.push_back(adj[v]);
        });
        return static_cast<int>(common.size());
    }

    // Every color class is an independent set, so it can still absorb at most
    // a clique-cover's worth of the uncolored vertices it may receive.
    bool capacity_ok() const {
        int remaining = uncolored_.count();
        if (remaining == 0) return true;
        int capacity = 0;
        for (int c = 0; c < used_; ++c) {
            Bitset open = uncolored_;
            classes_[c].for_each([&](int v) { open.subtract(adj_[v]); });
            capacity += greedy_clique_cover(adj_, open);
            if (capacity >= remaining) return true;
        }
        if (used_ < k_) capacity += (k_ - used_) * greedy_clique_cover(adj_, uncolored_);
        return capacity >= remaining;
    }

    int select() const {
        int best = -1, best_sat = -1, best_deg = -1;
        uncolored_.for_each([&](int v) {
            int s = sat_[v];
            if (s < best_sat) return;
            int d = adj_[v].intersect_count(uncolored_);
            if (s > best_sat || d > best_deg) best = v, best_sat = s, best_deg = d;
        });
        return best;
    }

    bool search() {
        budget_.tick();
        if (uncolored_.none()) return true;
        int v = select();
        if (sat_[v] >= k_) return false;
        if (!capacity_ok()) return false;
        const int limit = std::min(used_ + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (nbr_count_[v * k_ + c] != 0) continue;
            bool opened = c == used_;
            assign(v, c);
            if (opened) ++used_;
            if (search()) return true;
            if (opened) --used_;
            unassign(v);
        }
        return false;
    }

    const Graph& g_;
    int n_, k_;
    const SearchBudget& budget_;
    std::vector<Bitset> adj_;
    std::vector<int> color_;
    std::vector<int> nbr_count_;
    std::vector<int> sat_;
    std::vector<Bitset> classes_;
    Bitset uncolored_;
    int used_ = 0;
};

}  // namespace

std::optional<Coloring> k_colorable(const Graph& g, int k, const SearchBudget& budget) {
    if (k < 0) fail(ErrorKind::invalid_parameter, "k must be nonnegative");
    if (g.size() == 0) return Coloring{{}, k};
    if (k == 0) return std::nullopt;
    auto clique = max_clique(g, budget);
    if (clique.size > k) return std::nullopt;
    DsaturSearch search(g, k, budget);
    auto colors = search.run(clique.vertices);
    if (!colors) return std::nullopt;
    Coloring out{*colors, k};
    for (auto& c : out.colors) ++c;
    if (!is_proper_coloring(g, out.colors))
        fail(ErrorKind::internal_error, "k_colorable produced an improper coloring");
    return out;
}

ChromaticResult chromatic_number(const Graph& g, const SearchBudget& budget) {
    if (g.size() == 0) return {0, {}};
    int lower = std::max(1, max_clique(g, budget).size);
    for (int k = lower;; ++k) {
        if (auto c = k_colorable(g, k, budget)) {
            c->palette = k;
            return {k, *c};
        }
    }
}

std::optional<std::vector<int>> homomorphism_exists(const Graph& g, const Graph& h,
                                                    const SearchBudget& budget) {
    const int n = g.size(), m = h.size();
    if (n == 0) return std::vector<int>{};
    if (m == 0) return std::nullopt;
    auto hadj = adjacency_bits(h);
    std::vector<Bitset> domain(n, Bitset::full(m));
    // vertices with an edge need an image with a neighbor
    Bitset nonisolated(m);
    for (int x = 0; x < m; ++x)
        if (h.degree(x) > 0) nonisolated.set(x);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 0) domain[v] = nonisolated;
        if (domain[v].none()) return std::nullopt;
    }
    std::vector<int> image(n, -1);

    auto rec = [&](auto&& self, int assigned) -> bool {
        budget.tick();
        if (assigned == n) return true;
        // smallest domain, then most assigned neighbors, then highest degree, then lowest index
        int v = -1, best_size = 0, best_links = -1;
        for (int u = 0; u < n; ++u) {
            if (image[u] >= 0) continue;
            int size = domain[u].count();
            int links = 0;
            for (int w : g.neighbors(u)) links += image[w] >= 0;
            if (v < 0 || size < best_size || (size == best_size && links > best_links) ||
                (size == best_size && links == best_links && g.degree(u) > g.degree(v)))
                v = u, best_size = size, best_links = links;
        }
        if (best_size == 0) return false;
        for (int x : domain[v].to_vector()) {
            std::vector<std::pair<int, Bitset>> saved;
            bool wiped = false;
            for (int w : g.neighbors(v)) {
                if (image[w] >= 0) continue;
                saved.emplace_back(w, domain[w]);
                domain[w] &= hadj[x];
                if (domain[w].none()) {
                    wiped = true;
                    break;
                }
            }
            if (!wiped) {
                image[v] = x;
                if (self(self, assigned + 1)) return true;
                image[v] = -1;
            }
            for (auto it = saved.rbegin(); it != saved.rend(); ++it) domain[it->first] = it->second;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    if (!is_homomorphism(g, h, image))
        fail(ErrorKind::internal_error, "homomorphism search produced an invalid map");
    return image;
}

std::optional<std::vector<int>> hypergraph_2colorable(const Hypergraph& h, const SearchBudget& budget) {
    const int n = h.vertex_count();
    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < h.edge_count(); ++e) {
        if (h.edge(e).size() == 1) return std::nullopt;
        for (int v : h.edge(e)) incident[v].push_back(e);
    }
    std::vector<int> color(n, 0);
    // an edge fails once all its vertices share one color
    auto edge_ok = [&](int e) {
        int first = 0;
        for (int v : h.edge(e)) {
            if (color[v] == 0) return true;
            if (first == 0) first = color[v];
            else if (color[v] != first) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self, int v) -> bool {
        budget.tick();
        if (v == n) return true;
        for (int c : {1, 2}) {
            if (v == 0 && c == 2) break;  // color swap symmetry
            color[v] = c;
            bool ok = true;
            for (int e : incident[v])
                if (!edge_ok(e)) {
                    ok = false;
                    break;
                }
            if (ok && self(self, v + 1)) return true;
        }
        color[v] = 0;
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    for (const auto& e : h.edges()) {
        bool mixed = false;
        for (int v : e) mixed |= color[v] != color[e.front()];
        if (!mixed) fail(ErrorKind::internal_error, "2-coloring leaves a monochromatic edge");
    }
    return color;
}

std::vector<Edge> max_bipartite_matching(const Graph& b, const std::vector<int>& left) {
    const int n = b.size();
    std::vector<bool> is_left(n, false);
    for (int v : left) {
        if (v < 0 || v >= n) fail(ErrorKind::invalid_input, "left side vertex out of range");
        is_left[v] = true;
    }
    for (auto [u, v] : b.edges())
        if (is_left[u] == is_left[v])
            fail(ErrorKind::invalid_input, "graph is not bipartite with respect to the given sides");
    return matching_from_side(b, left);
}

std::vector<Edge> matching_from_side(const Graph& b, const std::vector<int>& left) {
    const int n = b.size();
    std::vector<int> match_right(n, -1), match_left(n, -1);
    std::vector<int> sorted_left = left;
    std::sort(sorted_left.begin(), sorted_left.end());
    sorted_left.erase(std::unique(sorted_left.begin(), sorted_left.end()), sorted_left.end());
    for (int u : sorted_left) {
        std::vector<bool> seen(n, false);
        auto augment = [&](auto&& self, int x) -> bool {
            for (int y : b.neighbors(x)) {
                if (seen[y]) continue;
                seen[y] = true;
                if (match_right[y] < 0 || self(self, match_right[y])) {
                    match_right[y] = x;
                    match_left[x] = y;
                    return true;
                }
            }
            return false;
        };
        augment(augment, u);
    }
    std::vector<Edge> out;
    for (int u : sorted_left)
        if (match_left[u] >= 0) out.emplace_back(u, match_left[u]);
    return out;
}

CnfFormula export_kcoloring_cnf(const Graph& g, int k) {
    if (k < 1) fail(ErrorKind::invalid_parameter, "k must be at least 1");
    CnfFormula f;
    f.variables = g.size() * k;
    auto var = [k](int v, int c) { return v * k + c + 1; };
    for (int v = 0; v < g.size(); ++v) {
        std::vector<int> clause;
        for (int c = 0; c < k; ++c) clause.push_back(var(v, c));
        f.clauses.push_back(std::move(clause));
    }
    for (auto [u, v] : g.edges())
        for (int c = 0; c < k; ++c) f.clauses.push_back({-var(u, c), -var(v, c)});
    return f;
}

std::string CnfFormula::to_dimacs() const {
    std::ostringstream out;
    out << "p cnf " << variables << ' ' << clauses.size() << '\n';
    for (const auto& c : clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

CnfFormula CnfFormula::parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfFormula f;
    bool header = false;
    std::size_t declared = 0;
    std::vector<int> current;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c" || first[0] == 'c' || first == "%") continue;
        if (first == "p") {
            std::string kind;
            long v = -1, c = -1;
            if (header || !(ls >> kind >> v >> c) || kind != "cnf" || v < 0 || c < 0)
                fail(ErrorKind::parse_error, "malformed DIMACS header");
            f.variables = static_cast<int>(v);
            declared = static_cast<std::size_t>(c);
            header = true;
            continue;
        }
        std::istringstream toks(line);
        for (std::string t; toks >> t;) {
            long lit;
            try {
                std::size_t pos;
                lit = std::stol(t, &pos);
                if (pos != t.size()) throw std::invalid_argument(t);
            } catch (const std::exception&) {
                fail(ErrorKind::parse_error, "bad DIMACS literal '" + t + "'");
            }
            if (lit == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!current.empty()) fail(ErrorKind::parse_error, "unterminated DIMACS clause");
    int max_var = 0;
    for (const auto& c : f.clauses)
        for (int lit : c) max_var = std::max(max_var, std::abs(lit));
    if (header) {
        if (max_var > f.variables) fail(ErrorKind::parse_error, "literal exceeds declared variable count");
        if (declared != f.clauses.size()) fail(ErrorKind::parse_error, "clause count differs from header");
    } else {
        f.variables = max_var;
    }
    return f;
}

bool CnfFormula::satisfied_by(const std::vector<bool>& a) const {
    for (const auto& c : clauses) {
        bool sat = false;
        for (int lit : c) {
            int v = std::abs(lit);
            if (v < static_cast<int>(a.size()) && a[v] == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

}  // namespace toporep
