#include "toporep/topo.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>

#include "cdcl.hpp"
#include "toporep/representations.hpp"
#include "toporep/solvers.hpp"

namespace toporep {

SignedPoset::SignedPoset(std::vector<std::vector<int>> lower_covers, std::vector<int> involution)
    : lower_(std::move(lower_covers)), upper_(lower_.size()), nu_(std::move(involution)) {
    const int n = size();
    if (static_cast<int>(lower_.size()) != n)
        fail(ErrorKind::invalid_input, "cover list and involution sizes differ");
    std::vector<int> indeg(n, 0);
    for (int q = 0; q < n; ++q) {
        for (int p : lower_[q]) {
            if (p < 0 || p >= n || p == q) fail(ErrorKind::invalid_input, "bad cover pair");
            upper_[p].push_back(q);
        }
        std::sort(lower_[q].begin(), lower_[q].end());
        indeg[q] = static_cast<int>(lower_[q].size());
    }
    for (int v : nu_)
        if (v < 0 || v >= n) fail(ErrorKind::invalid_input, "involution out of range");
    for (auto& u : upper_) std::sort(u.begin(), u.end());
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int p = 0; p < n; ++p)
        if (indeg[p] == 0) ready.push(p);
    while (!ready.empty()) {
        int p = ready.top();
        ready.pop();
        order_.push_back(p);
        for (int q : upper_[p])
            if (--indeg[q] == 0) ready.push(q);
    }
    if (static_cast<int>(order_.size()) != n) fail(ErrorKind::invalid_input, "cover relation has a cycle");
}

bool SignedPoset::less(int p, int q) const {
    if (p == q) return false;
    std::vector<bool> seen(size(), false);
    std::vector<int> stack{p};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : upper_[x]) {
            if (y == q) return true;
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
        }
    }
    return false;
}

int SignedPoset::height() const {
    if (empty()) return -1;
    std::vector<int> longest(size(), 0);
    int best = 0;
    for (int q : order_) {
        for (int p : lower_[q]) longest[q] = std::max(longest[q], longest[p] + 1);
        best = std::max(best, longest[q]);
    }
    return best;
}

std::optional<std::string> SignedPoset::check_invariants() const {
    for (int p = 0; p < size(); ++p) {
        if (nu_[p] == p) return "involution has a fixed point at " + std::to_string(p);
        if (nu_[nu_[p]] != p) return "involution is not an involution at " + std::to_string(p);
        for (int c : lower_[p]) {
            const auto& img = lower_[nu_[p]];
            if (!std::binary_search(img.begin(), img.end(), nu_[c]))
                return "involution does not preserve the cover " + std::to_string(c) + " < " +
                       std::to_string(p);
        }
    }
    for (int p = 0; p < size(); ++p)
        if (less(p, nu_[p])) return "element " + std::to_string(p) + " is below its image";
    return std::nullopt;
}

int HomPoset::index_of(const HomElement& e) const {
    auto it = index.find(e);
    return it == index.end() ? -1 : it->second;
}

HomPoset build_hom_poset(const Graph& g, std::size_t cap) {
    if (!g.fits_mask()) fail(ErrorKind::instance_too_large, "Hom poset needs at most 64 vertices");
    const int n = g.size();
    std::vector<VertexMask> nbr(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.neighbor_mask(v);

    std::vector<HomElement> elems;
    // X grows in increasing vertex order while its common neighborhood is nonempty.
    auto grow = [&](auto&& self, VertexMask x, VertexMask common, int next) -> void {
        for (int v = next; v < n; ++v) {
            VertexMask c = x ? (common & nbr[v]) : nbr[v];
            if (!c) continue;
            VertexMask nx = x | VertexMask{1} << v;
            for (VertexMask y = c; y; y = (y - 1) & c) {
                elems.push_back({nx, y});
                if (elems.size() > cap)
                    fail(ErrorKind::poset_too_large,
                         "Hom(K2,G) exceeds the element cap of " + std::to_string(cap));
            }
            self(self, nx, c, v + 1);
        }
    };
    grow(grow, 0, 0, 0);
    std::sort(elems.begin(), elems.end(), [](const HomElement& a, const HomElement& b) {
        int ga = std::popcount(a.x) + std::popcount(a.y), gb = std::popcount(b.x) + std::popcount(b.y);
        if (ga != gb) return ga < gb;
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });

    HomPoset hp;
    hp.elements = std::move(elems);
    const int m = static_cast<int>(hp.elements.size());
    hp.index.reserve(m);
    for (int i = 0; i < m; ++i) hp.index.emplace(hp.elements[i], i);
    std::vector<std::vector<int>> lower(m);
    std::vector<int> nu(m);
    for (int i = 0; i < m; ++i) {
        const auto& e = hp.elements[i];
        nu[i] = hp.index.at(HomElement{e.y, e.x});
        if (std::popcount(e.x) > 1)
            for (VertexMask r = e.x; r; r &= r - 1) lower[i].push_back(hp.index.at({e.x & ~(r & -r), e.y}));
        if (std::popcount(e.y) > 1)
            for (VertexMask r = e.y; r; r &= r - 1) lower[i].push_back(hp.index.at({e.x, e.y & ~(r & -r)}));
    }
    hp.poset = SignedPoset(std::move(lower), std::move(nu));
    if (m <= 20000)
        if (auto bad = hp.poset.check_invariants())
            fail(ErrorKind::internal_error, "Hom poset invariant violated: " + *bad);
    return hp;
}

namespace {

// "Is there an order-preserving Z_2-map P -> Q_n" as CNF. Each antipodal pair
// {x, nu(x)} shares order-encoded level variables (level >= k, k = 2..n+1)
// and one sign variable; nu(x) reads the sign negated.
class QnMapEncoding {
public:
    QnMapEncoding(const SignedPoset& p, int n, bool pin_first_sign = true)
        : p_(p), top_(n + 1), rep_(p.size(), -1) {
        for (int x = 0; x < p.size(); ++x) {
            if (rep_[x] >= 0) continue;
            rep_[x] = rep_[p.nu(x)] = x;
            base_.emplace(x, solver_.num_vars() + 1);
            for (int k = 0; k <= n; ++k) solver_.new_var();  // sign, then levels 2..n+1
        }
        for (const auto& [x, b] : base_)
            for (int k = 2; k < top_; ++k) solver_.add_clause({-ge(x, k + 1), ge(x, k)});
        bool first = pin_first_sign;
        for (int x = 0; x < p.size(); ++x) {
            if (first) {  // global sign flip symmetry
                solver_.add_clause({sign(x)});
                first = false;
            }
            for (int q : p.upper_covers(x)) {
                for (int k = 2; k <= top_; ++k) solver_.add_clause({-ge(x, k), ge(q, k)});
                // same level forces the same sign
                for (int k = 1; k <= top_; ++k) {
                    std::vector<int> head;
                    if (k > 1) head.push_back(-ge(x, k));
                    if (k < top_) head.push_back(ge(q, k + 1));
                    auto c1 = head, c2 = head;
                    c1.insert(c1.end(), {-sign(x), sign(q)});
                    c2.insert(c2.end(), {sign(x), -sign(q)});
                    solver_.add_clause(c1);
                    solver_.add_clause(c2);
                }
            }
        }
    }

    void force(int x, int value) {
        if (value != 1 && value != -1) fail(ErrorKind::internal_error, "only level-1 values can be forced");
        if (top_ > 1) solver_.add_clause({-ge(x, 2)});
        solver_.add_clause({value > 0 ? sign(x) : -sign(x)});
    }

    bool solve(std::vector<int>* levels, const SearchBudget& budget) {
        if (!solver_.solve(budget)) return false;
        if (levels) {
            levels->assign(p_.size(), 0);
            for (int x = 0; x < p_.size(); ++x) {
                int l = 1;
                while (l < top_ && solver_.model_value(ge(x, l + 1))) ++l;
                (*levels)[x] = solver_.model_value(sign(x)) ? l : -l;
            }
        }
        return true;
    }

private:
    int sign(int x) const {
        int v = base_.at(rep_[x]);
        return rep_[x] == x ? v : -v;
    }
    int ge(int x, int k) const { return base_.at(rep_[x]) + (k - 1); }

    const SignedPoset& p_;
    int top_;
    std::vector<int> rep_;
    std::unordered_map<int, int> base_;
    cdcl::Solver solver_;
};

}  // namespace

bool is_qn_map(const SignedPoset& p, int n, const std::vector<int>& levels) {
    if (static_cast<int>(levels.size()) != p.size()) return false;
    for (int x = 0; x < p.size(); ++x) {
        int v = levels[x];
        if (v == 0 || std::abs(v) > n + 1) return false;
        if (levels[p.nu(x)] != -v) return false;
        for (int q : p.upper_covers(x))
            if (!(levels[q] == v || std::abs(levels[q]) > std::abs(v))) return false;
    }
    return true;
}

bool xind_feasible(const SignedPoset& p, int n, std::vector<int>* levels, const SearchBudget& budget) {
    if (n < 0) return p.empty();
    if (n >= 32) fail(ErrorKind::instance_too_large, "Q_n level count above 32");
    if (n == 0) {
        // a single level: signs must be constant on cover-connected components
        std::vector<int> comp(p.size(), -1);
        int comps = 0;
        for (int s = 0; s < p.size(); ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = comps;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (const auto* adj : {&p.upper_covers(x), &p.lower_covers(x)})
                    for (int y : *adj)
                        if (comp[y] < 0) comp[y] = comps, stack.push_back(y);
            }
            ++comps;
        }
        std::vector<int> sign(comps, 0);
        for (int x = 0; x < p.size(); ++x) {
            if (comp[x] == comp[p.nu(x)]) return false;
            if (!sign[comp[x]]) sign[comp[x]] = 1, sign[comp[p.nu(x)]] = -1;
        }
        if (levels) {
            levels->resize(p.size());
            for (int x = 0; x < p.size(); ++x) (*levels)[x] = sign[comp[x]];
        }
        return true;
    }
    QnMapEncoding enc(p, n);
    bool ok = enc.solve(levels, budget);
    if (ok && levels && !is_qn_map(p, n, *levels))
        fail(ErrorKind::internal_error, "cross-index search produced an invalid Q_n map");
    return ok;
}

int xind(const SignedPoset& p, const SearchBudget& budget) {
    if (p.empty()) return -1;
    const int ceiling = p.height();  // rank-graded map x -> ±(height below x + 1) always works
    for (int n = 0; n < ceiling && n < 32; ++n)
        if (xind_feasible(p, n, nullptr, budget)) return n;
    return ceiling;
}

std::vector<int> coloring_qn_map(const HomPoset& hp, const std::vector<int>& colors) {
    std::vector<int> levels(hp.elements.size());
    auto palette = [&](VertexMask m) {
        std::uint64_t used = 0;
        for (; m; m &= m - 1) {
            int c = colors.at(std::countr_zero(m));
            if (c < 1 || c > 64) fail(ErrorKind::invalid_input, "colors must lie in 1..64");
            used |= std::uint64_t{1} << (c - 1);
        }
        return used;
    };
    for (std::size_t i = 0; i < hp.elements.size(); ++i) {
        auto cx = palette(hp.elements[i].x), cy = palette(hp.elements[i].y);
        if (cx & cy) fail(ErrorKind::invalid_input, "coloring is not proper");
        int level = std::popcount(cx | cy) - 1;
        levels[i] = std::bit_width(cx) > std::bit_width(cy) ? level : -level;
    }
    return levels;
}

namespace {

// Proves Xind(Hom(K_2,K_m)) > m-3, or returns false when the budget runs out.
bool complete_core_infeasible(int m, const SearchBudget& budget) {
    const auto hp = build_hom_poset(gen_complete(m));
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) arcs.emplace_back(i, j);
    const int e = static_cast<int>(arcs.size());
    std::vector<int> arc_id(m * m);
    for (int a = 0; a < e; ++a) arc_id[arcs[a].first * m + arcs[a].second] = a;

    // bit a set: arcs[a] points from the smaller vertex to the larger
    std::vector<bool> seen(std::size_t{1} << e, false);
    std::vector<int> perm(m);
    for (std::uint32_t t = 0; t < (std::uint32_t{1} << e); ++t) {
        if (seen[t]) continue;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (int flip = 0; flip < 2; ++flip) {
                std::uint32_t img = 0;
                for (int a = 0; a < e; ++a) {
                    auto [i, j] = arcs[a];
                    bool forward = (((t >> a) & 1) != 0) != (flip == 1);  // i -> j
                    int u = perm[i], v = perm[j];
                    if (u > v) std::swap(u, v), forward = !forward;
                    if (forward) img |= std::uint32_t{1} << arc_id[u * m + v];
                }
                seen[img] = true;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        QnMapEncoding enc(hp.poset, m - 3, false);
        for (int a = 0; a < e; ++a) {
            auto [i, j] = arcs[a];
            int x = hp.index_of({VertexMask{1} << i, VertexMask{1} << j});
            enc.force(x, (t >> a) & 1 ? 1 : -1);
        }
        if (enc.solve(nullptr, budget)) return false;  // a lowered map exists
    }
    return true;
}

}  // namespace

int complete_core_lower_bound(int m, double seconds) {
    if (m < 2) return -1;
    if (m == 2) return 0;
    m = std::min(m, 7);
    struct Entry {
        int bound;
        double tried;
    };
    static std::mutex mu;
    static std::map<int, Entry> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(m);
        if (it != cache.end() && (it->second.bound == m - 2 || it->second.tried >= seconds))
            return it->second.bound;
    }
    int below = complete_core_lower_bound(m - 1, seconds);
    int bound = below;
    try {
        if (complete_core_infeasible(m, SearchBudget::seconds(seconds))) bound = m - 2;
    } catch (const Error& err) {
        if (!err.is_budget()) throw;
    }
    std::lock_guard lock(mu);
    auto& slot = cache[m];
    if (bound >= slot.bound) slot = {bound, std::max(slot.tried, seconds)};
    return slot.bound;
}

XindBounds xind_bounds(const Graph& g, const HomPoset& hp, const SearchBudget& budget,
                       const XindOptions& opts) {
    XindBounds r;
    const auto& p = hp.poset;
    if (p.empty()) return r;

    try {
        auto chi = chromatic_number(g, budget);
        r.upper = chi.chi - 2;
        r.levels = coloring_qn_map(hp, chi.witness.colors);
    } catch (const Error& err) {
        if (!err.is_budget()) throw;
        // rank-graded fallback: strictly increasing along covers
        r.upper = p.height();
        r.levels.assign(p.size(), 0);
        for (int x : p.topological_order()) {
            int l = 1;
            for (int y : p.lower_covers(x)) l = std::max(l, std::abs(r.levels[y]) + 1);
            if (!r.levels[x]) r.levels[x] = l, r.levels[p.nu(x)] = -l;
        }
    }

    int omega = 2;
    try {
        omega = max_clique(g, budget).size;
    } catch (const Error& err) {
        if (!err.is_budget()) throw;
    }
    r.lower = std::max(0, complete_core_lower_bound(omega, opts.core_seconds));
    // the same instance as the core that just ran out of time
    bool complete = static_cast<int>(g.edge_count()) * 2 == g.size() * (g.size() - 1);
    if (complete && r.lower < omega - 2) return r;

    for (int n = r.lower; n < r.upper; ++n) {
        try {
            std::vector<int> levels;
            if (xind_feasible(p, n, &levels, budget)) {
                r.upper = n;
                r.levels = std::move(levels);
                break;
            }
            r.lower = n + 1;
        } catch (const Error& err) {
            if (!err.is_budget()) throw;
            break;
        }
    }
    return r;
}

Cd2Result cd2(const Hypergraph& h, const SearchBudget& budget) {
    const int n = h.vertex_count();
    for (int d = 0; d <= n; ++d) {
        std::vector<int> pick(d);
        for (int i = 0; i < d; ++i) pick[i] = i;
        while (true) {
            budget.tick();
            std::vector<bool> removed(n, false);
            for (int v : pick) removed[v] = true;
            std::vector<std::vector<int>> surviving;
            std::vector<std::string> eids;
            for (int e = 0; e < h.edge_count(); ++e) {
                const auto& edge = h.edge(e);
                if (std::none_of(edge.begin(), edge.end(), [&](int v) { return removed[v]; })) {
                    surviving.push_back(edge);
                    eids.push_back(h.edge_ids()[e]);
                }
            }
            Hypergraph rest(h.vertex_ids(), std::move(eids), std::move(surviving), true);
            if (auto col = hypergraph_2colorable(rest, budget)) {
                for (int v : pick) (*col)[v] = 0;
                return {d, pick, *col};
            }
            // next combination
            int i = d - 1;
            while (i >= 0 && pick[i] == n - d + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    fail(ErrorKind::internal_error, "cd2 search exhausted");
}

SpanKey span_key(const MatroidAssignment& a, VertexMask u, VertexMask assigned_vertices) {
    const ElementSet s = a.elements_of_vertices(u);
    SpanKey key;
    key.rank = a.oracle.rank(s);
    for (VertexMask r = assigned_vertices; r; r &= r - 1) {
        int v = std::countr_zero(r);
        ElementSet e = ElementSet{1} << a.element[v];
        if ((s & e) || a.oracle.rank(s | e) == key.rank) key.trace.push_back(v);
    }
    return key;
}

namespace {

void compute_keys(const MatroidAssignment& a, const std::vector<VertexMask>& masks, VertexMask all,
                  std::vector<SpanKey>& keys, Exec exec) {
    keys.assign(masks.size(), {});
    const long m = static_cast<long>(masks.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long i = 0; i < m; ++i) keys[i] = span_key(a, masks[i], all);
    } else {
        for (long i = 0; i < m; ++i) keys[i] = span_key(a, masks[i], all);
    }
}

}  // namespace

PhiMap build_phi(const Graph& g, const MatroidAssignment& a, const HomPoset& hp, Exec exec) {
    if (static_cast<int>(a.element.size()) != g.size())
        fail(ErrorKind::invalid_input, "assignment is not total on the vertices");
    std::vector<VertexMask> masks;
    masks.reserve(hp.elements.size());
    for (const auto& e : hp.elements) masks.push_back(e.x);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<SpanKey> keys;
    compute_keys(a, masks, g.all_mask(), keys, exec);
    auto key_of = [&](VertexMask m) -> const SpanKey& {
        return keys[std::lower_bound(masks.begin(), masks.end(), m) - masks.begin()];
    };

    PhiMap phi;
    phi.value.resize(hp.elements.size());
    const long m = static_cast<long>(hp.elements.size());
    bool tie = false;
    // returns true when both sides share a key
    auto one = [&](long i) {
        const auto& kx = key_of(hp.elements[i].x);
        const auto& ky = key_of(hp.elements[i].y);
        int mag = kx.rank + ky.rank;
        phi.value[i] = kx < ky ? mag : -mag;
        return kx == ky;
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) reduction(|| : tie)
        for (long i = 0; i < m; ++i) tie = one(i) || tie;
    } else {
        for (long i = 0; i < m; ++i) tie = one(i) || tie;
    }
    if (tie) fail(ErrorKind::internal_error, "two sides of a Hom element have equal spans");
    if (auto bad = check_fan_hypotheses(hp.poset, phi))
        fail(ErrorKind::internal_error, "phi violates a fan-lemma hypothesis: " + *bad);
    return phi;
}

std::optional<std::string> check_fan_hypotheses(const SignedPoset& p, const PhiMap& phi) {
    if (static_cast<int>(phi.value.size()) != p.size()) return "phi is not total";
    for (int x = 0; x < p.size(); ++x) {
        int v = phi.value[x];
        if (v == 0) return "phi vanishes at " + std::to_string(x);
        if (phi.value[p.nu(x)] != -v) return "phi(nu p) != -phi(p) at " + std::to_string(x);
        // On covers: magnitude never drops, and equal magnitude forces equal value.
        // Along any chain this rules out phi(p) = -phi(q) for comparable p < q.
        for (int q : p.upper_covers(x)) {
            int w = phi.value[q];
            if (std::abs(w) < std::abs(v))
                return "|phi| decreases from " + std::to_string(x) + " to " + std::to_string(q);
            if (std::abs(w) == std::abs(v) && w != v)
                return "opposite phi on comparable " + std::to_string(x) + " < " + std::to_string(q);
        }
    }
    return std::nullopt;
}

Chain longest_alternating_chain(const SignedPoset& p, const PhiMap& phi) {
    const int n = p.size();
    struct Best {
        int len = 0;
        int elem = -1;
    };
    auto better = [](const Best& a, const Best& b) {
        return a.len > b.len || (a.len == b.len && a.len > 0 && a.elem < b.elem);
    };
    std::vector<int> dp(n, 0), parent(n, -1);
    // below[x][s]: best chain among elements <= x ending with sign s (0 neg, 1 pos)
    std::vector<std::array<Best, 2>> below(n);
    for (int x : p.topological_order()) {
        const int s = phi.value[x] < 0 ? 0 : 1;
        Best pred;
        std::array<Best, 2> acc;
        for (int c : p.lower_covers(x)) {
            if (better(below[c][1 - s], pred)) pred = below[c][1 - s];
            for (int k = 0; k < 2; ++k)
                if (better(below[c][k], acc[k])) acc[k] = below[c][k];
        }
        if (pred.len > 0) {
            dp[x] = pred.len + 1;
            parent[x] = pred.elem;
        } else if (s == 0) {
            dp[x] = 1;
        }
        if (dp[x] > 0 && better(Best{dp[x], x}, acc[s])) acc[s] = Best{dp[x], x};
        below[x] = acc;
    }
    int end = -1;
    for (int x = 0; x < n; ++x)
        if (dp[x] > 0 && (end < 0 || dp[x] > dp[end])) end = x;
    Chain c;
    for (int x = end; x >= 0; x = parent[x]) c.elements.push_back(x);
    std::reverse(c.elements.begin(), c.elements.end());
    for (int x : c.elements) c.phi.push_back(phi.value[x]);
    return c;
}

bool is_alternating_chain(const SignedPoset& p, const PhiMap& phi, const Chain& c) {
    for (int i = 0; i < c.length(); ++i) {
        int v = phi.value[c.elements[i]];
        if (c.phi[i] != v) return false;
        if ((i % 2 == 0) != (v < 0)) return false;
        if (i > 0) {
            if (std::abs(v) <= std::abs(c.phi[i - 1])) return false;
            if (!p.less(c.elements[i - 1], c.elements[i])) return false;
        }
    }
    return true;
}

bool verify_bipartite_witness(const Graph& g, const MatroidAssignment& a, const BipartiteWitness& w) {
    for (int x : w.x)
        for (int y : w.y)
            if (x == y || !g.adjacent(x, y)) return false;
    auto independent = [&](const std::vector<int>& side) {
        std::vector<int> elems;
        for (int v : side) elems.push_back(a.element[v]);
        std::sort(elems.begin(), elems.end());
        if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) return false;
        return a.oracle.rank(element_set(elems)) == static_cast<int>(side.size());
    };
    return independent(w.x) && independent(w.y);
}

ExtractionResult extract_colorful_bipartite(const Graph& g, const MatroidAssignment& a, std::size_t cap,
                                            Exec exec) {
    if (g.edge_count() == 0) fail(ErrorKind::invalid_input, "extraction needs a graph with an edge");
    if (auto check = verify_independent_rep(g, a); !check.ok)
        fail(ErrorKind::invalid_input, "assignment is not an independent representation");
    HomPoset hp = build_hom_poset(g, cap);
    PhiMap phi = build_phi(g, a, hp, exec);

    ExtractionResult out;
    out.poset_size = hp.elements.size();
    out.chain = longest_alternating_chain(hp.poset, phi);
    if (!is_alternating_chain(hp.poset, phi, out.chain) || out.chain.length() == 0)
        fail(ErrorKind::internal_error, "alternating chain failed verification");
    out.t_hat = out.chain.length() + 1;
    HomElement top = hp.elements[out.chain.elements.back()];
    int rx = a.oracle.rank(a.elements_of_vertices(top.x));
    int ry = a.oracle.rank(a.elements_of_vertices(top.y));
    if (rx > ry) {
        std::swap(top.x, top.y);
        std::swap(rx, ry);
    }
    out.top = top;
    const int small = out.t_hat / 2, large = (out.t_hat + 1) / 2;
    if (rx < small || ry < large)
        fail(ErrorKind::internal_error, "top chain element has too little rank");

    auto pick = [&](VertexMask side, int k) {
        std::vector<int> chosen;
        ElementSet elems = 0;
        for (VertexMask r = side; r && static_cast<int>(chosen.size()) < k; r &= r - 1) {
            int v = std::countr_zero(r);
            ElementSet next = elems | ElementSet{1} << a.element[v];
            if (a.oracle.rank(next) == static_cast<int>(chosen.size()) + 1) {
                chosen.push_back(v);
                elems = next;
            }
        }
        return chosen;
    };
    out.witness.x = pick(top.x, small);
    out.witness.y = pick(top.y, large);
    for (int v : out.witness.x) out.witness.x_cert.push_back(a.element[v]);
    for (int v : out.witness.y) out.witness.y_cert.push_back(a.element[v]);
    if (static_cast<int>(out.witness.x.size()) != small || static_cast<int>(out.witness.y.size()) != large ||
        !verify_bipartite_witness(g, a, out.witness))
        fail(ErrorKind::internal_error, "extracted bipartite witness failed verification");
    out.rank_lower_bound = large + 1;
    return out;
}

}  // namespace toporep
