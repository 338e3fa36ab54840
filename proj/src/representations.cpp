#include "toporep/representations.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "toporep/gfp.hpp"

namespace toporep {

namespace {

void check_assignment(const Graph& g, const VectorAssignment& r) {
    if (static_cast<int>(r.vectors.size()) != g.size())
        fail(ErrorKind::invalid_input, "vector assignment is not total on the vertices");
    for (const auto& v : r.vectors)
        if (!(v.field() == r.field) || static_cast<int>(v.size()) != r.dim)
            fail(ErrorKind::dimension_mismatch, "assigned vectors must share field and dimension");
}

std::vector<int> by_degree(const Graph& g) {
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

ExactVector exact(FieldSpec f, const gfp::Vec& v) {
    std::vector<Rational> e;
    for (auto x : v) e.emplace_back(x);
    return ExactVector(f, std::move(e));
}

void require_prime(FieldSpec f) {
    if (!f.is_prime())
        fail(ErrorKind::unsupported_search_field, "exhaustive searches need a prime field");
}

}  // namespace

CheckResult verify_orthogonal_rep(const Graph& g, const VectorAssignment& r) {
    check_assignment(g, r);
    CheckResult out;
    for (int v = 0; v < g.size(); ++v)
        if (bilinear(r.vectors[v], r.vectors[v]) == 0) out.violations.push_back({"self-orthogonal", {v}});
    for (auto [u, v] : g.edges())
        if (bilinear(r.vectors[u], r.vectors[v]) != 0) out.violations.push_back({"edge-not-orthogonal", {u, v}});
    out.ok = out.violations.empty();
    return out;
}

MatroidAssignment linear_assignment(const VectorAssignment& r) {
    ExactMatrix cols(r.field, r.dim, r.vectors.size());
    for (std::size_t v = 0; v < r.vectors.size(); ++v)
        for (int i = 0; i < r.dim; ++i) cols.set(i, v, r.vectors[v][i]);
    MatroidAssignment a{RankOracle::linear(std::move(cols)), {}};
    a.element.resize(r.vectors.size());
    std::iota(a.element.begin(), a.element.end(), 0);
    return a;
}

MatroidAssignment coloring_assignment(const std::vector<int>& colors, int r) {
    MatroidAssignment a{RankOracle::uniform(r, r), {}};
    for (int c : colors) {
        if (c < 1 || c > r) fail(ErrorKind::invalid_input, "color outside 1..r");
        a.element.push_back(c - 1);
    }
    return a;
}

CheckResult verify_independent_rep(const Graph& g, const MatroidAssignment& a) {
    if (static_cast<int>(a.element.size()) != g.size())
        fail(ErrorKind::invalid_input, "matroid assignment is not total on the vertices");
    CheckResult out;
    for (int v = 0; v < g.size(); ++v) {
        int e = a.element[v];
        if (e < 0 || e >= a.oracle.ground_size())
            fail(ErrorKind::invalid_input, "assigned element outside the ground set");
        if (a.oracle.is_loop(e)) {
            out.violations.push_back({"loop", {v}});
            continue;
        }
        ElementSet nbrs = 0;
        for (int u : g.neighbors(v)) nbrs |= ElementSet{1} << a.element[u];
        if (a.oracle.rank(nbrs | ElementSet{1} << e) == a.oracle.rank(nbrs))
            out.violations.push_back({"in-neighbor-span", {v}});
    }
    out.ok = out.violations.empty();
    return out;
}

CheckResult verify_independent_rep(const Graph& g, const VectorAssignment& r) {
    check_assignment(g, r);
    CheckResult out;
    for (int v = 0; v < g.size(); ++v) {
        std::vector<ExactVector> nbrs;
        for (int u : g.neighbors(v)) nbrs.push_back(r.vectors[u]);
        if (in_span(r.vectors[v], nbrs)) out.violations.push_back({"in-neighbor-span", {v}});
    }
    out.ok = out.violations.empty();
    return out;
}

bool represents(const ExactMatrix& a, const Graph& target) {
    const auto n = static_cast<std::size_t>(target.size());
    if (a.rows() != n || a.cols() != n) return false;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v && a.at(u, v) == 0) return false;
            if (u != v && a.at(u, v) != 0 && !target.adjacent(int(u), int(v))) return false;
        }
    return true;
}

std::optional<DimensionResult> orthogonality_dimension(const Graph& g, FieldSpec f, int t_max,
                                                       const SearchBudget& budget) {
    require_prime(f);
    if (t_max < 1) fail(ErrorKind::invalid_parameter, "t_max must be at least 1");
    const gfp::Field F{f.characteristic()};
    const auto order = by_degree(g);
    const int n = g.size();
    if (n == 0) return DimensionResult{1, {f, 1, {}}};

    for (int t = 1; t <= t_max; ++t) {
        std::vector<gfp::Vec> points;
        for (auto& p : gfp::projective_points(F, t))
            if (F.dot(p, p) != 0) points.push_back(std::move(p));
        std::vector<int> choice(n, -1);
        auto rec = [&](auto&& self, int i) -> bool {
            budget.tick();
            if (i == n) return true;
            int v = order[i];
            for (int c = 0; c < static_cast<int>(points.size()); ++c) {
                bool ok = true;
                for (int u : g.neighbors(v))
                    if (choice[u] >= 0 && F.dot(points[c], points[choice[u]]) != 0) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                choice[v] = c;
                if (self(self, i + 1)) return true;
            }
            choice[v] = -1;
            return false;
        };
        if (rec(rec, 0)) {
            VectorAssignment w{f, t, {}};
            for (int v = 0; v < n; ++v) w.vectors.push_back(exact(f, points[choice[v]]));
            if (!verify_orthogonal_rep(g, w).ok)
                fail(ErrorKind::internal_error, "orthogonal representation search produced an invalid witness");
            return DimensionResult{t, std::move(w)};
        }
    }
    return std::nullopt;
}

std::optional<DimensionResult> min_indrep_dimension(const Graph& g, FieldSpec f, int s_max,
                                                    const SearchBudget& budget) {
    require_prime(f);
    if (s_max < 1) fail(ErrorKind::invalid_parameter, "s_max must be at least 1");
    const gfp::Field F{f.characteristic()};
    const auto order = by_degree(g);
    const int n = g.size();
    if (n == 0) return DimensionResult{1, {f, 1, {}}};

    for (int s = 1; s <= s_max; ++s) {
        // points_in[k]: projective points supported on the first k coordinates
        std::vector<std::vector<gfp::Vec>> points_in(s + 1);
        for (int k = 1; k <= s; ++k)
            for (auto& p : gfp::projective_points(F, k)) {
                p.resize(s, 0);
                points_in[k].push_back(std::move(p));
            }
        std::vector<gfp::Vec> x(n);
        std::vector<bool> assigned(n, false);

        auto escapes = [&](int w) {  // x_w outside the span of its assigned neighbors
            gfp::Echelon e(F, s);
            for (int u : g.neighbors(w))
                if (assigned[u]) e.insert(x[u]);
            return !e.contains(x[w]);
        };
        auto rec = [&](auto&& self, int i, int used) -> bool {
            budget.tick();
            if (i == n) return true;
            int v = order[i];
            std::vector<const gfp::Vec*> cands;
            for (const auto& p : points_in[std::max(used, 0)]) cands.push_back(&p);
            gfp::Vec fresh(s, 0);
            if (used < s) {
                fresh[used] = 1;
                cands.push_back(&fresh);
            }
            for (const auto* c : cands) {
                x[v] = *c;
                assigned[v] = true;
                bool ok = escapes(v);
                for (int u : g.neighbors(v))
                    if (ok && assigned[u]) ok = escapes(u);
                int next_used = (c == &fresh) ? used + 1 : used;
                if (ok && self(self, i + 1, next_used)) return true;
                assigned[v] = false;
            }
            return false;
        };
        if (rec(rec, 0, 0)) {
            VectorAssignment w{f, s, {}};
            for (int v = 0; v < n; ++v) w.vectors.push_back(exact(f, x[v]));
            if (!verify_independent_rep(g, w).ok)
                fail(ErrorKind::internal_error, "independent representation search produced an invalid witness");
            return DimensionResult{s, std::move(w)};
        }
    }
    return std::nullopt;
}

namespace {

struct Pattern {
    int n;
    std::vector<std::vector<int>> free;  // per row: free off-diagonal columns
};

Pattern pattern_of(const Graph& target) {
    Pattern p{target.size(), std::vector<std::vector<int>>(target.size())};
    for (int u = 0; u < p.n; ++u) p.free[u] = target.neighbors(u);
    return p;
}

ExactMatrix to_exact(FieldSpec f, const std::vector<gfp::Vec>& rows, int n) {
    ExactMatrix m(f, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.set(r, c, Rational(rows[r][c]));
    return m;
}

}  // namespace

MinrankResult minrank_bruteforce(const Graph& target, FieldSpec f, MinrankOptions opts,
                                 const SearchBudget& budget) {
    require_prime(f);
    const gfp::Field F{f.characteristic()};
    const int n = target.size();
    if (n == 0) return {0, ExactMatrix(f, 0, 0)};
    const Pattern pat = pattern_of(target);
    std::uint64_t nodes = 0;

    for (int r = 1; r <= n; ++r) {
        std::vector<gfp::Vec> rows(n);
        auto rec = [&](auto&& self, int i, const gfp::Echelon& basis, const std::vector<gfp::Vec>& gens) -> bool {
            budget.tick();
            if (++nodes > opts.node_limit)
                fail(ErrorKind::instance_too_large, "minrank search exceeded its node budget");
            if (i == n) return true;
            // rows left cannot all be fresh once the rank cap is hit
            const auto& fr = pat.free[i];
            auto fits = [&](const gfp::Vec& row) {
                if (row[i] != 1) return false;
                std::size_t k = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == i) continue;
                    while (k < fr.size() && fr[k] < c) ++k;
                    bool is_free = k < fr.size() && fr[k] == c;
                    if (!is_free && row[c] != 0) return false;
                }
                return true;
            };
            auto try_row = [&](const gfp::Vec& row) -> bool {
                gfp::Echelon next = basis;
                bool grew = next.insert(row);
                if (grew && static_cast<int>(next.rank()) > r) return false;
                rows[i] = row;
                if (grew) {
                    auto g2 = gens;
                    g2.push_back(row);
                    return self(self, i + 1, next, g2);
                }
                return self(self, i + 1, basis, gens);
            };
            const bool full = static_cast<int>(basis.rank()) == r;
            const std::uint64_t pattern_count = [&] {
                std::uint64_t c = 1;
                for (std::size_t j = 0; j < fr.size() && c < (1ull << 40); ++j) c *= F.p;
                return c;
            }();
            std::uint64_t span_count = 1;
            for (std::size_t j = 0; j < gens.size() && span_count < (1ull << 40); ++j) span_count *= F.p;
            if (full && span_count < pattern_count) {
                // walk the span: all combinations of the generating rows
                std::vector<gfp::Elem> coef(gens.size(), 0);
                while (true) {
                    gfp::Vec row(n, 0);
                    for (std::size_t g = 0; g < gens.size(); ++g)
                        if (coef[g])
                            for (int c = 0; c < n; ++c) row[c] = F.add(row[c], F.mul(coef[g], gens[g][c]));
                    if (fits(row) && try_row(row)) return true;
                    std::size_t k = 0;
                    while (k < coef.size() && ++coef[k] == F.p) coef[k++] = 0;
                    if (k == coef.size()) break;
                }
                return false;
            }
            std::vector<gfp::Elem> vals(fr.size(), 0);
            while (true) {
                gfp::Vec row(n, 0);
                row[i] = 1;
                for (std::size_t j = 0; j < fr.size(); ++j) row[fr[j]] = vals[j];
                if (!full || basis.contains(row))
                    if (try_row(row)) return true;
                std::size_t k = 0;
                while (k < vals.size() && ++vals[k] == F.p) vals[k++] = 0;
                if (k == vals.size()) break;
            }
            return false;
        };
        if (rec(rec, 0, gfp::Echelon(F, n), {})) {
            MinrankResult res{r, to_exact(f, rows, n)};
            if (!represents(res.witness, target) || static_cast<int>(rank(res.witness)) != r)
                fail(ErrorKind::internal_error, "minrank witness failed verification");
            return res;
        }
    }
    fail(ErrorKind::internal_error, "minrank search exhausted without the identity");
}

MinrankResult minrank_enumerate(const Graph& target, FieldSpec f, Exec exec, std::uint64_t limit) {
    require_prime(f);
    const gfp::Field F{f.characteristic()};
    const int n = target.size();
    if (n == 0) return {0, ExactMatrix(f, 0, 0)};
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v : target.neighbors(u)) slots.emplace_back(u, v);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (total > limit / F.p) fail(ErrorKind::instance_too_large, "too many matrices to enumerate");
        total *= F.p;
    }
    auto rank_of_index = [&](std::uint64_t idx, std::vector<gfp::Vec>& rows) {
        rows.assign(n, gfp::Vec(n, 0));
        for (int i = 0; i < n; ++i) rows[i][i] = 1;
        for (auto [u, v] : slots) {
            rows[u][v] = static_cast<gfp::Elem>(idx % F.p);
            idx /= F.p;
        }
        return static_cast<int>(gfp::rank(F, rows));
    };
    // (rank, index) minimum: the lowest-index matrix of minimum rank
    std::uint64_t best = ~std::uint64_t{0};
    const auto key = [](int r, std::uint64_t i) { return (std::uint64_t(r) << 56) | i; };
    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            std::vector<gfp::Vec> rows;
            std::uint64_t local = ~std::uint64_t{0};
#pragma omp for schedule(static)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i)
                local = std::min(local, key(rank_of_index(std::uint64_t(i), rows), std::uint64_t(i)));
#pragma omp critical
            best = std::min(best, local);
        }
    } else {
        std::vector<gfp::Vec> rows;
        for (std::uint64_t i = 0; i < total; ++i) best = std::min(best, key(rank_of_index(i, rows), i));
    }
    std::vector<gfp::Vec> rows;
    const std::uint64_t idx = best & ((std::uint64_t{1} << 56) - 1);
    int r = rank_of_index(idx, rows);
    return {r, to_exact(f, rows, n)};
}

VectorAssignment matrix_to_indrep(const Graph& g, const ExactMatrix& a) {
    if (!represents(a, complement(g)))
        fail(ErrorKind::invalid_input, "matrix does not represent the complement of the graph");
    auto cols = independent_columns(a);
    ExactMatrix b = a.select_columns(cols);
    VectorAssignment r{a.field(), static_cast<int>(cols.size()), {}};
    for (std::size_t v = 0; v < b.rows(); ++v) r.vectors.push_back(b.row(v));
    if (!verify_independent_rep(g, r).ok)
        fail(ErrorKind::internal_error, "rows of independent columns are not an independent representation");
    return r;
}

ExactMatrix indrep_to_matrix(const Graph& g, const VectorAssignment& r) {
    if (!verify_independent_rep(g, r).ok)
        fail(ErrorKind::invalid_input, "assignment is not an independent representation");
    const int n = g.size();
    ExactMatrix bm = ExactMatrix::from_vectors_as_rows(r.vectors, r.field, r.dim);
    ExactMatrix out(r.field, n, n);
    for (int v = 0; v < n; ++v) {
        std::vector<std::size_t> nb(g.neighbors(v).begin(), g.neighbors(v).end());
        std::vector<ExactVector> kernel;
        if (nb.empty()) {
            for (int i = 0; i < r.dim; ++i) {
                std::vector<Rational> e(r.dim, Rational(0));
                e[i] = 1;
                kernel.emplace_back(r.field, std::move(e));
            }
        } else {
            kernel = kernel_basis(bm.select_rows(nb));
        }
        // Ker D \ Ker C: a kernel vector not orthogonal to x_v
        const ExactVector* y = nullptr;
        for (const auto& k : kernel)
            if (bilinear(r.vectors[v], k) != 0) {
                y = &k;
                break;
            }
        if (!y) fail(ErrorKind::internal_error, "no kernel vector separates the vertex from its neighbors");
        ExactVector col = bm.multiply(*y);
        for (int u = 0; u < n; ++u) out.set(u, v, col[u]);
    }
    if (!represents(out, complement(g)) || static_cast<int>(rank(out)) > r.dim)
        fail(ErrorKind::internal_error, "constructed matrix failed verification");
    return out;
}

StarCheck check_star_condition(const Graph& g, const MatroidAssignment& a, bool balanced_only,
                               std::size_t cap) {
    StarCheck out;
    out.independent_rep = verify_independent_rep(g, a).ok;
    out.rank_m = a.oracle.full_rank();
    HomPoset hp = build_hom_poset(g, cap);
    for (const auto& e : hp.elements) {
        int sx = std::popcount(e.x), sy = std::popcount(e.y);
        if (balanced_only && std::abs(sx - sy) > 1) continue;
        int sum = a.oracle.rank(a.elements_of_vertices(e.x)) + a.oracle.rank(a.elements_of_vertices(e.y));
        if (sum > out.rank_m) {
            out.holds = false;
            out.violation = e;
            out.violation_sum = sum;
            break;
        }
    }
    return out;
}

int local_color_count(const Graph& g, const std::vector<int>& colors) {
    int best = 0;
    for (int v = 0; v < g.size(); ++v) {
        std::set<int> seen{colors[v]};
        for (int u : g.neighbors(v)) seen.insert(colors[u]);
        best = std::max(best, static_cast<int>(seen.size()));
    }
    return best;
}

LocalChromaticResult local_chromatic(const Graph& g, int m_max, const SearchBudget& budget) {
    const int n = g.size();
    if (n == 0) return {0, {{}, 0}};
    if (m_max < 1) fail(ErrorKind::invalid_parameter, "m_max must be at least 1");
    const auto order = by_degree(g);
    for (int r = 1; r <= n; ++r) {
        std::vector<int> color(n, 0);
        std::vector<std::vector<int>> cnt(n, std::vector<int>(m_max + 1, 0));
        std::vector<int> distinct(n, 0);
        auto rec = [&](auto&& self, int i, int used) -> bool {
            budget.tick();
            if (i == n) return true;
            int v = order[i];
            for (int c = 1; c <= std::min(used + 1, m_max); ++c) {
                if (cnt[v][c] > 0) continue;  // proper
                bool ok = true;
                for (int u : g.neighbors(v)) {
                    if (++cnt[u][c] == 1 && ++distinct[u] > r - 1) ok = false;
                }
                if (ok) {
                    color[v] = c;
                    if (self(self, i + 1, std::max(used, c))) return true;
                    color[v] = 0;
                }
                for (int u : g.neighbors(v))
                    if (--cnt[u][c] == 0) --distinct[u];
            }
            return false;
        };
        if (rec(rec, 0, 0)) {
            Coloring w{color, *std::max_element(color.begin(), color.end())};
            if (!is_proper_coloring(g, w.colors) || local_color_count(g, w.colors) > r)
                fail(ErrorKind::internal_error, "local coloring witness failed verification");
            return {r, std::move(w)};
        }
    }
    fail(ErrorKind::invalid_parameter, "graph has no proper coloring with m_max colors");
}

std::optional<BipartiteWitness> probe_pairwise_orthogonal_bipartite(const Graph& g,
                                                                    const VectorAssignment& r, int a,
                                                                    int b) {
    check_assignment(g, r);
    if (a < 1 || b < 1) fail(ErrorKind::invalid_parameter, "side sizes must be positive");
    const int n = g.size();
    std::vector<std::vector<bool>> orth(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) orth[u][v] = orth[v][u] = bilinear(r.vectors[u], r.vectors[v]) == 0;

    std::vector<int> xs, ys;
    auto compatible_y = [&](int y) {
        for (int x : xs)
            if (x == y || !g.adjacent(x, y) || !orth[x][y]) return false;
        for (int w : ys)
            if (w == y || !orth[w][y]) return false;
        return true;
    };
    auto pick_y = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(ys.size()) == b) return true;
        for (int y = from; y < n; ++y) {
            if (!compatible_y(y)) continue;
            ys.push_back(y);
            if (self(self, y + 1)) return true;
            ys.pop_back();
        }
        return false;
    };
    auto pick_x = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(xs.size()) == a) return pick_y(pick_y, 0);
        for (int x = from; x < n; ++x) {
            bool ok = true;
            for (int w : xs) ok = ok && orth[w][x];
            if (!ok) continue;
            xs.push_back(x);
            if (self(self, x + 1)) return true;
            xs.pop_back();
        }
        return false;
    };
    if (!pick_x(pick_x, 0)) return std::nullopt;
    return BipartiteWitness{xs, ys, {}, {}};
}

}  // namespace toporep
