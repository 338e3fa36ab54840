#pragma once

// Test-only oracles: slow, obviously-correct reimplementations used to check
// the library's answers, plus graph enumeration up to isomorphism.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "toporep/graph.hpp"

namespace oracle {

using toporep::Graph;

inline Graph from_mask(int n, std::uint32_t mask) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    std::vector<toporep::Edge> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1u) edges.emplace_back(i, j);
    return Graph(ids, edges);
}

/// One representative per isomorphism class of graphs on n vertices (n <= 6),
/// found by marking whole orbits of edge masks.
inline std::vector<Graph> graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int e = static_cast<int>(pairs.size());
    std::vector<int> id(n * n, 0);
    for (int b = 0; b < e; ++b) id[pairs[b].first * n + pairs[b].second] = id[pairs[b].second * n + pairs[b].first] = b;
    std::vector<bool> seen(std::size_t{1} << e, false);
    std::vector<Graph> out;
    std::vector<int> perm(n);
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << e); ++m) {
        if (seen[m]) continue;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::uint32_t img = 0;
            for (int b = 0; b < e; ++b)
                if (m >> b & 1u) img |= std::uint32_t{1} << id[perm[pairs[b].first] * n + perm[pairs[b].second]];
            seen[img] = true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.push_back(from_mask(n, m));
    }
    return out;
}

inline bool proper(const Graph& g, const std::vector<int>& c) {
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

/// Chromatic number by trying every k-coloring.
inline int chromatic(const Graph& g) {
    const int n = g.size();
    if (n == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> c(n, 0);
        while (true) {
            if (proper(g, c)) return k;
            int i = 0;
            while (i < n && ++c[i] == k) c[i++] = 0;
            if (i == n) break;
        }
    }
}

inline int clique_number(const Graph& g) {
    int best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << g.size()); ++s) {
        bool ok = true;
        for (int u = 0; u < g.size() && ok; ++u)
            for (int v = u + 1; v < g.size() && ok; ++v)
                if ((s >> u & 1u) && (s >> v & 1u) && !g.adjacent(u, v)) ok = false;
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

/// Row rank over GF(p) by schoolbook elimination on plain integers.
inline int rank_mod(std::vector<std::vector<long>> a, long p) {
    int r = 0;
    const int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0;
    auto inv = [p](long x) {
        long res = 1, e = p - 2;
        x %= p;
        while (e) {
            if (e & 1) res = res * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return res;
    };
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (((a[i][c] % p) + p) % p) piv = i;
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        long iv = inv(((a[r][c] % p) + p) % p);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            long f = ((a[i][c] % p) + p) % p * iv % p;
            for (int k = 0; k < cols; ++k) a[i][k] = ((a[i][k] - f * a[r][k]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

/// minrank over GF(p) by enumerating every matrix with unit diagonal.
inline int minrank(const Graph& target, long p) {
    const int n = target.size();
    std::vector<std::pair<int, int>> free;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && target.adjacent(u, v)) free.emplace_back(u, v);
    int best = n;
    std::vector<long> val(free.size(), 0);
    while (true) {
        std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i) a[i][i] = 1;
        for (std::size_t k = 0; k < free.size(); ++k) a[free[k].first][free[k].second] = val[k];
        best = std::min(best, rank_mod(a, p));
        std::size_t i = 0;
        while (i < val.size() && ++val[i] == p) val[i++] = 0;
        if (i == val.size()) break;
    }
    return best;
}

}  // namespace oracle
