#pragma once

// Test-only oracles: deliberately naive, enumeration-based procedures kept
// independent of the library implementations they cross-check.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "altfree/analysis.hpp"
#include "altfree/types.hpp"

namespace oracles {

using altfree::BinaryMatrix;
using altfree::OrderedHypergraph;
using altfree::Pattern;

// Longest alternating subsequence (A\B, B\A, A\B, ... starting in A\B) by
// dynamic programming over vertex positions.
inline int dp_alternation(const OrderedHypergraph& h, int i, int j) {
    const auto& ea = h.edges[static_cast<std::size_t>(i)];
    const auto& eb = h.edges[static_cast<std::size_t>(j)];
    auto member = [](const std::vector<int>& e, int v) {
        return std::binary_search(e.begin(), e.end(), v);
    };
    std::vector<int> ending_a(static_cast<std::size_t>(h.n_vertices), 0);  // odd position, v in A\B
    std::vector<int> ending_b(static_cast<std::size_t>(h.n_vertices), 0);  // even position, v in B\A
    int best = 0;
    for (int v = 0; v < h.n_vertices; ++v) {
        const bool in_a = member(ea, v) && !member(eb, v);
        const bool in_b = member(eb, v) && !member(ea, v);
        if (in_a) {
            int prev = 0;
            for (int u = 0; u < v; ++u) prev = std::max(prev, ending_b[static_cast<std::size_t>(u)]);
            ending_a[static_cast<std::size_t>(v)] = prev + 1;
        }
        if (in_b) {
            int prev = 0;
            for (int u = 0; u < v; ++u) prev = std::max(prev, ending_a[static_cast<std::size_t>(u)]);
            if (prev > 0) ending_b[static_cast<std::size_t>(v)] = prev + 1;
        }
        best = std::max({best, ending_a[static_cast<std::size_t>(v)], ending_b[static_cast<std::size_t>(v)]});
    }
    return best;
}

// Exhaustive induced-pattern search over all row and column tuples, in
// lexicographic (rows, cols) order.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> contains_naive(
    const BinaryMatrix& m, const BinaryMatrix& p) {
    if (p.n_rows() > m.n_rows() || p.n_cols() > m.n_cols()) return std::nullopt;
    std::vector<int> rsel(static_cast<std::size_t>(p.n_rows()));
    std::iota(rsel.begin(), rsel.end(), 0);
    auto next_comb = [](std::vector<int>& comb, int n) {
        const int k = static_cast<int>(comb.size());
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        return true;
    };
    do {
        std::vector<int> csel(static_cast<std::size_t>(p.n_cols()));
        std::iota(csel.begin(), csel.end(), 0);
        do {
            bool ok = true;
            for (int a = 0; a < p.n_rows() && ok; ++a)
                for (int b = 0; b < p.n_cols() && ok; ++b)
                    if (m.get(rsel[static_cast<std::size_t>(a)], csel[static_cast<std::size_t>(b)]) != p.get(a, b))
                        ok = false;
            if (ok) return std::make_pair(rsel, csel);
        } while (next_comb(csel, m.n_cols()));
    } while (next_comb(rsel, m.n_rows()));
    return std::nullopt;
}

// Largest k x k all-equal block by flat enumeration of row subsets.
inline int brute_homog(const BinaryMatrix& m) {
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m.n_rows()); ++mask) {
        std::vector<int> rows;
        for (int r = 0; r < m.n_rows(); ++r)
            if (mask >> r & 1) rows.push_back(r);
        if (rows.empty()) continue;
        for (int value = 0; value <= 1; ++value) {
            int cols = 0;
            for (int c = 0; c < m.n_cols(); ++c) {
                bool all = true;
                for (int r : rows)
                    if (m.get(r, c) != (value == 1)) {
                        all = false;
                        break;
                    }
                cols += all ? 1 : 0;
            }
            best = std::max(best, std::min(static_cast<int>(rows.size()), cols));
        }
    }
    return best;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// (a): some vertex order is alternation-free.
inline bool free_some_vertex_order(const OrderedHypergraph& h, int t) {
    for (const auto& perm : all_permutations(h.n_vertices))
        if (altfree::is_free_ordered(altfree::apply_vertex_order(h, perm), t).is_free) return true;
    return false;
}

// (b): some row permutation avoids both X(t) and Xp(t).
inline bool free_some_row_perm(const BinaryMatrix& m, int t) {
    for (const auto& perm : all_permutations(m.n_rows())) {
        const BinaryMatrix pm = m.permuted_rows(perm);
        if (!altfree::contains_pattern(pm, Pattern::X(t)) && !altfree::contains_pattern(pm, Pattern::Xp(t)))
            return true;
    }
    return false;
}

// (c): some row and column permutation avoids X(t-1).
inline bool free_some_rowcol_perm(const BinaryMatrix& m, int t) {
    const Pattern p = Pattern::X(t - 1);
    for (const auto& rperm : all_permutations(m.n_rows())) {
        const BinaryMatrix pm = m.permuted_rows(rperm);
        for (const auto& cperm : all_permutations(m.n_cols()))
            if (!altfree::contains_pattern(pm.permuted_cols(cperm), p)) return true;
    }
    return false;
}

// Every row and column permutation pair, looking for one avoiding XT(t-1).
inline bool dual_free_naive(const OrderedHypergraph& h, int t) {
    const BinaryMatrix m = altfree::incidence(h);
    const Pattern p = Pattern::XT(t - 1);
    for (const auto& rperm : all_permutations(m.n_rows())) {
        const BinaryMatrix pm = m.permuted_rows(rperm);
        for (const auto& cperm : all_permutations(m.n_cols()))
            if (!altfree::contains_pattern(pm.permuted_cols(cperm), p)) return true;
    }
    return false;
}

inline bool colorable_naive(const OrderedHypergraph& h, int colors, int min_size) {
    std::vector<int> assign(static_cast<std::size_t>(h.n_vertices), 0);
    while (true) {
        bool ok = true;
        for (const auto& e : h.edges) {
            if (static_cast<int>(e.size()) < min_size) continue;
            bool mixed = false;
            for (std::size_t i = 1; i < e.size(); ++i)
                if (assign[static_cast<std::size_t>(e[i])] != assign[static_cast<std::size_t>(e[0])]) mixed = true;
            if (!mixed) ok = false;
        }
        if (ok) return true;
        int i = h.n_vertices - 1;
        while (i >= 0 && assign[static_cast<std::size_t>(i)] == colors - 1) assign[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) return false;
        ++assign[static_cast<std::size_t>(i)];
    }
}

inline bool hitting_naive(const OrderedHypergraph& h, int depth) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << h.n_vertices); ++mask) {
        bool ok = true;
        for (const auto& e : h.edges) {
            int hits = 0;
            for (int v : e) hits += mask >> v & 1;
            if (hits < 1 || hits > depth) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

inline OrderedHypergraph random_hypergraph(std::mt19937_64& rng, int max_n, int max_m) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
    const int m = static_cast<int>(rng() % static_cast<std::uint64_t>(max_m + 1));
    std::vector<std::vector<int>> edges;
    for (int e = 0; e < m; ++e) {
        std::vector<int> edge;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) edge.push_back(v);
        edges.push_back(std::move(edge));
    }
    return altfree::make_hypergraph(n, std::move(edges));
}

// Small edges on few vertices: a mix where unordered non-freeness at t=3
// actually occurs, unlike uniform random subsets.
inline OrderedHypergraph dense_hypergraph(std::mt19937_64& rng, int max_m = 5) {
    const int n = 4 + static_cast<int>(rng() % 3);
    std::vector<std::vector<int>> edges;
    for (int e = 0; e < max_m; ++e) {
        const int size = 2 + static_cast<int>(rng() % 2);
        std::vector<int> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        edges.emplace_back(pool.begin(), pool.begin() + size);
    }
    return altfree::make_hypergraph(n, std::move(edges));
}

inline BinaryMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    BinaryMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng() % 2) m.set(r, c, true);
    return m;
}

}  // namespace oracles
