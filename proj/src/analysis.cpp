#include "altfree/analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace altfree {

namespace {

void check_edge_index(const OrderedHypergraph& h, int i) {
    if (i < 0 || i >= static_cast<int>(h.edges.size()))
        throw std::invalid_argument("edge index " + std::to_string(i) + " out of range");
}

std::vector<int> greedy_alternation(const Bits& a_only, const Bits& b_only) {
    std::vector<int> seq;
    int pos = 0;
    bool need_a = true;
    while (true) {
        const int v = (need_a ? a_only : b_only).next_set(pos);
        if (v < 0) break;
        seq.push_back(v);
        pos = v + 1;
        need_a = !need_a;
    }
    return seq;
}

}  // namespace

std::vector<int> alternation_sequence(const OrderedHypergraph& h, int i, int j) {
    check_edge_index(h, i);
    check_edge_index(h, j);
    if (i == j) throw std::invalid_argument("alternation needs two distinct edge indices");
    Bits a(h.n_vertices), b(h.n_vertices);
    for (int v : h.edges[static_cast<std::size_t>(i)]) a.set(v);
    for (int v : h.edges[static_cast<std::size_t>(j)]) b.set(v);
    return greedy_alternation(a.and_not(b), b.and_not(a));
}

int alternation_length(const OrderedHypergraph& h, int i, int j) {
    return static_cast<int>(alternation_sequence(h, i, j).size());
}

FreenessReport is_free_ordered(const OrderedHypergraph& h, int t) {
    if (t < 1) throw std::invalid_argument("alternation bound must be at least 1");
    FreenessReport rep;
    rep.t = t;
    const auto masks = edge_masks(h);
    const int m = static_cast<int>(masks.size());
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            auto seq = greedy_alternation(masks[static_cast<std::size_t>(i)].and_not(masks[static_cast<std::size_t>(j)]),
                                          masks[static_cast<std::size_t>(j)].and_not(masks[static_cast<std::size_t>(i)]));
            if (static_cast<int>(seq.size()) >= t) {
                seq.resize(static_cast<std::size_t>(t));
                rep.is_free = false;
                rep.witness = AlternationWitness{std::move(seq)};
                rep.edge_a = i;
                rep.edge_b = j;
                return rep;
            }
        }
    }
    return rep;
}

namespace {

// Lexicographically least columns c_0 < ... < c_{q-1} matching the first
// k pattern rows on the chosen matrix rows (subsequence greedy).
std::optional<std::vector<int>> greedy_cols(const BinaryMatrix& m, const std::vector<int>& rows, int k,
                                            const BinaryMatrix& p) {
    const int q = p.n_cols();
    std::vector<int> cols;
    cols.reserve(static_cast<std::size_t>(q));
    int c = 0;
    for (int b = 0; b < q; ++b) {
        for (;; ++c) {
            if (c > m.n_cols() - (q - b)) return std::nullopt;
            bool ok = true;
            for (int a = 0; a < k; ++a) {
                if (m.get(rows[static_cast<std::size_t>(a)], c) != p.get(a, b)) {
                    ok = false;
                    break;
                }
            }
            if (ok) break;
        }
        cols.push_back(c);
        ++c;
    }
    return cols;
}

// Lexicographically least rows matching the whole pattern on fixed columns.
std::optional<std::vector<int>> greedy_rows(const BinaryMatrix& m, const std::vector<int>& cols,
                                            const BinaryMatrix& p) {
    const int pr = p.n_rows();
    std::vector<int> rows;
    rows.reserve(static_cast<std::size_t>(pr));
    int r = 0;
    for (int a = 0; a < pr; ++a) {
        for (;; ++r) {
            if (r > m.n_rows() - (pr - a)) return std::nullopt;
            bool ok = true;
            for (int b = 0; b < p.n_cols(); ++b) {
                if (m.get(r, cols[static_cast<std::size_t>(b)]) != p.get(a, b)) {
                    ok = false;
                    break;
                }
            }
            if (ok) break;
        }
        rows.push_back(r);
        ++r;
    }
    return rows;
}

// DFS over row tuples in lexicographic order; a partial tuple survives only
// if some column tuple matches the pattern prefix on the chosen rows. The
// first complete match is the lexicographically least (rows, cols) witness.
bool row_dfs(const BinaryMatrix& m, const BinaryMatrix& p, std::vector<int>& rows, int start,
             PatternWitness& out) {
    const int k = static_cast<int>(rows.size());
    auto cols = greedy_cols(m, rows, k, p);
    if (!cols) return false;
    if (k == p.n_rows()) {
        out.rows = rows;
        out.cols = *cols;
        return true;
    }
    for (int r = start; r <= m.n_rows() - (p.n_rows() - k); ++r) {
        rows.push_back(r);
        if (row_dfs(m, p, rows, r + 1, out)) return true;
        rows.pop_back();
    }
    return false;
}

}  // namespace

std::optional<PatternWitness> contains_pattern(const BinaryMatrix& m, const Pattern& pat) {
    const BinaryMatrix& p = pat.matrix;
    const int pr = p.n_rows(), pc = p.n_cols();
    if (pr > m.n_rows() || pc > m.n_cols()) return std::nullopt;
    if (pr == 0 || pc == 0) {
        // No entry constraints: the least index tuples match vacuously.
        PatternWitness w;
        for (int r = 0; r < pr; ++r) w.rows.push_back(r);
        for (int c = 0; c < pc; ++c) w.cols.push_back(c);
        return w;
    }

    if (pc <= 2 && pr > pc) {
        // Tall pattern: scan column tuples, keep the least (rows, cols).
        std::optional<PatternWitness> best;
        std::vector<int> cols(static_cast<std::size_t>(pc));
        auto consider = [&]() {
            auto rows = greedy_rows(m, cols, p);
            if (!rows) return;
            if (!best || *rows < best->rows || (*rows == best->rows && cols < best->cols))
                best = PatternWitness{*rows, cols};
        };
        if (pc == 1) {
            for (cols[0] = 0; cols[0] < m.n_cols(); ++cols[0]) consider();
        } else {
            for (cols[0] = 0; cols[0] < m.n_cols(); ++cols[0])
                for (cols[1] = cols[0] + 1; cols[1] < m.n_cols(); ++cols[1]) consider();
        }
        return best;
    }

    PatternWitness out;
    std::vector<int> rows;
    if (row_dfs(m, p, rows, 0, out)) return out;
    return std::nullopt;
}

LexSortResult lex_sort_columns(const BinaryMatrix& m) {
    std::vector<int> perm(static_cast<std::size_t>(m.n_cols()));
    for (int c = 0; c < m.n_cols(); ++c) perm[static_cast<std::size_t>(c)] = c;
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        // 1 before 0 at the topmost differing row: in the sorted matrix the
        // first difference of a column pair sits above any X(t-1) copy they
        // hold and extends it to an X'(t).
        for (int r = 0; r < m.n_rows(); ++r) {
            const bool x = m.get(r, a), y = m.get(r, b);
            if (x != y) return x;
        }
        return false;
    });
    return LexSortResult{m.permuted_cols(perm), std::move(perm)};
}

OrderedHypergraph dualize(const OrderedHypergraph& h) {
    return from_incidence(incidence(h).transposed());
}

int vc_dimension(const OrderedHypergraph& h, int cap) {
    if (cap > h.n_vertices) throw std::invalid_argument("cap exceeds vertex count");
    const auto masks = edge_masks(h);
    const std::size_t m = masks.size();
    for (int s = std::min(cap, h.n_vertices); s >= 1; --s) {
        // A shattered s-set needs 2^s distinct traces, so at least 2^s edges.
        if (s >= 63 || (std::uint64_t{1} << s) > m) continue;
        const std::uint64_t full =
            (s >= 6) ? ~std::uint64_t{0} : (std::uint64_t{1} << (1 << s)) - 1;
        std::vector<int> comb(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) comb[static_cast<std::size_t>(i)] = i;
        while (true) {
            if (s <= 6) {
                std::uint64_t seen = 0;
                for (const auto& em : masks) {
                    int trace = 0;
                    for (int i = 0; i < s; ++i)
                        if (em.test(comb[static_cast<std::size_t>(i)])) trace |= 1 << i;
                    seen |= std::uint64_t{1} << trace;
                    if (seen == full) break;
                }
                if (seen == full) return s;
            } else {
                std::unordered_set<std::uint32_t> seen;
                for (const auto& em : masks) {
                    std::uint32_t trace = 0;
                    for (int i = 0; i < s; ++i)
                        if (em.test(comb[static_cast<std::size_t>(i)])) trace |= std::uint32_t{1} << i;
                    seen.insert(trace);
                }
                if (seen.size() == (std::size_t{1} << s)) return s;
            }
            // next s-combination of 0..n-1
            int i = s - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == h.n_vertices - s + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return 0;
}

namespace {

struct HomogSearch {
    const std::vector<Bits>* row_masks;  // per row: columns holding `value`
    int n_rows = 0;
    int best = 0;
    std::vector<int> best_rows;
    Bits best_cols;

    void dfs(int next, std::vector<int>& chosen, const Bits& cols) {
        const int have = std::min(static_cast<int>(chosen.size()), cols.count());
        if (have > best) {
            best = have;
            best_rows = chosen;
            best_cols = cols;
        }
        if (next >= n_rows) return;
        // Upper bound: all remaining rows added, columns can only shrink.
        if (std::min(static_cast<int>(chosen.size()) + (n_rows - next), cols.count()) <= best) return;
        chosen.push_back(next);
        dfs(next + 1, chosen, cols & (*row_masks)[static_cast<std::size_t>(next)]);
        chosen.pop_back();
        dfs(next + 1, chosen, cols);
    }
};

std::vector<Bits> value_masks(const BinaryMatrix& m, int value) {
    std::vector<Bits> masks(static_cast<std::size_t>(m.n_rows()), Bits(m.n_cols()));
    for (int r = 0; r < m.n_rows(); ++r)
        for (int c = 0; c < m.n_cols(); ++c)
            if (m.get(r, c) == (value == 1)) masks[static_cast<std::size_t>(r)].set(c);
    return masks;
}

HomogeneousBlock solve_exact(const BinaryMatrix& m) {
    HomogeneousBlock block;
    block.exact = true;
    for (int value = 0; value <= 1; ++value) {
        const auto masks = value_masks(m, value);
        HomogSearch s;
        s.row_masks = &masks;
        s.n_rows = m.n_rows();
        Bits all(m.n_cols());
        for (int c = 0; c < m.n_cols(); ++c) all.set(c);
        std::vector<int> chosen;
        s.dfs(0, chosen, all);
        if (s.best > static_cast<int>(block.rows.size())) {
            block.value = value;
            block.rows.assign(s.best_rows.begin(), s.best_rows.begin() + s.best);
            block.cols.clear();
            for (int c = s.best_cols.next_set(0); c >= 0 && static_cast<int>(block.cols.size()) < s.best;
                 c = s.best_cols.next_set(c + 1))
                block.cols.push_back(c);
        }
    }
    return block;
}

HomogeneousBlock solve_greedy(const BinaryMatrix& m) {
    HomogeneousBlock block;
    block.exact = false;
    for (int value = 0; value <= 1; ++value) {
        const auto masks = value_masks(m, value);
        std::vector<char> used(static_cast<std::size_t>(m.n_rows()), 0);
        Bits cols(m.n_cols());
        for (int c = 0; c < m.n_cols(); ++c) cols.set(c);
        std::vector<int> rows;
        for (int step = 0; step < m.n_rows(); ++step) {
            int pick = -1, pick_count = -1;
            for (int r = 0; r < m.n_rows(); ++r) {
                if (used[static_cast<std::size_t>(r)]) continue;
                const int cnt = (cols & masks[static_cast<std::size_t>(r)]).count();
                if (cnt > pick_count) {
                    pick = r;
                    pick_count = cnt;
                }
            }
            if (pick < 0 || pick_count == 0) break;
            used[static_cast<std::size_t>(pick)] = 1;
            rows.push_back(pick);
            cols = cols & masks[static_cast<std::size_t>(pick)];
            const int k = std::min(static_cast<int>(rows.size()), cols.count());
            if (k > static_cast<int>(block.rows.size())) {
                block.value = value;
                block.rows.assign(rows.begin(), rows.begin() + k);
                std::sort(block.rows.begin(), block.rows.end());
                block.cols.clear();
                for (int c = cols.next_set(0); c >= 0 && static_cast<int>(block.cols.size()) < k;
                     c = cols.next_set(c + 1))
                    block.cols.push_back(c);
            }
        }
    }
    return block;
}

HomogeneousBlock transpose_block(HomogeneousBlock b) {
    std::swap(b.rows, b.cols);
    return b;
}

}  // namespace

HomogeneousBlock max_homogeneous_square(const BinaryMatrix& m, int exact_limit) {
    if (m.n_rows() == 0 || m.n_cols() == 0) return HomogeneousBlock{{}, {}, 0, true};
    const bool flip = m.n_rows() > m.n_cols();
    const BinaryMatrix work = flip ? m.transposed() : m;
    const bool exact = work.n_rows() <= exact_limit;
    HomogeneousBlock block = exact ? solve_exact(work) : solve_greedy(work);
    return flip ? transpose_block(std::move(block)) : block;
}

}  // namespace altfree
