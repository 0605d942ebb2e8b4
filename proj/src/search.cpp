#include "altfree/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "altfree/analysis.hpp"

namespace altfree {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
    std::uint64_t node_limit;
    Clock::time_point deadline;
    std::uint64_t nodes = 0;
    bool out = false;

    explicit BudgetState(const SearchBudget& b)
        : node_limit(b.node_limit),
          deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(b.time_limit_s))) {}

    // True while within budget; checks the clock sparingly.
    bool tick() {
        if (out) return false;
        ++nodes;
        if (nodes > node_limit || ((nodes & 1023) == 0 && Clock::now() > deadline)) out = true;
        return !out;
    }
};

template <typename T>
SearchResult<T> finish(SearchStatus status, std::optional<T> value, const BudgetState& b) {
    return SearchResult<T>{status, std::move(value), b.nodes};
}

struct OrderingSearch {
    const OrderedHypergraph& h;
    int t;
    std::vector<Bits> masks;
    int m;
    std::vector<int> pair_len;  // greedy alternation length within the prefix
    std::vector<char> used;
    std::vector<int> order;
    std::vector<int> root_candidates;  // nonempty only in fast mode
    BudgetState budget;
    std::optional<std::vector<int>> found;

    OrderingSearch(const OrderedHypergraph& hg, int bound, const SearchBudget& b, bool fast)
        : h(hg), t(bound), masks(edge_masks(hg)), m(static_cast<int>(hg.edges.size())),
          pair_len(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0),
          used(static_cast<std::size_t>(hg.n_vertices), 0), budget(b) {
        if (fast) {
            std::size_t largest = 0;
            for (const auto& e : hg.edges) largest = std::max(largest, e.size());
            for (const auto& e : hg.edges)
                if (!e.empty() && e.size() == largest) root_candidates.push_back(e.front());
            std::sort(root_candidates.begin(), root_candidates.end());
            root_candidates.erase(std::unique(root_candidates.begin(), root_candidates.end()),
                                  root_candidates.end());
        }
    }

    // Appends v to the prefix, extending each ordered pair's greedy scan.
    // Returns false (after recording changes) if some pair reaches t.
    bool place(int v, std::vector<std::pair<int, int>>& changed) {
        bool alive = true;
        for (int i = 0; i < m; ++i) {
            const bool in_i = masks[static_cast<std::size_t>(i)].test(v);
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                const bool in_j = masks[static_cast<std::size_t>(j)].test(v);
                if (in_i == in_j) continue;
                const int idx = i * m + j;
                const int len = pair_len[static_cast<std::size_t>(idx)];
                // even length: the scan wants an A\B vertex next; odd: B\A.
                const bool extends = (len % 2 == 0) ? (in_i && !in_j) : (in_j && !in_i);
                if (!extends) continue;
                changed.emplace_back(idx, len);
                pair_len[static_cast<std::size_t>(idx)] = len + 1;
                if (len + 1 >= t) alive = false;
            }
        }
        return alive;
    }

    void undo(const std::vector<std::pair<int, int>>& changed) {
        for (auto [idx, len] : changed) pair_len[static_cast<std::size_t>(idx)] = len;
    }

    SearchStatus dfs(int pos) {
        if (pos == h.n_vertices) {
            found = order;
            return SearchStatus::found;
        }
        const bool restrict_root = pos == 0 && !root_candidates.empty();
        for (int v = 0; v < h.n_vertices; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (restrict_root &&
                !std::binary_search(root_candidates.begin(), root_candidates.end(), v))
                continue;
            if (!budget.tick()) return SearchStatus::budget_exhausted;
            std::vector<std::pair<int, int>> changed;
            const bool alive = place(v, changed);
            if (alive) {
                used[static_cast<std::size_t>(v)] = 1;
                order.push_back(v);
                const SearchStatus st = dfs(pos + 1);
                order.pop_back();
                used[static_cast<std::size_t>(v)] = 0;
                if (st != SearchStatus::none) {
                    undo(changed);
                    return st;
                }
            }
            undo(changed);
        }
        return SearchStatus::none;
    }
};

}  // namespace

SearchResult<std::vector<int>> find_free_ordering(const OrderedHypergraph& h, int t,
                                                  const SearchBudget& budget, bool fast) {
    if (t < 1) throw std::invalid_argument("alternation bound must be at least 1");
    OrderingSearch s(h, t, budget, fast);
    const SearchStatus st = s.dfs(0);
    return finish(st, std::move(s.found), s.budget);
}

SearchResult<DualOrderings> is_dual_free(const OrderedHypergraph& h, int t,
                                         const SearchBudget& budget) {
    if (t < 2) throw std::invalid_argument("dual freeness needs t >= 2");
    const OrderedHypergraph dual = dualize(h);
    auto r = find_free_ordering(dual, t, budget);
    if (!r.found()) return SearchResult<DualOrderings>{r.status, std::nullopt, r.nodes};

    // The free order of the dual fixes the column order of incidence(h);
    // the column sort of the reordered dual matrix supplies the row order
    // and drops the forbidden length from t to t-1.
    const std::vector<int>& col_order = *r.value;
    const BinaryMatrix dual_m = incidence(apply_vertex_order(dual, col_order));
    LexSortResult sorted = lex_sort_columns(dual_m);
    DualOrderings out{std::move(sorted.perm), col_order};

    const BinaryMatrix check = incidence(h).permuted_rows(out.row_order).permuted_cols(out.col_order);
    if (contains_pattern(check, Pattern::XT(t - 1)))
        throw std::logic_error("internal error: dual ordering failed verification");
    return SearchResult<DualOrderings>{SearchStatus::found, std::move(out), r.nodes};
}

namespace {

struct ColoringSearch {
    const OrderedHypergraph& h;
    int colors;
    std::vector<const std::vector<int>*> constrained;  // edges of size >= min_size
    std::vector<std::vector<int>> edges_of;            // vertex -> constrained edge ids
    std::vector<int> edge_size, colored, first_color;
    std::vector<char> mixed;
    std::vector<int> assignment;
    BudgetState budget;
    std::optional<std::vector<int>> found;

    ColoringSearch(const OrderedHypergraph& hg, int c, int min_size, const SearchBudget& b)
        : h(hg), colors(c), edges_of(static_cast<std::size_t>(hg.n_vertices)),
          assignment(static_cast<std::size_t>(hg.n_vertices), -1), budget(b) {
        for (const auto& e : hg.edges) {
            if (static_cast<int>(e.size()) < min_size) continue;
            const int id = static_cast<int>(constrained.size());
            constrained.push_back(&e);
            edge_size.push_back(static_cast<int>(e.size()));
            for (int v : e) edges_of[static_cast<std::size_t>(v)].push_back(id);
        }
        colored.assign(constrained.size(), 0);
        first_color.assign(constrained.size(), -1);
        mixed.assign(constrained.size(), 0);
    }

    SearchStatus dfs(int v) {
        if (v == h.n_vertices) {
            found = assignment;
            return SearchStatus::found;
        }
        for (int x = 0; x < colors; ++x) {
            if (!budget.tick()) return SearchStatus::budget_exhausted;
            bool ok = true;
            std::vector<int> mixed_set;
            for (int e : edges_of[static_cast<std::size_t>(v)]) {
                ++colored[static_cast<std::size_t>(e)];
                if (colored[static_cast<std::size_t>(e)] == 1) {
                    first_color[static_cast<std::size_t>(e)] = x;
                } else if (!mixed[static_cast<std::size_t>(e)] &&
                           first_color[static_cast<std::size_t>(e)] != x) {
                    mixed[static_cast<std::size_t>(e)] = 1;
                    mixed_set.push_back(e);
                }
                // completing an edge monochromatically forces a different
                // color on its last vertex, i.e. rejects this one
                if (colored[static_cast<std::size_t>(e)] == edge_size[static_cast<std::size_t>(e)] &&
                    !mixed[static_cast<std::size_t>(e)])
                    ok = false;
            }
            if (ok) {
                assignment[static_cast<std::size_t>(v)] = x;
                const SearchStatus st = dfs(v + 1);
                assignment[static_cast<std::size_t>(v)] = -1;
                if (st != SearchStatus::none) {
                    unassign(v, mixed_set);
                    return st;
                }
            }
            unassign(v, mixed_set);
        }
        return SearchStatus::none;
    }

    void unassign(int v, const std::vector<int>& mixed_set) {
        for (int e : edges_of[static_cast<std::size_t>(v)]) {
            if (--colored[static_cast<std::size_t>(e)] == 0) first_color[static_cast<std::size_t>(e)] = -1;
        }
        for (int e : mixed_set) mixed[static_cast<std::size_t>(e)] = 0;
    }
};

}  // namespace

SearchResult<std::vector<int>> proper_coloring(const OrderedHypergraph& h, int colors, int min_size,
                                               const SearchBudget& budget) {
    if (colors < 1) throw std::invalid_argument("need at least one color");
    if (min_size < 1) throw std::invalid_argument("minimum edge size must be at least 1");
    ColoringSearch s(h, colors, min_size, budget);
    const SearchStatus st = s.dfs(0);
    return finish(st, std::move(s.found), s.budget);
}

namespace {

struct HittingSearch {
    const OrderedHypergraph& h;
    int depth;
    std::vector<std::vector<int>> edges_of;
    std::vector<int> hits, undecided;
    std::vector<char> chosen;
    BudgetState budget;
    std::optional<std::vector<int>> found;

    HittingSearch(const OrderedHypergraph& hg, int c, const SearchBudget& b)
        : h(hg), depth(c), edges_of(static_cast<std::size_t>(hg.n_vertices)),
          hits(hg.edges.size(), 0), chosen(static_cast<std::size_t>(hg.n_vertices), 0), budget(b) {
        undecided.reserve(hg.edges.size());
        for (std::size_t e = 0; e < hg.edges.size(); ++e) {
            undecided.push_back(static_cast<int>(hg.edges[e].size()));
            for (int v : hg.edges[e]) edges_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
        }
    }

    SearchStatus dfs(int v) {
        if (v == h.n_vertices) {
            std::vector<int> set;
            for (int u = 0; u < h.n_vertices; ++u)
                if (chosen[static_cast<std::size_t>(u)]) set.push_back(u);
            found = std::move(set);
            return SearchStatus::found;
        }
        for (int take = 1; take >= 0; --take) {
            if (!budget.tick()) return SearchStatus::budget_exhausted;
            bool ok = true;
            for (int e : edges_of[static_cast<std::size_t>(v)]) {
                --undecided[static_cast<std::size_t>(e)];
                if (take) ++hits[static_cast<std::size_t>(e)];
                if (hits[static_cast<std::size_t>(e)] > depth) ok = false;
                if (hits[static_cast<std::size_t>(e)] == 0 && undecided[static_cast<std::size_t>(e)] == 0)
                    ok = false;
            }
            if (ok) {
                chosen[static_cast<std::size_t>(v)] = static_cast<char>(take);
                const SearchStatus st = dfs(v + 1);
                chosen[static_cast<std::size_t>(v)] = 0;
                if (st != SearchStatus::none) {
                    retract(v, take);
                    return st;
                }
            }
            retract(v, take);
        }
        return SearchStatus::none;
    }

    void retract(int v, int take) {
        for (int e : edges_of[static_cast<std::size_t>(v)]) {
            ++undecided[static_cast<std::size_t>(e)];
            if (take) --hits[static_cast<std::size_t>(e)];
        }
    }
};

}  // namespace

SearchResult<std::vector<int>> shallow_hitting_set(const OrderedHypergraph& h, int depth,
                                                   const SearchBudget& budget) {
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
    for (const auto& e : h.edges)
        if (e.empty()) throw std::invalid_argument("hypergraph has an empty hyperedge: unhittable");
    HittingSearch s(h, depth, budget);
    const SearchStatus st = s.dfs(0);
    return finish(st, std::move(s.found), s.budget);
}

namespace {

int greedy_len(const Bits& a_only, const Bits& b_only) {
    int len = 0, pos = 0;
    bool need_a = true;
    while (true) {
        const int v = (need_a ? a_only : b_only).next_set(pos);
        if (v < 0) return len;
        ++len;
        pos = v + 1;
        need_a = !need_a;
    }
}

}  // namespace

std::optional<std::vector<int>> unsplittable_subset(const OrderedHypergraph& h, int t, int edge, int k) {
    if (edge < 0 || edge >= static_cast<int>(h.edges.size()))
        throw std::invalid_argument("edge index out of range");
    const auto& host = h.edges[static_cast<std::size_t>(edge)];
    if (k < 1 || k > static_cast<int>(host.size()))
        throw std::invalid_argument("subset size must be between 1 and the edge size");
    if (t < 2) throw std::invalid_argument("alternation bound must be at least 2");

    const auto masks = edge_masks(h);
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
    const int sz = static_cast<int>(host.size());
    while (true) {
        Bits s(h.n_vertices);
        for (int i : comb) s.set(host[static_cast<std::size_t>(i)]);
        bool ok = true;
        for (const auto& f : masks) {
            if (greedy_len(s.and_not(f), f.and_not(s)) >= t ||
                greedy_len(f.and_not(s), s.and_not(f)) >= t) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<int> subset;
            subset.reserve(static_cast<std::size_t>(k));
            for (int i : comb) subset.push_back(host[static_cast<std::size_t>(i)]);
            return subset;
        }
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == sz - k + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    return std::nullopt;
}

namespace {

struct CliqueSearch {
    const std::vector<std::vector<std::uint64_t>>& adj;
    int n;
    std::size_t words;
    BudgetState budget;
    int best = 0;
    std::vector<int> best_set;
    std::vector<int> current;
    bool aborted = false;

    CliqueSearch(const std::vector<std::vector<std::uint64_t>>& a, int count, const SearchBudget& b)
        : adj(a), n(count), words(static_cast<std::size_t>((count + 63) / 64)), budget(b) {}

    static int popcount(const std::vector<std::uint64_t>& m) {
        int c = 0;
        for (auto w : m) c += std::popcount(w);
        return c;
    }

    void expand(std::vector<std::uint64_t> cand) {
        if (aborted) return;
        if (static_cast<int>(current.size()) > best) {
            best = static_cast<int>(current.size());
            best_set = current;
        }
        while (true) {
            if (static_cast<int>(current.size()) + popcount(cand) <= best) return;
            int v = -1;
            for (std::size_t w = 0; w < words; ++w) {
                if (cand[w]) {
                    v = static_cast<int>(w * 64) + std::countr_zero(cand[w]);
                    break;
                }
            }
            if (v < 0) return;
            if (!budget.tick()) {
                aborted = true;
                return;
            }
            cand[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
            std::vector<std::uint64_t> next(words);
            for (std::size_t w = 0; w < words; ++w)
                next[w] = cand[w] & adj[static_cast<std::size_t>(v)][w];
            current.push_back(v);
            expand(std::move(next));
            current.pop_back();
            if (aborted) return;
        }
    }
};

}  // namespace

SearchResult<UniformFamily> max_free_uniform_count(int n, int k, int t, const SearchBudget& budget) {
    if (k < 1 || k > n) throw std::invalid_argument("edge size must be between 1 and n");
    if (t < 2) throw std::invalid_argument("alternation bound must be at least 2");

    // All k-subsets of 0..n-1 in lexicographic order.
    std::vector<std::vector<int>> candidates;
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
    while (true) {
        candidates.push_back(comb);
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    const int count = static_cast<int>(candidates.size());
    if (count > 200000) throw std::invalid_argument("instance too large for exhaustive search");

    std::vector<Bits> masks;
    masks.reserve(candidates.size());
    for (const auto& c : candidates) {
        Bits b(n);
        for (int v : c) b.set(v);
        masks.push_back(std::move(b));
    }

    // Two candidate edges conflict iff they alternate t or more times.
    const std::size_t words = static_cast<std::size_t>((count + 63) / 64);
    std::vector<std::vector<std::uint64_t>> compat(static_cast<std::size_t>(count),
                                                   std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            const Bits& a = masks[static_cast<std::size_t>(i)];
            const Bits& b = masks[static_cast<std::size_t>(j)];
            if (greedy_len(a.and_not(b), b.and_not(a)) < t && greedy_len(b.and_not(a), a.and_not(b)) < t) {
                compat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) >> 6] |=
                    std::uint64_t{1} << (j & 63);
                compat[static_cast<std::size_t>(j)][static_cast<std::size_t>(i) >> 6] |=
                    std::uint64_t{1} << (i & 63);
            }
        }
    }

    CliqueSearch s(compat, count, budget);
    std::vector<std::uint64_t> all(words, 0);
    for (int i = 0; i < count; ++i) all[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    s.expand(std::move(all));
    if (s.aborted) return SearchResult<UniformFamily>{SearchStatus::budget_exhausted, std::nullopt, s.budget.nodes};

    UniformFamily fam;
    fam.count = s.best;
    std::sort(s.best_set.begin(), s.best_set.end());
    for (int i : s.best_set) fam.edges.push_back(candidates[static_cast<std::size_t>(i)]);
    return SearchResult<UniformFamily>{SearchStatus::found, std::move(fam), s.budget.nodes};
}

}  // namespace altfree
