#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "altfree/types.hpp"

namespace altfree {

struct SearchBudget {
    std::uint64_t node_limit = 100'000'000;
    double time_limit_s = 60.0;
    int parallel_width = 1;
};

enum class SearchStatus { found, none, budget_exhausted };

/// Exceeding a budget yields an explicit budget_exhausted outcome, never a
/// silent none: a completed `none` is always exhaustive.
template <typename T>
struct SearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<T> value;
    std::uint64_t nodes = 0;

    bool found() const { return status == SearchStatus::found; }
    bool none() const { return status == SearchStatus::none; }
    bool exhausted_budget() const { return status == SearchStatus::budget_exhausted; }
};

/// Some vertex permutation under which the hypergraph is (AB)^{t/2}-free,
/// else none (complete search). Backtracks over order prefixes, pruning as
/// soon as some edge pair already alternates t times within the prefix.
/// Deterministic: vertices are tried in ascending index, the first
/// ordering in DFS order is returned. With fast=true the first position is
/// restricted to smallest vertices of largest edges, which narrows the
/// search but is only a heuristic: a fast `none` is not exhaustive.
SearchResult<std::vector<int>> find_free_ordering(const OrderedHypergraph& h, int t,
                                                  const SearchBudget& budget = {}, bool fast = false);

struct DualOrderings {
    std::vector<int> row_order;  // over vertices of h (rows of incidence(h))
    std::vector<int> col_order;  // over edges of h  (columns of incidence(h))
};

/// Row and column orders of incidence(h) avoiding XT(t-1), else none.
/// Implemented as find_free_ordering on the dual, converted through
/// lex_sort_columns; the result is re-verified before it is returned.
SearchResult<DualOrderings> is_dual_free(const OrderedHypergraph& h, int t,
                                         const SearchBudget& budget = {});

/// Vertex coloring with c colors in which every edge of size >= min_size
/// contains two colors; none if a complete search proves impossibility.
SearchResult<std::vector<int>> proper_coloring(const OrderedHypergraph& h, int colors, int min_size,
                                               const SearchBudget& budget = {});

/// Vertex set meeting every edge in at least 1 and at most depth vertices,
/// else none. Throws if the hypergraph has an empty edge (unhittable).
SearchResult<std::vector<int>> shallow_hitting_set(const OrderedHypergraph& h, int depth,
                                                   const SearchBudget& budget = {});

/// A k-subset S of edges[edge] that can be appended as a new hyperedge
/// with every alternation against the existing edges staying below t,
/// under the fixed identity vertex order. nullopt if every k-subset is
/// splittable.
std::optional<std::vector<int>> unsplittable_subset(const OrderedHypergraph& h, int t, int edge, int k);

struct UniformFamily {
    int count = 0;
    std::vector<std::vector<int>> edges;  // a witness family achieving count
};

/// Maximum number of distinct k-subsets of an n-set forming an
/// (AB)^{t/2}-free hypergraph under the identity vertex order (which is
/// without loss of generality). Branch-and-bound over candidate edges in
/// lexicographic order with pairwise-conflict pruning.
SearchResult<UniformFamily> max_free_uniform_count(int n, int k, int t,
                                                   const SearchBudget& budget = {});

}  // namespace altfree
