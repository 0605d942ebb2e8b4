#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "altfree/types.hpp"

namespace altfree {

struct FreenessReport {
    bool is_free = true;
    int t = 0;
    std::optional<AlternationWitness> witness;  // length-t alternation when not free
    int edge_a = -1;                            // offending ordered pair
    int edge_b = -1;
};

struct HomogeneousBlock {
    std::vector<int> rows;
    std::vector<int> cols;  // |rows| == |cols|
    int value = 0;
    bool exact = true;
};

/// Maximum t such that edges i and j form an (AB)^{t/2}-sequence: the
/// longest strictly increasing vertex sequence alternating A\B, B\A, ...
/// starting in A\B (A = edges[i], B = edges[j]). 0 if A\B is empty.
/// Single greedy left-to-right scan; taking the earliest admissible vertex
/// is optimal.
int alternation_length(const OrderedHypergraph& h, int i, int j);

/// The greedy (lexicographically least, maximum-length) alternating
/// sequence itself.
std::vector<int> alternation_sequence(const OrderedHypergraph& h, int i, int j);

/// Free iff every ordered edge pair alternates fewer than t times. On
/// failure the report carries a length-t alternation for the first
/// offending pair in lexicographic (i, j) order.
FreenessReport is_free_ordered(const OrderedHypergraph& h, int t);

/// Lexicographically least induced occurrence of the pattern, by
/// (row tuple, column tuple), or nullopt. Entries must match exactly,
/// zeros included.
std::optional<PatternWitness> contains_pattern(const BinaryMatrix& m, const Pattern& p);

struct LexSortResult {
    BinaryMatrix matrix;
    std::vector<int> perm;  // perm[k] = original index of column now at k
};

/// Stable sort of the columns as top-to-bottom bit strings, largest first:
/// A precedes B iff the topmost row where they differ has 1 in A and 0 in
/// B. Identical columns keep their relative order. Applied to an X(t)- and
/// Xp(t)-free matrix the result is X(t-1)-free.
LexSortResult lex_sort_columns(const BinaryMatrix& m);

/// Roles of vertices and hyperedges reversed:
/// incidence(dualize(h)) == incidence(h) transposed. An involution.
OrderedHypergraph dualize(const OrderedHypergraph& h);

/// Largest s <= cap such that some s-subset of vertices is shattered by
/// the edge traces; 0 if no set of size >= 1 is shattered. Exhaustive
/// over subsets, intended for small instances.
int vc_dimension(const OrderedHypergraph& h, int cap);

/// Largest k x k all-0 or all-1 block (rows and columns need not be
/// contiguous). Exact branch-and-bound when the smaller dimension is at
/// most exact_limit, otherwise a greedy lower bound flagged non-exact.
HomogeneousBlock max_homogeneous_square(const BinaryMatrix& m, int exact_limit = 16);

}  // namespace altfree
