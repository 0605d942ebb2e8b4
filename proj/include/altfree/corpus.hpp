#pragma once

#include <string>
#include <variant>
#include <vector>

#include "altfree/search.hpp"
#include "altfree/types.hpp"

namespace altfree {

enum class Orientation { rows_are_vertices, rows_are_edges };

// Machine-checkable claims attached to a corpus entry.

/// contains_pattern(matrix, by_name(pattern)) == none.
struct ClaimPatternFree {
    std::string pattern;
};

/// is_free_ordered(hypergraph, t) is free.
struct ClaimOrderedFree {
    int t;
};

/// unsplittable_subset(hypergraph, t, edge, k) == none.
struct ClaimNoUnsplittable {
    int t;
    int edge;
    int k;
};

/// Appending `subset` as a hyperedge makes edges[row] alternate >= t
/// against it: the row witnesses the subset's splittability.
struct ClaimSplitWitness {
    int row;                  // 0-based edge index
    std::vector<int> subset;  // 0-based vertices
    int t;
};

/// proper_coloring(hypergraph, colors, min_size) found/none as expected.
struct ClaimColoring {
    int colors;
    int min_size;
    bool expect_some;
};

/// is_dual_free(hypergraph, t) finds orderings.
struct ClaimDualFree {
    int t;
};

/// matrix == incidence(build_tree(a, b)) bit for bit.
struct ClaimMatchesTree {
    int a;
    int b;
};

using CorpusClaim = std::variant<ClaimPatternFree, ClaimOrderedFree, ClaimNoUnsplittable,
                                 ClaimSplitWitness, ClaimColoring, ClaimDualFree, ClaimMatchesTree>;

struct CorpusEntry {
    std::string name;
    BinaryMatrix matrix;
    Orientation orientation;
    std::vector<CorpusClaim> claims;

    /// The hypergraph the matrix encodes (vertices = rows or columns
    /// depending on orientation).
    OrderedHypergraph hypergraph() const;
};

/// The five embedded reference matrices: k4, m23, cex1, cex2, cex3.
const std::vector<CorpusEntry>& reference_corpus();

struct ClaimOutcome {
    std::string description;
    bool ok;
};

std::string describe_claim(const CorpusClaim& claim);
std::vector<ClaimOutcome> verify_corpus_entry(const CorpusEntry& entry,
                                              const SearchBudget& budget = {});

}  // namespace altfree
