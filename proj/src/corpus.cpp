#include "altfree/corpus.hpp"

#include <sstream>

#include "altfree/analysis.hpp"
#include "altfree/constructions.hpp"
#include "altfree/io.hpp"

namespace altfree {

namespace {

// The K4 incidence matrix ordered so that it avoids XT(3)
// (rows are vertices, columns the six graph edges).
constexpr const char* kK4 =
    "111000\n"
    "100011\n"
    "010101\n"
    "001110\n";

// Incidence matrix of the tree hypergraph H(2,3) under the canonical
// vertex and edge orders (rows are vertices).
constexpr const char* kM23 =
    "0011011\n"
    "1011000\n"
    "1000011\n"
    "0110000\n"
    "0101000\n"
    "0000110\n"
    "0000101\n";

// ABABA-free hypergraph on 9 vertices whose first hyperedge {2,4,6,8} has
// no unsplittable pair; each later row witnesses one pair (rows are
// hyperedges, columns are vertices).
constexpr const char* kCex1 =
    "010101010\n"
    "101001000\n"
    "100100110\n"
    "100100001\n"
    "111010010\n"
    "100001001\n"
    "010000101\n";

// ABABA-free hypergraph with no unsplittable triple in its first edge.
constexpr const char* kCex2 =
    "010101010\n"
    "100010010\n"
    "100001001\n"
    "100100001\n"
    "010010001\n";

// ABABAB-free hypergraph with no unsplittable triple in its first edge.
constexpr const char* kCex3 =
    "0101010101\n"
    "0010100001\n"
    "0010100001\n"
    "1010000100\n"
    "0001001010\n"
    "1010000100\n"
    "1000010010\n"
    "0100101000\n"
    "0100101000\n"
    "0110010010\n"
    "0001001010\n";

std::vector<CorpusClaim> split_witness_claims(int t, const std::vector<std::vector<int>>& labels) {
    std::vector<CorpusClaim> claims;
    for (std::size_t row = 0; row < labels.size(); ++row) {
        std::vector<int> subset;
        for (int v : labels[row]) subset.push_back(v - 1);  // labels are 1-based
        claims.push_back(ClaimSplitWitness{static_cast<int>(row) + 1, std::move(subset), t});
    }
    return claims;
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> corpus;

    {
        CorpusEntry e;
        e.name = "k4";
        e.matrix = parse_matrix(kK4);
        e.orientation = Orientation::rows_are_vertices;
        e.claims = {ClaimPatternFree{"X3T"}, ClaimColoring{3, 2, false}, ClaimColoring{4, 2, true},
                    ClaimDualFree{4}};
        corpus.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "m23";
        e.matrix = parse_matrix(kM23);
        e.orientation = Orientation::rows_are_vertices;
        e.claims = {ClaimMatchesTree{2, 3}, ClaimPatternFree{"X3T"}};
        corpus.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "cex1";
        e.matrix = parse_matrix(kCex1);
        e.orientation = Orientation::rows_are_edges;
        e.claims = {ClaimPatternFree{"X5T"}, ClaimPatternFree{"X5pT"}, ClaimOrderedFree{5},
                    ClaimNoUnsplittable{5, 0, 2}};
        for (auto& c : split_witness_claims(5, {{2, 4}, {2, 6}, {2, 8}, {4, 6}, {4, 8}, {6, 8}}))
            e.claims.push_back(std::move(c));
        corpus.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "cex2";
        e.matrix = parse_matrix(kCex2);
        e.orientation = Orientation::rows_are_edges;
        e.claims = {ClaimPatternFree{"X5T"}, ClaimPatternFree{"X5pT"}, ClaimOrderedFree{5},
                    ClaimNoUnsplittable{5, 0, 3}};
        for (auto& c : split_witness_claims(5, {{2, 4, 6}, {2, 4, 8}, {2, 6, 8}, {4, 6, 8}}))
            e.claims.push_back(std::move(c));
        corpus.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "cex3";
        e.matrix = parse_matrix(kCex3);
        e.orientation = Orientation::rows_are_edges;
        e.claims = {ClaimPatternFree{"X6T"}, ClaimPatternFree{"X6pT"}, ClaimOrderedFree{6},
                    ClaimNoUnsplittable{6, 0, 3}};
        for (auto& c : split_witness_claims(
                 6, {{2, 4, 6}, {2, 4, 8}, {2, 4, 10}, {2, 6, 8}, {2, 6, 10}, {2, 8, 10},
                     {4, 6, 8}, {4, 6, 10}, {4, 8, 10}, {6, 8, 10}}))
            e.claims.push_back(std::move(c));
        corpus.push_back(std::move(e));
    }
    return corpus;
}

}  // namespace

OrderedHypergraph CorpusEntry::hypergraph() const {
    return orientation == Orientation::rows_are_vertices ? from_incidence(matrix)
                                                         : from_incidence(matrix.transposed());
}

const std::vector<CorpusEntry>& reference_corpus() {
    static const std::vector<CorpusEntry> corpus = build_corpus();
    return corpus;
}

std::string describe_claim(const CorpusClaim& claim) {
    std::ostringstream os;
    std::visit(
        [&](const auto& c) {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, ClaimPatternFree>) {
                os << "contains_pattern(" << c.pattern << ") = none";
            } else if constexpr (std::is_same_v<C, ClaimOrderedFree>) {
                os << "is_free_ordered(t=" << c.t << ") free";
            } else if constexpr (std::is_same_v<C, ClaimNoUnsplittable>) {
                os << "unsplittable_subset(t=" << c.t << ", edge=" << c.edge + 1 << ", k=" << c.k
                   << ") = none";
            } else if constexpr (std::is_same_v<C, ClaimSplitWitness>) {
                os << "edge " << c.row + 1 << " splits {";
                for (std::size_t i = 0; i < c.subset.size(); ++i)
                    os << (i ? "," : "") << c.subset[i] + 1;
                os << "} at t=" << c.t;
            } else if constexpr (std::is_same_v<C, ClaimColoring>) {
                os << "proper_coloring(c=" << c.colors << ", m=" << c.min_size
                   << ") = " << (c.expect_some ? "some" : "none");
            } else if constexpr (std::is_same_v<C, ClaimDualFree>) {
                os << "is_dual_free(t=" << c.t << ") = some";
            } else if constexpr (std::is_same_v<C, ClaimMatchesTree>) {
                os << "matrix = incidence(build_tree(" << c.a << "," << c.b << "))";
            }
        },
        claim);
    return os.str();
}

namespace {

bool check_claim(const CorpusEntry& entry, const CorpusClaim& claim, const SearchBudget& budget) {
    const OrderedHypergraph h = entry.hypergraph();
    return std::visit(
        [&](const auto& c) -> bool {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, ClaimPatternFree>) {
                auto p = Pattern::by_name(c.pattern);
                return p && !contains_pattern(entry.matrix, *p).has_value();
            } else if constexpr (std::is_same_v<C, ClaimOrderedFree>) {
                return is_free_ordered(h, c.t).is_free;
            } else if constexpr (std::is_same_v<C, ClaimNoUnsplittable>) {
                return !unsplittable_subset(h, c.t, c.edge, c.k).has_value();
            } else if constexpr (std::is_same_v<C, ClaimSplitWitness>) {
                OrderedHypergraph extended = h;
                extended.edges.push_back(c.subset);
                extended = make_hypergraph(extended.n_vertices, std::move(extended.edges));
                const int added = static_cast<int>(extended.edges.size()) - 1;
                return alternation_length(extended, c.row, added) >= c.t ||
                       alternation_length(extended, added, c.row) >= c.t;
            } else if constexpr (std::is_same_v<C, ClaimColoring>) {
                auto r = proper_coloring(h, c.colors, c.min_size, budget);
                return c.expect_some ? r.found() : r.none();
            } else if constexpr (std::is_same_v<C, ClaimDualFree>) {
                return is_dual_free(h, c.t, budget).found();
            } else if constexpr (std::is_same_v<C, ClaimMatchesTree>) {
                return entry.matrix == incidence(build_tree(c.a, c.b));
            }
        },
        claim);
}

}  // namespace

std::vector<ClaimOutcome> verify_corpus_entry(const CorpusEntry& entry, const SearchBudget& budget) {
    std::vector<ClaimOutcome> out;
    for (const auto& claim : entry.claims)
        out.push_back(ClaimOutcome{describe_claim(claim), check_claim(entry, claim, budget)});
    return out;
}

}  // namespace altfree
