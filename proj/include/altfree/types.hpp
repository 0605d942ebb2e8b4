#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace altfree {

/// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Malformed witness: wrong variant, out-of-range indices, wrong shape.
/// Distinct from a well-formed witness that simply fails to certify
/// (verify_witness returns false for those).
class WitnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed-length bit vector; the working representation of vertex sets
/// and matrix rows.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

    int size() const { return n_; }

    bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool any() const;
    int count() const;

    /// First set index >= from, or -1.
    int next_set(int from) const;

    Bits operator&(const Bits& o) const;
    Bits operator|(const Bits& o) const;
    Bits and_not(const Bits& o) const;

    bool operator==(const Bits&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Rectangular 0/1 matrix with row-major bit storage. Row and column
/// order are semantically meaningful: they encode vertex and hyperedge
/// orderings.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int n_rows, int n_cols);

    /// Rows given as strings of '0'/'1', all the same length.
    static BinaryMatrix from_rows(const std::vector<std::string>& rows);

    int n_rows() const { return rows_; }
    int n_cols() const { return cols_; }

    bool get(int r, int c) const {
        return (bits_[static_cast<std::size_t>(r) * words_ + (static_cast<std::size_t>(c) >> 6)] >>
                (c & 63)) &
               1;
    }
    void set(int r, int c, bool v);

    BinaryMatrix transposed() const;

    /// order[k] = index of the original row/column placed at position k.
    BinaryMatrix permuted_rows(const std::vector<int>& order) const;
    BinaryMatrix permuted_cols(const std::vector<int>& order) const;

    std::vector<std::string> to_strings() const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::size_t words_ = 0;  // 64-bit words per row
    std::vector<std::uint64_t> bits_;
};

/// Hypergraph on vertices 0..n_vertices-1 whose index order IS the vertex
/// order. Edges are sorted vertex lists; duplicate hyperedges are allowed
/// and meaningful, empty edges are allowed in storage (operations state
/// their own preconditions).
struct OrderedHypergraph {
    int n_vertices = 0;
    std::vector<std::vector<int>> edges;

    bool operator==(const OrderedHypergraph&) const = default;
};

/// Validates vertex ranges and sorts each edge. Rejects a vertex repeated
/// within one edge.
OrderedHypergraph make_hypergraph(int n_vertices, std::vector<std::vector<int>> edges);

/// Rows = vertices in index order, columns = edges in list order,
/// entry 1 iff the vertex lies in the edge.
BinaryMatrix incidence(const OrderedHypergraph& h);

/// Inverse of incidence: columns become edges.
OrderedHypergraph from_incidence(const BinaryMatrix& m);

/// Relabels vertices so that order[k] moves to index k. order must be a
/// permutation of 0..n-1.
OrderedHypergraph apply_vertex_order(const OrderedHypergraph& h, const std::vector<int>& order);

/// Drops repeated hyperedges keeping first occurrences (set semantics are
/// an explicit opt-in, never the default).
OrderedHypergraph dedupe_edges(const OrderedHypergraph& h);

/// One membership mask per edge.
std::vector<Bits> edge_masks(const OrderedHypergraph& h);

/// A small matrix sought as an induced (order-preserving, exact-entry)
/// submatrix, plus the named alternating family:
///   X(t)   t x 2, row i (1-based) = (0,1) for odd i, (1,0) for even i
///   Xp(t)  X(t) with the two columns swapped
///   XT(t), XpT(t)  their transposes
struct Pattern {
    BinaryMatrix matrix;
    std::string name;

    static Pattern X(int t);
    static Pattern Xp(int t);
    static Pattern XT(int t);
    static Pattern XpT(int t);

    /// Parses names like "X3", "X3p", "X3T", "X3pT".
    static std::optional<Pattern> by_name(const std::string& name);
};

// Witness certificates. All indices are 0-based internally; file formats
// and printed output are 1-based.
struct AlternationWitness {
    std::vector<int> vertices;  // a_1, b_1, a_2, ... strictly increasing

    bool operator==(const AlternationWitness&) const = default;
};

struct PatternWitness {
    std::vector<int> rows;
    std::vector<int> cols;

    bool operator==(const PatternWitness&) const = default;
};

struct ColoringWitness {
    std::vector<int> colors;  // colors[v] in 0..c-1

    bool operator==(const ColoringWitness&) const = default;
};

struct HittingSetWitness {
    std::vector<int> vertices;  // sorted

    bool operator==(const HittingSetWitness&) const = default;
};

struct OrderingWitness {
    std::vector<int> vertex_order;  // empty = absent
    std::vector<int> edge_order;    // empty = absent

    bool operator==(const OrderingWitness&) const = default;
};

using Witness =
    std::variant<AlternationWitness, PatternWitness, ColoringWitness, HittingSetWitness, OrderingWitness>;

}  // namespace altfree
