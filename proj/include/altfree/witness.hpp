#pragma once

#include <variant>

#include "altfree/types.hpp"

namespace altfree {

// Claims a witness can certify. The object the claim is about is passed
// separately to verify_witness.

/// edges[edge_a] and edges[edge_b] form an (AB)^{t/2}-sequence of length t.
struct AlternationClaim {
    int edge_a;
    int edge_b;
    int t;
};

/// The matrix contains the pattern as an induced submatrix.
struct PatternClaim {
    Pattern pattern;
};

/// A c-coloring in which every edge of size >= min_size is non-monochromatic.
struct ColoringClaim {
    int colors;
    int min_size;
};

/// A vertex set meeting every edge in at least 1 and at most depth vertices.
struct HittingClaim {
    int depth;
};

/// A vertex order under which the hypergraph is (AB)^{t/2}-free.
struct FreeOrderClaim {
    int t;
};

/// Row and column orders under which the incidence matrix avoids XT(t-1).
struct DualFreeClaim {
    int t;
};

using Claim =
    std::variant<AlternationClaim, PatternClaim, ColoringClaim, HittingClaim, FreeOrderClaim, DualFreeClaim>;

/// True iff the witness certifies the claim about the object. Throws
/// WitnessError on a malformed witness (wrong variant, out-of-range or
/// non-increasing indices, wrong shape) instead of returning false.
bool verify_witness(const OrderedHypergraph& h, const Claim& claim, const Witness& w);
bool verify_witness(const BinaryMatrix& m, const Claim& claim, const Witness& w);

}  // namespace altfree
