#include "altfree/witness.hpp"

#include <algorithm>

#include "altfree/analysis.hpp"

namespace altfree {

namespace {

void require(bool cond, const char* message) {
    if (!cond) throw WitnessError(message);
}

void check_strictly_increasing(const std::vector<int>& v, int upper, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        require(v[i] >= 0 && v[i] < upper, "witness index out of range");
        if (i > 0) require(v[i] > v[i - 1], what);
    }
}

void check_perm(const std::vector<int>& v, int n, const char* what) {
    require(static_cast<int>(v.size()) == n, what);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int x : v) {
        require(x >= 0 && x < n, "witness index out of range");
        require(!seen[static_cast<std::size_t>(x)], what);
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

bool verify_alternation(const OrderedHypergraph& h, const AlternationClaim& c, const Witness& w) {
    const auto* aw = std::get_if<AlternationWitness>(&w);
    require(aw != nullptr, "alternation claim needs an alternation witness");
    require(c.edge_a >= 0 && c.edge_a < static_cast<int>(h.edges.size()) && c.edge_b >= 0 &&
                c.edge_b < static_cast<int>(h.edges.size()) && c.edge_a != c.edge_b,
            "claim edge indices out of range");
    require(static_cast<int>(aw->vertices.size()) == c.t, "witness length differs from claimed t");
    check_strictly_increasing(aw->vertices, h.n_vertices, "witness vertices not strictly increasing");
    const auto& ea = h.edges[static_cast<std::size_t>(c.edge_a)];
    const auto& eb = h.edges[static_cast<std::size_t>(c.edge_b)];
    auto in = [](const std::vector<int>& e, int v) { return std::binary_search(e.begin(), e.end(), v); };
    for (std::size_t k = 0; k < aw->vertices.size(); ++k) {
        const int v = aw->vertices[k];
        const bool want_a = k % 2 == 0;  // a_1, b_1, a_2, ...
        if (want_a && !(in(ea, v) && !in(eb, v))) return false;
        if (!want_a && !(in(eb, v) && !in(ea, v))) return false;
    }
    return true;
}

bool verify_pattern(const BinaryMatrix& m, const PatternClaim& c, const Witness& w) {
    const auto* pw = std::get_if<PatternWitness>(&w);
    require(pw != nullptr, "pattern claim needs a pattern witness");
    const BinaryMatrix& p = c.pattern.matrix;
    require(static_cast<int>(pw->rows.size()) == p.n_rows(), "witness row count differs from pattern");
    require(static_cast<int>(pw->cols.size()) == p.n_cols(), "witness column count differs from pattern");
    check_strictly_increasing(pw->rows, m.n_rows(), "witness rows not strictly increasing");
    check_strictly_increasing(pw->cols, m.n_cols(), "witness columns not strictly increasing");
    for (int a = 0; a < p.n_rows(); ++a)
        for (int b = 0; b < p.n_cols(); ++b)
            if (m.get(pw->rows[static_cast<std::size_t>(a)], pw->cols[static_cast<std::size_t>(b)]) !=
                p.get(a, b))
                return false;
    return true;
}

bool verify_coloring(const OrderedHypergraph& h, const ColoringClaim& c, const Witness& w) {
    const auto* cw = std::get_if<ColoringWitness>(&w);
    require(cw != nullptr, "coloring claim needs a coloring witness");
    require(static_cast<int>(cw->colors.size()) == h.n_vertices, "coloring length differs from vertex count");
    for (int x : cw->colors) require(x >= 0 && x < c.colors, "color value out of range");
    for (const auto& e : h.edges) {
        if (static_cast<int>(e.size()) < c.min_size) continue;
        bool mixed = false;
        for (std::size_t i = 1; i < e.size(); ++i) {
            if (cw->colors[static_cast<std::size_t>(e[i])] != cw->colors[static_cast<std::size_t>(e[0])]) {
                mixed = true;
                break;
            }
        }
        if (!mixed) return false;  // covers size-1 edges, which can never be mixed
    }
    return true;
}

bool verify_hitting(const OrderedHypergraph& h, const HittingClaim& c, const Witness& w) {
    const auto* hw = std::get_if<HittingSetWitness>(&w);
    require(hw != nullptr, "hitting claim needs a hitting-set witness");
    check_strictly_increasing(hw->vertices, h.n_vertices, "hitting set not sorted");
    Bits sel(h.n_vertices);
    for (int v : hw->vertices) sel.set(v);
    for (const auto& e : h.edges) {
        int hits = 0;
        for (int v : e)
            if (sel.test(v)) ++hits;
        if (hits < 1 || hits > c.depth) return false;
    }
    return true;
}

bool verify_free_order(const OrderedHypergraph& h, const FreeOrderClaim& c, const Witness& w) {
    const auto* ow = std::get_if<OrderingWitness>(&w);
    require(ow != nullptr, "ordering claim needs an ordering witness");
    check_perm(ow->vertex_order, h.n_vertices, "vertex order is not a permutation");
    if (!ow->edge_order.empty())
        check_perm(ow->edge_order, static_cast<int>(h.edges.size()), "edge order is not a permutation");
    return is_free_ordered(apply_vertex_order(h, ow->vertex_order), c.t).is_free;
}

bool verify_dual_free(const OrderedHypergraph& h, const DualFreeClaim& c, const Witness& w) {
    const auto* ow = std::get_if<OrderingWitness>(&w);
    require(ow != nullptr, "dual-freeness claim needs an ordering witness");
    require(c.t >= 2, "dual-freeness needs t >= 2");
    check_perm(ow->vertex_order, h.n_vertices, "row order is not a permutation");
    check_perm(ow->edge_order, static_cast<int>(h.edges.size()), "column order is not a permutation");
    const BinaryMatrix m =
        incidence(h).permuted_rows(ow->vertex_order).permuted_cols(ow->edge_order);
    return !contains_pattern(m, Pattern::XT(c.t - 1)).has_value();
}

}  // namespace

bool verify_witness(const OrderedHypergraph& h, const Claim& claim, const Witness& w) {
    return std::visit(
        [&](const auto& c) -> bool {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, AlternationClaim>) return verify_alternation(h, c, w);
            else if constexpr (std::is_same_v<C, ColoringClaim>) return verify_coloring(h, c, w);
            else if constexpr (std::is_same_v<C, HittingClaim>) return verify_hitting(h, c, w);
            else if constexpr (std::is_same_v<C, FreeOrderClaim>) return verify_free_order(h, c, w);
            else if constexpr (std::is_same_v<C, DualFreeClaim>) return verify_dual_free(h, c, w);
            else {
                throw WitnessError("pattern claims certify matrices, not hypergraphs");
                return false;
            }
        },
        claim);
}

bool verify_witness(const BinaryMatrix& m, const Claim& claim, const Witness& w) {
    const auto* pc = std::get_if<PatternClaim>(&claim);
    if (pc == nullptr) throw WitnessError("only pattern claims certify matrices");
    return verify_pattern(m, *pc, w);
}

}  // namespace altfree
