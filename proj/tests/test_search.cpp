#include <doctest.h>

#include <numeric>
#include <random>

#include "altfree/analysis.hpp"
#include "altfree/constructions.hpp"
#include "altfree/corpus.hpp"
#include "altfree/search.hpp"
#include "altfree/types.hpp"
#include "altfree/witness.hpp"
#include "oracles.hpp"

using namespace altfree;

namespace {

const CorpusEntry& entry(const std::string& name) {
    for (const auto& e : reference_corpus())
        if (e.name == name) return e;
    throw std::runtime_error("missing corpus entry " + name);
}

OrderedHypergraph k4_edges() {
    return make_hypergraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("find_free_ordering finds and proves") {
    // K3: every difference set has size 1, any order works.
    const auto k3 = make_hypergraph(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto r = find_free_ordering(k3, 3);
    REQUIRE(r.found());
    CHECK(*r.value == std::vector<int>{0, 1, 2});

    // K4 admits no ABA-free order: some pair always straddles a vertex.
    CHECK(find_free_ordering(k4_edges(), 3).none());

    // relabeled cex1 is still ABABA-free in some order
    auto h = entry("cex1").hypergraph();
    std::vector<int> relabel(static_cast<std::size_t>(h.n_vertices));
    std::iota(relabel.begin(), relabel.end(), 0);
    std::mt19937_64 rng(5);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    const auto scrambled = apply_vertex_order(h, relabel);
    const auto found = find_free_ordering(scrambled, 5);
    REQUIRE(found.found());
    CHECK(is_free_ordered(apply_vertex_order(scrambled, *found.value), 5).is_free);
    CHECK(verify_witness(scrambled, FreeOrderClaim{5}, Witness{OrderingWitness{*found.value, {}}}));
}

TEST_CASE("find_free_ordering budget outcome is explicit") {
    SearchBudget tiny;
    tiny.node_limit = 3;
    const auto r = find_free_ordering(entry("cex1").hypergraph(), 5, tiny);
    CHECK(r.exhausted_budget());
    CHECK(!r.value.has_value());
}

TEST_CASE("find_free_ordering agrees with full enumeration") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 120; ++it) {
        const auto h = oracles::random_hypergraph(rng, 6, 4);
        for (int t = 3; t <= 4; ++t) {
            const auto r = find_free_ordering(h, t);
            REQUIRE(!r.exhausted_budget());
            CHECK(r.found() == oracles::free_some_vertex_order(h, t));
            if (r.found()) CHECK(is_free_ordered(apply_vertex_order(h, *r.value), t).is_free);
        }
    }
}

TEST_CASE("is_dual_free on the corpus hypergraphs") {
    const auto tree = entry("m23").hypergraph();
    const auto r = is_dual_free(tree, 4);
    REQUIRE(r.found());
    CHECK(verify_witness(tree, DualFreeClaim{4},
                         Witness{OrderingWitness{r.value->row_order, r.value->col_order}}));

    CHECK(is_dual_free(k4_edges(), 4).found());

    // dual of K4 at t=3 is K4's ABA-freeness question: impossible
    CHECK(is_dual_free(dualize(k4_edges()), 3).none());
}

TEST_CASE("is_dual_free agrees with the row/column permutation oracle") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 40; ++it) {
        const auto h = oracles::random_hypergraph(rng, 5, 4);
        for (int t = 3; t <= 4; ++t) {
            const auto r = is_dual_free(h, t);
            REQUIRE(!r.exhausted_budget());
            CHECK(r.found() == oracles::dual_free_naive(h, t));
        }
    }
}

TEST_CASE("proper_coloring basics") {
    const auto t22 = build_tree(2, 2);
    CHECK(proper_coloring(t22, 2, 2).none());
    const auto c3 = proper_coloring(t22, 3, 2);
    REQUIRE(c3.found());
    CHECK(verify_witness(t22, ColoringClaim{3, 2}, Witness{ColoringWitness{*c3.value}}));

    // vacuous threshold: the all-zero coloring is returned first
    const auto vac = proper_coloring(make_hypergraph(3, {{0, 1, 2}}), 2, 4);
    REQUIRE(vac.found());
    CHECK(*vac.value == std::vector<int>{0, 0, 0});

    // a singleton edge below the threshold is unconstrained, at it impossible
    const auto single = make_hypergraph(2, {{0}});
    CHECK(proper_coloring(single, 2, 2).found());
    CHECK(proper_coloring(single, 2, 1).none());
}

TEST_CASE("proper_coloring agrees with enumeration and is monotone in the threshold") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 150; ++it) {
        const auto h = oracles::random_hypergraph(rng, 6, 5);
        for (int c = 2; c <= 3; ++c) {
            bool prev = false;
            for (int m = 1; m <= 4; ++m) {
                const auto r = proper_coloring(h, c, m);
                REQUIRE(!r.exhausted_budget());
                CHECK(r.found() == oracles::colorable_naive(h, c, m));
                if (r.found())
                    CHECK(verify_witness(h, ColoringClaim{c, m}, Witness{ColoringWitness{*r.value}}));
                CHECK((!prev || r.found()));  // larger threshold can only help
                prev = r.found();
            }
        }
    }
}

TEST_CASE("shallow_hitting_set basics") {
    const auto single = make_hypergraph(3, {{0, 1, 2}});
    const auto r = shallow_hitting_set(single, 1);
    REQUIRE(r.found());
    CHECK(*r.value == std::vector<int>{0});

    CHECK_THROWS_AS(shallow_hitting_set(make_hypergraph(2, {{}}), 1), std::invalid_argument);

    CHECK(shallow_hitting_set(build_prefix_union(6, 3), 2).found());
    CHECK(shallow_hitting_set(build_tree(3, 3), 2).none());
}

TEST_CASE("shallow_hitting_set agrees with enumeration; a hit set 2-colors") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 150; ++it) {
        auto h = oracles::random_hypergraph(rng, 6, 5);
        // drop empty edges: unhittable by definition
        std::erase_if(h.edges, [](const std::vector<int>& e) { return e.empty(); });
        for (int c = 1; c <= 2; ++c) {
            const auto r = shallow_hitting_set(h, c);
            REQUIRE(!r.exhausted_budget());
            CHECK(r.found() == oracles::hitting_naive(h, c));
            if (r.found()) {
                CHECK(verify_witness(h, HittingClaim{c}, Witness{HittingSetWitness{*r.value}}));
                // V' against its complement properly 2-colors edges of size >= c+1
                std::vector<int> coloring(static_cast<std::size_t>(h.n_vertices), 0);
                for (int v : *r.value) coloring[static_cast<std::size_t>(v)] = 1;
                CHECK(verify_witness(h, ColoringClaim{2, c + 1}, Witness{ColoringWitness{coloring}}));
            }
        }
    }
}

TEST_CASE("unsplittable subsets on the counterexamples") {
    CHECK(!unsplittable_subset(entry("cex1").hypergraph(), 5, 0, 2).has_value());
    CHECK(!unsplittable_subset(entry("cex2").hypergraph(), 5, 0, 3).has_value());
    CHECK(!unsplittable_subset(entry("cex3").hypergraph(), 6, 0, 3).has_value());

    CHECK_THROWS_AS(unsplittable_subset(entry("cex1").hypergraph(), 5, 9, 2), std::invalid_argument);
    CHECK_THROWS_AS(unsplittable_subset(entry("cex1").hypergraph(), 5, 0, 5), std::invalid_argument);
}

TEST_CASE("ABAB-free hypergraphs: singletons are always safe, pairs always exist") {
    std::mt19937_64 rng(53);
    int tested_edges = 0;
    for (int it = 0; it < 60; ++it) {
        // grow a random ABAB-free hypergraph edge by edge
        const int n = 4 + static_cast<int>(rng() % 5);
        OrderedHypergraph h{n, {}};
        for (int tries = 0; tries < 12; ++tries) {
            std::vector<int> e;
            for (int v = 0; v < n; ++v)
                if (rng() % 2) e.push_back(v);
            if (e.empty()) continue;
            h.edges.push_back(e);
            if (!is_free_ordered(h, 4).is_free) h.edges.pop_back();
        }
        for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
            CHECK(unsplittable_subset(h, 4, e, 1).has_value());
            if (h.edges[static_cast<std::size_t>(e)].size() >= 2)
                CHECK(unsplittable_subset(h, 4, e, 2).has_value());
            ++tested_edges;
        }
    }
    CHECK(tested_edges > 50);
}

TEST_CASE("max_free_uniform_count matches the exact formula") {
    const auto a = max_free_uniform_count(4, 2, 4);
    REQUIRE(a.found());
    CHECK(a.value->count == 5);
    CHECK(is_free_ordered(OrderedHypergraph{4, a.value->edges}, 4).is_free);

    const auto b = max_free_uniform_count(5, 2, 4);
    REQUIRE(b.found());
    CHECK(b.value->count == 7);

    const auto c = max_free_uniform_count(6, 3, 6);
    REQUIRE(c.found());
    CHECK(c.value->count == 19);
    CHECK(c.value->edges.size() == 19);
    CHECK(is_free_ordered(OrderedHypergraph{6, c.value->edges}, 6).is_free);
}

TEST_CASE("max_free_uniform_count follows the binomial formula at k = t/2") {
    auto choose = [](int n, int k) {
        if (k < 0 || k > n) return 0LL;
        long long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int n = 4; n <= 8; ++n) {
        const auto r = max_free_uniform_count(n, 2, 4);
        REQUIRE(r.found());
        CHECK(r.value->count == choose(n, 2) - choose(n - 2, 2));
    }
    for (int n = 6; n <= 7; ++n) {
        const auto r = max_free_uniform_count(n, 3, 6);
        REQUIRE(r.found());
        CHECK(r.value->count == choose(n, 3) - choose(n - 3, 3));
    }
}

TEST_CASE("max_free_uniform_count respects budgets") {
    SearchBudget tiny;
    tiny.node_limit = 2;
    CHECK(max_free_uniform_count(6, 3, 6, tiny).exhausted_budget());
}

TEST_CASE("max_free_uniform_count equals brute force over edge families") {
    for (const auto& [n, k] : {std::pair{4, 2}, {5, 2}, {4, 3}}) {
        std::vector<std::vector<int>> candidates;
        std::vector<int> comb(static_cast<std::size_t>(k));
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            candidates.push_back(comb);
            int i = k - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
        for (int t = 3; t <= 4; ++t) {
            int best = 0;
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << candidates.size()); ++mask) {
                std::vector<std::vector<int>> edges;
                for (std::size_t i = 0; i < candidates.size(); ++i)
                    if (mask >> i & 1) edges.push_back(candidates[i]);
                if (is_free_ordered(OrderedHypergraph{n, edges}, t).is_free)
                    best = std::max(best, static_cast<int>(edges.size()));
            }
            const auto r = max_free_uniform_count(n, k, t);
            REQUIRE(r.found());
            CHECK(r.value->count == best);
        }
    }
}

TEST_CASE("fast mode restricts the root but still finds orderings") {
    const auto k3 = make_hypergraph(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto fast = find_free_ordering(k3, 3, {}, true);
    REQUIRE(fast.found());
    CHECK(is_free_ordered(apply_vertex_order(k3, *fast.value), 3).is_free);

    const auto cex1 = entry("cex1").hypergraph();
    const auto normal = find_free_ordering(cex1, 5);
    REQUIRE(normal.found());
}
