#include <doctest.h>

#include <random>

#include "altfree/analysis.hpp"
#include "altfree/constructions.hpp"
#include "altfree/corpus.hpp"
#include "altfree/types.hpp"
#include "altfree/witness.hpp"
#include "oracles.hpp"

using namespace altfree;

TEST_CASE("incidence follows the definition") {
    const auto h = make_hypergraph(3, {{0, 1}, {2}});
    CHECK(incidence(h).to_strings() == std::vector<std::string>{"10", "10", "01"});

    const auto empty = make_hypergraph(2, {});
    CHECK(incidence(empty).n_rows() == 2);
    CHECK(incidence(empty).n_cols() == 0);
}

TEST_CASE("tree hypergraph H(2,3) reproduces the embedded matrix") {
    const auto& corpus = reference_corpus();
    const auto m23 = std::find_if(corpus.begin(), corpus.end(),
                                  [](const CorpusEntry& e) { return e.name == "m23"; });
    REQUIRE(m23 != corpus.end());
    CHECK(incidence(build_tree(2, 3)) == m23->matrix);
}

TEST_CASE("from_incidence inverts incidence") {
    CHECK(from_incidence(BinaryMatrix::from_rows({"10", "10", "01"})) ==
          make_hypergraph(3, {{0, 1}, {2}}));
    CHECK(from_incidence(BinaryMatrix()) == OrderedHypergraph{});

    const auto& corpus = reference_corpus();
    const auto m23 = std::find_if(corpus.begin(), corpus.end(),
                                  [](const CorpusEntry& e) { return e.name == "m23"; });
    const auto h = from_incidence(m23->matrix);
    CHECK(h.n_vertices == 7);
    CHECK(h.edges.size() == 7);
    int horizontals = 0, verticals = 0;
    for (const auto& e : h.edges) (e.size() == 2 ? horizontals : verticals)++;
    CHECK(horizontals == 3);  // H(2,3): 3 horizontal and 4 vertical edges
    CHECK(verticals == 4);
}

TEST_CASE("round trips on random instances") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        const auto h = oracles::random_hypergraph(rng, 8, 6);
        CHECK(from_incidence(incidence(h)) == h);
        const auto m = oracles::random_matrix(rng, 1 + static_cast<int>(rng() % 6),
                                              1 + static_cast<int>(rng() % 6));
        CHECK(incidence(from_incidence(m)) == m);
    }
}

TEST_CASE("hypergraph validation") {
    CHECK_THROWS_AS(make_hypergraph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hypergraph(2, {{-1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hypergraph(3, {{1, 1}}), std::invalid_argument);
    CHECK(make_hypergraph(3, {{2, 0}}).edges[0] == std::vector<int>{0, 2});
}

TEST_CASE("dedupe_edges keeps first occurrences") {
    const auto h = make_hypergraph(3, {{0, 1}, {2}, {0, 1}, {2}, {1}});
    CHECK(dedupe_edges(h) == make_hypergraph(3, {{0, 1}, {2}, {1}}));
}

TEST_CASE("named patterns") {
    CHECK(Pattern::X(3).matrix.to_strings() == std::vector<std::string>{"01", "10", "01"});
    CHECK(Pattern::Xp(3).matrix.to_strings() == std::vector<std::string>{"10", "01", "10"});
    CHECK(Pattern::XT(3).matrix.to_strings() == std::vector<std::string>{"010", "101"});
    CHECK(Pattern::XpT(5).matrix.to_strings() == std::vector<std::string>{"10101", "01010"});
    CHECK(Pattern::by_name("X4p")->matrix == Pattern::Xp(4).matrix);
    CHECK(Pattern::by_name("X2T")->matrix == Pattern::XT(2).matrix);
    CHECK(!Pattern::by_name("X0").has_value());
    CHECK(!Pattern::by_name("Y3").has_value());
    CHECK(!Pattern::by_name("X3Tp").has_value());
}

TEST_CASE("verify_witness: alternation claims") {
    // edges A={1,3}, B={2,4} under order 1<2<3<4 (0-based {0,2},{1,3})
    const auto h = make_hypergraph(4, {{0, 2}, {1, 3}});
    const Claim claim = AlternationClaim{0, 1, 4};
    CHECK(verify_witness(h, claim, Witness{AlternationWitness{{0, 1, 2, 3}}}));
    CHECK_THROWS_AS(verify_witness(h, claim, Witness{AlternationWitness{{0, 1, 3, 2}}}), WitnessError);
    CHECK_THROWS_AS(verify_witness(h, claim, Witness{AlternationWitness{{0, 1, 2, 7}}}), WitnessError);
    CHECK_THROWS_AS(verify_witness(h, claim, Witness{AlternationWitness{{0, 1, 2}}}), WitnessError);
    CHECK_THROWS_AS(verify_witness(h, claim, Witness{ColoringWitness{{0, 0, 0, 0}}}), WitnessError);
    // wrong membership is a well-formed but failing witness
    CHECK(!verify_witness(h, AlternationClaim{1, 0, 4}, Witness{AlternationWitness{{0, 1, 2, 3}}}));
}

TEST_CASE("verify_witness: pattern claims") {
    const auto m = BinaryMatrix::from_rows({"010", "101"});
    const Claim claim = PatternClaim{Pattern::XT(3)};
    CHECK(verify_witness(m, claim, Witness{PatternWitness{{0, 1}, {0, 1, 2}}}));
    CHECK_THROWS_AS(verify_witness(m, claim, Witness{PatternWitness{{0, 1}, {0, 1}}}), WitnessError);
    CHECK_THROWS_AS(verify_witness(m, claim, Witness{PatternWitness{{1, 0}, {0, 1, 2}}}), WitnessError);
    const auto h = make_hypergraph(2, {{0}});
    CHECK_THROWS_AS(verify_witness(h, claim, Witness{PatternWitness{{0, 1}, {0, 1, 2}}}), WitnessError);
}

TEST_CASE("verify_witness: colorings, hitting sets, orderings") {
    const auto h = make_hypergraph(3, {{0, 1}, {1, 2}});
    CHECK(verify_witness(h, ColoringClaim{2, 2}, Witness{ColoringWitness{{0, 1, 0}}}));
    CHECK(!verify_witness(h, ColoringClaim{2, 2}, Witness{ColoringWitness{{0, 0, 1}}}));
    CHECK_THROWS_AS(verify_witness(h, ColoringClaim{2, 2}, Witness{ColoringWitness{{0, 2, 0}}}),
                    WitnessError);

    CHECK(verify_witness(h, HittingClaim{1}, Witness{HittingSetWitness{{1}}}));
    CHECK(!verify_witness(h, HittingClaim{1}, Witness{HittingSetWitness{{0, 1}}}));
    CHECK_THROWS_AS(verify_witness(h, HittingClaim{1}, Witness{HittingSetWitness{{1, 1}}}), WitnessError);

    const auto pair = make_hypergraph(4, {{0, 2}, {1, 3}});
    CHECK(verify_witness(pair, FreeOrderClaim{4}, Witness{OrderingWitness{{0, 2, 1, 3}, {}}}));
    CHECK(!verify_witness(pair, FreeOrderClaim{4}, Witness{OrderingWitness{{0, 1, 2, 3}, {}}}));
    CHECK_THROWS_AS(verify_witness(pair, FreeOrderClaim{4}, Witness{OrderingWitness{{0, 1, 2}, {}}}),
                    WitnessError);
}
