#include "qts/map_search.hpp"

#include <gtest/gtest.h>

#include "qts/assets.hpp"
#include "qts/errors.hpp"
#include "qts/qasm.hpp"
#include "support/oracles.hpp"

using namespace qts;

namespace {

MapSearchProblem teleport_problem(std::vector<Edge> candidates, std::size_t budget) {
    return MapSearchProblem{parse_qasm(assets::teleport_qasm), std::move(candidates), budget};
}

}  // namespace

TEST(DeriveKnapsack, ProfitRules) {
    EXPECT_EQ(derive_knapsack(teleport_problem({{1, 2}}, 6)).profits, (std::vector<double>{1.0}));
    EXPECT_EQ(derive_knapsack(teleport_problem({{2, 1}}, 6)).profits, (std::vector<double>{0.5}));
    EXPECT_EQ(derive_knapsack(teleport_problem({{3, 4}}, 6)).profits, (std::vector<double>{0.0}));

    // the reverse edge earns nothing once the CX's own direction is a candidate
    auto const both = derive_knapsack(teleport_problem({{1, 2}, {2, 1}, {1, 0}}, 2));
    EXPECT_EQ(both.profits, (std::vector<double>{1.0, 0.0, 0.5}));
    EXPECT_EQ(both.weights, (std::vector<double>{1.0, 1.0, 1.0}));
    EXPECT_DOUBLE_EQ(both.max_capacity, 2.0);
}

TEST(DeriveKnapsack, RejectsBadCandidates) {
    EXPECT_THROW(derive_knapsack(teleport_problem(all_directed_pairs(6), 6)), SizeError);
    EXPECT_THROW(derive_knapsack(teleport_problem({{1, 1}}, 6)), FormatError);
    EXPECT_THROW(derive_knapsack(teleport_problem({{0, 1}, {0, 1}}, 6)), FormatError);
}

TEST(Decode, SelectsInCandidateOrder) {
    auto const problem = teleport_problem({{0, 1}, {1, 2}, {3, 4}}, 6);
    EXPECT_TRUE(decode(CandidateSolution{{0, 0, 0}}, problem).empty());
    EXPECT_EQ(decode(CandidateSolution{{1, 0, 1}}, problem).to_string(), "[[0, 1], [3, 4]]");
    EXPECT_EQ(decode(CandidateSolution{{1, 1, 1}}, problem).to_string(), "[[0, 1], [1, 2], [3, 4]]");
    EXPECT_THROW(decode(CandidateSolution{{1}}, problem), ShapeError);
    EXPECT_EQ(encode(decode(CandidateSolution{{1, 0, 1}}, problem), problem), (CandidateSolution{{1, 0, 1}}));
}

TEST(ScoreSelection, PaperMapsScoreEqually) {
    auto const problem = teleport_problem(all_directed_pairs(5), 6);
    auto const b = score_selection(encode(parse_coupling_map(assets::map_b), problem), problem);
    auto const c = score_selection(encode(parse_coupling_map(assets::map_c), problem), problem);
    EXPECT_DOUBLE_EQ(b.score, 2.0);
    EXPECT_DOUBLE_EQ(c.score, 2.0);
    EXPECT_EQ(b.support, (SupportCount{2, 0, 0}));
    EXPECT_EQ(c.support, (SupportCount{2, 0, 0}));
    ASSERT_TRUE(c.routing.has_value());
    EXPECT_EQ(c.routing->swap_count, 0U);
    EXPECT_DOUBLE_EQ(oracle::exhaustive_optimum(derive_knapsack(problem)), 2.0);
}

TEST(Prune, DropsEdgesThatAddNothing) {
    KnapsackInstance const instance{{1.0, 0.0, 1.0, 0.0}, {1.0, 1.0, 1.0, 1.0}, 6.0};
    EXPECT_EQ(prune_selection(CandidateSolution{{1, 1, 1, 1}}, instance), (CandidateSolution{{1, 0, 1, 0}}));
    KnapsackInstance const zero_budget{{1.0, 1.0}, {1.0, 1.0}, 0.0};
    EXPECT_EQ(prune_selection(CandidateSolution{{1, 0}}, zero_budget), (CandidateSolution{{0, 0}}));
}

TEST(SearchBestMap, TeleportGetsBothEdges) {
    auto const problem = teleport_problem(all_directed_pairs(5), 6);
    SearchConfig config;
    config.seed = 1;
    auto const best = search_best_map(problem, config);
    EXPECT_DOUBLE_EQ(best.score, 2.0);
    EXPECT_EQ(best.support.unsupported, 0U);
    ASSERT_TRUE(best.routing.has_value());
    EXPECT_EQ(best.routing->swap_count, 0U);
    EXPECT_DOUBLE_EQ(fitness(derive_knapsack(problem), best.selection), best.score);
    // decoded maps satisfy the map invariants by construction
    EXPECT_NO_THROW(CouplingMap(best.map.n_physical(), best.map.edges()));
}

TEST(SearchBestMap, ZeroBudgetGivesEmptyMap) {
    auto const problem = teleport_problem(all_directed_pairs(5), 0);
    SearchConfig config;
    config.seed = 2;
    config.max_iterations = 100;
    auto const best = search_best_map(problem, config);
    EXPECT_TRUE(best.map.empty());
    EXPECT_DOUBLE_EQ(best.score, 0.0);
    EXPECT_FALSE(best.routing.has_value());
}

TEST(SearchBestMap, GenerousBudgetCollectsAllCircuitEdges) {
    auto const circuit = parse_qasm("qreg q[4]; cx q[0],q[1]; cx q[2],q[3]; cx q[3],q[0]; cx q[0],q[1];");
    MapSearchProblem const problem{circuit, all_directed_pairs(4), 3};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SearchConfig config;
        config.seed = seed;
        auto const best = search_best_map(problem, config);
        EXPECT_DOUBLE_EQ(best.score, 4.0);
        ASSERT_TRUE(best.routing.has_value());
        EXPECT_EQ(best.routing->swap_count, 0U);
    }
}
