#include <gtest/gtest.h>

#include "basket/apriori.hpp"
#include "basket/errors.hpp"
#include "support/paper_db.hpp"

namespace basket {
namespace {

// Grocery sample ids: Sugar=0, Wheat=1, Pulses=2, Rice=3.
constexpr ItemId S = 0, W = 1, P = 2, R = 3;

MiningParams support_of(double fraction) { return {fraction, 1.0, std::nullopt}; }

TEST(FrequentSingletons, GroceryThresholdThree) {
  const auto got = frequent_singletons(testing::grocery_db(), 3);
  const std::vector<FrequentItemset> want{{{S}, 4}, {{W}, 5}, {{P}, 6}, {{R}, 3}};
  EXPECT_EQ(got, want);
}

TEST(FrequentSingletons, NothingAppearsEverywhere) {
  EXPECT_TRUE(frequent_singletons(testing::grocery_db(), 7).empty());
}

TEST(FrequentSingletons, ThresholdOneKeepsEveryItem) {
  EXPECT_EQ(frequent_singletons(testing::grocery_db(), 1).size(), 4u);
  EXPECT_THROW(frequent_singletons(testing::grocery_db(), 0), ContractError);
}

TEST(CandidateGen, AllPairsFromSingletons) {
  const std::vector<FrequentItemset> level{{{S}, 4}, {{W}, 5}, {{P}, 6}, {{R}, 3}};
  const CandidateSet c = candidate_gen(level);
  EXPECT_EQ(c.k, 2u);
  const std::vector<ItemSet> want{{S, W}, {S, P}, {S, R}, {W, P}, {W, R}, {P, R}};
  EXPECT_EQ(c.candidates, want);
}

TEST(CandidateGen, GroceryPairsYieldNoTriples) {
  const std::vector<FrequentItemset> level{{{S, P}, 3}, {{W, P}, 4}, {{P, R}, 3}};
  EXPECT_TRUE(candidate_gen(level).candidates.empty());
}

TEST(CandidateGen, PrunesCandidatesWithInfrequentSubset) {
  // {0,1,2} joins from {0,1},{0,2} but {1,2} is missing.
  const std::vector<FrequentItemset> level{{{0, 1}, 1}, {{0, 2}, 1}, {{0, 3}, 1}, {{2, 3}, 1}};
  const CandidateSet c = candidate_gen(level);
  EXPECT_EQ(c.k, 3u);
  EXPECT_EQ(c.candidates, (std::vector<ItemSet>{{0, 2, 3}}));
}

TEST(CandidateGen, EmptyLevelIsFixpoint) {
  const CandidateSet c = candidate_gen({});
  EXPECT_TRUE(c.candidates.empty());
}

TEST(CandidateGen, MixedSizesAreContractViolation) {
  const std::vector<FrequentItemset> level{{{0}, 1}, {{0, 1}, 1}};
  EXPECT_THROW(candidate_gen(level), ContractError);
}

TEST(AprioriMine, GroceryThreeOfSeven) {
  const auto got = apriori_mine(testing::grocery_db(), support_of(3.0 / 7.0));
  const std::vector<FrequentItemset> want{{{S}, 4},    {{W}, 5},    {{P}, 6},   {{R}, 3},
                                          {{S, P}, 3}, {{W, P}, 4}, {{P, R}, 3}};
  EXPECT_EQ(got, want);
}

TEST(AprioriMine, FullSupportFindsNothing) {
  EXPECT_TRUE(apriori_mine(testing::grocery_db(), support_of(1.0)).empty());
}

TEST(AprioriMine, GroceryFourOfSeven) {
  const auto got = apriori_mine(testing::grocery_db(), support_of(4.0 / 7.0));
  const std::vector<FrequentItemset> want{{{S}, 4}, {{W}, 5}, {{P}, 6}, {{W, P}, 4}};
  EXPECT_EQ(got, want);
}

TEST(AprioriMine, SizeCapStopsLevels) {
  MiningParams params = support_of(1.0 / 7.0);
  params.max_itemset_size = 1;
  const auto got = apriori_mine(testing::grocery_db(), params);
  EXPECT_EQ(got.size(), 4u);
  params.max_itemset_size = 2;
  for (const auto& f : apriori_mine(testing::grocery_db(), params)) EXPECT_LE(f.itemset.size(), 2u);
}

TEST(AprioriMine, DeepItemsetsCounted) {
  // Transaction 1 holds all four items.
  const auto got = apriori_mine(testing::grocery_db(), support_of(1.0 / 7.0));
  EXPECT_EQ(got.back(), (FrequentItemset{{S, W, P, R}, 1}));
  // 4 + 6 + 4 + 1 itemsets, all of which occur at least once.
  EXPECT_EQ(got.size(), 15u);
}

TEST(AprioriMine, ReportsPhaseStats) {
  PhaseStats stats;
  apriori_mine(testing::grocery_db(), support_of(3.0 / 7.0), &stats);
  EXPECT_EQ(stats.peak_structures, 6u);  // six pair candidates
}

TEST(AprioriMine, InvalidParams) {
  EXPECT_THROW(apriori_mine(testing::grocery_db(), support_of(0.0)), ConfigError);
}

}  // namespace
}  // namespace basket
