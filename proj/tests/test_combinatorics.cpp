#include "partzeta/combinatorics.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "partzeta/error.hpp"

namespace partzeta {
namespace {

TEST(IndexSet, MembersAreAscendingAndDuplicateFree) {
  IndexSet s{5, 1, 3, 1};
  EXPECT_EQ(s.members(), (std::vector<unsigned>{1, 3, 5}));
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.min(), 1u);
  EXPECT_EQ(s.max(), 5u);
  EXPECT_EQ(s.rank_of(5), 2u);
  EXPECT_EQ(s.to_string(), "{1,3,5}");
}

TEST(IndexSet, RejectsIndexZeroAndOverflow) {
  EXPECT_THROW(IndexSet({0}), Error);
  EXPECT_THROW(IndexSet({64}), Error);
  EXPECT_NO_THROW(IndexSet({63}));
}

TEST(IndexSet, OrderIsLexicographicOnMemberLists) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const IndexSet a = IndexSet::from_mask(rng() & 0x3fe);
    const IndexSet b = IndexSet::from_mask(rng() & 0x3fe);
    const auto ma = a.members();
    const auto mb = b.members();
    const bool lex_less = std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
    EXPECT_EQ(a < b, lex_less) << a.to_string() << " vs " << b.to_string();
  }
  EXPECT_LT(IndexSet({1}), IndexSet({1, 2}));
  EXPECT_LT(IndexSet({1, 2}), IndexSet({1, 3}));
  EXPECT_LT(IndexSet({1, 3}), IndexSet({2}));
}

TEST(OrderedSetPartitions, Singleton) {
  const auto ps = ordered_set_partitions(IndexSet{1});
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0].parts, (std::vector<IndexSet>{IndexSet{1}}));
}

TEST(OrderedSetPartitions, KnownCounts) {
  EXPECT_EQ(ordered_set_partitions(IndexSet::range(3)).size(), 13u);
  EXPECT_EQ(ordered_set_partitions(IndexSet::range(4)).size(), 75u);
}

TEST(OrderedSetPartitions, OrderIsPartCountThenLexicographic) {
  const auto ps = ordered_set_partitions(IndexSet::range(2));
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[0].parts, (std::vector<IndexSet>{IndexSet{1, 2}}));
  EXPECT_EQ(ps[1].parts, (std::vector<IndexSet>{IndexSet{1}, IndexSet{2}}));
  EXPECT_EQ(ps[2].parts, (std::vector<IndexSet>{IndexSet{2}, IndexSet{1}}));
  const auto big = ordered_set_partitions(IndexSet::range(4));
  EXPECT_TRUE(std::is_sorted(big.begin(), big.end()));
  EXPECT_TRUE(std::adjacent_find(big.begin(), big.end()) == big.end());
}

TEST(OrderedSetPartitions, EmptyGroundIsAnError) {
  EXPECT_THROW(ordered_set_partitions(IndexSet{}), Error);
  EXPECT_THROW(unordered_set_partitions(IndexSet{}), Error);
  EXPECT_THROW(permutations(IndexSet{}), Error);
}

TEST(OrderedSetPartitions, CountsMatchFubiniUpToSeven) {
  for (unsigned n = 1; n <= 7; ++n) {
    const auto ps = ordered_set_partitions(IndexSet::range(n));
    EXPECT_EQ(Integer(ps.size()), fubini_count(n)) << n;
    EXPECT_EQ(fubini_count(n), oracle::fubini_via_stirling(n)) << n;
  }
}

TEST(OrderedSetPartitions, EveryPartitionSatisfiesInvariants) {
  const IndexSet ground{2, 4, 5, 9};
  for (const auto& p : ordered_set_partitions(ground)) EXPECT_TRUE(p.is_partition_of(ground));
}

TEST(UnorderedSetPartitions, Pair) {
  const auto ps = unordered_set_partitions(IndexSet{1, 2});
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps[0].parts, (std::vector<IndexSet>{IndexSet{1, 2}}));
  EXPECT_EQ(ps[1].parts, (std::vector<IndexSet>{IndexSet{1}, IndexSet{2}}));
}

TEST(UnorderedSetPartitions, CountsMatchBellUpToSeven) {
  EXPECT_EQ(unordered_set_partitions(IndexSet::range(3)).size(), 5u);
  EXPECT_EQ(unordered_set_partitions(IndexSet::range(5)).size(), 52u);
  for (unsigned n = 1; n <= 7; ++n) {
    const auto ps = unordered_set_partitions(IndexSet::range(n));
    EXPECT_EQ(Integer(ps.size()), oracle::bell(n)) << n;
    for (const auto& p : ps) EXPECT_TRUE(p.is_partition_of(IndexSet::range(n)));
  }
}

TEST(UnorderedSetPartitions, ForgettingOrderRecoversUnordered) {
  for (unsigned n = 1; n <= 5; ++n) {
    const IndexSet g = IndexSet::range(n);
    std::set<UnorderedPartition> forgotten;
    for (const auto& p : ordered_set_partitions(g)) forgotten.insert(UnorderedPartition::from_parts(p.parts));
    const auto direct = unordered_set_partitions(g);
    EXPECT_EQ(std::vector<UnorderedPartition>(forgotten.begin(), forgotten.end()), direct) << n;
  }
}

TEST(Permutations, SmallCases) {
  EXPECT_EQ(permutations(IndexSet{1}), (std::vector<std::vector<unsigned>>{{1}}));
  EXPECT_EQ(permutations(IndexSet{1, 2}), (std::vector<std::vector<unsigned>>{{1, 2}, {2, 1}}));
  const auto p3 = permutations(IndexSet::range(3));
  EXPECT_EQ(p3.size(), 6u);
  EXPECT_TRUE(std::is_sorted(p3.begin(), p3.end()));
  EXPECT_EQ(std::set<std::vector<unsigned>>(p3.begin(), p3.end()).size(), 6u);
}

TEST(FubiniCount, Values) {
  EXPECT_EQ(fubini_count(1), 1);
  EXPECT_EQ(fubini_count(2), 3);
  EXPECT_EQ(fubini_count(3), 13);
  EXPECT_EQ(fubini_count(5), 541);
  EXPECT_THROW(fubini_count(0), Error);
}

TEST(FubiniCount, ExceedsSixtyFourBitsWithoutWrapping) {
  for (unsigned n = 1; n <= 30; ++n) EXPECT_EQ(fubini_count(n), oracle::fubini_via_stirling(n)) << n;
  EXPECT_GT(fubini_count(25), Integer(std::numeric_limits<std::uint64_t>::max()));
}

}  // namespace
}  // namespace partzeta
