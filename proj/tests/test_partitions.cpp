#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"
#include "weyld/partitions.hpp"

namespace weyld {
namespace {

TEST(Partition, SizeAndLength) {
  EXPECT_EQ(size(Partition{}), 0);
  EXPECT_EQ(size(Partition{3, 1}), 4);
  EXPECT_EQ(size(Partition{2, 2, 1}), 5);
  EXPECT_EQ(length(Partition{}), 0);
  EXPECT_EQ(length(Partition{4}), 1);
  EXPECT_EQ(length(Partition{2, 1, 1}), 3);
}

TEST(Partition, RejectsInvalidParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_THROW(Partition({-1}), std::invalid_argument);
  EXPECT_EQ(Partition::from_unsorted({1, 0, 3, 1}), (Partition{3, 1, 1}));
}

TEST(Partition, Union) {
  EXPECT_EQ(union_of({2, 1}, {3}), (Partition{3, 2, 1}));
  EXPECT_EQ(union_of({}, {2, 2}), (Partition{2, 2}));
  EXPECT_EQ(union_of({1}, {1}), (Partition{1, 1}));
}

TEST(Partition, UnionIsCommutativeAssociativeWithIdentity) {
  std::vector<Partition> all;
  for (int n = 0; n <= 4; ++n)
    for (auto& p : enumerate_partitions(n)) all.push_back(p);
  for (const auto& p : all) {
    EXPECT_EQ(union_of(p, Partition{}), p);
    for (const auto& q : all) {
      const Partition pq = union_of(p, q);
      EXPECT_EQ(pq, union_of(q, p));
      EXPECT_EQ(length(pq), length(p) + length(q));
      EXPECT_EQ(size(pq), size(p) + size(q));
      for (const auto& r : all) EXPECT_EQ(union_of(pq, r), union_of(p, union_of(q, r)));
    }
  }
}

TEST(Enumerate, PartitionsOfFourInReverseLexOrder) {
  const std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(enumerate_partitions(4), expected);
  EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition{}});
  EXPECT_TRUE(enumerate_partitions(-1).empty());
}

TEST(Enumerate, PartitionCountsMatchRecurrence) {
  for (int n = 0; n <= 18; ++n) {
    const auto all = enumerate_partitions(n);
    EXPECT_EQ(static_cast<Int>(all.size()), testing::partition_count(n)) << n;
    std::set<Partition> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
    for (const auto& p : all) EXPECT_EQ(size(p), n);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
}

TEST(Enumerate, Bipartitions) {
  EXPECT_EQ(enumerate_bipartitions(4).size(), 20u);
  const std::vector<Bipartition> one{{{1}, {}}, {{}, {1}}};
  EXPECT_EQ(enumerate_bipartitions(1), one);
  EXPECT_EQ(enumerate_bipartitions(0), std::vector<Bipartition>{Bipartition{}});
  for (int n = 0; n <= 10; ++n) {
    Int expected = 0;
    for (int k = 0; k <= n; ++k) expected += testing::partition_count(k) * testing::partition_count(n - k);
    const auto all = enumerate_bipartitions(n);
    EXPECT_EQ(static_cast<Int>(all.size()), expected);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::set<Bipartition>(all.begin(), all.end()).size(), all.size());
  }
}

TEST(Enumerate, Splits) {
  const std::vector<PairSplit> four{{1, 3}, {2, 2}, {3, 1}};
  EXPECT_EQ(enumerate_splits(4), four);
  EXPECT_EQ(enumerate_splits(2), (std::vector<PairSplit>{PairSplit{1, 1}}));
  EXPECT_TRUE(enumerate_splits(1).empty());
  EXPECT_TRUE(enumerate_splits(0).empty());
}

TEST(RemoveBox, Examples) {
  EXPECT_EQ(remove_box({3, 1}, 1), (Partition{2, 1}));
  EXPECT_EQ(remove_box({1}, 1), Partition{});
  EXPECT_EQ(remove_box({2, 2}, 2), (Partition{2, 1}));
  EXPECT_THROW(remove_box({2, 2}, 1), std::invalid_argument);
  EXPECT_THROW(remove_box({2, 2}, 3), std::invalid_argument);
  EXPECT_THROW(remove_box({}, 1), std::invalid_argument);
}

TEST(RemoveBox, RemovableRows) {
  EXPECT_EQ(removable_rows({3, 1}), (std::vector<int>{1, 2}));
  EXPECT_EQ(removable_rows({2, 2}), (std::vector<int>{2}));
  EXPECT_TRUE(removable_rows({}).empty());
}

TEST(RemoveBox, ResultsAreDistinctPartitionsOfOneLess) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      std::set<Partition> seen;
      for (int d : removable_rows(p)) {
        const Partition q = remove_box(p, d);
        EXPECT_EQ(size(q), n - 1);
        EXPECT_TRUE(contains(p, q));
        seen.insert(q);
      }
      EXPECT_EQ(seen.size(), removable_rows(p).size());
    }
  }
}

TEST(Text, FormatAndParseRoundTrip) {
  EXPECT_EQ(to_string(Partition{3, 1}), "[3,1]");
  EXPECT_EQ(to_string(Partition{}), "[]");
  EXPECT_EQ(to_string(Bipartition{{3, 1}, {2}}), "([3,1],[2])");
  EXPECT_EQ(parse_partition(" [ 3 , 1 ] "), (Partition{3, 1}));
  for (int n = 0; n <= 6; ++n)
    for (const auto& bp : enumerate_bipartitions(n)) {
      EXPECT_EQ(parse_bipartition(to_string(bp)), bp);
      EXPECT_EQ(parse_partition(to_string(bp.first)), bp.first);
    }
}

TEST(Text, MalformedInputIsRejected) {
  for (const char* bad : {"", "[", "[1,2]", "[0]", "[3,", "[a]", "3,1", "[1]]", "[1,,1]"})
    EXPECT_THROW(parse_partition(bad), ParseError) << bad;
  for (const char* bad : {"(", "([1],[2]", "([1];[2])", "([1],[2]) x", "[1],[2]"})
    EXPECT_THROW(parse_bipartition(bad), ParseError) << bad;
}

}  // namespace
}  // namespace weyld
