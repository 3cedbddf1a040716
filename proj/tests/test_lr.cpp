#include <gtest/gtest.h>

#include <thread>

#include "support/oracles.hpp"
#include "weyld/lr.hpp"

namespace weyld {
namespace {

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int k = 0; k <= max_size; ++k)
    for (auto& p : enumerate_partitions(k)) out.push_back(p);
  return out;
}

TEST(Lr, Examples) {
  EXPECT_EQ(lr_coefficient({1}, {1}, {2}), 1);
  EXPECT_EQ(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}), 2);
  EXPECT_EQ(testing::lr_by_inner_product({2, 1}, {2, 1}, {3, 2, 1}), 2);
  EXPECT_EQ(lr_coefficient({2}, {1}, {1, 1, 1}), 0);
  EXPECT_EQ(lr_coefficient({2}, {1}, {4}), 0);  // size mismatch
}

TEST(Lr, Expand) {
  EXPECT_EQ(lr_expand({1}, {1}), (std::map<Partition, Int>{{{2}, 1}, {{1, 1}, 1}}));
  EXPECT_EQ(lr_expand({2}, {1}), (std::map<Partition, Int>{{{3}, 1}, {{2, 1}, 1}}));
  EXPECT_EQ(lr_expand({}, {}), (std::map<Partition, Int>{{Partition{}, 1}}));
}

TEST(Lr, EmptyFactorIsIdentity) {
  for (const auto& alpha : partitions_up_to(6))
    for (const auto& gamma : enumerate_partitions(size(alpha)))
      EXPECT_EQ(lr_coefficient(alpha, {}, gamma), gamma == alpha ? 1 : 0);
}

TEST(Lr, AgreesWithInnerProductAndIsSymmetric) {
  const auto all = partitions_up_to(6);
  for (const auto& alpha : all)
    for (const auto& beta : all) {
      if (size(alpha) + size(beta) > 6) continue;
      for (const auto& gamma : enumerate_partitions(size(alpha) + size(beta))) {
        const Int c = lr_coefficient(alpha, beta, gamma);
        EXPECT_EQ(c, lr_coefficient(beta, alpha, gamma));
        EXPECT_EQ(c, testing::lr_by_inner_product(alpha, beta, gamma))
            << to_string(alpha) << to_string(beta) << to_string(gamma);
      }
    }
}

TEST(Lr, DimensionSumRule) {
  const auto all = partitions_up_to(8);
  for (const auto& alpha : all)
    for (const auto& beta : all) {
      if (size(alpha) + size(beta) > 8) continue;
      Int lhs = 0;
      for (const auto& [gamma, c] : lr_expand(alpha, beta)) lhs += c * sym_degree(gamma);
      EXPECT_EQ(lhs, detail::binomial(size(alpha) + size(beta), size(alpha)) * sym_degree(alpha) *
                         sym_degree(beta));
    }
}

TEST(Lr, ConcurrentQueriesAgreeWithSerialValues) {
  std::vector<std::tuple<Partition, Partition, Partition>> queries;
  for (const auto& alpha : enumerate_partitions(5))
    for (const auto& beta : enumerate_partitions(4))
      for (const auto& gamma : enumerate_partitions(9)) queries.emplace_back(alpha, beta, gamma);
  std::vector<Int> expected;
  for (const auto& [a, b, g] : queries) expected.push_back(detail::LrTableauCounter(a, b, g).count());

  std::vector<std::vector<Int>> results(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      for (const auto& [a, b, g] : queries) results[t].push_back(lr_coefficient(a, b, g));
    });
  for (auto& w : workers) w.join();
  for (const auto& r : results) EXPECT_EQ(r, expected);
}

}  // namespace
}  // namespace weyld
