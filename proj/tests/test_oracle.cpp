#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"
#include "weyld/oracle.hpp"

namespace weyld {
namespace {

TEST(BuildGroup, Sizes) {
  EXPECT_EQ(group_table(2).order(), 4);
  EXPECT_EQ(group_table(2).class_types.size(), 4u);
  EXPECT_EQ(group_table(4).order(), 192);
  EXPECT_EQ(group_table(4).class_types.size(), 13u);
  EXPECT_EQ(group_table(5).order(), 1920);
  EXPECT_EQ(group_table(5).class_types.size(), 18u);
  EXPECT_EQ(group_table(6).order(), 23040);
  EXPECT_THROW(build_group(0), std::invalid_argument);
  EXPECT_THROW(build_group(7), std::invalid_argument);
}

TEST(BuildGroup, ClassesMatchCombinatorics) {
  for (int n = 2; n <= 6; ++n) {
    const GroupTable& w = group_table(n);
    EXPECT_EQ(w.class_types, d_classes(n));
    EXPECT_EQ(w.class_types.size(), d_irr_labels(n).size());
    for (std::size_t c = 0; c < w.class_types.size(); ++c)
      EXPECT_EQ(w.class_sizes[c], d_class_size(n, w.class_types[c])) << to_string(w.class_types[c]);
  }
}

TEST(BuildGroup, GeneratorsGenerateTheGroup) {
  for (int n = 2; n <= 5; ++n) {
    const auto gens = type_d_generators(n);
    ASSERT_EQ(static_cast<int>(gens.size()), n);
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<SignedPermutation> frontier{SignedPermutation::identity(n)};
    seen.insert({frontier[0].image, frontier[0].signs});
    while (!frontier.empty()) {
      std::vector<SignedPermutation> next;
      for (const auto& g : frontier)
        for (const auto& s : gens) {
          SignedPermutation h = g * s;
          if (seen.insert({h.image, h.signs}).second) next.push_back(std::move(h));
        }
      frontier = std::move(next);
    }
    EXPECT_EQ(static_cast<Int>(seen.size()), d_group_order(n));
    for (const auto& s : gens) EXPECT_EQ(s * s, SignedPermutation::identity(n));
  }
}

TEST(Classify, Examples) {
  const GroupTable& w = group_table(4);
  EXPECT_EQ(classify_element(SignedPermutation::identity(4), w), d_identity_class(4));
  const SignedPermutation plus = block_cycle_representative({2, 2});
  const SignedPermutation t = sign_change(4, 4);
  const SignedPermutation s4 = type_d_generators(4).back();
  EXPECT_EQ(classify_element(plus, w), (DClassType{{2, 2}, {}, 1}));
  EXPECT_EQ(classify_element(t * plus * t, w), (DClassType{{2, 2}, {}, -1}));
  EXPECT_EQ(classify_element(s4 * plus * s4, w), (DClassType{{2, 2}, {}, 1}));

  // a negative 3-cycle and a negative fixed point
  SignedPermutation g = block_cycle_representative({3, 1});
  g.signs[0] = -1;
  g.signs[3] = -1;
  EXPECT_EQ(classify_element(g, w), (DClassType{{}, {3, 1}, 0}));
  // a 4-cycle carrying two sign changes is a positive cycle
  SignedPermutation h = block_cycle_representative({4});
  h.signs[0] = h.signs[1] = -1;
  EXPECT_EQ(classify_element(h, w), (DClassType{{4}, {}, testing::split_sign_by_parity(h)}));
  EXPECT_THROW(classify_element(sign_change(4, 1), w), std::invalid_argument);
}

TEST(Classify, SplitSignMatchesParityCriterion) {
  for (int n : {2, 4, 6}) {
    const GroupTable& w = group_table(n);
    for (const auto& g : w.elements) {
      const DClassType c = classify_element(g, w);
      EXPECT_EQ(to_b_class(c), signed_cycle_type(g));
      if (c.split != 0) {
        EXPECT_EQ(c.split, testing::split_sign_by_parity(g));
      }
      EXPECT_EQ(c, w.class_types[w.class_id(g)]);
    }
  }
}

TEST(Block, SubgroupOrderAndFusion) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& [a, b] : enumerate_splits(n)) {
      const BlockSubgroup h = make_block_subgroup(n, a);
      EXPECT_EQ(h.order(), d_group_order(a) * d_group_order(b));
      for (std::size_t k = 0; k < h.members.size(); ++k)
        EXPECT_EQ(classify_element(h.whole->elements[h.members[k]], *h.whole),
                  fuse_class(n, a, b, h.left->class_types[h.left_class[k]],
                             h.right->class_types[h.right_class[k]]));
    }
  EXPECT_THROW(make_block_subgroup(4, 0), std::invalid_argument);
}

TEST(Centralizers, MatchBruteForce) {
  for (int n = 2; n <= 5; ++n) {
    const GroupTable& w = group_table(n);
    for (std::size_t c = 0; c < w.class_reps.size(); ++c) {
      const auto& g = w.elements[w.class_reps[c]];
      EXPECT_EQ(centralizer_order_in(w.elements, g), d_centralizer_order(n, w.class_types[c]));
    }
  }
}

TEST(OracleTable, IsOrthonormalOnElements) {
  for (int n = 2; n <= 5; ++n) {
    const GroupTable& w = group_table(n);
    const OracleCharTable t = oracle_char_table(n);
    for (std::size_t c = 0; c < w.class_types.size(); ++c)
      EXPECT_EQ(t.values[0][c], 1);  // trivial character comes first
    for (std::size_t i = 0; i < t.labels.size(); ++i)
      for (std::size_t j = 0; j < t.labels.size(); ++j)
        EXPECT_EQ(class_inner_product(w, t.values[i], t.values[j]), i == j ? 1 : 0);
    Int sum = 0;
    const int id = w.class_id(d_identity_class(n));
    for (const auto& row : t.values) sum += row[id] * row[id];
    EXPECT_EQ(sum, d_group_order(n));
  }
}

TEST(OracleInduce, TrivialCharacter) {
  const IrrLabelD one{{{2}, {}}, 0};
  const auto result = oracle_induce(4, 2, 2, one, one);
  EXPECT_EQ(result.method, "oracle");
  EXPECT_EQ(result.at(d_trivial_label(4)), 1);
  Int degree = 0;
  for (const auto& [x, m] : result.multiplicities) degree += m * d_degree(x);
  EXPECT_EQ(degree, 12);
}

TEST(OracleInduce, ElementwiseAgreesWithClassSums) {
  for (auto [n, a] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {4, 1}}) {
    const BlockSubgroup h = make_block_subgroup(n, a);
    for (const auto& left : d_irr_labels(a))
      for (const auto& right : d_irr_labels(n - a)) {
        const ProductClassFunction f = [&](const DClassType& ca, const DClassType& cb) {
          return d_char_value(left, ca) * d_char_value(right, cb);
        };
        const auto values = induce_to_classes(h, f);
        for (std::size_t c = 0; c < values.size(); ++c)
          EXPECT_EQ(values[c], induce_elementwise(h, f, h.whole->elements[h.whole->class_reps[c]]));
      }
  }
}

TEST(OracleRestrict, FrobeniusReciprocity) {
  const BlockSubgroup h = make_block_subgroup(4, 2);
  for (const auto& left : d_irr_labels(2))
    for (const auto& right : d_irr_labels(2)) {
      const auto induced = oracle_induce(h, left, right);
      for (const auto& x : d_irr_labels(4)) EXPECT_EQ(oracle_restrict(h, x, left, right), induced.at(x));
    }
}

TEST(Verify, Proposition) {
  for (auto [n, a, b] : std::vector<std::tuple<int, int, int>>{{4, 2, 2}, {5, 2, 3}, {6, 3, 3}}) {
    const auto report = verify_proposition(n, a, b);
    EXPECT_TRUE(report.ok()) << n << a << b;
    EXPECT_EQ(report.pairs_checked,
              d_irr_labels(a).size() * d_irr_labels(b).size() * d_irr_labels(n).size());
  }
  EXPECT_EQ(verify_proposition(4, 2, 2).pairs_checked, 16u * 13u);
  EXPECT_THROW(verify_proposition(7, 3, 4), std::invalid_argument);
  EXPECT_THROW(verify_proposition(4, 2, 3), std::invalid_argument);
}

}  // namespace
}  // namespace weyld
