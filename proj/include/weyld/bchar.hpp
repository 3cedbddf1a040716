#pragma once

/// Conjugacy classes and irreducible characters of the hyperoctahedral
/// group B_n = Z_2 ≀ S_n (signed permutations of n points).
///
/// Classes are signed cycle types (positive, negative): the cycle lengths of
/// the underlying permutation split by whether the product of signs along the
/// cycle is +1 or -1.
///
/// Characters [α;β] are evaluated by the wreath-product Murnaghan–Nakayama
/// rule. A cycle of length r is peeled off; border strips of length r are
/// removed from α with sign (-1)^height, or from β with sign (-1)^height
/// multiplied by -1 when the cycle is negative. With this convention
///   [(n);()]    is the trivial character,
///   [(1^n);()]  is the sign of the underlying permutation,
///   [();(1^n)]  is the determinant of the reflection representation,
/// and [α;β] has degree binomial(n, |α|)·dim[α]·dim[β].

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "weyld/detail/integer.hpp"
#include "weyld/detail/memo.hpp"
#include "weyld/partitions.hpp"
#include "weyld/symchar.hpp"

namespace weyld {

struct BClassType {
  Partition positive;
  Partition negative;

  friend bool operator==(const BClassType&, const BClassType&) = default;

  /// |negative| ascending, then positive, then negative in partition order.
  friend std::strong_ordering operator<=>(const BClassType& x, const BClassType& y) {
    if (auto c = size(x.negative) <=> size(y.negative); c != 0) return c;
    if (auto c = x.positive <=> y.positive; c != 0) return c;
    return x.negative <=> y.negative;
  }
};

inline int rank(const BClassType& c) { return size(c.positive) + size(c.negative); }

inline Int b_group_order(int n) { return detail::power(2, n) * detail::factorial(n); }

inline std::vector<BClassType> b_classes(int n) {
  if (n < 1) throw std::invalid_argument("b_classes: n must be at least 1");
  std::vector<BClassType> out;
  for (int neg = 0; neg <= n; ++neg)
    for (const auto& positive : enumerate_partitions(n - neg))
      for (const auto& negative : enumerate_partitions(neg)) out.push_back({positive, negative});
  return out;
}

/// Π_i (2i)^{a_i} a_i! · Π_i (2i)^{b_i} b_i!.
inline Int b_centralizer_order(const BClassType& c) {
  Int order = 1;
  for (const Partition* cycles : {&c.positive, &c.negative}) {
    std::map<int, int> multiplicity;
    for (int part : *cycles) ++multiplicity[part];
    for (auto [part, m] : multiplicity) order *= detail::power(2 * part, m) * detail::factorial(m);
  }
  return order;
}

namespace detail {

using BValueKey = std::tuple<Partition, Partition, Partition, Partition>;

inline Memo<BValueKey, Int>& b_value_cache() {
  static Memo<BValueKey, Int> cache;
  return cache;
}

inline Partition drop_first(const Partition& p) {
  return Partition(std::vector<int>(p.begin() + 1, p.end()));
}

inline Int b_value_unchecked(const Partition& alpha, const Partition& beta,
                             const Partition& positive, const Partition& negative) {
  if (positive.empty() && negative.empty()) return alpha.empty() && beta.empty() ? 1 : 0;
  return b_value_cache().get_or_compute({alpha, beta, positive, negative}, [&] {
    const bool from_positive = !positive.empty();
    const int strip = from_positive ? positive[0] : negative[0];
    const Partition rest_pos = from_positive ? drop_first(positive) : positive;
    const Partition rest_neg = from_positive ? negative : drop_first(negative);
    const int cycle_sign = from_positive ? 1 : -1;
    Int value = 0;
    for (const auto& [smaller, sign] : remove_border_strips(alpha, strip))
      value += sign * b_value_unchecked(smaller, beta, rest_pos, rest_neg);
    for (const auto& [smaller, sign] : remove_border_strips(beta, strip))
      value += cycle_sign * sign * b_value_unchecked(alpha, smaller, rest_pos, rest_neg);
    return value;
  });
}

}  // namespace detail

/// Value of [α;β] at an element of signed cycle type c.
inline Int b_char_value(const Bipartition& chi, const BClassType& c) {
  if (size(chi) != rank(c))
    throw std::invalid_argument("b_char_value: character " + to_string(chi) +
                                " and class have different rank");
  return detail::b_value_unchecked(chi.first, chi.second, c.positive, c.negative);
}

inline Int b_degree(const Bipartition& chi) {
  return detail::binomial(size(chi), size(chi.first)) * sym_degree(chi.first) *
         sym_degree(chi.second);
}

struct BCharTable {
  int n = 0;
  std::vector<Bipartition> labels;
  std::vector<BClassType> classes;
  std::vector<std::vector<Int>> values;  // values[label][class]
};

inline BCharTable b_char_table(int n) {
  BCharTable table{n, enumerate_bipartitions(n), b_classes(n), {}};
  for (const auto& chi : table.labels) {
    auto& row = table.values.emplace_back();
    for (const auto& c : table.classes) row.push_back(b_char_value(chi, c));
  }
  return table;
}

/// Text form `([2],[1])`: positive cycle type, negative cycle type.
inline std::string to_string(const BClassType& c) {
  return "(" + to_string(c.positive) + "," + to_string(c.negative) + ")";
}

inline BClassType parse_b_class(std::string_view text) {
  const Bipartition bp = parse_bipartition(text);
  return {bp.first, bp.second};
}

}  // namespace weyld
