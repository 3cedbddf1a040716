#pragma once

/// Irreducible characters of the symmetric groups S_n.
///
/// [λ] is labelled so that [(n)] is the trivial character and [(1^n)] the
/// sign character. Values are computed with the Murnaghan–Nakayama rule on
/// beta-sets: removing a border strip of length r moves one bead from
/// position x to the vacant position x - r, with sign (-1)^(beads jumped).

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weyld/detail/integer.hpp"
#include "weyld/detail/memo.hpp"
#include "weyld/partitions.hpp"

namespace weyld {

/// Cycle type of a permutation, fixed points included as parts equal to 1.
using CycleType = Partition;

namespace detail {

// Every partition obtained from `shape` by removing a border strip of length
// `strip`, paired with (-1)^(height of the strip).
inline std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& shape,
                                                                   int strip) {
  std::vector<std::pair<Partition, int>> out;
  const int k = length(shape);
  std::vector<int> beads(k);
  for (int i = 0; i < k; ++i) beads[i] = shape[i] + (k - 1 - i);  // strictly decreasing
  auto occupied = [&](int x) { return std::find(beads.begin(), beads.end(), x) != beads.end(); };
  for (int i = 0; i < k; ++i) {
    const int target = beads[i] - strip;
    if (target < 0 || occupied(target)) continue;
    int jumped = 0;
    for (int j = 0; j < k; ++j)
      if (beads[j] > target && beads[j] < beads[i]) ++jumped;
    std::vector<int> moved = beads;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int j = 0; j < k; ++j) {
      const int part = moved[j] - (k - 1 - j);
      if (part > 0) parts.push_back(part);
    }
    out.emplace_back(Partition(std::move(parts)), jumped % 2 == 0 ? 1 : -1);
  }
  return out;
}

inline Memo<std::pair<Partition, Partition>, Int>& sym_value_cache() {
  static Memo<std::pair<Partition, Partition>, Int> cache;
  return cache;
}

inline Int sym_value_unchecked(const Partition& shape, const Partition& cycles) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;
  return sym_value_cache().get_or_compute({shape, cycles}, [&] {
    std::vector<int> rest(cycles.begin() + 1, cycles.end());
    const Partition remaining(std::move(rest));
    Int value = 0;
    for (const auto& [smaller, sign] : remove_border_strips(shape, cycles[0]))
      value += sign * sym_value_unchecked(smaller, remaining);
    return value;
  });
}

}  // namespace detail

/// χ^λ at an element of cycle type μ; requires |λ| = |μ|.
inline Int sym_char_value(const Partition& lambda, const CycleType& mu) {
  if (size(lambda) != size(mu))
    throw std::invalid_argument("sym_char_value: |" + to_string(lambda) + "| != |" +
                                to_string(mu) + "|");
  return detail::sym_value_unchecked(lambda, mu);
}

/// Π_i i^{m_i} m_i! with m_i the multiplicity of i in μ.
inline Int sym_centralizer_order(const CycleType& mu) {
  Int order = 1;
  std::map<int, int> multiplicity;
  for (int part : mu) ++multiplicity[part];
  for (auto [part, m] : multiplicity) order *= detail::power(part, m) * detail::factorial(m);
  return order;
}

/// Number of standard Young tableaux of shape λ (hook-length formula).
inline Int sym_degree(const Partition& lambda) {
  const Partition columns = conjugate(lambda);
  Int hooks = 1;
  for (int i = 0; i < length(lambda); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (columns[j] - i - 1) + 1;
  return detail::factorial(size(lambda)) / hooks;
}

/// Full character table of S_n; rows and columns both follow enumerate_partitions(n).
struct SymCharTable {
  int n = 0;
  std::vector<Partition> labels;
  std::vector<CycleType> classes;
  std::vector<std::vector<Int>> values;  // values[label][class]
};

inline SymCharTable sym_char_table(int n) {
  SymCharTable table{n, enumerate_partitions(n), enumerate_partitions(n), {}};
  for (const auto& lambda : table.labels) {
    auto& row = table.values.emplace_back();
    for (const auto& mu : table.classes) row.push_back(sym_char_value(lambda, mu));
  }
  return table;
}

}  // namespace weyld
