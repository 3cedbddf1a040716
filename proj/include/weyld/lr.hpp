#pragma once

/// Littlewood–Richardson coefficients c_{αβ}^γ.
///
/// Counted as the number of LR tableaux: fillings of the skew shape γ/α with
/// content β whose rows weakly increase, columns strictly increase, and whose
/// reverse reading word (rows top to bottom, each read right to left) is a
/// lattice word. Results are memoized in a process-wide compute-once cache.

#include <map>
#include <tuple>
#include <vector>

#include "weyld/detail/integer.hpp"
#include "weyld/detail/memo.hpp"
#include "weyld/partitions.hpp"

namespace weyld {

namespace detail {

class LrTableauCounter {
 public:
  LrTableauCounter(const Partition& alpha, const Partition& beta, const Partition& gamma)
      : content_(beta.parts()), used_(beta.parts().size() + 1, 0) {
    for (int r = 0; r < length(gamma); ++r) {
      const int start = r < length(alpha) ? alpha[r] : 0;
      for (int c = gamma[r] - 1; c >= start; --c) cells_.push_back({r, c});
      rows_.push_back(std::vector<int>(gamma[r], 0));
      inner_.push_back(start);
    }
  }

  Int count() { return fill(0); }

 private:
  struct Cell {
    int row;
    int col;
  };

  Int fill(std::size_t index) {
    if (index == cells_.size()) return 1;
    const auto [r, c] = cells_[index];
    int upper = static_cast<int>(content_.size());
    if (c + 1 < static_cast<int>(rows_[r].size())) upper = std::min(upper, rows_[r][c + 1]);
    int lower = 1;
    if (r > 0 && c >= inner_[r - 1]) lower = rows_[r - 1][c] + 1;
    Int total = 0;
    for (int v = lower; v <= upper; ++v) {
      if (used_[v] >= content_[v - 1]) continue;
      if (v > 1 && used_[v] + 1 > used_[v - 1]) continue;
      ++used_[v];
      rows_[r][c] = v;
      total += fill(index + 1);
      --used_[v];
    }
    rows_[r][c] = 0;
    return total;
  }

  std::vector<int> content_;
  std::vector<int> used_;  // 1-based value counts
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> inner_;
};

inline Memo<std::tuple<Partition, Partition, Partition>, Int>& lr_cache() {
  static Memo<std::tuple<Partition, Partition, Partition>, Int> cache;
  return cache;
}

}  // namespace detail

/// Multiplicity of [γ] in Ind_{S_|α| × S_|β|}^{S_|γ|}([α] ⊠ [β]).
inline Int lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  if (size(gamma) != size(alpha) + size(beta)) return 0;
  if (!contains(gamma, alpha) || !contains(gamma, beta)) return 0;
  return detail::lr_cache().get_or_compute({alpha, beta, gamma}, [&] {
    return detail::LrTableauCounter(alpha, beta, gamma).count();
  });
}

/// Every γ with c_{αβ}^γ ≠ 0, with its coefficient.
inline std::map<Partition, Int> lr_expand(const Partition& alpha, const Partition& beta) {
  std::map<Partition, Int> out;
  for (const auto& gamma : enumerate_partitions(size(alpha) + size(beta))) {
    if (Int c = lr_coefficient(alpha, beta, gamma); c != 0) out.emplace(gamma, c);
  }
  return out;
}

}  // namespace weyld
