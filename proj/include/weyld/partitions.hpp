#pragma once

/// Integer partitions, bipartitions and the splittings n = a + b.
///
/// A Partition is a weakly decreasing sequence of positive integers; the
/// empty sequence is the unique partition of 0. Row indices exposed by
/// removable_rows / remove_box are 1-based.
///
/// Ordering: partitions compare by size descending, then lexicographically
/// descending on parts. Within a fixed size this is reverse-lexicographic
/// order, which is the order enumerate_partitions produces:
///   (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)
/// Bipartitions compare componentwise in the same order, so that
/// enumerate_bipartitions lists |first| = n down to |first| = 0.
///
/// Text grammar (canonical interchange format):
///   partition   := '[' ( int ( ',' int )* )? ']'        e.g. [3,1]  []
///   bipartition := '(' partition ',' partition ')'      e.g. ([3,1],[2])

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weyld/detail/cursor.hpp"
#include "weyld/detail/integer.hpp"

namespace weyld {

class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i - 1] < parts_[i])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts the input and drops zeros; rejects negatives.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;

  friend std::strong_ordering operator<=>(const Partition& p, const Partition& q) {
    const int sp = std::accumulate(p.parts_.begin(), p.parts_.end(), 0);
    const int sq = std::accumulate(q.parts_.begin(), q.parts_.end(), 0);
    if (sp != sq) return sq <=> sp;
    return q.parts_ <=> p.parts_;
  }

 private:
  std::vector<int> parts_;
};

struct Bipartition {
  Partition first;
  Partition second;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

struct PairSplit {
  int a = 0;
  int b = 0;

  friend bool operator==(const PairSplit&, const PairSplit&) = default;
};

inline int size(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

inline int size(const Bipartition& bp) { return size(bp.first) + size(bp.second); }

inline int length(const Partition& p) { return static_cast<int>(p.parts().size()); }

/// Multiset union of the parts, re-sorted.
inline Partition union_of(const Partition& p, const Partition& q) {
  std::vector<int> parts;
  parts.reserve(p.parts().size() + q.parts().size());
  std::merge(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

/// Conjugate (transposed) partition.
inline Partition conjugate(const Partition& p) {
  std::vector<int> parts(p.empty() ? 0 : p[0], 0);
  for (int row : p)
    for (int c = 0; c < row; ++c) ++parts[c];
  return Partition(std::move(parts));
}

/// True when the Young diagram of `inner` fits inside that of `outer`.
inline bool contains(const Partition& outer, const Partition& inner) {
  if (length(inner) > length(outer)) return false;
  for (int i = 0; i < length(inner); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

namespace detail {

inline void partitions_bounded(int remaining, int max_part, std::vector<int>& prefix,
                               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_bounded(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All partitions of n in reverse-lexicographic order. P(0) = {()}, P(n<0) = {}.
inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  detail::partitions_bounded(n, n, prefix, out);
  return out;
}

/// All bipartitions of n; |first| descending, then each component in partition order.
inline std::vector<Bipartition> enumerate_bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k) {
    const auto firsts = enumerate_partitions(k);
    const auto seconds = enumerate_partitions(n - k);
    for (const auto& f : firsts)
      for (const auto& s : seconds) out.push_back({f, s});
  }
  return out;
}

/// All (a, b) with a, b > 0 and a + b = n, by increasing a.
inline std::vector<PairSplit> enumerate_splits(int n) {
  std::vector<PairSplit> out;
  for (int a = 1; a < n; ++a) out.push_back({a, n - a});
  return out;
}

/// Rows d (1-based) with d = length(p) or p_d > p_{d+1}.
inline std::vector<int> removable_rows(const Partition& p) {
  std::vector<int> rows;
  const int k = length(p);
  for (int d = 1; d <= k; ++d)
    if (d == k || p[d - 1] > p[d]) rows.push_back(d);
  return rows;
}

/// p with part d (1-based) decremented and zero parts dropped.
inline Partition remove_box(const Partition& p, int d) {
  const int k = length(p);
  if (d < 1 || d > k || (d < k && p[d - 1] == p[d]))
    throw std::invalid_argument("remove_box: row " + std::to_string(d) +
                                " is not removable");
  std::vector<int> parts = p.parts();
  if (--parts[d - 1] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Text form

inline std::string to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

inline std::string to_string(const Bipartition& bp) {
  return "(" + to_string(bp.first) + "," + to_string(bp.second) + ")";
}

namespace detail {

inline Partition read_partition(Cursor& in) {
  in.expect('[');
  std::vector<int> parts;
  if (!in.consume(']')) {
    do {
      parts.push_back(in.integer());
    } while (in.consume(','));
    in.expect(']');
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
}

inline Bipartition read_bipartition(Cursor& in) {
  in.expect('(');
  Partition first = read_partition(in);
  in.expect(',');
  Partition second = read_partition(in);
  in.expect(')');
  return {std::move(first), std::move(second)};
}

}  // namespace detail

inline Partition parse_partition(std::string_view text) {
  detail::Cursor in(text);
  Partition p = detail::read_partition(in);
  in.expect_end();
  return p;
}

inline Bipartition parse_bipartition(std::string_view text) {
  detail::Cursor in(text);
  Bipartition bp = detail::read_bipartition(in);
  in.expect_end();
  return bp;
}

}  // namespace weyld
