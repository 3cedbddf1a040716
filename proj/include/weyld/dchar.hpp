#pragma once

/// Characters and classes of W_n, the Weyl group of type D_n, realised as
/// the signed permutations of n points with an even number of sign changes
/// (index 2 in B_n). W_0 and W_1 are trivial.
///
/// Irreducible labels. Restricting [α;β] from B_n gives the same character as
/// [β;α]; for α ≠ β it stays irreducible and is stored once, with the
/// bipartition ordered so that first < second in partition order. For n even
/// and α = β the restriction splits as [α;α]_+ + [α;α]_-; eps records which.
///
/// Classes. A B_n class (positive, negative) meets W_n iff the number of
/// negative cycles is even. It splits into two W_n classes exactly when there
/// are no negative cycles and every cycle length is even, i.e. the cycle type
/// is 2π for a partition π of n/2. The + class is the one containing ordinary
/// (unsigned) permutations of cycle type 2π; the - class is its conjugate by a
/// single sign change.
///
/// The two degenerate constituents are pinned by their difference
///   Δ(w) = ±(-1)^{n/2} 2^{ℓ(π)} [γ₁](w_π)   on the ± class of type 2π,
///   Δ(w) = 0                                otherwise,
/// so that [γ₁;γ₁]_± = (Π ± Δ)/2 with Π the restricted B_n character.
///
/// Text forms: labels `([3],[1])`, `([2],[2])+`, `([2],[2])-`; classes
/// `([2,1,1],[])`, `([4],[],+)`, `([2,2],[],-)`.

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weyld/bchar.hpp"
#include "weyld/detail/cursor.hpp"
#include "weyld/detail/integer.hpp"
#include "weyld/partitions.hpp"
#include "weyld/symchar.hpp"

namespace weyld {

// ---------------------------------------------------------------------------
// Irreducible labels

struct IrrLabelD {
  Bipartition label;
  int eps = 0;  // 0 for non-degenerate, ±1 for [α;α]_±

  friend bool operator==(const IrrLabelD&, const IrrLabelD&) = default;

  /// Bipartition order, then + before -.
  friend std::strong_ordering operator<=>(const IrrLabelD& x, const IrrLabelD& y) {
    if (auto c = x.label <=> y.label; c != 0) return c;
    return y.eps <=> x.eps;
  }
};

inline int rank(const IrrLabelD& x) { return size(x.label); }
inline bool is_degenerate(const IrrLabelD& x) { return x.eps != 0; }

/// Canonical label for the restriction of [α;β] (and, when α = β, its eps
/// constituent). A sign given for a non-degenerate label is ignored.
inline IrrLabelD make_label(Bipartition bp, int eps = 0) {
  if (bp.first == bp.second) {
    if (eps != 1 && eps != -1)
      throw std::invalid_argument("degenerate label " + to_string(bp) + " needs a sign + or -");
    return {std::move(bp), eps};
  }
  if (bp.second < bp.first) std::swap(bp.first, bp.second);
  return {std::move(bp), 0};
}

/// Irr(W_n) in canonical order; n >= 1 (W_1 has the single label ([1],[])).
inline std::vector<IrrLabelD> d_irr_labels(int n) {
  if (n < 1) throw std::invalid_argument("d_irr_labels: n must be at least 1");
  std::vector<IrrLabelD> out;
  for (auto& bp : enumerate_bipartitions(n)) {
    if (bp.first == bp.second) {
      out.push_back({bp, 1});
      out.push_back({bp, -1});
    } else if (bp.first < bp.second) {
      out.push_back({bp, 0});
    }
  }
  return out;
}

/// Trivial character of W_n.
inline IrrLabelD d_trivial_label(int n) {
  return {{Partition(std::vector<int>(n > 0 ? 1 : 0, n)), Partition()}, 0};
}

// ---------------------------------------------------------------------------
// Classes

struct DClassType {
  Partition positive;
  Partition negative;
  int split = 0;  // 0 when the B_n class does not split, otherwise ±1

  friend bool operator==(const DClassType&, const DClassType&) = default;

  friend std::strong_ordering operator<=>(const DClassType& x, const DClassType& y) {
    if (auto c = BClassType{x.positive, x.negative} <=> BClassType{y.positive, y.negative}; c != 0)
      return c;
    return y.split <=> x.split;
  }
};

inline int rank(const DClassType& c) { return size(c.positive) + size(c.negative); }
inline BClassType to_b_class(const DClassType& c) { return {c.positive, c.negative}; }

/// True for the cycle types 2π that split into two W_n classes.
inline bool is_split_type(const Partition& positive, const Partition& negative) {
  if (!negative.empty() || positive.empty()) return false;
  for (int part : positive)
    if (part % 2 != 0) return false;
  return true;
}

/// π with 2π = positive, for a split class.
inline Partition half_cycle_type(const DClassType& c) {
  std::vector<int> parts;
  for (int part : c.positive) parts.push_back(part / 2);
  return Partition(std::move(parts));
}

inline Int d_group_order(int n) {
  return n <= 1 ? 1 : detail::power(2, n - 1) * detail::factorial(n);
}

/// Throws std::invalid_argument unless c names a conjugacy class of W_n.
inline void validate_class(const DClassType& c) {
  if (length(c.negative) % 2 != 0)
    throw std::invalid_argument("class has an odd number of negative cycles; not in W_n");
  const bool splits = is_split_type(c.positive, c.negative);
  if (splits && c.split != 1 && c.split != -1)
    throw std::invalid_argument("split class of type " + to_string(c.positive) + " needs a sign");
  if (!splits && c.split != 0)
    throw std::invalid_argument("class of type " + to_string(to_b_class(c)) + " does not split");
}

inline std::vector<DClassType> d_classes(int n) {
  std::vector<DClassType> out;
  for (auto& c : b_classes(n)) {
    if (length(c.negative) % 2 != 0) continue;
    if (is_split_type(c.positive, c.negative)) {
      out.push_back({c.positive, c.negative, 1});
      out.push_back({c.positive, c.negative, -1});
    } else {
      out.push_back({c.positive, c.negative, 0});
    }
  }
  return out;
}

inline DClassType d_identity_class(int n) {
  return {Partition(std::vector<int>(n, 1)), Partition(), 0};
}

/// |C_{W_n}(w)| = |W_n| · (number of W_n classes in the B_n class) / |B_n class|.
inline Int d_centralizer_order(int n, const DClassType& c) {
  validate_class(c);
  if (rank(c) != n) throw std::invalid_argument("d_centralizer_order: class rank mismatch");
  const Int b_class_size = b_group_order(n) / b_centralizer_order(to_b_class(c));
  const Int pieces = c.split == 0 ? 1 : 2;
  return detail::exact_div(d_group_order(n) * pieces, b_class_size, "d_centralizer_order");
}

inline Int d_class_size(int n, const DClassType& c) {
  return d_group_order(n) / d_centralizer_order(n, c);
}

/// Σ_c |W_n| / |C(c)| == |W_n|.
inline bool class_size_sum_check(int n) {
  Int total = 0;
  for (const auto& c : d_classes(n)) total += d_class_size(n, c);
  return total == d_group_order(n);
}

// ---------------------------------------------------------------------------
// Character values

/// Difference character [γ₁;γ₁]_+ - [γ₁;γ₁]_- of W_n, n even, |γ₁| = n/2.
inline Int delta_value(int n, const Partition& gamma1, const DClassType& c) {
  if (n % 2 != 0) throw std::invalid_argument("delta_value: n must be even");
  if (2 * size(gamma1) != n) throw std::invalid_argument("delta_value: |gamma1| must be n/2");
  if (rank(c) != n) throw std::invalid_argument("delta_value: class rank mismatch");
  validate_class(c);
  if (c.split == 0) return 0;
  const Partition pi = half_cycle_type(c);
  const Int sign = c.split * ((n / 2) % 2 == 0 ? 1 : -1);
  return sign * detail::power(2, length(pi)) * sym_char_value(gamma1, pi);
}

struct DifferenceCharacter {
  Partition gamma1;

  Int operator()(const DClassType& c) const { return delta_value(2 * size(gamma1), gamma1, c); }
};

inline Int d_char_value(const IrrLabelD& chi, const DClassType& c) {
  if (rank(chi) != rank(c))
    throw std::invalid_argument("d_char_value: character and class have different rank");
  validate_class(c);
  const Int restricted = b_char_value(chi.label, to_b_class(c));
  if (chi.eps == 0) return restricted;
  const Int doubled = restricted + chi.eps * delta_value(rank(c), chi.label.first, c);
  return detail::exact_div(doubled, 2, "degenerate character value");
}

inline Int d_degree(const IrrLabelD& chi) { return d_char_value(chi, d_identity_class(rank(chi))); }

/// Class of W_aW_b ≤ W_n (W_a on the first a points) fused into W_n.
inline DClassType fuse_class(int n, int a, int b, const DClassType& ca, const DClassType& cb) {
  if (a + b != n || rank(ca) != a || rank(cb) != b)
    throw std::invalid_argument("fuse_class: ranks do not add up");
  validate_class(ca);
  validate_class(cb);
  DClassType fused{union_of(ca.positive, cb.positive), union_of(ca.negative, cb.negative), 0};
  if (is_split_type(fused.positive, fused.negative)) {
    if (ca.split == 0 || cb.split == 0)
      throw std::logic_error("fuse_class: splittable fusion of a non-split component");
    fused.split = ca.split * cb.split;
  }
  return fused;
}

struct DCharTable {
  int n = 0;
  std::vector<IrrLabelD> labels;
  std::vector<DClassType> classes;
  std::vector<std::vector<Int>> values;  // values[label][class]
};

inline DCharTable d_char_table(int n) {
  DCharTable table{n, d_irr_labels(n), d_classes(n), {}};
  for (const auto& chi : table.labels) {
    auto& row = table.values.emplace_back();
    for (const auto& c : table.classes) row.push_back(d_char_value(chi, c));
  }
  return table;
}

// ---------------------------------------------------------------------------
// Text form

inline std::string to_string(const IrrLabelD& x) {
  std::string s = to_string(x.label);
  if (x.eps != 0) s += x.eps > 0 ? '+' : '-';
  return s;
}

inline std::string to_string(const DClassType& c) {
  std::string s = "(" + to_string(c.positive) + "," + to_string(c.negative);
  if (c.split != 0) s += c.split > 0 ? ",+" : ",-";
  return s + ")";
}

namespace detail {

// '+', '-' or U+2212; 0 when none is present.
inline int read_sign(Cursor& in) {
  if (in.consume('+')) return 1;
  if (in.consume('-') || in.consume("−")) return -1;
  return 0;
}

}  // namespace detail

inline IrrLabelD parse_d_label(std::string_view text) {
  detail::Cursor in(text);
  Bipartition bp = detail::read_bipartition(in);
  const int eps = detail::read_sign(in);
  in.expect_end();
  try {
    return make_label(std::move(bp), eps);
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
}

/// Bipartition of a label, accepting and discarding an optional sign.
inline Bipartition parse_label_bipartition(std::string_view text) {
  detail::Cursor in(text);
  Bipartition bp = detail::read_bipartition(in);
  detail::read_sign(in);
  in.expect_end();
  return bp;
}

inline DClassType parse_d_class(std::string_view text) {
  detail::Cursor in(text);
  in.expect('(');
  Partition positive = detail::read_partition(in);
  in.expect(',');
  Partition negative = detail::read_partition(in);
  int split = 0;
  if (in.consume(',')) {
    split = detail::read_sign(in);
    if (split == 0) in.fail("expected '+' or '-'");
  }
  in.expect(')');
  in.expect_end();
  DClassType c{std::move(positive), std::move(negative), split};
  try {
    validate_class(c);
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
  return c;
}

}  // namespace weyld
