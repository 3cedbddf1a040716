#pragma once

/// Decomposition of Ind_{W_aW_b}^{W_n}(A ⊠ B) into irreducible characters of
/// W_n, where W_aW_b = W_a × W_b acts on the points {1..a} and {a+1..n}.
///
/// For bipartitions α = (α₁;α₂), β = (β₁;β₂), γ = (γ₁;γ₂) let
///   a_{αβ}^γ = Σ_{σ∈S_α} Σ_{τ∈S_β} c^{γ₁}_{α_σ(1) β_τ(1)} c^{γ₂}_{α_σ(2) β_τ(2)}
/// where S_α is trivial if α₁ = α₂ and swaps the two components otherwise.
/// Then, with X labelled by γ,
///   ⟨Ind(A⊠B), X⟩ = a_{αβ}^γ                                    X non-degenerate
///   ⟨Ind(A⊠B), X⟩ = (a_{αβ}^γ + ε(A)ε(B)ε(X) c^{γ₁}_{α₁β₁}) / 2   X degenerate
///
/// The trivial character of W_1 is labelled ([1],[]), which makes the a = 1
/// and b = 1 cases reduce to the type D branching rule.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyld/dchar.hpp"
#include "weyld/detail/integer.hpp"
#include "weyld/lr.hpp"
#include "weyld/partitions.hpp"

namespace weyld {

struct InducedQuery {
  int n = 0;
  int a = 0;
  int b = 0;
  IrrLabelD left;   // character A of W_a
  IrrLabelD right;  // character B of W_b
};

inline void validate(const InducedQuery& q) {
  if (q.n < 4) throw std::invalid_argument("induced query: n must be at least 4");
  if (q.a < 1 || q.b < 1 || q.a + q.b != q.n)
    throw std::invalid_argument("induced query: need a, b >= 1 and a + b = n");
  if (rank(q.left) != q.a) throw std::invalid_argument("induced query: |A| != a");
  if (rank(q.right) != q.b) throw std::invalid_argument("induced query: |B| != b");
  for (const IrrLabelD* x : {&q.left, &q.right}) {
    if ((x->label.first == x->label.second) != (x->eps != 0))
      throw std::invalid_argument("induced query: label " + to_string(*x) + " is malformed");
  }
}

namespace detail {

inline std::vector<std::pair<const Partition*, const Partition*>> orderings(const Bipartition& x) {
  if (x.first == x.second) return {{&x.first, &x.second}};
  return {{&x.first, &x.second}, {&x.second, &x.first}};
}

}  // namespace detail

inline Int a_coefficient(const Bipartition& alpha, const Bipartition& beta,
                         const Bipartition& gamma) {
  Int total = 0;
  for (auto [a1, a2] : detail::orderings(alpha)) {
    for (auto [b1, b2] : detail::orderings(beta)) {
      if (size(gamma.first) != size(*a1) + size(*b1)) continue;
      if (size(gamma.second) != size(*a2) + size(*b2)) continue;
      total += lr_coefficient(*a1, *b1, gamma.first) * lr_coefficient(*a2, *b2, gamma.second);
    }
  }
  return total;
}

/// (a + e·c) / 2 for the degenerate case; odd numerators are an internal error.
inline Int degenerate_multiplicity(Int a, int eps_product, Int c) {
  return detail::exact_div(a + eps_product * c, 2, "degenerate multiplicity");
}

inline Int induced_multiplicity(const InducedQuery& q, const IrrLabelD& x) {
  validate(q);
  if (rank(x) != q.n) throw std::invalid_argument("induced_multiplicity: |X| != n");
  const Int a = a_coefficient(q.left.label, q.right.label, x.label);
  if (x.eps == 0) return a;
  const int eps_product = q.left.eps * q.right.eps * x.eps;
  const Int c = eps_product == 0
                    ? 0
                    : lr_coefficient(q.left.label.first, q.right.label.first, x.label.first);
  return degenerate_multiplicity(a, eps_product, c);
}

struct DecompositionResult {
  std::map<IrrLabelD, Int> multiplicities;  // zero entries omitted
  std::string method;                       // "formula" or "oracle"

  Int at(const IrrLabelD& x) const {
    auto it = multiplicities.find(x);
    return it == multiplicities.end() ? 0 : it->second;
  }
};

inline DecompositionResult decompose_induced(const InducedQuery& q) {
  validate(q);
  DecompositionResult result{{}, "formula"};
  for (const auto& x : d_irr_labels(q.n))
    if (Int m = induced_multiplicity(q, x); m != 0) result.multiplicities.emplace(x, m);
  return result;
}

/// [W_n : W_a × W_b] · deg A · deg B.
inline Int induced_degree(const InducedQuery& q) {
  return d_group_order(q.n) / (d_group_order(q.a) * d_group_order(q.b)) * d_degree(q.left) *
         d_degree(q.right);
}

/// a = c² for doubled bipartitions, and (a ± c)/2 = c(c ± 1)/2.
inline bool remark_identity_check(const Partition& alpha1, const Partition& beta1,
                                  const Partition& gamma1) {
  const Int a = a_coefficient({alpha1, alpha1}, {beta1, beta1}, {gamma1, gamma1});
  const Int c = lr_coefficient(alpha1, beta1, gamma1);
  if (a != c * c) return false;
  for (int e : {1, -1})
    if (2 * degenerate_multiplicity(a, e, c) != c * (c + e)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Branching to W_1 W_{n-1} and W_{n-1} W_1

/// Bipartitions of n-1 obtained by removing one box from either component,
/// in both component orders.
inline std::set<Bipartition> branch_set(const Bipartition& gamma) {
  std::set<Bipartition> out;
  for (int d : removable_rows(gamma.first)) {
    Partition smaller = remove_box(gamma.first, d);
    out.insert({smaller, gamma.second});
    out.insert({gamma.second, smaller});
  }
  for (int d : removable_rows(gamma.second)) {
    Partition smaller = remove_box(gamma.second, d);
    out.insert({gamma.first, smaller});
    out.insert({smaller, gamma.first});
  }
  return out;
}

enum class BranchSide {
  rank_one_first,  // W_1 W_{n-1}
  rank_one_last,   // W_{n-1} W_1
};

/// ⟨Res X, B⟩ for B ∈ Irr(W_{n-1}); always 0 or 1.
inline Int branch_restriction(int n, BranchSide side, const IrrLabelD& x, const IrrLabelD& b) {
  (void)side;  // both embeddings give the same multiplicities
  if (n < 4) throw std::invalid_argument("branch_restriction: n must be at least 4");
  if (rank(x) != n || rank(b) != n - 1)
    throw std::invalid_argument("branch_restriction: label ranks must be n and n-1");
  return branch_set(x.label).contains(b.label) ? 1 : 0;
}

}  // namespace weyld
