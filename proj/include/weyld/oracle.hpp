#pragma once

/// Brute-force verification engine on explicit signed permutations.
///
/// W_n is built element by element (n ≤ 6, |W_6| = 23040), conjugacy classes
/// are found as orbits under conjugation by the Coxeter generators
///   s_i = (i, i+1)          1 ≤ i < n
///   t_n = sign change at n
///   s_n = t_n s_{n-1} t_n
/// and induced characters are evaluated by summing over explicit subgroup
/// elements. Split classes are told apart by explicit conjugacy to the
/// canonical representative: the unsigned permutation whose cycles of type 2π
/// are consecutive blocks (1 2 .. 2π₁)(2π₁+1 ..) .. . Its - partner is the
/// conjugate by t_n.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyld/bchar.hpp"
#include "weyld/dchar.hpp"
#include "weyld/decomp.hpp"
#include "weyld/detail/integer.hpp"
#include "weyld/partitions.hpp"

namespace weyld {

inline constexpr int kOracleMaxRank = 6;

/// Signed permutation of {0..n-1}: e_i ↦ signs[i] · e_{image[i]}.
struct SignedPermutation {
  std::vector<int> image;
  std::vector<int> signs;

  int rank() const { return static_cast<int>(image.size()); }

  static SignedPermutation identity(int n) {
    SignedPermutation g{std::vector<int>(n), std::vector<int>(n, 1)};
    std::iota(g.image.begin(), g.image.end(), 0);
    return g;
  }

  /// Number of sign changes is even.
  bool in_type_d() const { return std::count(signs.begin(), signs.end(), -1) % 2 == 0; }

  bool is_unsigned() const { return std::count(signs.begin(), signs.end(), -1) == 0; }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

  /// Composition: (g * h)(e_i) = g(h(e_i)).
  friend SignedPermutation operator*(const SignedPermutation& g, const SignedPermutation& h) {
    const int n = h.rank();
    SignedPermutation gh{std::vector<int>(n), std::vector<int>(n)};
    for (int i = 0; i < n; ++i) {
      gh.image[i] = g.image[h.image[i]];
      gh.signs[i] = h.signs[i] * g.signs[h.image[i]];
    }
    return gh;
  }
};

inline SignedPermutation inverse(const SignedPermutation& g) {
  const int n = g.rank();
  SignedPermutation inv{std::vector<int>(n), std::vector<int>(n)};
  for (int i = 0; i < n; ++i) {
    inv.image[g.image[i]] = i;
    inv.signs[g.image[i]] = g.signs[i];
  }
  return inv;
}

/// x g x⁻¹.
inline SignedPermutation conjugate_by(const SignedPermutation& x, const SignedPermutation& g) {
  return x * g * inverse(x);
}

/// Transposition of the 1-based points i and i+1.
inline SignedPermutation simple_transposition(int n, int i) {
  SignedPermutation g = SignedPermutation::identity(n);
  std::swap(g.image[i - 1], g.image[i]);
  return g;
}

/// Sign change at the 1-based point i.
inline SignedPermutation sign_change(int n, int i) {
  SignedPermutation g = SignedPermutation::identity(n);
  g.signs[i - 1] = -1;
  return g;
}

/// Coxeter generators s_1..s_n of W_n (empty for n ≤ 1).
inline std::vector<SignedPermutation> type_d_generators(int n) {
  std::vector<SignedPermutation> gens;
  if (n < 2) return gens;
  for (int i = 1; i < n; ++i) gens.push_back(simple_transposition(n, i));
  const SignedPermutation t = sign_change(n, n);
  gens.push_back(t * simple_transposition(n, n - 1) * t);
  return gens;
}

inline BClassType signed_cycle_type(const SignedPermutation& g) {
  const int n = g.rank();
  std::vector<bool> seen(n, false);
  std::vector<int> positive, negative;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int len = 0, sign = 1;
    for (int i = start; !seen[i]; i = g.image[i]) {
      seen[i] = true;
      sign *= g.signs[i];
      ++len;
    }
    (sign > 0 ? positive : negative).push_back(len);
  }
  return {Partition::from_unsorted(positive), Partition::from_unsorted(negative)};
}

/// Unsigned permutation with consecutive cycles of the given lengths; with
/// split = -1 it is conjugated by t_n.
inline SignedPermutation block_cycle_representative(const Partition& cycle_type, int split = 1) {
  const int n = size(cycle_type);
  SignedPermutation g = SignedPermutation::identity(n);
  int start = 0;
  for (int len : cycle_type) {
    for (int k = 0; k < len; ++k) g.image[start + k] = start + (k + 1) % len;
    start += len;
  }
  if (split < 0) {
    const SignedPermutation t = sign_change(n, n);
    g = t * g * t;
  }
  return g;
}

namespace detail {

inline std::size_t permutation_rank(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  std::size_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (image[j] < image[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

inline std::size_t encode(const SignedPermutation& g) {
  std::size_t mask = 0;
  for (int i = 0; i < g.rank(); ++i)
    if (g.signs[i] < 0) mask |= std::size_t{1} << i;
  return (permutation_rank(g.image) << g.rank()) | mask;
}

// All signed permutations of n points, optionally only those in W_n.
inline std::vector<SignedPermutation> all_signed_permutations(int n, bool type_d_only) {
  std::vector<SignedPermutation> out;
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      SignedPermutation g{image, std::vector<int>(n)};
      for (int i = 0; i < n; ++i) g.signs[i] = (mask >> i) & 1u ? -1 : 1;
      if (!type_d_only || g.in_type_d()) out.push_back(std::move(g));
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace detail

/// Explicit W_n with its conjugacy classes. Class ids follow d_classes(n).
struct GroupTable {
  int n = 0;
  std::vector<SignedPermutation> elements;
  std::vector<int> class_of;                // element index -> class id
  std::vector<int> class_reps;              // class id -> element index
  std::vector<Int> class_sizes;             // class id -> orbit size
  std::vector<DClassType> class_types;      // class id -> class label
  std::vector<int> lookup;                  // encode(g) -> element index or -1

  Int order() const { return static_cast<Int>(elements.size()); }
  Int centralizer_order(int class_id) const { return order() / class_sizes[class_id]; }

  int index_of(const SignedPermutation& g) const {
    const std::size_t key = detail::encode(g);
    const int idx = key < lookup.size() ? lookup[key] : -1;
    if (idx < 0) throw std::invalid_argument("element is not in W_" + std::to_string(n));
    return idx;
  }

  int class_id(const SignedPermutation& g) const { return class_of[index_of(g)]; }

  int class_id(const DClassType& c) const {
    auto it = std::find(class_types.begin(), class_types.end(), c);
    if (it == class_types.end()) throw std::invalid_argument("unknown class " + to_string(c));
    return static_cast<int>(it - class_types.begin());
  }
};

/// Signed cycle type of g, with the split sign decided by conjugacy in `table`
/// to the canonical unsigned representative.
inline DClassType classify_element(const SignedPermutation& g, const GroupTable& table) {
  if (!g.in_type_d()) throw std::invalid_argument("classify_element: element is not in W_n");
  const BClassType type = signed_cycle_type(g);
  DClassType c{type.positive, type.negative, 0};
  if (is_split_type(type.positive, type.negative)) {
    const SignedPermutation plus = block_cycle_representative(type.positive, 1);
    c.split = table.class_of[table.index_of(g)] == table.class_of[table.index_of(plus)] ? 1 : -1;
  }
  return c;
}

inline GroupTable build_group(int n) {
  if (n < 1 || n > kOracleMaxRank)
    throw std::invalid_argument("build_group: rank must lie in 1.." +
                                std::to_string(kOracleMaxRank));
  GroupTable t;
  t.n = n;
  t.elements = detail::all_signed_permutations(n, true);
  t.lookup.assign(static_cast<std::size_t>(detail::factorial(n)) << n, -1);
  for (std::size_t i = 0; i < t.elements.size(); ++i)
    t.lookup[detail::encode(t.elements[i])] = static_cast<int>(i);

  // Orbits under conjugation by the generators.
  const auto gens = type_d_generators(n);
  std::vector<int> orbit_of(t.elements.size(), -1);
  std::vector<std::vector<int>> orbits;
  for (std::size_t seed = 0; seed < t.elements.size(); ++seed) {
    if (orbit_of[seed] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    auto& orbit = orbits.emplace_back();
    std::deque<int> queue{static_cast<int>(seed)};
    orbit_of[seed] = id;
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      orbit.push_back(cur);
      for (const auto& s : gens) {
        const int next = t.index_of(s * t.elements[cur] * s);
        if (orbit_of[next] < 0) {
          orbit_of[next] = id;
          queue.push_back(next);
        }
      }
    }
  }

  // Label each orbit, then renumber the classes in d_classes order.
  t.class_of = orbit_of;
  std::vector<DClassType> orbit_types;
  for (const auto& orbit : orbits) orbit_types.push_back(classify_element(t.elements[orbit[0]], t));
  std::vector<int> order(orbits.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return orbit_types[x] < orbit_types[y]; });
  std::vector<int> renumber(orbits.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    renumber[order[k]] = static_cast<int>(k);
    t.class_reps.push_back(orbits[order[k]][0]);
    t.class_sizes.push_back(static_cast<Int>(orbits[order[k]].size()));
    t.class_types.push_back(orbit_types[order[k]]);
  }
  for (auto& c : t.class_of) c = renumber[c];
  return t;
}

/// Shared immutable tables, built once per rank.
inline const GroupTable& group_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const GroupTable>> tables;
  {
    std::lock_guard lock(mutex);
    if (auto it = tables.find(n); it != tables.end()) return *it->second;
  }
  auto built = std::make_shared<const GroupTable>(build_group(n));
  std::lock_guard lock(mutex);
  return *tables.try_emplace(n, std::move(built)).first->second;
}

// ---------------------------------------------------------------------------
// Brute-force centralizers (B_n, and the two copies H_n^± of S_n inside W_n)

inline std::vector<SignedPermutation> b_group_elements(int n) {
  return detail::all_signed_permutations(n, false);
}

/// H_n^+ = ⟨s_1..s_{n-1}⟩: the unsigned permutations.
inline std::vector<SignedPermutation> h_plus_elements(int n) {
  std::vector<SignedPermutation> out;
  for (auto& g : detail::all_signed_permutations(n, true))
    if (g.is_unsigned()) out.push_back(std::move(g));
  return out;
}

/// H_n^- = ⟨s_1..s_{n-2}, s_n⟩ = t_n H_n^+ t_n.
inline std::vector<SignedPermutation> h_minus_elements(int n) {
  const SignedPermutation t = sign_change(n, n);
  std::vector<SignedPermutation> out;
  for (const auto& g : h_plus_elements(n)) out.push_back(t * g * t);
  return out;
}

inline Int centralizer_order_in(const std::vector<SignedPermutation>& group,
                                const SignedPermutation& g) {
  return std::count_if(group.begin(), group.end(),
                       [&](const SignedPermutation& x) { return x * g == g * x; });
}

// ---------------------------------------------------------------------------
// The block subgroup W_a × W_b

inline SignedPermutation restrict_to_block(const SignedPermutation& g, int offset, int len) {
  SignedPermutation r{std::vector<int>(len), std::vector<int>(len)};
  for (int i = 0; i < len; ++i) {
    r.image[i] = g.image[offset + i] - offset;
    r.signs[i] = g.signs[offset + i];
  }
  return r;
}

/// W_a on points {1..a} times W_b on {a+1..n}, each factor even-signed.
struct BlockSubgroup {
  int n = 0, a = 0, b = 0;
  const GroupTable* whole = nullptr;
  const GroupTable* left = nullptr;
  const GroupTable* right = nullptr;
  std::vector<int> members;       // element indices in *whole
  std::vector<int> left_class;    // per member: class id in *left
  std::vector<int> right_class;   // per member: class id in *right
  std::vector<int> position;      // element index in *whole -> member position or -1

  Int order() const { return static_cast<Int>(members.size()); }
};

inline BlockSubgroup make_block_subgroup(int n, int a) {
  BlockSubgroup h;
  h.n = n;
  h.a = a;
  h.b = n - a;
  if (a < 1 || h.b < 1) throw std::invalid_argument("make_block_subgroup: need 1 <= a < n");
  h.whole = &group_table(n);
  h.left = &group_table(a);
  h.right = &group_table(h.b);
  h.position.assign(h.whole->elements.size(), -1);
  for (std::size_t i = 0; i < h.whole->elements.size(); ++i) {
    const auto& g = h.whole->elements[i];
    if (!std::all_of(g.image.begin(), g.image.begin() + a, [&](int x) { return x < a; })) continue;
    const auto ga = restrict_to_block(g, 0, a);
    const auto gb = restrict_to_block(g, a, h.b);
    if (!ga.in_type_d() || !gb.in_type_d()) continue;
    h.position[i] = static_cast<int>(h.members.size());
    h.members.push_back(static_cast<int>(i));
    h.left_class.push_back(h.left->class_id(ga));
    h.right_class.push_back(h.right->class_id(gb));
  }
  return h;
}

/// A class function of W_a × W_b, given on pairs of local class labels.
using ProductClassFunction = std::function<Int(const DClassType&, const DClassType&)>;

/// Values of Ind_H^W(f) on each class of W_n, from
///   Ind f(g) = |C_W(g)| / |H| · Σ_{h ∈ H ∩ Cl(g)} f(h).
inline std::vector<Int> induce_to_classes(const BlockSubgroup& h, const ProductClassFunction& f) {
  const GroupTable& w = *h.whole;
  std::vector<Int> sums(w.class_types.size(), 0);
  // f only depends on the pair of local classes
  std::map<std::pair<int, int>, Int> f_cache;
  for (std::size_t k = 0; k < h.members.size(); ++k) {
    const auto key = std::make_pair(h.left_class[k], h.right_class[k]);
    auto it = f_cache.find(key);
    if (it == f_cache.end())
      it = f_cache
               .emplace(key, f(h.left->class_types[key.first], h.right->class_types[key.second]))
               .first;
    sums[w.class_of[h.members[k]]] += it->second;
  }
  std::vector<Int> values(sums.size());
  for (std::size_t c = 0; c < sums.size(); ++c)
    values[c] = detail::exact_div(w.centralizer_order(static_cast<int>(c)) * sums[c], h.order(),
                                  "induced character value");
  return values;
}

/// Ind_H^W(f)(g) straight from (1/|H|) Σ_{x ∈ W} f°(x g x⁻¹).
inline Int induce_elementwise(const BlockSubgroup& h, const ProductClassFunction& f,
                              const SignedPermutation& g) {
  const GroupTable& w = *h.whole;
  Int total = 0;
  for (const auto& x : w.elements) {
    const int pos = h.position[w.index_of(conjugate_by(x, g))];
    if (pos < 0) continue;
    total += f(h.left->class_types[h.left_class[pos]], h.right->class_types[h.right_class[pos]]);
  }
  return detail::exact_div(total, h.order(), "elementwise induced value");
}

/// ⟨φ, ψ⟩_W for class functions given per class id of `w` (real-valued).
inline Int class_inner_product(const GroupTable& w, const std::vector<Int>& phi,
                               const std::vector<Int>& psi) {
  Int total = 0;
  for (std::size_t c = 0; c < phi.size(); ++c) total += w.class_sizes[c] * phi[c] * psi[c];
  return detail::exact_div(total, w.order(), "class inner product");
}

// ---------------------------------------------------------------------------
// Character tables on explicit classes, and the verification drivers

struct OracleCharTable {
  int n = 0;
  std::vector<IrrLabelD> labels;
  std::vector<std::vector<Int>> values;  // values[label][class id of group_table(n)]
};

inline OracleCharTable oracle_char_table(int n) {
  const GroupTable& w = group_table(n);
  OracleCharTable table{n, d_irr_labels(n), {}};
  for (const auto& x : table.labels) {
    auto& row = table.values.emplace_back();
    for (int rep : w.class_reps) row.push_back(d_char_value(x, classify_element(w.elements[rep], w)));
  }
  return table;
}

inline DecompositionResult oracle_induce(const BlockSubgroup& h, const IrrLabelD& left,
                                         const IrrLabelD& right) {
  const auto induced = induce_to_classes(h, [&](const DClassType& ca, const DClassType& cb) {
    return d_char_value(left, ca) * d_char_value(right, cb);
  });
  const OracleCharTable table = oracle_char_table(h.n);
  DecompositionResult result{{}, "oracle"};
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    if (Int m = class_inner_product(*h.whole, induced, table.values[i]); m != 0)
      result.multiplicities.emplace(table.labels[i], m);
  }
  return result;
}

inline DecompositionResult oracle_induce(int n, int a, int b, const IrrLabelD& left,
                                         const IrrLabelD& right) {
  if (a + b != n) throw std::invalid_argument("oracle_induce: a + b != n");
  return oracle_induce(make_block_subgroup(n, a), left, right);
}

/// ⟨Res_H X, A ⊠ B⟩_H summed over the explicit elements of H.
inline Int oracle_restrict(const BlockSubgroup& h, const IrrLabelD& x, const IrrLabelD& left,
                           const IrrLabelD& right) {
  Int total = 0;
  for (std::size_t k = 0; k < h.members.size(); ++k) {
    const auto& g = h.whole->elements[h.members[k]];
    total += d_char_value(x, classify_element(g, *h.whole)) *
             d_char_value(left, h.left->class_types[h.left_class[k]]) *
             d_char_value(right, h.right->class_types[h.right_class[k]]);
  }
  return detail::exact_div(total, h.order(), "restriction multiplicity");
}

struct Mismatch {
  IrrLabelD left;
  IrrLabelD right;
  IrrLabelD x;
  Int formula = 0;
  Int oracle = 0;
};

struct VerificationReport {
  int n = 0, a = 0, b = 0;
  std::size_t pairs_checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares induced_multiplicity with oracle_induce for every (A ⊠ B, X).
inline VerificationReport verify_proposition(int n, int a, int b) {
  if (n < 4 || n > kOracleMaxRank || a < 1 || b < 1 || a + b != n)
    throw std::invalid_argument("verify_proposition: need 4 <= n <= 6 and (a,b) a split of n");
  VerificationReport report{n, a, b, 0, {}};
  const BlockSubgroup h = make_block_subgroup(n, a);
  const auto targets = d_irr_labels(n);
  for (const auto& left : d_irr_labels(a)) {
    for (const auto& right : d_irr_labels(b)) {
      const InducedQuery q{n, a, b, left, right};
      const DecompositionResult oracle = oracle_induce(h, left, right);
      for (const auto& x : targets) {
        const Int expected = oracle.at(x);
        const Int formula = induced_multiplicity(q, x);
        ++report.pairs_checked;
        if (formula != expected) report.mismatches.push_back({left, right, x, formula, expected});
      }
    }
  }
  return report;
}

}  // namespace weyld
