#pragma once

// Permutations, their record statistics, k-marked permutations and the
// weighted permutation sums that describe Laguerre moments and coefficients.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "alag/exactpoly.hpp"
#include "alag/family.hpp"

namespace alag {

inline constexpr int kMaxPermutationSize = 63;

/// Set of values in 1..63 as a bitmask.
class ValueSet {
 public:
  constexpr ValueSet() = default;
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  /// Members in increasing order.
  std::vector<int> values() const;

  friend constexpr ValueSet operator&(ValueSet a, ValueSet b) { return ValueSet(a.bits_ & b.bits_); }
  friend constexpr ValueSet operator|(ValueSet a, ValueSet b) { return ValueSet(a.bits_ | b.bits_); }
  /// Set difference.
  friend constexpr ValueSet operator-(ValueSet a, ValueSet b) { return ValueSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ValueSet, ValueSet) = default;

 private:
  constexpr explicit ValueSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// One-line notation of a bijection on {1..n}.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless values is a permutation of 1..n.
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return values_; }
  std::span<const int> view() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

struct StatBundle {
  ValueSet rlmin_set;
  ValueSet rlmax_set;
  ValueSet lrmin_set;
  ValueSet lrmax_set;
  ValueSet pivot_set;  // LRMAX and RLMIN together

  int rlmin() const { return rlmin_set.size(); }
  int rlmax() const { return rlmax_set.size(); }
  int lrmin() const { return lrmin_set.size(); }
  int lrmax() const { return lrmax_set.size(); }
  int pivot() const { return pivot_set.size(); }
};

/// Record statistics of any word of distinct positive integers (< 64).
StatBundle stats(std::span<const int> word);
inline StatBundle stats(const Permutation& p) { return stats(p.view()); }

/// A permutation with a marked increasing subsequence, stored by 0-based positions.
class MarkedPermutation {
 public:
  /// Throws std::invalid_argument unless positions are increasing, in range,
  /// and carry increasing values.
  MarkedPermutation(Permutation perm, std::vector<int> positions);

  const Permutation& perm() const { return perm_; }
  const std::vector<int>& positions() const { return positions_; }
  int marks() const { return static_cast<int>(positions_.size()); }
  /// The marked values a_1 < ... < a_k.
  std::vector<int> marked_values() const;

 private:
  Permutation perm_;
  std::vector<int> positions_;
};

struct PrimedStats {
  ValueSet lrmin_prime_set;
  ValueSet rlmin_prime_set;
  int lrmin_prime() const { return lrmin_prime_set.size(); }
  int rlmin_prime() const { return rlmin_prime_set.size(); }
};

/// For pi = w_0 a_1 w_1 ... a_k w_k:
///   LRMIN'(pi) = LRMIN(pi) \ LRMIN(w_0) \ {a_1..a_k}
///   RLMIN'(pi) = union_i RLMIN(w_i) intersected with [a_i, a_{i+1}], a_0 = 0, a_{k+1} = inf.
/// `positions` must be increasing and mark an increasing subsequence (unchecked here).
PrimedStats primed_stats(std::span<const int> perm, std::span<const int> positions);
inline PrimedStats primed_stats(const MarkedPermutation& mp) {
  return primed_stats(mp.perm().view(), mp.positions());
}

/// Calls f(std::span<const int>) for every permutation of 1..n in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> values(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(values.begin(), values.end(), 1);
  do {
    f(std::span<const int>(values));
  } while (std::next_permutation(values.begin(), values.end()));
}

/// Visits the family E (k-marked permutations of [n]) or O ((k+1)-marked
/// permutations of [n+1] with n+1 marked), each exactly once, ordered by
/// one-line notation and then lexicographically by marked position set.
void for_each_marked(int n, int k, Family family, const std::function<void(const MarkedPermutation&)>& visit);

/// Number of members of the family.
std::uint64_t count_marked(int n, int k, Family family);

/// sum over the family of X^{RLmin'} Y^{LRmin'}.
Poly marked_weighted_sum(int n, int k, Family family);

/// Reverses each block ending at a right-to-left minimum.
Permutation star(const Permutation& p);

/// sum_{S_n} X^{RLmin} Y^{LRmax} Z^{pivot}
Poly weighted_sum_xyz(int n);
/// sum_{S_n} X^{RLmin} Y^{LRmax - pivot}
Poly weighted_sum_model2(int n);
/// sum_{S_n} (X+1)^{RLmin - pivot} (X+Y)^{pivot} Y^{LRmax - pivot}
Poly weighted_sum_model1(int n);
/// sum_{S_{n+1}} X^{RLmin - 1} Y^{LRmax - pivot}
Poly weighted_sum_snplus1(int n);
/// X sum_{S_{n-1}} (X+1)^{RLmin - pivot} (X+Y)^{pivot} Y^{LRmax - pivot}, n >= 1.
/// Equals the Model II moment mu_n.
Poly weighted_sum_cor_model2(int n);
/// (X+1) sum_{S_{n-1}} (X+2)^{RLmin - pivot} (X+Y+1)^{pivot} Y^{LRmax - pivot}, n >= 1.
/// Equals the Model II moment mu_n with X replaced by X+1, not mu_n itself.
Poly weighted_sum_cor_model2_shifted(int n);
/// sum_{S_m} Y^{RLmin}
Poly rlmin_generating(int m);

}  // namespace alag
