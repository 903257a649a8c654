#pragma once

// Moments of a three-term recurrence as weighted Motzkin path sums (a level
// step at height k weighs b_k, a down step from height k weighs lambda_k),
// the associated Laguerre moment identities, and the moment-side checks of
// the explicit 3F2 representation.

#include <functional>
#include <string>
#include <vector>

#include "alag/exactpoly.hpp"
#include "alag/recurrence.hpp"

namespace alag {

enum class Step : std::uint8_t { up, level, down };

class MotzkinPath {
 public:
  /// Throws std::invalid_argument if the height goes negative or does not end at 0.
  explicit MotzkinPath(std::vector<Step> steps);
  const std::vector<Step>& steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }

 private:
  std::vector<Step> steps_;
};

/// Every Motzkin path of length n, in lexicographic order up < level < down.
void for_each_motzkin_path(int n, const std::function<void(const MotzkinPath&)>& visit);

Poly path_weight(const RecurrenceSpec& spec, const MotzkinPath& path);

/// mu_n as the sum of path weights over all Motzkin paths of length n.
Poly moment(const RecurrenceSpec& spec, int n);

/// mu_n as the (0,0) entry of the n-th power of the Jacobi matrix
/// (transfer over heights); independent of the path enumeration.
Poly moment_transfer(const RecurrenceSpec& spec, int n);

struct MomentSequence {
  RecurrenceSpec spec;
  std::vector<Poly> values;  // mu_0..mu_N
};

/// mu_0..mu_n via the transfer recursion.
MomentSequence moments(const RecurrenceSpec& spec, int n);

/// moment(xyz_spec(), n).
Poly moment_xyz(int n);

/// mu_{2n}(0, a_k) == mu_n(a_{2k}+a_{2k+1}, a_{2k-1}a_{2k}) and
/// mu_{2n+2}(0, a_k) == a_1 mu_n(a_{2k+1}+a_{2k+2}, a_{2k}a_{2k+1}).
bool even_odd_moment_check(const EvenOddSpec& es, int n);

/// sum_{k<=J} theta_k (Y-1)_{J-k}(X)_{J-k}/(J-k)! == (Y)_J (X+1)_J / J!,
/// theta_k the Model I moments.
bool moment_recurrence_check(int J);

/// 2F0(Y, X+1; x) / 2F0(Y-1, X; x) agrees with sum theta_n x^n through x^order.
bool moment_gf_check(unsigned order);

/// Which construction supplies L_n(x; X, Y) to the linear functional.
enum class LaguerreForm { alt_3f2, closed, recursive, double_sum, recurrence };

/// L_n(x; X, Y) from the chosen construction.
Poly laguerre_polynomial(LaguerreForm form, int n);

/// L(x^s L_n) with L(x^j) = theta_j.
Poly linear_functional(LaguerreForm form, int n, int s);

struct CheckResult {
  std::string theorem;
  int n = 0;
  bool pass = false;
  Poly lhs;
  Poly rhs;
};

using Report = std::vector<CheckResult>;

/// Moment side (Motzkin paths) against the permutation and tableau sums for
/// each n <= n_max, plus the factorial specialisation theta_n(1,1) = (n+1)!.
/// Order: lemma-xyz, L2m, L1m, Lmu, cor-snplus1, cor-model2, cor-model2-shifted,
/// PTprop, PT, factorial.
Report theorem_suite(int n_max);

}  // namespace alag
