#pragma once

// Coefficient formulas for the associated Laguerre polynomials:
//   o_n(x) = sum_k O_{n,k} x^k (-1)^{n-k}   (Model I,  L_n(x; X, Y))
//   e_n(x) = sum_k E_{n,k} x^k (-1)^{n-k}   (Model II, L_n^(2)(x; X, Y))
// computed three ways (terminating 3F2, mutual recursion, two-term m-sum),
// plus the alternative 3F2 normalisation and truncated 2F0 series.

#include <array>
#include <vector>

#include "alag/exactpoly.hpp"
#include "alag/family.hpp"
#include "alag/series.hpp"

namespace alag {

enum class CoefficientSource { closed, recursive, double_sum };

/// binom(a, b) for integer a and b: zero when b < 0, otherwise
/// a(a-1)...(a-b+1)/b!, so binom(-1, 0) = 1 and binom(a, b) = 0 for 0 <= a < b.
Integer binomial(long a, long b);

/// (base)_k = base (base+1) ... (base+k-1); (base)_0 = 1. Throws for k < 0.
Poly rising_factorial(const Poly& base, int k);

/// prefactor * 3F2(upper; lower; 1) where upper[0] is the constant -m.
/// Each term prefactor*(a1)_j(a2)_j(a3)_j / ((b1)_j (b2)_j j!) is formed exactly;
/// the polynomial part of the denominator has to divide the numerator and the
/// final sum has to be integral. Throws std::invalid_argument for
/// non-terminating input and std::domain_error for non-polynomial results.
Poly f32_terminating(const std::array<Poly, 3>& upper, const std::array<Poly, 2>& lower, int m,
                     const Poly& prefactor = Poly(1));

/// O_{n,k} or E_{n,k} via the closed 3F2 forms; sign (-1)^{n-k} not included.
Poly coeff_closed(Family model, int n, int k);

/// O_{n,k} or E_{n,k} via E_{n,k} = O_{n-1,k-1} + (n-1+X)E_{n-1,k},
/// O_{n,k} = E_{n,k} + (n-1+Y)O_{n-1,k}. Out-of-range indices give 0.
Poly coeff_rec(Family model, int n, int k);

/// O_{n,k} or E_{n,k} via the two-term sum over m = min(w_0, a_1, ..., a_k) - 1.
Poly coeff_double_sum(Family model, int n, int k);

Poly coefficient(Family model, int n, int k, CoefficientSource source);

/// Both recursive tables up to n_max, built once.
class CoefficientTable {
 public:
  explicit CoefficientTable(int n_max);

  int n_max() const { return n_max_; }
  /// Zero outside 0 <= k <= n <= n_max.
  const Poly& at(Family model, int n, int k) const;

 private:
  int n_max_;
  std::vector<std::vector<Poly>> e_;
  std::vector<std::vector<Poly>> o_;
};

/// The binomial/Pochhammer identity behind the single-3F2 form (E or O variant)
/// at fixed (n, k, m), checked as a polynomial identity in Y. The (Y)_{m-1} term is 0 at m = 0.
bool contiguous_identity(Family model, int n, int k, int m);

/// sum_k coefficient(model, n, k) (-1)^{n-k} x^k.
Poly assemble_polynomial(Family model, int n, CoefficientSource source);

/// L_n(x; X, Y) = (Y)_n (X+1)_n (-1)^n / n! * sum_k (-n)_k / ((Y)_k (X+1)_k)
///                * 3F2(k-n, X, Y-1; Y+k, X+k+1; 1) x^k.
Poly f32_alt_form(int n);

/// sum_{j=0}^{order} (a)_j (b)_j x^j / j!.
TruncatedSeries f20_series(const Poly& a, const Poly& b, unsigned order);

}  // namespace alag
