#include "alag/hyperseries.hpp"

#include <stdexcept>
#include <string>

namespace alag {

Integer binomial(long a, long b) {
  if (b < 0) return 0;
  if (a >= 0) {
    if (b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
  }
  // Upper negation: binom(a, b) = (-1)^b binom(b - a - 1, b).
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(b - a - 1), static_cast<unsigned long>(b));
  return b % 2 == 0 ? r : Integer(-r);
}

namespace {

Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

void check_range(int n, int k, const char* who) {
  if (k < 0 || n < k) {
    throw std::invalid_argument(std::string(who) + ": need 0 <= k <= n, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  }
}

}  // namespace

Poly rising_factorial(const Poly& base, int k) {
  if (k < 0) throw std::invalid_argument("rising_factorial: negative length");
  Poly r(1);
  for (int i = 0; i < k; ++i) r *= base + Poly(i);
  return r;
}

Poly f32_terminating(const std::array<Poly, 3>& upper, const std::array<Poly, 2>& lower, int m,
                     const Poly& prefactor) {
  if (m < 0 || upper[0] != Poly(-m)) {
    throw std::invalid_argument("f32_terminating: first numerator parameter must be the constant -" +
                                std::to_string(m) + ", got " + upper[0].to_string());
  }
  RationalPoly sum;
  Poly numerator = prefactor;
  Poly denominator(1);
  for (int j = 0; j <= m; ++j) {
    if (j > 0) {
      for (const auto& a : upper) numerator *= a + Poly(j - 1);
      for (const auto& b : lower) denominator *= b + Poly(j - 1);
    }
    if (denominator.is_zero()) {
      throw std::domain_error("f32_terminating: denominator parameter vanishes at j=" + std::to_string(j));
    }
    const Integer content = denominator.content();
    Poly primitive;
    for (const auto& [e, c] : denominator.terms()) primitive.add_term(e, Integer(c / content));
    auto quotient = divide_exact(numerator, primitive);
    if (!quotient) {
      throw std::domain_error("f32_terminating: term " + std::to_string(j) + " is not a polynomial: (" +
                              numerator.to_string() + ")/(" + denominator.to_string() + ")");
    }
    sum += RationalPoly(std::move(*quotient), content * factorial(static_cast<unsigned long>(j)));
  }
  if (!sum.is_integral()) {
    throw std::domain_error("f32_terminating: result is not a polynomial: " + sum.to_string());
  }
  return sum.numerator();
}

Poly coeff_closed(Family model, int n, int k) {
  check_range(n, k, "coeff_closed");
  const Poly& X = poly_X();
  const Poly Ym1 = poly_Y() - Poly(1);
  if (model == Family::O) {
    const Poly prefactor = Poly(binomial(n, k)) * rising_factorial(X + Poly(k + 1), n - k);
    return f32_terminating({Poly(k - n), Poly(k + 1), Ym1}, {Poly(-n), X + Poly(k + 1)}, n - k, prefactor);
  }
  const Poly prefactor = Poly(binomial(n, k)) * rising_factorial(X + Poly(k), n - k);
  return f32_terminating({Poly(k - n), Poly(k), Ym1}, {Poly(-n), X + Poly(k)}, n - k, prefactor);
}

CoefficientTable::CoefficientTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("CoefficientTable: negative n_max");
  e_.resize(static_cast<std::size_t>(n_max) + 1);
  o_.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    e_[n].resize(static_cast<std::size_t>(n) + 1);
    o_[n].resize(static_cast<std::size_t>(n) + 1);
    if (n == 0) {
      e_[0][0] = Poly(1);
      o_[0][0] = Poly(1);
      continue;
    }
    const Poly e_weight = Poly(n - 1) + poly_X();
    const Poly o_weight = Poly(n - 1) + poly_Y();
    for (int k = 0; k <= n; ++k) {
      e_[n][k] = at(Family::O, n - 1, k - 1) + e_weight * at(Family::E, n - 1, k);
      o_[n][k] = e_[n][k] + o_weight * at(Family::O, n - 1, k);
    }
  }
}

const Poly& CoefficientTable::at(Family model, int n, int k) const {
  static const Poly zero;
  if (n < 0 || k < 0 || k > n || n > n_max_) return zero;
  return model == Family::E ? e_[n][k] : o_[n][k];
}

Poly coeff_rec(Family model, int n, int k) {
  if (n < 0 || k < 0 || k > n) return Poly();
  return CoefficientTable(n).at(model, n, k);
}

namespace {

// (base)_len, with an empty range (len < 0) contributing nothing.
Poly pochhammer_or_zero(const Poly& base, int len) {
  return len < 0 ? Poly() : rising_factorial(base, len);
}

}  // namespace

Poly coeff_double_sum(Family model, int n, int k) {
  check_range(n, k, "coeff_double_sum");
  if (n == k) return Poly(1);
  const Poly& X = poly_X();
  const Poly& Y = poly_Y();
  Poly sum;
  for (int m = 0; m <= n - k; ++m) {
    const Poly ym = rising_factorial(Y, m);
    if (model == Family::E) {
      // m+1 = a_1 < min(w_0), then m+1 = min(w_0) < a_1.
      const Integer shuffles = binomial(m + k - 1, m);
      const Integer first = binomial(n - m - 1, k - 1) * shuffles;
      const Integer second = binomial(n - m - 1, k) * shuffles;
      if (first != 0) sum += Poly(first) * ym * pochhammer_or_zero(X + Poly(k + m), n - k - m);
      if (second != 0) sum += Poly(second) * ym * X * pochhammer_or_zero(X + Poly(k + m + 1), n - k - m - 1);
    } else {
      // Marks a_1 < ... < a_{k+1} = n+1. For k = 0 the lone mark is n+1, which
      // can only be the minimum of w_0 and the marks when w_0 is empty (m = n).
      const Integer shuffles = binomial(m + k, m);
      const Integer choose_rest = k == 0 ? Integer(m == n ? 1 : 0) : binomial(n - m - 1, k - 1);
      const Integer first = choose_rest * shuffles;
      const Integer second = binomial(n - m - 1, k) * shuffles;
      if (first != 0) sum += Poly(first) * ym * pochhammer_or_zero(X + Poly(k + m + 1), n - k - m);
      if (second != 0) sum += Poly(second) * ym * X * pochhammer_or_zero(X + Poly(k + m + 2), n - k - m - 1);
    }
  }
  return sum;
}

Poly coefficient(Family model, int n, int k, CoefficientSource source) {
  switch (source) {
    case CoefficientSource::closed: return coeff_closed(model, n, k);
    case CoefficientSource::recursive: return coeff_rec(model, n, k);
    case CoefficientSource::double_sum: return coeff_double_sum(model, n, k);
  }
  throw std::invalid_argument("coefficient: unknown source");
}

bool contiguous_identity(Family model, int n, int k, int m) {
  check_range(n, k, "contiguous_identity");
  if (m < 0 || m > n - k) throw std::invalid_argument("contiguous_identity: need 0 <= m <= n-k");
  const Poly& Y = poly_Y();
  const Poly ym = rising_factorial(Y, m);
  const Poly ym1 = m == 0 ? Poly() : rising_factorial(Y, m - 1);
  const Poly shifted = rising_factorial(Y - Poly(1), m);
  // E uses binom(m+k-1, m) with correction binom(m+k-2, m-1)(k+m-1);
  // O shifts both by one.
  const int s = model == Family::E ? 0 : 1;
  const Integer shuffles = binomial(m + k - 1 + s, m);
  const Poly lhs = Poly(binomial(n - m - 1, k - 1) * shuffles) * ym + Poly(binomial(n - m - 1, k) * shuffles) * ym -
                   Poly(binomial(n - m, k) * binomial(m + k - 2 + s, m - 1) * (k + m - 1 + s)) * ym1;
  const Poly rhs = Poly(binomial(n - m, k) * shuffles) * shifted;
  return lhs == rhs;
}

Poly assemble_polynomial(Family model, int n, CoefficientSource source) {
  if (n < 0) throw std::invalid_argument("assemble_polynomial: n must be non-negative");
  Poly out;
  const CoefficientTable table(source == CoefficientSource::recursive ? n : 0);
  for (int k = 0; k <= n; ++k) {
    Poly c = source == CoefficientSource::recursive ? table.at(model, n, k) : coefficient(model, n, k, source);
    if ((n - k) % 2 != 0) c = -c;
    out += c * Poly::var(Var::x, static_cast<unsigned>(k));
  }
  return out;
}

Poly f32_alt_form(int n) {
  if (n < 0) throw std::invalid_argument("f32_alt_form: n must be non-negative");
  const Poly& X = poly_X();
  const Poly& Y = poly_Y();
  const Poly sign = n % 2 == 0 ? Poly(1) : Poly(-1);
  Poly sum;
  for (int k = 0; k <= n; ++k) {
    // (Y)_n (X+1)_n / ((Y)_k (X+1)_k) = (Y+k)_{n-k} (X+k+1)_{n-k}.
    const Poly prefactor = sign * rising_factorial(Poly(-n), k) * rising_factorial(Y + Poly(k), n - k) *
                           rising_factorial(X + Poly(k + 1), n - k);
    const Poly inner =
        f32_terminating({Poly(k - n), X, Y - Poly(1)}, {Y + Poly(k), X + Poly(k + 1)}, n - k, prefactor);
    sum += inner * Poly::var(Var::x, static_cast<unsigned>(k));
  }
  return RationalPoly(std::move(sum), factorial(static_cast<unsigned long>(n))).to_poly();
}

TruncatedSeries f20_series(const Poly& a, const Poly& b, unsigned order) {
  TruncatedSeries s(order);
  Poly numerator(1);
  for (unsigned j = 0; j <= order; ++j) {
    if (j > 0) numerator *= (a + Poly(static_cast<long>(j) - 1)) * (b + Poly(static_cast<long>(j) - 1));
    s[j] = RationalPoly(numerator, factorial(j));
  }
  return s;
}

}  // namespace alag
