#pragma once

// Sparse polynomials over Z in the four fixed variables x, X, Y, Z.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace alag {

using Integer = mpz_class;

enum class Var : std::uint8_t { x = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::size_t kNumVars = 4;

char var_name(Var v);

/// Exponent vector (ex, eX, eY, eZ).
struct Exponents {
  std::array<std::uint16_t, kNumVars> e{};

  constexpr Exponents() = default;
  constexpr Exponents(std::uint16_t ex, std::uint16_t eX, std::uint16_t eY, std::uint16_t eZ)
      : e{ex, eX, eY, eZ} {}

  constexpr std::uint16_t operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }
  constexpr std::uint16_t& operator[](Var v) { return e[static_cast<std::size_t>(v)]; }

  constexpr unsigned degree() const { return unsigned{e[0]} + e[1] + e[2] + e[3]; }

  friend constexpr Exponents operator+(Exponents a, const Exponents& b) {
    for (std::size_t i = 0; i < kNumVars; ++i) a.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return a;
  }
  friend constexpr bool operator==(const Exponents&, const Exponents&) = default;
};

/// Canonical term order: graded-lex, largest term first.
struct CanonicalOrder {
  constexpr bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

class Poly {
 public:
  using TermMap = std::map<Exponents, Integer, CanonicalOrder>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor): integer literals are polynomials
  Poly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static Poly var(Var v, unsigned power = 1);
  static Poly monomial(const Exponents& e, const Integer& c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value when the polynomial is constant, nullopt otherwise.
  std::optional<Integer> constant_value() const;

  Integer coefficient(const Exponents& e) const;
  unsigned degree(Var v) const;
  unsigned total_degree() const;
  /// Coefficient of v^power as a polynomial in the remaining variables.
  Poly coefficient_of(Var v, unsigned power) const;
  /// gcd of all coefficients, signed like the leading coefficient; 0 for the zero polynomial.
  Integer content() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Integer& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(unsigned k) const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Integer& c);

  /// Canonical human-readable form, e.g. "x^2 - 2*x*X + X*Y - 1".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Partial simultaneous substitution; disengaged entries leave the variable unchanged.
struct Substitution {
  std::array<std::optional<Poly>, kNumVars> values;

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<Var, Poly>> init);
  Substitution& set(Var v, Poly p);
};

Poly substitute(const Poly& p, const Substitution& s);

/// a / b when b divides a in Z[x,X,Y,Z], nullopt otherwise. b must be non-zero.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Parses expressions built from integers, x X Y Z, + - *, ^ with a
/// non-negative integer exponent, and parentheses. Throws std::invalid_argument.
Poly parse_poly(std::string_view text);

inline const Poly& poly_x() {
  static const Poly p = Poly::var(Var::x);
  return p;
}
inline const Poly& poly_X() {
  static const Poly p = Poly::var(Var::X);
  return p;
}
inline const Poly& poly_Y() {
  static const Poly p = Poly::var(Var::Y);
  return p;
}
inline const Poly& poly_Z() {
  static const Poly p = Poly::var(Var::Z);
  return p;
}

/// Polynomial with rational coefficients, stored as numerator / positive integer.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(Poly numerator);  // NOLINT(google-explicit-constructor)
  RationalPoly(Poly numerator, Integer denominator);

  const Poly& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }
  /// The numerator when the denominator is 1; throws std::domain_error otherwise.
  Poly to_poly() const;
  /// The value when constant, as (numerator, denominator).
  std::optional<mpq_class> constant_value() const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  /// Division by a non-zero rational constant.
  RationalPoly& operator/=(const mpq_class& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator/(RationalPoly a, const mpq_class& c) { return a /= c; }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  std::string to_string() const;

 private:
  void normalize();

  Poly num_;
  Integer den_{1};
};

}  // namespace alag
