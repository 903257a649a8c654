#include "alag/hyperseries.hpp"
#include "alag/recurrence.hpp"
#include "test_support.hpp"

using namespace alag;
using alag::testing::factorial;

namespace {

const Poly& x = poly_x();
const Poly& X = poly_X();
const Poly& Y = poly_Y();

// (-1)^{n-k} [x^k] p_n from the three-term recurrence.
Poly coefficient_from_recurrence(const std::vector<Poly>& p, int n, int k) {
  Poly c = p[static_cast<std::size_t>(n)].coefficient_of(Var::x, static_cast<unsigned>(k));
  return (n - k) % 2 == 0 ? c : -c;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(-1, 0) == 1);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 3) == -4);
  CHECK(binomial(4, -1) == 0);
  for (long a = 0; a < 20; ++a) {
    for (long b = 1; b <= a; ++b) CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
  }
}

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(Y, 0) == Poly(1));
  CHECK(rising_factorial(Y, 2) == Y * Y + Y);
  CHECK(rising_factorial(X + Poly(2), 3) == (X + Poly(2)) * (X + Poly(3)) * (X + Poly(4)));
  for (int k = 0; k < 8; ++k) CHECK(rising_factorial(Poly(1), k) == Poly(factorial(static_cast<unsigned long>(k))));
  CHECK_THROWS_AS(rising_factorial(X, -1), std::invalid_argument);
}

TEST_CASE("terminating 3F2") {
  CHECK(f32_terminating({Poly(0), X, Y}, {X + Poly(1), Y + Poly(2)}, 0) == Poly(1));
  // Chu-Vandermonde-type check: 3F2(-m, a, c; b, c; 1) = 2F1(-m, a; b; 1) = (b-a)_m/(b)_m, here with b = a+1
  // so that the value is m!/(a+1)_m and multiplying by (a+1)_m gives m!.
  for (int m = 0; m < 6; ++m) {
    CHECK(f32_terminating({Poly(-m), X, Y}, {X + Poly(1), Y}, m, rising_factorial(X + Poly(1), m)) ==
          Poly(factorial(static_cast<unsigned long>(m))));
  }
  CHECK_THROWS_AS(f32_terminating({X, X, Y}, {X, Y}, 2), std::invalid_argument);
  CHECK_THROWS_AS(f32_terminating({Poly(-1), X, Y}, {Poly(2), Y}, 1), std::domain_error);
}

TEST_CASE("coefficient examples") {
  CHECK(coeff_closed(Family::O, 2, 1) == Poly(2) * X + Poly(2) * Y + Poly(2));
  CHECK(coeff_rec(Family::O, 1, 0) == X + Y);
  CHECK(coeff_rec(Family::E, 2, 1) == Poly(2) * X + Y + Poly(1));
  CHECK(coeff_rec(Family::E, 1, 0) == X);
  CHECK(coeff_rec(Family::O, 2, 1) == Poly(2) * X + Poly(2) * Y + Poly(2));
  CHECK(coeff_rec(Family::O, 0, 0) == Poly(1));
  CHECK(coeff_double_sum(Family::E, 1, 1) == Poly(1));
  CHECK(coeff_double_sum(Family::E, 2, 0) == X * (Poly(1) + X));
  CHECK(coeff_double_sum(Family::O, 2, 0) == X * (Poly(1) + X) + (Poly(1) + Y) * (X + Y));
  for (int n = 0; n < 8; ++n) {
    for (auto src : {CoefficientSource::closed, CoefficientSource::recursive, CoefficientSource::double_sum}) {
      CHECK(coefficient(Family::E, n, n, src) == Poly(1));
      CHECK(coefficient(Family::O, n, n, src) == Poly(1));
    }
  }
  CHECK(coeff_rec(Family::O, 3, 4).is_zero());
  CHECK(coeff_rec(Family::E, 3, -1).is_zero());
}

TEST_CASE("every coefficient source matches the recurrence polynomials") {
  constexpr int kN = 9;
  const auto l1 = generate(model1_spec(), kN);
  const auto l2 = generate(model2_spec(), kN);
  const CoefficientTable table(kN);
  for (int n = 0; n <= kN; ++n) {
    for (int k = 0; k <= n; ++k) {
      const Poly o = coefficient_from_recurrence(l1, n, k);
      const Poly e = coefficient_from_recurrence(l2, n, k);
      CHECK(table.at(Family::O, n, k) == o);
      CHECK(table.at(Family::E, n, k) == e);
      CHECK(coeff_closed(Family::O, n, k) == o);
      CHECK(coeff_closed(Family::E, n, k) == e);
      CHECK(coeff_double_sum(Family::O, n, k) == o);
      CHECK(coeff_double_sum(Family::E, n, k) == e);
    }
  }
}

TEST_CASE("coefficient table bounds") {
  const CoefficientTable t(3);
  CHECK(t.at(Family::E, 4, 0).is_zero());
  CHECK(t.at(Family::O, 2, 3).is_zero());
  CHECK_THROWS_AS(CoefficientTable(-1), std::invalid_argument);
}

TEST_CASE("contiguous identities") {
  CHECK(contiguous_identity(Family::E, 2, 1, 0));
  CHECK(contiguous_identity(Family::O, 3, 1, 1));
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(contiguous_identity(Family::E, n, k, 0));
      CHECK(contiguous_identity(Family::O, n, k, 0));
    }
  }
}

TEST_CASE("assembled polynomials") {
  for (auto src : {CoefficientSource::closed, CoefficientSource::recursive, CoefficientSource::double_sum}) {
    CHECK(assemble_polynomial(Family::O, 1, src) == x - (X + Y));
    CHECK(assemble_polynomial(Family::E, 1, src) == x - X);
    CHECK(assemble_polynomial(Family::O, 0, src) == Poly(1));
  }
}

TEST_CASE("alternative 3F2 normalisation") {
  CHECK(f32_alt_form(0) == Poly(1));
  CHECK(f32_alt_form(1) == x - (X + Y));
  CHECK(f32_alt_form(3) == assemble_polynomial(Family::O, 3, CoefficientSource::closed));
  CHECK(f32_alt_form(6) == generate(model1_spec(), 6).back());
}

TEST_CASE("2F0 series") {
  const TruncatedSeries zero = f20_series(Y, X, 0);
  CHECK(zero.order() == 0);
  CHECK(zero[0] == RationalPoly(Poly(1)));
  CHECK(f20_series(Y, X + Poly(1), 3)[1] == RationalPoly(Y * (X + Poly(1))));
  const auto s = f20_series(Y - Poly(1), X, 3);
  CHECK(s[2] == RationalPoly((Y - Poly(1)) * Y * X * (X + Poly(1)), Integer(2)));
}
