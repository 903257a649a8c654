#include <random>

#include "alag/moments.hpp"
#include "alag/permcomb.hpp"
#include "alag/verify.hpp"
#include "test_support.hpp"

using namespace alag;
using alag::testing::factorial;

namespace {

const Poly& X = poly_X();
const Poly& Y = poly_Y();
const Poly& Z = poly_Z();

// Motzkin numbers by their own convolution recurrence.
std::vector<std::uint64_t> motzkin_numbers(int n) {
  std::vector<std::uint64_t> m{1, 1};
  for (int k = 2; k <= n; ++k) {
    std::uint64_t v = m[static_cast<std::size_t>(k) - 1];
    for (int i = 0; i <= k - 2; ++i) v += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(k - 2 - i)];
    m.push_back(v);
  }
  return m;
}

}  // namespace

TEST_CASE("Motzkin paths") {
  CHECK_NOTHROW(MotzkinPath({Step::up, Step::level, Step::down}));
  CHECK_THROWS_AS(MotzkinPath({Step::down, Step::up}), std::invalid_argument);
  CHECK_THROWS_AS(MotzkinPath({Step::up}), std::invalid_argument);
  const auto expected = motzkin_numbers(12);
  for (int n = 0; n <= 12; ++n) {
    std::uint64_t count = 0;
    for_each_motzkin_path(n, [&](const MotzkinPath& p) {
      ++count;
      CHECK(p.length() == n);
    });
    CHECK(count == expected[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("unit weights count Motzkin paths") {
  const RecurrenceSpec ones{"ones", [](int) { return Poly(1); }, [](int) { return Poly(1); }};
  const auto expected = motzkin_numbers(14);
  for (int n = 0; n <= 14; ++n) {
    CHECK(moment(ones, n) == Poly(Integer(static_cast<unsigned long>(expected[static_cast<std::size_t>(n)]))));
  }
}

TEST_CASE("moment examples") {
  const RecurrenceSpec m1 = model1_spec();
  CHECK(moment(m1, 0) == Poly(1));
  CHECK(moment(m1, 1) == X + Y);
  CHECK(moment(m1, 2) == (X + Y).pow(2) + (Poly(1) + X) * Y);
  CHECK(moment_xyz(0) == Poly(1));
  CHECK(moment_xyz(1) == X * Y * Z);
  CHECK(moment_xyz(2) == (X * Y * Z).pow(2) + X * Y);
  CHECK_THROWS_AS(moment(m1, -1), std::invalid_argument);
}

TEST_CASE("path sum, weight sum and transfer agree") {
  for (const auto& spec : {model1_spec(), model2_spec(), xyz_spec()}) {
    const MomentSequence seq = moments(spec, 9);
    REQUIRE(seq.values.size() == 10);
    for (int n = 0; n <= 9; ++n) {
      Poly by_paths;
      for_each_motzkin_path(n, [&](const MotzkinPath& p) { by_paths += path_weight(spec, p); });
      CHECK(by_paths == moment(spec, n));
      CHECK(seq.values[static_cast<std::size_t>(n)] == moment(spec, n));
      CHECK(moment_transfer(spec, n) == moment(spec, n));
    }
  }
}

TEST_CASE("even-odd moment lemma") {
  CHECK(even_odd_moment_check(laguerre_even_odd(), 0));
  CHECK(even_odd_moment_check(laguerre_even_odd(), 1));
  for (const auto& es : random_even_odd_specs()) {
    for (int n = 0; n <= 4; ++n) CHECK(even_odd_moment_check(es, n));
  }
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<long> a{0};
    for (int k = 1; k < 20; ++k) a.push_back(dist(rng));
    const EvenOddSpec es{"trial", [a](int k) { return Poly(a[static_cast<std::size_t>(k)]); }};
    for (int n = 0; n <= 4; ++n) CHECK(even_odd_moment_check(es, n));
  }
}

TEST_CASE("moment recurrence and generating function") {
  for (int J = 0; J <= 8; ++J) CHECK(moment_recurrence_check(J));
  for (unsigned order = 0; order <= 10; ++order) CHECK(moment_gf_check(order));
}

TEST_CASE("orthogonality") {
  CHECK(linear_functional(LaguerreForm::recurrence, 1, 0).is_zero());
  for (int s = 0; s < 3; ++s) CHECK(linear_functional(LaguerreForm::alt_3f2, 3, s).is_zero());
  CHECK_FALSE(linear_functional(LaguerreForm::alt_3f2, 2, 2).is_zero());
  const RecurrenceSpec m1 = model1_spec();
  for (auto form : {LaguerreForm::alt_3f2, LaguerreForm::closed, LaguerreForm::recursive, LaguerreForm::double_sum,
                    LaguerreForm::recurrence}) {
    for (int n = 0; n <= 5; ++n) {
      for (int s = 0; s < n; ++s) CHECK(linear_functional(form, n, s).is_zero());
      Poly norm(1);
      for (int k = 1; k <= n; ++k) norm *= m1.lambda(k);
      CHECK(linear_functional(form, n, n) == norm);
    }
  }
}

TEST_CASE("theorem suite") {
  const Report r = theorem_suite(7);
  for (const auto& c : r) {
    INFO(c.theorem << " n=" << c.n);
    CHECK(c.pass);
  }
  const auto find = [&](const std::string& name, int n) -> const CheckResult* {
    for (const auto& c : r) {
      if (c.theorem == name && c.n == n) return &c;
    }
    return nullptr;
  };
  const CheckResult* lmu = find("Lmu", 2);
  REQUIRE(lmu != nullptr);
  CHECK(lmu->lhs == X * X + Poly(3) * X * Y + Y * Y + Y);
  const CheckResult* fact = find("factorial", 3);
  REQUIRE(fact != nullptr);
  CHECK(fact->lhs == Poly(24));
  const CheckResult* l2m = find("L2m", 1);
  REQUIRE(l2m != nullptr);
  CHECK(l2m->lhs == X);
  CHECK(find("cor-model2", 0) == nullptr);
}

TEST_CASE("factorial specialisation through n = 9") {
  const MomentSequence seq = moments(model1_spec(), 9);
  const Substitution ones{{Var::X, Poly(1)}, {Var::Y, Poly(1)}};
  for (int n = 0; n <= 9; ++n) {
    CHECK(substitute(seq.values[static_cast<std::size_t>(n)], ones) ==
          Poly(factorial(static_cast<unsigned long>(n) + 1)));
  }
}
