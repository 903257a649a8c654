#include "alag/recurrence.hpp"

#include <stdexcept>

namespace alag {

std::vector<Poly> generate(const RecurrenceSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("generate: n must be non-negative");
  std::vector<Poly> p;
  p.reserve(static_cast<std::size_t>(n) + 1);
  p.emplace_back(1);
  Poly previous;  // p_{-1}
  for (int k = 0; k < n; ++k) {
    Poly next = (poly_x() - spec.b(k)) * p.back();
    if (k > 0) next -= spec.lambda(k) * previous;
    previous = p.back();
    p.push_back(std::move(next));
  }
  return p;
}

RecurrenceSpec model1_spec() {
  return {"model1",
          [](int k) { return Poly(2L * k) + poly_X() + poly_Y(); },
          [](int k) { return (Poly(k) + poly_X()) * (Poly(k - 1) + poly_Y()); }};
}

RecurrenceSpec model2_spec() {
  return {"model2",
          [](int k) { return k == 0 ? poly_X() : Poly(2L * k - 1) + poly_X() + poly_Y(); },
          [](int k) { return (Poly(k - 1) + poly_X()) * (Poly(k - 1) + poly_Y()); }};
}

RecurrenceSpec xyz_spec() {
  return {"xyz",
          [](int k) { return k == 0 ? poly_X() * poly_Y() * poly_Z() : Poly(2L * k - 1) + poly_X() + poly_Y(); },
          [](int k) { return (Poly(k - 1) + poly_X()) * (Poly(k - 1) + poly_Y()); }};
}

EvenOddSpec laguerre_even_odd() {
  return {"even-odd-laguerre", [](int k) -> Poly {
            if (k == 0) return Poly();
            const int half = k / 2;
            return k % 2 == 0 ? Poly(half - 1) + poly_Y() : Poly(half) + poly_X();
          }};
}

RecurrenceSpec even_odd_parent(const EvenOddSpec& es) {
  return {es.name, [](int) { return Poly(); }, es.Lambda};
}

RecurrenceSpec spec_by_name(std::string_view name) {
  if (name == "model1") return model1_spec();
  if (name == "model2") return model2_spec();
  if (name == "xyz") return xyz_spec();
  if (name == "even-odd-laguerre") return even_odd_parent(laguerre_even_odd());
  throw std::invalid_argument("unknown recurrence spec \"" + std::string(name) + "\"");
}

EvenOddSplit even_odd_split(const EvenOddSpec& es) {
  if (!es.Lambda(0).is_zero()) throw std::invalid_argument("even_odd_split: Lambda(0) must be 0");
  const Sequence L = es.Lambda;
  RecurrenceSpec even{es.name + "/even",
                      [L](int k) { return L(2 * k + 1) + L(2 * k); },
                      [L](int k) { return L(2 * k - 1) * L(2 * k); }};
  RecurrenceSpec odd{es.name + "/odd",
                     [L](int k) { return L(2 * k + 2) + L(2 * k + 1); },
                     [L](int k) { return L(2 * k + 1) * L(2 * k); }};
  return {std::move(even), std::move(odd)};
}

namespace {

// Replaces x^(2j + parity) by x^j; every x-exponent must have the given parity.
Poly halve_x(const Poly& p, unsigned parity) {
  Poly out;
  for (const auto& [e, c] : p.terms()) {
    if (e[Var::x] % 2 != parity) {
      throw std::logic_error("even_odd_extract: parity violated in " + p.to_string());
    }
    Exponents h = e;
    h[Var::x] = static_cast<std::uint16_t>((e[Var::x] - parity) / 2);
    out.add_term(h, c);
  }
  return out;
}

}  // namespace

EvenOddFamilies even_odd_extract(const EvenOddSpec& es, int n) {
  if (n < 0) throw std::invalid_argument("even_odd_extract: n must be non-negative");
  if (!es.Lambda(0).is_zero()) throw std::invalid_argument("even_odd_extract: Lambda(0) must be 0");
  const auto P = generate(even_odd_parent(es), 2 * n + 1);
  EvenOddFamilies out;
  for (int k = 0; k <= n; ++k) {
    out.even.push_back(halve_x(P[2 * k], 0));
    out.odd.push_back(halve_x(P[2 * k + 1], 1));
  }
  return out;
}

}  // namespace alag
