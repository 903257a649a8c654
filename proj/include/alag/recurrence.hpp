#pragma once

// Monic orthogonal families from p_{n+1} = (x - b_n) p_n - lambda_n p_{n-1},
// p_0 = 1, p_{-1} = 0, and the even/odd splitting of families with b == 0.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "alag/exactpoly.hpp"

namespace alag {

using Sequence = std::function<Poly(int)>;

struct RecurrenceSpec {
  std::string name;
  Sequence b;       // k >= 0
  Sequence lambda;  // k >= 1
};

struct EvenOddSpec {
  std::string name;
  Sequence Lambda;  // k >= 0, Lambda(0) == 0
};

/// p_0..p_n as polynomials in x (coefficients in X, Y, Z).
std::vector<Poly> generate(const RecurrenceSpec& spec, int n);

/// Model I: b_n = 2n+X+Y, lambda_n = (n+X)(n+Y-1).
RecurrenceSpec model1_spec();
/// Model II: b_0 = X, b_n = 2n+X+Y-1, lambda_n = (n-1+X)(n-1+Y).
RecurrenceSpec model2_spec();
/// Model II sequences with b_0 replaced by XYZ.
RecurrenceSpec xyz_spec();

/// Lambda_{2n} = n-1+Y, Lambda_{2n+1} = n+X.
EvenOddSpec laguerre_even_odd();
/// The full family b == 0, lambda_k = Lambda_k whose members are even or odd in x.
RecurrenceSpec even_odd_parent(const EvenOddSpec& es);

/// Built-ins by CLI name: model1, model2, xyz, even-odd-laguerre.
/// Throws std::invalid_argument for unknown names.
RecurrenceSpec spec_by_name(std::string_view name);

struct EvenOddSplit {
  RecurrenceSpec even;
  RecurrenceSpec odd;
};

/// b_n(e) = L_{2n+1}+L_{2n}, lambda_n(e) = L_{2n-1}L_{2n};
/// b_n(o) = L_{2n+2}+L_{2n+1}, lambda_n(o) = L_{2n+1}L_{2n}  (L = Lambda, L_0 = 0).
EvenOddSplit even_odd_split(const EvenOddSpec& es);

struct EvenOddFamilies {
  std::vector<Poly> even;  // e_0..e_n
  std::vector<Poly> odd;   // o_0..o_n
};

/// Generates P_0..P_{2n+1} and reads off e_k(x) = P_{2k}(sqrt x), o_k(x) = P_{2k+1}(sqrt x)/sqrt x.
/// Throws std::logic_error if a P_k has a term of the wrong parity.
EvenOddFamilies even_odd_extract(const EvenOddSpec& es, int n);

}  // namespace alag
