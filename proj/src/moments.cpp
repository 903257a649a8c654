#include "alag/moments.hpp"

#include <stdexcept>
#include <utility>

#include "alag/hyperseries.hpp"
#include "alag/permcomb.hpp"
#include "alag/tableaux.hpp"

namespace alag {

MotzkinPath::MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int height = 0;
  for (Step s : steps_) {
    height += s == Step::up ? 1 : s == Step::down ? -1 : 0;
    if (height < 0) throw std::invalid_argument("MotzkinPath: height went negative");
  }
  if (height != 0) throw std::invalid_argument("MotzkinPath: does not return to height 0");
}

namespace {

// Depth-first over Motzkin paths of length n. push(step, height_before) and
// pop() bracket each step; leaf() runs once per complete path.
template <class Push, class Pop, class Leaf>
void motzkin_dfs(int n, Push&& push, Pop&& pop, Leaf&& leaf) {
  auto rec = [&](auto&& self, int t, int h) -> void {
    if (t == n) {
      if (h == 0) leaf();
      return;
    }
    const int remaining = n - t - 1;
    if (h + 1 <= remaining) {
      push(Step::up, h);
      self(self, t + 1, h + 1);
      pop();
    }
    if (h <= remaining) {
      push(Step::level, h);
      self(self, t + 1, h);
      pop();
    }
    if (h > 0 && h - 1 <= remaining) {
      push(Step::down, h);
      self(self, t + 1, h - 1);
      pop();
    }
  };
  rec(rec, 0, 0);
}

struct Weights {
  std::vector<Poly> b;       // b_0..b_{n/2}
  std::vector<Poly> lambda;  // lambda_0 (unused)..lambda_{n/2}

  Weights(const RecurrenceSpec& spec, int n) {
    const int top = n / 2 + 1;
    for (int k = 0; k <= top; ++k) {
      b.push_back(spec.b(k));
      lambda.push_back(k == 0 ? Poly() : spec.lambda(k));
    }
  }
};

}  // namespace

void for_each_motzkin_path(int n, const std::function<void(const MotzkinPath&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_motzkin_path: n must be non-negative");
  std::vector<Step> steps;
  motzkin_dfs(
      n, [&](Step s, int) { steps.push_back(s); }, [&] { steps.pop_back(); },
      [&] { visit(MotzkinPath(steps)); });
}

Poly path_weight(const RecurrenceSpec& spec, const MotzkinPath& path) {
  Poly w(1);
  int h = 0;
  for (Step s : path.steps()) {
    switch (s) {
      case Step::up: ++h; break;
      case Step::level: w *= spec.b(h); break;
      case Step::down: w *= spec.lambda(h); --h; break;
    }
  }
  return w;
}

Poly moment(const RecurrenceSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("moment: n must be non-negative");
  const Weights weights(spec, n);
  // prefix[i] is the weight of the first i steps.
  std::vector<Poly> prefix{Poly(1)};
  Poly total;
  motzkin_dfs(
      n,
      [&](Step s, int h) {
        switch (s) {
          case Step::up: prefix.push_back(prefix.back()); break;
          case Step::level: prefix.push_back(prefix.back() * weights.b[static_cast<std::size_t>(h)]); break;
          case Step::down: prefix.push_back(prefix.back() * weights.lambda[static_cast<std::size_t>(h)]); break;
        }
      },
      [&] { prefix.pop_back(); }, [&] { total += prefix.back(); });
  return total;
}

Poly moment_transfer(const RecurrenceSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("moment_transfer: n must be non-negative");
  return moments(spec, n).values.back();
}

MomentSequence moments(const RecurrenceSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("moments: n must be non-negative");
  const Weights weights(spec, n);
  const int top = n / 2 + 1;
  // row[h] = weight of all paths of the current length from height 0 to height h.
  std::vector<Poly> row(static_cast<std::size_t>(top) + 2);
  row[0] = Poly(1);
  MomentSequence out{spec, {Poly(1)}};
  for (int t = 1; t <= n; ++t) {
    std::vector<Poly> next(row.size());
    for (int h = 0; h <= top; ++h) {
      Poly v;
      if (h > 0) v += row[static_cast<std::size_t>(h - 1)];
      v += row[static_cast<std::size_t>(h)] * weights.b[static_cast<std::size_t>(h)];
      if (h + 1 <= top) v += row[static_cast<std::size_t>(h + 1)] * weights.lambda[static_cast<std::size_t>(h + 1)];
      next[static_cast<std::size_t>(h)] = std::move(v);
    }
    row = std::move(next);
    out.values.push_back(row[0]);
  }
  return out;
}

Poly moment_xyz(int n) { return moment(xyz_spec(), n); }

bool even_odd_moment_check(const EvenOddSpec& es, int n) {
  if (n < 0) throw std::invalid_argument("even_odd_moment_check: n must be non-negative");
  const Sequence a = es.Lambda;
  if (!a(0).is_zero()) throw std::invalid_argument("even_odd_moment_check: Lambda(0) must be 0");
  const RecurrenceSpec full{"full", [](int) { return Poly(); }, a};
  const RecurrenceSpec even{"even", [a](int k) { return a(2 * k) + a(2 * k + 1); },
                            [a](int k) { return a(2 * k - 1) * a(2 * k); }};
  const RecurrenceSpec odd{"odd", [a](int k) { return a(2 * k + 1) + a(2 * k + 2); },
                           [a](int k) { return a(2 * k) * a(2 * k + 1); }};
  const bool even_ok = moment(full, 2 * n) == moment(even, n);
  const bool odd_ok = moment(full, 2 * n + 2) == a(1) * moment(odd, n);
  return even_ok && odd_ok;
}

namespace {

std::vector<Poly> theta_values(int n_max) {
  return moments(model1_spec(), n_max).values;
}

Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

}  // namespace

bool moment_recurrence_check(int J) {
  if (J < 0) throw std::invalid_argument("moment_recurrence_check: J must be non-negative");
  const auto theta = theta_values(J);
  const Poly& X = poly_X();
  const Poly& Y = poly_Y();
  RationalPoly lhs;
  for (int k = 0; k <= J; ++k) {
    const int d = J - k;
    lhs += RationalPoly(theta[static_cast<std::size_t>(k)] * rising_factorial(Y - Poly(1), d) * rising_factorial(X, d),
                        factorial(static_cast<unsigned long>(d)));
  }
  const RationalPoly rhs(rising_factorial(Y, J) * rising_factorial(X + Poly(1), J),
                         factorial(static_cast<unsigned long>(J)));
  return lhs == rhs;
}

bool moment_gf_check(unsigned order) {
  const Poly& X = poly_X();
  const Poly& Y = poly_Y();
  const TruncatedSeries quotient =
      series_div(f20_series(Y, X + Poly(1), order), f20_series(Y - Poly(1), X, order));
  const auto theta = theta_values(static_cast<int>(order));
  for (unsigned j = 0; j <= order; ++j) {
    if (!(quotient[j] == RationalPoly(theta[j]))) return false;
  }
  return true;
}

Poly laguerre_polynomial(LaguerreForm form, int n) {
  switch (form) {
    case LaguerreForm::alt_3f2: return f32_alt_form(n);
    case LaguerreForm::closed: return assemble_polynomial(Family::O, n, CoefficientSource::closed);
    case LaguerreForm::recursive: return assemble_polynomial(Family::O, n, CoefficientSource::recursive);
    case LaguerreForm::double_sum: return assemble_polynomial(Family::O, n, CoefficientSource::double_sum);
    case LaguerreForm::recurrence: return generate(model1_spec(), n).back();
  }
  throw std::invalid_argument("laguerre_polynomial: unknown form");
}

Poly linear_functional(LaguerreForm form, int n, int s) {
  if (n < 0 || s < 0) throw std::invalid_argument("linear_functional: n and s must be non-negative");
  const Poly ln = laguerre_polynomial(form, n);
  const auto theta = theta_values(n + s);
  Poly out;
  for (int k = 0; k <= n; ++k) {
    out += ln.coefficient_of(Var::x, static_cast<unsigned>(k)) * theta[static_cast<std::size_t>(k + s)];
  }
  return out;
}

Report theorem_suite(int n_max) {
  if (n_max < 0) throw std::invalid_argument("theorem_suite: n_max must be non-negative");
  const RecurrenceSpec model1 = model1_spec();
  const RecurrenceSpec model2 = model2_spec();
  std::vector<Poly> mu1;
  std::vector<Poly> mu2;
  for (int n = 0; n <= n_max; ++n) {
    mu1.push_back(moment(model1, n));
    mu2.push_back(moment(model2, n));
  }

  Report report;
  auto add = [&report](std::string name, int n, Poly lhs, Poly rhs) {
    const bool pass = lhs == rhs;
    report.push_back({std::move(name), n, pass, std::move(lhs), std::move(rhs)});
  };
  const auto at = [](const std::vector<Poly>& v, int n) -> const Poly& { return v[static_cast<std::size_t>(n)]; };

  for (int n = 0; n <= n_max; ++n) add("lemma-xyz", n, moment_xyz(n), weighted_sum_xyz(n));
  for (int n = 0; n <= n_max; ++n) add("L2m", n, at(mu2, n), weighted_sum_model2(n));
  for (int n = 0; n <= n_max; ++n) add("L1m", n, at(mu1, n), weighted_sum_model1(n));
  for (int n = 0; n <= n_max; ++n) add("Lmu", n, at(mu1, n), weighted_sum_snplus1(n));
  for (int n = 0; n <= n_max; ++n) add("cor-snplus1", n, weighted_sum_model1(n), weighted_sum_snplus1(n));
  for (int n = 1; n <= n_max; ++n) add("cor-model2", n, at(mu2, n), weighted_sum_cor_model2(n));
  for (int n = 1; n <= n_max; ++n) {
    const Substitution shift{{Var::X, poly_X() + Poly(1)}};
    add("cor-model2-shifted", n, substitute(at(mu2, n), shift), weighted_sum_cor_model2_shifted(n));
  }
  for (int n = 1; n <= n_max; ++n) add("PTprop", n, pt_statistic_sum(n), weighted_sum_model2(n));
  for (int n = 0; n <= n_max; ++n) add("PT", n, at(mu1, n), pt_weighted_sum(n));
  for (int n = 0; n <= n_max; ++n) {
    const Substitution ones{{Var::X, Poly(1)}, {Var::Y, Poly(1)}};
    add("factorial", n, substitute(at(mu1, n), ones), Poly(factorial(static_cast<unsigned long>(n) + 1)));
  }
  return report;
}

}  // namespace alag
