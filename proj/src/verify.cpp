#include "alag/verify.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "alag/hyperseries.hpp"
#include "alag/permcomb.hpp"
#include "alag/poly_json.hpp"
#include "alag/recurrence.hpp"
#include "alag/tableaux.hpp"

namespace alag {

namespace {

struct SuiteEntry {
  Suite suite;
  std::string_view name;
};

constexpr SuiteEntry kSuites[] = {
    {Suite::coefficients, "coefficients"}, {Suite::recurrence, "recurrence"}, {Suite::even_odd, "even-odd"},
    {Suite::marked, "marked"},             {Suite::moments, "moments"},       {Suite::tableaux, "tableaux"},
    {Suite::analytic, "analytic"},         {Suite::laws, "laws"},             {Suite::all, "all"},
};

Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Poly count_poly(std::uint64_t c) { return Poly(Integer(static_cast<unsigned long>(c))); }

class Collector {
 public:
  explicit Collector(Report& report) : report_(report) {}
  void check(std::string theorem, int n, Poly lhs, Poly rhs) {
    const bool pass = lhs == rhs;
    report_.push_back({std::move(theorem), n, pass, std::move(lhs), std::move(rhs)});
  }

 private:
  Report& report_;
};

// Row of a coefficient table as sum_k C_{n,k} x^k (no signs).
Poly coefficient_row(int n, const std::function<Poly(int)>& at) {
  Poly out;
  for (int k = 0; k <= n; ++k) out += at(k) * Poly::var(Var::x, static_cast<unsigned>(k));
  return out;
}

void coefficients_suite(Collector& c, int n_max) {
  const CoefficientTable table(n_max);
  for (Family f : {Family::O, Family::E}) {
    const std::string tag(family_name(f));
    for (int n = 0; n <= n_max; ++n) {
      const Poly rec = coefficient_row(n, [&](int k) { return table.at(f, n, k); });
      c.check("coeff-closed-" + tag, n, coefficient_row(n, [&](int k) { return coeff_closed(f, n, k); }), rec);
      c.check("coeff-double-" + tag, n, coefficient_row(n, [&](int k) { return coeff_double_sum(f, n, k); }),
              rec);
    }
    for (int n = 0; n <= n_max; ++n) {
      std::uint64_t total = 0;
      std::uint64_t good = 0;
      for (int k = 0; k <= n; ++k) {
        for (int m = 0; m <= n - k; ++m) {
          ++total;
          if (contiguous_identity(f, n, k, m)) ++good;
        }
      }
      c.check("contiguous-" + tag, n, count_poly(good), count_poly(total));
    }
  }
}

void recurrence_suite(Collector& c, int n_max) {
  const auto l1 = generate(model1_spec(), n_max);
  const auto l2 = generate(model2_spec(), n_max);
  for (int n = 0; n <= n_max; ++n) {
    c.check("assemble-O", n, assemble_polynomial(Family::O, n, CoefficientSource::closed), l1[n]);
    c.check("assemble-E", n, assemble_polynomial(Family::E, n, CoefficientSource::closed), l2[n]);
  }
  for (int n = 0; n <= n_max; ++n) {
    c.check("alt-3f2", n, f32_alt_form(n), assemble_polynomial(Family::O, n, CoefficientSource::closed));
  }
}

void even_odd_suite(Collector& c, int n_max) {
  std::vector<EvenOddSpec> specs{laguerre_even_odd()};
  for (auto& s : random_even_odd_specs()) specs.push_back(std::move(s));
  for (const auto& es : specs) {
    const auto families = even_odd_extract(es, n_max);
    const auto split = even_odd_split(es);
    const auto even = generate(split.even, n_max);
    const auto odd = generate(split.odd, n_max);
    for (int n = 0; n <= n_max; ++n) {
      c.check("even-split/" + es.name, n, families.even[n], even[n]);
      c.check("odd-split/" + es.name, n, families.odd[n], odd[n]);
    }
  }
  const auto families = even_odd_extract(laguerre_even_odd(), n_max);
  const auto l1 = generate(model1_spec(), n_max);
  const auto l2 = generate(model2_spec(), n_max);
  for (int n = 0; n <= n_max; ++n) {
    c.check("odd-is-model1", n, families.odd[n], l1[n]);
    c.check("even-is-model2", n, families.even[n], l2[n]);
  }
}

void marked_suite(Collector& c, int n_max) {
  const CoefficientTable table(n_max);
  for (Family f : {Family::E, Family::O}) {
    for (int n = 0; n <= n_max; ++n) {
      c.check("marked-" + std::string(family_name(f)), n,
              coefficient_row(n, [&](int k) { return marked_weighted_sum(n, k, f); }),
              coefficient_row(n, [&](int k) { return table.at(f, n, k); }));
    }
  }
}

void moments_suite(Collector& c, Report& report, int n_max) {
  for (auto& r : theorem_suite(n_max)) report.push_back(std::move(r));
  for (const auto& spec : {model1_spec(), model2_spec(), xyz_spec()}) {
    for (int n = 0; n <= n_max; ++n) c.check("transfer/" + spec.name, n, moment(spec, n), moment_transfer(spec, n));
  }
  std::vector<EvenOddSpec> specs{laguerre_even_odd()};
  for (auto& s : random_even_odd_specs()) specs.push_back(std::move(s));
  for (const auto& es : specs) {
    const RecurrenceSpec full = even_odd_parent(es);
    const auto split = even_odd_split(es);
    for (int n = 0; n <= n_max; ++n) {
      c.check("evenodd-moment-even/" + es.name, n, moment(full, 2 * n), moment(split.even, n));
      c.check("evenodd-moment-odd/" + es.name, n, moment(full, 2 * n + 2), es.Lambda(1) * moment(split.odd, n));
    }
  }
}

void tableaux_suite(Collector& c, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t total = 0;
    std::uint64_t rlmin_ok = 0;
    std::uint64_t lemma_ok = 0;
    std::uint64_t column_ok = 0;
    std::uint64_t descent_ok = 0;
    std::set<std::vector<int>> images;
    for_each_pt(n, [&](const PermTableau& t) {
      ++total;
      const BorderLabels labels = border_labels(t.shape());
      const Permutation pi = phi(t);
      images.insert(pi.values());
      const Permutation ps = star(pi);
      const StatBundle s = stats(pi);
      const StatBundle ss = stats(ps);

      ValueSet rows;
      for (int r : unrestricted_rows(t)) rows.insert(labels.row_label[static_cast<std::size_t>(r)]);
      if (rows == s.rlmin_set && rows == ss.rlmin_set) ++rlmin_ok;

      const auto cols = unrestricted_columns(t);
      if (cols == northwest_free_columns(to_alternative(t))) ++lemma_ok;

      ValueSet col_labels;
      for (int col : cols) col_labels.insert(labels.column_label[static_cast<std::size_t>(col)]);
      if (col_labels == ss.lrmax_set - ss.pivot_set) ++column_ok;

      ValueSet all_columns;
      for (int label : labels.column_label) all_columns.insert(label);
      ValueSet descent_tops;
      for (int i = 0; i + 1 < pi.size(); ++i) {
        if (pi[i] > pi[i + 1]) descent_tops.insert(pi[i]);
      }
      if (all_columns == descent_tops) ++descent_ok;
    });
    const Poly expected = count_poly(total);
    c.check("pt-count", n, expected, Poly(factorial(static_cast<unsigned long>(n))));
    c.check("phi-bijective", n, count_poly(images.size()), Poly(factorial(static_cast<unsigned long>(n))));
    c.check("phi-rlmin", n, count_poly(rlmin_ok), expected);
    c.check("urc-northwest", n, count_poly(lemma_ok), expected);
    c.check("urc-transport", n, count_poly(column_ok), expected);
    c.check("column-descents", n, count_poly(descent_ok), expected);
  }
}

void analytic_suite(Collector& c, int n_max) {
  const Poly& X = poly_X();
  const Poly& Y = poly_Y();
  const RecurrenceSpec model1 = model1_spec();
  const std::vector<Poly> theta = moments(model1, 2 * n_max).values;

  for (int J = 0; J <= n_max; ++J) {
    // Both sides multiplied by J!.
    Poly lhs;
    for (int k = 0; k <= J; ++k) {
      const int d = J - k;
      lhs += Poly(factorial(static_cast<unsigned long>(J)) / factorial(static_cast<unsigned long>(d))) * theta[k] *
             rising_factorial(Y - Poly(1), d) * rising_factorial(X, d);
    }
    c.check("murelation", J, lhs, rising_factorial(Y, J) * rising_factorial(X + Poly(1), J));
  }

  const auto order = static_cast<unsigned>(n_max);
  const TruncatedSeries q = series_div(f20_series(Y, X + Poly(1), order), f20_series(Y - Poly(1), X, order));
  for (unsigned j = 0; j <= order; ++j) {
    c.check("moment-gf", static_cast<int>(j), q[j].numerator(), theta[j] * Poly(q[j].denominator()));
  }

  for (int n = 0; n <= n_max; ++n) {
    const Poly ln = f32_alt_form(n);
    for (int s = 0; s <= n; ++s) {
      Poly value;
      for (int k = 0; k <= n; ++k) value += ln.coefficient_of(Var::x, static_cast<unsigned>(k)) * theta[k + s];
      if (s < n) {
        c.check("orth[s=" + std::to_string(s) + "]", n, value, Poly());
      } else {
        Poly norm(1);
        for (int k = 1; k <= n; ++k) norm *= model1.lambda(k);
        c.check("orth-norm", n, value, norm);
      }
    }
  }
}

void laws_suite(Collector& c, int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t total = 0;
    std::uint64_t involution = 0;
    std::uint64_t same_rlmin = 0;
    std::uint64_t pivots_fixed = 0;
    for_each_permutation(n, [&](std::span<const int> values) {
      ++total;
      const Permutation p(std::vector<int>(values.begin(), values.end()));
      const Permutation ps = star(p);
      if (star(ps) == p) ++involution;
      if (stats(ps).rlmin_set == stats(p).rlmin_set) ++same_rlmin;
      bool fixed = true;
      for (int v : stats(p).pivot_set.values()) fixed = fixed && p[v - 1] == v;
      if (fixed) ++pivots_fixed;
    });
    c.check("star-involution", n, count_poly(involution), count_poly(total));
    c.check("star-rlmin", n, count_poly(same_rlmin), count_poly(total));
    c.check("pivot-position", n, count_poly(pivots_fixed), count_poly(total));
  }
  for (int m = 0; m <= n_max; ++m) c.check("rlmin-gf", m, rlmin_generating(m), rising_factorial(poly_Y(), m));
}

}  // namespace

Suite suite_from_name(std::string_view name) {
  for (const auto& e : kSuites) {
    if (e.name == name) return e.suite;
  }
  throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"");
}

std::string_view suite_name(Suite s) {
  for (const auto& e : kSuites) {
    if (e.suite == s) return e.name;
  }
  return "?";
}

std::vector<EvenOddSpec> random_even_odd_specs() {
  std::vector<EvenOddSpec> out;
  std::mt19937 rng(20150511);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int i = 0; i < 3; ++i) {
    std::vector<long> values{0};
    for (int k = 1; k <= 64; ++k) values.push_back(dist(rng));
    out.push_back({"random-" + std::to_string(i + 1), [values](int k) {
                     if (k < 0 || k >= static_cast<int>(values.size())) {
                       throw std::out_of_range("random Lambda index out of range");
                     }
                     return Poly(values[static_cast<std::size_t>(k)]);
                   }});
  }
  return out;
}

Report run_suite(Suite suite, int n_max) {
  if (n_max < 0) throw std::invalid_argument("run_suite: n_max must be non-negative");
  Report report;
  Collector c(report);
  const auto want = [suite](Suite s) { return suite == Suite::all || suite == s; };
  if (want(Suite::coefficients)) coefficients_suite(c, n_max);
  if (want(Suite::recurrence)) recurrence_suite(c, n_max);
  if (want(Suite::even_odd)) even_odd_suite(c, n_max);
  if (want(Suite::marked)) marked_suite(c, n_max);
  if (want(Suite::moments)) moments_suite(c, report, n_max);
  if (want(Suite::tableaux)) tableaux_suite(c, n_max);
  if (want(Suite::analytic)) analytic_suite(c, n_max);
  if (want(Suite::laws)) laws_suite(c, n_max);
  return report;
}

bool all_pass(const Report& report) {
  for (const auto& r : report) {
    if (!r.pass) return false;
  }
  return true;
}

nlohmann::json report_to_json(const Report& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : report) {
    out.push_back({{"theorem", r.theorem},
                   {"n", r.n},
                   {"status", r.pass ? "pass" : "fail"},
                   {"lhs", to_json(r.lhs)},
                   {"rhs", to_json(r.rhs)}});
  }
  return out;
}

Report report_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("report must be a JSON array");
  Report report;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("theorem") || !e.contains("n") || !e.contains("status") ||
        !e.contains("lhs") || !e.contains("rhs")) {
      throw std::invalid_argument("report entry is missing a field");
    }
    const auto status = e.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw std::invalid_argument("bad status \"" + status + "\"");
    report.push_back({e.at("theorem").get<std::string>(), e.at("n").get<int>(), status == "pass",
                      poly_from_json(e.at("lhs")), poly_from_json(e.at("rhs"))});
  }
  return report;
}

std::string report_to_text(const Report& report) {
  std::string out;
  std::size_t failures = 0;
  for (const auto& r : report) {
    out += (r.pass ? "PASS " : "FAIL ") + r.theorem + " n=" + std::to_string(r.n) + '\n';
    if (!r.pass) {
      ++failures;
      out += "  lhs: " + r.lhs.to_string() + '\n';
      out += "  rhs: " + r.rhs.to_string() + '\n';
    }
  }
  out += std::to_string(report.size() - failures) + "/" + std::to_string(report.size()) + " checks passed\n";
  return out;
}

}  // namespace alag
