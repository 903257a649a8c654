#include "alag/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "alag/permcomb.hpp"
#include "alag/poly_json.hpp"
#include "alag/recurrence.hpp"
#include "alag/tableaux.hpp"

namespace alag {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string_view command_name(Command c) {
  switch (c) {
    case Command::poly: return "poly";
    case Command::coeffs: return "coeffs";
    case Command::moments: return "moments";
    case Command::perms: return "perms";
    case Command::tableaux: return "tableaux";
    case Command::verify: return "verify";
  }
  return "?";
}

void check_bound(const CliConfig& c, int lo, int cap) {
  if (c.n < lo) {
    throw UsageError(std::string(command_name(c.command)) + ": n must be at least " + std::to_string(lo));
  }
  if (c.n > cap && !c.allow_large) {
    throw UsageError(std::string(command_name(c.command)) + ": n = " + std::to_string(c.n) + " exceeds the cap " +
                     std::to_string(cap) + " (pass --allow-large to override)");
  }
}

Family model_family(const std::string& model) {
  if (model == "model1") return Family::O;
  if (model == "model2") return Family::E;
  throw UsageError("coefficient tables exist for model1 and model2 only, not \"" + model + "\"");
}

CoefficientSource coefficient_source(const std::string& s) {
  if (s == "closed") return CoefficientSource::closed;
  if (s == "recursive") return CoefficientSource::recursive;
  if (s == "double-sum") return CoefficientSource::double_sum;
  throw UsageError("unknown coefficient source \"" + s + "\" (closed, recursive, double-sum)");
}

std::string joined(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

Poly poly_for(const CliConfig& c) {
  if (c.source == "recurrence") return generate(spec_by_name(c.model), c.n).back();
  if (c.source == "alt-3f2") {
    if (c.model != "model1") throw UsageError("source alt-3f2 is only defined for model1");
    return f32_alt_form(c.n);
  }
  return assemble_polynomial(model_family(c.model), c.n, coefficient_source(c.source));
}

int cmd_poly(const CliConfig& c, std::ostream& out) {
  check_bound(c, 0, kMaxPolyN);
  const Poly p = poly_for(c);
  switch (c.format) {
    case Format::text: out << p.to_string() << '\n'; break;
    case Format::json:
      out << json{{"model", c.model}, {"n", c.n}, {"source", c.source}, {"poly", to_json(p)}}.dump() << '\n';
      break;
    case Format::csv: out << "n,model,source,polynomial\n" << c.n << ',' << c.model << ',' << c.source << ','
                          << p.to_string() << '\n';
      break;
  }
  return 0;
}

int cmd_coeffs(const CliConfig& c, std::ostream& out) {
  check_bound(c, 0, kMaxPolyN);
  const Family f = model_family(c.model);
  const std::string source = c.source == "recurrence" ? "recursive" : c.source;
  const CoefficientSource src = coefficient_source(source);
  std::optional<CoefficientTable> table;
  if (src == CoefficientSource::recursive) table.emplace(c.n);
  const auto value = [&](int n, int k) { return table ? table->at(f, n, k) : coefficient(f, n, k, src); };

  json rows = json::array();
  if (c.format == Format::csv) out << "n,k,model,source,polynomial\n";
  for (int n = 0; n <= c.n; ++n) {
    for (int k = 0; k <= n; ++k) {
      const Poly v = value(n, k);
      switch (c.format) {
        case Format::text: out << n << ' ' << k << ": " << v.to_string() << '\n'; break;
        case Format::csv: out << n << ',' << k << ',' << c.model << ',' << source << ',' << v.to_string() << '\n'; break;
        case Format::json: rows.push_back({{"n", n}, {"k", k}, {"value", to_json(v)}}); break;
      }
    }
  }
  if (c.format == Format::json) {
    out << json{{"model", c.model}, {"source", source}, {"coefficients", rows}}.dump() << '\n';
  }
  return 0;
}

int cmd_moments(const CliConfig& c, std::ostream& out) {
  check_bound(c, 0, kMaxMomentsN);
  const MomentSequence seq = moments(spec_by_name(c.model), c.n);
  const int first = c.all ? 0 : c.n;
  switch (c.format) {
    case Format::text:
      for (int k = first; k <= c.n; ++k) out << seq.values[static_cast<std::size_t>(k)].to_string() << '\n';
      break;
    case Format::csv:
      out << "n,spec,polynomial\n";
      for (int k = first; k <= c.n; ++k) {
        out << k << ',' << c.model << ',' << seq.values[static_cast<std::size_t>(k)].to_string() << '\n';
      }
      break;
    case Format::json: {
      json values = json::array();
      for (int k = first; k <= c.n; ++k) {
        values.push_back({{"n", k}, {"moment", to_json(seq.values[static_cast<std::size_t>(k)])}});
      }
      out << json{{"spec", c.model}, {"moments", values}}.dump() << '\n';
      break;
    }
  }
  return 0;
}

int cmd_perms(const CliConfig& c, std::ostream& out) {
  check_bound(c, 0, kMaxPermsN);
  if (!c.marks) {
    if (c.format == Format::csv) out << "perm,rlmin,rlmax,lrmin,lrmax,pivot\n";
    for_each_permutation(c.n, [&](std::span<const int> p) {
      const std::vector<int> perm(p.begin(), p.end());
      const StatBundle s = stats(p);
      switch (c.format) {
        case Format::json:
          out << json{{"perm", perm},
                      {"rlmin", s.rlmin_set.values()},
                      {"rlmax", s.rlmax_set.values()},
                      {"lrmin", s.lrmin_set.values()},
                      {"lrmax", s.lrmax_set.values()},
                      {"pivot", s.pivot_set.values()}}
                     .dump()
              << '\n';
          break;
        case Format::text:
          out << joined(perm, ' ') << "; rlmin=" << joined(s.rlmin_set.values(), ',')
              << "; rlmax=" << joined(s.rlmax_set.values(), ',') << "; lrmin=" << joined(s.lrmin_set.values(), ',')
              << "; lrmax=" << joined(s.lrmax_set.values(), ',') << "; pivot=" << joined(s.pivot_set.values(), ',')
              << '\n';
          break;
        case Format::csv:
          out << joined(perm, ' ') << ',' << joined(s.rlmin_set.values(), ' ') << ','
              << joined(s.rlmax_set.values(), ' ') << ',' << joined(s.lrmin_set.values(), ' ') << ','
              << joined(s.lrmax_set.values(), ' ') << ',' << joined(s.pivot_set.values(), ' ') << '\n';
          break;
      }
    });
    return 0;
  }

  const int k = *c.marks;
  if (k < 0 || k > c.n) throw UsageError("perms: --marks must lie in 0..n");
  if (c.format == Format::csv) out << "perm,marked,rlmin_prime,lrmin_prime\n";
  for_each_marked(c.n, k, c.family, [&](const MarkedPermutation& mp) {
    const PrimedStats s = primed_stats(mp);
    const auto& perm = mp.perm().values();
    const auto marked = mp.marked_values();
    switch (c.format) {
      case Format::json:
        out << json{{"perm", perm},
                    {"marked", marked},
                    {"rlmin_prime", s.rlmin_prime_set.values()},
                    {"lrmin_prime", s.lrmin_prime_set.values()}}
                   .dump()
            << '\n';
        break;
      case Format::text:
        out << joined(perm, ' ') << "; marked=" << joined(marked, ',')
            << "; rlmin'=" << joined(s.rlmin_prime_set.values(), ',')
            << "; lrmin'=" << joined(s.lrmin_prime_set.values(), ',') << '\n';
        break;
      case Format::csv:
        out << joined(perm, ' ') << ',' << joined(marked, ' ') << ',' << joined(s.rlmin_prime_set.values(), ' ')
            << ',' << joined(s.lrmin_prime_set.values(), ' ') << '\n';
        break;
    }
  });
  return 0;
}

int cmd_tableaux(const CliConfig& c, std::ostream& out) {
  check_bound(c, 1, kMaxTableauxN);
  if (c.format == Format::csv) out << "shape,rows,urr,urc,phi\n";
  bool first = true;
  for_each_pt(c.n, [&](const PermTableau& t) {
    switch (c.format) {
      case Format::text:
        if (!first) out << '\n';
        out << (c.alternative ? to_text(to_alternative(t)) : to_text(t));
        break;
      case Format::json: {
        json j{{"shape", t.shape()}};
        if (c.alternative) {
          std::vector<std::string> rows;
          std::string text = to_text(to_alternative(t));
          std::size_t pos = text.find('\n') + 1;
          while (pos < text.size()) {
            const std::size_t end = text.find('\n', pos);
            rows.push_back(text.substr(pos, end - pos));
            pos = end + 1;
          }
          j["cells"] = rows;
        } else {
          j["fill"] = t.fill();
        }
        j["urr"] = urr(t);
        j["urc"] = urc(t);
        j["phi"] = phi(t).values();
        out << j.dump() << '\n';
        break;
      }
      case Format::csv: {
        std::string rows;
        for (const auto& r : t.fill()) {
          if (!rows.empty()) rows += ' ';
          for (auto v : r) rows += v ? '1' : '0';
        }
        out << '"' << joined(t.shape(), ',') << "\"," << rows << ',' << urr(t) << ',' << urc(t) << ','
            << joined(phi(t).values(), ' ') << '\n';
        break;
      }
    }
    first = false;
  });
  return 0;
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
  check_bound(c, 0, kMaxVerifyN);
  const Report report = run_suite(c.suite, c.n);
  switch (c.format) {
    case Format::text: out << report_to_text(report); break;
    case Format::json: out << report_to_json(report).dump() << '\n'; break;
    case Format::csv:
      out << "theorem,n,status\n";
      for (const auto& r : report) out << '"' << r.theorem << "\"," << r.n << ',' << (r.pass ? "pass" : "fail") << '\n';
      break;
  }
  return all_pass(report) ? 0 : 1;
}

}  // namespace

Format format_from_name(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format \"" + std::string(name) + "\" (text, json, csv)");
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::poly: return cmd_poly(config, out);
      case Command::coeffs: return cmd_coeffs(config, out);
      case Command::moments: return cmd_moments(config, out);
      case Command::perms: return cmd_perms(config, out);
      case Command::tableaux: return cmd_tableaux(config, out);
      case Command::verify: return cmd_verify(config, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  std::string format_name = "text";
  if (const char* env = std::getenv(kFormatEnv); env != nullptr && *env != '\0') format_name = env;
  std::string family_name = "E";
  std::string suite_name_arg = "all";
  std::optional<std::string> source;

  CLI::App app{"Exact associated Laguerre polynomials, their coefficients and moments"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "text, json or csv (default from ALAG_FORMAT)");
    sub->add_option("-o,--output", config.output, "write to this file instead of stdout");
    sub->add_flag("--allow-large", config.allow_large, "lift the cap on n");
  };

  auto* poly = app.add_subcommand("poly", "print p_n for a recurrence family");
  poly->add_option("--model", config.model, "model1, model2, xyz or even-odd-laguerre");
  poly->add_option("--n", config.n)->required();
  poly->add_option("--source", source, "recurrence, closed, recursive, double-sum or alt-3f2");
  common(poly);

  auto* coeffs = app.add_subcommand("coeffs", "coefficient tables for 0 <= k <= n <= N");
  coeffs->add_option("--model", config.model, "model1 (O table) or model2 (E table)");
  coeffs->add_option("--n", config.n, "largest n")->required();
  coeffs->add_option("--source", source, "closed, recursive or double-sum");
  common(coeffs);

  auto* mom = app.add_subcommand("moments", "moment mu_n of a recurrence family");
  mom->add_option("--spec", config.model, "model1, model2, xyz or even-odd-laguerre");
  mom->add_option("--n", config.n)->required();
  mom->add_flag("--all", config.all, "print mu_0 .. mu_n");
  common(mom);

  auto* perms = app.add_subcommand("perms", "stream permutations of [n] with their statistics");
  perms->add_option("--n", config.n)->required();
  perms->add_option("--marks", config.marks, "enumerate k-marked permutations instead");
  perms->add_option("--family", family_name, "E ([n], k marks) or O ([n+1], n+1 marked)");
  common(perms);

  auto* tab = app.add_subcommand("tableaux", "stream the permutation tableaux of length n");
  tab->add_option("--n", config.n)->required();
  tab->add_flag("--alt", config.alternative, "print the arrow form");
  common(tab);

  auto* ver = app.add_subcommand("verify", "check the identities and report");
  ver->add_option("--suite", suite_name_arg,
                  "coefficients, recurrence, even-odd, marked, moments, tableaux, analytic, laws or all");
  ver->add_option("--n-max", config.n)->required();
  common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const std::map<CLI::App*, Command> commands{{poly, Command::poly},    {coeffs, Command::coeffs},
                                              {mom, Command::moments},  {perms, Command::perms},
                                              {tab, Command::tableaux}, {ver, Command::verify}};
  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) config.command = cmd;
  }

  try {
    config.format = format_from_name(format_name);
    if (family_name == "E") {
      config.family = Family::E;
    } else if (family_name == "O") {
      config.family = Family::O;
    } else {
      throw std::invalid_argument("unknown family \"" + family_name + "\" (E, O)");
    }
    config.suite = suite_from_name(suite_name_arg);
    if (source) config.source = *source;
    if (config.command != Command::poly && source && config.command != Command::coeffs) {
      throw std::invalid_argument("--source applies to poly and coeffs only");
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (!config.output) return run(config, out, err);
  std::ofstream file(*config.output);
  if (!file) {
    err << "error: cannot open " << *config.output << " for writing\n";
    return 2;
  }
  const int code = run(config, file, err);
  file.flush();
  if (!file) {
    err << "error: write to " << *config.output << " failed\n";
    return 2;
  }
  return code;
}

}  // namespace alag
