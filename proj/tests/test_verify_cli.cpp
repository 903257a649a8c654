#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "alag/cli.hpp"
#include "alag/poly_json.hpp"
#include "alag/recurrence.hpp"
#include "alag/tableaux.hpp"
#include "alag/verify.hpp"
#include "test_support.hpp"

using namespace alag;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "alag");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("suite names") {
  for (auto s : {Suite::coefficients, Suite::recurrence, Suite::even_odd, Suite::marked, Suite::moments,
                 Suite::tableaux, Suite::analytic, Suite::laws, Suite::all}) {
    CHECK(suite_from_name(suite_name(s)) == s);
  }
  CHECK_THROWS_AS(suite_from_name("everything"), std::invalid_argument);
}

TEST_CASE("random Lambda sequences are fixed") {
  const auto a = random_even_odd_specs();
  const auto b = random_even_odd_specs();
  REQUIRE(a.size() == 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].Lambda(0).is_zero());
    for (int k = 1; k < 20; ++k) {
      CHECK(a[i].Lambda(k) == b[i].Lambda(k));
      const auto v = a[i].Lambda(k).constant_value();
      REQUIRE(v.has_value());
      CHECK(abs(*v) <= 5);
    }
  }
}

TEST_CASE("every suite passes at small n") {
  for (auto s : {Suite::coefficients, Suite::recurrence, Suite::even_odd, Suite::marked, Suite::moments,
                 Suite::tableaux, Suite::analytic, Suite::laws}) {
    const Report r = run_suite(s, 5);
    CHECK_FALSE(r.empty());
    for (const auto& c : r) {
      INFO(suite_name(s) << ": " << c.theorem << " n=" << c.n);
      CHECK(c.pass);
    }
  }
  CHECK_THROWS_AS(run_suite(Suite::all, -1), std::invalid_argument);
}

TEST_CASE("report JSON round-trip") {
  Report r = run_suite(Suite::coefficients, 3);
  r.push_back({"made-up", 4, false, poly_X(), poly_Y()});
  const json j = report_to_json(r);
  CHECK(j.back()["status"] == "fail");
  const Report back = report_from_json(json::parse(j.dump()));
  REQUIRE(back.size() == r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(back[i].theorem == r[i].theorem);
    CHECK(back[i].n == r[i].n);
    CHECK(back[i].pass == r[i].pass);
    CHECK(back[i].lhs == r[i].lhs);
    CHECK(back[i].rhs == r[i].rhs);
  }
  CHECK_FALSE(all_pass(back));
  CHECK(report_to_text(back).find("FAIL made-up n=4\n  lhs: X\n  rhs: Y\n") != std::string::npos);
  CHECK_THROWS_AS(report_from_json(json::object()), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json(json::parse(R"([{"theorem":"t","n":1,"status":"maybe","lhs":{"terms":[]},"rhs":{"terms":[]}}])")),
                  std::invalid_argument);
}

TEST_CASE("cli: poly, moments and verify examples") {
  auto r = invoke({"poly", "--model", "model1", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "x - X - Y\n");
  r = invoke({"moments", "--spec", "model1", "--n", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = invoke({"verify", "--suite", "all", "--n-max", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli: poly sources agree") {
  const std::string expected = generate(model2_spec(), 5).back().to_string() + "\n";
  for (std::string src : {"recurrence", "closed", "recursive", "double-sum"}) {
    CHECK(invoke({"poly", "--model", "model2", "--n", "5", "--source", src}).out == expected);
  }
  CHECK(invoke({"poly", "--model", "model1", "--n", "4", "--source", "alt-3f2"}).out ==
        invoke({"poly", "--model", "model1", "--n", "4"}).out);
  CHECK(invoke({"poly", "--model", "model2", "--n", "4", "--source", "alt-3f2"}).code == 2);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"poly", "--model", "model9", "--n", "1"}).code == 2);
  CHECK(invoke({"poly", "--model", "model1"}).code == 2);
  CHECK(invoke({"poly", "--model", "model1", "--n", "-1"}).code == 2);
  CHECK(invoke({"perms", "--n", "11"}).code == 2);
  CHECK(invoke({"tableaux", "--n", "10"}).code == 2);
  CHECK(invoke({"moments", "--spec", "model1", "--n", "15"}).code == 2);
  CHECK(invoke({"moments", "--spec", "model1", "--n", "15", "--allow-large"}).code == 0);
  CHECK(invoke({"verify", "--suite", "bogus", "--n-max", "2"}).code == 2);
  CHECK(invoke({"poly", "--model", "model1", "--n", "1", "--format", "xml"}).code == 2);
  CHECK(invoke({"coeffs", "--model", "xyz", "--n", "2"}).code == 2);
  CHECK(invoke({"perms", "--n", "3", "--marks", "4"}).code == 2);
  CHECK_FALSE(invoke({"perms", "--n", "11"}).err.empty());
}

TEST_CASE("cli: JSON output round-trips") {
  auto r = invoke({"poly", "--model", "xyz", "--n", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(poly_from_json(json::parse(r.out)["poly"]) == generate(xyz_spec(), 3).back());

  r = invoke({"coeffs", "--model", "model1", "--n", "3", "--format", "json", "--source", "double-sum"});
  REQUIRE(r.code == 0);
  const json table = json::parse(r.out);
  CHECK(table["coefficients"].size() == 10);
  for (const auto& row : table["coefficients"]) {
    CHECK(poly_from_json(row["value"]) == coeff_rec(Family::O, row["n"].get<int>(), row["k"].get<int>()));
  }

  r = invoke({"moments", "--spec", "model2", "--n", "4", "--all", "--format", "json"});
  REQUIRE(r.code == 0);
  const json m = json::parse(r.out);
  REQUIRE(m["moments"].size() == 5);
  CHECK(poly_from_json(m["moments"][4]["moment"]) == moment(model2_spec(), 4));

  r = invoke({"verify", "--suite", "laws", "--n-max", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(all_pass(report_from_json(json::parse(r.out))));
}

TEST_CASE("cli: perms stream") {
  auto r = invoke({"perms", "--n", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto lines = json_lines(r.out);
  CHECK(lines.size() == 24);
  for (const auto& l : lines) {
    const Permutation p(l["perm"].get<std::vector<int>>());
    CHECK(l["rlmin"].get<std::vector<int>>() == stats(p).rlmin_set.values());
    CHECK(l["pivot"].get<std::vector<int>>() == stats(p).pivot_set.values());
  }
  r = invoke({"perms", "--n", "3", "--marks", "1", "--family", "O", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(json_lines(r.out).size() == count_marked(3, 1, Family::O));
  r = invoke({"perms", "--n", "3", "--format", "csv"});
  CHECK(r.out.rfind("perm,rlmin,rlmax,lrmin,lrmax,pivot\n1 2 3,", 0) == 0);
  r = invoke({"perms", "--n", "2"});
  CHECK(r.out == "1 2; rlmin=1,2; rlmax=2; lrmin=1; lrmax=1,2; pivot=1,2\n"
                 "2 1; rlmin=1; rlmax=1,2; lrmin=1,2; lrmax=2; pivot=\n");
}

TEST_CASE("cli: tableaux dump") {
  auto r = invoke({"tableaux", "--n", "2"});
  REQUIRE(r.code == 0);
  // two rows of length 0, a blank separator, then the one-cell tableau
  CHECK(r.out == "0,0\n\n\n\n1\n1\n");
  r = invoke({"tableaux", "--n", "4", "--format", "json"});
  const auto rows = json_lines(r.out);
  CHECK(rows.size() == 24);
  for (const auto& row : rows) {
    const PermTableau t(row["shape"].get<std::vector<int>>(), row["fill"].get<PermTableau::Fill>());
    CHECK(validate(t));
    CHECK(row["urr"] == urr(t));
    CHECK(row["phi"].get<std::vector<int>>() == phi(t).values());
  }
  r = invoke({"tableaux", "--n", "2", "--alt"});
  CHECK(r.out.find('^') != std::string::npos);
}

TEST_CASE("cli: output is deterministic and honours --output and ALAG_FORMAT") {
  const auto a = invoke({"coeffs", "--model", "model2", "--n", "4", "--format", "csv"});
  const auto b = invoke({"coeffs", "--model", "model2", "--n", "4", "--format", "csv"});
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n,k,model,source,polynomial\n0,0,model2,recursive,1\n", 0) == 0);

  const auto path = std::filesystem::temp_directory_path() / "alag_cli_output_test.txt";
  const auto r = invoke({"poly", "--model", "model1", "--n", "2", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == generate(model1_spec(), 2).back().to_string() + "\n");
  std::filesystem::remove(path);

  ::setenv(kFormatEnv, "json", 1);
  const auto j = invoke({"poly", "--model", "model1", "--n", "1"});
  ::unsetenv(kFormatEnv);
  CHECK(json::parse(j.out)["n"] == 1);
  CHECK(invoke({"poly", "--model", "model1", "--n", "1"}).out == "x - X - Y\n");
}
