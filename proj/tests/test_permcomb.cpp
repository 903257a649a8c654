#include <set>

#include "alag/hyperseries.hpp"
#include "alag/permcomb.hpp"
#include "test_support.hpp"

using namespace alag;
using alag::testing::factorial;

namespace {

const Poly& X = poly_X();
const Poly& Y = poly_Y();
const Poly& Z = poly_Z();

ValueSet set_of(std::initializer_list<int> values) {
  ValueSet s;
  for (int v : values) s.insert(v);
  return s;
}

Permutation perm(std::initializer_list<int> values) { return Permutation(std::vector<int>(values)); }

// Positions (0-based) of the given values.
std::vector<int> positions_of(const Permutation& p, std::initializer_list<int> values) {
  std::vector<int> out;
  for (int v : values) {
    for (int i = 0; i < p.size(); ++i) {
      if (p[i] == v) out.push_back(i);
    }
  }
  return out;
}

// Number of increasing subsequences of each length, by subset enumeration.
std::vector<std::uint64_t> increasing_subsequence_counts(const std::vector<int>& w) {
  std::vector<std::uint64_t> counts(w.size() + 1, 0);
  const std::uint32_t n = static_cast<std::uint32_t>(w.size());
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    int last = 0;
    bool increasing = true;
    for (std::uint32_t i = 0; i < n && increasing; ++i) {
      if ((mask >> i) & 1U) {
        increasing = w[i] > last;
        last = w[i];
      }
    }
    if (increasing) ++counts[static_cast<std::size_t>(std::popcount(mask))];
  }
  return counts;
}

}  // namespace

TEST_CASE("permutation validation") {
  CHECK_NOTHROW(perm({2, 3, 1}));
  CHECK_THROWS_AS(perm({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({1, 3}), std::invalid_argument);
  CHECK(Permutation::identity(3) == perm({1, 2, 3}));
}

TEST_CASE("record statistics") {
  const StatBundle s = stats(perm({6, 8, 2, 4, 1, 5, 7, 3, 9}));
  CHECK(s.rlmin_set == set_of({1, 3, 9}));
  CHECK(s.rlmax_set == set_of({9}));
  CHECK(s.lrmin_set == set_of({6, 2, 1}));
  CHECK(s.lrmax_set == set_of({6, 8, 9}));
  CHECK(s.pivot_set == set_of({9}));

  for (int n = 0; n < 8; ++n) {
    const StatBundle id = stats(Permutation::identity(n));
    CHECK(id.rlmin() == n);
    CHECK(id.lrmax() == n);
    CHECK(id.pivot() == n);
  }

  const StatBundle t = stats(perm({4, 2, 5, 3, 1, 7, 6, 8, 14, 12, 15, 11, 13, 10, 9, 16}));
  CHECK(t.rlmin_set == set_of({1, 6, 8, 9, 16}));
}

TEST_CASE("primed statistics") {
  const Permutation p = perm({6, 8, 2, 4, 1, 5, 7, 3, 9});
  const PrimedStats s = primed_stats(MarkedPermutation(p, positions_of(p, {2, 7})));
  CHECK(s.lrmin_prime_set == set_of({1}));
  CHECK(s.rlmin_prime_set == set_of({5, 9}));

  for (int n = 0; n < 6; ++n) {
    for_each_permutation(n, [&](std::span<const int> w) {
      const StatBundle plain = stats(w);
      const std::vector<int> none;
      const PrimedStats unmarked = primed_stats(w, none);
      CHECK(unmarked.lrmin_prime() == 0);
      CHECK(unmarked.rlmin_prime_set == plain.rlmin_set);
    });
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    const PrimedStats full = primed_stats(Permutation::identity(n).view(), all);
    CHECK(full.lrmin_prime() == 0);
    CHECK(full.rlmin_prime() == 0);
  }
}

TEST_CASE("marked permutation validation") {
  const Permutation p = perm({3, 1, 2});
  CHECK_NOTHROW(MarkedPermutation(p, {1, 2}));
  CHECK_THROWS_AS(MarkedPermutation(p, {0, 1}), std::invalid_argument);  // 3 then 1 is not increasing
  CHECK_THROWS_AS(MarkedPermutation(p, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MarkedPermutation(p, {3}), std::invalid_argument);
  CHECK(MarkedPermutation(p, {1, 2}).marked_values() == std::vector<int>{1, 2});
}

TEST_CASE("marked families are counted by increasing subsequences") {
  CHECK(count_marked(1, 1, Family::E) == 1);
  CHECK(count_marked(2, 1, Family::E) == 4);
  for (int n = 0; n <= 6; ++n) {
    std::vector<std::uint64_t> e(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint64_t> o(static_cast<std::size_t>(n) + 1, 0);
    for_each_permutation(n, [&](std::span<const int> w) {
      const auto c = increasing_subsequence_counts(std::vector<int>(w.begin(), w.end()));
      for (int k = 0; k <= n; ++k) e[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k)];
    });
    // O family: n+1 marked, so the other k marks form any increasing subsequence
    // of the letters before n+1.
    for_each_permutation(n + 1, [&](std::span<const int> w) {
      std::vector<int> prefix;
      for (int v : w) {
        if (v == n + 1) break;
        prefix.push_back(v);
      }
      const auto c = increasing_subsequence_counts(prefix);
      for (std::size_t k = 0; k < c.size() && k <= static_cast<std::size_t>(n); ++k) o[k] += c[k];
    });
    for (int k = 0; k <= n; ++k) {
      CHECK(count_marked(n, k, Family::E) == e[static_cast<std::size_t>(k)]);
      CHECK(count_marked(n, k, Family::O) == o[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("for_each_marked visits distinct valid objects") {
  for (Family f : {Family::E, Family::O}) {
    for (int k = 0; k <= 4; ++k) {
      std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
      std::uint64_t visits = 0;
      for_each_marked(4, k, f, [&](const MarkedPermutation& mp) {
        ++visits;
        CHECK(mp.marks() == (f == Family::E ? k : k + 1));
        if (f == Family::O) CHECK(mp.marked_values().back() == 5);
        seen.insert({mp.perm().values(), mp.positions()});
      });
      CHECK(seen.size() == visits);
      CHECK(visits == count_marked(4, k, f));
    }
  }
}

TEST_CASE("marked weighted sums") {
  CHECK(marked_weighted_sum(2, 1, Family::E) == Poly(2) * X + Y + Poly(1));
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(marked_weighted_sum(n, k, Family::E) == coeff_rec(Family::E, n, k));
      CHECK(marked_weighted_sum(n, k, Family::O) == coeff_rec(Family::O, n, k));
    }
  }
}

TEST_CASE("star") {
  CHECK(star(perm({4, 2, 5, 3, 1, 7, 6, 8, 14, 12, 15, 11, 13, 10, 9, 16})) ==
        perm({3, 5, 2, 4, 1, 7, 6, 8, 10, 13, 11, 15, 12, 14, 9, 16}));
  for (int n = 0; n < 6; ++n) CHECK(star(Permutation::identity(n)) == Permutation::identity(n));
  for_each_permutation(6, [](std::span<const int> w) {
    const Permutation p(std::vector<int>(w.begin(), w.end()));
    CHECK(star(star(p)) == p);
  });
}

TEST_CASE("weighted permutation sums") {
  CHECK(weighted_sum_xyz(0) == Poly(1));
  CHECK(weighted_sum_xyz(1) == X * Y * Z);
  CHECK(weighted_sum_xyz(2) == (X * Y * Z).pow(2) + X * Y);
  CHECK(weighted_sum_snplus1(1) == X + Y);
  CHECK(weighted_sum_snplus1(2) == X * X + Poly(3) * X * Y + Y * Y + Y);
  CHECK(weighted_sum_model2(1) == X);
  CHECK(weighted_sum_model1(2) == (X + Y).pow(2) + (Poly(1) + X) * Y);
  CHECK(weighted_sum_cor_model2(1) == X);
  CHECK(weighted_sum_cor_model2(2) == X * X + X * Y);
  CHECK(weighted_sum_cor_model2_shifted(1) == X + Poly(1));
  CHECK_THROWS_AS(weighted_sum_cor_model2(0), std::invalid_argument);
  for (int n = 0; n < 7; ++n) {
    const Substitution ones{{Var::X, Poly(1)}, {Var::Y, Poly(1)}, {Var::Z, Poly(1)}};
    CHECK(substitute(weighted_sum_xyz(n), ones) == Poly(factorial(static_cast<unsigned long>(n))));
    CHECK(substitute(weighted_sum_snplus1(n), ones) == Poly(factorial(static_cast<unsigned long>(n) + 1)));
  }
}

TEST_CASE("right-to-left minima generating function") {
  CHECK(rlmin_generating(0) == Poly(1));
  CHECK(rlmin_generating(2) == Y * Y + Y);
  CHECK(rlmin_generating(5) == rising_factorial(Y, 5));
}

TEST_CASE("pivots are fixed points") {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [](std::span<const int> w) {
      for (int v : stats(w).pivot_set.values()) CHECK(w[static_cast<std::size_t>(v - 1)] == v);
    });
  }
}
