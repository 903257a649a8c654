#include "alag/permcomb.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <string>

namespace alag {

std::vector<int> ValueSet::values() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n > kMaxPermutationSize) throw std::invalid_argument("Permutation: size exceeds 63");
  std::uint64_t seen = 0;
  for (int v : values_) {
    if (v < 1 || v > n || ((seen >> v) & 1U)) {
      throw std::invalid_argument("Permutation: not a bijection on 1.." + std::to_string(n));
    }
    seen |= std::uint64_t{1} << v;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

StatBundle stats(std::span<const int> word) {
  StatBundle s;
  int running_max = 0;
  int running_min = std::numeric_limits<int>::max();
  for (int v : word) {
    if (v > running_max) {
      running_max = v;
      s.lrmax_set.insert(v);
    }
    if (v < running_min) {
      running_min = v;
      s.lrmin_set.insert(v);
    }
  }
  running_max = 0;
  running_min = std::numeric_limits<int>::max();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it > running_max) {
      running_max = *it;
      s.rlmax_set.insert(*it);
    }
    if (*it < running_min) {
      running_min = *it;
      s.rlmin_set.insert(*it);
    }
  }
  s.pivot_set = s.lrmax_set & s.rlmin_set;
  return s;
}

MarkedPermutation::MarkedPermutation(Permutation perm, std::vector<int> positions)
    : perm_(std::move(perm)), positions_(std::move(positions)) {
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    const int p = positions_[i];
    if (p < 0 || p >= perm_.size()) throw std::invalid_argument("MarkedPermutation: position out of range");
    if (i > 0 && (p <= positions_[i - 1] || perm_[p] <= perm_[positions_[i - 1]])) {
      throw std::invalid_argument("MarkedPermutation: marked values must form an increasing subsequence");
    }
  }
}

std::vector<int> MarkedPermutation::marked_values() const {
  std::vector<int> out;
  out.reserve(positions_.size());
  for (int p : positions_) out.push_back(perm_[p]);
  return out;
}

PrimedStats primed_stats(std::span<const int> perm, std::span<const int> positions) {
  const int n = static_cast<int>(perm.size());
  const int k = static_cast<int>(positions.size());
  const int w0_end = k == 0 ? n : positions[0];

  ValueSet lrmin_all;
  ValueSet lrmin_w0;
  ValueSet marked;
  int running_min = std::numeric_limits<int>::max();
  for (int i = 0; i < n; ++i) {
    if (perm[i] < running_min) {
      running_min = perm[i];
      lrmin_all.insert(perm[i]);
      if (i < w0_end) lrmin_w0.insert(perm[i]);
    }
  }
  for (int p : positions) marked.insert(perm[p]);

  PrimedStats out;
  out.lrmin_prime_set = lrmin_all - lrmin_w0 - marked;

  // Block w_i lies strictly between marks i and i+1; scan each right to left.
  for (int block = k; block >= 0; --block) {
    const int begin = block == 0 ? 0 : positions[block - 1] + 1;
    const int end = block == k ? n : positions[block];
    const int lo = block == 0 ? 0 : perm[positions[block - 1]];
    const int hi = block == k ? std::numeric_limits<int>::max() : perm[positions[block]];
    int block_min = std::numeric_limits<int>::max();
    for (int i = end - 1; i >= begin; --i) {
      if (perm[i] < block_min) {
        block_min = perm[i];
        if (lo <= perm[i] && perm[i] <= hi) out.rlmin_prime_set.insert(perm[i]);
      }
    }
  }
  return out;
}

namespace {

// Visits (perm, positions) for the family, in the documented order.
template <class F>
void visit_marked(int n, int k, Family family, F&& f) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("marked permutations need 0 <= k <= n");
  const int size = family == Family::E ? n : n + 1;
  if (size > kMaxPermutationSize) throw std::invalid_argument("marked permutations: n too large");
  std::vector<int> positions;
  positions.reserve(static_cast<std::size_t>(k) + 1);

  for_each_permutation(size, [&](std::span<const int> perm) {
    int limit = size;  // free marks are chosen among positions [0, limit)
    int top = size + 1;  // free marked values must stay below this
    if (family == Family::O) {
      limit = static_cast<int>(std::find(perm.begin(), perm.end(), size) - perm.begin());
      top = size;
    }
    // Depth-first over increasing position sets with increasing values.
    auto extend = [&](auto&& self, int start, int last_value) -> void {
      if (static_cast<int>(positions.size()) == k) {
        if (family == Family::O) {
          positions.push_back(limit);
          f(perm, std::span<const int>(positions));
          positions.pop_back();
        } else {
          f(perm, std::span<const int>(positions));
        }
        return;
      }
      const int remaining = k - static_cast<int>(positions.size());
      for (int p = start; p + remaining <= limit; ++p) {
        if (perm[p] <= last_value || perm[p] >= top) continue;
        positions.push_back(p);
        self(self, p + 1, perm[p]);
        positions.pop_back();
      }
    };
    extend(extend, 0, 0);
  });
}

// Counts of statistic tuples, turned into a polynomial at the end.
class Tally {
 public:
  explicit Tally(int max_stat) : stride_(max_stat + 1), counts_(static_cast<std::size_t>(stride_ * stride_ * stride_)) {}

  void add(int a, int b, int c = 0) {
    if (a < 0 || b < 0 || c < 0) throw std::logic_error("negative statistic exponent");
    ++counts_[static_cast<std::size_t>((a * stride_ + b) * stride_ + c)];
  }

  /// sum count * u^a v^b w^c.
  Poly evaluate(const Poly& u, const Poly& v, const Poly& w) const {
    std::vector<Poly> pu(1, Poly(1));
    std::vector<Poly> pv(1, Poly(1));
    std::vector<Poly> pw(1, Poly(1));
    for (int i = 1; i < stride_; ++i) {
      pu.push_back(pu.back() * u);
      pv.push_back(pv.back() * v);
      pw.push_back(pw.back() * w);
    }
    Poly out;
    for (int a = 0; a < stride_; ++a) {
      for (int b = 0; b < stride_; ++b) {
        for (int c = 0; c < stride_; ++c) {
          const std::uint64_t count = counts_[static_cast<std::size_t>((a * stride_ + b) * stride_ + c)];
          if (count == 0) continue;
          Poly term = pu[a] * pv[b] * pw[c];
          term *= Integer(static_cast<unsigned long>(count));
          out += term;
        }
      }
    }
    return out;
  }

 private:
  int stride_;
  std::vector<std::uint64_t> counts_;
};

void require_size(int n, const char* who) {
  if (n < 0 || n > kMaxPermutationSize) throw std::invalid_argument(std::string(who) + ": n out of range");
}

}  // namespace

void for_each_marked(int n, int k, Family family, const std::function<void(const MarkedPermutation&)>& visit) {
  visit_marked(n, k, family, [&](std::span<const int> perm, std::span<const int> positions) {
    visit(MarkedPermutation(Permutation(std::vector<int>(perm.begin(), perm.end())),
                            std::vector<int>(positions.begin(), positions.end())));
  });
}

std::uint64_t count_marked(int n, int k, Family family) {
  std::uint64_t count = 0;
  visit_marked(n, k, family, [&](std::span<const int>, std::span<const int>) { ++count; });
  return count;
}

Poly marked_weighted_sum(int n, int k, Family family) {
  Tally tally(n + 1);
  visit_marked(n, k, family, [&](std::span<const int> perm, std::span<const int> positions) {
    const PrimedStats s = primed_stats(perm, positions);
    tally.add(s.rlmin_prime(), s.lrmin_prime());
  });
  return tally.evaluate(poly_X(), poly_Y(), Poly(1));
}

Permutation star(const Permutation& p) {
  const StatBundle s = stats(p);
  std::vector<int> out = p.values();
  auto block_begin = out.begin();
  for (auto it = out.begin(); it != out.end(); ++it) {
    if (s.rlmin_set.contains(*it)) {
      std::reverse(block_begin, it);
      block_begin = it + 1;
    }
  }
  return Permutation(std::move(out));
}

Poly weighted_sum_xyz(int n) {
  require_size(n, "weighted_sum_xyz");
  Tally tally(n);
  for_each_permutation(n, [&](std::span<const int> perm) {
    const StatBundle s = stats(perm);
    tally.add(s.rlmin(), s.lrmax(), s.pivot());
  });
  return tally.evaluate(poly_X(), poly_Y(), poly_Z());
}

Poly weighted_sum_model2(int n) {
  require_size(n, "weighted_sum_model2");
  Tally tally(n);
  for_each_permutation(n, [&](std::span<const int> perm) {
    const StatBundle s = stats(perm);
    tally.add(s.rlmin(), s.lrmax() - s.pivot());
  });
  return tally.evaluate(poly_X(), poly_Y(), Poly(1));
}

namespace {

// sum_{S_n} a^{RLmin - pivot} b^{pivot} Y^{LRmax - pivot}
Poly pivot_weighted_sum(int n, const Poly& a, const Poly& b) {
  Tally tally(n);
  for_each_permutation(n, [&](std::span<const int> perm) {
    const StatBundle s = stats(perm);
    tally.add(s.rlmin() - s.pivot(), s.pivot(), s.lrmax() - s.pivot());
  });
  return tally.evaluate(a, b, poly_Y());
}

}  // namespace

Poly weighted_sum_model1(int n) {
  require_size(n, "weighted_sum_model1");
  return pivot_weighted_sum(n, poly_X() + Poly(1), poly_X() + poly_Y());
}

Poly weighted_sum_snplus1(int n) {
  require_size(n + 1, "weighted_sum_snplus1");
  Tally tally(n + 1);
  for_each_permutation(n + 1, [&](std::span<const int> perm) {
    const StatBundle s = stats(perm);
    tally.add(s.rlmin() - 1, s.lrmax() - s.pivot());
  });
  return tally.evaluate(poly_X(), poly_Y(), Poly(1));
}

Poly weighted_sum_cor_model2(int n) {
  if (n < 1) throw std::invalid_argument("weighted_sum_cor_model2: n must be at least 1");
  require_size(n - 1, "weighted_sum_cor_model2");
  return poly_X() * pivot_weighted_sum(n - 1, poly_X() + Poly(1), poly_X() + poly_Y());
}

Poly weighted_sum_cor_model2_shifted(int n) {
  if (n < 1) throw std::invalid_argument("weighted_sum_cor_model2_shifted: n must be at least 1");
  require_size(n - 1, "weighted_sum_cor_model2_shifted");
  return (poly_X() + Poly(1)) * pivot_weighted_sum(n - 1, poly_X() + Poly(2), poly_X() + poly_Y() + Poly(1));
}

Poly rlmin_generating(int m) {
  require_size(m, "rlmin_generating");
  Tally tally(m);
  for_each_permutation(m, [&](std::span<const int> perm) { tally.add(0, stats(perm).rlmin()); });
  return tally.evaluate(Poly(1), poly_Y(), Poly(1));
}

}  // namespace alag
