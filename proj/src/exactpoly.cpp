#include "alag/exactpoly.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

namespace alag {

char var_name(Var v) {
  static constexpr char names[kNumVars] = {'x', 'X', 'Y', 'Z'};
  return names[static_cast<std::size_t>(v)];
}

Poly::Poly(long c) {
  if (c != 0) terms_.emplace(Exponents{}, Integer(c));
}

Poly::Poly(const Integer& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

Poly Poly::var(Var v, unsigned power) {
  Exponents e;
  e[v] = static_cast<std::uint16_t>(power);
  return monomial(e, 1);
}

Poly Poly::monomial(const Exponents& e, const Integer& c) {
  Poly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

std::optional<Integer> Poly::constant_value() const {
  if (terms_.empty()) return Integer(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

Integer Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned Poly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[v]);
  return d;
}

unsigned Poly::total_degree() const {
  // Canonical order puts the highest total degree first.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Poly Poly::coefficient_of(Var v, unsigned power) const {
  Poly out;
  for (const auto& [e, c] : terms_) {
    if (e[v] != power) continue;
    Exponents rest = e;
    rest[v] = 0;
    out.terms_.emplace(rest, c);
  }
  return out;
}

Integer Poly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (!terms_.empty() && terms_.begin()->second < 0) g = -g;
  return g;
}

void Poly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  Integer prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(ea + eb, prod);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::pow(unsigned k) const {
  Poly result = 1;
  Poly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

namespace {

std::string monomial_string(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (e.e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(static_cast<Var>(i));
    if (e.e[i] > 1) out += '^' + std::to_string(e.e[i]);
  }
  return out;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    Integer magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_string(e);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + '*' + mono;
    }
  }
  return out;
}

Substitution::Substitution(std::initializer_list<std::pair<Var, Poly>> init) {
  for (const auto& [v, p] : init) set(v, p);
}

Substitution& Substitution::set(Var v, Poly p) {
  values[static_cast<std::size_t>(v)] = std::move(p);
  return *this;
}

Poly substitute(const Poly& p, const Substitution& s) {
  // Powers of each substituted value are memoised per call.
  std::array<std::vector<Poly>, kNumVars> powers;
  auto power_of = [&](std::size_t var, unsigned k) -> const Poly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Poly(1));
    while (cache.size() <= k) cache.push_back(cache.back() * *s.values[var]);
    return cache[k];
  };

  Poly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents kept;
    Poly factor(c);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (s.values[i].has_value()) {
        if (e.e[i] > 0) factor *= power_of(i, e.e[i]);
      } else {
        kept.e[i] = e.e[i];
      }
    }
    for (const auto& [fe, fc] : factor.terms()) out.add_term(fe + kept, fc);
  }
  return out;
}

namespace {

bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (small.e[i] > big.e[i]) return false;
  }
  return true;
}

Exponents difference(const Exponents& big, const Exponents& small) {
  Exponents d;
  for (std::size_t i = 0; i < kNumVars; ++i) d.e[i] = static_cast<std::uint16_t>(big.e[i] - small.e[i]);
  return d;
}

}  // namespace

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: division by the zero polynomial");
  const auto& [lead_exp, lead_coeff] = *b.terms().begin();
  Poly remainder = a;
  Poly quotient;
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms().begin();
    if (!divides(lead_exp, re) || !mpz_divisible_p(rc.get_mpz_t(), lead_coeff.get_mpz_t())) {
      return std::nullopt;
    }
    const Poly step = Poly::monomial(difference(re, lead_exp), rc / lead_coeff);
    quotient += step;
    remainder -= step * b;
  }
  return quotient;
}

namespace {

// Recursive-descent parser: expr := term (('+'|'-') term)*,
// term := unary ('*' unary)*, unary := '-' unary | power, power := atom ('^' int)?
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) +
                                " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    ++pos_;
    switch (c) {
      case 'x': return Poly::var(Var::x);
      case 'X': return Poly::var(Var::X);
      case 'Y': return Poly::var(Var::Y);
      case 'Z': return Poly::var(Var::Z);
      default: --pos_; fail("unexpected character");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// RationalPoly

RationalPoly::RationalPoly(Poly numerator) : num_(std::move(numerator)) {}

RationalPoly::RationalPoly(Poly numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::domain_error("RationalPoly: zero denominator");
  normalize();
}

void RationalPoly::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = abs(num_.content());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    Poly reduced;
    for (const auto& [e, c] : num_.terms()) reduced.add_term(e, Integer(c / g));
    num_ = std::move(reduced);
    den_ /= g;
  }
}

Poly RationalPoly::to_poly() const {
  if (den_ != 1) throw std::domain_error("RationalPoly is not integral: " + to_string());
  return num_;
}

std::optional<mpq_class> RationalPoly::constant_value() const {
  auto c = num_.constant_value();
  if (!c) return std::nullopt;
  mpq_class q(*c, den_);
  q.canonicalize();
  return q;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ *= o.den_;
    num_ += o.num_ * Poly(den_);
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  return *this += RationalPoly(-o.num_, o.den_);
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator/=(const mpq_class& c) {
  if (c == 0) throw std::domain_error("RationalPoly: division by zero");
  num_ *= Integer(c.get_den());
  den_ *= c.get_num();
  normalize();
  return *this;
}

std::string RationalPoly::to_string() const {
  if (den_ == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/" + den_.get_str();
}

}  // namespace alag
