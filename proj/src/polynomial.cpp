#include "partzeta/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "partzeta/error.hpp"

namespace partzeta {

namespace {

void check_same(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error("polynomial universe mismatch: " + std::to_string(a) + " vs " + std::to_string(b) +
                " variables");
  }
}

// Merge two sorted term lists, scaling the second by `sign`.
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, sign > 0 ? j->second : Integer(-j->second));
      ++j;
    } else {
      Integer c = sign > 0 ? i->second + j->second : i->second - j->second;
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same(nvars(), other.nvars());
  std::vector<Exponent> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const unsigned sum = unsigned{exps_[i]} + unsigned{other.exps_[i]};
    if (sum > std::numeric_limits<Exponent>::max()) throw Error("monomial exponent overflow");
    out[i] = static_cast<Exponent>(sum);
  }
  return Monomial(std::move(out));
}

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
  for (const auto& [m, c] : terms) check_same(nvars_, m.nvars());
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second += t.second;
    } else {
      if (!terms_.empty() && terms_.back().second == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().second == 0) terms_.pop_back();
}

Polynomial Polynomial::constant(std::size_t nvars, const Integer& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.emplace_back(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error("variable slot out of range");
  std::vector<Exponent> e(nvars, 0);
  e[i] = 1;
  return monomial(Monomial(std::move(e)));
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& c) {
  Polynomial p(m.nvars());
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  check_same(nvars_, point.size());
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (Exponent e = 0; e < m[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  check_same(nvars_, m.nvars());
  Polynomial out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const auto& [mono, c] : terms_) out.terms_.emplace_back(mono * m, c);
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same(a.nvars_, b.nvars_);
  Polynomial out(a.nvars_);
  out.terms_ = merge(a.terms_, b.terms_, +1);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  check_same(a.nvars_, b.nvars_);
  Polynomial out(a.nvars_);
  out.terms_ = merge(a.terms_, b.terms_, -1);
  return out;
}

Polynomial operator*(const Polynomial& a, const Integer& c) {
  Polynomial out(a.nvars_);
  if (c == 0) return out;
  out.terms_ = a.terms_;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same(a.nvars_, b.nvars_);
  const Polynomial& big = a.size() >= b.size() ? a : b;
  const Polynomial& small = a.size() >= b.size() ? b : a;
  Polynomial out(a.nvars_);
  for (const auto& [m, c] : small.terms_) out = out + big.shifted(m) * c;
  return out;
}

Polynomial Polynomial::operator-() const { return *this * Integer(-1); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (s.empty()) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      s += mag.str();
    } else if (mag == 1) {
      s += mono;
    } else {
      s += mag.str() + "*" + mono;
    }
  }
  return s;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial poly_scale(const Polynomial& a, const Integer& c) { return a * c; }

}  // namespace partzeta
