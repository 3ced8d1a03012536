#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients. Terms are kept sorted by lexicographic exponent order, which
// is translation invariant, so multiplying by a monomial preserves order and
// products reduce to sorted merges.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "partzeta/integer.hpp"

namespace partzeta {

using Exponent = std::uint16_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const noexcept;

  /// Throws on exponent overflow or a variable-count mismatch.
  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Exponent> exps_;
};

class Polynomial {
 public:
  using Term = std::pair<Monomial, Integer>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  /// Builds from arbitrary terms; sorts, combines, and drops zeros.
  Polynomial(std::size_t nvars, std::vector<Term> terms);

  static Polynomial constant(std::size_t nvars, const Integer& c);
  /// x_i, 0-based slot
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Monomial& m, const Integer& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational evaluate(std::span<const Rational> point) const;

  /// Multiplies every term by the monomial m.
  Polynomial shifted(const Monomial& m) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Integer& c);
  Polynomial operator-() const;

  bool operator==(const Polynomial&) const = default;

  /// e.g. "x1^2*x2 - 3*x3 + 1", highest lex term first; "0" for zero.
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;  // ascending monomial order, no zero coefficients
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const Integer& c);

}  // namespace partzeta
