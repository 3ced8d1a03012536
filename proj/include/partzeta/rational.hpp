#pragma once

// Rational functions attached to legal terms and an exact zero test for
// integer combinations of them.
//
// An atom zeta(B_1, ..., B_a) maps to prod_{b=1..a} 1/(x^{B_1 u ... u B_b} - 1),
// where x^S is the product of x_j over j in S. A term maps to the product
// over its atoms. Denominator factors are tracked by their support set.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "partzeta/combinatorics.hpp"
#include "partzeta/integer.hpp"
#include "partzeta/polynomial.hpp"
#include "partzeta/stuffle.hpp"

namespace partzeta {

/// The factor (prod_{j in support} x_j) - 1.
struct DenomFactor {
  IndexSet support;

  bool operator==(const DenomFactor&) const = default;
  auto operator<=>(const DenomFactor&) const = default;
};

/// 1 / prod_f f^{multiplicity(f)}
struct RationalTermRep {
  std::map<DenomFactor, unsigned> factors;

  unsigned factor_count() const;
  bool operator==(const RationalTermRep&) const = default;
};

struct RationalCombination {
  IndexSet universe;
  std::vector<std::pair<Integer, RationalTermRep>> terms;

  bool operator==(const RationalCombination&) const = default;
};

RationalTermRep rational_term_of(const LegalTerm& term);
RationalCombination rational_combination_of(const Expression& expr);

/// The polynomial x^support - 1 over the slots of `universe`.
Polynomial factor_polynomial(DenomFactor f, IndexSet universe);

/// Least common denominator and the numerator obtained by clearing it.
struct ClearedCombination {
  RationalTermRep denominator;
  Polynomial numerator;
};

ClearedCombination clear_denominators(const RationalCombination& comb);

/// Exact: true iff the cleared numerator is the zero polynomial.
bool is_zero_combination(const RationalCombination& comb);

/// Exact value of the combination at a point with every coordinate > 1.
/// `point[r]` is the value of the r-th smallest universe variable.
Rational evaluate(const RationalCombination& comb, const std::vector<Rational>& point);
Rational evaluate(const RationalTermRep& rep, IndexSet universe, const std::vector<Rational>& point);

/// Seeded random point with coordinates 1 + p/q, 1 <= p, q <= 97.
std::vector<Rational> random_point(std::size_t nvars, std::mt19937_64& rng);

/// Evaluates at `trials` seeded random points. false is a proof of
/// non-vanishing; true only means no refutation was found.
bool probabilistic_zero_test(const RationalCombination& comb, unsigned trials, std::uint64_t seed);

/// "(x1*x3 - 1)^2"
std::string to_string(DenomFactor f, unsigned multiplicity = 1);

}  // namespace partzeta
