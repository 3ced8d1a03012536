#pragma once

#include <random>

#include "oracles.hpp"
#include "partzeta/rational.hpp"
#include "partzeta/stuffle.hpp"

namespace partzeta::fixture {

// 2 zeta(s1+s2+s3) - zeta(s2) zeta(s1+s3) - zeta(s3) zeta(s1+s2) + zeta(s1+s2,s3)
//   + zeta(s2,s1+s3) + zeta(s1+s3,s2) + zeta(s3,s1+s2)
inline Expression three_variable_example() {
  using B = IndexSet;
  const IndexSet u = IndexSet::range(3);
  Expression e(u);
  e.add(validate_legal_term({{B{1, 2, 3}}}, u), 2);
  e.add(validate_legal_term({{B{2}}, {B{1, 3}}}, u), -1);
  e.add(validate_legal_term({{B{3}}, {B{1, 2}}}, u), -1);
  e.add(validate_legal_term({{B{1, 2}, B{3}}}, u), 1);
  e.add(validate_legal_term({{B{2}, B{1, 3}}}, u), 1);
  e.add(validate_legal_term({{B{1, 3}, B{2}}}, u), 1);
  e.add(validate_legal_term({{B{3}, B{1, 2}}}, u), 1);
  return e;
}

inline constexpr const char* kThreeVariableText =
    "2*zeta(s1+s2+s3) - zeta(s2)*zeta(s1+s3) - zeta(s3)*zeta(s1+s2) + zeta(s1+s2,s3)"
    " + zeta(s2,s1+s3) + zeta(s1+s3,s2) + zeta(s3,s1+s2)";

/// 1 / prod f^m from (support, m) pairs.
inline RationalTermRep rep(std::initializer_list<std::pair<IndexSet, unsigned>> factors) {
  RationalTermRep r;
  for (const auto& [s, m] : factors) r.factors[DenomFactor{s}] += m;
  return r;
}

// The rational counterpart of the three-variable example, written out factor by factor.
inline RationalCombination three_variable_rational() {
  using B = IndexSet;
  return {IndexSet::range(3),
          {{2, rep({{B{1, 2, 3}, 1}})},
           {-1, rep({{B{2}, 1}, {B{1, 3}, 1}})},
           {-1, rep({{B{3}, 1}, {B{1, 2}, 1}})},
           {1, rep({{B{1, 2}, 1}, {B{1, 2, 3}, 1}})},
           {1, rep({{B{2}, 1}, {B{1, 2, 3}, 1}})},
           {1, rep({{B{1, 3}, 1}, {B{1, 2, 3}, 1}})},
           {1, rep({{B{3}, 1}, {B{1, 2, 3}, 1}})}}};
}

/// Random legal expression on s_1..s_n, n <= max_n, coefficients in [-3, 3].
/// Roughly half are identities: random terms minus their own canonical
/// expansion. The rest are random terms, sometimes an identity plus noise.
inline Expression random_expression(std::mt19937_64& rng, unsigned max_n = 4) {
  const IndexSet u = IndexSet::range(1 + static_cast<unsigned>(rng() % max_n));
  std::uniform_int_distribution<int> coeff(-3, 3);
  Expression e(u);
  const unsigned count = 1 + static_cast<unsigned>(rng() % 3);
  for (unsigned k = 0; k < count; ++k) e.add(oracle::random_legal_term(u, rng), coeff(rng));
  switch (rng() % 4) {
    case 0:
    case 1:
      e -= normalize(e).to_expression();
      break;
    case 2: {
      e -= normalize(e).to_expression();
      Expression noise(u);
      noise.add(oracle::random_legal_term(u, rng), coeff(rng));
      e += noise;
      break;
    }
    default:
      break;
  }
  return e;
}

}  // namespace partzeta::fixture
