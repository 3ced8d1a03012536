#include "partzeta/rational.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "partzeta/error.hpp"

namespace partzeta {
namespace {

using B = IndexSet;

using fixture::rep;
using fixture::three_variable_rational;

TEST(RationalTermOf, PrefixUnions) {
  const IndexSet u = IndexSet::range(3);
  EXPECT_EQ(rational_term_of(validate_legal_term({{B{1, 2}, B{3}}}, u)), rep({{B{1, 2}, 1}, {B{1, 2, 3}, 1}}));
  EXPECT_EQ(rational_term_of(validate_legal_term({{B{2}}, {B{1, 3}}}, u)), rep({{B{2}, 1}, {B{1, 3}, 1}}));
  EXPECT_EQ(rational_term_of(validate_legal_term({{B{1}}}, B{1})), rep({{B{1}, 1}}));
  EXPECT_EQ(rational_term_of(validate_legal_term({{B{3}, B{1}, B{2}}}, u)),
            rep({{B{3}, 1}, {B{1, 3}, 1}, {B{1, 2, 3}, 1}}));
}

TEST(RationalTermOf, FactorCountIsTotalDepth) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const IndexSet u = IndexSet::range(1 + rng() % 7);
    const LegalTerm t = oracle::random_legal_term(u, rng);
    unsigned depth = 0;
    for (const auto& a : t.atoms()) depth += static_cast<unsigned>(a.depth());
    EXPECT_EQ(rational_term_of(t).factor_count(), depth);
  }
}

TEST(IsZeroCombination, ThreeVariableIdentity) { EXPECT_TRUE(is_zero_combination(three_variable_rational())); }

TEST(IsZeroCombination, TwoVariableProductRule) {
  // 1/((x1-1)(x2-1)) = 1/((x1-1)(x1x2-1)) + 1/((x2-1)(x1x2-1)) + 1/(x1x2-1)
  const RationalCombination c{IndexSet::range(2),
                              {{1, rep({{B{1}, 1}, {B{2}, 1}})},
                               {-1, rep({{B{1}, 1}, {B{1, 2}, 1}})},
                               {-1, rep({{B{2}, 1}, {B{1, 2}, 1}})},
                               {-1, rep({{B{1, 2}, 1}})}}};
  EXPECT_TRUE(is_zero_combination(c));
  auto broken = c;
  broken.terms.pop_back();
  EXPECT_FALSE(is_zero_combination(broken));
}

TEST(IsZeroCombination, TrivialCases) {
  const RationalTermRep t = rep({{B{1}, 1}});
  EXPECT_FALSE(is_zero_combination({B{1}, {{1, t}}}));
  EXPECT_TRUE(is_zero_combination({B{1}, {{1, t}, {-1, t}}}));
  const RationalTermRep big = rep({{B{1, 2}, 1}, {B{2}, 1}, {B{1, 2, 3}, 1}});
  EXPECT_TRUE(is_zero_combination({IndexSet::range(3), {{5, big}, {-5, big}}}));
  EXPECT_TRUE(is_zero_combination({IndexSet::range(3), {}}));
}

TEST(IsZeroCombination, RepeatedFactors) {
  const RationalTermRep sq = rep({{B{1}, 2}});
  const RationalTermRep lin = rep({{B{1}, 1}});
  EXPECT_TRUE(is_zero_combination({B{1}, {{1, sq}, {-1, sq}}}));
  EXPECT_FALSE(is_zero_combination({B{1}, {{1, sq}, {-1, lin}}}));
  const ClearedCombination cleared = clear_denominators({B{1}, {{1, sq}, {-1, lin}}});
  EXPECT_EQ(cleared.denominator, sq);
  // 1 - (x1 - 1)
  EXPECT_EQ(cleared.numerator.to_string(), "-x1 + 2");
}

TEST(IsZeroCombination, MatchesLegalTermConstruction) {
  const Expression e = fixture::three_variable_example();
  const RationalCombination from_terms = rational_combination_of(e);
  auto sorted = [](RationalCombination c) {
    std::sort(c.terms.begin(), c.terms.end(), [](const auto& a, const auto& b) {
      return std::tie(a.second.factors, a.first) < std::tie(b.second.factors, b.first);
    });
    return c;
  };
  EXPECT_EQ(sorted(from_terms), sorted(three_variable_rational()));
}

TEST(ProbabilisticZeroTest, Examples) {
  EXPECT_TRUE(probabilistic_zero_test(three_variable_rational(), 5, 1));
  EXPECT_FALSE(probabilistic_zero_test({B{1}, {{1, rep({{B{1}, 1}})}}}, 1, 1));
  EXPECT_TRUE(probabilistic_zero_test({B{1}, {}}, 1, 1));
  EXPECT_THROW(probabilistic_zero_test({B{1}, {}}, 0, 1), Error);
}

TEST(ClearDenominators, NumeratorEqualsDenominatorTimesValue) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const IndexSet u = IndexSet::range(1 + rng() % 4);
    Expression e(u);
    for (int k = 0; k < 4; ++k) e.add(oracle::random_legal_term(u, rng), Integer(int(rng() % 7) - 3));
    const RationalCombination comb = rational_combination_of(e);
    const ClearedCombination cleared = clear_denominators(comb);
    for (int p = 0; p < 3; ++p) {
      const std::vector<Rational> pt = random_point(u.size(), rng);
      const Rational d = Rational(1) / evaluate(cleared.denominator, u, pt);
      EXPECT_EQ(cleared.numerator.evaluate(pt), d * evaluate(comb, pt));
    }
  }
}

TEST(ProbabilisticZeroTest, NeverRefutesAnExactZero) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const IndexSet u = IndexSet::range(1 + rng() % 4);
    const LegalTerm t = oracle::random_legal_term(u, rng);
    Expression e(u);
    e.add(t, 3);
    // subtract the same value written as single zetas
    Expression single(u);
    single.add(t, 3);
    e -= normalize(single).to_expression();
    const RationalCombination comb = rational_combination_of(e);
    ASSERT_TRUE(is_zero_combination(comb));
    EXPECT_TRUE(probabilistic_zero_test(comb, 4, rng()));
  }
}

TEST(FactorPolynomial, Rendering) {
  EXPECT_EQ(factor_polynomial(DenomFactor{B{1, 3}}, IndexSet::range(3)).to_string(), "x1*x3 - 1");
  EXPECT_EQ(to_string(DenomFactor{B{1, 3}}, 2), "(x1*x3 - 1)^2");
  EXPECT_THROW(factor_polynomial(DenomFactor{B{4}}, IndexSet::range(3)), Error);
}

}  // namespace
}  // namespace partzeta
