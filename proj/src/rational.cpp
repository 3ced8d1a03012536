#include "partzeta/rational.hpp"

#include <algorithm>

#include "partzeta/error.hpp"

namespace partzeta {

namespace {

Monomial support_monomial(IndexSet support, IndexSet universe) {
  std::vector<Exponent> e(universe.size(), 0);
  for (unsigned j : support.members()) e[universe.rank_of(j)] = 1;
  return Monomial(std::move(e));
}

// p * (x^S - 1)
Polynomial times_factor(const Polynomial& p, const Monomial& xs) { return p.shifted(xs) - p; }

Rational support_product(IndexSet support, IndexSet universe, const std::vector<Rational>& point) {
  Rational v = 1;
  for (unsigned j : support.members()) v *= point[universe.rank_of(j)];
  return v;
}

}  // namespace

unsigned RationalTermRep::factor_count() const {
  unsigned n = 0;
  for (const auto& [f, m] : factors) n += m;
  return n;
}

RationalTermRep rational_term_of(const LegalTerm& term) {
  RationalTermRep rep;
  for (const ZetaAtom& atom : term.atoms()) {
    IndexSet prefix;
    for (Block b : atom.args()) {
      prefix |= b;
      ++rep.factors[DenomFactor{prefix}];
    }
  }
  return rep;
}

RationalCombination rational_combination_of(const Expression& expr) {
  RationalCombination comb{expr.universe(), {}};
  comb.terms.reserve(expr.size());
  for (const auto& [term, c] : expr.terms()) comb.terms.emplace_back(c, rational_term_of(term));
  return comb;
}

Polynomial factor_polynomial(DenomFactor f, IndexSet universe) {
  if (f.support.empty()) throw Error("denominator factor with empty support");
  if (!f.support.is_subset_of(universe)) throw Error("denominator factor outside the universe");
  const std::size_t n = universe.size();
  return Polynomial::monomial(support_monomial(f.support, universe)) - Polynomial::constant(n, 1);
}

ClearedCombination clear_denominators(const RationalCombination& comb) {
  const IndexSet universe = comb.universe;
  ClearedCombination out{RationalTermRep{}, Polynomial(universe.size())};
  for (const auto& [c, rep] : comb.terms) {
    for (const auto& [f, m] : rep.factors) {
      if (!f.support.is_subset_of(universe) || f.support.empty()) {
        throw Error("denominator factor outside the universe");
      }
      unsigned& slot = out.denominator.factors[f];
      slot = std::max(slot, m);
    }
  }
  std::map<DenomFactor, Monomial> monomials;
  for (const auto& [f, m] : out.denominator.factors) monomials.emplace(f, support_monomial(f.support, universe));

  for (const auto& [c, rep] : comb.terms) {
    if (c == 0) continue;
    Polynomial p = Polynomial::constant(universe.size(), c);
    for (const auto& [f, maxm] : out.denominator.factors) {
      auto it = rep.factors.find(f);
      const unsigned have = it == rep.factors.end() ? 0 : it->second;
      for (unsigned k = have; k < maxm; ++k) p = times_factor(p, monomials.at(f));
    }
    out.numerator = out.numerator + p;
  }
  return out;
}

bool is_zero_combination(const RationalCombination& comb) { return clear_denominators(comb).numerator.is_zero(); }

Rational evaluate(const RationalTermRep& rep, IndexSet universe, const std::vector<Rational>& point) {
  if (point.size() != universe.size()) throw Error("evaluation point has wrong dimension");
  Rational denom = 1;
  for (const auto& [f, m] : rep.factors) {
    const Rational d = support_product(f.support, universe, point) - 1;
    if (d == 0) throw Error("evaluation point lies on a pole");
    for (unsigned k = 0; k < m; ++k) denom *= d;
  }
  return Rational(1) / denom;
}

Rational evaluate(const RationalCombination& comb, const std::vector<Rational>& point) {
  Rational sum = 0;
  for (const auto& [c, rep] : comb.terms) sum += Rational(c) * evaluate(rep, comb.universe, point);
  return sum;
}

std::vector<Rational> random_point(std::size_t nvars, std::mt19937_64& rng) {
  // Plain modular reduction keeps points identical across standard libraries.
  std::vector<Rational> point;
  point.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    const int p = 1 + static_cast<int>(rng() % 97);
    const int q = 1 + static_cast<int>(rng() % 97);
    point.push_back(Rational(1) + Rational(p, q));
  }
  return point;
}

bool probabilistic_zero_test(const RationalCombination& comb, unsigned trials, std::uint64_t seed) {
  if (trials == 0) throw Error("probabilistic_zero_test requires trials >= 1");
  if (comb.terms.empty()) return true;
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < trials; ++t) {
    if (evaluate(comb, random_point(comb.universe.size(), rng)) != 0) return false;
  }
  return true;
}

std::string to_string(DenomFactor f, unsigned multiplicity) {
  std::string s = "(";
  bool first = true;
  for (unsigned j : f.support.members()) {
    if (!first) s += '*';
    s += "x" + std::to_string(j);
    first = false;
  }
  s += " - 1)";
  if (multiplicity > 1) s += "^" + std::to_string(multiplicity);
  return s;
}

}  // namespace partzeta
