#include "partzeta/numeric.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "partzeta/error.hpp"

namespace partzeta {

TruncationLevel::TruncationLevel(long long n) {
  if (n < 2) throw Error("truncation level N must be >= 2");
  if (n > 100'000'000) throw Error("truncation level N too large");
  n_ = static_cast<unsigned>(n);
}

Assignment::Assignment(std::map<unsigned, double> values) : values_(std::move(values)) {
  for (const auto& [j, v] : values_) {
    if (j == 0 || j > IndexSet::kMaxIndex) throw Error("assignment to invalid variable index " + std::to_string(j));
    if (!(v > 1.0)) throw Error("s" + std::to_string(j) + " must be > 1");
  }
}

double Assignment::at(unsigned index) const {
  auto it = values_.find(index);
  if (it == values_.end()) throw Error("s" + std::to_string(index) + " is unassigned");
  return it->second;
}

void Assignment::require_covers(IndexSet universe) const {
  for (unsigned j : universe.members()) at(j);
}

Assignment Assignment::random(IndexSet universe, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<unsigned, double> values;
  for (unsigned j : universe.members()) {
    // 53-bit uniform in [0, 1), mapped to (1.1, 3.0]
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    values[j] = 3.0 - 1.9 * u;
  }
  return Assignment(std::move(values));
}

double eval_zeta_truncated(std::span<const double> exponents, TruncationLevel n) {
  const std::size_t depth = exponents.size();
  if (depth == 0) throw Error("empty zeta argument tuple");
  const unsigned N = n.value();
  if (depth >= N) throw Error("truncation too small");

  // level[k] = sum over chains N > k_1 > ... > k_r = k of prod_{i<=r} k_i^{-s_i}
  std::vector<double> level(N, 0.0);
  for (unsigned k = 1; k < N; ++k) level[k] = std::pow(static_cast<double>(k), -exponents[0]);
  for (std::size_t r = 1; r < depth; ++r) {
    std::vector<double> next(N, 0.0);
    double above = 0.0;  // sum of level[k'] for k < k' < N
    for (unsigned k = N - 1; k >= 1; --k) {
      next[k] = std::pow(static_cast<double>(k), -exponents[r]) * above;
      above += level[k];
    }
    level = std::move(next);
  }
  double total = 0.0;
  for (unsigned k = N - 1; k >= 1; --k) total += level[k];
  return total;
}

double eval_atom(const ZetaAtom& atom, const Assignment& assign, TruncationLevel n) {
  std::vector<double> exps;
  exps.reserve(atom.depth());
  for (Block b : atom.args()) {
    double s = 0.0;
    for (unsigned j : b.members()) s += assign.at(j);
    exps.push_back(s);
  }
  return eval_zeta_truncated(exps, n);
}

double eval_term(const LegalTerm& term, const Assignment& assign, TruncationLevel n) {
  double v = 1.0;
  for (const ZetaAtom& a : term.atoms()) v *= eval_atom(a, assign, n);
  return v;
}

double eval_expression(const Expression& expr, const Assignment& assign, TruncationLevel n) {
  assign.require_covers(expr.universe());
  double sum = 0.0;
  for (const auto& [term, c] : expr.terms()) sum += c.convert_to<double>() * eval_term(term, assign, n);
  return sum;
}

Residual residual_report(const Expression& expr, const Assignment& assign, TruncationLevel n) {
  assign.require_covers(expr.universe());
  Residual r;
  double sum = 0.0;
  for (const auto& [term, c] : expr.terms()) {
    const double v = c.convert_to<double>() * eval_term(term, assign, n);
    sum += v;
    r.magnitude += std::abs(v);
  }
  r.absolute = std::abs(sum);
  r.relative = r.magnitude > 0.0 ? r.absolute / r.magnitude : 0.0;
  return r;
}

}  // namespace partzeta
