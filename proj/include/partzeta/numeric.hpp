#pragma once

// Truncated nested sums z_N(s_1, ..., s_d) = sum_{N > k_1 > ... > k_d > 0} prod k_j^{-s_j}.
//
// Truncated sums obey the stuffle rule exactly, so every partition identity
// holds for them at every N and residuals measure rounding only.

#include <cstdint>
#include <map>
#include <span>

#include "partzeta/stuffle.hpp"

namespace partzeta {

class TruncationLevel {
 public:
  /// Throws unless n >= 2.
  explicit TruncationLevel(long long n);
  unsigned value() const noexcept { return n_; }

 private:
  unsigned n_;
};

/// Real values for the variables s_j, each strictly greater than 1.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::map<unsigned, double> values);

  const std::map<unsigned, double>& values() const noexcept { return values_; }
  /// Throws if `index` is unassigned.
  double at(unsigned index) const;
  /// Throws unless every member of `universe` is assigned.
  void require_covers(IndexSet universe) const;

  /// Seeded draw from (1.1, 3.0] for every member of `universe`.
  static Assignment random(IndexSet universe, std::uint64_t seed);

 private:
  std::map<unsigned, double> values_;
};

/// Dynamic program over summation depth; each level accumulates suffix sums
/// from k = N-1 downward. Throws "truncation too small" if depth >= N.
double eval_zeta_truncated(std::span<const double> exponents, TruncationLevel n);

/// z_N of one atom with block-summed exponents.
double eval_atom(const ZetaAtom& atom, const Assignment& assign, TruncationLevel n);
double eval_term(const LegalTerm& term, const Assignment& assign, TruncationLevel n);
double eval_expression(const Expression& expr, const Assignment& assign, TruncationLevel n);

struct Residual {
  double absolute = 0.0;
  /// absolute / sum_h |a_h T_h|, or 0 when that magnitude is 0.
  double relative = 0.0;
  double magnitude = 0.0;
};

Residual residual_report(const Expression& expr, const Assignment& assign, TruncationLevel n);

}  // namespace partzeta
