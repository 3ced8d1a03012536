#pragma once

// Generators for known partition identities and the three-route verifier.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "partzeta/stuffle.hpp"

namespace partzeta {

enum class Method { canonical, rational, numeric };

const char* to_string(Method m);
/// Throws on an unknown name.
Method method_from_string(std::string_view name);

/// zeta(u) zeta(v) - sum_{w in u*v} zeta(w). An empty operand contributes
/// the factor 1.
Expression stuffle_identity(const BlockTuple& u, const BlockTuple& v);

inline constexpr unsigned kDefaultHoffmanCap = 7;

/// Both sides of Hoffman's identity on s_1..s_n:
///   sum_sigma zeta(s_sigma(1), ..., s_sigma(n))
///     = sum_P (-1)^{n-|P|} prod_{B in P} (|B|-1)! zeta(sum_{j in B} s_j)
struct HoffmanSides {
  Expression lhs;  // n! single-atom terms
  Expression rhs;  // Bell(n) products of depth-1 zetas
};

HoffmanSides hoffman_sides(unsigned n, unsigned cap = kDefaultHoffmanCap);
/// lhs - rhs
Expression hoffman_identity(unsigned n, unsigned cap = kDefaultHoffmanCap);

struct NumericParams {
  unsigned truncation = 50;
  std::uint64_t seed = 0;
  unsigned samples = 20;
  double tolerance = 1e-10;
};

struct IdentityReport {
  bool identity = true;
  std::optional<Witness> witness;
  std::vector<Method> methods_run;
  bool agreement = true;
  /// Largest relative residual over the numeric samples, if numeric ran.
  std::optional<double> numeric_residual;

  bool operator==(const IdentityReport&) const = default;
};

/// Canonical normalization always runs and decides the verdict. The
/// rational route uses a seeded evaluation pre-filter and falls back to
/// exact expansion; the numeric route compares relative residuals to
/// `params.tolerance`.
IdentityReport verify(const Expression& expr, const std::vector<Method>& methods,
                      const NumericParams& params = {});

}  // namespace partzeta
