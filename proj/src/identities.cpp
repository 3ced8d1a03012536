#include "partzeta/identities.hpp"

#include <algorithm>
#include <string>

#include "partzeta/error.hpp"
#include "partzeta/numeric.hpp"
#include "partzeta/rational.hpp"

namespace partzeta {

const char* to_string(Method m) {
  switch (m) {
    case Method::canonical:
      return "canonical";
    case Method::rational:
      return "rational";
    case Method::numeric:
      return "numeric";
  }
  return "?";
}

Method method_from_string(std::string_view name) {
  if (name == "canonical") return Method::canonical;
  if (name == "rational") return Method::rational;
  if (name == "numeric") return Method::numeric;
  throw Error("unknown method '" + std::string(name) + "'");
}

Expression stuffle_identity(const BlockTuple& u, const BlockTuple& v) {
  const StuffleResult product = stuffle_product(u, v);
  const IndexSet universe = disjoint_support(u) | disjoint_support(v);
  if (universe.empty()) throw Error("stuffle identity needs a non-empty operand");

  std::vector<BlockTuple> atoms;
  if (!u.empty()) atoms.push_back(u);
  if (!v.empty()) atoms.push_back(v);
  Expression e(universe);
  e.add(validate_legal_term(atoms, universe), 1);
  for (const auto& [w, mult] : product.tuples) e.add(validate_legal_term({w}, universe), -mult);
  return e;
}

HoffmanSides hoffman_sides(unsigned n, unsigned cap) {
  if (n < 1 || n > cap) {
    throw Error("hoffman: n must be in 1.." + std::to_string(cap) + ", got " + std::to_string(n));
  }
  const IndexSet universe = IndexSet::range(n);
  HoffmanSides sides{Expression(universe), Expression(universe)};

  for (const auto& perm : permutations(universe)) {
    BlockTuple args;
    for (unsigned j : perm) args.push_back(Block{j});
    sides.lhs.add(validate_legal_term({args}, universe), 1);
  }
  for (const UnorderedPartition& p : unordered_set_partitions(universe)) {
    Integer coeff = (n - p.parts.size()) % 2 == 0 ? 1 : -1;
    std::vector<BlockTuple> atoms;
    for (IndexSet part : p.parts) {
      coeff *= factorial(part.size() - 1);
      atoms.push_back({part});
    }
    sides.rhs.add(validate_legal_term(atoms, universe), coeff);
  }
  return sides;
}

Expression hoffman_identity(unsigned n, unsigned cap) {
  HoffmanSides s = hoffman_sides(n, cap);
  return s.lhs - s.rhs;
}

namespace {

bool rational_route(const Expression& expr, std::uint64_t seed) {
  const RationalCombination comb = rational_combination_of(expr);
  if (!probabilistic_zero_test(comb, 3, seed)) return false;
  return is_zero_combination(comb);
}

}  // namespace

IdentityReport verify(const Expression& expr, const std::vector<Method>& methods, const NumericParams& params) {
  IdentityReport report;
  const PartitionIdentityVerdict canonical = is_partition_identity(expr);
  report.identity = canonical.identity;
  report.witness = canonical.witness;
  report.methods_run.push_back(Method::canonical);

  auto requested = [&](Method m) { return std::find(methods.begin(), methods.end(), m) != methods.end(); };

  if (requested(Method::rational)) {
    report.methods_run.push_back(Method::rational);
    if (rational_route(expr, params.seed) != report.identity) report.agreement = false;
  }
  if (requested(Method::numeric)) {
    report.methods_run.push_back(Method::numeric);
    if (params.samples == 0) throw Error("numeric verification needs at least one sample");
    const TruncationLevel level(params.truncation);
    double worst = 0.0;
    for (unsigned k = 0; k < params.samples; ++k) {
      const Assignment a = Assignment::random(expr.universe(), params.seed + k);
      worst = std::max(worst, residual_report(expr, a, level).relative);
    }
    report.numeric_residual = worst;
    if ((worst <= params.tolerance) != report.identity) report.agreement = false;
  }
  return report;
}

}  // namespace partzeta
