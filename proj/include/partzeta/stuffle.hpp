#pragma once

// Legal terms, legal expressions, and the stuffle (quasi-shuffle) product.
//
// A Block {i, j, ...} stands for the argument sum s_i + s_j + ...; a
// ZetaAtom is one factor zeta(B_1, ..., B_a); a LegalTerm is a product of
// atoms in which every variable of the universe occurs exactly once.

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "partzeta/combinatorics.hpp"
#include "partzeta/integer.hpp"

namespace partzeta {

using Block = IndexSet;
using BlockTuple = std::vector<Block>;

/// Union of the blocks of `blocks`; throws if any block is empty or two overlap.
IndexSet disjoint_support(const BlockTuple& blocks);

class ZetaAtom {
 public:
  /// Throws on an empty tuple, an empty block, or overlapping blocks.
  explicit ZetaAtom(BlockTuple args);

  const BlockTuple& args() const noexcept { return args_; }
  std::size_t depth() const noexcept { return args_.size(); }
  IndexSet support() const noexcept { return support_; }

  bool operator==(const ZetaAtom& other) const { return args_ == other.args_; }
  std::strong_ordering operator<=>(const ZetaAtom& other) const {
    return std::lexicographical_compare_three_way(args_.begin(), args_.end(), other.args_.begin(),
                                                  other.args_.end());
  }

 private:
  BlockTuple args_;
  IndexSet support_;
};

class LegalTerm {
 public:
  const std::vector<ZetaAtom>& atoms() const noexcept { return atoms_; }
  IndexSet universe() const noexcept { return universe_; }

  bool operator==(const LegalTerm&) const = default;
  std::strong_ordering operator<=>(const LegalTerm& other) const;

 private:
  friend LegalTerm validate_legal_term(std::vector<ZetaAtom> atoms, IndexSet universe);
  std::vector<ZetaAtom> atoms_;  // sorted by smallest index
  IndexSet universe_;
};

/// Canonicalizes atom order; throws "variable reused", "variable missing",
/// or "empty block/atom".
LegalTerm validate_legal_term(std::vector<ZetaAtom> atoms, IndexSet universe);
LegalTerm validate_legal_term(const std::vector<BlockTuple>& atoms, IndexSet universe);

/// The single-atom term zeta(P_1, ..., P_k) of an ordered partition.
LegalTerm single_zeta_term(const OrderedPartition& partition);

/// Integer linear combination of legal terms over one universe.
class Expression {
 public:
  Expression() = default;
  explicit Expression(IndexSet universe) : universe_(universe) {}

  IndexSet universe() const noexcept { return universe_; }
  const std::map<LegalTerm, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds coeff * term. An empty expression adopts the universe of the first
  /// term it receives; afterwards universes must match.
  void add(const LegalTerm& term, const Integer& coeff);

  Expression& operator+=(const Expression& other);
  Expression& operator-=(const Expression& other);
  Expression& operator*=(const Integer& scalar);
  friend Expression operator+(Expression a, const Expression& b) { return a += b; }
  friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
  friend Expression operator*(const Integer& c, Expression a) { return a *= c; }

  bool operator==(const Expression&) const = default;

 private:
  IndexSet universe_;
  std::map<LegalTerm, Integer> terms_;
};

/// Coefficients c_P on single zeta functions indexed by ordered set partitions.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(IndexSet universe) : universe_(universe) {}

  IndexSet universe() const noexcept { return universe_; }
  const std::map<OrderedPartition, Integer>& coeffs() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }
  Integer coefficient(const OrderedPartition& p) const;

  /// Throws unless `p` is an ordered partition of the universe.
  void add(const OrderedPartition& p, const Integer& coeff);

  CanonicalForm& operator+=(const CanonicalForm& other);
  CanonicalForm& operator*=(const Integer& scalar);
  friend CanonicalForm operator+(CanonicalForm a, const CanonicalForm& b) { return a += b; }
  friend CanonicalForm operator*(const Integer& c, CanonicalForm a) { return a *= c; }

  /// Sum of c_P * zeta(P) as an Expression of single-atom terms.
  Expression to_expression() const;

  bool operator==(const CanonicalForm&) const = default;

 private:
  IndexSet universe_;
  std::map<OrderedPartition, Integer> coeffs_;
};

/// Multiset u * v: each outcome tuple with its multiplicity.
struct StuffleResult {
  std::map<BlockTuple, Integer> tuples;

  Integer total_multiplicity() const;
  bool operator==(const StuffleResult&) const = default;
};

/// The quasi-shuffle recursion with merged heads realized as block union.
/// Throws "operands share a variable" on overlapping inputs.
StuffleResult stuffle_product(const BlockTuple& u, const BlockTuple& v);

/// sum_k C(m,k) C(n,k) 2^k
Integer stuffle_size(unsigned m, unsigned n);

/// Expands every product term with the stuffle rule (left fold over the
/// canonical atom order) and collects coefficients.
CanonicalForm normalize(const Expression& expr);

struct Witness {
  OrderedPartition partition;
  Integer coefficient;
  bool operator==(const Witness&) const = default;
};

struct PartitionIdentityVerdict {
  bool identity = true;
  /// First nonzero canonical coefficient, present iff !identity.
  std::optional<Witness> witness;
};

PartitionIdentityVerdict is_partition_identity(const Expression& expr);

}  // namespace partzeta
