#include "partzeta/stuffle.hpp"

#include <algorithm>

#include "partzeta/error.hpp"

namespace partzeta {

IndexSet disjoint_support(const BlockTuple& blocks) {
  IndexSet seen;
  for (Block b : blocks) {
    if (b.empty()) throw Error("empty block/atom");
    if (b.intersects(seen)) throw Error("variable reused");
    seen |= b;
  }
  return seen;
}

ZetaAtom::ZetaAtom(BlockTuple args) : args_(std::move(args)) {
  if (args_.empty()) throw Error("empty block/atom");
  support_ = disjoint_support(args_);
}

std::strong_ordering LegalTerm::operator<=>(const LegalTerm& other) const {
  if (auto c = universe_ <=> other.universe_; c != 0) return c;
  return std::lexicographical_compare_three_way(atoms_.begin(), atoms_.end(), other.atoms_.begin(),
                                                other.atoms_.end());
}

LegalTerm validate_legal_term(std::vector<ZetaAtom> atoms, IndexSet universe) {
  if (atoms.empty()) throw Error("empty block/atom");
  IndexSet seen;
  for (const ZetaAtom& a : atoms) {
    if (a.support().intersects(seen)) throw Error("variable reused");
    seen |= a.support();
  }
  if (!seen.is_subset_of(universe)) throw Error("variable outside universe");
  if (seen != universe) throw Error("variable missing");
  std::sort(atoms.begin(), atoms.end(),
            [](const ZetaAtom& a, const ZetaAtom& b) { return a.support().min() < b.support().min(); });
  LegalTerm t;
  t.atoms_ = std::move(atoms);
  t.universe_ = universe;
  return t;
}

LegalTerm validate_legal_term(const std::vector<BlockTuple>& atoms, IndexSet universe) {
  std::vector<ZetaAtom> built;
  built.reserve(atoms.size());
  for (const BlockTuple& a : atoms) built.emplace_back(a);
  return validate_legal_term(std::move(built), universe);
}

LegalTerm single_zeta_term(const OrderedPartition& partition) {
  return validate_legal_term({ZetaAtom(partition.parts)}, partition.ground());
}

void Expression::add(const LegalTerm& term, const Integer& coeff) {
  if (terms_.empty() && universe_.empty()) universe_ = term.universe();
  if (term.universe() != universe_) throw Error("terms over different variable sets");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(term, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Expression& Expression::operator+=(const Expression& other) {
  for (const auto& [term, c] : other.terms_) add(term, c);
  if (universe_.empty()) universe_ = other.universe_;
  return *this;
}

Expression& Expression::operator-=(const Expression& other) {
  for (const auto& [term, c] : other.terms_) add(term, -c);
  if (universe_.empty()) universe_ = other.universe_;
  return *this;
}

Expression& Expression::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [term, c] : terms_) c *= scalar;
  return *this;
}

Integer CanonicalForm::coefficient(const OrderedPartition& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void CanonicalForm::add(const OrderedPartition& p, const Integer& coeff) {
  if (coeffs_.empty() && universe_.empty()) universe_ = p.ground();
  if (!p.is_partition_of(universe_)) {
    throw Error("not an ordered partition of the universe " + universe_.to_string());
  }
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

CanonicalForm& CanonicalForm::operator+=(const CanonicalForm& other) {
  if (universe_.empty()) universe_ = other.universe_;
  for (const auto& [p, c] : other.coeffs_) add(p, c);
  return *this;
}

CanonicalForm& CanonicalForm::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, c] : coeffs_) c *= scalar;
  return *this;
}

Expression CanonicalForm::to_expression() const {
  Expression e(universe_);
  for (const auto& [p, c] : coeffs_) e.add(single_zeta_term(p), c);
  return e;
}

Integer StuffleResult::total_multiplicity() const {
  Integer total = 0;
  for (const auto& [t, m] : tuples) total += m;
  return total;
}

namespace {

using TupleMap = std::map<BlockTuple, Integer>;

class StuffleTable {
 public:
  StuffleTable(const BlockTuple& u, const BlockTuple& v)
      : u_(u), v_(v), memo_((u.size() + 1) * (v.size() + 1)), done_(memo_.size(), false) {}

  // u[i..] * v[j..]
  const TupleMap& at(std::size_t i, std::size_t j) {
    const std::size_t key = i * (v_.size() + 1) + j;
    if (done_[key]) return memo_[key];
    TupleMap out;
    if (i == u_.size()) {
      out.emplace(BlockTuple(v_.begin() + static_cast<std::ptrdiff_t>(j), v_.end()), 1);
    } else if (j == v_.size()) {
      out.emplace(BlockTuple(u_.begin() + static_cast<std::ptrdiff_t>(i), u_.end()), 1);
    } else {
      prepend(u_[i], at(i + 1, j), out);
      prepend(v_[j], at(i, j + 1), out);
      prepend(u_[i] | v_[j], at(i + 1, j + 1), out);
    }
    memo_[key] = std::move(out);
    done_[key] = true;
    return memo_[key];
  }

 private:
  static void prepend(Block head, const TupleMap& tails, TupleMap& out) {
    for (const auto& [tail, mult] : tails) {
      BlockTuple w;
      w.reserve(tail.size() + 1);
      w.push_back(head);
      w.insert(w.end(), tail.begin(), tail.end());
      out[std::move(w)] += mult;
    }
  }

  const BlockTuple& u_;
  const BlockTuple& v_;
  std::vector<TupleMap> memo_;
  std::vector<bool> done_;
};

}  // namespace

StuffleResult stuffle_product(const BlockTuple& u, const BlockTuple& v) {
  const IndexSet su = disjoint_support(u);
  const IndexSet sv = disjoint_support(v);
  if (su.intersects(sv)) throw Error("operands share a variable");
  StuffleTable table(u, v);
  return StuffleResult{table.at(0, 0)};
}

Integer stuffle_size(unsigned m, unsigned n) {
  Integer total = 0;
  Integer pow2 = 1;
  for (unsigned k = 0; k <= std::min(m, n); ++k) {
    total += binomial(m, k) * binomial(n, k) * pow2;
    pow2 *= 2;
  }
  return total;
}

CanonicalForm normalize(const Expression& expr) {
  CanonicalForm out(expr.universe());
  for (const auto& [term, coeff] : expr.terms()) {
    const auto& atoms = term.atoms();
    TupleMap acc{{atoms.front().args(), Integer(1)}};
    for (std::size_t k = 1; k < atoms.size(); ++k) {
      TupleMap next;
      for (const auto& [tuple, mult] : acc) {
        for (const auto& [w, m] : stuffle_product(tuple, atoms[k].args()).tuples) {
          next[w] += mult * m;
        }
      }
      acc = std::move(next);
    }
    for (const auto& [tuple, mult] : acc) out.add(OrderedPartition{tuple}, coeff * mult);
  }
  return out;
}

PartitionIdentityVerdict is_partition_identity(const Expression& expr) {
  const CanonicalForm cf = normalize(expr);
  if (cf.empty()) return {};
  const auto& [p, c] = *cf.coeffs().begin();
  return PartitionIdentityVerdict{false, Witness{p, c}};
}

}  // namespace partzeta
