#include "partzeta/parser.hpp"

#include <cctype>
#include <string>

#include "partzeta/error.hpp"

namespace partzeta {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression expression() {
    skip_ws();
    if (peek() == '0' && is_lone_zero()) {
      ++pos_;
      expect_end();
      return Expression();
    }
    Expression e;
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = take() == '-';
      skip_ws();
    }
    signed_term(e, negate);
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+', '-' or end of input");
      ++pos_;
      signed_term(e, c == '-');
    }
    return e;
  }

  BlockTuple arglist() {
    skip_ws();
    bool wrapped = false;
    if (peek() == '(') {
      ++pos_;
      wrapped = true;
      skip_ws();
    }
    BlockTuple out;
    IndexSet used;
    if (!(at_end() || (wrapped && peek() == ')'))) {
      out.push_back(arg(used));
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        out.push_back(arg(used));
        skip_ws();
      }
    }
    if (wrapped) expect(')');
    expect_end();
    return out;
  }

 private:
  void signed_term(Expression& e, bool negate) {
    skip_ws();
    const std::size_t start = pos_;
    Integer coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      skip_ws();
      expect('*');
    }
    if (negate) coeff = -coeff;

    IndexSet used;
    std::vector<BlockTuple> atoms;
    atoms.push_back(factor(used));
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      atoms.push_back(factor(used));
      skip_ws();
    }
    if (!e.is_zero() || !e.universe().empty()) {
      if (used != e.universe()) throw ParseError("terms over different variable sets", start);
    }
    const LegalTerm term = validate_legal_term(atoms, used);
    if (e.universe().empty()) e = Expression(used);
    e.add(term, coeff);
  }

  BlockTuple factor(IndexSet& used) {
    skip_ws();
    if (text_.substr(pos_, 4) != "zeta") fail("expected 'zeta'");
    pos_ += 4;
    skip_ws();
    expect('(');
    BlockTuple args;
    args.push_back(arg(used));
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      args.push_back(arg(used));
      skip_ws();
    }
    expect(')');
    return args;
  }

  Block arg(IndexSet& used) {
    IndexSet block;
    variable(block, used);
    skip_ws();
    while (peek() == '+') {
      ++pos_;
      variable(block, used);
      skip_ws();
    }
    used |= block;
    return block;
  }

  void variable(IndexSet& block, const IndexSet& used) {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() != 's') fail("expected variable 's<k>'");
    ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index after 's'");
    const Integer k = integer();
    if (k == 0) throw ParseError("variable index 0 (indices start at 1)", start);
    if (k > IndexSet::kMaxIndex) {
      throw ParseError("variable index exceeds " + std::to_string(IndexSet::kMaxIndex), start);
    }
    const unsigned j = k.convert_to<unsigned>();
    if (block.contains(j)) throw ParseError("duplicate variable within an arg: s" + std::to_string(j), start);
    if (used.contains(j)) throw ParseError("variable reused in term: s" + std::to_string(j), start);
    block |= IndexSet{j};
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  bool is_lone_zero() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p == text_.size();
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_end() {
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string msg = what;
    if (at_end()) {
      msg += ", found end of input";
    } else {
      msg += ", found '";
      msg += text_[pos_];
      msg += "'";
    }
    throw ParseError(msg, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).expression(); }

BlockTuple parse_arglist(std::string_view text) { return Parser(text).arglist(); }

CanonicalForm parse_canonical_form(std::string_view text) {
  const Expression e = parse_expression(text);
  CanonicalForm cf(e.universe());
  for (const auto& [term, c] : e.terms()) {
    if (term.atoms().size() != 1) throw Error("canonical form terms must be single zeta functions");
    cf.add(OrderedPartition{term.atoms().front().args()}, c);
  }
  return cf;
}

}  // namespace partzeta
