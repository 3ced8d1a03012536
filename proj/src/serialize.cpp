#include "partzeta/serialize.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"
#include "partzeta/error.hpp"

namespace partzeta {

using nlohmann::json;

namespace {

// "c*body" with sign handling; `first` suppresses the leading " + ".
void append_signed(std::string& out, const Integer& c, const std::string& body, bool first) {
  const bool negative = c < 0;
  const Integer mag = negative ? Integer(-c) : c;
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (mag != 1) out += mag.str() + "*";
  out += body;
}

json indices(IndexSet s) { return s.members(); }

IndexSet index_set(const json& j) {
  if (!j.is_array()) throw Error("structured: expected an index array");
  std::vector<unsigned> m;
  for (const json& x : j) m.push_back(x.get<unsigned>());
  IndexSet s(m);
  if (s.size() != m.size()) throw Error("structured: duplicate index");
  return s;
}

json blocks(const BlockTuple& t) {
  json a = json::array();
  for (Block b : t) a.push_back(indices(b));
  return a;
}

BlockTuple block_tuple(const json& j) {
  if (!j.is_array()) throw Error("structured: expected an array of blocks");
  BlockTuple t;
  for (const json& b : j) t.push_back(index_set(b));
  return t;
}

Integer integer(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  throw Error("structured: expected an integer");
}

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return json{{"partition", blocks(w->partition.parts)}, {"coefficient", w->coefficient.str()}};
}

json parse_kind(std::string_view text, const char* kind) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("structured: ") + e.what());
  }
  if (!j.is_object() || j.value("kind", "") != kind) {
    throw Error(std::string("structured: expected kind '") + kind + "'");
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Format format_from_string(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "structured") return Format::structured;
  throw Error("unknown format '" + std::string(name) + "'");
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string to_text(const Block& b) {
  std::string s;
  for (unsigned j : b.members()) {
    if (!s.empty()) s += '+';
    s += "s" + std::to_string(j);
  }
  return s;
}

std::string to_text(const BlockTuple& args) {
  std::string s = "zeta(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ',';
    s += to_text(args[i]);
  }
  return s + ")";
}

std::string to_text(const LegalTerm& term) {
  std::string s;
  for (const ZetaAtom& a : term.atoms()) {
    if (!s.empty()) s += '*';
    s += to_text(a.args());
  }
  return s;
}

std::string to_text(const Expression& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [term, c] : e.terms()) append_signed(s, c, to_text(term), s.empty());
  return s;
}

std::string to_text(const CanonicalForm& cf) {
  if (cf.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : cf.coeffs()) append_signed(s, c, to_text(p.parts), s.empty());
  return s;
}

std::string to_text(const StuffleResult& r) {
  std::string s;
  for (const auto& [t, m] : r.tuples) append_signed(s, m, t.empty() ? "1" : to_text(t), s.empty());
  return s.empty() ? "0" : s;
}

std::string to_text(const RationalCombination& comb) {
  std::string s;
  for (const auto& [c, rep] : comb.terms) {
    std::string denom;
    for (const auto& [f, m] : rep.factors) {
      if (!denom.empty()) denom += '*';
      denom += to_string(f, m);
    }
    s += c.str() + "/(" + (denom.empty() ? "1" : denom) + ")\n";
  }
  return s.empty() ? "0\n" : s;
}

std::string to_text(const IdentityReport& r) {
  std::string s = "verdict: ";
  s += r.identity ? "identity" : "not-identity";
  s += "\nmethods:";
  for (std::size_t i = 0; i < r.methods_run.size(); ++i) {
    s += i ? ", " : " ";
    s += to_string(r.methods_run[i]);
  }
  s += "\nagreement: ";
  s += r.agreement ? "true" : "false";
  s += '\n';
  if (r.numeric_residual) s += "numeric_residual: " + format_double(*r.numeric_residual) + "\n";
  if (r.witness) {
    s += "witness: " + to_text(r.witness->partition.parts) + "\n";
    s += "witness_coefficient: " + r.witness->coefficient.str() + "\n";
  }
  return s;
}

std::string to_structured(const Expression& e) {
  json terms = json::array();
  for (const auto& [term, c] : e.terms()) {
    json atoms = json::array();
    for (const ZetaAtom& a : term.atoms()) atoms.push_back(blocks(a.args()));
    terms.push_back({{"coefficient", c.str()}, {"atoms", atoms}});
  }
  return dump({{"kind", "expression"}, {"universe", indices(e.universe())}, {"terms", terms}});
}

std::string to_structured(const CanonicalForm& cf) {
  json coeffs = json::array();
  for (const auto& [p, c] : cf.coeffs()) coeffs.push_back({{"partition", blocks(p.parts)}, {"coefficient", c.str()}});
  return dump({{"kind", "canonical_form"}, {"universe", indices(cf.universe())}, {"coefficients", coeffs}});
}

std::string to_structured(const StuffleResult& r) {
  json tuples = json::array();
  for (const auto& [t, m] : r.tuples) tuples.push_back({{"blocks", blocks(t)}, {"multiplicity", m.str()}});
  return dump({{"kind", "stuffle_result"}, {"tuples", tuples}});
}

std::string to_structured(const RationalCombination& comb) {
  json terms = json::array();
  for (const auto& [c, rep] : comb.terms) {
    json factors = json::array();
    for (const auto& [f, m] : rep.factors) factors.push_back({{"support", indices(f.support)}, {"multiplicity", m}});
    terms.push_back({{"coefficient", c.str()}, {"factors", factors}});
  }
  return dump({{"kind", "rational_combination"}, {"universe", indices(comb.universe)}, {"terms", terms}});
}

std::string to_structured(const IdentityReport& r) {
  json methods = json::array();
  for (Method m : r.methods_run) methods.push_back(to_string(m));
  json residual = r.numeric_residual ? json(*r.numeric_residual) : json(nullptr);
  return dump({{"kind", "identity_report"},
               {"verdict", r.identity ? "identity" : "not-identity"},
               {"witness", witness_json(r.witness)},
               {"methods_run", methods},
               {"agreement", r.agreement},
               {"numeric_residual", residual}});
}

Expression expression_from_structured(std::string_view text) {
  const json j = parse_kind(text, "expression");
  Expression e(index_set(j.at("universe")));
  for (const json& t : j.at("terms")) {
    std::vector<BlockTuple> atoms;
    for (const json& a : t.at("atoms")) atoms.push_back(block_tuple(a));
    e.add(validate_legal_term(atoms, e.universe()), integer(t.at("coefficient")));
  }
  return e;
}

CanonicalForm canonical_form_from_structured(std::string_view text) {
  const json j = parse_kind(text, "canonical_form");
  CanonicalForm cf(index_set(j.at("universe")));
  for (const json& c : j.at("coefficients")) {
    cf.add(OrderedPartition{block_tuple(c.at("partition"))}, integer(c.at("coefficient")));
  }
  return cf;
}

StuffleResult stuffle_result_from_structured(std::string_view text) {
  const json j = parse_kind(text, "stuffle_result");
  StuffleResult r;
  for (const json& t : j.at("tuples")) r.tuples[block_tuple(t.at("blocks"))] += integer(t.at("multiplicity"));
  return r;
}

RationalCombination rational_combination_from_structured(std::string_view text) {
  const json j = parse_kind(text, "rational_combination");
  RationalCombination comb{index_set(j.at("universe")), {}};
  for (const json& t : j.at("terms")) {
    RationalTermRep rep;
    for (const json& f : t.at("factors")) {
      rep.factors[DenomFactor{index_set(f.at("support"))}] += f.at("multiplicity").get<unsigned>();
    }
    comb.terms.emplace_back(integer(t.at("coefficient")), std::move(rep));
  }
  return comb;
}

IdentityReport identity_report_from_structured(std::string_view text) {
  const json j = parse_kind(text, "identity_report");
  IdentityReport r;
  r.identity = j.at("verdict").get<std::string>() == "identity";
  if (!j.at("witness").is_null()) {
    const json& w = j.at("witness");
    r.witness = Witness{OrderedPartition{block_tuple(w.at("partition"))}, integer(w.at("coefficient"))};
  }
  for (const json& m : j.at("methods_run")) r.methods_run.push_back(method_from_string(m.get<std::string>()));
  r.agreement = j.at("agreement").get<bool>();
  if (!j.at("numeric_residual").is_null()) r.numeric_residual = j.at("numeric_residual").get<double>();
  return r;
}

}  // namespace partzeta
