#pragma once

// Text and structured (JSON) renderings of library values.
//
// Text uses the expression grammar of parser.hpp. The structured format is a
// JSON object with a "kind" field; field names are listed in README.md.
// Integers are encoded as decimal strings so arbitrary precision survives.

#include <string>
#include <string_view>

#include "partzeta/identities.hpp"
#include "partzeta/numeric.hpp"
#include "partzeta/rational.hpp"
#include "partzeta/stuffle.hpp"

namespace partzeta {

enum class Format { text, structured };

/// Throws on anything other than "text" or "structured".
Format format_from_string(std::string_view name);

std::string to_text(const Block& b);
std::string to_text(const BlockTuple& args);  // "zeta(s1,s2+s3)"
std::string to_text(const LegalTerm& term);
std::string to_text(const Expression& e);
std::string to_text(const CanonicalForm& cf);
std::string to_text(const StuffleResult& r);
std::string to_text(const RationalCombination& comb);
std::string to_text(const IdentityReport& r);

std::string to_structured(const Expression& e);
std::string to_structured(const CanonicalForm& cf);
std::string to_structured(const StuffleResult& r);
std::string to_structured(const RationalCombination& comb);
std::string to_structured(const IdentityReport& r);

template <typename T>
std::string serialize(const T& value, Format format) {
  return format == Format::text ? to_text(value) : to_structured(value);
}

Expression expression_from_structured(std::string_view json);
CanonicalForm canonical_form_from_structured(std::string_view json);
StuffleResult stuffle_result_from_structured(std::string_view json);
RationalCombination rational_combination_from_structured(std::string_view json);
IdentityReport identity_report_from_structured(std::string_view json);

/// Shortest decimal string that round-trips the double.
std::string format_double(double v);

}  // namespace partzeta
