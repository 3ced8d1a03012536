#pragma once

// Concrete syntax for legal expressions (whitespace-insensitive):
//
//   expr        := ['-'|'+'] signed_term { ('+'|'-') signed_term } | '0'
//   signed_term := [ integer '*' ] factor { '*' factor }
//   factor      := 'zeta' '(' arg { ',' arg } ')'
//   arg         := var { '+' var }
//   var         := 's' positive-integer
//
// Every term must use each variable of the universe exactly once, and all
// terms must share one universe. Errors are ParseError with a position.

#include <string_view>

#include "partzeta/stuffle.hpp"

namespace partzeta {

Expression parse_expression(std::string_view text);

/// `arg { ',' arg }`, optionally wrapped in parentheses; "" and "()" give
/// the empty tuple.
BlockTuple parse_arglist(std::string_view text);

/// Parses a sum of single-zeta terms into a canonical form; every term must
/// be a single atom.
CanonicalForm parse_canonical_form(std::string_view text);

}  // namespace partzeta
