#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyaut/polynomial.hpp"

namespace polyaut {

// Text grammar (see docs/grammar.md for the EBNF):
//
//   sum     = product { ("+" | "-") product }
//   product = factor { "*" factor }
//   factor  = ("+" | "-") factor | power
//   power   = primary [ "^" integer ]
//   primary = integer [ "/" integer ] | identifier | "(" sum ")"
//
// Products need an explicit "*"; "2x" and "x y" are rejected.

/// Throws ParseError (with byte offset) on malformed text or unknown names.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx);

/// Terms in lexdeg order over the context order (total degree, then lex with
/// the first context variable highest). Round-trips through parse_polynomial.
std::string format_polynomial(const Polynomial& p);

std::string format_rational(const Rational& r);
Rational parse_rational(std::string_view text);

/// Assignments "v -> expr" separated by ';' or newlines, one per variable of
/// `source`, with expressions over `target`. Images are returned in source
/// order. Throws ParseError on syntax errors and duplicates,
/// PreconditionError naming the first unassigned variable.
std::vector<Polynomial> parse_assignments(std::string_view text, const ContextPtr& source,
                                          const ContextPtr& target);

PolyMap parse_map(std::string_view text, const ContextPtr& source, const ContextPtr& target);
inline PolyMap parse_map(std::string_view text, const ContextPtr& ctx) { return parse_map(text, ctx, ctx); }

/// "x -> x + 1; y -> y"
std::string format_assignments(const VariableContext& source, std::span<const Polynomial> images);
inline std::string format_map(const PolyMap& m) { return format_assignments(*m.source(), m.images()); }

}  // namespace polyaut
