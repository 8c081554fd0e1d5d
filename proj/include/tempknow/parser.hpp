#pragma once

#include <string>
#include <string_view>

#include "tempknow/errors.hpp"
#include "tempknow/formula.hpp"

namespace tempknow {

struct ParseOptions {
  // When set, the surface operator `S` parses as strict since (`S!`).
  bool strict_since = false;
};

/// Parses the concrete formula syntax.
///
/// Precedence, loosest to tightest:
///   <->   ->  (both right-associative)
///   |
///   &
///   S  S!  U   (non-associative: chains require parentheses)
///   ~  X  K1  K2  K[param]  P  H  KALL   (prefix)
/// Atoms match [a-z][a-zA-Z0-9_]*; constants are `true` and `false`;
/// parentheses group. Throws syntax_error with a source span.
Formula parse_formula(std::string_view text, const ParseOptions& opts = {});

/// Parses "premise_1, ..., premise_n / conclusion".
Rule parse_rule(std::string_view text, const ParseOptions& opts = {});

/// Fully parenthesized text; parse_formula(pretty_print(f)) == f.
std::string pretty_print(const Formula& f);

}  // namespace tempknow
