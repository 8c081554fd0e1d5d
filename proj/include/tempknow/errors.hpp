#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tempknow {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Half-open character range into the original input text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct syntax_error : error {
  syntax_error(std::string message, SourceSpan where)
      : error(std::move(message)), span(where) {}
  SourceSpan span;
};

// Malformed model / witness files.
struct format_error : error {
  using error::error;
};

// A semantic precondition was violated (operator outside the supported
// fragment, nested KALL, substitution that is not a unifier, ...).
struct precondition_error : error {
  using error::error;
};

struct future_operator_error : precondition_error {
  using precondition_error::precondition_error;
};

struct kall_error : precondition_error {
  using precondition_error::precondition_error;
};

struct not_a_unifier_error : precondition_error {
  using precondition_error::precondition_error;
};

// Search exceeded a configured cap; the caller may raise the cap and retry.
struct resource_limit_error : error {
  using error::error;
};

}  // namespace tempknow
