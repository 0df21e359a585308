#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "aisr/terms.hpp"

namespace aisr {

/// Surface grammar (whitespace insignificant):
///
///   identity := term ("==" | "≈") term
///   term     := word ("+" word)*
///   word     := factor ("*" factor)*
///   factor   := variable ("^" positive-integer)?
///   variable := [A-Za-z][A-Za-z0-9_]*
///
/// "x^k" expands to k copies of x.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

inline constexpr std::size_t kMaxExponent = 4096;

Identity parse_identity(std::string_view text, bool commutative = false);
Term parse_term(std::string_view text, bool commutative = false);
Word parse_word(std::string_view text);

}  // namespace aisr
