#include "aisr/syntax.hpp"

#include <cctype>
#include <vector>

namespace aisr {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Identity identity(bool commutative) {
    Term lhs = term(commutative);
    skip_space();
    if (!accept("==") && !accept("≈")) fail("expected '==' or '≈'");
    Term rhs = term(commutative);
    finish();
    return Identity(std::move(lhs), std::move(rhs));
  }

  Term term(bool commutative) {
    WordSet words;
    words.insert(word());
    while (skip_space(), accept("+")) words.insert(word());
    return Term(std::move(words), commutative);
  }

  Word word() {
    std::vector<Variable> letters;
    factor(letters);
    while (skip_space(), accept("*")) factor(letters);
    return Word(std::move(letters));
  }

  void finish() {
    skip_space();
    if (pos_ < text_.size()) fail("unexpected trailing input");
  }

 private:
  void factor(std::vector<Variable>& letters) {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("expected a variable");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    Variable x{std::string(text_.substr(start, pos_ - start))};

    std::size_t power = 1;
    skip_space();
    if (accept("^")) {
      skip_space();
      const std::size_t digits = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a positive integer exponent");
      power = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        power = power * 10 + static_cast<std::size_t>(text_[pos_] - '0');
        if (power > kMaxExponent) fail_at(digits, "exponent exceeds " + std::to_string(kMaxExponent));
        ++pos_;
      }
      if (power == 0) fail_at(digits, "exponent must be positive");
    }
    letters.insert(letters.end(), power, x);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      const auto c = static_cast<unsigned char>(text_[i]);
      if (c == '\n') {
        ++line;
        column = 1;
      } else if ((c & 0xC0) != 0x80) {  // count code points, not bytes
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Identity parse_identity(std::string_view text, bool commutative) {
  return Parser(text).identity(commutative);
}

Term parse_term(std::string_view text, bool commutative) {
  Parser p(text);
  Term t = p.term(commutative);
  p.finish();
  return t;
}

Word parse_word(std::string_view text) {
  Parser p(text);
  Word w = p.word();
  p.finish();
  return w;
}

}  // namespace aisr
