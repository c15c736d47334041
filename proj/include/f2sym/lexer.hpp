#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace f2sym {

enum class TokenKind {
  Keyword,
  Ident,
  IntLit,
  RealLit,
  StringLit,
  DottedOp,
  Punct,
};

/// Digit strings of a real literal, blanks already removed. `exp_value` is
/// meaningful only when `exp_letter` is set.
struct RealParts {
  std::string int_digits;
  std::string frac_digits;
  std::optional<char> exp_letter;
  long exp_value = 0;

  bool operator==(const RealParts&) const = default;
};

struct Token {
  TokenKind kind = TokenKind::Punct;
  /// Canonical spelling: lowercase for names and keywords, the compact
  /// literal spelling for numbers, the quoted source spelling for strings.
  std::string text;
  int col = 0;
  std::optional<RealParts> real;
  /// Decoded contents of a string literal.
  std::string string_value;

  bool is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }
  bool operator==(const Token& other) const {
    return kind == other.kind && text == other.text && real == other.real &&
           string_value == other.string_value;
  }
};

const char* to_string(TokenKind kind);

/// Blank-insensitive tokenization of one statement body. Statement keywords
/// are recognized by position, so `integerx` and `integer x` lex alike while
/// `printx=1` is an assignment. `line` is used for diagnostics only.
std::vector<Token> tokenize(std::string_view body, int line = 0);

/// Lexes a complete numeric literal (blanks allowed between characters).
/// Returns an IntLit token when there is neither a decimal point nor an
/// exponent letter, otherwise a RealLit.
Token lex_numeric(std::string_view chars, int line = 0);

/// As lex_numeric, but the literal must be real.
RealParts lex_real(std::string_view chars, int line = 0);

/// True for the thirteen dotted operator spellings, given with their dots.
bool is_dotted_operator(std::string_view spelling);

}  // namespace f2sym
