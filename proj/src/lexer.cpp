#include "f2sym/lexer.hpp"

#include <array>
#include <cctype>
#include <limits>

#include "f2sym/error.hpp"

namespace f2sym {

namespace {

constexpr std::array<std::string_view, 13> kDottedOps = {
    "true", "false", "eq",  "ne", "lt",  "le",  "gt",
    "ge",   "and",   "or",  "not", "eqv", "neqv",
};

// One significant character of a statement after blank removal. A whole
// string literal collapses into a single unit that refers to `strings`.
struct Unit {
  char c;
  int col;
  int string_index = -1;
};

struct StringLiteral {
  std::string spelling;
  std::string value;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_letter(char c) { return c >= 'a' && c <= 'z'; }
bool is_name_char(char c) { return is_letter(c) || is_digit(c) || c == '_'; }

class Scanner {
 public:
  Scanner(std::string_view body, int line) : line_(line) { compact(body); }

  std::vector<Token> run() {
    statement(0);
    return std::move(tokens_);
  }

  // Used by lex_numeric: the whole input must be one numeric literal.
  Token single_number() {
    if (units_.empty() || !(is_digit(at(0)) || at(0) == '.')) {
      fail(0, "expected a numeric literal");
    }
    std::size_t pos = 0;
    Token t = number(pos);
    if (pos != units_.size()) fail(pos, "trailing characters after literal");
    return t;
  }

 private:
  void compact(std::string_view body) {
    for (std::size_t i = 0; i < body.size(); ++i) {
      char c = body[i];
      int col = static_cast<int>(i) + 1;
      if (c == ' ' || c == '\t' || c == '\r') continue;
      if (c == '\'') {
        StringLiteral lit{"'", ""};
        std::size_t j = i + 1;
        bool closed = false;
        while (j < body.size()) {
          if (body[j] == '\'') {
            if (j + 1 < body.size() && body[j + 1] == '\'') {
              lit.value.push_back('\'');
              lit.spelling += "''";
              j += 2;
              continue;
            }
            closed = true;
            break;
          }
          lit.value.push_back(body[j]);
          lit.spelling.push_back(body[j]);
          ++j;
        }
        if (!closed) throw LexError(line_, col, "unterminated string literal");
        lit.spelling.push_back('\'');
        units_.push_back({'\'', col, static_cast<int>(strings_.size())});
        strings_.push_back(std::move(lit));
        i = j;
        continue;
      }
      units_.push_back(
          {static_cast<char>(std::tolower(static_cast<unsigned char>(c))),
           col});
    }
  }

  char at(std::size_t pos) const {
    return pos < units_.size() ? units_[pos].c : '\0';
  }

  int col(std::size_t pos) const {
    if (pos < units_.size()) return units_[pos].col;
    return units_.empty() ? 1 : units_.back().col + 1;
  }

  [[noreturn]] void fail(std::size_t pos, const std::string& message) const {
    throw LexError(line_, col(pos), message);
  }

  bool starts_with(std::size_t pos, std::string_view word) const {
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (at(pos + k) != word[k] || (pos + k < units_.size() &&
                                     units_[pos + k].string_index >= 0)) {
        return false;
      }
    }
    return true;
  }

  std::size_t matching_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t p = open; p < units_.size(); ++p) {
      if (units_[p].string_index >= 0) continue;
      if (units_[p].c == '(') ++depth;
      if (units_[p].c == ')' && --depth == 0) return p;
    }
    return std::string_view::npos;
  }

  // Position of the first '=' at parenthesis depth zero, if any.
  std::size_t top_level(std::size_t from, char wanted) const {
    int depth = 0;
    for (std::size_t p = from; p < units_.size(); ++p) {
      if (units_[p].string_index >= 0) continue;
      char c = units_[p].c;
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && c == wanted) return p;
    }
    return std::string_view::npos;
  }

  bool is_assignment(std::size_t pos) const {
    std::size_t eq = top_level(pos, '=');
    if (eq == std::string_view::npos) return false;
    if (starts_with(pos, "if(")) {
      std::size_t close = matching_paren(pos + 2);
      return close != std::string_view::npos && close + 1 == eq;
    }
    if (starts_with(pos, "do") && top_level(eq, ',') != std::string_view::npos) {
      return false;
    }
    return true;
  }

  void push(TokenKind kind, std::string text, std::size_t pos) {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.col = col(pos);
    tokens_.push_back(std::move(t));
  }

  void keyword(std::string_view word, std::size_t& pos) {
    push(TokenKind::Keyword, std::string(word), pos);
    pos += word.size();
  }

  void plain_digits(std::size_t& pos) {
    std::size_t start = pos;
    std::string digits;
    while (is_digit(at(pos))) digits.push_back(at(pos++));
    if (!digits.empty()) push(TokenKind::IntLit, digits, start);
  }

  // `if(...)` followed by `then` or by a nested statement.
  void conditional_tail(std::size_t pos) {
    if (at(pos) != '(') fail(pos, "expected '(' after if");
    std::size_t close = matching_paren(pos);
    if (close == std::string_view::npos) fail(pos, "unbalanced parentheses");
    expression(pos, close + 1);
    pos = close + 1;
    if (pos == units_.size()) return;
    if (starts_with(pos, "then") && pos + 4 == units_.size()) {
      keyword("then", pos);
      return;
    }
    statement(pos);
  }

  bool function_header_follows(std::size_t pos) const {
    if (!starts_with(pos, "function")) return false;
    std::size_t p = pos + 8;
    if (!is_letter(at(p))) return false;
    while (is_name_char(at(p))) ++p;
    if (p == units_.size()) return true;
    if (at(p) != '(') return false;
    return matching_paren(p) == units_.size() - 1;
  }

  void type_statement(std::size_t pos) {
    if (at(pos) == '*') {
      push(TokenKind::Punct, "*", pos);
      ++pos;
      plain_digits(pos);
    }
    if (function_header_follows(pos)) keyword("function", pos);
    expression(pos, units_.size());
  }

  void statement(std::size_t pos) {
    if (pos >= units_.size()) return;
    if (is_assignment(pos)) {
      expression(pos, units_.size());
      return;
    }
    if (starts_with(pos, "if(")) {
      keyword("if", pos);
      conditional_tail(pos);
      return;
    }
    if (starts_with(pos, "elseif(")) {
      keyword("elseif", pos);
      conditional_tail(pos);
      return;
    }
    if (starts_with(pos, "doubleprecision")) {
      keyword("double", pos);
      keyword("precision", pos);
      type_statement(pos);
      return;
    }
    for (std::string_view type : {"integer", "real", "complex", "logical"}) {
      if (starts_with(pos, type)) {
        keyword(type, pos);
        type_statement(pos);
        return;
      }
    }
    if (starts_with(pos, "do") && is_digit(at(pos + 2))) {
      keyword("do", pos);
      plain_digits(pos);
      expression(pos, units_.size());
      return;
    }
    for (std::string_view word :
         {"subroutine", "function", "common", "dimension", "data", "call",
          "print", "goto", "continue", "return", "endif", "else", "end"}) {
      if (starts_with(pos, word)) {
        keyword(word, pos);
        expression(pos, units_.size());
        return;
      }
    }
    expression(pos, units_.size());
  }

  std::optional<std::string_view> dotted_at(std::size_t pos) const {
    if (at(pos) != '.') return std::nullopt;
    for (std::string_view op : kDottedOps) {
      if (starts_with(pos + 1, op) && at(pos + 1 + op.size()) == '.') {
        return op;
      }
    }
    return std::nullopt;
  }

  Token number(std::size_t& pos) {
    std::size_t start = pos;
    RealParts parts;
    bool is_real = false;
    while (is_digit(at(pos))) parts.int_digits.push_back(at(pos++));
    if (at(pos) == '.' && !dotted_at(pos)) {
      is_real = true;
      ++pos;
      while (is_digit(at(pos))) parts.frac_digits.push_back(at(pos++));
    }
    if (parts.int_digits.empty() && parts.frac_digits.empty()) {
      fail(start, "malformed numeric literal");
    }
    std::string spelling = parts.int_digits;
    if (is_real) spelling += "." + parts.frac_digits;
    if (at(pos) == 'e' || at(pos) == 'd') {
      char letter = at(pos);
      std::size_t p = pos + 1;
      bool negative = false;
      if (at(p) == '+' || at(p) == '-') negative = at(p++) == '-';
      if (!is_digit(at(p))) {
        fail(pos, std::string("exponent letter '") + letter +
                      "' is not followed by digits");
      }
      long value = 0;
      std::string digits;
      while (is_digit(at(p))) {
        if (value > (std::numeric_limits<int>::max() - 9) / 10) {
          fail(pos, "exponent out of range");
        }
        value = value * 10 + (at(p) - '0');
        digits.push_back(at(p++));
      }
      parts.exp_letter = letter;
      parts.exp_value = negative ? -value : value;
      spelling += std::string(1, letter) + (negative ? "-" : "") + digits;
      pos = p;
      is_real = true;
    }
    Token t;
    t.col = col(start);
    t.text = spelling;
    if (is_real) {
      t.kind = TokenKind::RealLit;
      t.real = std::move(parts);
    } else {
      t.kind = TokenKind::IntLit;
    }
    return t;
  }

  void expression(std::size_t pos, std::size_t end) {
    while (pos < end) {
      const Unit& u = units_[pos];
      char c = u.c;
      if (u.string_index >= 0) {
        const StringLiteral& lit = strings_[u.string_index];
        push(TokenKind::StringLit, lit.spelling, pos);
        tokens_.back().string_value = lit.value;
        ++pos;
      } else if (is_letter(c)) {
        std::size_t start = pos;
        std::string name;
        while (pos < end && is_name_char(at(pos))) name.push_back(at(pos++));
        push(TokenKind::Ident, name, start);
      } else if (is_digit(c) || (c == '.' && !dotted_at(pos) &&
                                 is_digit(at(pos + 1)))) {
        tokens_.push_back(number(pos));
      } else if (auto op = dotted_at(pos)) {
        push(TokenKind::DottedOp, "." + std::string(*op) + ".", pos);
        pos += op->size() + 2;
      } else if (c == '*') {
        if (at(pos + 1) == '*') {
          push(TokenKind::Punct, "**", pos);
          pos += 2;
        } else {
          push(TokenKind::Punct, "*", pos);
          ++pos;
        }
      } else if (std::string_view("=,()+-/:").find(c) != std::string_view::npos) {
        push(TokenKind::Punct, std::string(1, c), pos);
        ++pos;
      } else {
        fail(pos, std::string("unexpected character '") + c + "'");
      }
    }
  }

  int line_;
  std::vector<Unit> units_;
  std::vector<StringLiteral> strings_;
  std::vector<Token> tokens_;
};

}  // namespace

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Ident: return "identifier";
    case TokenKind::IntLit: return "integer literal";
    case TokenKind::RealLit: return "real literal";
    case TokenKind::StringLit: return "string literal";
    case TokenKind::DottedOp: return "dotted operator";
    case TokenKind::Punct: return "punctuation";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view body, int line) {
  return Scanner(body, line).run();
}

Token lex_numeric(std::string_view chars, int line) {
  return Scanner(chars, line).single_number();
}

RealParts lex_real(std::string_view chars, int line) {
  Token t = lex_numeric(chars, line);
  if (t.kind != TokenKind::RealLit) {
    throw LexError(line, t.col, "'" + t.text + "' is an integer literal");
  }
  return *t.real;
}

bool is_dotted_operator(std::string_view spelling) {
  if (spelling.size() < 3 || spelling.front() != '.' || spelling.back() != '.') {
    return false;
  }
  std::string_view inner = spelling.substr(1, spelling.size() - 2);
  for (std::string_view op : kDottedOps) {
    if (op == inner) return true;
  }
  return false;
}

}  // namespace f2sym
