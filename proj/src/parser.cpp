#include "f2sym/parser.hpp"

#include <array>
#include <string_view>

#include "f2sym/error.hpp"

namespace f2sym {

using namespace ast;

namespace {

constexpr std::array<std::string_view, 16> kUnsupportedStatements = {
    "read",     "write",    "format",  "open",      "close",   "equivalence",
    "implicit", "entry",    "save",    "external",  "intrinsic", "parameter",
    "character", "program", "stop",    "pause",
};

bool is_type_keyword(const Token& t) {
  return t.kind == TokenKind::Keyword &&
         (t.text == "integer" || t.text == "real" || t.text == "complex" ||
          t.text == "logical" || t.text == "double");
}

// Token cursor over one logical statement.
class Cursor {
 public:
  Cursor(std::span<const Token> tokens, int line)
      : tokens_(tokens), line_(line) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }
  const Token& next() {
    if (done()) fail("more input");
    return tokens_[pos_++];
  }
  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }
  int line() const { return line_; }
  std::span<const Token> rest() const { return tokens_.subspan(pos_); }

  bool at(TokenKind kind, std::string_view text) const {
    const Token* t = peek();
    return t && t->is(kind, text);
  }
  bool at_punct(std::string_view p) const { return at(TokenKind::Punct, p); }
  bool at_keyword(std::string_view k) const { return at(TokenKind::Keyword, k); }
  bool at_dotted(std::string_view d) const { return at(TokenKind::DottedOp, d); }

  bool accept_punct(std::string_view p) {
    if (!at_punct(p)) return false;
    ++pos_;
    return true;
  }
  void expect_punct(std::string_view p) {
    if (!accept_punct(p)) fail("'" + std::string(p) + "'");
  }
  void expect_keyword(std::string_view k) {
    if (!at_keyword(k)) fail("'" + std::string(k) + "'");
    ++pos_;
  }
  std::string expect_ident() {
    const Token* t = peek();
    if (!t || t->kind != TokenKind::Ident) fail("identifier");
    ++pos_;
    return t->text;
  }
  void expect_end() {
    if (!done()) fail("end of statement");
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(line_, expected, found());
  }

 private:
  std::string found() const {
    if (done()) return "end of statement";
    return "'" + tokens_[pos_].text + "'";
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
};

// Precedence climbing, loosest first:
//   .or.  .and.  .eqv./.neqv.  .not.  relational  +,- (with leading sign)
//   *,/  ** (right associative)  primary
class ExprParser {
 public:
  explicit ExprParser(Cursor& c) : c_(c) {}

  ExprPtr expression() { return disjunction(); }

 private:
  ExprPtr disjunction() {
    ExprPtr lhs = conjunction();
    while (c_.at_dotted(".or.")) {
      c_.next();
      lhs = make(Binary{BinaryOp::Or, lhs, conjunction()});
    }
    return lhs;
  }

  ExprPtr conjunction() {
    ExprPtr lhs = equivalence();
    while (c_.at_dotted(".and.")) {
      c_.next();
      lhs = make(Binary{BinaryOp::And, lhs, equivalence()});
    }
    return lhs;
  }

  ExprPtr equivalence() {
    ExprPtr lhs = negation();
    while (c_.at_dotted(".eqv.") || c_.at_dotted(".neqv.")) {
      BinaryOp op = c_.next().text == ".eqv." ? BinaryOp::Eqv : BinaryOp::Neqv;
      lhs = make(Binary{op, lhs, negation()});
    }
    return lhs;
  }

  ExprPtr negation() {
    if (c_.at_dotted(".not.")) {
      c_.next();
      return make(Unary{UnaryOp::Not, negation()});
    }
    return relation();
  }

  ExprPtr relation() {
    ExprPtr lhs = additive();
    static constexpr std::pair<std::string_view, BinaryOp> kRelops[] = {
        {".eq.", BinaryOp::Eq}, {".ne.", BinaryOp::Ne}, {".lt.", BinaryOp::Lt},
        {".le.", BinaryOp::Le}, {".gt.", BinaryOp::Gt}, {".ge.", BinaryOp::Ge},
    };
    for (auto [spelling, op] : kRelops) {
      if (c_.at_dotted(spelling)) {
        c_.next();
        return make(Binary{op, lhs, additive()});
      }
    }
    return lhs;
  }

  ExprPtr additive() {
    ExprPtr lhs;
    if (c_.at_punct("-") || c_.at_punct("+")) {
      UnaryOp op = c_.next().text == "-" ? UnaryOp::Neg : UnaryOp::Plus;
      lhs = make(Unary{op, multiplicative()});
    } else {
      lhs = multiplicative();
    }
    while (c_.at_punct("+") || c_.at_punct("-")) {
      BinaryOp op = c_.next().text == "+" ? BinaryOp::Add : BinaryOp::Sub;
      lhs = make(Binary{op, lhs, multiplicative()});
    }
    return lhs;
  }

  ExprPtr multiplicative() {
    ExprPtr lhs = power();
    while (c_.at_punct("*") || c_.at_punct("/")) {
      BinaryOp op = c_.next().text == "*" ? BinaryOp::Mul : BinaryOp::Div;
      lhs = make(Binary{op, lhs, power()});
    }
    return lhs;
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!c_.accept_punct("**")) return base;
    ExprPtr exponent;
    if (c_.at_punct("-") || c_.at_punct("+")) {
      UnaryOp op = c_.next().text == "-" ? UnaryOp::Neg : UnaryOp::Plus;
      exponent = make(Unary{op, power()});
    } else {
      exponent = power();
    }
    return make(Binary{BinaryOp::Pow, base, exponent});
  }

  // Optionally signed integer or real literal, for complex constants.
  ExprPtr signed_number() {
    std::size_t mark = c_.position();
    std::optional<UnaryOp> sign;
    if (c_.at_punct("-") || c_.at_punct("+")) {
      sign = c_.next().text == "-" ? UnaryOp::Neg : UnaryOp::Plus;
    }
    const Token* t = c_.peek();
    if (!t || (t->kind != TokenKind::IntLit && t->kind != TokenKind::RealLit)) {
      c_.rewind(mark);
      return nullptr;
    }
    c_.next();
    ExprPtr lit = t->kind == TokenKind::IntLit ? make(IntLit{t->text})
                                               : make(RealLit{*t->real});
    return sign ? make(Unary{*sign, lit}) : lit;
  }

  std::optional<ExprPtr> complex_constant() {
    std::size_t mark = c_.position();
    ExprPtr re = signed_number();
    if (re && c_.accept_punct(",")) {
      ExprPtr im = signed_number();
      if (im && c_.accept_punct(")")) return make(ComplexLit{re, im});
    }
    c_.rewind(mark);
    return std::nullopt;
  }

  ExprPtr primary() {
    const Token* t = c_.peek();
    if (!t) c_.fail("operand");
    switch (t->kind) {
      case TokenKind::IntLit:
        c_.next();
        return make(IntLit{t->text});
      case TokenKind::RealLit:
        c_.next();
        return make(RealLit{*t->real});
      case TokenKind::StringLit:
        c_.next();
        return make(StringLit{t->string_value});
      case TokenKind::DottedOp:
        if (t->text == ".true." || t->text == ".false.") {
          c_.next();
          return make(LogicalLit{t->text == ".true."});
        }
        break;
      case TokenKind::Ident: {
        c_.next();
        if (!c_.accept_punct("(")) return make(NameRef{t->text});
        std::vector<ExprPtr> args;
        if (!c_.accept_punct(")")) {
          do {
            args.push_back(expression());
          } while (c_.accept_punct(","));
          c_.expect_punct(")");
        }
        return make(ParenRef{t->text, std::move(args)});
      }
      case TokenKind::Punct:
        if (t->text == "(") {
          c_.next();
          if (auto complex = complex_constant()) return *complex;
          ExprPtr inner = expression();
          c_.expect_punct(")");
          return make(Paren{inner});
        }
        break;
      default:
        break;
    }
    c_.fail("operand");
  }

  Cursor& c_;
};

ExprPtr expression(Cursor& c) { return ExprParser(c).expression(); }

std::vector<ExprPtr> expression_list(Cursor& c) {
  std::vector<ExprPtr> out;
  do {
    out.push_back(expression(c));
  } while (c.accept_punct(","));
  return out;
}

std::vector<std::pair<ExprPtr, ExprPtr>> bounds_list(Cursor& c) {
  std::vector<std::pair<ExprPtr, ExprPtr>> bounds;
  do {
    ExprPtr first = expression(c);
    if (c.accept_punct(":")) {
      bounds.emplace_back(first, expression(c));
    } else {
      bounds.emplace_back(make(IntLit{"1"}), first);
    }
  } while (c.accept_punct(","));
  return bounds;
}

std::vector<Entity> entity_list(Cursor& c) {
  std::vector<Entity> out;
  do {
    Entity e;
    e.line = c.line();
    e.name = c.expect_ident();
    if (c.accept_punct("(")) {
      e.bounds = bounds_list(c);
      c.expect_punct(")");
    }
    out.push_back(std::move(e));
  } while (c.accept_punct(","));
  return out;
}

std::vector<std::string> param_list(Cursor& c) {
  std::vector<std::string> params;
  if (!c.accept_punct("(")) return params;
  if (c.accept_punct(")")) return params;
  do {
    params.push_back(c.expect_ident());
  } while (c.accept_punct(","));
  c.expect_punct(")");
  return params;
}

// Type keywords plus an optional `*width`, which is consumed and ignored.
std::string type_name(Cursor& c) {
  std::string name = c.next().text;
  if (name == "double") {
    c.expect_keyword("precision");
    name = "double precision";
  }
  if (c.accept_punct("*")) {
    const Token* width = c.peek();
    if (!width || width->kind != TokenKind::IntLit) c.fail("type width");
    c.next();
  }
  return name;
}

ExprPtr data_value(Cursor& c) {
  std::optional<UnaryOp> sign;
  if (c.at_punct("-") || c.at_punct("+")) {
    sign = c.next().text == "-" ? UnaryOp::Neg : UnaryOp::Plus;
  }
  const Token* t = c.peek();
  if (!t) c.fail("data constant");
  ExprPtr value;
  if (t->kind == TokenKind::IntLit) {
    value = make(IntLit{t->text});
  } else if (t->kind == TokenKind::RealLit) {
    value = make(RealLit{*t->real});
  } else if (!sign && t->kind == TokenKind::StringLit) {
    value = make(StringLit{t->string_value});
  } else if (!sign && (t->text == ".true." || t->text == ".false.")) {
    value = make(LogicalLit{t->text == ".true."});
  } else if (!sign && t->is(TokenKind::Punct, "(")) {
    c.next();
    ExprPtr re = data_value(c);
    c.expect_punct(",");
    ExprPtr im = data_value(c);
    if (!c.at_punct(")")) c.fail("')'");
    value = make(ComplexLit{re, im});
  } else {
    c.fail("data constant");
  }
  c.next();
  return sign ? make(Unary{*sign, value}) : value;
}

std::vector<Decl> data_statement(Cursor& c) {
  std::vector<Decl> out;
  c.expect_keyword("data");
  do {
    DataDecl d;
    d.name = c.expect_ident();
    if (c.at_punct(",")) {
      throw UnsupportedError(c.line(),
                             "data statements with several names per value "
                             "list are not supported");
    }
    c.expect_punct("/");
    do {
      // `r*c` repeats constant c r times.
      const Token* count = c.peek();
      const Token* star = c.peek(1);
      if (count && count->kind == TokenKind::IntLit && star &&
          star->is(TokenKind::Punct, "*")) {
        c.next();
        c.next();
        ExprPtr value = data_value(c);
        long n = std::stol(count->text);
        if (n <= 0) c.fail("positive repeat count");
        for (long i = 0; i < n; ++i) d.values.push_back(value);
      } else {
        d.values.push_back(data_value(c));
      }
    } while (c.accept_punct(","));
    c.expect_punct("/");
    out.push_back({c.line(), std::move(d)});
  } while (c.accept_punct(",") || (!c.done() && c.peek()->kind == TokenKind::Ident));
  c.expect_end();
  return out;
}

Decl common_statement(Cursor& c) {
  c.expect_keyword("common");
  CommonDecl d;
  if (c.accept_punct("/")) {
    if (!c.at_punct("/")) d.block_name = c.expect_ident();
    c.expect_punct("/");
  }
  d.entities = entity_list(c);
  c.expect_end();
  return {c.line(), std::move(d)};
}

bool is_declaration(const std::vector<Token>& tokens) {
  if (tokens.empty()) return false;
  const Token& first = tokens.front();
  if (first.kind != TokenKind::Keyword) return false;
  if (first.text == "common" || first.text == "data" || first.text == "dimension") {
    return true;
  }
  if (!is_type_keyword(first)) return false;
  for (const Token& t : tokens) {
    if (t.is(TokenKind::Keyword, "function")) return false;
  }
  return true;
}

bool is_unit_header(const std::vector<Token>& tokens) {
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::Keyword) return false;
    if (t.text == "subroutine" || t.text == "function") return true;
    if (!is_type_keyword(t) && t.text != "precision") return false;
  }
  return false;
}

class ProgramParser {
 public:
  std::vector<Unit> run(std::span<const LogicalStatement> stmts) {
    for (const LogicalStatement& ls : stmts) {
      if (ls.is_comment()) {
        comment(ls);
        continue;
      }
      std::vector<Token> tokens = tokenize(ls.body, ls.first_line);
      if (tokens.empty()) throw ParseError(ls.first_line, "statement", "label only");
      statement(ls, tokens);
    }
    if (unit_) {
      throw ParseError(unit_->line, "'end' closing the program unit",
                       "end of file");
    }
    if (!pending_comments_.empty()) {
      if (units_.empty()) {
        Unit main;
        main.leading_comments = std::move(pending_comments_);
        units_.push_back(std::move(main));
      } else {
        auto& trailing = units_.back().trailing_comments;
        trailing.insert(trailing.end(), pending_comments_.begin(),
                        pending_comments_.end());
      }
    }
    return std::move(units_);
  }

 private:
  struct Frame {
    BlockIf node;
    bool in_else = false;
    int line = 0;
    std::optional<int> label;
    StmtList& body() {
      return in_else ? *node.else_body : node.arms.back().body;
    }
  };

  void comment(const LogicalStatement& ls) {
    if (!unit_) {
      pending_comments_.push_back({ls.body});
    } else if (!in_body_ && frames_.empty()) {
      unit_->decls.push_back({ls.first_line, Comment{ls.body}});
    } else {
      current().push_back({std::nullopt, ls.first_line, Comment{ls.body}});
    }
  }

  StmtList& current() {
    return frames_.empty() ? unit_->stmts : frames_.back().body();
  }

  void open_unit(int line) {
    unit_ = Unit{};
    unit_->line = line;
    unit_->leading_comments = std::move(pending_comments_);
    pending_comments_.clear();
    in_body_ = false;
  }

  void header(const LogicalStatement& ls, const std::vector<Token>& tokens) {
    open_unit(ls.first_line);
    Cursor c(tokens, ls.first_line);
    if (c.at_keyword("subroutine")) {
      c.next();
      unit_->kind = UnitKind::Subroutine;
    } else {
      if (!c.at_keyword("function")) unit_->result_type = type_name(c);
      c.expect_keyword("function");
      unit_->kind = UnitKind::Function;
    }
    unit_->name = c.expect_ident();
    unit_->params = param_list(c);
    if (unit_->kind == UnitKind::Function && !c.done()) c.fail("end of statement");
    c.expect_end();
  }

  void close_unit(const LogicalStatement& ls, const std::vector<Token>& tokens) {
    Cursor c(tokens, ls.first_line);
    c.expect_keyword("end");
    c.expect_end();
    if (!frames_.empty()) {
      throw ParseError(ls.first_line, "'endif' for the if block opened on line " +
                                          std::to_string(frames_.back().line),
                       "'end'");
    }
    units_.push_back(std::move(*unit_));
    unit_.reset();
  }

  void declaration(const LogicalStatement& ls, const std::vector<Token>& tokens) {
    if (in_body_ || !frames_.empty()) {
      throw ParseError(ls.first_line, "executable statement",
                       "declaration '" + tokens.front().text +
                           "' after executable statements");
    }
    Cursor c(tokens, ls.first_line);
    const std::string& kw = tokens.front().text;
    if (kw == "common") {
      unit_->decls.push_back(common_statement(c));
    } else if (kw == "data") {
      for (Decl& d : data_statement(c)) unit_->decls.push_back(std::move(d));
    } else if (kw == "dimension") {
      c.next();
      DimensionDecl d{entity_list(c)};
      c.expect_end();
      for (const Entity& e : d.entities) {
        if (!e.bounds) c.fail("array bounds for '" + e.name + "'");
      }
      unit_->decls.push_back({ls.first_line, std::move(d)});
    } else {
      TypeDecl d;
      d.type_name = type_name(c);
      d.entities = entity_list(c);
      c.expect_end();
      unit_->decls.push_back({ls.first_line, std::move(d)});
    }
  }

  void statement(const LogicalStatement& ls, const std::vector<Token>& tokens) {
    if (!unit_) {
      if (is_unit_header(tokens)) {
        header(ls, tokens);
        return;
      }
      open_unit(ls.first_line);
    }
    if (tokens.front().is(TokenKind::Keyword, "end")) {
      close_unit(ls, tokens);
      return;
    }
    if (is_unit_header(tokens)) {
      throw ParseError(ls.first_line, "'end' before the next program unit",
                       "'" + tokens.front().text + "'");
    }
    if (is_declaration(tokens)) {
      declaration(ls, tokens);
      return;
    }
    in_body_ = true;
    block_structure(ls, tokens);
  }

  void block_structure(const LogicalStatement& ls, const std::vector<Token>& tokens) {
    const Token& first = tokens.front();
    int line = ls.first_line;
    if (first.is(TokenKind::Keyword, "if") &&
        tokens.back().is(TokenKind::Keyword, "then")) {
      Cursor c{std::span<const Token>(tokens).first(tokens.size() - 1), line};
      c.next();
      ExprPtr cond = condition(c);
      c.expect_end();
      Frame f;
      f.node.arms.push_back({cond, {}});
      f.line = line;
      f.label = ls.label;
      frames_.push_back(std::move(f));
      return;
    }
    if (first.is(TokenKind::Keyword, "elseif")) {
      if (frames_.empty() || frames_.back().in_else) {
        throw ParseError(line, "statement", "'else if' outside an if block");
      }
      if (!tokens.back().is(TokenKind::Keyword, "then")) {
        throw ParseError(line, "'then'", "'" + tokens.back().text + "'");
      }
      Cursor c{std::span<const Token>(tokens).first(tokens.size() - 1), line};
      c.next();
      ExprPtr cond = condition(c);
      c.expect_end();
      frames_.back().node.arms.push_back({cond, {}});
      return;
    }
    if (first.is(TokenKind::Keyword, "else")) {
      Cursor c(tokens, line);
      c.next();
      c.expect_end();
      if (frames_.empty() || frames_.back().in_else) {
        throw ParseError(line, "statement", "'else' outside an if block");
      }
      frames_.back().in_else = true;
      frames_.back().node.else_body.emplace();
      return;
    }
    if (first.is(TokenKind::Keyword, "endif")) {
      Cursor c(tokens, line);
      c.next();
      c.expect_end();
      if (frames_.empty()) {
        throw ParseError(line, "statement", "'endif' outside an if block");
      }
      Frame f = std::move(frames_.back());
      frames_.pop_back();
      current().push_back({f.label, f.line, std::move(f.node)});
      return;
    }
    Stmt s = simple_statement(tokens, line);
    s.label = ls.label;
    current().push_back(std::move(s));
  }

  static ExprPtr condition(Cursor& c) {
    c.expect_punct("(");
    ExprPtr cond = expression(c);
    c.expect_punct(")");
    return cond;
  }

  static Stmt simple_statement(std::span<const Token> tokens, int line) {
    Cursor c(tokens, line);
    const Token& first = tokens.front();
    Stmt s;
    s.line = line;
    if (first.kind == TokenKind::Keyword) {
      const std::string& kw = first.text;
      if (kw == "goto") {
        throw UnsupportedError(line, "goto statements are not supported");
      }
      if (kw == "do") {
        s.node = parse_do(tokens, line);
        return s;
      }
      c.next();
      if (kw == "if") {
        ExprPtr cond = condition(c);
        if (c.done()) c.fail("statement after logical if");
        const Token& inner = *c.peek();
        if (inner.kind == TokenKind::Keyword &&
            (inner.text == "if" || inner.text == "do")) {
          c.fail("simple statement after logical if");
        }
        Stmt body = simple_statement(c.rest(), line);
        s.node = LogicalIf{cond, std::make_shared<const Stmt>(std::move(body))};
        return s;
      }
      if (kw == "call") {
        Call call;
        call.name = c.expect_ident();
        if (c.accept_punct("(")) {
          if (!c.accept_punct(")")) {
            call.args = expression_list(c);
            c.expect_punct(")");
          }
        }
        c.expect_end();
        s.node = std::move(call);
        return s;
      }
      if (kw == "print") {
        c.expect_punct("*");
        Print p;
        if (c.accept_punct(",")) p.items = expression_list(c);
        c.expect_end();
        s.node = std::move(p);
        return s;
      }
      if (kw == "return") {
        c.expect_end();
        s.node = Return{};
        return s;
      }
      if (kw == "continue") {
        c.expect_end();
        s.node = Continue{};
        return s;
      }
      throw ParseError(line, "executable statement", "'" + kw + "'");
    }
    if (first.kind != TokenKind::Ident) c.fail("statement");
    try {
      ExprPtr lhs = ExprParser(c).expression();
      bool target = std::holds_alternative<NameRef>(lhs->node) ||
                    std::holds_alternative<ParenRef>(lhs->node);
      if (!target) c.fail("assignment target");
      c.expect_punct("=");
      ExprPtr rhs = expression(c);
      c.expect_end();
      s.node = Assign{lhs, rhs};
      return s;
    } catch (const ParseError&) {
      for (std::string_view word : kUnsupportedStatements) {
        if (first.text == word) {
          throw UnsupportedError(line, "'" + first.text +
                                           "' statements are not supported");
        }
      }
      throw;
    }
  }

  std::vector<Unit> units_;
  std::optional<Unit> unit_;
  std::vector<Comment> pending_comments_;
  std::vector<Frame> frames_;
  bool in_body_ = false;
};

}  // namespace

bool ast::is_relational(BinaryOp op) {
  switch (op) {
    case BinaryOp::Eq: case BinaryOp::Ne: case BinaryOp::Lt:
    case BinaryOp::Le: case BinaryOp::Gt: case BinaryOp::Ge:
      return true;
    default:
      return false;
  }
}

const char* ast::fortran_spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Pow: return "**";
    case BinaryOp::Eq: return ".eq.";
    case BinaryOp::Ne: return ".ne.";
    case BinaryOp::Lt: return ".lt.";
    case BinaryOp::Le: return ".le.";
    case BinaryOp::Gt: return ".gt.";
    case BinaryOp::Ge: return ".ge.";
    case BinaryOp::And: return ".and.";
    case BinaryOp::Or: return ".or.";
    case BinaryOp::Eqv: return ".eqv.";
    case BinaryOp::Neqv: return ".neqv.";
  }
  return "?";
}

std::vector<Unit> parse_program(std::span<const LogicalStatement> stmts) {
  return ProgramParser().run(stmts);
}

ExprPtr parse_expr(std::span<const Token> tokens, int line) {
  Cursor c(tokens, line);
  ExprPtr e = expression(c);
  c.expect_end();
  return e;
}

DoHeader parse_do(std::span<const Token> tokens, int line) {
  Cursor c(tokens, line);
  c.expect_keyword("do");
  const Token* label = c.peek();
  if (!label || label->kind != TokenKind::IntLit) c.fail("terminal label");
  c.next();
  DoHeader h;
  h.terminal_label = std::stoi(label->text);
  c.accept_punct(",");
  h.var = c.expect_ident();
  c.expect_punct("=");
  h.from = expression(c);
  c.expect_punct(",");
  h.to = expression(c);
  if (c.accept_punct(",")) h.step = expression(c);
  c.expect_end();
  return h;
}

}  // namespace f2sym
