#include "f2sym/emitter.hpp"

#include "f2sym/error.hpp"
#include "f2sym/intrinsics.hpp"

namespace f2sym {

namespace t = target;
using namespace ast;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string trim_zeros(const std::string& digits) {
  std::size_t first = digits.find_first_not_of('0');
  return first == std::string::npos ? "0" : digits.substr(first);
}

bool is_atomic(const t::ExprPtr& e) {
  return std::holds_alternative<t::Sym>(e->node) ||
         std::holds_alternative<t::ExactInt>(e->node) ||
         std::holds_alternative<t::Apply>(e->node) ||
         std::holds_alternative<t::ElementRef>(e->node) ||
         std::holds_alternative<t::ParenGroup>(e->node);
}

std::vector<t::ExprPtr> lower_list(const std::vector<ExprPtr>& xs) {
  std::vector<t::ExprPtr> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(lower_expr(x));
  return out;
}

// Sign of a literal DO step, or nullopt when it is not a literal.
std::optional<bool> literal_step_negative(const ExprPtr& step) {
  const Expr* e = step.get();
  bool negative = false;
  while (auto* u = std::get_if<Unary>(&e->node)) {
    if (u->op == UnaryOp::Not) return std::nullopt;
    if (u->op == UnaryOp::Neg) negative = !negative;
    e = u->operand.get();
  }
  if (std::holds_alternative<IntLit>(e->node) || std::holds_alternative<RealLit>(e->node)) {
    return negative;
  }
  return std::nullopt;
}

t::StmtList lower_list_stmts(const StmtList& list, std::string_view unit_name) {
  t::StmtList out;
  for (const Stmt& s : list) {
    for (t::Stmt& lowered : lower_stmt(s, unit_name)) out.push_back(std::move(lowered));
  }
  return out;
}

t::IfStmt lower_arms(const BlockIf& b, std::size_t arm, std::string_view unit_name) {
  t::IfStmt out;
  out.cond = lower_expr(b.arms[arm].cond);
  out.then_body = lower_list_stmts(b.arms[arm].body, unit_name);
  if (arm + 1 < b.arms.size()) {
    out.else_body = t::StmtList{t::Stmt{lower_arms(b, arm + 1, unit_name)}};
  } else if (b.else_body) {
    out.else_body = lower_list_stmts(*b.else_body, unit_name);
  }
  return out;
}

t::ExprPtr dims_of(const std::string& array) {
  return t::make(t::ElementRef{t::sym("F2MmaDimensions"), {t::sym(array)}});
}

// ---------------------------------------------------------------------------
// Rendering

constexpr int kAtom = 1000;
constexpr int kPower = 590;
constexpr int kPrefixMinus = 480;
constexpr int kTimes = 400;
constexpr int kPlus = 310;
constexpr int kRelational = 290;
constexpr int kNot = 230;
constexpr int kAnd = 215;
constexpr int kOr = 200;

int precedence(t::BinOpKind op) {
  switch (op) {
    case t::BinOpKind::Plus: case t::BinOpKind::Minus: return kPlus;
    case t::BinOpKind::Times: case t::BinOpKind::Divide: return kTimes;
    case t::BinOpKind::Power: return kPower;
    case t::BinOpKind::And: return kAnd;
    case t::BinOpKind::Or: return kOr;
    default: return kRelational;
  }
}

int precedence(const t::ExprPtr& e) {
  return std::visit(overloaded{
                        [](const t::BinOp& b) { return precedence(b.op); },
                        [](const t::UnOp& u) {
                          return u.op == t::UnOpKind::Minus ? kPrefixMinus : kNot;
                        },
                        [](const t::ExactInt& i) {
                          return !i.digits.empty() && i.digits[0] == '-' ? kPrefixMinus
                                                                          : kAtom;
                        },
                        [](const auto&) { return kAtom; },
                    },
                    e->node);
}

bool is_prefix_minus(const t::ExprPtr& e) {
  if (auto* u = std::get_if<t::UnOp>(&e->node)) return u->op == t::UnOpKind::Minus;
  if (auto* i = std::get_if<t::ExactInt>(&e->node)) return !i->digits.empty() && i->digits[0] == '-';
  return false;
}

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

std::string join(const std::vector<t::ExprPtr>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += render_expr(xs[i]);
  }
  return out;
}

std::string wrap(const t::ExprPtr& e, bool parens) {
  std::string s = render_expr(e);
  return parens ? "(" + s + ")" : s;
}

std::string render_binop(const t::BinOp& b) {
  int p = precedence(b.op);
  bool relational = p == kRelational;
  int lp = precedence(b.lhs);
  int rp = precedence(b.rhs);
  bool left_parens = lp < p || (b.op == t::BinOpKind::Power && lp <= p) ||
                     (relational && lp == kRelational);
  bool non_assoc = b.op == t::BinOpKind::Minus || b.op == t::BinOpKind::Divide || relational;
  bool right_parens = rp < p || (rp == p && non_assoc) || is_prefix_minus(b.rhs);
  std::string op = t::spelling(b.op);
  if (b.op == t::BinOpKind::And || b.op == t::BinOpKind::Or) op = " " + op + " ";
  return wrap(b.lhs, left_parens) + op + wrap(b.rhs, right_parens);
}

std::string render_unop(const t::UnOp& u) {
  int p = precedence(u.operand);
  bool nested = std::holds_alternative<t::UnOp>(u.operand->node) || is_prefix_minus(u.operand);
  if (u.op == t::UnOpKind::Minus) return "-" + wrap(u.operand, p < kTimes || nested);
  return "!" + wrap(u.operand, p < kNot || nested);
}

// Statement text without its terminating ';'.
std::string stmt_text(const t::Stmt& s);

std::string block(const t::StmtList& body) {
  std::string out;
  for (const t::Stmt& s : body) {
    out += stmt_text(s);
    if (std::holds_alternative<t::CommentStmt>(s.node)) {
      out += "\n";
      continue;
    }
    out += ";";
    if (std::holds_alternative<t::PrintStmt>(s.node) ||
        std::holds_alternative<t::IfStmt>(s.node) ||
        std::holds_alternative<t::DefineStmt>(s.node)) {
      out += "\n\n";
    } else if (std::holds_alternative<t::SetStmt>(s.node) ||
               std::holds_alternative<t::DimsStmt>(s.node) ||
               std::holds_alternative<t::IncrStmt>(s.node) ||
               std::holds_alternative<t::AddToStmt>(s.node)) {
      out += " \n";
    } else {
      out += "\n";
    }
  }
  return out;
}

std::string inline_block(const t::StmtList& body) {
  std::string out;
  for (const t::Stmt& s : body) {
    out += stmt_text(s);
    out += std::holds_alternative<t::CommentStmt>(s.node) ? " " : "; ";
  }
  return out;
}

std::string module_text(const t::ModuleBlock& m) {
  std::string out = "Module[{ ";
  for (std::size_t i = 0; i < m.locals.size(); ++i) {
    if (i) out += ",";
    out += m.locals[i];
  }
  return out + " },\n" + block(m.body) + "]";
}

std::string comment_text(std::string text) {
  for (std::size_t p = text.find("*)"); p != std::string::npos; p = text.find("*)", p)) {
    text.replace(p, 2, "* )");
  }
  return "(* " + text + " *)";
}

std::string stmt_text(const t::Stmt& s) {
  return std::visit(
      overloaded{
          [](const t::SetStmt& n) { return render_expr(n.lhs) + "=" + render_expr(n.rhs); },
          [](const t::IfStmt& n) {
            std::string out = "If[ " + render_expr(n.cond) + "\n, " + block(n.then_body);
            if (n.else_body) out += "\n, " + block(*n.else_body);
            return out + " ]";
          },
          [](const t::ForStmt& n) {
            std::string var = render_expr(n.var);
            return "For[" + var + "=" + render_expr(n.init) + "," + render_expr(n.cond) + "," +
                   var + "+=" + render_expr(n.incr_amount) + "," + inline_block(n.body) + "]";
          },
          [](const t::DoLoopStmt& n) {
            return "Do[" + block(n.body) + "\t,{" + render_expr(n.iter) + "," +
                   render_expr(n.lo) + "," + render_expr(n.hi) + "}]";
          },
          [](const t::WhileStmt& n) {
            std::string out = "While[" + render_expr(n.cond) + ",\n\t";
            for (std::size_t i = 0; i < n.body.size(); ++i) {
              if (i) out += "; ";
              out += stmt_text(n.body[i]);
            }
            return out + "]";
          },
          [](const t::IncrStmt& n) { return render_expr(n.target) + "++"; },
          [](const t::AddToStmt& n) {
            return render_expr(n.target) + "+=" + render_expr(n.amount);
          },
          [](const t::PrintStmt& n) { return "Print[" + join(n.args) + "]"; },
          [](const t::CallStmt& n) { return n.name + "[" + join(n.args) + "]"; },
          [](const t::ReturnStmt& n) { return "Return[" + render_expr(n.expr) + "]"; },
          [](const t::ModuleBlock& n) { return module_text(n); },
          [](const t::DefineStmt& n) {
            std::string out;
            if (n.hold_all) out += "SetAttributes[" + n.name + ",HoldAll];\n";
            out += n.name + "[";
            for (std::size_t i = 0; i < n.params.size(); ++i) {
              if (i) out += ",";
              out += n.params[i] + "_";
            }
            return out + "]:=" + module_text(n.body);
          },
          [](const t::DimsStmt& n) {
            std::string out = "F2MmaDimensions[" + render_expr(n.array) + "]={";
            for (std::size_t i = 0; i < n.bounds.size(); ++i) {
              if (i) out += ",";
              out += "{" + render_expr(n.bounds[i].first) + ", " +
                     render_expr(n.bounds[i].second) + "}";
            }
            return out + "}";
          },
          [](const t::CommentStmt& n) { return comment_text(n.text); },
          [](const t::DataFillBlock& n) {
            return "(* # Inserting to " + n.array + " *)\n" + module_text(n.fill);
          },
      },
      s.node);
}

}  // namespace

const char* target::spelling(BinOpKind op) {
  switch (op) {
    case BinOpKind::Plus: return "+";
    case BinOpKind::Minus: return "-";
    case BinOpKind::Times: return "*";
    case BinOpKind::Divide: return "/";
    case BinOpKind::Power: return "^";
    case BinOpKind::SameQ: return "===";
    case BinOpKind::UnsameQ: return "=!=";
    case BinOpKind::Less: return "<";
    case BinOpKind::LessEqual: return "<=";
    case BinOpKind::Greater: return ">";
    case BinOpKind::GreaterEqual: return ">=";
    case BinOpKind::And: return "&&";
    case BinOpKind::Or: return "||";
  }
  return "?";
}

t::ExprPtr convert_real_literal(const RealParts& parts) {
  t::ScaledLiteral lit;
  lit.mantissa = trim_zeros(parts.int_digits + parts.frac_digits);
  lit.frac_len = parts.frac_digits.size();
  if (parts.exp_letter) lit.exponent = parts.exp_value;
  if (lit.frac_len == 0 && !lit.exponent) return t::make(t::ExactInt{lit.mantissa});
  return t::make(std::move(lit));
}

t::BinOpKind map_operator(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return t::BinOpKind::Plus;
    case BinaryOp::Sub: return t::BinOpKind::Minus;
    case BinaryOp::Mul: return t::BinOpKind::Times;
    case BinaryOp::Div: return t::BinOpKind::Divide;
    case BinaryOp::Pow: return t::BinOpKind::Power;
    case BinaryOp::Eq: case BinaryOp::Eqv: return t::BinOpKind::SameQ;
    case BinaryOp::Ne: case BinaryOp::Neqv: return t::BinOpKind::UnsameQ;
    case BinaryOp::Lt: return t::BinOpKind::Less;
    case BinaryOp::Le: return t::BinOpKind::LessEqual;
    case BinaryOp::Gt: return t::BinOpKind::Greater;
    case BinaryOp::Ge: return t::BinOpKind::GreaterEqual;
    case BinaryOp::And: return t::BinOpKind::And;
    case BinaryOp::Or: return t::BinOpKind::Or;
  }
  return t::BinOpKind::Plus;
}

t::UnOpKind map_operator(UnaryOp op) {
  return op == UnaryOp::Not ? t::UnOpKind::Not : t::UnOpKind::Minus;
}

std::optional<std::string_view> map_intrinsic(std::string_view name) {
  return intrinsic_head(name);
}

t::ExprPtr lower_expr(const ExprPtr& expr) {
  return std::visit(
      overloaded{
          [](const IntLit& n) { return t::make(t::ExactInt{trim_zeros(n.digits)}); },
          [](const RealLit& n) { return convert_real_literal(n.parts); },
          [](const ComplexLit& n) {
            return t::make(t::ComplexPair{lower_expr(n.re), lower_expr(n.im)});
          },
          [](const LogicalLit& n) { return t::make(t::BoolLit{n.value}); },
          [](const StringLit& n) { return t::make(t::Str{n.value}); },
          [](const NameRef& n) { return t::sym(n.name); },
          [](const ArrayRef& n) {
            return t::make(t::ElementRef{t::sym(n.name), lower_list(n.indices)});
          },
          [](const CallRef& n) {
            std::vector<t::ExprPtr> args = lower_list(n.args);
            auto head = map_intrinsic(n.name);
            if (head && *head == "Identity" && args.size() == 1) {
              return is_atomic(args[0]) ? args[0] : t::make(t::ParenGroup{args[0]});
            }
            return t::apply(head ? std::string(*head) : n.name, std::move(args));
          },
          [](const ParenRef& n) {
            return t::apply(std::string(map_intrinsic(n.name).value_or(n.name)),
                            lower_list(n.args));
          },
          [](const Unary& n) -> t::ExprPtr {
            if (n.op == UnaryOp::Plus) return lower_expr(n.operand);
            return t::make(t::UnOp{map_operator(n.op), lower_expr(n.operand)});
          },
          [](const Binary& n) {
            return t::binop(map_operator(n.op), lower_expr(n.lhs), lower_expr(n.rhs));
          },
          [](const Paren& n) { return t::make(t::ParenGroup{lower_expr(n.inner)}); },
      },
      expr->node);
}

t::StmtList lower_stmt(const Stmt& stmt, std::string_view unit_name) {
  t::StmtList out;
  std::visit(
      overloaded{
          [&](const Assign& n) {
            out.push_back({t::SetStmt{lower_expr(n.lhs), lower_expr(n.rhs)}});
          },
          [&](const LogicalIf& n) {
            out.push_back({t::IfStmt{lower_expr(n.cond), lower_stmt(*n.stmt, unit_name),
                                     std::nullopt}});
          },
          [&](const BlockIf& n) { out.push_back({lower_arms(n, 0, unit_name)}); },
          [&](const DoHeader& n) {
            throw AnalyzeError(stmt.line, "do loop ending at label " +
                                              std::to_string(n.terminal_label) +
                                              " was not resolved");
          },
          [&](const DoLoop& n) {
            bool descending = false;
            t::ExprPtr step = t::integer(1);
            if (n.step) {
              auto negative = literal_step_negative(n.step);
              if (!negative) {
                throw UnsupportedError(stmt.line,
                                       "do loop step must be a literal so its direction "
                                       "is known at translation time");
              }
              descending = *negative;
              step = lower_expr(n.step);
            }
            t::ExprPtr var = t::sym(n.var);
            t::ForStmt f;
            f.var = var;
            f.init = lower_expr(n.from);
            f.cond = t::binop(descending ? t::BinOpKind::GreaterEqual : t::BinOpKind::LessEqual,
                              var, lower_expr(n.to));
            f.incr_amount = step;
            f.body = lower_list_stmts(n.body, unit_name);
            out.push_back({std::move(f)});
          },
          [&](const Print& n) { out.push_back({t::PrintStmt{lower_list(n.items)}}); },
          [&](const Call& n) { out.push_back({t::CallStmt{n.name, lower_list(n.args)}}); },
          [&](const Return&) {
            if (unit_name.empty()) throw AnalyzeError(stmt.line, "return outside a subprogram");
            out.push_back({t::ReturnStmt{t::sym(std::string(unit_name))}});
          },
          [&](const Continue&) {},
          [&](const Comment& n) { out.push_back({t::CommentStmt{n.text}}); },
      },
      stmt.node);
  return out;
}

t::DataFillBlock expand_data(const std::string& array, std::vector<t::ExprPtr> values) {
  using t::BinOpKind;
  auto temp1 = t::sym("F2MmaTemp1");
  auto temp2 = t::sym("F2MmaTemp2");
  auto j = t::sym("j");
  auto k = t::sym("k");
  auto i = t::sym("i");
  auto set = [](t::ExprPtr l, t::ExprPtr r) { return t::Stmt{t::SetStmt{l, r}}; };
  auto incr = [](t::ExprPtr target) { return t::Stmt{t::IncrStmt{target}}; };

  t::WhileStmt carry;
  carry.cond = t::binop(
      BinOpKind::And, t::binop(BinOpKind::Less, k, t::apply("Length", {temp2})),
      t::binop(BinOpKind::Greater, t::part(j, {k}), t::part(dims_of(array), {k, t::integer(2)})));
  carry.body = {
      set(t::part(j, {k}), t::part(dims_of(array), {k, t::integer(1)})),
      incr(t::part(j, {t::binop(BinOpKind::Plus, k, t::integer(1))})),
      incr(k),
  };

  t::DoLoopStmt fill;
  fill.iter = i;
  fill.lo = t::integer(1);
  fill.hi = t::apply("Length", {temp1});
  fill.body = {
      set(k, t::integer(1)),
      set(t::make(t::ElementRef{t::sym(array), {t::make(t::SequenceSplice{j})}}),
          t::part(temp1, {i})),
      incr(t::part(j, {k})),
      t::Stmt{std::move(carry)},
  };

  t::DataFillBlock out;
  out.array = array;
  out.fill.locals = {"F2MmaTemp1", "F2MmaTemp2", "j", "j0", "k"};
  out.fill.body = {
      set(temp1, t::make(t::ListExpr{values})),
      set(temp2, dims_of(array)),
      set(j, t::apply("Array", {t::sym("j0"), t::apply("Length", {dims_of(array)})})),
      set(j, t::part(t::apply("Transpose", {temp2}), {t::integer(1)})),
      t::Stmt{std::move(fill)},
  };
  out.values = std::move(values);
  return out;
}

t::StmtList emit_unit(const UnitPlan& plan) {
  const Unit& unit = plan.unit;
  t::StmtList body;
  auto dims = [&](const std::vector<Entity>& entities) {
    for (const Entity& e : entities) {
      if (!e.bounds) continue;
      t::DimsStmt d;
      d.array = t::sym(e.name);
      for (const auto& [lo, hi] : *e.bounds) d.bounds.emplace_back(lower_expr(lo), lower_expr(hi));
      body.push_back({std::move(d)});
    }
  };
  for (const Decl& d : unit.decls) {
    std::visit(overloaded{
                   [&](const TypeDecl& n) { dims(n.entities); },
                   [&](const DimensionDecl& n) { dims(n.entities); },
                   [&](const CommonDecl& n) {
                     dims(n.entities);
                     std::string names;
                     for (const Entity& e : n.entities) {
                       if (!names.empty()) names += ", ";
                       names += e.name;
                     }
                     body.push_back({t::CommentStmt{"#common: " + names}});
                   },
                   [&](const DataDecl& n) {
                     std::vector<t::ExprPtr> values = lower_list(n.values);
                     const Symbol* s = plan.symbols.find(n.name);
                     if (s && s->is_array()) {
                       body.push_back({expand_data(n.name, std::move(values))});
                     } else {
                       body.push_back({t::SetStmt{t::sym(n.name), values.front()}});
                     }
                   },
                   [&](const Comment& n) { body.push_back({t::CommentStmt{n.text}}); },
               },
               d.node);
  }
  for (t::Stmt& s : lower_list_stmts(unit.stmts, unit.name)) body.push_back(std::move(s));

  t::StmtList out;
  for (const Comment& c : unit.leading_comments) out.push_back({t::CommentStmt{c.text}});
  if (unit.kind == UnitKind::Main) {
    for (t::Stmt& s : body) out.push_back(std::move(s));
  } else {
    t::DefineStmt def;
    def.name = unit.name;
    def.params = unit.params;
    def.body = t::ModuleBlock{plan.locals, std::move(body)};
    out.push_back({std::move(def)});
  }
  for (const Comment& c : unit.trailing_comments) out.push_back({t::CommentStmt{c.text}});
  return out;
}

std::string render_expr(const t::ExprPtr& expr) {
  return std::visit(
      overloaded{
          [](const t::ExactInt& n) { return n.digits; },
          [](const t::ScaledLiteral& n) {
            if (n.frac_len == 0 && !n.exponent) return n.mantissa;
            std::string out = "(" + n.mantissa;
            if (n.frac_len > 0) out += "*10^(-" + std::to_string(n.frac_len) + ")";
            if (n.exponent) out += "*10^(" + std::to_string(*n.exponent) + ")";
            return out + ")";
          },
          [](const t::ComplexPair& n) {
            return "(" + wrap(n.re, precedence(n.re) < kPlus) + "+I*(" + render_expr(n.im) + "))";
          },
          [](const t::Sym& n) { return n.name; },
          [](const t::Str& n) { return quote(n.text); },
          [](const t::Apply& n) { return n.head + "[" + join(n.args) + "]"; },
          [](const t::Part& n) {
            return wrap(n.expr, precedence(n.expr) < kAtom) + "[[" + join(n.indices) + "]]";
          },
          [](const t::ElementRef& n) {
            return wrap(n.array, precedence(n.array) < kAtom) + "[" + join(n.indices) + "]";
          },
          [](const t::BinOp& n) { return render_binop(n); },
          [](const t::UnOp& n) { return render_unop(n); },
          [](const t::ParenGroup& n) { return "(" + render_expr(n.inner) + ")"; },
          [](const t::BoolLit& n) { return std::string(n.value ? "True" : "False"); },
          [](const t::SequenceSplice& n) { return "Sequence@@" + render_expr(n.list); },
          [](const t::ListExpr& n) { return "{ " + join(n.items) + " }"; },
      },
      expr->node);
}

std::string render(const t::StmtList& stmts) { return block(stmts); }

}  // namespace f2sym
