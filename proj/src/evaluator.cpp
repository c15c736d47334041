#include "f2sym/evaluator.hpp"

#include <utility>

#include "f2sym/emitter.hpp"
#include "f2sym/error.hpp"

namespace f2sym {

namespace t = target;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using Bindings = std::map<std::string, t::ExprPtr>;
using Fresh = std::function<std::string(const std::string&)>;

[[noreturn]] void fail(const std::string& reason) { throw EvalError("", reason); }

constexpr const char* kDimensions = "F2MmaDimensions";

const std::string* sym_name(const t::ExprPtr& e) {
  if (auto* s = std::get_if<t::Sym>(&e->node)) return &s->name;
  return nullptr;
}

std::string first_line(const t::Stmt& s) {
  std::string text = render({s});
  text = text.substr(0, text.find('\n'));
  while (!text.empty() && (text.back() == ';' || text.back() == ' ')) text.pop_back();
  return text;
}

long small_index(const Value& v) {
  if (!v.is<BigInt>()) fail("index '" + format_value(v) + "' is not an integer");
  const BigInt& n = v.as<BigInt>();
  if (n > 1'000'000'000 || n < -1'000'000'000) fail("index " + n.str() + " is out of range");
  return n.convert_to<long>();
}

Value* part_slot(Value& base, const Value& index) {
  if (!base.is<ListValue>()) fail("part of non-list '" + format_value(base) + "'");
  auto& items = std::get<ListValue>(base.data).items;
  long i = small_index(index);
  long n = static_cast<long>(items.size());
  if (i < 0) i += n + 1;
  if (i < 1 || i > n) {
    fail("part " + format_value(index) + " of a list of length " + std::to_string(n) +
         " does not exist");
  }
  return &items[static_cast<std::size_t>(i - 1)];
}

Value take_part(Value base, const std::vector<Value>& indices) {
  for (const Value& i : indices) base = *part_slot(base, i);
  return base;
}

struct Substituter {
  const Fresh& fresh;

  t::ExprPtr expr(const t::ExprPtr& e, const Bindings& b) const {
    if (b.empty()) return e;
    auto list = [&](const std::vector<t::ExprPtr>& xs) {
      std::vector<t::ExprPtr> out;
      out.reserve(xs.size());
      for (const auto& x : xs) out.push_back(expr(x, b));
      return out;
    };
    return std::visit(
        overloaded{
            [&](const t::Sym& n) -> t::ExprPtr {
              auto it = b.find(n.name);
              return it == b.end() ? e : it->second;
            },
            [&](const t::ComplexPair& n) {
              return t::make(t::ComplexPair{expr(n.re, b), expr(n.im, b)});
            },
            [&](const t::Apply& n) { return t::make(t::Apply{n.head, list(n.args)}); },
            [&](const t::Part& n) { return t::make(t::Part{expr(n.expr, b), list(n.indices)}); },
            [&](const t::ElementRef& n) {
              return t::make(t::ElementRef{expr(n.array, b), list(n.indices)});
            },
            [&](const t::BinOp& n) {
              return t::make(t::BinOp{n.op, expr(n.lhs, b), expr(n.rhs, b)});
            },
            [&](const t::UnOp& n) { return t::make(t::UnOp{n.op, expr(n.operand, b)}); },
            [&](const t::ParenGroup& n) { return t::make(t::ParenGroup{expr(n.inner, b)}); },
            [&](const t::SequenceSplice& n) {
              return t::make(t::SequenceSplice{expr(n.list, b)});
            },
            [&](const t::ListExpr& n) { return t::make(t::ListExpr{list(n.items)}); },
            [&](const auto&) { return e; },
        },
        e->node);
  }

  t::ModuleBlock module(const t::ModuleBlock& m, Bindings b) const {
    t::ModuleBlock out;
    for (const std::string& local : m.locals) {
      std::string name = fresh(local);
      b[local] = t::sym(name);
      out.locals.push_back(std::move(name));
    }
    out.body = stmts(m.body, b);
    return out;
  }

  t::StmtList stmts(const t::StmtList& body, const Bindings& b) const {
    t::StmtList out;
    out.reserve(body.size());
    for (const t::Stmt& s : body) out.push_back(stmt(s, b));
    return out;
  }

  t::Stmt stmt(const t::Stmt& s, const Bindings& b) const {
    return std::visit(
        overloaded{
            [&](const t::SetStmt& n) { return t::Stmt{t::SetStmt{expr(n.lhs, b), expr(n.rhs, b)}}; },
            [&](const t::IfStmt& n) {
              t::IfStmt out{expr(n.cond, b), stmts(n.then_body, b), std::nullopt};
              if (n.else_body) out.else_body = stmts(*n.else_body, b);
              return t::Stmt{std::move(out)};
            },
            [&](const t::ForStmt& n) {
              return t::Stmt{t::ForStmt{expr(n.var, b), expr(n.init, b), expr(n.cond, b),
                                        expr(n.incr_amount, b), stmts(n.body, b)}};
            },
            [&](const t::DoLoopStmt& n) {
              t::DoLoopStmt out{n.iter, expr(n.lo, b), expr(n.hi, b), {}};
              Bindings inner = b;
              if (const std::string* name = sym_name(n.iter)) {
                out.iter = t::sym(fresh(*name));
                inner[*name] = out.iter;
              }
              out.body = stmts(n.body, inner);
              return t::Stmt{std::move(out)};
            },
            [&](const t::WhileStmt& n) {
              return t::Stmt{t::WhileStmt{expr(n.cond, b), stmts(n.body, b)}};
            },
            [&](const t::IncrStmt& n) { return t::Stmt{t::IncrStmt{expr(n.target, b)}}; },
            [&](const t::AddToStmt& n) {
              return t::Stmt{t::AddToStmt{expr(n.target, b), expr(n.amount, b)}};
            },
            [&](const t::PrintStmt& n) {
              t::PrintStmt out;
              for (const auto& a : n.args) out.args.push_back(expr(a, b));
              return t::Stmt{std::move(out)};
            },
            [&](const t::CallStmt& n) {
              t::CallStmt out{n.name, {}};
              for (const auto& a : n.args) out.args.push_back(expr(a, b));
              return t::Stmt{std::move(out)};
            },
            [&](const t::ReturnStmt& n) { return t::Stmt{t::ReturnStmt{expr(n.expr, b)}}; },
            [&](const t::ModuleBlock& n) { return t::Stmt{module(n, b)}; },
            [&](const t::DefineStmt& n) {
              Bindings inner = b;
              for (const std::string& p : n.params) inner.erase(p);
              t::DefineStmt out = n;
              out.body = module(n.body, inner);
              return t::Stmt{std::move(out)};
            },
            [&](const t::DimsStmt& n) {
              t::DimsStmt out{expr(n.array, b), {}};
              for (const auto& [lo, hi] : n.bounds) out.bounds.emplace_back(expr(lo, b), expr(hi, b));
              return t::Stmt{std::move(out)};
            },
            [&](const t::CommentStmt& n) { return t::Stmt{n}; },
            [&](const t::DataFillBlock& n) {
              t::DataFillBlock out;
              out.array = n.array;
              auto it = b.find(n.array);
              if (it != b.end()) {
                if (const std::string* name = sym_name(it->second)) out.array = *name;
              }
              for (const auto& v : n.values) out.values.push_back(expr(v, b));
              out.fill = module(n.fill, b);
              return t::Stmt{std::move(out)};
            },
        },
        s.node);
  }
};

}  // namespace

std::string index_key(const std::vector<Value>& index) {
  std::string key;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (i) key += ",";
    key += format_value(index[i]);
  }
  return key;
}

std::optional<Value> Environment::scalar(const std::string& name) const {
  auto it = globals.find(name);
  if (it == globals.end()) return std::nullopt;
  return it->second;
}

std::optional<Value> Environment::element(const std::string& array,
                                          const std::vector<Value>& index) const {
  auto a = arrays.find(array);
  if (a == arrays.end()) return std::nullopt;
  auto it = a->second.find(index_key(index));
  if (it == a->second.end()) return std::nullopt;
  return it->second;
}

std::optional<Value> Environment::element(const std::string& array,
                                          const std::vector<long>& index) const {
  std::vector<Value> values(index.begin(), index.end());
  return element(array, values);
}

std::optional<Value> Environment::dims(const std::string& array) const {
  auto it = dimensions.find(array);
  if (it == dimensions.end()) return std::nullopt;
  return it->second;
}

t::StmtList substitute(const t::StmtList& body, const Bindings& bindings, const Fresh& fresh) {
  return Substituter{fresh}.stmts(body, bindings);
}

Evaluator::Evaluator(EvalOptions options) : options_(options) {}

std::string Evaluator::fresh(const std::string& name) {
  return name.substr(0, name.find('$')) + "$" + std::to_string(next_id_++);
}

void Evaluator::tick() {
  if (++steps_ > options_.max_steps) {
    fail("step limit of " + std::to_string(options_.max_steps) + " exceeded");
  }
}

Value Evaluator::numeric(Value v) {
  if (!v.is<SymbolValue>()) return v;
  if (options_.strict_unbound) {
    fail("unbound symbol '" + v.as<SymbolValue>().name + "' used as a number");
  }
  return Value(0);
}

bool Evaluator::truth(const Value& v) {
  if (!v.is<bool>()) fail("condition '" + format_value(v) + "' is neither True nor False");
  return v.as<bool>();
}

std::vector<Value> Evaluator::eval_args(const std::vector<t::ExprPtr>& args) {
  std::vector<Value> out;
  out.reserve(args.size());
  for (const auto& a : args) {
    if (auto* splice = std::get_if<t::SequenceSplice>(&a->node)) {
      Value list = eval_expr(splice->list);
      if (!list.is<ListValue>()) fail("Sequence@@ applied to non-list '" + format_value(list) + "'");
      for (const Value& v : list.as<ListValue>().items) out.push_back(v);
    } else {
      out.push_back(eval_expr(a));
    }
  }
  return out;
}

Value Evaluator::apply_builtin(const std::string& head, const std::vector<Value>& args) {
  auto arity = [&](std::size_t n) {
    if (args.size() != n) {
      fail(head + " called with " + std::to_string(args.size()) + " arguments; " +
           std::to_string(n) + " expected");
    }
  };
  using Unary = Value (*)(const Value&);
  static const std::map<std::string, Unary> kNumeric = {
      {"Sqrt", sqrt_value}, {"Abs", abs_value}, {"Exp", exp_value},       {"Log", log_value},
      {"Sin", sin_value},   {"Cos", cos_value}, {"ArcTan", arctan_value},
  };
  if (auto it = kNumeric.find(head); it != kNumeric.end()) {
    arity(1);
    return it->second(numeric(args[0]));
  }
  if (head == "Length") {
    arity(1);
    if (!args[0].is<ListValue>()) return Value(0);
    return Value(static_cast<long>(args[0].as<ListValue>().items.size()));
  }
  if (head == "Transpose") {
    arity(1);
    if (!args[0].is<ListValue>()) fail("Transpose of non-list '" + format_value(args[0]) + "'");
    const auto& rows = args[0].as<ListValue>().items;
    if (rows.empty()) return args[0];
    std::size_t width = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is<ListValue>()) fail("Transpose of a non-matrix");
      std::size_t w = rows[r].as<ListValue>().items.size();
      if (r == 0) width = w;
      if (w != width) fail("Transpose of a ragged matrix");
    }
    ListValue out;
    for (std::size_t c = 0; c < width; ++c) {
      ListValue column;
      for (const Value& row : rows) column.items.push_back(row.as<ListValue>().items[c]);
      out.items.emplace_back(std::move(column));
    }
    return Value(std::move(out));
  }
  if (head == "Array") {
    arity(2);
    long n = small_index(numeric(args[1]));
    if (n < 0) fail("Array length " + std::to_string(n) + " is negative");
    std::string f = format_value(args[0]);
    ListValue out;
    for (long i = 1; i <= n; ++i) out.items.emplace_back(SymbolValue{f + "[" + std::to_string(i) + "]"});
    return Value(std::move(out));
  }
  if (head == "Part") {
    if (args.empty()) fail("Part called with no arguments");
    std::vector<Value> indices;
    for (std::size_t i = 1; i < args.size(); ++i) indices.push_back(numeric(args[i]));
    return take_part(args[0], indices);
  }
  fail("unsupported head '" + head + "'");
}

Value Evaluator::eval_expr(const t::ExprPtr& expr) {
  return std::visit(
      overloaded{
          [&](const t::ExactInt& n) { return Value(parse_digits(n.digits)); },
          [&](const t::ScaledLiteral& n) {
            long scale = n.exponent.value_or(0) - static_cast<long>(n.frac_len);
            return multiply(Value(parse_digits(n.mantissa)), power(Value(10), Value(scale)));
          },
          [&](const t::ComplexPair& n) {
            Value re = numeric(eval_expr(n.re));
            Value im = numeric(eval_expr(n.im));
            return add(re, multiply(im, Value(Gaussian{Rational(0), Rational(1)})));
          },
          [&](const t::Sym& n) {
            auto it = env_.globals.find(n.name);
            return it == env_.globals.end() ? Value(SymbolValue{n.name}) : it->second;
          },
          [&](const t::Str& n) { return Value(Text{n.text}); },
          [&](const t::Apply& n) {
            if (env_.has_definition(n.head)) return call_definition(n.head, n.args);
            return apply_builtin(n.head, eval_args(n.args));
          },
          [&](const t::Part& n) {
            Value base = eval_expr(n.expr);
            std::vector<Value> indices;
            for (const Value& v : eval_args(n.indices)) indices.push_back(numeric(v));
            return take_part(std::move(base), indices);
          },
          [&](const t::ElementRef& n) {
            const std::string* array = sym_name(n.array);
            if (!array) fail("'" + render_expr(n.array) + "' cannot be indexed");
            if (*array == kDimensions) {
              const std::string* target = n.indices.size() == 1 ? sym_name(n.indices[0]) : nullptr;
              if (!target) fail("F2MmaDimensions expects one symbol");
              if (auto d = env_.dims(*target)) return *d;
              return Value(SymbolValue{std::string(kDimensions) + "[" + *target + "]"});
            }
            std::vector<Value> index;
            for (const Value& v : eval_args(n.indices)) index.push_back(numeric(v));
            if (auto v = env_.element(*array, index)) return *v;
            return Value(SymbolValue{*array + "[" + index_key(index) + "]"});
          },
          [&](const t::BinOp& n) {
            using K = t::BinOpKind;
            if (n.op == K::And || n.op == K::Or) {
              bool lhs = truth(eval_expr(n.lhs));
              if (n.op == K::And && !lhs) return Value(false);
              if (n.op == K::Or && lhs) return Value(true);
              return Value(truth(eval_expr(n.rhs)));
            }
            Value a = eval_expr(n.lhs);
            Value b = eval_expr(n.rhs);
            if (n.op == K::SameQ) return Value(same(a, b));
            if (n.op == K::UnsameQ) return Value(!same(a, b));
            a = numeric(std::move(a));
            b = numeric(std::move(b));
            switch (n.op) {
              case K::Plus: return add(a, b);
              case K::Minus: return subtract(a, b);
              case K::Times: return multiply(a, b);
              case K::Divide: return divide(a, b);
              case K::Power: return power(a, b);
              case K::Less: return Value(compare(a, b) < 0);
              case K::LessEqual: return Value(compare(a, b) <= 0);
              case K::Greater: return Value(compare(a, b) > 0);
              case K::GreaterEqual: return Value(compare(a, b) >= 0);
              default: break;
            }
            fail("unsupported operator");
          },
          [&](const t::UnOp& n) {
            Value v = eval_expr(n.operand);
            if (n.op == t::UnOpKind::Not) return Value(!truth(v));
            return negate(numeric(std::move(v)));
          },
          [&](const t::ParenGroup& n) { return eval_expr(n.inner); },
          [&](const t::BoolLit& n) { return Value(n.value); },
          [&](const t::SequenceSplice&) -> Value { fail("Sequence@@ outside an argument list"); },
          [&](const t::ListExpr& n) { return Value(ListValue{eval_args(n.items)}); },
      },
      expr->node);
}

void Evaluator::assign(const t::ExprPtr& lhs, const Value& v) {
  if (const std::string* name = sym_name(lhs)) {
    env_.globals[*name] = v;
    return;
  }
  if (auto* ref = std::get_if<t::ElementRef>(&lhs->node)) {
    const std::string* array = sym_name(ref->array);
    if (!array) fail("cannot assign to '" + render_expr(lhs) + "'");
    if (*array == kDimensions) {
      const std::string* target = ref->indices.size() == 1 ? sym_name(ref->indices[0]) : nullptr;
      if (!target) fail("F2MmaDimensions expects one symbol");
      env_.dimensions[*target] = v;
      return;
    }
    std::vector<Value> index;
    for (const Value& i : eval_args(ref->indices)) index.push_back(numeric(i));
    env_.arrays[*array][index_key(index)] = v;
    return;
  }
  if (auto* p = std::get_if<t::Part>(&lhs->node)) {
    Value base = eval_expr(p->expr);
    std::vector<Value> indices;
    for (const Value& i : eval_args(p->indices)) indices.push_back(numeric(i));
    if (indices.empty()) fail("Part assignment without indices");
    Value* slot = &base;
    for (const Value& i : indices) slot = part_slot(*slot, i);
    *slot = v;
    assign(p->expr, base);
    return;
  }
  fail("cannot assign to '" + render_expr(lhs) + "'");
}

Value Evaluator::exec_block(const t::StmtList& body, bool& returned) {
  Value last;
  for (const t::Stmt& s : body) {
    last = exec(s, returned);
    if (returned) break;
  }
  return last;
}

Value Evaluator::exec_module(const t::ModuleBlock& m, bool& returned) {
  Bindings renames;
  std::vector<std::string> locals;
  for (const std::string& local : m.locals) {
    locals.push_back(fresh(local));
    renames[local] = t::sym(locals.back());
  }
  t::StmtList body = substitute(m.body, renames, [this](const std::string& n) { return fresh(n); });
  env_.modules.push_back(locals);
  struct Pop {
    Environment& env;
    ~Pop() {
      for (const std::string& name : env.modules.back()) {
        env.globals.erase(name);
        env.arrays.erase(name);
        env.dimensions.erase(name);
      }
      env.modules.pop_back();
    }
  } pop{env_};
  return exec_block(body, returned);
}

Value Evaluator::call_definition(const std::string& name, const std::vector<t::ExprPtr>& args) {
  auto it = env_.definitions.find(name);
  if (it == env_.definitions.end()) fail("'" + name + "' is not defined");
  const Definition& def = it->second;
  if (args.size() != def.params.size()) {
    fail(name + " called with " + std::to_string(args.size()) + " arguments; " +
         std::to_string(def.params.size()) + " expected");
  }
  if (depth_ >= options_.max_depth) {
    fail("call depth limit of " + std::to_string(options_.max_depth) + " exceeded");
  }
  Bindings bindings;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (def.hold_all) {
      bindings[def.params[i]] = args[i];
    } else {
      std::string slot = fresh(def.params[i]);
      env_.globals[slot] = eval_expr(args[i]);
      bindings[def.params[i]] = t::sym(slot);
    }
  }
  Fresh renamer = [this](const std::string& n) { return fresh(n); };
  t::ModuleBlock body = Substituter{renamer}.module(def.body, bindings);
  ++depth_;
  struct Leave {
    int& depth;
    ~Leave() { --depth; }
  } leave{depth_};
  bool returned = false;
  return exec_module(body, returned);
}

Value Evaluator::exec(const t::Stmt& stmt, bool& returned) {
  tick();
  try {
    return std::visit(
        overloaded{
            [&](const t::SetStmt& n) {
              Value v = eval_expr(n.rhs);
              assign(n.lhs, v);
              return v;
            },
            [&](const t::IfStmt& n) {
              if (truth(eval_expr(n.cond))) return exec_block(n.then_body, returned);
              if (n.else_body) return exec_block(*n.else_body, returned);
              return null_value();
            },
            [&](const t::ForStmt& n) {
              assign(n.var, eval_expr(n.init));
              while (truth(eval_expr(n.cond))) {
                exec_block(n.body, returned);
                if (returned) break;
                tick();
                assign(n.var, add(numeric(eval_expr(n.var)), numeric(eval_expr(n.incr_amount))));
              }
              return null_value();
            },
            [&](const t::DoLoopStmt& n) {
              const std::string* iter = sym_name(n.iter);
              if (!iter) fail("Do iterator must be a symbol");
              Value lo = numeric(eval_expr(n.lo));
              Value hi = numeric(eval_expr(n.hi));
              std::optional<Value> saved = env_.scalar(*iter);
              struct Restore {
                Environment& env;
                const std::string& name;
                std::optional<Value>& saved;
                ~Restore() {
                  if (saved) {
                    env.globals[name] = *saved;
                  } else {
                    env.globals.erase(name);
                  }
                }
              } restore{env_, *iter, saved};
              for (Value v = lo; compare(v, hi) <= 0; v = add(v, Value(1))) {
                env_.globals[*iter] = v;
                exec_block(n.body, returned);
                if (returned) break;
              }
              return null_value();
            },
            [&](const t::WhileStmt& n) {
              while (truth(eval_expr(n.cond))) {
                exec_block(n.body, returned);
                if (returned) break;
                tick();
              }
              return null_value();
            },
            [&](const t::IncrStmt& n) {
              Value old = numeric(eval_expr(n.target));
              assign(n.target, add(old, Value(1)));
              return old;
            },
            [&](const t::AddToStmt& n) {
              Value v = add(numeric(eval_expr(n.target)), numeric(eval_expr(n.amount)));
              assign(n.target, v);
              return v;
            },
            [&](const t::PrintStmt& n) {
              std::string line;
              for (const Value& v : eval_args(n.args)) line += format_value(v);
              printed_.push_back(line);
              if (options_.stream) *options_.stream << line << '\n';
              return null_value();
            },
            [&](const t::CallStmt& n) {
              if (env_.has_definition(n.name)) return call_definition(n.name, n.args);
              return apply_builtin(n.name, eval_args(n.args));
            },
            [&](const t::ReturnStmt& n) {
              Value v = eval_expr(n.expr);
              returned = true;
              return v;
            },
            [&](const t::ModuleBlock& n) { return exec_module(n, returned); },
            [&](const t::DefineStmt& n) {
              env_.definitions[n.name] = Definition{n.params, n.body, n.hold_all};
              return null_value();
            },
            [&](const t::DimsStmt& n) {
              const std::string* array = sym_name(n.array);
              if (!array) fail("F2MmaDimensions expects one symbol");
              ListValue bounds;
              for (const auto& [lo, hi] : n.bounds) {
                bounds.items.emplace_back(
                    ListValue{{numeric(eval_expr(lo)), numeric(eval_expr(hi))}});
              }
              env_.dimensions[*array] = Value(std::move(bounds));
              return null_value();
            },
            [&](const t::CommentStmt&) { return null_value(); },
            [&](const t::DataFillBlock& n) { return exec_module(n.fill, returned); },
        },
        stmt.node);
  } catch (const EvalError& e) {
    if (!e.statement().empty()) throw;
    throw EvalError(first_line(stmt), e.what());
  }
}

void Evaluator::run(const t::StmtList& program) {
  for (const t::Stmt& s : program) {
    if (auto* d = std::get_if<t::DefineStmt>(&s.node)) {
      env_.definitions[d->name] = Definition{d->params, d->body, d->hold_all};
    }
  }
  bool returned = false;
  exec_block(program, returned);
}

RunResult run_program(const t::StmtList& program, EvalOptions options) {
  Evaluator ev(options);
  ev.run(program);
  return {ev.printed(), std::move(ev.env())};
}

}  // namespace f2sym
