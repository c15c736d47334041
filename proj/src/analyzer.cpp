#include "f2sym/analyzer.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "f2sym/error.hpp"
#include "f2sym/intrinsics.hpp"

namespace f2sym {

using namespace ast;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using ExprRewrite = std::function<ExprPtr(const ExprPtr&)>;

// Post-order rewrite: children first, then `fn` on the rebuilt node.
ExprPtr rewrite(const ExprPtr& e, const ExprRewrite& fn) {
  if (!e) return e;
  auto list = [&](const std::vector<ExprPtr>& xs) {
    std::vector<ExprPtr> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(rewrite(x, fn));
    return out;
  };
  ExprPtr rebuilt = std::visit(
      overloaded{
          [&](const ComplexLit& n) { return make(ComplexLit{rewrite(n.re, fn), rewrite(n.im, fn)}); },
          [&](const ParenRef& n) { return make(ParenRef{n.name, list(n.args)}); },
          [&](const ArrayRef& n) { return make(ArrayRef{n.name, list(n.indices)}); },
          [&](const CallRef& n) { return make(CallRef{n.name, list(n.args)}); },
          [&](const Unary& n) { return make(Unary{n.op, rewrite(n.operand, fn)}); },
          [&](const Binary& n) {
            return make(Binary{n.op, rewrite(n.lhs, fn), rewrite(n.rhs, fn)});
          },
          [&](const Paren& n) { return make(Paren{rewrite(n.inner, fn)}); },
          [&](const auto&) { return e; },
      },
      e->node);
  return fn(rebuilt);
}

Bounds rewrite_bounds(const Bounds& b, const ExprRewrite& fn) {
  Bounds out;
  for (const auto& [lo, hi] : b) out.emplace_back(rewrite(lo, fn), rewrite(hi, fn));
  return out;
}

// Applies `fn` to every expression and `name_fn` to every bare name field.
struct UnitRewriter {
  ExprRewrite fn;
  std::function<std::string(const std::string&)> name_fn;

  std::vector<ExprPtr> list(const std::vector<ExprPtr>& xs) const {
    std::vector<ExprPtr> out;
    for (const auto& x : xs) out.push_back(rewrite(x, fn));
    return out;
  }

  StmtList stmts(const StmtList& in) const {
    StmtList out;
    for (const Stmt& s : in) out.push_back(stmt(s));
    return out;
  }

  Stmt stmt(const Stmt& s) const {
    Stmt out{s.label, s.line, {}};
    out.node = std::visit(
        overloaded{
            [&](const Assign& n) -> decltype(out.node) {
              return Assign{rewrite(n.lhs, fn), rewrite(n.rhs, fn)};
            },
            [&](const LogicalIf& n) -> decltype(out.node) {
              return LogicalIf{rewrite(n.cond, fn),
                               std::make_shared<const Stmt>(stmt(*n.stmt))};
            },
            [&](const BlockIf& n) -> decltype(out.node) {
              BlockIf b;
              for (const IfArm& arm : n.arms) {
                b.arms.push_back({rewrite(arm.cond, fn), stmts(arm.body)});
              }
              if (n.else_body) b.else_body = stmts(*n.else_body);
              return b;
            },
            [&](const DoHeader& n) -> decltype(out.node) {
              return DoHeader{n.terminal_label, name_fn(n.var), rewrite(n.from, fn),
                              rewrite(n.to, fn), rewrite(n.step, fn)};
            },
            [&](const DoLoop& n) -> decltype(out.node) {
              return DoLoop{name_fn(n.var), rewrite(n.from, fn), rewrite(n.to, fn),
                            rewrite(n.step, fn), stmts(n.body)};
            },
            [&](const Print& n) -> decltype(out.node) { return Print{list(n.items)}; },
            [&](const Call& n) -> decltype(out.node) {
              return Call{name_fn(n.name), list(n.args)};
            },
            [&](const auto& n) -> decltype(out.node) { return n; },
        },
        s.node);
    return out;
  }

  std::vector<Entity> entities(const std::vector<Entity>& in) const {
    std::vector<Entity> out;
    for (const Entity& e : in) {
      Entity r{name_fn(e.name), e.line, std::nullopt};
      if (e.bounds) r.bounds = rewrite_bounds(*e.bounds, fn);
      out.push_back(std::move(r));
    }
    return out;
  }

  Unit unit(const Unit& u) const {
    Unit out = u;
    if (!u.name.empty()) out.name = name_fn(u.name);
    out.params.clear();
    for (const auto& p : u.params) out.params.push_back(name_fn(p));
    out.decls.clear();
    for (const Decl& d : u.decls) {
      Decl r{d.line, {}};
      r.node = std::visit(
          overloaded{
              [&](const TypeDecl& n) -> decltype(r.node) {
                return TypeDecl{n.type_name, entities(n.entities)};
              },
              [&](const DimensionDecl& n) -> decltype(r.node) {
                return DimensionDecl{entities(n.entities)};
              },
              [&](const CommonDecl& n) -> decltype(r.node) {
                return CommonDecl{n.block_name, entities(n.entities)};
              },
              [&](const DataDecl& n) -> decltype(r.node) {
                return DataDecl{name_fn(n.name), list(n.values)};
              },
              [&](const Comment& n) -> decltype(r.node) { return n; },
          },
          d.node);
      out.decls.push_back(std::move(r));
    }
    out.stmts = stmts(u.stmts);
    return out;
  }
};

// Visits every statement, recursing into nested bodies.
void for_each_stmt(const StmtList& list, const std::function<void(const Stmt&)>& fn) {
  for (const Stmt& s : list) {
    fn(s);
    std::visit(overloaded{
                   [&](const LogicalIf& n) { for_each_stmt({*n.stmt}, fn); },
                   [&](const BlockIf& n) {
                     for (const IfArm& a : n.arms) for_each_stmt(a.body, fn);
                     if (n.else_body) for_each_stmt(*n.else_body, fn);
                   },
                   [&](const DoLoop& n) { for_each_stmt(n.body, fn); },
                   [](const auto&) {},
               },
               s.node);
  }
}

std::optional<long> constant_int(const ExprPtr& e) {
  if (auto* lit = std::get_if<IntLit>(&e->node)) return std::stol(lit->digits);
  if (auto* u = std::get_if<Unary>(&e->node)) {
    if (u->op == UnaryOp::Neg) {
      if (auto v = constant_int(u->operand)) return -*v;
    }
    if (u->op == UnaryOp::Plus) return constant_int(u->operand);
  }
  return std::nullopt;
}

StmtList resolve_list(const StmtList& in);

struct OpenDo {
  DoHeader header;
  std::optional<int> label;
  int line;
  StmtList body;
};

StmtList resolve_list(const StmtList& in) {
  StmtList out;
  std::vector<OpenDo> open;
  std::set<int> seen_labels;
  auto sink = [&]() -> StmtList& { return open.empty() ? out : open.back().body; };

  for (const Stmt& raw : in) {
    // Nested bodies (if blocks) resolve their own loops.
    Stmt s = raw;
    if (auto* b = std::get_if<BlockIf>(&s.node)) {
      for (IfArm& arm : b->arms) arm.body = resolve_list(arm.body);
      if (b->else_body) b->else_body = resolve_list(*b->else_body);
    }
    if (auto* h = std::get_if<DoHeader>(&s.node)) {
      if (seen_labels.count(h->terminal_label)) {
        throw AnalyzeError(s.line, "do loop terminal label " +
                                       std::to_string(h->terminal_label) +
                                       " appears before its do statement");
      }
      open.push_back({*h, s.label, s.line, {}});
      if (s.label) seen_labels.insert(*s.label);
      continue;
    }
    if (s.label) seen_labels.insert(*s.label);
    bool closes_any = s.label && std::any_of(open.begin(), open.end(), [&](const OpenDo& d) {
                        return d.header.terminal_label == *s.label;
                      });
    if (!closes_any || !std::holds_alternative<Continue>(s.node)) sink().push_back(s);
    if (!closes_any) continue;
    if (open.back().header.terminal_label != *s.label) {
      throw AnalyzeError(s.line, "do loops ending at label " + std::to_string(*s.label) +
                                     " are improperly nested");
    }
    while (!open.empty() && open.back().header.terminal_label == *s.label) {
      OpenDo d = std::move(open.back());
      open.pop_back();
      Stmt loop{d.label, d.line,
                DoLoop{d.header.var, d.header.from, d.header.to, d.header.step,
                       std::move(d.body)}};
      sink().push_back(std::move(loop));
    }
  }
  if (!open.empty()) {
    throw AnalyzeError(open.back().line,
                       "terminal label " + std::to_string(open.back().header.terminal_label) +
                           " of do loop not found");
  }
  return out;
}

std::vector<Entity> decl_entities(const Decl& d) {
  if (auto* t = std::get_if<TypeDecl>(&d.node)) return t->entities;
  if (auto* t = std::get_if<DimensionDecl>(&d.node)) return t->entities;
  if (auto* t = std::get_if<CommonDecl>(&d.node)) return t->entities;
  return {};
}

}  // namespace

const char* to_string(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::Parameter: return "parameter";
    case SymbolKind::LocalScalar: return "local scalar";
    case SymbolKind::Array: return "array";
    case SymbolKind::Common: return "common";
    case SymbolKind::FunctionResult: return "function result";
    case SymbolKind::ExternalFunction: return "external function";
  }
  return "symbol";
}

Symbol& SymbolTable::insert(std::string renamed, SymbolKind kind) {
  auto it = symbols_.find(renamed);
  if (it != symbols_.end()) return it->second;
  order_.push_back(renamed);
  Symbol s;
  s.renamed = renamed;
  s.kind = kind;
  return symbols_.emplace(std::move(renamed), std::move(s)).first->second;
}

Symbol* SymbolTable::find(std::string_view renamed) {
  auto it = symbols_.find(renamed);
  return it == symbols_.end() ? nullptr : &it->second;
}

const Symbol* SymbolTable::find(std::string_view renamed) const {
  auto it = symbols_.find(renamed);
  return it == symbols_.end() ? nullptr : &it->second;
}

std::string rename_identifier(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '_') {
      out += "TTT";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Unit rename_all(const Unit& unit) {
  std::map<std::string, std::string> origin;  // renamed -> first source name
  auto name_fn = [&](const std::string& name) {
    std::string renamed = rename_identifier(name);
    auto [it, inserted] = origin.emplace(renamed, name);
    if (!inserted && it->second != name) {
      throw AnalyzeError(unit.line, "renaming '" + name + "' to '" + renamed +
                                        "' collides with '" + it->second + "'");
    }
    return renamed;
  };
  ExprRewrite fn = [&](const ExprPtr& e) -> ExprPtr {
    if (auto* n = std::get_if<NameRef>(&e->node)) return make(NameRef{name_fn(n->name)});
    if (auto* n = std::get_if<ParenRef>(&e->node)) return make(ParenRef{name_fn(n->name), n->args});
    if (auto* n = std::get_if<ArrayRef>(&e->node)) return make(ArrayRef{name_fn(n->name), n->indices});
    if (auto* n = std::get_if<CallRef>(&e->node)) return make(CallRef{name_fn(n->name), n->args});
    return e;
  };
  return UnitRewriter{fn, name_fn}.unit(unit);
}

Unit resolve_do_bodies(const Unit& unit) {
  Unit out = unit;
  out.stmts = resolve_list(unit.stmts);
  return out;
}

SymbolTable build_symbols(const Unit& unit) {
  SymbolTable table;
  auto add = [&](const std::string& name, SymbolKind kind) -> Symbol& {
    Symbol& s = table.insert(name, kind);
    s.original_name = name;
    return s;
  };
  if (unit.kind == UnitKind::Function) add(unit.name, SymbolKind::FunctionResult);
  for (const std::string& p : unit.params) {
    Symbol& s = add(p, SymbolKind::Parameter);
    if (s.kind != SymbolKind::Parameter) {
      throw AnalyzeError(unit.line, "parameter '" + p + "' shadows the unit name");
    }
  }
  for (const Decl& d : unit.decls) {
    bool common = std::holds_alternative<CommonDecl>(d.node);
    for (const Entity& e : decl_entities(d)) {
      SymbolKind fresh = e.bounds ? SymbolKind::Array : SymbolKind::LocalScalar;
      Symbol& s = add(e.name, common ? SymbolKind::Common : fresh);
      if (common) {
        if (s.kind == SymbolKind::Parameter) {
          throw AnalyzeError(d.line, "'" + e.name + "' is both a parameter and in common");
        }
        if (s.kind == SymbolKind::FunctionResult) {
          throw AnalyzeError(d.line, "function result '" + e.name + "' cannot be in common");
        }
        s.kind = SymbolKind::Common;
        s.common_block = std::get<CommonDecl>(d.node).block_name;
      } else if (e.bounds && s.kind == SymbolKind::LocalScalar) {
        s.kind = SymbolKind::Array;
      }
      if (e.bounds) {
        if (s.bounds) {
          throw AnalyzeError(d.line, "array '" + e.name + "' dimensioned twice");
        }
        if (s.kind == SymbolKind::FunctionResult) {
          throw AnalyzeError(d.line, "function result '" + e.name + "' cannot be an array");
        }
        s.bounds = *e.bounds;
      }
    }
    if (auto* data = std::get_if<DataDecl>(&d.node)) add(data->name, SymbolKind::LocalScalar);
  }
  return table;
}

Unit classify_refs(const Unit& unit, SymbolTable& symbols) {
  ExprRewrite fn = [&](const ExprPtr& e) -> ExprPtr {
    auto* ref = std::get_if<ParenRef>(&e->node);
    if (!ref) return e;
    const Symbol* s = symbols.find(ref->name);
    if (s && s->is_array()) {
      if (ref->args.size() != s->bounds->size()) {
        throw AnalyzeError(unit.line, "array '" + ref->name + "' has rank " +
                                          std::to_string(s->bounds->size()) +
                                          " but is indexed with " +
                                          std::to_string(ref->args.size()) + " subscripts");
      }
      return make(ArrayRef{ref->name, ref->args});
    }
    if (!intrinsic_head(ref->name)) {
      Symbol& callee = symbols.insert(ref->name, SymbolKind::ExternalFunction);
      callee.original_name = ref->name;
      if (callee.kind == SymbolKind::LocalScalar) callee.kind = SymbolKind::ExternalFunction;
    }
    return make(CallRef{ref->name, ref->args});
  };
  auto same = [](const std::string& n) { return n; };
  Unit out = UnitRewriter{fn, same}.unit(unit);

  for_each_stmt(out.stmts, [&](const Stmt& s) {
    if (auto* a = std::get_if<Assign>(&s.node)) {
      if (auto* call = std::get_if<CallRef>(&a->lhs->node)) {
        throw UnsupportedError(s.line, "'" + call->name +
                                           "' is not an array; statement functions "
                                           "are not supported");
      }
    }
    if (auto* c = std::get_if<Call>(&s.node)) {
      const Symbol* target = symbols.find(c->name);
      if (target && target->is_array()) {
        throw AnalyzeError(s.line, "cannot call array '" + c->name + "'");
      }
      Symbol& callee = symbols.insert(c->name, SymbolKind::ExternalFunction);
      callee.original_name = c->name;
    }
    if (std::holds_alternative<Return>(s.node) && unit.kind == UnitKind::Main) {
      throw AnalyzeError(s.line, "return outside a subprogram");
    }
  });
  return out;
}

UnitPlan collect_locals(Unit unit, SymbolTable symbols) {
  UnitPlan plan;
  std::vector<std::string> assigned;
  auto note = [&](const std::string& name) {
    if (std::find(assigned.begin(), assigned.end(), name) == assigned.end()) {
      assigned.push_back(name);
    }
  };
  for_each_stmt(unit.stmts, [&](const Stmt& s) {
    if (auto* a = std::get_if<Assign>(&s.node)) {
      if (auto* n = std::get_if<NameRef>(&a->lhs->node)) note(n->name);
      if (auto* n = std::get_if<ArrayRef>(&a->lhs->node)) note(n->name);
    }
    if (auto* d = std::get_if<DoLoop>(&s.node)) note(d->var);
  });

  for (const std::string& name : symbols.order()) {
    const Symbol& s = *symbols.find(name);
    if (s.kind == SymbolKind::Common) plan.commons.push_back(name);
  }
  for (const Decl& d : unit.decls) {
    for (const Entity& e : decl_entities(d)) {
      if (e.bounds) plan.array_decls.emplace_back(e.name, *e.bounds);
    }
    if (auto* data = std::get_if<DataDecl>(&d.node)) {
      if (data->name == "i" || data->name == "j" || data->name == "j0" || data->name == "k") {
        throw AnalyzeError(d.line, "data target '" + data->name +
                                       "' clashes with a name used by the fill block");
      }
      const Symbol* s = symbols.find(data->name);
      if (s && s->is_array()) {
        long size = 1;
        bool known = true;
        for (const auto& [lo, hi] : *s->bounds) {
          auto l = constant_int(lo);
          auto h = constant_int(hi);
          if (!l || !h) {
            known = false;
            break;
          }
          size *= std::max(0L, *h - *l + 1);
        }
        if (known && static_cast<long>(data->values.size()) > size) {
          throw AnalyzeError(d.line, "data statement for '" + data->name + "' has " +
                                         std::to_string(data->values.size()) +
                                         " values but the array holds " + std::to_string(size));
        }
      } else if (data->values.size() != 1) {
        throw AnalyzeError(d.line, "data statement gives several values to scalar '" +
                                       data->name + "'");
      }
      plan.data_decls.emplace_back(data->name, data->values);
    }
  }

  if (unit.kind != UnitKind::Main) {
    // Result first, then locals in order of first assignment, then the
    // remaining arrays and scalars in declaration order.
    auto is_local = [&](const std::string& name) {
      const Symbol* s = symbols.find(name);
      return s && (s->kind == SymbolKind::LocalScalar || s->kind == SymbolKind::Array);
    };
    auto push = [&](const std::string& name) {
      if (std::find(plan.locals.begin(), plan.locals.end(), name) == plan.locals.end()) {
        plan.locals.push_back(name);
      }
    };
    if (unit.kind == UnitKind::Function) push(unit.name);
    for (const std::string& name : assigned) {
      if (!symbols.contains(name)) {
        Symbol& s = symbols.insert(name, SymbolKind::LocalScalar);
        s.original_name = name;
      }
      if (is_local(name)) push(name);
    }
    for (const std::string& name : symbols.order()) {
      const Symbol& s = *symbols.find(name);
      if (s.kind == SymbolKind::Array) push(name);
    }
    for (const std::string& name : symbols.order()) {
      const Symbol& s = *symbols.find(name);
      if (s.kind == SymbolKind::LocalScalar) push(name);
    }
  }

  plan.unit = std::move(unit);
  plan.symbols = std::move(symbols);
  return plan;
}

UnitPlan analyze(const Unit& unit) {
  Unit renamed = rename_all(unit);
  Unit looped = resolve_do_bodies(renamed);
  SymbolTable symbols = build_symbols(looped);
  Unit classified = classify_refs(looped, symbols);
  return collect_locals(std::move(classified), std::move(symbols));
}

}  // namespace f2sym
