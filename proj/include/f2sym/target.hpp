#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

// Target-language tree shared by the renderer and the evaluator.

namespace f2sym::target {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinOpKind {
  Plus, Minus, Times, Divide, Power,
  SameQ, UnsameQ, Less, LessEqual, Greater, GreaterEqual,
  And, Or,
};

enum class UnOpKind { Minus, Not };

/// Decimal integer, optional leading '-'.
struct ExactInt { std::string digits; };
/// mantissa * 10^(-frac_len) * 10^(exponent).
struct ScaledLiteral {
  std::string mantissa;
  std::size_t frac_len = 0;
  std::optional<long> exponent;
};
struct ComplexPair { ExprPtr re; ExprPtr im; };
struct Sym { std::string name; };
struct Str { std::string text; };
/// head[args]: builtins such as Sqrt or Length, and user calls.
struct Apply { std::string head; std::vector<ExprPtr> args; };
/// expr[[indices]]
struct Part { ExprPtr expr; std::vector<ExprPtr> indices; };
/// array[indices], an indexed value of a symbol.
struct ElementRef { ExprPtr array; std::vector<ExprPtr> indices; };
struct BinOp { BinOpKind op; ExprPtr lhs; ExprPtr rhs; };
struct UnOp { UnOpKind op; ExprPtr operand; };
struct ParenGroup { ExprPtr inner; };
struct BoolLit { bool value; };
/// Sequence@@list in argument position.
struct SequenceSplice { ExprPtr list; };
struct ListExpr { std::vector<ExprPtr> items; };

struct Expr {
  std::variant<ExactInt, ScaledLiteral, ComplexPair, Sym, Str, Apply, Part,
               ElementRef, BinOp, UnOp, ParenGroup, BoolLit, SequenceSplice,
               ListExpr>
      node;
};

template <typename T>
ExprPtr make(T node) {
  return std::make_shared<const Expr>(Expr{std::move(node)});
}

inline ExprPtr sym(std::string name) { return make(Sym{std::move(name)}); }
inline ExprPtr integer(long v) { return make(ExactInt{std::to_string(v)}); }
inline ExprPtr binop(BinOpKind op, ExprPtr l, ExprPtr r) {
  return make(BinOp{op, std::move(l), std::move(r)});
}
inline ExprPtr apply(std::string head, std::vector<ExprPtr> args) {
  return make(Apply{std::move(head), std::move(args)});
}
inline ExprPtr part(ExprPtr e, std::vector<ExprPtr> idx) {
  return make(Part{std::move(e), std::move(idx)});
}

struct Stmt;
using StmtList = std::vector<Stmt>;

struct SetStmt { ExprPtr lhs; ExprPtr rhs; };
struct IfStmt {
  ExprPtr cond;
  StmtList then_body;
  std::optional<StmtList> else_body;
};
/// For[var=init, cond, var+=incr_amount, body]
struct ForStmt {
  ExprPtr var;
  ExprPtr init;
  ExprPtr cond;
  ExprPtr incr_amount;
  StmtList body;
};
/// Do[body, {iter, lo, hi}]; the iterator is scoped to the loop.
struct DoLoopStmt {
  ExprPtr iter;
  ExprPtr lo;
  ExprPtr hi;
  StmtList body;
};
struct WhileStmt { ExprPtr cond; StmtList body; };
/// target++
struct IncrStmt { ExprPtr target; };
/// target+=amount
struct AddToStmt { ExprPtr target; ExprPtr amount; };
struct PrintStmt { std::vector<ExprPtr> args; };
struct CallStmt { std::string name; std::vector<ExprPtr> args; };
struct ReturnStmt { ExprPtr expr; };
struct ModuleBlock { std::vector<std::string> locals; StmtList body; };
/// SetAttributes[name,HoldAll]; name[p_,...]:=Module[...]
struct DefineStmt {
  std::string name;
  std::vector<std::string> params;
  ModuleBlock body;
  bool hold_all = true;
};
/// F2MmaDimensions[array]={{lo, hi},...}
struct DimsStmt {
  ExprPtr array;
  std::vector<std::pair<ExprPtr, ExprPtr>> bounds;
};
struct CommentStmt { std::string text; };
/// DATA initialization: the fill module that runs it, plus its inputs.
struct DataFillBlock {
  std::string array;
  std::vector<ExprPtr> values;
  ModuleBlock fill;
};

struct Stmt {
  std::variant<SetStmt, IfStmt, ForStmt, DoLoopStmt, WhileStmt, IncrStmt,
               AddToStmt, PrintStmt, CallStmt, ReturnStmt, ModuleBlock,
               DefineStmt, DimsStmt, CommentStmt, DataFillBlock>
      node;
};

const char* spelling(BinOpKind op);

}  // namespace f2sym::target
