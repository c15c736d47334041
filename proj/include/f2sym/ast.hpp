#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "f2sym/lexer.hpp"

// Syntax tree for the supported fixed-form subset.

namespace f2sym::ast {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinaryOp {
  Add, Sub, Mul, Div, Pow,
  Eq, Ne, Lt, Le, Gt, Ge,
  And, Or, Eqv, Neqv,
};

enum class UnaryOp { Neg, Plus, Not };

struct IntLit { std::string digits; };
struct RealLit { RealParts parts; };
/// Complex constant. Each component is an IntLit or RealLit, optionally
/// under one Neg/Plus.
struct ComplexLit { ExprPtr re; ExprPtr im; };
struct LogicalLit { bool value; };
struct StringLit { std::string value; };
struct NameRef { std::string name; };
/// `name(args)` before the analyzer decides between element and call.
struct ParenRef { std::string name; std::vector<ExprPtr> args; };
struct ArrayRef { std::string name; std::vector<ExprPtr> indices; };
struct CallRef { std::string name; std::vector<ExprPtr> args; };
struct Unary { UnaryOp op; ExprPtr operand; };
struct Binary { BinaryOp op; ExprPtr lhs; ExprPtr rhs; };
/// Parentheses written in the source.
struct Paren { ExprPtr inner; };

struct Expr {
  std::variant<IntLit, RealLit, ComplexLit, LogicalLit, StringLit, NameRef,
               ParenRef, ArrayRef, CallRef, Unary, Binary, Paren>
      node;
};

template <typename T>
ExprPtr make(T node) {
  return std::make_shared<const Expr>(Expr{std::move(node)});
}

struct Stmt;
using StmtList = std::vector<Stmt>;

struct Assign { ExprPtr lhs; ExprPtr rhs; };
struct LogicalIf { ExprPtr cond; std::shared_ptr<const Stmt> stmt; };
struct IfArm { ExprPtr cond; StmtList body; };
struct BlockIf { std::vector<IfArm> arms; std::optional<StmtList> else_body; };
/// `do <label> var = from, to [, step]`; the body is attached by the analyzer.
struct DoHeader {
  int terminal_label;
  std::string var;
  ExprPtr from;
  ExprPtr to;
  ExprPtr step;  // null when absent
};
/// A DO loop after label resolution.
struct DoLoop {
  std::string var;
  ExprPtr from;
  ExprPtr to;
  ExprPtr step;  // null when absent
  StmtList body;
};
/// `print *, items`; string items are StringLit expressions.
struct Print { std::vector<ExprPtr> items; };
struct Call { std::string name; std::vector<ExprPtr> args; };
struct Return {};
struct Continue {};
struct Comment { std::string text; };

struct Stmt {
  std::optional<int> label;
  int line = 0;
  std::variant<Assign, LogicalIf, BlockIf, DoHeader, DoLoop, Print, Call,
               Return, Continue, Comment>
      node;
};

struct Entity {
  std::string name;
  int line = 0;
  /// Present for arrays. A bound with no lower part has lower = IntLit 1.
  std::optional<std::vector<std::pair<ExprPtr, ExprPtr>>> bounds;
};

struct TypeDecl { std::string type_name; std::vector<Entity> entities; };
struct DimensionDecl { std::vector<Entity> entities; };
struct CommonDecl { std::string block_name; std::vector<Entity> entities; };
struct DataDecl { std::string name; std::vector<ExprPtr> values; };

struct Decl {
  int line = 0;
  std::variant<TypeDecl, DimensionDecl, CommonDecl, DataDecl, Comment> node;
};

enum class UnitKind { Main, Subroutine, Function };

struct Unit {
  UnitKind kind = UnitKind::Main;
  std::string name;         // empty for Main
  std::string result_type;  // Function only; empty when untyped
  std::vector<std::string> params;
  int line = 0;
  std::vector<Comment> leading_comments;
  std::vector<Decl> decls;
  StmtList stmts;
  std::vector<Comment> trailing_comments;
};

bool is_relational(BinaryOp op);
const char* fortran_spelling(BinaryOp op);

}  // namespace f2sym::ast
