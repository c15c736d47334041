#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "f2sym/ast.hpp"

namespace f2sym {

using Bounds = std::vector<std::pair<ast::ExprPtr, ast::ExprPtr>>;

enum class SymbolKind {
  Parameter,
  LocalScalar,
  Array,
  Common,
  FunctionResult,
  ExternalFunction,
};

const char* to_string(SymbolKind kind);

struct Symbol {
  std::string original_name;
  std::string renamed;
  SymbolKind kind = SymbolKind::LocalScalar;
  /// Set for arrays, including dummy and common arrays.
  std::optional<Bounds> bounds;
  std::string common_block;

  bool is_array() const { return bounds.has_value(); }
};

/// Symbols keyed by renamed spelling, remembering first-declaration order.
class SymbolTable {
 public:
  Symbol& insert(std::string renamed, SymbolKind kind);
  Symbol* find(std::string_view renamed);
  const Symbol* find(std::string_view renamed) const;
  bool contains(std::string_view renamed) const { return find(renamed) != nullptr; }
  const std::vector<std::string>& order() const { return order_; }

 private:
  std::map<std::string, Symbol, std::less<>> symbols_;
  std::vector<std::string> order_;
};

struct UnitPlan {
  ast::Unit unit;
  SymbolTable symbols;
  std::vector<std::string> locals;
  std::vector<std::string> commons;
  std::vector<std::pair<std::string, Bounds>> array_decls;
  std::vector<std::pair<std::string, std::vector<ast::ExprPtr>>> data_decls;
};

/// Every `_` becomes `TTT`.
std::string rename_identifier(std::string_view name);

/// Applies rename_identifier to every name in the unit. Throws AnalyzeError
/// when two distinct source names would collapse onto one target name.
ast::Unit rename_all(const ast::Unit& unit);

/// Replaces DoHeader statements by DoLoop statements whose bodies run up to
/// the labelled terminal statement. A terminal `continue` is dropped.
ast::Unit resolve_do_bodies(const ast::Unit& unit);

SymbolTable build_symbols(const ast::Unit& unit);

/// Turns every ParenRef into an ArrayRef or a CallRef, registering called
/// user routines as ExternalFunction.
ast::Unit classify_refs(const ast::Unit& unit, SymbolTable& symbols);

UnitPlan collect_locals(ast::Unit unit, SymbolTable symbols);

/// The full pass: rename, resolve loops, build symbols, classify, collect.
UnitPlan analyze(const ast::Unit& unit);

}  // namespace f2sym
