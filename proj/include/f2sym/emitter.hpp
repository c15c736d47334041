#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "f2sym/analyzer.hpp"
#include "f2sym/ast.hpp"
#include "f2sym/lexer.hpp"
#include "f2sym/target.hpp"

namespace f2sym {

/// Exact rewriting of a decimal literal: mantissa = all digits with leading
/// zeros trimmed, scaled by 10^(-fraction length) and 10^(exponent). Yields
/// a bare ExactInt when neither factor is present.
target::ExprPtr convert_real_literal(const RealParts& parts);

target::BinOpKind map_operator(ast::BinaryOp op);
target::UnOpKind map_operator(ast::UnaryOp op);

std::optional<std::string_view> map_intrinsic(std::string_view name);

target::ExprPtr lower_expr(const ast::ExprPtr& expr);

/// Lowers one analyzed statement. Free-standing `continue` lowers to
/// nothing. `unit_name` is the value every `return` hands back.
target::StmtList lower_stmt(const ast::Stmt& stmt, std::string_view unit_name);

/// The column-major DATA fill module for `array`, which must already have
/// its F2MmaDimensions entry.
target::DataFillBlock expand_data(const std::string& array,
                                  std::vector<target::ExprPtr> values);

target::StmtList emit_unit(const UnitPlan& plan);

std::string render_expr(const target::ExprPtr& expr);
std::string render(const target::StmtList& stmts);

}  // namespace f2sym
