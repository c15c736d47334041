#pragma once

#include <span>
#include <vector>

#include "f2sym/ast.hpp"
#include "f2sym/lexer.hpp"
#include "f2sym/reader.hpp"

namespace f2sym {

/// Splits the statement stream into program units and parses each one.
/// Throws ParseError on anything outside the grammar and UnsupportedError
/// for recognized-but-unsupported statements such as `goto`.
std::vector<ast::Unit> parse_program(std::span<const LogicalStatement> stmts);

/// Parses a complete expression; every token must be consumed.
ast::ExprPtr parse_expr(std::span<const Token> tokens, int line = 0);

/// Parses a `do` statement (tokens include the leading keyword).
ast::DoHeader parse_do(std::span<const Token> tokens, int line = 0);

}  // namespace f2sym
