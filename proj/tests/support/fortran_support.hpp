#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "f2sym/ast.hpp"

namespace testsupport {

using Rational = boost::multiprecision::cpp_rational;

/// Prints an expression tree in FORTRAN spelling, adding no parentheses of
/// its own: only Paren nodes produce them.
std::string print_fortran(const f2sym::ast::ExprPtr& e);

/// Wraps children in Paren wherever the grammar would otherwise reparse
/// the printed text into a different tree.
f2sym::ast::ExprPtr legalize(const f2sym::ast::ExprPtr& e);

bool ast_equal(const f2sym::ast::ExprPtr& a, const f2sym::ast::ExprPtr& b);

/// Parses an expression on its own, via an assignment wrapper.
f2sym::ast::ExprPtr parse_fortran_expr(const std::string& text);

struct GenOptions {
  int max_depth = 4;
  bool allow_division = true;
  bool allow_logical = true;
  /// Emit Paren nodes at random, in addition to any legalize adds.
  bool random_parens = true;
  std::vector<std::string> names = {"a", "b", "c", "zz"};
};

/// A random numeric expression over `names`, integer literals and
/// + - * / ** with small literal exponents.
f2sym::ast::ExprPtr random_numeric(std::mt19937& rng, const GenOptions& opt, int depth = 0);
/// A random logical expression built from comparisons of numeric ones.
f2sym::ast::ExprPtr random_logical(std::mt19937& rng, const GenOptions& opt, int depth = 0);

using OracleValue = std::variant<Rational, bool>;

/// FORTRAN semantics with exact rational division. nullopt when the value
/// is undefined (zero divisor, non-integer exponent, huge power).
std::optional<OracleValue> oracle_eval(const f2sym::ast::ExprPtr& e,
                                       const std::map<std::string, Rational>& env);

}  // namespace testsupport
