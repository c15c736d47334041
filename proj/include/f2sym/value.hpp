#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Runtime values of the evaluator: an exact numeric tower (integers,
// rationals, Gaussian rationals) with a double-precision escape hatch.

namespace f2sym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Gaussian {
  Rational re;
  Rational im;
};

struct Text {
  std::string text;
};

/// An unevaluated symbol, e.g. an unbound name or a missing array element.
struct SymbolValue {
  std::string name;
};

struct Value;

struct ListValue {
  std::vector<Value> items;
};

struct Value {
  std::variant<BigInt, Rational, Gaussian, double, bool, Text, SymbolValue,
               ListValue>
      data;

  Value() : data(SymbolValue{"Null"}) {}
  Value(BigInt v) : data(std::move(v)) {}
  Value(long v) : data(BigInt(v)) {}
  Value(int v) : data(BigInt(v)) {}
  Value(double v) : data(v) {}
  Value(bool v) : data(v) {}
  Value(Text v) : data(std::move(v)) {}
  Value(SymbolValue v) : data(std::move(v)) {}
  Value(ListValue v) : data(std::move(v)) {}
  /// Normalizes: denominator one becomes an integer.
  Value(const Rational& v);
  /// Normalizes: zero imaginary part drops to the real tower.
  Value(const Gaussian& v);

  template <typename T>
  bool is() const { return std::holds_alternative<T>(data); }
  template <typename T>
  const T& as() const { return std::get<T>(data); }

  bool is_exact_real() const { return is<BigInt>() || is<Rational>(); }
  bool is_exact() const { return is_exact_real() || is<Gaussian>(); }
  bool is_numeric() const { return is_exact() || is<double>(); }
};

Value null_value();

/// The value as an exact rational. Requires is_exact_real().
Rational to_rational(const Value& v);
/// Requires a real numeric value.
double to_double(const Value& v);

Value add(const Value& a, const Value& b);
Value subtract(const Value& a, const Value& b);
Value multiply(const Value& a, const Value& b);
Value divide(const Value& a, const Value& b);
Value power(const Value& base, const Value& exponent);
Value negate(const Value& a);

/// -1, 0 or 1. Real numeric operands only.
int compare(const Value& a, const Value& b);
/// Structural equality, numeric across the tower.
bool same(const Value& a, const Value& b);

Value sqrt_value(const Value& v);
Value abs_value(const Value& v);
Value exp_value(const Value& v);
Value log_value(const Value& v);
Value sin_value(const Value& v);
Value cos_value(const Value& v);
Value arctan_value(const Value& v);

/// Print form: integers in decimal, rationals as p/q, doubles as the
/// shortest round-trip decimal, text verbatim.
std::string format_value(const Value& v);
/// Decimal digits, optionally signed. Leading zeros are not an octal prefix.
BigInt parse_digits(std::string_view text);

/// Parses a decimal integer or p/q.
Value exact_from_string(const std::string& text);

}  // namespace f2sym
