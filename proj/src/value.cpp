#include "f2sym/value.hpp"

#include <charconv>
#include <cmath>
#include <optional>

#include "f2sym/error.hpp"

namespace f2sym {

namespace mp = boost::multiprecision;

namespace {

[[noreturn]] void fail(const std::string& reason) { throw EvalError("", reason); }

constexpr long kMaxExponent = 100000;
constexpr std::size_t kMaxResultBits = 1u << 22;

Gaussian to_gaussian(const Value& v) {
  if (v.is<Gaussian>()) return v.as<Gaussian>();
  return {to_rational(v), Rational(0)};
}

void require_numeric(const Value& a, const char* op) {
  if (!a.is_numeric()) fail(std::string("non-numeric operand '") + format_value(a) + "' to " + op);
}

template <typename ExactOp, typename ComplexOp, typename ApproxOp>
Value arith(const Value& a, const Value& b, const char* op, ExactOp exact, ComplexOp complex,
            ApproxOp approx) {
  require_numeric(a, op);
  require_numeric(b, op);
  if (a.is<double>() || b.is<double>()) {
    if (a.is<Gaussian>() || b.is<Gaussian>()) {
      fail("approximate complex arithmetic is not supported");
    }
    return Value(approx(to_double(a), to_double(b)));
  }
  if (a.is<Gaussian>() || b.is<Gaussian>()) return complex(to_gaussian(a), to_gaussian(b));
  return exact(to_rational(a), to_rational(b));
}

Value gaussian_mul(const Gaussian& x, const Gaussian& y) {
  return Value(Gaussian{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re});
}

Value gaussian_div(const Gaussian& x, const Gaussian& y) {
  Rational norm = y.re * y.re + y.im * y.im;
  if (norm == 0) fail("division by exact zero");
  return Value(Gaussian{(x.re * y.re + x.im * y.im) / norm, (x.im * y.re - x.re * y.im) / norm});
}

// Floor of the n-th root of a non-negative integer.
BigInt integer_root(const BigInt& x, unsigned n) {
  if (x < 2 || n == 1) return x;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (mp::msb(x) / n + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (mp::pow(mid, n) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::optional<Rational> exact_root(const Rational& r, unsigned n) {
  if (r < 0) return std::nullopt;
  BigInt num = mp::numerator(r);
  BigInt den = mp::denominator(r);
  BigInt rn = integer_root(num, n);
  BigInt rd = integer_root(den, n);
  if (mp::pow(rn, n) != num || mp::pow(rd, n) != den) return std::nullopt;
  return Rational(rn, rd);
}

std::size_t bit_length(const BigInt& v) { return v == 0 ? 0 : mp::msb(mp::abs(v)) + 1; }

void guard_power(std::size_t base_bits, long exponent) {
  long e = exponent < 0 ? -exponent : exponent;
  if (e > kMaxExponent || base_bits * static_cast<std::size_t>(e) > kMaxResultBits) {
    fail("exact power result is too large");
  }
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0 && exponent < 0) fail("division by exact zero");
  guard_power(bit_length(mp::numerator(base)) + bit_length(mp::denominator(base)), exponent);
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  Rational r(mp::pow(mp::numerator(base), e), mp::pow(mp::denominator(base), e));
  return exponent < 0 ? Rational(1) / r : r;
}

Gaussian gaussian_pow(Gaussian base, long exponent) {
  if (exponent < 0) {
    Value inv = gaussian_div({Rational(1), Rational(0)}, base);
    return gaussian_pow(to_gaussian(inv), -exponent);
  }
  guard_power(bit_length(mp::numerator(base.re)) + bit_length(mp::numerator(base.im)) + 2,
              exponent);
  Gaussian result{Rational(1), Rational(0)};
  while (exponent > 0) {
    if (exponent & 1) result = to_gaussian(gaussian_mul(result, base));
    base = to_gaussian(gaussian_mul(base, base));
    exponent >>= 1;
  }
  return result;
}

std::optional<long> small_integer(const Rational& r) {
  if (mp::denominator(r) != 1) return std::nullopt;
  const BigInt& n = mp::numerator(r);
  if (mp::abs(n) > kMaxExponent) fail("exponent is too large for exact evaluation");
  return n.convert_to<long>();
}

std::string format_double(double d) {
  if (std::isnan(d)) return "Indeterminate";
  if (std::isinf(d)) return d > 0 ? "Infinity" : "-Infinity";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, res.ptr);
}

}  // namespace

Value::Value(const Rational& v) {
  if (mp::denominator(v) == 1) {
    data = BigInt(mp::numerator(v));
  } else {
    data = v;
  }
}

Value::Value(const Gaussian& v) {
  if (v.im == 0) {
    *this = Value(v.re);
  } else {
    data = v;
  }
}

Value null_value() { return Value(SymbolValue{"Null"}); }

Rational to_rational(const Value& v) {
  if (v.is<BigInt>()) return Rational(v.as<BigInt>());
  if (v.is<Rational>()) return v.as<Rational>();
  fail("expected an exact real number, got '" + format_value(v) + "'");
}

double to_double(const Value& v) {
  if (v.is<double>()) return v.as<double>();
  if (v.is<BigInt>()) return v.as<BigInt>().convert_to<double>();
  if (v.is<Rational>()) return v.as<Rational>().convert_to<double>();
  fail("expected a real number, got '" + format_value(v) + "'");
}

Value add(const Value& a, const Value& b) {
  return arith(
      a, b, "+", [](const Rational& x, const Rational& y) { return Value(x + y); },
      [](const Gaussian& x, const Gaussian& y) { return Value(Gaussian{x.re + y.re, x.im + y.im}); },
      [](double x, double y) { return x + y; });
}

Value subtract(const Value& a, const Value& b) {
  return arith(
      a, b, "-", [](const Rational& x, const Rational& y) { return Value(x - y); },
      [](const Gaussian& x, const Gaussian& y) { return Value(Gaussian{x.re - y.re, x.im - y.im}); },
      [](double x, double y) { return x - y; });
}

Value multiply(const Value& a, const Value& b) {
  return arith(
      a, b, "*", [](const Rational& x, const Rational& y) { return Value(x * y); }, gaussian_mul,
      [](double x, double y) { return x * y; });
}

Value divide(const Value& a, const Value& b) {
  return arith(
      a, b, "/",
      [](const Rational& x, const Rational& y) {
        if (y == 0) fail("division by exact zero");
        return Value(x / y);
      },
      gaussian_div, [](double x, double y) { return x / y; });
}

Value negate(const Value& a) { return subtract(Value(0), a); }

Value power(const Value& base, const Value& exponent) {
  require_numeric(base, "^");
  require_numeric(exponent, "^");
  if (exponent.is<Gaussian>()) fail("complex exponents are not supported");
  if (base.is<double>() || exponent.is<double>()) {
    if (base.is<Gaussian>()) fail("approximate complex arithmetic is not supported");
    double b = to_double(base);
    double e = to_double(exponent);
    if (b < 0 && std::floor(e) != e) fail("negative base with fractional exponent");
    return Value(std::pow(b, e));
  }
  Rational e = to_rational(exponent);
  if (auto n = small_integer(e)) {
    if (base.is<Gaussian>()) return Value(gaussian_pow(base.as<Gaussian>(), *n));
    return Value(rational_pow(to_rational(base), *n));
  }
  if (base.is<Gaussian>()) fail("fractional powers of complex numbers are not supported");
  Rational b = to_rational(base);
  BigInt den = mp::denominator(e);
  if (den <= 64) {
    if (auto root = exact_root(b, den.convert_to<unsigned>())) {
      return Value(rational_pow(*root, mp::numerator(e).convert_to<long>()));
    }
  }
  if (b < 0) fail("negative base with fractional exponent");
  return Value(std::pow(b.convert_to<double>(), e.convert_to<double>()));
}

int compare(const Value& a, const Value& b) {
  auto real = [](const Value& v) {
    if (!v.is_exact_real() && !v.is<double>()) {
      fail("cannot order non-real value '" + format_value(v) + "'");
    }
  };
  real(a);
  real(b);
  if (a.is_exact_real() && b.is_exact_real()) {
    Rational x = to_rational(a);
    Rational y = to_rational(b);
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  double x = to_double(a);
  double y = to_double(b);
  return x < y ? -1 : (x > y ? 1 : 0);
}

bool same(const Value& a, const Value& b) {
  if (a.is_numeric() && b.is_numeric()) {
    if (a.is<double>() || b.is<double>()) {
      if (a.is<Gaussian>() || b.is<Gaussian>()) return false;
      return to_double(a) == to_double(b);
    }
    Gaussian x = to_gaussian(a);
    Gaussian y = to_gaussian(b);
    return x.re == y.re && x.im == y.im;
  }
  if (a.data.index() != b.data.index()) return false;
  if (a.is<bool>()) return a.as<bool>() == b.as<bool>();
  if (a.is<Text>()) return a.as<Text>().text == b.as<Text>().text;
  if (a.is<SymbolValue>()) return a.as<SymbolValue>().name == b.as<SymbolValue>().name;
  const auto& xs = a.as<ListValue>().items;
  const auto& ys = b.as<ListValue>().items;
  if (xs.size() != ys.size()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!same(xs[i], ys[i])) return false;
  }
  return true;
}

Value sqrt_value(const Value& v) {
  require_numeric(v, "Sqrt");
  if (v.is<double>()) {
    if (v.as<double>() < 0) fail("approximate complex arithmetic is not supported");
    return Value(std::sqrt(v.as<double>()));
  }
  if (v.is<Gaussian>()) fail("square roots of complex numbers are not supported");
  Rational r = to_rational(v);
  if (r < 0) {
    if (auto root = exact_root(-r, 2)) return Value(Gaussian{Rational(0), *root});
    fail("approximate complex arithmetic is not supported");
  }
  if (auto root = exact_root(r, 2)) return Value(*root);
  return Value(std::sqrt(r.convert_to<double>()));
}

Value abs_value(const Value& v) {
  require_numeric(v, "Abs");
  if (v.is<double>()) return Value(std::fabs(v.as<double>()));
  if (v.is<Gaussian>()) {
    const Gaussian& g = v.as<Gaussian>();
    return sqrt_value(Value(g.re * g.re + g.im * g.im));
  }
  Rational r = to_rational(v);
  return Value(r < 0 ? Rational(-r) : r);
}

namespace {

template <typename F>
Value transcendental(const Value& v, const char* name, const Rational& exact_at,
                     const Value& exact_result, F f) {
  require_numeric(v, name);
  if (v.is<Gaussian>()) fail(std::string(name) + " of a complex number is not supported");
  if (v.is_exact_real() && to_rational(v) == exact_at) return exact_result;
  return Value(f(to_double(v)));
}

}  // namespace

Value exp_value(const Value& v) {
  return transcendental(v, "Exp", Rational(0), Value(1), [](double x) { return std::exp(x); });
}

Value log_value(const Value& v) {
  if (v.is_numeric() && !v.is<Gaussian>() && to_double(v) <= 0) {
    fail("Log of a non-positive number is not supported");
  }
  return transcendental(v, "Log", Rational(1), Value(0), [](double x) { return std::log(x); });
}

Value sin_value(const Value& v) {
  return transcendental(v, "Sin", Rational(0), Value(0), [](double x) { return std::sin(x); });
}

Value cos_value(const Value& v) {
  return transcendental(v, "Cos", Rational(0), Value(1), [](double x) { return std::cos(x); });
}

Value arctan_value(const Value& v) {
  return transcendental(v, "ArcTan", Rational(0), Value(0), [](double x) { return std::atan(x); });
}

std::string format_value(const Value& v) {
  struct Visitor {
    std::string operator()(const BigInt& n) const { return n.str(); }
    std::string operator()(const Rational& r) const {
      return mp::numerator(r).str() + "/" + mp::denominator(r).str();
    }
    std::string operator()(const Gaussian& g) const {
      std::string im;
      Rational mag = g.im < 0 ? Rational(-g.im) : g.im;
      im = mag == 1 ? "I" : format_value(Value(mag)) + "*I";
      if (g.re == 0) return g.im < 0 ? "-" + im : im;
      return format_value(Value(g.re)) + (g.im < 0 ? "-" : "+") + im;
    }
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(bool b) const { return b ? "True" : "False"; }
    std::string operator()(const Text& t) const { return t.text; }
    std::string operator()(const SymbolValue& s) const { return s.name; }
    std::string operator()(const ListValue& l) const {
      std::string out = "{";
      for (std::size_t i = 0; i < l.items.size(); ++i) {
        if (i) out += ", ";
        out += format_value(l.items[i]);
      }
      return out + "}";
    }
  };
  return std::visit(Visitor{}, v.data);
}

BigInt parse_digits(std::string_view text) {
  bool negative = !text.empty() && text.front() == '-';
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  while (text.size() > 1 && text.front() == '0') text.remove_prefix(1);
  BigInt v(std::string(text.empty() ? "0" : text));
  return negative ? BigInt(-v) : v;
}

Value exact_from_string(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Value(parse_digits(text));
  return Value(Rational(parse_digits(text.substr(0, slash))) / parse_digits(text.substr(slash + 1)));
}

}  // namespace f2sym
