#include <doctest.h>

#include <random>

#include "f2sym/error.hpp"
#include "f2sym/value.hpp"

using namespace f2sym;

namespace {

Value q(long p, long d) { return Value(Rational(p) / d); }
Value gauss(long re, long im) { return Value(Gaussian{Rational(re), Rational(im)}); }

}  // namespace

TEST_CASE("normalization") {
  CHECK(q(4, 2).is<BigInt>());
  CHECK(format_value(q(6, 4)) == "3/2");
  CHECK(format_value(q(3, -6)) == "-1/2");
  CHECK(gauss(3, 0).is<BigInt>());
  CHECK(gauss(0, 1).is<Gaussian>());
}

TEST_CASE("exact arithmetic") {
  CHECK(format_value(add(q(1, 2), q(1, 3))) == "5/6");
  CHECK(format_value(divide(Value(1), Value(1000))) == "1/1000");
  CHECK(format_value(power(Value(-1), Value(3))) == "-1");
  CHECK(format_value(power(Value(2), Value(-2))) == "1/4");
  CHECK(format_value(power(Value(10), Value(-100))) == "1/1" + std::string(100, '0'));
  CHECK_THROWS_AS(divide(Value(1), Value(0)), EvalError);
  CHECK_THROWS_AS(power(Value(0), Value(-1)), EvalError);
}

TEST_CASE("gaussian arithmetic") {
  Value i = gauss(0, 1);
  Value q1 = add(power(i, Value(2)), power(gauss(1, 0), Value(2)));
  CHECK(q1.is<BigInt>());
  CHECK(format_value(q1) == "0");
  CHECK(format_value(multiply(gauss(1, 2), gauss(3, -1))) == "5+5*I");
  CHECK(format_value(divide(Value(1), i)) == "-I");
  CHECK(format_value(abs_value(gauss(3, 4))) == "5");
}

TEST_CASE("abs of a gaussian squares to the norm") {
  std::mt19937 rng(1);
  for (int k = 0; k < 300; ++k) {
    Rational a(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
    Rational b(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
    Value z(Gaussian{a, b});
    Value norm(Rational(a * a + b * b));
    Value m = abs_value(z);
    if (m.is_exact()) {
      CHECK(same(multiply(m, m), norm));
    } else {
      CHECK(to_double(multiply(m, m)) == doctest::Approx(to_double(norm)));
    }
  }
  CHECK(same(multiply(abs_value(gauss(5, 12)), abs_value(gauss(5, 12))), Value(169)));
}

TEST_CASE("square roots") {
  CHECK(format_value(sqrt_value(Value(4))) == "2");
  CHECK(format_value(sqrt_value(q(9, 16))) == "3/4");
  CHECK(sqrt_value(Value(3)).is<double>());
  CHECK(format_value(sqrt_value(Value(-4))) == "2*I");
  CHECK(format_value(power(Value(8), q(1, 3))) == "2");
}

TEST_CASE("approximate contamination") {
  Value d = add(Value(1), Value(0.5));
  CHECK(d.is<double>());
  CHECK(to_double(d) == 1.5);
  CHECK_THROWS_AS(add(Value(0.5), gauss(0, 1)), EvalError);
}

TEST_CASE("comparisons") {
  CHECK(compare(q(1, 3), q(1, 2)) < 0);
  CHECK(compare(Value(2), Value(1.5)) > 0);
  CHECK(compare(Value(-0.1547), Value(Rational(1, BigInt("1" + std::string(100, '0'))))) < 0);
  CHECK_THROWS_AS(compare(Value(true), Value(1)), EvalError);
  CHECK_THROWS_AS(compare(gauss(1, 1), Value(1)), EvalError);
  CHECK(same(Value(2), q(4, 2)));
  CHECK(same(Value(2), Value(2.0)));
  CHECK_FALSE(same(Value(2), Value(Text{"2"})));
  CHECK(same(Value(true), Value(true)));
  CHECK(same(Value(SymbolValue{"a"}), Value(SymbolValue{"a"})));
}

TEST_CASE("exact elementary values") {
  CHECK(format_value(exp_value(Value(0))) == "1");
  CHECK(format_value(log_value(Value(1))) == "0");
  CHECK(format_value(sin_value(Value(0))) == "0");
  CHECK(format_value(cos_value(Value(0))) == "1");
  CHECK(format_value(arctan_value(Value(0))) == "0");
  CHECK(exp_value(Value(1)).is<double>());
  CHECK_THROWS_AS(log_value(Value(0)), EvalError);
}

TEST_CASE("formatting") {
  CHECK(format_value(Value(0.5)) == "0.5");
  CHECK(format_value(Value(Text{"a b"})) == "a b");
  CHECK(format_value(Value(ListValue{{Value(1), q(1, 2)}})) == "{1, 1/2}");
  CHECK(format_value(Value(false)) == "False");
  CHECK(same(exact_from_string("-3/6"), q(-1, 2)));
}

TEST_CASE("integer powers stay exact") {
  std::mt19937 rng(8);
  for (int k = 0; k < 500; ++k) {
    Value base(static_cast<long>(rng() % 21) - 10);
    Value e(static_cast<long>(rng() % 13) - 6);
    if (same(base, Value(0)) && compare(e, Value(0)) < 0) continue;
    CHECK(power(base, e).is_exact());
  }
}
