#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "f2sym/error.hpp"
#include "f2sym/lexer.hpp"
#include "f2sym/parser.hpp"
#include "f2sym/reader.hpp"
#include "support/fortran_support.hpp"

using namespace f2sym;
using namespace f2sym::ast;
using testsupport::ast_equal;
using testsupport::parse_fortran_expr;
using testsupport::print_fortran;

namespace {

std::vector<Unit> parse_text(const std::string& text) { return parse_program(read_source(text)); }

std::string golden_input() {
  std::ifstream in(F2SYM_TEST_DATA "/golden_input.f");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExprPtr num(const char* d) { return make(IntLit{d}); }
ExprPtr name(const char* n) { return make(NameRef{n}); }
ExprPtr bin(BinaryOp op, ExprPtr l, ExprPtr r) { return make(Binary{op, l, r}); }

DoHeader do_header(const std::string& text) {
  auto ts = tokenize(text);
  return parse_do(ts);
}

}  // namespace

TEST_CASE("golden input has three units") {
  auto units = parse_text(golden_input());
  REQUIRE(units.size() == 3);
  CHECK(units[0].kind == UnitKind::Subroutine);
  CHECK(units[0].name == "sub1");
  CHECK(units[0].params == std::vector<std::string>{"x"});
  CHECK(units[1].kind == UnitKind::Function);
  CHECK(units[1].name == "fun");
  CHECK(units[1].result_type == "integer");
  CHECK(units[1].params == std::vector<std::string>{"x", "y"});
  CHECK(units[2].kind == UnitKind::Main);
  CHECK(units[2].params.empty());
}

TEST_CASE("a lone end is an empty main program") {
  auto units = parse_text("      end\n");
  REQUIRE(units.size() == 1);
  CHECK(units[0].kind == UnitKind::Main);
  CHECK(units[0].stmts.empty());
}

TEST_CASE("goto is unsupported at its line") {
  try {
    parse_text("      x=1\n      goto 10\n10    continue\n      end\n");
    FAIL("no error");
  } catch (const UnsupportedError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("other unsupported statements") {
  CHECK_THROWS_AS(parse_text("      read *, x\n      end\n"), UnsupportedError);
  CHECK_THROWS_AS(parse_text("      stop\n      end\n"), UnsupportedError);
}

TEST_CASE("syntax errors") {
  CHECK_THROWS_AS(parse_text("      x=1+\n      end\n"), ParseError);
  CHECK_THROWS_AS(parse_text("      x=1\n"), ParseError);
  CHECK_THROWS_AS(parse_text("      x=1\n      integer y\n      end\n"), ParseError);
  CHECK_THROWS_AS(parse_text("      if (x) then\n      end\n"), ParseError);
  CHECK_THROWS_AS(parse_text("      endif\n      end\n"), ParseError);
  try {
    parse_text("      x=(1+2\n      end\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("complex constants") {
  ExprPtr e = parse_fortran_expr("(0,1)**2+(1,0)**2");
  auto complex = [](const char* re, const char* im) { return make(ComplexLit{num(re), num(im)}); };
  ExprPtr want = bin(BinaryOp::Add, bin(BinaryOp::Pow, complex("0", "1"), num("2")),
                     bin(BinaryOp::Pow, complex("1", "0"), num("2")));
  CHECK(ast_equal(e, want));
  CHECK(std::holds_alternative<ComplexLit>(parse_fortran_expr("(-1.5,+2)")->node));
  CHECK(std::holds_alternative<Paren>(parse_fortran_expr("(x)")->node));
}

TEST_CASE("eqv binds tighter than and") {
  ExprPtr e = parse_fortran_expr("t.eq.0 .and. flag.eqv..true.");
  ExprPtr want = bin(BinaryOp::And, bin(BinaryOp::Eq, name("t"), num("0")),
                     bin(BinaryOp::Eqv, name("flag"), make(LogicalLit{true})));
  CHECK(ast_equal(e, want));
}

TEST_CASE("unary minus is looser than power; power is right associative") {
  CHECK(ast_equal(parse_fortran_expr("-x**2"),
                  make(Unary{UnaryOp::Neg, bin(BinaryOp::Pow, name("x"), num("2"))})));
  CHECK(ast_equal(parse_fortran_expr("(-x)**3"),
                  bin(BinaryOp::Pow, make(Paren{make(Unary{UnaryOp::Neg, name("x")})}), num("3"))));
  CHECK(ast_equal(parse_fortran_expr("a**b**c"),
                  bin(BinaryOp::Pow, name("a"), bin(BinaryOp::Pow, name("b"), name("c")))));
  CHECK(ast_equal(parse_fortran_expr("a-b-c"),
                  bin(BinaryOp::Sub, bin(BinaryOp::Sub, name("a"), name("b")), name("c"))));
}

TEST_CASE("single identifier") { CHECK(ast_equal(parse_fortran_expr("x"), name("x"))); }

TEST_CASE("dangling operator") {
  CHECK_THROWS_AS(parse_fortran_expr("x+"), ParseError);
  CHECK_THROWS_AS(parse_fortran_expr("x.lt.y.lt.z"), ParseError);
}

TEST_CASE("do headers") {
  DoHeader a = do_header("do 10, x=0,n");
  CHECK(a.terminal_label == 10);
  CHECK(a.var == "x");
  CHECK(ast_equal(a.from, num("0")));
  CHECK(ast_equal(a.to, name("n")));
  CHECK(a.step == nullptr);
  DoHeader b = do_header("do 20 x=n,0,-1");
  CHECK(b.terminal_label == 20);
  CHECK(ast_equal(b.step, make(Unary{UnaryOp::Neg, num("1")})));
  DoHeader c = do_header("do 5 i=1,1");
  CHECK(c.terminal_label == 5);
  CHECK(c.var == "i");
  CHECK_THROWS_AS(do_header("do 5 i=1"), ParseError);
  CHECK_THROWS_AS(do_header("do 5 =1,2"), ParseError);
}

TEST_CASE("declarations") {
  auto units = parse_text(
      "      integer m1(2), m2(2:4), m3(x:y)\n"
      "      common /t/ r\n"
      "      data m1 /11,22/\n"
      "      end\n");
  REQUIRE(units[0].decls.size() == 3);
  const auto& t = std::get<TypeDecl>(units[0].decls[0].node);
  CHECK(t.type_name == "integer");
  REQUIRE(t.entities.size() == 3);
  REQUIRE(t.entities[0].bounds);
  CHECK(ast_equal((*t.entities[0].bounds)[0].first, num("1")));
  CHECK(ast_equal((*t.entities[0].bounds)[0].second, num("2")));
  CHECK(ast_equal((*t.entities[1].bounds)[0].first, num("2")));
  CHECK(ast_equal((*t.entities[2].bounds)[0].first, name("x")));
  const auto& c = std::get<CommonDecl>(units[0].decls[1].node);
  CHECK(c.block_name == "t");
  CHECK(c.entities[0].name == "r");
  const auto& d = std::get<DataDecl>(units[0].decls[2].node);
  CHECK(d.name == "m1");
  CHECK(d.values.size() == 2);
}

TEST_CASE("data repeat counts") {
  auto units = parse_text("      integer a(4)\n      data a /3*7, -1/\n      end\n");
  const auto& d = std::get<DataDecl>(units[0].decls[1].node);
  REQUIRE(d.values.size() == 4);
  CHECK(ast_equal(d.values[0], num("7")));
  CHECK(ast_equal(d.values[2], num("7")));
}

TEST_CASE("block if with else if chain") {
  auto units = parse_text(
      "      if (a) then\n"
      "      x=1\n"
      "      else if (b) then\n"
      "      x=2\n"
      "      elseif (c) then\n"
      "      x=3\n"
      "      else\n"
      "      x=4\n"
      "      endif\n"
      "      end\n");
  REQUIRE(units[0].stmts.size() == 1);
  const auto& b = std::get<BlockIf>(units[0].stmts[0].node);
  CHECK(b.arms.size() == 3);
  REQUIRE(b.else_body);
  CHECK(b.else_body->size() == 1);
}

TEST_CASE("printer and parser round trip") {
  std::mt19937 rng(2024);
  testsupport::GenOptions opt;
  opt.names = {"a", "b", "x_1", "zz9"};
  for (int i = 0; i < 2000; ++i) {
    ExprPtr e = testsupport::legalize(i % 2 ? testsupport::random_numeric(rng, opt)
                                            : testsupport::random_logical(rng, opt));
    std::string text = print_fortran(e);
    INFO(text);
    ExprPtr back = parse_fortran_expr(text);
    CHECK(ast_equal(back, e));
  }
}
