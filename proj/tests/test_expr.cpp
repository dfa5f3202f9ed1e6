#include <doctest.h>

#include "hopftrees/errors.hpp"
#include "hopftrees/expr.hpp"

#include <random>

using namespace hopftrees;

namespace {
Expr E(const char* s, Algebra a) { return parse_expr(s, a); }

std::size_t parse_error_offset(const char* s, Algebra a) {
  try {
    parse_expr(s, a);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}
}  // namespace

TEST_CASE("parsing tree expressions") {
  auto x = E("(<><>) + 2*(<<>>)", Algebra::ck);
  CKPoly expect(Forest(RootedTree::from_bba("<><>")));
  expect.add_term(Forest(RootedTree::from_bba("<<>>")), PolyP(2));
  CHECK(std::get<1>(x.value()) == expect);
  CHECK(x.render() == "2*(<<>>) + (<><>)");
  // gl canonicalizes, pl keeps the embedding.
  CHECK(E("(<<>><>)", Algebra::gl).render() == "(<><<>>)");
  CHECK(E("(<<>><>)", Algebra::pl).render() == "(<<>><>)");
  CHECK(E("(<>)(<><>)", Algebra::foissy).render() == "(<>)(<><>)");
  CHECK(E("(<>) (<><>)", Algebra::ck) == E("(<><>)(<>)", Algebra::ck));
  CHECK(E("1", Algebra::ck).render() == "1");
  CHECK(E("3", Algebra::foissy).render() == "3*1");
  CHECK(E("-1/2*(<>) - (<>)", Algebra::gl).render() == "-3/2*(<>)");
}

TEST_CASE("parsing symmetric-function expressions") {
  CHECK(E("M[2,1,1]", Algebra::qsym).render() == "M[2,1,1]");
  CHECK(E("e[2]", Algebra::sym).render() == "m[1,1]");
  CHECK(E("h[2]", Algebra::sym).render() == "m[1,1] + m[2]");
  CHECK(E("m[1]m[1]", Algebra::sym) == E("2*m[1,1] + m[2]", Algebra::sym));
  CHECK(E("E[2]E[1]", Algebra::nsym).render() == "E[2,1]");
  CHECK(E("m[]", Algebra::sym).render() == "1");
}

TEST_CASE("polynomial coefficients") {
  auto x = E("(-1/2*p^2 + 1/2*p^3)*(<><<>>)", Algebra::pl);
  CHECK(!x.is_rational());
  CHECK(x.render() == "(-1/2*p^2 + 1/2*p^3)*(<><<>>)");
  CHECK(E("p*(<>) + p^2 (<>)", Algebra::ck).render() == "(p + p^2)*(<>)");
  CHECK(expr_evaluate(x, Rational(3)).render() == "9*(<><<>>)");
  CHECK(E("p*p[2]", Algebra::sym).render() == "(p)*m[2]");
}

TEST_CASE("tensors") {
  auto t = E("(<>) ⊗ 1 + 1 ⊗ (<>)", Algebra::ck);
  CHECK(t.is_tensor());
  CHECK(t.render() == "1 ⊗ (<>) + (<>) ⊗ 1");
  CHECK(expr_coproduct(E("()", Algebra::ck)) == E("() ⊗ 1 + 1 ⊗ ()", Algebra::ck));
  CHECK(parse_error_offset("(<>) + 1 ⊗ (<>)", Algebra::ck) == 7);
}

TEST_CASE("parse errors carry offsets") {
  CHECK(parse_error_offset("(<>", Algebra::ck) == 3);
  CHECK(parse_error_offset("(<>>)", Algebra::ck) == 3);
  CHECK(parse_error_offset("(<>) +", Algebra::ck) == 6);
  CHECK(parse_error_offset("M[2]", Algebra::sym) == 0);
  CHECK(parse_error_offset("m[2,0]", Algebra::sym) == 4);
  CHECK(parse_error_offset("(<>)(<>)", Algebra::gl) == 0);
  CHECK(parse_error_offset("1/0*(<>)", Algebra::ck) == 2);
  CHECK(parse_error_offset("m[1]", Algebra::ck) == 0);
  CHECK(parse_error_offset("", Algebra::ck) == 0);
}

TEST_CASE("operations") {
  CHECK(expr_product(E("(<><>)", Algebra::gl), E("(<>)", Algebra::gl)).render() ==
        "(<<><>>) + 2*(<><<>>) + (<><><>)");
  CHECK(expr_antipode(E("()", Algebra::ck)).render() == "-()");
  CHECK(expr_antipode(E("E[1]", Algebra::nsym)).render() == "-E[1]");
  CHECK(expr_pair(E("(<><>)", Algebra::gl), E("(<><>)", Algebra::gl)) == PolyP(2));
  CHECK(expr_pair(E("M[2,1]", Algebra::qsym), E("E[2,1] + E[3]", Algebra::nsym)) == PolyP(1));
  CHECK(expr_pair(E("h[2]", Algebra::sym), E("m[2]", Algebra::sym)) == PolyP(1));
  CHECK(expr_map("taustar", E("m[2,1,1]", Algebra::sym)).render() == "M[1,1,2] + M[1,2,1] + M[2,1,1]");
  CHECK(expr_map("phi", E("e[2]", Algebra::sym)).render() == "(<>)");
  CHECK(expr_map("Phi", E("p*E[1,2]", Algebra::nsym)).render() == "(p)*()(<>)");
  CHECK_THROWS_AS(expr_map("phi", E("M[1]", Algebra::qsym)), DomainError);
  CHECK_THROWS_AS(expr_map("psi", E("m[1]", Algebra::sym)), DomainError);
  CHECK_THROWS_AS(expr_product(E("(<>)", Algebra::gl), E("(<>)", Algebra::ck)), DomainError);
}

TEST_CASE("golden lines") {
  CHECK(golden_check("gl product : (<><>) : (<>) = (<<><>>) + 2*(<><<>>) + (<><><>)\n").passed());
  CHECK(golden_check("pl cp : (<><<>>) = -1/2*p^2 + 1/2*p^3").passed());
  CHECK_FALSE(golden_check("gl product : (<><>) : (<>) = (<<><>>) + 3*(<><<>>) + (<><><>)").passed());
  CHECK_FALSE(golden_check("gl product (<>)").passed());
  CHECK(golden_check("# comment\n\nsym map taustar : m[1] = M[1]").passed());
}

// Random expressions in every algebra: render then reparse gives the same value.
TEST_CASE("render round trip") {
  std::mt19937 rng(7);
  const Algebra algebras[] = {Algebra::gl, Algebra::ck, Algebra::pl, Algebra::foissy,
                              Algebra::sym, Algebra::qsym, Algebra::nsym};
  for (Algebra a : algebras) {
    for (int trial = 0; trial < 40; ++trial) {
      const int degree = static_cast<int>(rng() % 4);
      auto basis = enumerate_basis(a, degree);
      std::string text;
      const int terms = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < terms; ++k) {
        int num = static_cast<int>(rng() % 6) - 3;
        if (num >= 0) ++num;
        const int den = 1 + static_cast<int>(rng() % 3);
        if (k > 0) text += num < 0 ? " - " : " + ";
        else if (num < 0) text += "-";
        text += std::to_string(std::abs(num)) + "/" + std::to_string(den);
        if (rng() % 2) text += "*p^" + std::to_string(rng() % 3);
        text += "*" + basis[rng() % basis.size()];
      }
      auto x = parse_expr(text, a);
      // "0" reparses as the zero element, not a zero tensor.
      if (x.is_zero()) continue;
      CHECK_MESSAGE(parse_expr(x.render(), a) == x, text);
      auto dx = expr_coproduct(x);
      CHECK_MESSAGE(parse_expr(dx.render(), a) == dx, dx.render());
    }
  }
}
