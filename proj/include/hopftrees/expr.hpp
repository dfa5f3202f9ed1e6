#pragma once

// Textual expressions over any of the seven algebras: parsing, rendering,
// and dispatch of the algebra operations, maps and pairings by name.
//
// Grammar (whitespace between tokens is ignored):
//   expr     := term (('+' | '-') term)*
//   term     := ['-'] coeff ['*'] monomial | ['-'] coeff | ['-'] monomial
//   coeff    := integer ['/' integer] | 'p' ['^' integer] | '(' poly ')'
//   monomial := factor [' ⊗ ' factor]
//   factor   := '1' | treeLit+ | symtoken+
//   treeLit  := '(' bba ')'
//   symtoken := ('m' | 'e' | 'h' | 'p' | 'M' | 'E') '[' ints ']'
// Juxtaposed factors multiply: tree literals form a forest in ck and foissy;
// gl and pl accept a single tree per monomial.

#include "hopftrees/dse.hpp"
#include "hopftrees/report.hpp"
#include "hopftrees/symfun.hpp"
#include "hopftrees/tree_algebras.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace hopftrees {

enum class Algebra { gl, ck, pl, foissy, sym, qsym, nsym };

const char* algebra_name(Algebra a);
std::optional<Algebra> algebra_from_name(std::string_view s);

class Expr {
 public:
  // Alternatives 0..6 are elements of the algebras in enum order; 7..13 are
  // elements of their tensor squares.
  using Value = std::variant<LinComb<RootedTree, PolyP>, LinComb<Forest, PolyP>, LinComb<PlanarTree, PolyP>,
                             LinComb<OrderedForest, PolyP>, LinComb<Partition, PolyP>,
                             LinComb<Composition, PolyP>, LinComb<EWord, PolyP>,
                             TensorElem<RootedTree, PolyP>, TensorElem<Forest, PolyP>,
                             TensorElem<PlanarTree, PolyP>, TensorElem<OrderedForest, PolyP>,
                             TensorElem<Partition, PolyP>, TensorElem<Composition, PolyP>,
                             TensorElem<EWord, PolyP>>;

  Expr() = default;
  explicit Expr(Value v) : v_(std::move(v)) {}

  Algebra algebra() const { return static_cast<Algebra>(v_.index() % 7); }
  bool is_tensor() const { return v_.index() >= 7; }
  // True when every coefficient is a rational constant.
  bool is_rational() const;
  bool is_zero() const;
  const Value& value() const { return v_; }

  std::string render() const;
  // {"algebra": ..., "tensor": bool, "terms": [{"basis" | "left","right", "coeff"}]}
  std::string to_json() const;

  friend bool operator==(const Expr&, const Expr&) = default;

 private:
  Value v_;
};

// Throws ParseError with the offset of the offending character.
Expr parse_expr(std::string_view s, Algebra a);

// Both operands must belong to the same algebra; tensor operands are rejected.
Expr expr_product(const Expr& a, const Expr& b);
Expr expr_coproduct(const Expr& a);
Expr expr_antipode(const Expr& a);
// The algebra's own inner product, or the QSym/NSym pairing (M_I, E_J) = delta
// when one side is qsym and the other nsym.
PolyP expr_pair(const Expr& a, const Expr& b);
// phi, Phi, rho, phistar, Phistar, rhostar, taustar, tau.
Expr expr_map(std::string_view name, const Expr& a);
// Substitutes a rational value for p.
Expr expr_evaluate(const Expr& a, const Rational& p);

// Every basis element of degree n, summed with coefficient 1 (as a listing).
std::vector<std::string> enumerate_basis(Algebra a, int n);

Expr expr_of(const GLElem& x);
Expr expr_of(const CKPoly& x);
Expr expr_of(const FPoly& x);

// Lines "<algebra> <op> : <expr> [: <expr2>] = <expected>", op one of
// product, coproduct, antipode, pair, "map NAME", cp. Blank lines and lines
// starting with '#' are skipped. Each line is one report entry; comparison is
// on the rendered text.
Report golden_check(std::string_view text);

}  // namespace hopftrees
