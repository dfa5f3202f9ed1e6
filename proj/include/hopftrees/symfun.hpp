#pragma once

// Sym (monomial basis m_lambda), QSym (monomial basis M_I) and NSym (words in
// the divided powers E_i), with the expansions of e_k, h_k, p_k.

#include "hopftrees/compositions.hpp"
#include "hopftrees/hopf.hpp"
#include "hopftrees/lincomb.hpp"
#include "hopftrees/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopftrees {

// The NSym basis element E_{i_1} ... E_{i_k}.
struct EWord {
  std::vector<int> letters;

  EWord() = default;
  EWord(std::initializer_list<int> l) : letters(l) {}
  explicit EWord(std::vector<int> l) : letters(std::move(l)) {}

  int weight() const;
  friend auto operator<=>(const EWord&, const EWord&) = default;
  friend bool operator==(const EWord&, const EWord&) = default;
};

// "m[2,1,1]", "M[2,1]", "E[2,1]"; the empty index renders as "1".
std::string render_basis(const Partition& p);
std::string render_basis(const Composition& c);
std::string render_basis(const EWord& w);

using SymElem = LinComb<Partition>;
using QSymElem = LinComb<Composition>;
using NSymElem = LinComb<EWord>;

// ---- QSym -------------------------------------------------------------------

// Quasi-shuffle: the first part of each term is i_1, j_1 or i_1 + j_1.
QSymElem qsym_product(const Composition& a, const Composition& b);
QSymElem qsym_product(const QSymElem& a, const QSymElem& b);
TensorElem<Composition> qsym_coproduct(const Composition& c);
// S(M_I) = (-1)^l(I) sum over coarsenings J of I of M_{reverse J}.
QSymElem qsym_antipode(const Composition& c);

// Truncated polynomial in variables t_1..t_k, keyed by exponent vectors.
using SeriesPoly = std::map<std::vector<int>, Rational>;
// Expands x in k variables, dropping monomials of degree above `max_degree`.
// Throws DomainError if some M_I in x has more than k parts.
SeriesPoly series_oracle(const QSymElem& x, int k, int max_degree);
SeriesPoly series_product(const SeriesPoly& a, const SeriesPoly& b, int max_degree);

// ---- Sym --------------------------------------------------------------------

// m_lambda = sum of M_I over the distinct orderings I of lambda.
QSymElem embed(const Partition& p);
QSymElem embed(const SymElem& x);
// Inverse of embed on symmetric elements: reads the coefficient of each
// M_lambda with lambda weakly decreasing. Throws DomainError if x is not
// symmetric.
SymElem restrict_to_sym(const QSymElem& x);

SymElem sym_product(const Partition& a, const Partition& b);
SymElem sym_product(const SymElem& a, const SymElem& b);
// Sum over ordered splittings lambda = mu u nu as multisets of m_mu (x) m_nu.
TensorElem<Partition> sym_coproduct(const Partition& p);
SymElem sym_antipode(const Partition& p);

enum class SymGenerator { e, h, p };
// e_k = m_{1^k}, h_k = sum_{|lambda| = k} m_lambda, p_k = m_k (k >= 0; index 0 gives 1).
SymElem basis_expand(SymGenerator g, int k);
// Product of generators g_{lambda_1} g_{lambda_2} ... in the m-basis.
SymElem basis_expand(SymGenerator g, const Partition& lambda);

// Expansion of x in the e-basis, keyed by lambda for e_lambda.
SymElem to_e_basis(const SymElem& x);
// Expansion of x in the h-basis, keyed by lambda for h_lambda.
SymElem to_h_basis(const SymElem& x);

// (h_lambda, m_mu) = delta.
Rational sym_pairing(const Partition& h_index, const Partition& m_index);
// Both arguments in the m-basis; the first is re-expanded in the h-basis.
Rational sym_pairing(const SymElem& x, const SymElem& y);

// (1 + e_1 + e_2 + ...)(1 - h_1 + h_2 - ...) = 1 degree by degree, and
// S(e_i) = (-1)^i h_i, through degree n.
Report eh_identity_check(int n);

// ---- NSym -------------------------------------------------------------------

NSymElem nsym_product(const EWord& a, const EWord& b);
// Delta(E_k) = sum_{i+j=k} E_i (x) E_j, extended multiplicatively.
TensorElem<EWord> nsym_coproduct(const EWord& w);
// E_{i_1}...E_{i_k} -> e_{i_1}...e_{i_k}
SymElem tau(const EWord& w);
SymElem tau(const NSymElem& x);

std::vector<EWord> nsym_basis(int n);

const HopfOps<Partition>& sym_hopf();
const HopfOps<Composition>& qsym_hopf();
const HopfOps<EWord>& nsym_hopf();

}  // namespace hopftrees
