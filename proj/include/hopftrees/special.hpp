#pragma once

// The families kappa_n and epsilon_n of kT, the natural growth operator, and
// the attachment and cut counts n(u, t; t') and m(u, t; t').

#include "hopftrees/report.hpp"
#include "hopftrees/tree_algebras.hpp"

namespace hopftrees {

// kappa_n = sum over trees t with n + 1 vertices of t / |Sym(t)|.
GLElem kappa(int n);
// epsilon_0 = dot, epsilon_n = sum_{i=1..n} (-1)^(i-1) kappa_i o epsilon_{n-i}.
GLElem epsilon(int n);

// k-fold application of t -> l_2 o t.
GLElem natural_growth(const GLElem& x, int k);

// Coefficient of t2 in B_+(u) o t.
long n_count(const Forest& u, const RootedTree& t, const RootedTree& t2);
// Admissible cuts c of t2 with P^c = u and R^c = t.
long m_count(const Forest& u, const RootedTree& t, const RootedTree& t2);

struct CountTriple {
  Forest u;
  RootedTree t;
  RootedTree t2;
  long n_count = 0;
  long m_count = 0;

  // n |Sym(t2)| = m |Sym(B_+ u)| |Sym(t)|
  bool identity_holds() const;
};

CountTriple count_triple(const Forest& u, const RootedTree& t, const RootedTree& t2);

// Checks the count identity for every tree t2 of degree <= n against every
// pair (u, t) with |u| + |t| vertices equal to those of t2, including the
// pairs where both counts vanish. `triples` receives the number checked.
Report count_identity_check(int n, long* triples = nullptr);

// For n' <= n: epsilon_n' = (-1)^n' S(kappa_n'), phi*(epsilon_n') = e_n',
// n'! epsilon_n' = t_{1^n'}, phi*(kappa_n') = h_n', Delta(kappa_n') =
// sum kappa_i (x) kappa_j, rho*(kappa_n') = sum of all planar trees.
Report kappa_epsilon_check(int n);

// For degrees <= n: phi*(N^k t) = e_1^k phi*(t) for t = dot and t = t_lambda;
// m(dot, t_lambda; t_mu) equals the coefficient of m_mu in e_1 m_lambda (with
// that coefficient also read off the series expansion); and
// n(dot; t_lambda) = |lambda|! / (lambda_1! lambda_2! ...) / |Sym(t_lambda)|.
Report growth_formulas_check(int n);

}  // namespace hopftrees
