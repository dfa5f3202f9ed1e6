#pragma once

// The combinatorial Dyson-Schwinger equation X = 1 + B_+(X^p) in H_F and
// H_K, with p a formal parameter (scalars Q[p]) or a rational number.

#include "hopftrees/report.hpp"
#include "hopftrees/tree_algebras.hpp"

#include <vector>

namespace hopftrees {

template <Ring S>
struct DSESolutionT {
  // Index n holds the degree-n part (n vertices); index 0 is the unit.
  std::vector<LinComb<OrderedForest, S>> hf_terms;
  std::vector<LinComb<Forest, S>> hk_terms;

  int max_degree() const { return static_cast<int>(hf_terms.size()) - 1; }
  friend bool operator==(const DSESolutionT&, const DSESolutionT&) = default;
};

using DSESolution = DSESolutionT<PolyP>;

// X_1 = dot, X_{n+1} = sum_{k=1..n} binom(p, k) B_+(sum over length-k
// compositions (n_1..n_k) of n of X_{n_1}...X_{n_k}); the H_K terms solve the
// same recursion with commutative products.
DSESolution solve_recursive(int n);
// The same recursion with p specialized to a rational number.
DSESolutionT<Rational> solve_recursive_at(int n, const Rational& p);

// X_n = sum over planar trees T with n vertices of C_p(T) T and
// x_n = sum over rooted trees t with n vertices of e(t) C_p(t) t, where e(t)
// counts planar embeddings.
DSESolution solve_closed(int n);

DSESolutionT<Rational> evaluate(const DSESolution& s, const Rational& p);

// C_p(T) = product over vertices with c(v) > 0 children of binom(p, c(v)).
PolyP cp_coefficient(const PlanarTree& t);
PolyP cp_coefficient(const RootedTree& t);
// (1 / |Sym(t)|) prod_v p(p-1)...(p-c(v)+1), the coefficient of t in x_n.
PolyP expanded_coefficient(const RootedTree& t);

using CKPoly = LinComb<Forest, PolyP>;
using FPoly = LinComb<OrderedForest, PolyP>;

// q_{n,k}(x_1, x_2, ...) for 1 <= k <= n, built from the x_i of `s`.
CKPoly q_poly(int n, int k, const DSESolution& s);
// Q_{n,k}(X_1, X_2, ...) for 1 <= k <= n, with ordered products.
FPoly Q_poly(int n, int k, const DSESolution& s);

// Delta(x_n) = x_n (x) 1 + sum_k q_{n,k} (x) x_k for n <= n_hk, and
// Delta(X_n) = X_n (x) 1 + sum_k Q_{n,k} (x) X_k for n <= n_hf, as exact
// identities over Q[p].
Report dse_coproduct_check(int n_hk, int n_hf);

// Recursive and closed solutions agree in both algebras; rho maps X_n to
// x_n; e(t) C_p(t) equals the expanded coefficient; at p = 1 the solution
// is the ladders; at p = 2 the rational recursion matches evaluation.
Report dse_check(int n);

}  // namespace hopftrees
