#pragma once

// The maps of the two commuting squares
//
//   NSym --Phi--> H_F          QSym <--Phi*-- kP
//    |tau          |rho          ^tau*         ^rho*
//    v             v             |             |
//   Sym  --phi--> H_K          Sym  <--phi*-- kT
//
// and exhaustive checks that both squares commute and that every arrow is a
// Hopf morphism.

#include "hopftrees/report.hpp"
#include "hopftrees/symfun.hpp"
#include "hopftrees/tree_algebras.hpp"

#include <optional>

namespace hopftrees {

// e_i -> l_i, extended as an algebra map after expanding x in the e-basis.
CKElem phi(const SymElem& x);
// E_{i_1}...E_{i_k} -> (l_{i_1}, ..., l_{i_k})
FElem Phi(const NSymElem& x);
// Forget planarity and order.
CKElem rho(const FElem& x);

// t_lambda -> |Sym(t_lambda)| m_lambda, other trees -> 0.
SymElem phi_star(const GLElem& x);
// T_I -> M_I, other trees -> 0.
QSymElem Phi_star(const PLElem& x);
// t -> |Sym(t)| times the sum of the planar realizations of t.
PLElem rho_star(const GLElem& x);
// The inclusion m_lambda -> sum of M_I over orderings I of lambda.
QSymElem tau_star(const SymElem& x);

// lambda with t = B_+(l_{lambda_1} ... l_{lambda_k}), if t has that form.
std::optional<Partition> ladder_partition(const RootedTree& t);
// I with T = B_+(l_{i_1} ... l_{i_k}), if T has that form.
std::optional<Composition> ladder_composition(const PlanarTree& t);

enum class Diagram { d1, d2 };

// d1: rho(Phi(w)) = phi(tau(w)) for E-words of weight <= n, and phi, Phi,
// tau, rho are Hopf morphisms through degree n.
// d2: Phi*(rho*(t)) = tau*(phi*(t)) for trees with <= n + 1 vertices, and
// phi*, Phi*, rho*, tau* are Hopf morphisms through degree n.
Report diagram_check(Diagram d, int n);

}  // namespace hopftrees
