#pragma once

// The Grossman-Larson algebra kT, the Connes-Kreimer algebra H_K, the planar
// algebra kP and the Foissy algebra H_F, with cuts, antipodes and inner
// products.
//
// Coproduct conventions: in H_K and H_F the pruned part goes on the left,
// Delta(t) = t (x) 1 + sum over admissible cuts c of P^c(t) (x) R^c(t); the
// empty cut contributes 1 (x) t.

#include "hopftrees/hopf.hpp"
#include "hopftrees/lincomb.hpp"
#include "hopftrees/trees.hpp"

#include <vector>

namespace hopftrees {

using GLElem = LinComb<RootedTree>;
using CKElem = LinComb<Forest>;
using PLElem = LinComb<PlanarTree>;
using FElem = LinComb<OrderedForest>;

RootedTree bplus(const Forest& f);
PlanarTree bplus_ordered(const OrderedForest& f);
Forest bminus(const RootedTree& t);
OrderedForest bminus_ordered(const PlanarTree& t);
// B_- on an H_K / H_F basis element: defined only on single trees.
Forest bminus(const Forest& f);
OrderedForest bminus_ordered(const OrderedForest& f);

// ---- kT -------------------------------------------------------------------

// Grossman-Larson product: with t = B_+(t_1...t_n), the sum over all n-tuples
// of vertices of t2 of the tree obtained by attaching each t_i at its chosen
// vertex. Attachment is done on the vertex array of t2 and each result is
// canonicalized, so equal trees accumulate integer multiplicities.
GLElem gl_product(const RootedTree& t, const RootedTree& t2);
TensorElem<RootedTree> gl_coproduct(const RootedTree& t);

// ---- cuts -----------------------------------------------------------------

struct Edge {
  int parent;       // preorder index of the parent vertex
  int child_index;  // position among the parent's children
  friend bool operator==(const Edge&, const Edge&) = default;
};

// A set of edges of a planar tree (for rooted trees, of the canonical planar
// realization). Vertices are numbered in preorder; the edge above vertex v
// is identified with v.
class Cut {
 public:
  Cut(PlanarTree tree, std::vector<bool> detached);

  const PlanarTree& tree() const { return tree_; }
  std::vector<Edge> edges() const;
  int size() const { return size_; }  // |c|
  bool admissible() const { return admissible_; }

  // P^c: fallen components, ordered by the preorder position of their roots.
  OrderedForest pruned_planar() const;
  // R^c: the component containing the root.
  PlanarTree trunk_planar() const;
  Forest pruned() const;
  RootedTree trunk() const;

 private:
  PlanarTree tree_;
  TreeShape shape_;
  std::vector<bool> detached_;
  int size_ = 0;
  bool admissible_ = true;
};

// All 2^(edges) cuts, or only the admissible ones, in increasing bitmask
// order over preorder vertices 1..n-1. Throws ResourceError above the cut cap.
std::vector<Cut> cuts_of(const PlanarTree& t, bool admissible_only);
std::vector<Cut> cuts_of(const RootedTree& t, bool admissible_only);

// ---- H_K ------------------------------------------------------------------

TensorElem<Forest> ck_coproduct(const RootedTree& t);
TensorElem<Forest> ck_coproduct(const Forest& f);
// Delta(t) = t (x) 1 + (id (x) B_+) Delta(B_-(t)), multiplicative on forests.
TensorElem<Forest> ck_coproduct_recursive(const Forest& f);
// S(t) = -sum over all cuts of (-1)^|c| P^c(t) R^c(t); multiplicative on forests.
CKElem ck_antipode(const RootedTree& t);
CKElem ck_antipode(const Forest& f);

// ---- kP -------------------------------------------------------------------

// Asymmetric shuffle: the components of bba(T) are inserted, in order, into
// the 2|T2|-1 slots of bba(T2) (each slot lies before, between or after the
// symbols of bba(T2)).
PLElem kp_product(const PlanarTree& t, const PlanarTree& t2);
// Deconcatenation of irreducible components.
TensorElem<PlanarTree> kp_coproduct(const PlanarTree& t);

// ---- H_F ------------------------------------------------------------------

TensorElem<OrderedForest> hf_coproduct(const PlanarTree& t);
TensorElem<OrderedForest> hf_coproduct(const OrderedForest& f);
// S(T) = -sum over all cuts of (-1)^|c| reverse(P^c(T)) R^c(T); extended as
// an antiautomorphism.
FElem hf_antipode(const PlanarTree& t);
FElem hf_antipode(const OrderedForest& f);

// ---- inner products ----------------------------------------------------------

// (t, t') = |Sym(t)| if t = t', else 0.
Rational pairing_kt(const RootedTree& t, const RootedTree& t2);
// (u, v) = (B_+ u, B_+ v)
Rational pairing_hk(const Forest& u, const Forest& v);
Rational pairing_kp(const PlanarTree& t, const PlanarTree& t2);
Rational pairing_hf(const OrderedForest& u, const OrderedForest& v);

// ---- Hopf structures ----------------------------------------------------------

const HopfOps<RootedTree>& gl_hopf();
const HopfOps<Forest>& ck_hopf();
const HopfOps<PlanarTree>& kp_hopf();
const HopfOps<OrderedForest>& hf_hopf();

}  // namespace hopftrees
