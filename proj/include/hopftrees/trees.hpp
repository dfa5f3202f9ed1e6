#pragma once

// Rooted and planar rooted trees, forests, the bracket (BBA) codec,
// enumeration and the combinatorial statistics used throughout.
//
// Degree conventions, used by every algebra in the library:
//   |t|             number of vertices of a tree
//   degree in kT/kP |t| - 1   (T_n and P_n hold trees with n+1 vertices)
//   degree in H_K/H_F  total vertex count of the forest

#include "hopftrees/compositions.hpp"

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hopftrees {

// A planar rooted tree, stored as its balanced bracket arrangement: each
// root branch B contributes "<" + bba(B) + ">". The one-vertex tree is "".
// Ordering is lexicographic on the bracket string ('<' before '>').
class PlanarTree {
 public:
  PlanarTree() = default;

  // Throws ParseError (with offset) for anything but a balanced arrangement.
  static PlanarTree from_bba(std::string_view s);
  // B_+: new root over the given branches, in order.
  static PlanarTree graft(const std::vector<PlanarTree>& branches);

  const std::string& bba() const { return bba_; }
  int vertex_count() const { return static_cast<int>(bba_.size() / 2) + 1; }
  int degree() const { return vertex_count() - 1; }
  bool is_single_vertex() const { return bba_.empty(); }

  // Irreducible components of the bracket string, i.e. "<" + branch + ">".
  std::vector<std::string_view> components() const;
  std::vector<PlanarTree> branches() const;
  int root_children() const { return static_cast<int>(components().size()); }

  friend auto operator<=>(const PlanarTree&, const PlanarTree&) = default;
  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;

 private:
  explicit PlanarTree(std::string bba) : bba_(std::move(bba)) {}
  std::string bba_;
};

// An unordered rooted tree in canonical form: the bracket string of the
// planar realization whose children at every vertex are sorted ascending by
// (vertex count, canonical string). Two trees are isomorphic iff their
// canonical strings agree. Trees are ordered by the same key.
class RootedTree {
 public:
  RootedTree() = default;

  static RootedTree from_bba(std::string_view s);
  static RootedTree canonical(const PlanarTree& t);
  static RootedTree graft(std::vector<RootedTree> branches);

  const std::string& bba() const { return bba_; }
  PlanarTree planar() const;
  int vertex_count() const { return static_cast<int>(bba_.size() / 2) + 1; }
  int degree() const { return vertex_count() - 1; }
  bool is_single_vertex() const { return bba_.empty(); }
  // Canonical order.
  std::vector<RootedTree> branches() const;

  friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) {
    if (auto c = a.bba_.size() <=> b.bba_.size(); c != 0) return c;
    return a.bba_ <=> b.bba_;
  }
  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  explicit RootedTree(std::string canonical_bba) : bba_(std::move(canonical_bba)) {}
  std::string bba_;
};

// Commutative monomial of rooted trees; the empty forest is the unit of H_K.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<RootedTree> trees);
  explicit Forest(const RootedTree& t) : trees_{t} {}

  const std::vector<RootedTree>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  std::size_t size() const { return trees_.size(); }
  int degree() const;

  friend Forest operator*(const Forest& a, const Forest& b);

  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);
  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  std::vector<RootedTree> trees_;
};

// Word of planar trees; the empty word is the unit of H_F.
class OrderedForest {
 public:
  OrderedForest() = default;
  explicit OrderedForest(std::vector<PlanarTree> trees) : trees_(std::move(trees)) {}
  explicit OrderedForest(const PlanarTree& t) : trees_{t} {}

  const std::vector<PlanarTree>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  std::size_t size() const { return trees_.size(); }
  int degree() const;
  OrderedForest reversed() const;

  // Concatenation.
  friend OrderedForest operator*(const OrderedForest& a, const OrderedForest& b);

  friend std::strong_ordering operator<=>(const OrderedForest& a, const OrderedForest& b);
  friend bool operator==(const OrderedForest&, const OrderedForest&) = default;

 private:
  std::vector<PlanarTree> trees_;
};

std::string render_basis(const PlanarTree& t);
std::string render_basis(const RootedTree& t);
std::string render_basis(const Forest& f);
std::string render_basis(const OrderedForest& f);

// Vertex-array view of a tree. Vertices are numbered in preorder (root 0,
// then children left to right); parent[0] == -1.
struct TreeShape {
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  int size() const { return static_cast<int>(parent.size()); }
};

TreeShape shape_of(std::string_view bba);
// Bracket string of the subtree hanging at v. When `detached` is non-empty,
// subtrees rooted at vertices w with detached[w] are left out.
std::string subtree_bba(const TreeShape& shape, int v, const std::vector<bool>& detached = {});

PlanarTree bba_decode(std::string_view s);
std::string bba_encode(const PlanarTree& t);
RootedTree canonicalize(const PlanarTree& t);

// All of P_n (n non-root vertices) in lexicographic bracket order.
std::vector<PlanarTree> enumerate_planar(int n);
// All of T_n (n+1 vertices) in canonical order.
std::vector<RootedTree> enumerate_rooted(int n);
// Every ordered forest / forest with total vertex count n.
std::vector<OrderedForest> enumerate_ordered_forests(int n);
std::vector<Forest> enumerate_forests(int n);
// Every distinct planar realization of t, in lexicographic order.
std::vector<PlanarTree> planar_realizations(const RootedTree& t);

// |Sym(t)|
mpz_class sym_order(const RootedTree& t);
// e(t): number of planar trees T with rho(T) = t, via the closed form
// prod c(v)! / |Sym(t)|.
mpz_class embedding_count(const RootedTree& t);
// c(v) for every vertex in preorder.
std::vector<int> child_counts(std::string_view bba);

// l_i: unbranched tree with i >= 1 vertices.
RootedTree ladder(int i);
PlanarTree planar_ladder(int i);
// t_lambda = B_+(l_{lambda_1} ... l_{lambda_k})
RootedTree t_lambda(const Partition& lambda);
// T_I = B_+(l_{i_1} ... l_{i_k})
PlanarTree T_comp(const Composition& I);

}  // namespace hopftrees

template <>
struct std::hash<hopftrees::PlanarTree> {
  std::size_t operator()(const hopftrees::PlanarTree& t) const noexcept {
    return std::hash<std::string>{}(t.bba());
  }
};

template <>
struct std::hash<hopftrees::RootedTree> {
  std::size_t operator()(const hopftrees::RootedTree& t) const noexcept {
    return std::hash<std::string>{}(t.bba());
  }
};
