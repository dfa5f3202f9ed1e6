#include "hopftrees/tree_algebras.hpp"

#include "hopftrees/errors.hpp"
#include "hopftrees/limits.hpp"
#include "memo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace hopftrees {

namespace {

using detail::Memo;

// Canonical string of the subtree at v of `shape`, with extra branches
// (canonical strings) hung at each vertex.
std::string grafted_canonical(const TreeShape& shape, int v,
                              const std::vector<std::vector<std::string>>& extra) {
  std::vector<std::string> kids = extra[v];
  for (int c : shape.children[v]) kids.push_back(grafted_canonical(shape, c, extra));
  std::sort(kids.begin(), kids.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::string s;
  for (const auto& k : kids) s += "<" + k + ">";
  return s;
}

}  // namespace

RootedTree bplus(const Forest& f) { return RootedTree::graft(f.trees()); }
PlanarTree bplus_ordered(const OrderedForest& f) { return PlanarTree::graft(f.trees()); }
Forest bminus(const RootedTree& t) { return Forest(t.branches()); }
OrderedForest bminus_ordered(const PlanarTree& t) { return OrderedForest(t.branches()); }

Forest bminus(const Forest& f) {
  if (f.size() != 1) throw DomainError("B_- is defined only on a single tree");
  return bminus(f.trees().front());
}

OrderedForest bminus_ordered(const OrderedForest& f) {
  if (f.size() != 1) throw DomainError("B_- is defined only on a single tree");
  return bminus_ordered(f.trees().front());
}

GLElem gl_product(const RootedTree& t, const RootedTree& t2) {
  static Memo<std::pair<RootedTree, RootedTree>, GLElem> memo;
  return memo.get({t, t2}, [&] {
    GLElem out;
    auto branches = t.branches();
    auto shape = shape_of(t2.bba());
    const int m = shape.size();
    const std::size_t n = branches.size();
    std::vector<int> choice(n, 0);
    std::vector<std::vector<std::string>> extra(static_cast<std::size_t>(m));
    while (true) {
      for (auto& e : extra) e.clear();
      for (std::size_t i = 0; i < n; ++i) extra[choice[i]].push_back(branches[i].bba());
      out.add_term(RootedTree::from_bba(grafted_canonical(shape, 0, extra)), Rational(1));
      std::size_t i = 0;
      while (i < n && ++choice[i] == m) choice[i++] = 0;
      if (i == n) break;
    }
    return out;
  });
}

TensorElem<RootedTree> gl_coproduct(const RootedTree& t) {
  auto branches = t.branches();
  const std::size_t k = branches.size();
  TensorElem<RootedTree> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<RootedTree> left, right;
    for (std::size_t i = 0; i < k; ++i) (mask >> i & 1 ? left : right).push_back(branches[i]);
    out.add_term({RootedTree::graft(left), RootedTree::graft(right)}, Rational(1));
  }
  return out;
}

Cut::Cut(PlanarTree tree, std::vector<bool> detached)
    : tree_(std::move(tree)), shape_(shape_of(tree_.bba())), detached_(std::move(detached)) {
  detached_.resize(static_cast<std::size_t>(shape_.size()), false);
  detached_[0] = false;
  for (int v = 1; v < shape_.size(); ++v) {
    if (!detached_[v]) continue;
    ++size_;
    for (int a = shape_.parent[v]; a > 0; a = shape_.parent[a])
      if (detached_[a]) admissible_ = false;
  }
}

std::vector<Edge> Cut::edges() const {
  std::vector<Edge> out;
  for (int v = 1; v < shape_.size(); ++v) {
    if (!detached_[v]) continue;
    int p = shape_.parent[v];
    const auto& sib = shape_.children[p];
    int idx = static_cast<int>(std::find(sib.begin(), sib.end(), v) - sib.begin());
    out.push_back({p, idx});
  }
  return out;
}

OrderedForest Cut::pruned_planar() const {
  std::vector<PlanarTree> parts;
  for (int v = 1; v < shape_.size(); ++v)
    if (detached_[v]) parts.push_back(PlanarTree::from_bba(subtree_bba(shape_, v, detached_)));
  return OrderedForest(std::move(parts));
}

PlanarTree Cut::trunk_planar() const { return PlanarTree::from_bba(subtree_bba(shape_, 0, detached_)); }

Forest Cut::pruned() const {
  std::vector<RootedTree> parts;
  const OrderedForest planar = pruned_planar();
  for (const auto& p : planar.trees()) parts.push_back(RootedTree::canonical(p));
  return Forest(std::move(parts));
}

RootedTree Cut::trunk() const { return RootedTree::canonical(trunk_planar()); }

std::vector<Cut> cuts_of(const PlanarTree& t, bool admissible_only) {
  if (t.vertex_count() > cut_vertex_cap())
    throw ResourceError("cut enumeration: tree with " + std::to_string(t.vertex_count()) +
                        " vertices exceeds cap " + std::to_string(cut_vertex_cap()));
  const int edges = t.vertex_count() - 1;
  std::vector<Cut> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges); ++mask) {
    std::vector<bool> detached(static_cast<std::size_t>(edges) + 1, false);
    for (int e = 0; e < edges; ++e) detached[e + 1] = (mask >> e) & 1;
    Cut c(t, std::move(detached));
    if (!admissible_only || c.admissible()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Cut> cuts_of(const RootedTree& t, bool admissible_only) {
  return cuts_of(t.planar(), admissible_only);
}

TensorElem<Forest> ck_coproduct(const RootedTree& t) {
  static Memo<RootedTree, TensorElem<Forest>> memo;
  return memo.get(t, [&] {
    TensorElem<Forest> out;
    out.add_term({Forest(t), Forest()}, Rational(1));
    for (const auto& c : cuts_of(t, true)) out.add_term({c.pruned(), Forest(c.trunk())}, Rational(1));
    return out;
  });
}

namespace {
LinComb<Forest> forest_mul(const Forest& a, const Forest& b) { return LinComb<Forest>(a * b); }
LinComb<OrderedForest> oforest_mul(const OrderedForest& a, const OrderedForest& b) {
  return LinComb<OrderedForest>(a * b);
}
}  // namespace

TensorElem<Forest> ck_coproduct(const Forest& f) {
  TensorElem<Forest> out(std::make_pair(Forest(), Forest()));
  for (const auto& t : f.trees()) out = tensor_product(forest_mul, out, ck_coproduct(t));
  return out;
}

TensorElem<Forest> ck_coproduct_recursive(const Forest& f) {
  TensorElem<Forest> out(std::make_pair(Forest(), Forest()));
  for (const auto& t : f.trees()) {
    TensorElem<Forest> dt(std::make_pair(Forest(t), Forest()));
    for (const auto& [p, c] : ck_coproduct_recursive(bminus(t)))
      dt.add_term({p.first, Forest(bplus(p.second))}, c);
    out = tensor_product(forest_mul, out, dt);
  }
  return out;
}

CKElem ck_antipode(const RootedTree& t) {
  static Memo<RootedTree, CKElem> memo;
  return memo.get(t, [&] {
    CKElem out;
    for (const auto& c : cuts_of(t, false)) {
      Rational sign = (c.size() % 2 == 0) ? Rational(-1) : Rational(1);
      out.add_term(c.pruned() * Forest(c.trunk()), sign);
    }
    return out;
  });
}

CKElem ck_antipode(const Forest& f) {
  CKElem out(Forest{});
  for (const auto& t : f.trees()) out = bilinear_extend(forest_mul, out, ck_antipode(t));
  return out;
}

PLElem kp_product(const PlanarTree& t, const PlanarTree& t2) {
  static Memo<std::pair<PlanarTree, PlanarTree>, PLElem> memo;
  return memo.get({t, t2}, [&] {
    PLElem out;
    auto comps = t.components();
    const std::string& host = t2.bba();
    const std::size_t slots = host.size() + 1;
    const std::size_t k = comps.size();
    std::vector<std::size_t> slot(k, 0);
    while (true) {
      std::string s;
      std::size_t ci = 0;
      for (std::size_t pos = 0; pos < slots; ++pos) {
        while (ci < k && slot[ci] == pos) s += comps[ci++];
        if (pos < host.size()) s += host[pos];
      }
      out.add_term(PlanarTree::from_bba(s), Rational(1));
      // Next nondecreasing slot sequence.
      std::size_t i = k;
      while (i > 0 && slot[i - 1] == slots - 1) --i;
      if (i == 0) break;
      ++slot[i - 1];
      for (std::size_t j = i; j < k; ++j) slot[j] = slot[i - 1];
    }
    return out;
  });
}

TensorElem<PlanarTree> kp_coproduct(const PlanarTree& t) {
  auto comps = t.components();
  TensorElem<PlanarTree> out;
  for (std::size_t i = 0; i <= comps.size(); ++i) {
    std::string left, right;
    for (std::size_t j = 0; j < comps.size(); ++j) (j < i ? left : right) += comps[j];
    out.add_term({PlanarTree::from_bba(left), PlanarTree::from_bba(right)}, Rational(1));
  }
  return out;
}

TensorElem<OrderedForest> hf_coproduct(const PlanarTree& t) {
  static Memo<PlanarTree, TensorElem<OrderedForest>> memo;
  return memo.get(t, [&] {
    TensorElem<OrderedForest> out;
    out.add_term({OrderedForest(t), OrderedForest()}, Rational(1));
    for (const auto& c : cuts_of(t, true))
      out.add_term({c.pruned_planar(), OrderedForest(c.trunk_planar())}, Rational(1));
    return out;
  });
}

TensorElem<OrderedForest> hf_coproduct(const OrderedForest& f) {
  TensorElem<OrderedForest> out(std::make_pair(OrderedForest(), OrderedForest()));
  for (const auto& t : f.trees()) out = tensor_product(oforest_mul, out, hf_coproduct(t));
  return out;
}

FElem hf_antipode(const PlanarTree& t) {
  static Memo<PlanarTree, FElem> memo;
  return memo.get(t, [&] {
    FElem out;
    for (const auto& c : cuts_of(t, false)) {
      Rational sign = (c.size() % 2 == 0) ? Rational(-1) : Rational(1);
      out.add_term(c.pruned_planar().reversed() * OrderedForest(c.trunk_planar()), sign);
    }
    return out;
  });
}

FElem hf_antipode(const OrderedForest& f) {
  FElem out(OrderedForest{});
  const auto& trees = f.trees();
  for (auto it = trees.rbegin(); it != trees.rend(); ++it)
    out = bilinear_extend(oforest_mul, out, hf_antipode(*it));
  return out;
}

Rational pairing_kt(const RootedTree& t, const RootedTree& t2) {
  return t == t2 ? Rational(sym_order(t)) : Rational(0);
}

Rational pairing_hk(const Forest& u, const Forest& v) { return pairing_kt(bplus(u), bplus(v)); }

Rational pairing_kp(const PlanarTree& t, const PlanarTree& t2) {
  return t == t2 ? Rational(1) : Rational(0);
}

Rational pairing_hf(const OrderedForest& u, const OrderedForest& v) {
  return pairing_kp(bplus_ordered(u), bplus_ordered(v));
}

const HopfOps<RootedTree>& gl_hopf() {
  static const HopfOps<RootedTree> h{
      .name = "kT",
      .unit = RootedTree(),
      .product = gl_product,
      .coproduct = gl_coproduct,
      .degree = [](const RootedTree& t) { return t.degree(); },
      .basis = enumerate_rooted,
      .antipode = {},
      .counit = {},
  };
  return h;
}

const HopfOps<Forest>& ck_hopf() {
  static const HopfOps<Forest> h{
      .name = "H_K",
      .unit = Forest(),
      .product = forest_mul,
      .coproduct = [](const Forest& f) { return ck_coproduct(f); },
      .degree = [](const Forest& f) { return f.degree(); },
      .basis = enumerate_forests,
      .antipode = [](const Forest& f) { return ck_antipode(f); },
      .counit = {},
  };
  return h;
}

const HopfOps<PlanarTree>& kp_hopf() {
  static const HopfOps<PlanarTree> h{
      .name = "kP",
      .unit = PlanarTree(),
      .product = kp_product,
      .coproduct = kp_coproduct,
      .degree = [](const PlanarTree& t) { return t.degree(); },
      .basis = enumerate_planar,
      .antipode = {},
      .counit = {},
  };
  return h;
}

const HopfOps<OrderedForest>& hf_hopf() {
  static const HopfOps<OrderedForest> h{
      .name = "H_F",
      .unit = OrderedForest(),
      .product = oforest_mul,
      .coproduct = [](const OrderedForest& f) { return hf_coproduct(f); },
      .degree = [](const OrderedForest& f) { return f.degree(); },
      .basis = enumerate_ordered_forests,
      .antipode = [](const OrderedForest& f) { return hf_antipode(f); },
      .counit = {},
  };
  return h;
}

}  // namespace hopftrees
