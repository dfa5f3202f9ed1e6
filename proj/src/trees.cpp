#include "hopftrees/trees.hpp"

#include "hopftrees/errors.hpp"
#include "hopftrees/limits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace hopftrees {

namespace {

void validate_bba(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '<') {
      ++depth;
    } else if (s[i] == '>') {
      if (--depth < 0) throw ParseError("unbalanced '>'", i);
    } else {
      throw ParseError(std::string("unexpected character '") + s[i] + "'", i);
    }
  }
  if (depth != 0) throw ParseError("unclosed '<'", s.size());
}

// Splits a balanced string into its irreducible components.
std::vector<std::string_view> split_components(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    depth += s[i] == '<' ? 1 : -1;
    if (depth == 0) {
      out.push_back(s.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  return out;
}

bool canonical_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string canonical_string(std::string_view s) {
  std::vector<std::string> kids;
  for (auto c : split_components(s)) kids.push_back(canonical_string(c.substr(1, c.size() - 2)));
  std::sort(kids.begin(), kids.end(), canonical_less);
  std::string out;
  for (const auto& k : kids) out += "<" + k + ">";
  return out;
}

}  // namespace

PlanarTree PlanarTree::from_bba(std::string_view s) {
  validate_bba(s);
  return PlanarTree(std::string(s));
}

PlanarTree PlanarTree::graft(const std::vector<PlanarTree>& branches) {
  std::string s;
  for (const auto& b : branches) s += "<" + b.bba_ + ">";
  return PlanarTree(std::move(s));
}

std::vector<std::string_view> PlanarTree::components() const { return split_components(bba_); }

std::vector<PlanarTree> PlanarTree::branches() const {
  std::vector<PlanarTree> out;
  for (auto c : components()) out.push_back(PlanarTree(std::string(c.substr(1, c.size() - 2))));
  return out;
}

RootedTree RootedTree::from_bba(std::string_view s) {
  validate_bba(s);
  return RootedTree(canonical_string(s));
}

RootedTree RootedTree::canonical(const PlanarTree& t) { return RootedTree(canonical_string(t.bba())); }

RootedTree RootedTree::graft(std::vector<RootedTree> branches) {
  std::sort(branches.begin(), branches.end());
  std::string s;
  for (const auto& b : branches) s += "<" + b.bba_ + ">";
  return RootedTree(std::move(s));
}

PlanarTree RootedTree::planar() const { return PlanarTree::from_bba(bba_); }

std::vector<RootedTree> RootedTree::branches() const {
  std::vector<RootedTree> out;
  for (auto c : split_components(bba_)) out.push_back(RootedTree(std::string(c.substr(1, c.size() - 2))));
  return out;
}

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
}

int Forest::degree() const {
  int d = 0;
  for (const auto& t : trees_) d += t.vertex_count();
  return d;
}

Forest operator*(const Forest& a, const Forest& b) {
  std::vector<RootedTree> all;
  all.reserve(a.size() + b.size());
  std::merge(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end(),
             std::back_inserter(all));
  Forest f;
  f.trees_ = std::move(all);
  return f;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(), b.trees_.begin(),
                                                b.trees_.end());
}

int OrderedForest::degree() const {
  int d = 0;
  for (const auto& t : trees_) d += t.vertex_count();
  return d;
}

OrderedForest OrderedForest::reversed() const {
  return OrderedForest(std::vector<PlanarTree>(trees_.rbegin(), trees_.rend()));
}

OrderedForest operator*(const OrderedForest& a, const OrderedForest& b) {
  std::vector<PlanarTree> all = a.trees_;
  all.insert(all.end(), b.trees_.begin(), b.trees_.end());
  return OrderedForest(std::move(all));
}

std::strong_ordering operator<=>(const OrderedForest& a, const OrderedForest& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(), b.trees_.begin(),
                                                b.trees_.end());
}

std::string render_basis(const PlanarTree& t) { return "(" + t.bba() + ")"; }
std::string render_basis(const RootedTree& t) { return "(" + t.bba() + ")"; }

std::string render_basis(const Forest& f) {
  if (f.empty()) return "1";
  std::string s;
  for (const auto& t : f.trees()) s += render_basis(t);
  return s;
}

std::string render_basis(const OrderedForest& f) {
  if (f.empty()) return "1";
  std::string s;
  for (const auto& t : f.trees()) s += render_basis(t);
  return s;
}

TreeShape shape_of(std::string_view bba) {
  TreeShape sh;
  sh.parent.push_back(-1);
  sh.children.emplace_back();
  int cur = 0;
  for (char ch : bba) {
    if (ch == '<') {
      int v = sh.size();
      sh.parent.push_back(cur);
      sh.children.emplace_back();
      sh.children[cur].push_back(v);
      cur = v;
    } else {
      cur = sh.parent[cur];
    }
  }
  return sh;
}

std::string subtree_bba(const TreeShape& shape, int v, const std::vector<bool>& detached) {
  std::string s;
  for (int c : shape.children[v]) {
    if (!detached.empty() && detached[c]) continue;
    s += "<" + subtree_bba(shape, c, detached) + ">";
  }
  return s;
}

PlanarTree bba_decode(std::string_view s) { return PlanarTree::from_bba(s); }
std::string bba_encode(const PlanarTree& t) { return t.bba(); }
RootedTree canonicalize(const PlanarTree& t) { return RootedTree::canonical(t); }

std::vector<PlanarTree> enumerate_planar(int n) {
  require_degree(n, "enumerate_planar");
  std::vector<PlanarTree> out;
  std::string cur;
  std::function<void(int, int)> rec = [&](int open, int close) {
    if (close == n) {
      out.push_back(PlanarTree::from_bba(cur));
      return;
    }
    if (open < n) {
      cur.push_back('<');
      rec(open + 1, close);
      cur.pop_back();
    }
    if (close < open) {
      cur.push_back('>');
      rec(open, close + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<RootedTree> enumerate_rooted(int n) {
  require_degree(n, "enumerate_rooted");
  // Canonical trees with n+1 vertices: B_+ of every multiset of smaller
  // canonical trees with n vertices in total.
  static std::map<int, std::vector<RootedTree>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  std::function<const std::vector<RootedTree>&(int)> trees_with = [&](int m) -> const std::vector<RootedTree>& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::set<RootedTree> found;
    // Branch multisets as nondecreasing sequences in canonical order.
    std::vector<RootedTree> branches;
    std::function<void(int)> rec = [&](int rest) {
      if (rest == 0) {
        found.insert(RootedTree::graft(branches));
        return;
      }
      for (int size = 1; size <= rest; ++size) {
        for (const auto& b : trees_with(size - 1)) {
          if (!branches.empty() && b < branches.back()) continue;
          branches.push_back(b);
          rec(rest - size);
          branches.pop_back();
        }
      }
    };
    rec(m);
    return cache.emplace(m, std::vector<RootedTree>(found.begin(), found.end())).first->second;
  };
  return trees_with(n);
}

std::vector<OrderedForest> enumerate_ordered_forests(int n) {
  std::vector<OrderedForest> out;
  for (const auto& t : enumerate_planar(n)) out.emplace_back(t.branches());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Forest> enumerate_forests(int n) {
  std::vector<Forest> out;
  for (const auto& t : enumerate_rooted(n)) out.emplace_back(t.branches());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PlanarTree> planar_realizations(const RootedTree& t) {
  auto branches = t.branches();
  std::vector<std::vector<PlanarTree>> options;
  for (const auto& b : branches) options.push_back(planar_realizations(b));
  std::set<std::string> found;
  std::vector<int> order(branches.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  do {
    std::string cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == order.size()) {
        found.insert(cur);
        return;
      }
      auto keep = cur.size();
      for (const auto& r : options[order[i]]) {
        cur += "<" + r.bba() + ">";
        rec(i + 1);
        cur.resize(keep);
      }
    };
    rec(0);
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<PlanarTree> out;
  for (const auto& s : found) out.push_back(PlanarTree::from_bba(s));
  return out;
}

mpz_class sym_order(const RootedTree& t) {
  mpz_class r = 1;
  auto branches = t.branches();
  std::size_t i = 0;
  while (i < branches.size()) {
    std::size_t j = i;
    while (j < branches.size() && branches[j] == branches[i]) ++j;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), j - i);
    mpz_class sub = sym_order(branches[i]);
    for (std::size_t k = i; k < j; ++k) r *= sub;
    r *= f;
    i = j;
  }
  return r;
}

std::vector<int> child_counts(std::string_view bba) {
  auto sh = shape_of(bba);
  std::vector<int> out;
  for (const auto& c : sh.children) out.push_back(static_cast<int>(c.size()));
  return out;
}

mpz_class embedding_count(const RootedTree& t) {
  mpz_class prod = 1;
  for (int c : child_counts(t.bba())) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(c));
    prod *= f;
  }
  return prod / sym_order(t);
}

PlanarTree planar_ladder(int i) {
  if (i < 1) throw DomainError("ladder needs at least one vertex");
  std::string s(static_cast<std::size_t>(i - 1), '<');
  s.append(static_cast<std::size_t>(i - 1), '>');
  return PlanarTree::from_bba(s);
}

RootedTree ladder(int i) { return RootedTree::canonical(planar_ladder(i)); }

RootedTree t_lambda(const Partition& lambda) {
  std::vector<RootedTree> branches;
  for (int part : lambda.parts) branches.push_back(ladder(part));
  return RootedTree::graft(std::move(branches));
}

PlanarTree T_comp(const Composition& I) {
  std::vector<PlanarTree> branches;
  for (int part : I.parts) branches.push_back(planar_ladder(part));
  return PlanarTree::graft(branches);
}

}  // namespace hopftrees
