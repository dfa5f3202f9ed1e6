#include "hopftrees/dse.hpp"

#include "hopftrees/compositions.hpp"
#include "hopftrees/limits.hpp"

#include <functional>

namespace hopftrees {

namespace {

template <Ring S>
LinComb<OrderedForest, S> hf_mul(const LinComb<OrderedForest, S>& a, const LinComb<OrderedForest, S>& b) {
  return bilinear_extend([](const OrderedForest& x, const OrderedForest& y) { return FElem(x * y); }, a, b);
}

template <Ring S>
LinComb<Forest, S> hk_mul(const LinComb<Forest, S>& a, const LinComb<Forest, S>& b) {
  return bilinear_extend([](const Forest& x, const Forest& y) { return CKElem(x * y); }, a, b);
}

// binom(p, k) for rational p, from the falling factorial.
Rational rational_binom(const Rational& p, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r = r * (p - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i) + 1);
  return r;
}

template <Ring S>
DSESolutionT<S> solve_recursive_with(int n, const std::function<S(unsigned)>& binom) {
  require_degree(n, "Dyson-Schwinger solver");
  DSESolutionT<S> sol;
  sol.hf_terms.emplace_back(OrderedForest(), S(1));
  sol.hk_terms.emplace_back(Forest(), S(1));
  if (n == 0) return sol;
  sol.hf_terms.emplace_back(OrderedForest(PlanarTree()), S(1));
  sol.hk_terms.emplace_back(Forest(RootedTree()), S(1));
  for (int m = 1; m < n; ++m) {
    LinComb<OrderedForest, S> xf;
    LinComb<Forest, S> xk;
    for (int k = 1; k <= m; ++k) {
      LinComb<OrderedForest, S> inner_f;
      LinComb<Forest, S> inner_k;
      for (const auto& c : compositions_of(m, k)) {
        LinComb<OrderedForest, S> pf(OrderedForest(), S(1));
        LinComb<Forest, S> pk(Forest(), S(1));
        for (int part : c.parts) {
          pf = hf_mul(pf, sol.hf_terms[static_cast<std::size_t>(part)]);
          pk = hk_mul(pk, sol.hk_terms[static_cast<std::size_t>(part)]);
        }
        inner_f += pf;
        inner_k += pk;
      }
      const S b = binom(static_cast<unsigned>(k));
      for (const auto& [f, c] : inner_f) xf.add_term(OrderedForest(bplus_ordered(f)), c * b);
      for (const auto& [f, c] : inner_k) xk.add_term(Forest(bplus(f)), c * b);
    }
    sol.hf_terms.push_back(std::move(xf));
    sol.hk_terms.push_back(std::move(xk));
  }
  return sol;
}

template <Ring S>
LinComb<Forest, S> rho_of(const LinComb<OrderedForest, S>& x) {
  LinComb<Forest, S> out;
  for (const auto& [f, c] : x) {
    std::vector<RootedTree> trees;
    for (const auto& t : f.trees()) trees.push_back(canonicalize(t));
    out.add_term(Forest(std::move(trees)), c);
  }
  return out;
}

PolyP cp_from_bba(std::string_view bba) {
  PolyP r(1);
  for (int c : child_counts(bba))
    if (c > 0) r = r * binom_poly(static_cast<unsigned>(c));
  return r;
}

}  // namespace

DSESolution solve_recursive(int n) {
  return solve_recursive_with<PolyP>(n, [](unsigned k) { return binom_poly(k); });
}

DSESolutionT<Rational> solve_recursive_at(int n, const Rational& p) {
  return solve_recursive_with<Rational>(n, [&](unsigned k) { return rational_binom(p, k); });
}

PolyP cp_coefficient(const PlanarTree& t) { return cp_from_bba(t.bba()); }
PolyP cp_coefficient(const RootedTree& t) { return cp_from_bba(t.bba()); }

PolyP expanded_coefficient(const RootedTree& t) {
  PolyP r(Rational(1) / Rational(sym_order(t)));
  for (int c : child_counts(t.bba()))
    for (int i = 0; i < c; ++i) r = r * (PolyP::p() - PolyP(static_cast<long>(i)));
  return r;
}

DSESolution solve_closed(int n) {
  require_degree(n, "Dyson-Schwinger solver");
  DSESolution sol;
  sol.hf_terms.emplace_back(OrderedForest(), PolyP(1));
  sol.hk_terms.emplace_back(Forest(), PolyP(1));
  for (int m = 1; m <= n; ++m) {
    FPoly xf;
    for (const auto& T : enumerate_planar(m - 1)) xf.add_term(OrderedForest(T), cp_coefficient(T));
    CKPoly xk;
    for (const auto& t : enumerate_rooted(m - 1))
      xk.add_term(Forest(t), PolyP(Rational(embedding_count(t))) * cp_coefficient(t));
    sol.hf_terms.push_back(std::move(xf));
    sol.hk_terms.push_back(std::move(xk));
  }
  return sol;
}

DSESolutionT<Rational> evaluate(const DSESolution& s, const Rational& p) {
  DSESolutionT<Rational> out;
  for (const auto& x : s.hf_terms) {
    FElem e;
    for (const auto& [f, c] : x) e.add_term(f, c.eval(p));
    out.hf_terms.push_back(std::move(e));
  }
  for (const auto& x : s.hk_terms) {
    CKElem e;
    for (const auto& [f, c] : x) e.add_term(f, c.eval(p));
    out.hk_terms.push_back(std::move(e));
  }
  return out;
}

CKPoly q_poly(int n, int k, const DSESolution& s) {
  if (k < 1 || k > n || n > s.max_degree()) throw DomainError("q_{n,k} needs 1 <= k <= n <= solved degree");
  const PolyP arg = PolyP(static_cast<long>(k)) * (PolyP::p() - PolyP(1)) + PolyP(1);
  CKPoly out;
  // (i_1, i_2, ...) with i_1 + 2 i_2 + ... = n - k is a partition of n - k.
  for (const auto& mu : partitions_of(n - k)) {
    const int total = static_cast<int>(mu.length());
    Rational multinomial = factorial(static_cast<unsigned>(total));
    CKPoly monomial(Forest(), PolyP(1));
    for (int j = 1; j <= n - k; ++j) {
      const int i = mu.multiplicity(j);
      multinomial /= factorial(static_cast<unsigned>(i));
      for (int r = 0; r < i; ++r) monomial = hk_mul(monomial, s.hk_terms[static_cast<std::size_t>(j)]);
    }
    out += monomial.scaled(binom_at(arg, static_cast<unsigned>(total)) * PolyP(multinomial));
  }
  return out;
}

FPoly Q_poly(int n, int k, const DSESolution& s) {
  if (k < 1 || k > n || n > s.max_degree()) throw DomainError("Q_{n,k} needs 1 <= k <= n <= solved degree");
  const PolyP arg = PolyP(static_cast<long>(k)) * (PolyP::p() - PolyP(1)) + PolyP(1);
  FPoly out;
  for (const auto& c : compositions_of(n - k)) {
    FPoly word(OrderedForest(), PolyP(1));
    for (int part : c.parts) word = hf_mul(word, s.hf_terms[static_cast<std::size_t>(part)]);
    out += word.scaled(binom_at(arg, static_cast<unsigned>(c.length())));
  }
  return out;
}

Report dse_coproduct_check(int n_hk, int n_hf) {
  const int n = std::max(n_hk, n_hf);
  require_degree(n, "coproduct formula check");
  const DSESolution s = solve_closed(n);
  Report rep("Dyson-Schwinger coproduct");
  for (int m = 1; m <= n_hk; ++m) {
    const auto& x = s.hk_terms[static_cast<std::size_t>(m)];
    auto lhs = linear_extend([](const Forest& f) { return ck_coproduct(f); }, x);
    TensorElem<Forest, PolyP> rhs;
    for (const auto& [f, c] : x) rhs.add_term({f, Forest()}, c);
    for (int k = 1; k <= m; ++k) {
      auto q = q_poly(m, k, s);
      for (const auto& [a, ca] : q)
        for (const auto& [b, cb] : s.hk_terms[static_cast<std::size_t>(k)]) rhs.add_term({a, b}, ca * cb);
    }
    std::string w;
    if (lhs != rhs) {
      auto diff = lhs - rhs;
      w = "n = " + std::to_string(m) + ": first differing term " + render_basis(diff.begin()->first) + " with " +
          render(TensorElem<Forest, PolyP>(diff.begin()->first, diff.begin()->second));
    }
    rep.record("Delta(x_n) in H_K", m, w);
  }
  for (int m = 1; m <= n_hf; ++m) {
    const auto& x = s.hf_terms[static_cast<std::size_t>(m)];
    auto lhs = linear_extend([](const OrderedForest& f) { return hf_coproduct(f); }, x);
    TensorElem<OrderedForest, PolyP> rhs;
    for (const auto& [f, c] : x) rhs.add_term({f, OrderedForest()}, c);
    for (int k = 1; k <= m; ++k) {
      auto q = Q_poly(m, k, s);
      for (const auto& [a, ca] : q)
        for (const auto& [b, cb] : s.hf_terms[static_cast<std::size_t>(k)]) rhs.add_term({a, b}, ca * cb);
    }
    std::string w;
    if (lhs != rhs) {
      auto diff = lhs - rhs;
      w = "n = " + std::to_string(m) + ": first differing term " + render_basis(diff.begin()->first);
    }
    rep.record("Delta(X_n) in H_F", m, w);
  }
  return rep;
}

Report dse_check(int n) {
  require_degree(n, "Dyson-Schwinger check");
  Report rep("Dyson-Schwinger solution");
  const DSESolution rec = solve_recursive(n);
  const DSESolution closed = solve_closed(n);
  const auto at2 = solve_recursive_at(n, Rational(2));
  const auto closed2 = evaluate(closed, Rational(2));
  const auto at1 = evaluate(closed, Rational(1));
  for (int m = 1; m <= n; ++m) {
    const auto i = static_cast<std::size_t>(m);
    rep.record("recursive = closed in H_F", m,
               rec.hf_terms[i] == closed.hf_terms[i] ? "" : "recursive X_n = " + render(rec.hf_terms[i]));
    rep.record("recursive = closed in H_K", m,
               rec.hk_terms[i] == closed.hk_terms[i] ? "" : "recursive x_n = " + render(rec.hk_terms[i]));
    rep.record("rho(X_n) = x_n", m, rho_of(closed.hf_terms[i]) == closed.hk_terms[i] ? "" : "mismatch");

    std::string we;
    for (const auto& t : enumerate_rooted(m - 1)) {
      PolyP lhs = PolyP(Rational(embedding_count(t))) * cp_coefficient(t);
      if (lhs != expanded_coefficient(t)) {
        we = render_basis(t) + ": " + lhs.to_string() + " vs " + expanded_coefficient(t).to_string();
        break;
      }
    }
    rep.record("e(t) C_p(t) = expanded coefficient", m, we);

    rep.record("p = 1 gives ladders", m,
               at1.hk_terms[i] == CKElem(Forest(ladder(m))) && at1.hf_terms[i] == FElem(OrderedForest(planar_ladder(m)))
                   ? ""
                   : "x_n(1) = " + render(at1.hk_terms[i]));
    rep.record("p = 2 rational recursion = evaluation", m,
               at2.hf_terms[i] == closed2.hf_terms[i] && at2.hk_terms[i] == closed2.hk_terms[i]
                   ? ""
                   : "X_n(2) = " + render(at2.hf_terms[i]) + " vs " + render(closed2.hf_terms[i]));
  }
  return rep;
}

}  // namespace hopftrees
