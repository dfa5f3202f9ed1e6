#include "hopftrees/special.hpp"

#include "hopftrees/limits.hpp"
#include "hopftrees/morphisms.hpp"
#include "hopftrees/symfun.hpp"

#include <algorithm>

namespace hopftrees {

namespace {

GLElem gl_mul(const GLElem& a, const GLElem& b) {
  return bilinear_extend([](const RootedTree& x, const RootedTree& y) { return gl_product(x, y); }, a, b);
}

long to_long(const Rational& r) { return r.numerator().get_si(); }

}  // namespace

GLElem kappa(int n) {
  require_degree(n, "kappa");
  GLElem out;
  for (const auto& t : enumerate_rooted(n)) out.add_term(t, Rational(1) / Rational(sym_order(t)));
  return out;
}

GLElem epsilon(int n) {
  require_degree(n, "epsilon");
  std::vector<GLElem> eps{GLElem(RootedTree())};
  for (int k = 1; k <= n; ++k) {
    GLElem e;
    for (int i = 1; i <= k; ++i) e += gl_mul(kappa(i), eps[static_cast<std::size_t>(k - i)]).scaled(Rational(i % 2 == 1 ? 1 : -1));
    eps.push_back(std::move(e));
  }
  return eps.back();
}

GLElem natural_growth(const GLElem& x, int k) {
  GLElem out = x;
  const GLElem l2(ladder(2));
  for (int i = 0; i < k; ++i) out = gl_mul(l2, out);
  return out;
}

long n_count(const Forest& u, const RootedTree& t, const RootedTree& t2) {
  return to_long(gl_product(bplus(u), t).coefficient(t2));
}

long m_count(const Forest& u, const RootedTree& t, const RootedTree& t2) {
  long count = 0;
  for (const auto& c : cuts_of(t2, true))
    if (c.trunk() == t && c.pruned() == u) ++count;
  return count;
}

bool CountTriple::identity_holds() const {
  return mpz_class(n_count) * sym_order(t2) == mpz_class(m_count) * sym_order(bplus(u)) * sym_order(t);
}

CountTriple count_triple(const Forest& u, const RootedTree& t, const RootedTree& t2) {
  return CountTriple{u, t, t2, n_count(u, t, t2), m_count(u, t, t2)};
}

Report count_identity_check(int n, long* triples) {
  require_degree(n, "count identity check");
  Report rep("attachment/cut counts");
  long total = 0;
  for (int d = 0; d <= n; ++d) {
    std::string w;
    const int vertices = d + 1;
    for (const auto& t2 : enumerate_rooted(d)) {
      // Map each admissible cut to its (u, t) pair once, then compare with
      // the attachment counts over every split of the vertex count.
      std::map<std::pair<Forest, RootedTree>, long> cut_counts;
      for (const auto& c : cuts_of(t2, true)) ++cut_counts[{c.pruned(), c.trunk()}];
      for (int uv = 0; uv < vertices; ++uv)
        for (const auto& u : enumerate_forests(uv))
          for (const auto& t : enumerate_rooted(vertices - uv - 1)) {
            auto it = cut_counts.find({u, t});
            CountTriple ct{u, t, t2, n_count(u, t, t2), it == cut_counts.end() ? 0 : it->second};
            ++total;
            if (w.empty() && !ct.identity_holds())
              w = "u = " + render_basis(u) + ", t = " + render_basis(t) + ", t' = " + render_basis(t2) +
                  ": n = " + std::to_string(ct.n_count) + ", m = " + std::to_string(ct.m_count);
          }
    }
    rep.record("n |Sym(t')| = m |Sym(B+u)| |Sym(t)|", d, w);
  }
  if (triples) *triples = total;
  return rep;
}

Report kappa_epsilon_check(int n) {
  require_degree(n, "kappa/epsilon check");
  Report rep("kappa/epsilon identities");
  GenericAntipode<RootedTree> antipode(gl_hopf());
  std::vector<GLElem> kappas;
  for (int i = 0; i <= n; ++i) kappas.push_back(kappa(i));
  for (int d = 0; d <= n; ++d) {
    const GLElem& k = kappas[static_cast<std::size_t>(d)];
    const GLElem e = epsilon(d);
    const Rational sign(d % 2 == 0 ? 1 : -1);

    auto sk = antipode.apply(k);
    rep.record("(a) epsilon_n = (-1)^n S(kappa_n)", d,
               e == sk.scaled(sign) ? "" : "epsilon = " + render(e) + ", S(kappa) = " + render(sk));

    auto pe = phi_star(e);
    auto en = basis_expand(SymGenerator::e, d);
    rep.record("(b) phi*(epsilon_n) = e_n", d, pe == en ? "" : "phi*(epsilon) = " + render(pe));

    Partition ones(std::vector<int>(static_cast<std::size_t>(d), 1));
    auto scaled = e.scaled(factorial(static_cast<unsigned>(d)));
    rep.record("(c) n! epsilon_n = t_{1^n}", d,
               scaled == GLElem(t_lambda(ones)) ? "" : "n! epsilon = " + render(scaled));

    auto pk = phi_star(k);
    rep.record("phi*(kappa_n) = h_n", d,
               pk == basis_expand(SymGenerator::h, d) ? "" : "phi*(kappa) = " + render(pk));

    auto dk = comultiply(gl_hopf(), k);
    TensorElem<RootedTree> expect;
    for (int i = 0; i <= d; ++i)
      for (const auto& [a, ca] : kappas[static_cast<std::size_t>(i)])
        for (const auto& [b, cb] : kappas[static_cast<std::size_t>(d - i)]) expect.add_term({a, b}, ca * cb);
    rep.record("Delta(kappa_n) = sum kappa_i (x) kappa_j", d, dk == expect ? "" : "Delta(kappa) = " + render(dk));

    PLElem all;
    for (const auto& T : enumerate_planar(d)) all.add_term(T, Rational(1));
    auto rk = rho_star(k);
    rep.record("rho*(kappa_n) = sum of planar trees", d, rk == all ? "" : "rho*(kappa) = " + render(rk));
  }
  return rep;
}

Report growth_formulas_check(int n) {
  require_degree(n, "growth formulas check");
  Report rep("natural growth");
  const SymElem e1 = basis_expand(SymGenerator::e, 1);
  for (int d = 0; d <= n; ++d) {
    // (i) targets of degree d: t = dot with k = d, t = t_lambda with k = d - |lambda|.
    std::string wi;
    for (int size = 0; size <= d; ++size) {
      const int k = d - size;
      std::vector<RootedTree> starts;
      if (size == 0)
        starts.push_back(RootedTree());
      else
        for (const auto& lam : partitions_of(size)) starts.push_back(t_lambda(lam));
      for (const auto& t : starts) {
        auto lhs = phi_star(natural_growth(GLElem(t), k));
        SymElem rhs = phi_star(GLElem(t));
        for (int i = 0; i < k; ++i) rhs = sym_product(e1, rhs);
        if (wi.empty() && lhs != rhs)
          wi = "t = " + render_basis(t) + ", k = " + std::to_string(k) + ": " + render(lhs) + " vs " + render(rhs);
      }
    }
    rep.record("phi*(N^k t) = e_1^k phi*(t)", d, wi);

    // (ii) m(dot, t_lambda; t_mu) for |mu| = d.
    std::string wii;
    if (d >= 1)
      for (const auto& lam : partitions_of(d - 1)) {
        auto prod = sym_product(e1, SymElem(lam));
        const int vars = static_cast<int>(lam.length()) + 1;
        auto series = series_product(series_oracle(embed(e1), vars, d), series_oracle(embed(SymElem(lam)), vars, d), d);
        for (const auto& mu : partitions_of(d)) {
          long m = m_count(Forest(RootedTree()), t_lambda(lam), t_lambda(mu));
          Rational coeff = prod.coefficient(mu);
          Rational oracle(0);
          if (static_cast<int>(mu.length()) <= vars) {
            std::vector<int> exps(static_cast<std::size_t>(vars), 0);
            std::copy(mu.parts.begin(), mu.parts.end(), exps.begin());
            if (auto it = series.find(exps); it != series.end()) oracle = it->second;
          }
          if (wii.empty() && (Rational(m) != coeff || coeff != oracle))
            wii = "lambda = " + render_parts(lam.parts) + ", mu = " + render_parts(mu.parts) + ": m = " +
                  std::to_string(m) + ", coefficient = " + coeff.to_string() + ", series = " + oracle.to_string();
        }
      }
    rep.record("m(dot, t_lambda; t_mu) = [m_mu] e_1 m_lambda", d, wii);

    // (iii) n(dot; t_lambda), |lambda| = d.
    std::string wiii;
    auto grown = natural_growth(GLElem(RootedTree()), d);
    for (const auto& lam : partitions_of(d)) {
      Rational multinomial = factorial(static_cast<unsigned>(d));
      for (int part : lam.parts) multinomial /= factorial(static_cast<unsigned>(part));
      auto t = t_lambda(lam);
      Rational expect = multinomial / Rational(sym_order(t));
      if (wiii.empty() && grown.coefficient(t) != expect)
        wiii = "lambda = " + render_parts(lam.parts) + ": " + grown.coefficient(t).to_string() + " vs " +
               expect.to_string();
    }
    rep.record("n(dot; t_lambda) = C(|lambda|; lambda) / |Sym(t_lambda)|", d, wiii);
  }
  return rep;
}

}  // namespace hopftrees
