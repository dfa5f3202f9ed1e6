#pragma once

// Graded connected Hopf algebras given on a basis, the antipode recursion,
// and exhaustive law checkers.

#include "hopftrees/errors.hpp"
#include "hopftrees/lincomb.hpp"
#include "hopftrees/report.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace hopftrees {

template <BasisElement B>
struct HopfOps {
  std::string name;
  B unit;
  std::function<LinComb<B>(const B&, const B&)> product;
  std::function<TensorElem<B>(const B&)> coproduct;
  std::function<int(const B&)> degree;
  // Every basis element of the given degree.
  std::function<std::vector<B>(int)> basis;
  // Explicit antipode formula, when the algebra has one.
  std::function<LinComb<B>(const B&)> antipode;
  // Defaults to 1 on the unit and 0 elsewhere.
  std::function<Rational(const B&)> counit;

  Rational eps(const B& x) const {
    if (counit) return counit(x);
    return x == unit ? Rational(1) : Rational(0);
  }
};

template <BasisElement B, Ring S>
LinComb<B, S> multiply(const HopfOps<B>& h, const LinComb<B, S>& a, const LinComb<B, S>& b) {
  return bilinear_extend(h.product, a, b);
}

template <BasisElement B, Ring S>
TensorElem<B, S> comultiply(const HopfOps<B>& h, const LinComb<B, S>& a) {
  return linear_extend(h.coproduct, a);
}

// Returns an empty string if Delta(x) = x (x) 1 + (positive, positive) + 1 (x) x,
// otherwise a description of the defect.
template <BasisElement B>
std::string coproduct_form_defect(const HopfOps<B>& h, const B& x, const TensorElem<B>& dx) {
  if (x == h.unit) {
    TensorElem<B> expect(std::make_pair(h.unit, h.unit));
    return dx == expect ? std::string() : "Delta(1) = " + render(dx);
  }
  if (dx.coefficient({x, h.unit}) != Rational(1) || dx.coefficient({h.unit, x}) != Rational(1))
    return "Delta(" + render_basis(x) + ") lacks x(x)1 or 1(x)x: " + render(dx);
  for (const auto& [p, c] : dx) {
    if (p == std::pair{x, h.unit} || p == std::pair{h.unit, x}) continue;
    if (h.degree(p.first) == 0 || h.degree(p.second) == 0)
      return "Delta(" + render_basis(x) + ") has a degree-0 factor in " + render_basis(p);
  }
  return {};
}

// S(1) = 1 and S(u) = -u - sum S(u') u'' over the reduced coproduct. Results
// are memoized per basis element; safe to share across threads.
template <BasisElement B>
class GenericAntipode {
 public:
  explicit GenericAntipode(const HopfOps<B>& h) : h_(h) {}

  LinComb<B> operator()(const B& x) {
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    }
    LinComb<B> result = compute(x);
    std::lock_guard lock(mu_);
    memo_.emplace(x, result);
    return result;
  }

  template <Ring S>
  LinComb<B, S> apply(const LinComb<B, S>& a) {
    return linear_extend([this](const B& b) { return (*this)(b); }, a);
  }

 private:
  LinComb<B> compute(const B& x) {
    if (x == h_.unit) return LinComb<B>(x);
    auto dx = h_.coproduct(x);
    if (auto defect = coproduct_form_defect(h_, x, dx); !defect.empty()) throw DomainError(defect);
    LinComb<B> s = -LinComb<B>(x);
    for (const auto& [p, c] : dx) {
      if (p.first == h_.unit || p.second == h_.unit) continue;
      s -= multiply(h_, (*this)(p.first), LinComb<B>(p.second)).scaled(c);
    }
    return s;
  }

  const HopfOps<B>& h_;
  std::mutex mu_;
  std::map<B, LinComb<B>> memo_;
};

template <BasisElement B>
LinComb<B> generic_antipode(const HopfOps<B>& h, const B& x) {
  return GenericAntipode<B>(h)(x);
}

namespace detail {

template <BasisElement B>
class BasisTable {
 public:
  BasisTable(const HopfOps<B>& h, int max_degree) {
    for (int d = 0; d <= max_degree; ++d) by_degree_.push_back(h.basis(d));
  }
  const std::vector<B>& of(int d) const { return by_degree_.at(static_cast<std::size_t>(d)); }
  int max_degree() const { return static_cast<int>(by_degree_.size()) - 1; }

 private:
  std::vector<std::vector<B>> by_degree_;
};

template <BasisElement B, class F>
void for_each_pair(const BasisTable<B>& t, int total, F&& f) {
  for (int a = 0; a <= total; ++a)
    for (const auto& x : t.of(a))
      for (const auto& y : t.of(total - a)) f(x, y);
}

template <BasisElement B, class F>
void for_each_triple(const BasisTable<B>& t, int total, F&& f) {
  for (int a = 0; a <= total; ++a)
    for (int b = 0; a + b <= total; ++b)
      for (const auto& x : t.of(a))
        for (const auto& y : t.of(b))
          for (const auto& z : t.of(total - a - b)) f(x, y, z);
}

template <BasisElement B>
LinComb<B> counit_left(const HopfOps<B>& h, const TensorElem<B>& dx) {
  LinComb<B> r;
  for (const auto& [p, c] : dx) r.add_term(p.second, c * h.eps(p.first));
  return r;
}

template <BasisElement B>
LinComb<B> counit_right(const HopfOps<B>& h, const TensorElem<B>& dx) {
  LinComb<B> r;
  for (const auto& [p, c] : dx) r.add_term(p.first, c * h.eps(p.second));
  return r;
}

// (Delta (x) id) and (id (x) Delta) as combinations of basis triples.
template <BasisElement B>
using Triple = std::tuple<B, B, B>;

template <BasisElement B>
std::string render_basis(const Triple<B>& t) {
  return render_basis(std::get<0>(t)) + " ⊗ " + render_basis(std::get<1>(t)) + " ⊗ " +
         render_basis(std::get<2>(t));
}

}  // namespace detail

struct AxiomOptions {
  // Also verify S(S(x)) = x (commutative or cocommutative algebras).
  bool involutive_antipode = false;
  bool check_cocommutative = false;
  bool check_commutative = false;
};

// Exhaustive verification of the graded connected Hopf algebra laws on every
// basis element (pairs and triples for the product laws) up to max_degree.
template <BasisElement B>
Report check_axioms(const HopfOps<B>& h, int max_degree, AxiomOptions opts = {}) {
  Report rep(h.name);
  detail::BasisTable<B> table(h, max_degree);
  GenericAntipode<B> generic(h);
  auto antipode = [&](const B& x) { return h.antipode ? h.antipode(x) : generic(x); };
  std::map<B, TensorElem<B>> delta;
  auto cop = [&](const B& x) -> const TensorElem<B>& {
    auto it = delta.find(x);
    if (it == delta.end()) it = delta.emplace(x, h.coproduct(x)).first;
    return it->second;
  };
  auto tensor_degree_ok = [&](const TensorElem<B>& t, int d) {
    for (const auto& [p, c] : t)
      if (h.degree(p.first) + h.degree(p.second) != d) return false;
    return true;
  };
  const LinComb<B> one(h.unit);

  for (int d = 0; d <= max_degree; ++d) {
    const auto& basis = table.of(d);
    std::string w_deg, w_counit_val, w_unit, w_cograd, w_form, w_counit, w_coassoc, w_anti, w_inv,
        w_cocomm;
    for (const auto& x : basis) {
      if (h.degree(x) != d && w_deg.empty()) w_deg = render_basis(x) + " listed in wrong degree";
      Rational e = h.eps(x);
      if (e != Rational(d == 0 ? 1 : 0) && w_counit_val.empty())
        w_counit_val = "eps(" + render_basis(x) + ") = " + e.to_string();
      LinComb<B> lx(x);
      if (w_unit.empty() && (multiply(h, one, lx) != lx || multiply(h, lx, one) != lx))
        w_unit = "1*x != x*1 != x for x = " + render_basis(x);
      const auto& dx = cop(x);
      if (w_cograd.empty() && !tensor_degree_ok(dx, d))
        w_cograd = "Delta(" + render_basis(x) + ") = " + render(dx);
      if (w_form.empty()) w_form = coproduct_form_defect(h, x, dx);
      if (w_counit.empty() &&
          (detail::counit_left(h, dx) != lx || detail::counit_right(h, dx) != lx))
        w_counit = "x = " + render_basis(x) + ", Delta(x) = " + render(dx);
      if (w_coassoc.empty()) {
        LinComb<detail::Triple<B>> left, right;
        for (const auto& [p, c] : dx) {
          for (const auto& [q, cq] : cop(p.first))
            left.add_term({q.first, q.second, p.second}, c * cq);
          for (const auto& [q, cq] : cop(p.second))
            right.add_term({p.first, q.first, q.second}, c * cq);
        }
        if (left != right) w_coassoc = "x = " + render_basis(x);
      }
      if (w_anti.empty()) {
        LinComb<B> sl, sr;
        for (const auto& [p, c] : dx) {
          sl += multiply(h, antipode(p.first), LinComb<B>(p.second)).scaled(c);
          sr += multiply(h, LinComb<B>(p.first), antipode(p.second)).scaled(c);
        }
        LinComb<B> expect = one.scaled(e);
        if (sl != expect || sr != expect)
          w_anti = "x = " + render_basis(x) + ": S*id = " + render(sl) + ", id*S = " + render(sr);
      }
      if (opts.involutive_antipode && w_inv.empty()) {
        auto ssx = linear_extend(antipode, antipode(x));
        if (ssx != lx) w_inv = "S(S(" + render_basis(x) + ")) = " + render(ssx);
      }
      if (opts.check_cocommutative && w_cocomm.empty() && swap_factors(dx) != dx)
        w_cocomm = "Delta(" + render_basis(x) + ") = " + render(dx);
    }
    rep.record("basis-degree", d, w_deg);
    rep.record("counit-value", d, w_counit_val);
    rep.record("unit", d, w_unit);
    rep.record("coproduct-grading", d, w_cograd);
    rep.record("coproduct-form", d, w_form);
    rep.record("counit", d, w_counit);
    rep.record("coassociativity", d, w_coassoc);
    rep.record("antipode", d, w_anti);
    if (opts.involutive_antipode) rep.record("antipode-involution", d, w_inv);
    if (opts.check_cocommutative) rep.record("cocommutativity", d, w_cocomm);

    std::string w_grad, w_mult, w_comm;
    detail::for_each_pair(table, d, [&](const B& x, const B& y) {
      auto xy = h.product(x, y);
      if (w_grad.empty())
        for (const auto& [b, c] : xy)
          if (h.degree(b) != d) {
            w_grad = render_basis(x) + " * " + render_basis(y) + " = " + render(xy);
            break;
          }
      if (w_mult.empty()) {
        auto lhs = comultiply(h, xy);
        auto rhs = tensor_product(h.product, cop(x), cop(y));
        if (lhs != rhs) w_mult = "x = " + render_basis(x) + ", y = " + render_basis(y);
      }
      if (opts.check_commutative && w_comm.empty() && xy != h.product(y, x))
        w_comm = render_basis(x) + " * " + render_basis(y);
    });
    rep.record("product-grading", d, w_grad);
    rep.record("multiplicativity", d, w_mult);
    if (opts.check_commutative) rep.record("commutativity", d, w_comm);

    std::string w_assoc;
    detail::for_each_triple(table, d, [&](const B& x, const B& y, const B& z) {
      if (!w_assoc.empty()) return;
      LinComb<B> lx(x), ly(y), lz(z);
      if (multiply(h, multiply(h, lx, ly), lz) != multiply(h, lx, multiply(h, ly, lz)))
        w_assoc = "x = " + render_basis(x) + ", y = " + render_basis(y) + ", z = " + render_basis(z);
    });
    rep.record("associativity", d, w_assoc);
  }
  return rep;
}

// Compares an explicit antipode formula with the generic recursion.
template <BasisElement B>
Report check_antipode_agreement(const HopfOps<B>& h, int max_degree) {
  Report rep(h.name);
  GenericAntipode<B> generic(h);
  for (int d = 0; d <= max_degree; ++d) {
    std::string w;
    for (const auto& x : h.basis(d)) {
      auto explicit_s = h.antipode(x);
      auto generic_s = generic(x);
      if (explicit_s != generic_s) {
        w = render_basis(x) + ": formula " + render(explicit_s) + " vs recursion " + render(generic_s);
        break;
      }
    }
    rep.record("antipode-formula-vs-recursion", d, w);
  }
  return rep;
}

// Duality criterion for a degree-preserving map phi: A -> B and inner
// products on A and B. Checks, for basis a1, a2, a3 of A,
//   (a) (a1, a2)_A = (phi a1, phi a2)_B
//   (b) (a1 a2, a3)_A = (phi a1 (x) phi a2, Delta phi a3)_B
//   (c) (a1 (x) a2, Delta a3)_A = (phi a1 phi a2, phi a3)_B
// over all a1, a2 with deg a1 + deg a2 <= max_degree and all a3 of degree
// <= max_degree, so both matching and mismatched degrees are covered.
template <BasisElement BA, BasisElement BB>
Report duality_check(const HopfOps<BA>& ha, const HopfOps<BB>& hb,
                     const std::function<LinComb<BB>(const BA&)>& phi,
                     const std::function<Rational(const BA&, const BA&)>& pair_a,
                     const std::function<Rational(const BB&, const BB&)>& pair_b, int max_degree) {
  Report rep(ha.name + " / " + hb.name);
  detail::BasisTable<BA> table(ha, max_degree);
  std::vector<BA> all;
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& x : table.of(d)) all.push_back(x);
  std::map<BA, LinComb<BB>> phis;
  std::map<BA, TensorElem<BA>> delta_a;
  std::map<BA, TensorElem<BB>> delta_phi;
  for (const auto& x : all) {
    phis.emplace(x, phi(x));
    delta_a.emplace(x, ha.coproduct(x));
    delta_phi.emplace(x, comultiply(hb, phis.at(x)));
  }
  auto tensor_of = [](const auto& l, const auto& r) {
    using T = typename std::decay_t<decltype(l)>::basis_type;
    TensorElem<T> t;
    for (const auto& [x, cx] : l)
      for (const auto& [y, cy] : r) t.add_term({x, y}, cx * cy);
    return t;
  };

  for (int d = 0; d <= max_degree; ++d) {
    std::string wa;
    for (int e = 0; e <= max_degree; ++e)
      for (const auto& a1 : table.of(d))
        for (const auto& a2 : table.of(e)) {
          if (!wa.empty()) break;
          Rational lhs = pair_a(a1, a2);
          Rational rhs = pairing_extend(pair_b, phis.at(a1), phis.at(a2));
          if (lhs != rhs)
            wa = "a1 = " + render_basis(a1) + ", a2 = " + render_basis(a2) + ": " +
                 lhs.to_string() + " vs " + rhs.to_string();
        }
    rep.record("duality (a)", d, wa);

    std::string wb, wc;
    detail::for_each_pair(table, d, [&](const BA& a1, const BA& a2) {
      auto prod_a = ha.product(a1, a2);
      auto prod_b = multiply(hb, phis.at(a1), phis.at(a2));
      auto tens_b = tensor_of(phis.at(a1), phis.at(a2));
      TensorElem<BA> tens_a(std::make_pair(a1, a2));
      for (const auto& a3 : all) {
        if (wb.empty()) {
          Rational lhs = pairing_extend(pair_a, prod_a, LinComb<BA>(a3));
          Rational rhs = tensor_pairing(pair_b, tens_b, delta_phi.at(a3));
          if (lhs != rhs)
            wb = "a1 = " + render_basis(a1) + ", a2 = " + render_basis(a2) + ", a3 = " +
                 render_basis(a3) + ": " + lhs.to_string() + " vs " + rhs.to_string();
        }
        if (wc.empty()) {
          Rational lhs = tensor_pairing(pair_a, tens_a, delta_a.at(a3));
          Rational rhs = pairing_extend(pair_b, prod_b, phis.at(a3));
          if (lhs != rhs)
            wc = "a1 = " + render_basis(a1) + ", a2 = " + render_basis(a2) + ", a3 = " +
                 render_basis(a3) + ": " + lhs.to_string() + " vs " + rhs.to_string();
        }
      }
    });
    rep.record("duality (b)", d, wb);
    rep.record("duality (c)", d, wc);
  }
  return rep;
}

// Checks that f: A -> B preserves degree, unit, counit, product and
// coproduct on every basis element (and pair, for the product) of A up to
// max_degree.
template <BasisElement BA, BasisElement BB>
Report check_hopf_morphism(const HopfOps<BA>& ha, const HopfOps<BB>& hb,
                           const std::function<LinComb<BB>(const BA&)>& f, const std::string& name,
                           int max_degree) {
  Report rep(name + ": " + ha.name + " -> " + hb.name);
  detail::BasisTable<BA> table(ha, max_degree);
  std::map<BA, LinComb<BB>> image;
  auto img = [&](const BA& x) -> const LinComb<BB>& {
    auto it = image.find(x);
    if (it == image.end()) it = image.emplace(x, f(x)).first;
    return it->second;
  };
  for (int d = 0; d <= max_degree; ++d) {
    std::string w_unit, w_grad, w_counit, w_cop, w_prod;
    if (d == 0 && img(ha.unit) != LinComb<BB>(hb.unit)) w_unit = "f(1) = " + render(img(ha.unit));
    for (const auto& x : table.of(d)) {
      const auto& fx = img(x);
      for (const auto& [b, c] : fx)
        if (w_grad.empty() && hb.degree(b) != d) w_grad = "f(" + render_basis(x) + ") = " + render(fx);
      Rational e(0);
      for (const auto& [b, c] : fx) e += c * hb.eps(b);
      if (w_counit.empty() && e != ha.eps(x)) w_counit = "x = " + render_basis(x);
      if (w_cop.empty()) {
        auto lhs = comultiply(hb, fx);
        TensorElem<BB> rhs;
        for (const auto& [p, c] : ha.coproduct(x))
          for (const auto& [l, cl] : img(p.first))
            for (const auto& [r, cr] : img(p.second)) rhs.add_term({l, r}, c * cl * cr);
        if (lhs != rhs) w_cop = "x = " + render_basis(x) + ": " + render(lhs) + " vs " + render(rhs);
      }
    }
    detail::for_each_pair(table, d, [&](const BA& x, const BA& y) {
      if (!w_prod.empty()) return;
      auto lhs = linear_extend(f, ha.product(x, y));
      auto rhs = multiply(hb, img(x), img(y));
      if (lhs != rhs) w_prod = "x = " + render_basis(x) + ", y = " + render_basis(y);
    });
    if (d == 0) rep.record("unit", d, w_unit);
    rep.record("grading", d, w_grad);
    rep.record("counit", d, w_counit);
    rep.record("coproduct", d, w_cop);
    rep.record("product", d, w_prod);
  }
  return rep;
}

}  // namespace hopftrees
