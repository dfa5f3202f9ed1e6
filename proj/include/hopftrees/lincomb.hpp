#pragma once

// Finite linear combinations over a totally ordered basis, their tensor
// squares, and bilinear pairings.

#include "hopftrees/scalar.hpp"

#include <map>
#include <string>
#include <utility>

namespace hopftrees {

template <class B>
concept BasisElement = std::totally_ordered<B> && std::copyable<B>;

// Terms are kept sorted by basis order and never store a zero coefficient.
template <BasisElement B, Ring S = Rational>
class LinComb {
 public:
  using basis_type = B;
  using scalar_type = S;
  using map_type = std::map<B, S>;

  LinComb() = default;
  explicit LinComb(const B& b, S c = S(1)) { add_term(b, std::move(c)); }

  const map_type& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  S coefficient(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(const B& b, const S& c) {
    if (is_zero_scalar(c)) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  LinComb operator-() const {
    LinComb r;
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
  }
  friend LinComb operator*(const S& s, const LinComb& a) { return a.scaled(s); }

  LinComb scaled(const S& s) const {
    LinComb r;
    if (is_zero_scalar(s)) return r;
    for (const auto& [b, c] : terms_) r.add_term(b, c * s);
    return r;
  }

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  static bool is_zero_scalar(const S& s) { return hopftrees::is_zero(s); }
  map_type terms_;
};

template <BasisElement B, Ring S = Rational>
using TensorElem = LinComb<std::pair<B, B>, S>;

template <BasisElement B, Ring S>
LinComb<B, S> scale(const S& s, const LinComb<B, S>& a) {
  return a.scaled(s);
}

// Lifts a Q-linear combination to scalars S (Q embeds in every ring used here).
template <Ring S, BasisElement B>
LinComb<B, S> lift(const LinComb<B, Rational>& a) {
  if constexpr (std::is_same_v<S, Rational>) {
    return a;
  } else {
    LinComb<B, S> r;
    for (const auto& [b, c] : a) r.add_term(b, S(c));
    return r;
  }
}

// Sum over terms of coeff * f(basis). `f` returns a combination over any
// basis, with coefficients in Q or in S.
template <BasisElement B, Ring S, class F>
auto linear_extend(F&& f, const LinComb<B, S>& a) {
  using Out = std::invoke_result_t<F&, const B&>;
  using C = typename Out::basis_type;
  LinComb<C, S> r;
  for (const auto& [b, c] : a) {
    for (const auto& [ob, oc] : f(b)) r.add_term(ob, c * S(oc));
  }
  return r;
}

// Sum over term pairs of ca * cb * f(x, y).
template <BasisElement B1, BasisElement B2, Ring S, class F>
auto bilinear_extend(F&& f, const LinComb<B1, S>& a, const LinComb<B2, S>& b) {
  using Out = std::invoke_result_t<F&, const B1&, const B2&>;
  using C = typename Out::basis_type;
  LinComb<C, S> r;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) {
      S k = cx * cy;
      for (const auto& [ob, oc] : f(x, y)) r.add_term(ob, k * S(oc));
    }
  }
  return r;
}

// Product in A (x) A given the product of A: (a (x) b)(c (x) d) = ac (x) bd.
template <BasisElement B, Ring S, class Mul>
TensorElem<B, S> tensor_product(Mul&& mul, const TensorElem<B, S>& x, const TensorElem<B, S>& y) {
  TensorElem<B, S> r;
  for (const auto& [p, cp] : x) {
    for (const auto& [q, cq] : y) {
      auto left = mul(p.first, q.first);
      auto right = mul(p.second, q.second);
      S k = cp * cq;
      for (const auto& [l, cl] : left)
        for (const auto& [rr, cr] : right) r.add_term({l, rr}, k * S(cl) * S(cr));
    }
  }
  return r;
}

template <BasisElement B, Ring S>
TensorElem<B, S> swap_factors(const TensorElem<B, S>& x) {
  TensorElem<B, S> r;
  for (const auto& [p, c] : x) r.add_term({p.second, p.first}, c);
  return r;
}

// Bilinear extension of a basis pairing.
template <BasisElement B, Ring S, class P>
S pairing_extend(P&& base, const LinComb<B, S>& a, const LinComb<B, S>& b) {
  S acc(0);
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      auto v = base(x, y);
      if (!is_zero(v)) acc = acc + cx * cy * S(v);
    }
  return acc;
}

// (a (x) b, c (x) d) = (a, c)(b, d)
template <BasisElement B, Ring S, class P>
S tensor_pairing(P&& base, const TensorElem<B, S>& x, const TensorElem<B, S>& y) {
  S acc(0);
  for (const auto& [p, cp] : x)
    for (const auto& [q, cq] : y) {
      auto l = base(p.first, q.first);
      if (is_zero(l)) continue;
      auto r = base(p.second, q.second);
      if (is_zero(r)) continue;
      acc = acc + cp * cq * S(l) * S(r);
    }
  return acc;
}

// Text rendering. Basis elements render through an ADL-visible
// `render_basis(const B&)`; tensor factors are joined with " ⊗ ".
template <class B1, class B2>
std::string render_basis(const std::pair<B1, B2>& p) {
  return render_basis(p.first) + " ⊗ " + render_basis(p.second);
}

namespace detail {
inline std::string coefficient_prefix(const Rational& c, bool& negative) {
  negative = c.sign() < 0;
  Rational a = negative ? -c : c;
  return a.is_one() ? std::string() : a.to_string() + "*";
}
inline std::string coefficient_prefix(const PolyP& c, bool& negative) {
  if (c.is_constant()) return coefficient_prefix(c.coefficient(0), negative);
  negative = false;
  return "(" + c.to_string() + ")*";
}
}  // namespace detail

template <BasisElement B, Ring S>
std::string render(const LinComb<B, S>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : a) {
    bool negative = false;
    std::string prefix = detail::coefficient_prefix(c, negative);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += prefix + render_basis(b);
    first = false;
  }
  return out;
}

}  // namespace hopftrees
