#include "hopftrees/scalar.hpp"

#include "hopftrees/errors.hpp"

#include <cctype>

namespace hopftrees {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view s) {
  auto digits = [&](std::string_view part, std::size_t base) {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw ParseError("expected digits", base + i);
    for (std::size_t j = i; j < part.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(part[j])))
        throw ParseError("unexpected character in rational", base + j);
    std::string text(part.substr(part[0] == '+' ? 1 : 0));
    return mpz_class(text, 10);
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(digits(s, 0));
  auto num = digits(s.substr(0, slash), 0);
  auto den_text = s.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("denominator must be a positive integer", slash + 1);
  auto den = digits(den_text, slash + 1);
  if (den == 0) throw DivisionByZero();
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return Rational(0);
}

PolyP::PolyP(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

PolyP::PolyP(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void PolyP::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyP& PolyP::operator+=(const PolyP& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

PolyP& PolyP::operator-=(const PolyP& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

PolyP operator*(const PolyP& a, const PolyP& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return PolyP(std::move(r));
}

PolyP& PolyP::operator*=(const PolyP& o) { return *this = *this * o; }

PolyP PolyP::operator-() const {
  PolyP r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Rational PolyP::eval(const Rational& v) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

PolyP PolyP::compose(const PolyP& arg) const {
  PolyP acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * arg + PolyP(*it);
  return acc;
}

std::string PolyP::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    std::string mag;
    Rational a = c.sign() < 0 ? -c : c;
    if (i == 0) {
      mag = a.to_string();
    } else {
      std::string var = i == 1 ? "p" : "p^" + std::to_string(i);
      mag = a.is_one() ? var : a.to_string() + "*" + var;
    }
    if (out.empty()) {
      out = c.sign() < 0 ? "-" + mag : mag;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      out += mag;
    }
  }
  return out;
}

PolyP binom_at(const PolyP& arg, unsigned k) {
  PolyP r(1);
  for (unsigned i = 0; i < k; ++i) r *= arg - PolyP(static_cast<long>(i));
  return r * PolyP(Rational(1) / factorial(k));
}

PolyP binom_poly(unsigned k) { return binom_at(PolyP::p(), k); }

}  // namespace hopftrees
