#pragma once

// Exact scalars: the rationals Q and univariate polynomials Q[p].

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hopftrees {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "a" or "a/b" with optional leading sign.
  static Rational parse(std::string_view s);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "a/b", or "a" when the denominator is 1.
  std::string to_string() const;

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

Rational factorial(unsigned n);
// Integer binomial coefficient C(n, k); zero when k > n.
Rational binomial(unsigned n, unsigned k);

// Polynomial in the single indeterminate p with rational coefficients.
// coefficients()[i] is the coefficient of p^i; no trailing zeros.
class PolyP {
 public:
  PolyP() = default;
  PolyP(long c) : PolyP(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  PolyP(const Rational& c);              // NOLINT(google-explicit-constructor)
  explicit PolyP(std::vector<Rational> coeffs);

  static PolyP p() { return PolyP(std::vector<Rational>{Rational(0), Rational(1)}); }

  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  PolyP& operator+=(const PolyP& o);
  PolyP& operator-=(const PolyP& o);
  PolyP& operator*=(const PolyP& o);
  friend PolyP operator+(PolyP a, const PolyP& b) { return a += b; }
  friend PolyP operator-(PolyP a, const PolyP& b) { return a -= b; }
  friend PolyP operator*(const PolyP& a, const PolyP& b);
  PolyP operator-() const;
  friend bool operator==(const PolyP&, const PolyP&) = default;

  Rational eval(const Rational& v) const;
  // Substitutes `arg` for p.
  PolyP compose(const PolyP& arg) const;

  // "c0 + c1*p + c2*p^2" with zero terms omitted; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

inline bool is_zero(const PolyP& a) { return a.is_zero(); }

// binom(p, k) = p(p-1)...(p-k+1)/k!
PolyP binom_poly(unsigned k);
// binom(arg, k) = arg(arg-1)...(arg-k+1)/k! for a polynomial argument.
PolyP binom_at(const PolyP& arg, unsigned k);

// Scalars every algebra is generic over. Q additionally has division.
template <class S>
concept Ring = std::regular<S> && requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  S(0);
  S(1);
  S(Rational(0));
};

static_assert(Ring<Rational>);
static_assert(Ring<PolyP>);

enum class ArithOp { Add, Sub, Mul, Div };
Rational rat_arith(const Rational& a, const Rational& b, ArithOp op);

}  // namespace hopftrees
