#include "hopftrees/expr.hpp"

#include "hopftrees/errors.hpp"
#include "hopftrees/morphisms.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <type_traits>

namespace hopftrees {

namespace {

constexpr std::string_view kTensorSign = "⊗";

template <class B>
struct Tag {
  using type = B;
};

template <class F>
decltype(auto) dispatch(Algebra a, F&& f) {
  switch (a) {
    case Algebra::gl: return f(Tag<RootedTree>{});
    case Algebra::ck: return f(Tag<Forest>{});
    case Algebra::pl: return f(Tag<PlanarTree>{});
    case Algebra::foissy: return f(Tag<OrderedForest>{});
    case Algebra::sym: return f(Tag<Partition>{});
    case Algebra::qsym: return f(Tag<Composition>{});
    case Algebra::nsym: return f(Tag<EWord>{});
  }
  throw DomainError("unknown algebra");
}

template <class B>
const HopfOps<B>& ops() {
  if constexpr (std::is_same_v<B, RootedTree>) return gl_hopf();
  else if constexpr (std::is_same_v<B, Forest>) return ck_hopf();
  else if constexpr (std::is_same_v<B, PlanarTree>) return kp_hopf();
  else if constexpr (std::is_same_v<B, OrderedForest>) return hf_hopf();
  else if constexpr (std::is_same_v<B, Partition>) return sym_hopf();
  else if constexpr (std::is_same_v<B, Composition>) return qsym_hopf();
  else return nsym_hopf();
}

template <class B>
constexpr std::size_t index_of() {
  if constexpr (std::is_same_v<B, RootedTree>) return 0;
  else if constexpr (std::is_same_v<B, Forest>) return 1;
  else if constexpr (std::is_same_v<B, PlanarTree>) return 2;
  else if constexpr (std::is_same_v<B, OrderedForest>) return 3;
  else if constexpr (std::is_same_v<B, Partition>) return 4;
  else if constexpr (std::is_same_v<B, Composition>) return 5;
  else return 6;
}

template <class B>
const LinComb<B, PolyP>& element(const Expr& e, const char* what) {
  if (e.is_tensor()) throw DomainError(std::string(what) + " needs an algebra element, not a tensor");
  return std::get<index_of<B>()>(e.value());
}

template <class B>
const LinComb<B, PolyP>& element_of(const Expr& e, Algebra expected, const char* what) {
  if (e.algebra() != expected)
    throw DomainError(std::string(what) + " expects " + algebra_name(expected) + ", got " +
                      algebra_name(e.algebra()));
  return element<B>(e, what);
}

// x = sum_i p^i x_i with each x_i over Q.
template <class B>
std::vector<LinComb<B>> slices(const LinComb<B, PolyP>& x) {
  std::vector<LinComb<B>> out;
  for (const auto& [b, c] : x) {
    const auto& cs = c.coefficients();
    if (out.size() < cs.size()) out.resize(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) out[i].add_term(b, cs[i]);
  }
  return out;
}

PolyP p_power(std::size_t i) {
  std::vector<Rational> c(i + 1, Rational(0));
  c[i] = Rational(1);
  return PolyP(std::move(c));
}

// Applies a Q-linear map slice by slice.
template <class B, class F>
auto apply_linear(F&& f, const LinComb<B, PolyP>& x) {
  using Out = std::invoke_result_t<F&, const LinComb<B>&>;
  LinComb<typename Out::basis_type, PolyP> r;
  auto parts = slices(x);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const PolyP pi = p_power(i);
    for (const auto& [b, c] : f(parts[i])) r.add_term(b, pi * PolyP(c));
  }
  return r;
}

template <class B>
GenericAntipode<B>& generic_for() {
  static GenericAntipode<B> s(ops<B>());
  return s;
}

// ---- parsing -----------------------------------------------------------------

bool is_tree_char(char c) { return c == '<' || c == '>' || c == ')'; }

class Parser {
 public:
  Parser(std::string_view s, Algebra a) : s_(s), alg_(a) {}

  Expr run() {
    return dispatch(alg_, [&](auto tag) { return Expr(parse_all<typename decltype(tag)::type>()); });
  }

 private:
  template <class B>
  Expr::Value parse_all() {
    LinComb<B, PolyP> plain;
    TensorElem<B, PolyP> tensor;
    std::optional<bool> is_tensor;
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      skip_ws();
      const std::size_t start = pos_;
      PolyP coeff = PolyP(1);
      if (starts_coefficient()) coeff = parse_coefficient();
      if (negative) coeff = -coeff;
      skip_ws();
      bool explicit_star = false;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        explicit_star = true;
      }
      bool term_tensor = false;
      if (explicit_star || starts_monomial()) {
        auto left = parse_factor<B>();
        skip_ws();
        if (s_.substr(pos_).starts_with(kTensorSign)) {
          pos_ += kTensorSign.size();
          skip_ws();
          auto right = parse_factor<B>();
          term_tensor = true;
          for (const auto& [a, ca] : left)
            for (const auto& [b, cb] : right) tensor.add_term(std::make_pair(a, b), coeff * PolyP(ca * cb));
        } else {
          for (const auto& [a, ca] : left) plain.add_term(a, coeff * PolyP(ca));
        }
      } else if (pos_ == start) {
        throw ParseError("expected a term", pos_);
      } else {
        plain.add_term(ops<B>().unit, coeff);
      }
      if (is_tensor && *is_tensor != term_tensor) throw ParseError("tensor and non-tensor terms mixed", start);
      is_tensor = term_tensor;
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", pos_);
      negative = peek() == '-';
      ++pos_;
    }
    if (*is_tensor) return Expr::Value(std::in_place_index<index_of<B>() + 7>, std::move(tensor));
    return Expr::Value(std::in_place_index<index_of<B>()>, std::move(plain));
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }
  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  bool starts_coefficient() const {
    const char c = peek();
    if (c == '1' && !is_digit(peek(1)) && peek(1) != '/') {
      // "1" is the unit unless a '*' follows.
      std::size_t j = pos_ + 1;
      while (j < s_.size() && (s_[j] == ' ' || s_[j] == '\t')) ++j;
      return j < s_.size() && s_[j] == '*';
    }
    if (is_digit(c)) return true;
    if (c == 'p') return peek(1) != '[';
    if (c == '(') return !is_tree_char(peek(1));
    return false;
  }

  bool starts_monomial() const {
    const char c = peek();
    if (c == '(') return is_tree_char(peek(1));
    if (c == '1') return !is_digit(peek(1)) && peek(1) != '/';
    return (c == 'm' || c == 'e' || c == 'h' || c == 'p' || c == 'M' || c == 'E') && peek(1) == '[';
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (pos_ == start) throw ParseError("expected digits", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  Rational parse_rational() {
    const std::size_t start = pos_;
    std::string text = digits();
    if (peek() == '/') {
      ++pos_;
      const std::size_t den_at = pos_;
      std::string den = digits();
      if (mpz_class(den, 10) == 0) throw ParseError("zero denominator", den_at);
      text += "/" + den;
    }
    try {
      return Rational::parse(text);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), start + e.offset());
    }
  }

  PolyP parse_p_power() {
    ++pos_;  // 'p'
    if (peek() != '^') return PolyP::p();
    ++pos_;
    const std::size_t at = pos_;
    std::string e = digits();
    if (e.size() > 4) throw ParseError("exponent too large", at);
    return p_power(static_cast<std::size_t>(std::stoi(e)));
  }

  // [sign] (rational ['*' p-power] | p-power) (('+'|'-') ...)*
  PolyP parse_poly() {
    PolyP r;
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        break;
      }
      PolyP term;
      if (is_digit(peek())) {
        term = PolyP(parse_rational());
        skip_ws();
        if (peek() == '*') {
          ++pos_;
          skip_ws();
          if (peek() != 'p') throw ParseError("expected 'p'", pos_);
          term = term * parse_p_power();
        }
      } else if (peek() == 'p') {
        term = parse_p_power();
      } else {
        throw ParseError("expected a coefficient", pos_);
      }
      r += negative ? -term : term;
      first = false;
    }
    return r;
  }

  PolyP parse_coefficient() {
    if (peek() == '(') {
      ++pos_;
      PolyP r = parse_poly();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return r;
    }
    if (peek() == 'p') return parse_p_power();
    PolyP r(parse_rational());
    // rational '*' p-power
    std::size_t j = pos_;
    while (j < s_.size() && (s_[j] == ' ' || s_[j] == '\t')) ++j;
    if (j < s_.size() && s_[j] == '*') {
      std::size_t k = j + 1;
      while (k < s_.size() && (s_[k] == ' ' || s_[k] == '\t')) ++k;
      if (k < s_.size() && s_[k] == 'p' && (k + 1 >= s_.size() || s_[k + 1] != '[')) {
        pos_ = k;
        r = r * parse_p_power();
      }
    }
    return r;
  }

  PlanarTree parse_tree_literal() {
    const std::size_t body = pos_ + 1;
    std::size_t j = body;
    while (j < s_.size() && (s_[j] == '<' || s_[j] == '>')) ++j;
    if (j >= s_.size() || s_[j] != ')') throw ParseError("expected ')'", j);
    PlanarTree t;
    try {
      t = PlanarTree::from_bba(s_.substr(body, j - body));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), body + e.offset());
    }
    pos_ = j + 1;
    return t;
  }

  std::vector<int> parse_parts() {
    ++pos_;  // '['
    std::vector<int> parts;
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return parts;
    }
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      std::string d = digits();
      if (d.size() > 4) throw ParseError("part too large", at);
      const int v = std::stoi(d);
      if (v <= 0) throw ParseError("parts must be positive", at);
      parts.push_back(v);
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        return parts;
      }
      throw ParseError("expected ',' or ']'", pos_);
    }
  }

  template <class B>
  LinComb<B> parse_factor() {
    const std::size_t start = pos_;
    if (peek() == '1' && !is_digit(peek(1))) {
      ++pos_;
      return LinComb<B>(ops<B>().unit);
    }
    if constexpr (std::is_same_v<B, RootedTree> || std::is_same_v<B, PlanarTree> || std::is_same_v<B, Forest> ||
                  std::is_same_v<B, OrderedForest>) {
      if (peek() != '(') throw ParseError(std::string("expected a tree literal for ") + algebra_name(alg_), pos_);
      std::vector<PlanarTree> trees;
      while (peek() == '(' && is_tree_char(peek(1))) {
        trees.push_back(parse_tree_literal());
        skip_ws_before_tree();
      }
      if constexpr (std::is_same_v<B, RootedTree> || std::is_same_v<B, PlanarTree>) {
        if (trees.size() != 1)
          throw ParseError(std::string(algebra_name(alg_)) + " takes one tree per monomial", start);
        if constexpr (std::is_same_v<B, RootedTree>) return LinComb<B>(canonicalize(trees[0]));
        else return LinComb<B>(trees[0]);
      } else if constexpr (std::is_same_v<B, Forest>) {
        std::vector<RootedTree> rooted;
        for (const auto& t : trees) rooted.push_back(canonicalize(t));
        return LinComb<B>(Forest(std::move(rooted)));
      } else {
        return LinComb<B>(OrderedForest(std::move(trees)));
      }
    } else {
      LinComb<B> acc(ops<B>().unit);
      bool any = false;
      while (true) {
        const char c = peek();
        if (peek(1) != '[' || !(c == 'm' || c == 'e' || c == 'h' || c == 'p' || c == 'M' || c == 'E')) break;
        const std::size_t at = pos_;
        ++pos_;
        auto parts = parse_parts();
        LinComb<B> token = symbol_token<B>(c, std::move(parts), at);
        acc = multiply(ops<B>(), acc, token);
        any = true;
        skip_ws_before_symbol();
      }
      if (!any) throw ParseError(std::string("expected a basis token for ") + algebra_name(alg_), start);
      return acc;
    }
  }

  template <class B>
  LinComb<B> symbol_token(char c, std::vector<int> parts, std::size_t at) {
    auto mismatch = [&] {
      return ParseError(std::string("token '") + c + "' does not belong to " + algebra_name(alg_), at);
    };
    if constexpr (std::is_same_v<B, Partition>) {
      Partition lam(std::move(parts));
      switch (c) {
        case 'm': return LinComb<B>(lam);
        case 'e': return basis_expand(SymGenerator::e, lam);
        case 'h': return basis_expand(SymGenerator::h, lam);
        case 'p': return basis_expand(SymGenerator::p, lam);
        default: throw mismatch();
      }
    } else if constexpr (std::is_same_v<B, Composition>) {
      if (c != 'M') throw mismatch();
      return LinComb<B>(Composition(std::move(parts)));
    } else {
      if (c != 'E') throw mismatch();
      return LinComb<B>(EWord(std::move(parts)));
    }
  }

  // Whitespace may separate juxtaposed factors but not a factor from '⊗'.
  void skip_ws_before_tree() {
    std::size_t j = pos_;
    while (j < s_.size() && (s_[j] == ' ' || s_[j] == '\t')) ++j;
    if (j + 1 < s_.size() && s_[j] == '(' && is_tree_char(s_[j + 1])) pos_ = j;
  }
  void skip_ws_before_symbol() {
    std::size_t j = pos_;
    while (j < s_.size() && (s_[j] == ' ' || s_[j] == '\t')) ++j;
    if (j + 1 < s_.size() && s_[j + 1] == '[' && std::string_view("mehpME").find(s_[j]) != std::string_view::npos)
      pos_ = j;
  }

  std::string_view s_;
  Algebra alg_;
  std::size_t pos_ = 0;
};

nlohmann::json coeff_json(const PolyP& c) { return c.to_string(); }

}  // namespace

const char* algebra_name(Algebra a) {
  switch (a) {
    case Algebra::gl: return "gl";
    case Algebra::ck: return "ck";
    case Algebra::pl: return "pl";
    case Algebra::foissy: return "foissy";
    case Algebra::sym: return "sym";
    case Algebra::qsym: return "qsym";
    case Algebra::nsym: return "nsym";
  }
  return "?";
}

std::optional<Algebra> algebra_from_name(std::string_view s) {
  for (Algebra a : {Algebra::gl, Algebra::ck, Algebra::pl, Algebra::foissy, Algebra::sym, Algebra::qsym,
                    Algebra::nsym})
    if (s == algebra_name(a)) return a;
  return std::nullopt;
}

bool Expr::is_rational() const {
  return std::visit(
      [](const auto& x) {
        for (const auto& [b, c] : x)
          if (!c.is_constant()) return false;
        return true;
      },
      v_);
}

bool Expr::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

std::string Expr::render() const {
  return std::visit([](const auto& x) { return hopftrees::render(x); }, v_);
}

std::string Expr::to_json() const {
  nlohmann::json j;
  j["algebra"] = algebra_name(algebra());
  j["tensor"] = is_tensor();
  j["terms"] = nlohmann::json::array();
  std::visit(
      [&](const auto& x) {
        for (const auto& [b, c] : x) {
          nlohmann::json t;
          if constexpr (requires { b.first; }) {
            t["left"] = render_basis(b.first);
            t["right"] = render_basis(b.second);
          } else {
            t["basis"] = render_basis(b);
          }
          t["coeff"] = coeff_json(c);
          j["terms"].push_back(std::move(t));
        }
      },
      v_);
  return j.dump();
}

Expr parse_expr(std::string_view s, Algebra a) { return Parser(s, a).run(); }

Expr expr_product(const Expr& a, const Expr& b) {
  if (a.algebra() != b.algebra()) throw DomainError("product of elements of different algebras");
  return dispatch(a.algebra(), [&](auto tag) {
    using B = typename decltype(tag)::type;
    return Expr(Expr::Value(std::in_place_index<index_of<B>()>,
                            multiply(ops<B>(), element<B>(a, "product"), element<B>(b, "product"))));
  });
}

Expr expr_coproduct(const Expr& a) {
  return dispatch(a.algebra(), [&](auto tag) {
    using B = typename decltype(tag)::type;
    return Expr(Expr::Value(std::in_place_index<index_of<B>() + 7>, comultiply(ops<B>(), element<B>(a, "coproduct"))));
  });
}

Expr expr_antipode(const Expr& a) {
  return dispatch(a.algebra(), [&](auto tag) {
    using B = typename decltype(tag)::type;
    const auto& x = element<B>(a, "antipode");
    const auto& h = ops<B>();
    LinComb<B, PolyP> r = h.antipode ? linear_extend(h.antipode, x) : generic_for<B>().apply(x);
    return Expr(Expr::Value(std::in_place_index<index_of<B>()>, std::move(r)));
  });
}

PolyP expr_pair(const Expr& a, const Expr& b) {
  const Algebra aa = a.algebra();
  const Algebra ab = b.algebra();
  if ((aa == Algebra::qsym && ab == Algebra::nsym) || (aa == Algebra::nsym && ab == Algebra::qsym)) {
    const auto& m = aa == Algebra::qsym ? element<Composition>(a, "pair") : element<Composition>(b, "pair");
    const auto& e = aa == Algebra::nsym ? element<EWord>(a, "pair") : element<EWord>(b, "pair");
    PolyP acc;
    for (const auto& [c, cc] : m)
      for (const auto& [w, cw] : e)
        if (c.parts == w.letters) acc += cc * cw;
    return acc;
  }
  if (aa != ab) throw DomainError(std::string("no pairing between ") + algebra_name(aa) + " and " + algebra_name(ab));
  switch (aa) {
    case Algebra::gl:
      return pairing_extend(pairing_kt, element<RootedTree>(a, "pair"), element<RootedTree>(b, "pair"));
    case Algebra::ck:
      return pairing_extend(pairing_hk, element<Forest>(a, "pair"), element<Forest>(b, "pair"));
    case Algebra::pl:
      return pairing_extend(pairing_kp, element<PlanarTree>(a, "pair"), element<PlanarTree>(b, "pair"));
    case Algebra::foissy:
      return pairing_extend(pairing_hf, element<OrderedForest>(a, "pair"), element<OrderedForest>(b, "pair"));
    case Algebra::sym: {
      auto xs = slices(element<Partition>(a, "pair"));
      auto ys = slices(element<Partition>(b, "pair"));
      PolyP acc;
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j) acc += p_power(i + j) * PolyP(sym_pairing(xs[i], ys[j]));
      return acc;
    }
    default:
      throw DomainError(std::string("no inner product on ") + algebra_name(aa) + "; pair qsym with nsym");
  }
}

Expr expr_map(std::string_view name, const Expr& a) {
  auto wrap = [](auto&& x) {
    using B = typename std::decay_t<decltype(x)>::basis_type;
    return Expr(Expr::Value(std::in_place_index<index_of<B>()>, std::forward<decltype(x)>(x)));
  };
  const std::string what = "map " + std::string(name);
  if (name == "phi")
    return wrap(apply_linear([](const SymElem& x) { return phi(x); },
                             element_of<Partition>(a, Algebra::sym, what.c_str())));
  if (name == "Phi")
    return wrap(apply_linear([](const NSymElem& x) { return Phi(x); },
                             element_of<EWord>(a, Algebra::nsym, what.c_str())));
  if (name == "rho")
    return wrap(apply_linear([](const FElem& x) { return rho(x); },
                             element_of<OrderedForest>(a, Algebra::foissy, what.c_str())));
  if (name == "phistar")
    return wrap(apply_linear([](const GLElem& x) { return phi_star(x); },
                             element_of<RootedTree>(a, Algebra::gl, what.c_str())));
  if (name == "Phistar")
    return wrap(apply_linear([](const PLElem& x) { return Phi_star(x); },
                             element_of<PlanarTree>(a, Algebra::pl, what.c_str())));
  if (name == "rhostar")
    return wrap(apply_linear([](const GLElem& x) { return rho_star(x); },
                             element_of<RootedTree>(a, Algebra::gl, what.c_str())));
  if (name == "taustar")
    return wrap(apply_linear([](const SymElem& x) { return tau_star(x); },
                             element_of<Partition>(a, Algebra::sym, what.c_str())));
  if (name == "tau")
    return wrap(apply_linear([](const NSymElem& x) { return tau(x); },
                             element_of<EWord>(a, Algebra::nsym, what.c_str())));
  throw DomainError("unknown map '" + std::string(name) +
                    "' (expected phi, Phi, rho, phistar, Phistar, rhostar, taustar, tau)");
}

Expr expr_evaluate(const Expr& a, const Rational& p) {
  Expr::Value v = a.value();
  std::visit(
      [&](auto& x) {
        std::decay_t<decltype(x)> r;
        for (const auto& [b, c] : x) r.add_term(b, PolyP(c.eval(p)));
        x = std::move(r);
      },
      v);
  return Expr(std::move(v));
}

std::vector<std::string> enumerate_basis(Algebra a, int n) {
  return dispatch(a, [&](auto tag) {
    using B = typename decltype(tag)::type;
    std::vector<std::string> out;
    for (const auto& b : ops<B>().basis(n)) out.push_back(render_basis(b));
    return out;
  });
}

Expr expr_of(const GLElem& x) { return Expr(Expr::Value(std::in_place_index<0>, lift<PolyP>(x))); }
Expr expr_of(const CKPoly& x) { return Expr(Expr::Value(std::in_place_index<1>, x)); }
Expr expr_of(const FPoly& x) { return Expr(Expr::Value(std::in_place_index<3>, x)); }

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int expr_degree(const Expr& e) {
  return dispatch(e.algebra(), [&](auto tag) {
    using B = typename decltype(tag)::type;
    int d = 0;
    if (e.is_tensor()) {
      for (const auto& [b, c] : std::get<index_of<B>() + 7>(e.value()))
        d = std::max(d, ops<B>().degree(b.first) + ops<B>().degree(b.second));
    } else {
      for (const auto& [b, c] : std::get<index_of<B>()>(e.value())) d = std::max(d, ops<B>().degree(b));
    }
    return d;
  });
}

// Evaluates one golden line; returns {degree, actual rendering}.
std::pair<int, std::string> evaluate_golden(const std::string& head, const std::vector<std::string>& args) {
  std::istringstream hs(head);
  std::string alg_name, op, map_name;
  hs >> alg_name >> op >> map_name;
  const auto alg = algebra_from_name(alg_name);
  if (!alg) throw DomainError("unknown algebra '" + alg_name + "'");
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw DomainError(op + " takes " + std::to_string(k) + " operand(s)");
  };
  auto parsed = [&](std::size_t i) { return parse_expr(args[i], *alg); };
  if (op == "product") {
    need(2);
    auto a = parsed(0);
    return {expr_degree(a), expr_product(a, parsed(1)).render()};
  }
  if (op == "coproduct") {
    need(1);
    auto a = parsed(0);
    return {expr_degree(a), expr_coproduct(a).render()};
  }
  if (op == "antipode") {
    need(1);
    auto a = parsed(0);
    return {expr_degree(a), expr_antipode(a).render()};
  }
  if (op == "pair") {
    need(2);
    auto a = parsed(0);
    Algebra second = *alg;
    if (*alg == Algebra::qsym) second = Algebra::nsym;
    return {expr_degree(a), expr_pair(a, parse_expr(args[1], second)).to_string()};
  }
  if (op == "map") {
    need(1);
    auto a = parsed(0);
    return {expr_degree(a), expr_map(map_name, a).render()};
  }
  if (op == "cp") {
    need(1);
    auto a = parsed(0);
    if (a.is_tensor() || a.algebra() != Algebra::pl)
      throw DomainError("cp takes a planar tree (algebra pl)");
    const auto& x = std::get<2>(a.value());
    if (x.size() != 1) throw DomainError("cp takes a single tree");
    return {expr_degree(a), cp_coefficient(x.begin()->first).to_string()};
  }
  throw DomainError("unknown golden op '" + op + "'");
}

}  // namespace

Report golden_check(std::string_view text) {
  Report rep("golden displays");
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string label = "line " + std::to_string(line_no);
    const auto colon = t.find(" : ");
    const auto eq = t.rfind(" = ");
    if (colon == std::string::npos || eq == std::string::npos || eq < colon) {
      rep.add(label, 0, false, "malformed golden line");
      continue;
    }
    const std::string head = trim(std::string_view(t).substr(0, colon));
    const std::string expected = trim(std::string_view(t).substr(eq + 3));
    std::vector<std::string> args;
    std::string_view rest = std::string_view(t).substr(colon + 3, eq - colon - 3);
    while (true) {
      auto k = rest.find(" : ");
      args.push_back(trim(rest.substr(0, k)));
      if (k == std::string_view::npos) break;
      rest = rest.substr(k + 3);
    }
    try {
      auto [degree, actual] = evaluate_golden(head, args);
      rep.add(label + ": " + head, degree, actual == expected,
              actual == expected ? "" : "expected " + expected + ", got " + actual);
    } catch (const std::exception& e) {
      rep.add(label + ": " + head, 0, false, e.what());
    }
  }
  return rep;
}

}  // namespace hopftrees
