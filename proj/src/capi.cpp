#include "hopftrees/hopftrees.h"

#include "hopftrees/dse.hpp"
#include "hopftrees/errors.hpp"
#include "hopftrees/expr.hpp"
#include "hopftrees/limits.hpp"
#include "hopftrees/special.hpp"
#include "hopftrees/suites.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>

struct ht_expr {
  hopftrees::Expr value;
};

struct ht_report {
  hopftrees::Report value;
};

namespace {

using namespace hopftrees;

thread_local std::string last_error;
thread_local std::size_t last_offset = static_cast<std::size_t>(-1);

void set_error(std::string msg, std::size_t offset = static_cast<std::size_t>(-1)) {
  last_error = std::move(msg);
  last_offset = offset;
}

template <class F>
ht_status guarded(F&& f) {
  try {
    last_error.clear();
    last_offset = static_cast<std::size_t>(-1);
    return f();
  } catch (const ParseError& e) {
    set_error(e.what(), e.offset());
    return HT_ERR_PARSE;
  } catch (const ResourceError& e) {
    set_error(e.what());
    return HT_ERR_RESOURCE;
  } catch (const DivisionByZero& e) {
    set_error(e.what());
    return HT_ERR_DIV0;
  } catch (const DomainError& e) {
    set_error(e.what());
    return HT_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return HT_ERR_RESOURCE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return HT_ERR_INTERNAL;
  }
}

ht_status invalid(const char* what) {
  set_error(what);
  return HT_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Algebra algebra_or_throw(const char* name) {
  auto a = algebra_from_name(name);
  if (!a) throw DomainError("unknown algebra '" + std::string(name) + "'");
  return *a;
}

ht_status emit(Expr e, ht_expr** out) {
  *out = new ht_expr{std::move(e)};
  return HT_OK;
}

template <class B, class S>
nlohmann::json dse_terms_json(const LinComb<B, S>& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [b, c] : x) terms.push_back({{"tree", render_basis(b)}, {"coeff_poly", c.to_string()}});
  return terms;
}

template <class Sol>
std::string render_dse(const Sol& s, bool foissy, ht_format format) {
  const int n = s.max_degree();
  if (format == HT_FORMAT_JSON) {
    nlohmann::json out = nlohmann::json::array();
    for (int m = 1; m <= n; ++m) {
      const auto i = static_cast<std::size_t>(m);
      out.push_back({{"degree", m}, {"terms", foissy ? dse_terms_json(s.hf_terms[i]) : dse_terms_json(s.hk_terms[i])}});
    }
    return out.dump();
  }
  std::string text;
  for (int m = 1; m <= n; ++m) {
    const auto i = static_cast<std::size_t>(m);
    text += (foissy ? "X_" : "x_") + std::to_string(m) + " = " +
            (foissy ? render(s.hf_terms[i]) : render(s.hk_terms[i])) + "\n";
  }
  return text;
}

}  // namespace

extern "C" {

const char* ht_last_error(void) { return last_error.c_str(); }
size_t ht_last_error_offset(void) { return last_offset; }
void ht_string_free(char* s) { std::free(s); }

int ht_get_max_degree(void) { return degree_ceiling(); }

ht_status ht_set_max_degree(int n) {
  if (n < 0) return invalid("degree ceiling must be non-negative");
  return guarded([&] {
    set_degree_ceiling(n);
    if (cut_vertex_cap() < n + 1) set_cut_vertex_cap(n + 1);
    return HT_OK;
  });
}

ht_status ht_apply_environment(void) {
  return guarded([] {
    if (!apply_environment_limits()) return invalid("HOPFTREES_MAX_DEGREE must be a positive integer");
    return HT_OK;
  });
}

ht_status ht_expr_parse(const char* text, const char* algebra, ht_expr** out) {
  if (!text || !algebra || !out) return invalid("null argument");
  return guarded([&] { return emit(parse_expr(text, algebra_or_throw(algebra)), out); });
}

void ht_expr_free(ht_expr* e) { delete e; }

const char* ht_expr_algebra(const ht_expr* e) { return e ? algebra_name(e->value.algebra()) : ""; }
int ht_expr_is_tensor(const ht_expr* e) { return e && e->value.is_tensor() ? 1 : 0; }

ht_status ht_expr_render(const ht_expr* e, ht_format format, char** out) {
  if (!e || !out) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(format == HT_FORMAT_JSON ? e->value.to_json() : e->value.render());
    return HT_OK;
  });
}

ht_status ht_expr_equal(const ht_expr* a, const ht_expr* b, int* out) {
  if (!a || !b || !out) return invalid("null argument");
  *out = a->value == b->value ? 1 : 0;
  return HT_OK;
}

ht_status ht_expr_product(const ht_expr* a, const ht_expr* b, ht_expr** out) {
  if (!a || !b || !out) return invalid("null argument");
  return guarded([&] { return emit(expr_product(a->value, b->value), out); });
}

ht_status ht_expr_coproduct(const ht_expr* a, ht_expr** out) {
  if (!a || !out) return invalid("null argument");
  return guarded([&] { return emit(expr_coproduct(a->value), out); });
}

ht_status ht_expr_antipode(const ht_expr* a, ht_expr** out) {
  if (!a || !out) return invalid("null argument");
  return guarded([&] { return emit(expr_antipode(a->value), out); });
}

ht_status ht_expr_pair(const ht_expr* a, const ht_expr* b, char** out) {
  if (!a || !b || !out) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(expr_pair(a->value, b->value).to_string());
    return HT_OK;
  });
}

ht_status ht_expr_map(const char* name, const ht_expr* a, ht_expr** out) {
  if (!name || !a || !out) return invalid("null argument");
  return guarded([&] { return emit(expr_map(name, a->value), out); });
}

ht_status ht_expr_evaluate(const ht_expr* a, const char* p, ht_expr** out) {
  if (!a || !p || !out) return invalid("null argument");
  return guarded([&] { return emit(expr_evaluate(a->value, Rational::parse(p)), out); });
}

ht_status ht_enumerate(const char* algebra, int degree, ht_format format, char** out) {
  if (!algebra || !out) return invalid("null argument");
  if (degree < 0) return invalid("degree must be non-negative");
  return guarded([&] {
    auto items = enumerate_basis(algebra_or_throw(algebra), degree);
    std::string s;
    if (format == HT_FORMAT_JSON) {
      s = nlohmann::json(items).dump();
    } else {
      for (const auto& i : items) s += i + "\n";
    }
    *out = dup_string(s);
    return HT_OK;
  });
}

ht_status ht_kappa(int n, ht_expr** out) {
  if (!out) return invalid("null argument");
  if (n < 0) return invalid("n must be non-negative");
  return guarded([&] { return emit(expr_of(kappa(n)), out); });
}

ht_status ht_epsilon(int n, ht_expr** out) {
  if (!out) return invalid("null argument");
  if (n < 0) return invalid("n must be non-negative");
  return guarded([&] { return emit(expr_of(epsilon(n)), out); });
}

ht_status ht_natural_growth(const ht_expr* x, int k, ht_expr** out) {
  if (!x || !out) return invalid("null argument");
  if (k < 0) return invalid("k must be non-negative");
  return guarded([&] {
    if (x->value.algebra() != Algebra::gl || x->value.is_tensor() || !x->value.is_rational())
      throw DomainError("natural growth takes a gl expression with rational coefficients");
    GLElem g;
    for (const auto& [t, c] : std::get<0>(x->value.value())) g.add_term(t, c.coefficient(0));
    return emit(expr_of(natural_growth(g, k)), out);
  });
}

ht_status ht_dse(int max_degree, const char* algebra, const char* p, ht_format format, char** out) {
  if (!algebra || !out) return invalid("null argument");
  if (max_degree < 1) return invalid("max degree must be at least 1");
  return guarded([&] {
    const std::string alg = algebra;
    if (alg != "ck" && alg != "foissy") throw DomainError("dse algebra must be ck or foissy");
    const bool foissy = alg == "foissy";
    const DSESolution s = solve_closed(max_degree);
    *out = dup_string(p ? render_dse(evaluate(s, Rational::parse(p)), foissy, format) : render_dse(s, foissy, format));
    return HT_OK;
  });
}

ht_status ht_dse_coproduct_check(int n_hk, int n_hf, ht_report** out) {
  if (!out) return invalid("null argument");
  if (n_hk < 0 || n_hf < 0) return invalid("degrees must be non-negative");
  return guarded([&] {
    *out = new ht_report{dse_coproduct_check(n_hk, n_hf)};
    return HT_OK;
  });
}

ht_status ht_check(const char* suite, int max_degree, ht_report** out) {
  if (!suite || !out) return invalid("null argument");
  return guarded([&] {
    std::optional<int> n;
    if (max_degree >= 0) n = max_degree;
    *out = new ht_report{run_suite(suite, n)};
    return HT_OK;
  });
}

ht_status ht_check_golden(const char* text, ht_report** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] {
    *out = new ht_report{golden_check(text)};
    return HT_OK;
  });
}

int ht_report_passed(const ht_report* r) { return r && r->value.passed() ? 1 : 0; }
size_t ht_report_failures(const ht_report* r) { return r ? r->value.failures() : 0; }

ht_status ht_report_render(const ht_report* r, ht_format format, char** out) {
  if (!r || !out) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(format == HT_FORMAT_JSON ? r->value.to_json() : r->value.to_text());
    return HT_OK;
  });
}

void ht_report_free(ht_report* r) { delete r; }

}  // extern "C"
