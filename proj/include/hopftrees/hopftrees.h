#ifndef HOPFTREES_H
#define HOPFTREES_H

/*
 * C interface to the hopftrees library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an ht_status; on failure, ht_last_error()
 * describes the problem for the calling thread and output arguments are left
 * untouched. Strings returned through char** are owned by the caller and
 * released with ht_string_free.
 *
 * Algebra names: gl, ck, pl, foissy, sym, qsym, nsym.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define HT_API __attribute__((visibility("default")))
#else
#define HT_API
#endif

typedef enum {
  HT_OK = 0,
  HT_ERR_PARSE = 1,
  HT_ERR_DOMAIN = 2,
  HT_ERR_RESOURCE = 3,
  HT_ERR_DIV0 = 4,
  HT_ERR_INVALID_ARGUMENT = 5,
  HT_ERR_INTERNAL = 6
} ht_status;

typedef enum { HT_FORMAT_TEXT = 0, HT_FORMAT_JSON = 1 } ht_format;

typedef struct ht_expr ht_expr;
typedef struct ht_report ht_report;

/* Message for the last failed call on this thread ("" if none). */
HT_API const char* ht_last_error(void);
/* Character offset of the last parse error, or (size_t)-1. */
HT_API size_t ht_last_error_offset(void);

HT_API void ht_string_free(char* s);

/* ---- limits ---- */
HT_API int ht_get_max_degree(void);
HT_API ht_status ht_set_max_degree(int n);
/* Applies HOPFTREES_MAX_DEGREE if set. */
HT_API ht_status ht_apply_environment(void);

/* ---- expressions ---- */
HT_API ht_status ht_expr_parse(const char* text, const char* algebra, ht_expr** out);
HT_API void ht_expr_free(ht_expr* e);
HT_API const char* ht_expr_algebra(const ht_expr* e);
HT_API int ht_expr_is_tensor(const ht_expr* e);
HT_API ht_status ht_expr_render(const ht_expr* e, ht_format format, char** out);
HT_API ht_status ht_expr_equal(const ht_expr* a, const ht_expr* b, int* out);

HT_API ht_status ht_expr_product(const ht_expr* a, const ht_expr* b, ht_expr** out);
HT_API ht_status ht_expr_coproduct(const ht_expr* a, ht_expr** out);
HT_API ht_status ht_expr_antipode(const ht_expr* a, ht_expr** out);
/* The inner product, rendered as a polynomial in p. */
HT_API ht_status ht_expr_pair(const ht_expr* a, const ht_expr* b, char** out);
/* phi, Phi, rho, phistar, Phistar, rhostar, taustar, tau. */
HT_API ht_status ht_expr_map(const char* name, const ht_expr* a, ht_expr** out);
/* Substitutes the rational p ("a" or "a/b"). */
HT_API ht_status ht_expr_evaluate(const ht_expr* a, const char* p, ht_expr** out);

/* Basis of the given degree, one element per line (text) or a JSON array. */
HT_API ht_status ht_enumerate(const char* algebra, int degree, ht_format format, char** out);

/* ---- special families in kT ---- */
HT_API ht_status ht_kappa(int n, ht_expr** out);
HT_API ht_status ht_epsilon(int n, ht_expr** out);
/* k-fold natural growth of a gl expression. */
HT_API ht_status ht_natural_growth(const ht_expr* x, int k, ht_expr** out);

/* ---- Dyson-Schwinger ---- */
/* Solution terms of degrees 1..max_degree in algebra ck or foissy; p is NULL
 * for the formal parameter or a rational value. */
HT_API ht_status ht_dse(int max_degree, const char* algebra, const char* p, ht_format format, char** out);
HT_API ht_status ht_dse_coproduct_check(int n_hk, int n_hf, ht_report** out);

/* ---- verification ---- */
/* Suites: axioms, duality, diagrams, special, dse, counts, antipodes, all.
 * max_degree < 0 selects the suite's default bound. */
HT_API ht_status ht_check(const char* suite, int max_degree, ht_report** out);
/* Golden display lines, see the README for the format. */
HT_API ht_status ht_check_golden(const char* text, ht_report** out);

HT_API int ht_report_passed(const ht_report* r);
HT_API size_t ht_report_failures(const ht_report* r);
HT_API ht_status ht_report_render(const ht_report* r, ht_format format, char** out);
HT_API void ht_report_free(ht_report* r);

#ifdef __cplusplus
}
#endif

#endif
