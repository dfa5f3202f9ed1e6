// Command-line front end. Talks to the library only through the C API.

#include "hopftrees/hopftrees.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct ExprDeleter {
  void operator()(ht_expr* e) const { ht_expr_free(e); }
};
struct ReportDeleter {
  void operator()(ht_report* r) const { ht_report_free(r); }
};
using ExprPtr = std::unique_ptr<ht_expr, ExprDeleter>;
using ReportPtr = std::unique_ptr<ht_report, ReportDeleter>;

// Raised for any failed library call; carries the library's message.
struct ApiError {
  std::string message;
};

void ok(ht_status s) {
  if (s != HT_OK) throw ApiError{ht_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ht_string_free(s);
  return out;
}

ht_format format_of(const std::string& f) { return f == "json" ? HT_FORMAT_JSON : HT_FORMAT_TEXT; }

ExprPtr parse(const std::string& text, const std::string& algebra) {
  ht_expr* e = nullptr;
  ok(ht_expr_parse(text.c_str(), algebra.c_str(), &e));
  return ExprPtr(e);
}

std::string render(const ht_expr* e, const std::string& format) {
  char* s = nullptr;
  ok(ht_expr_render(e, format_of(format), &s));
  return take(s);
}

int print_report(ht_report* raw, const std::string& format) {
  ReportPtr r(raw);
  char* s = nullptr;
  ok(ht_report_render(r.get(), format_of(format), &s));
  std::string text = take(s);
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << '\n';
  return ht_report_passed(r.get()) ? 0 : kExitFail;
}

// Source algebra of each map.
const std::map<std::string, std::string>& map_sources() {
  static const std::map<std::string, std::string> m{
      {"phi", "sym"},  {"Phi", "nsym"},     {"rho", "foissy"},  {"phistar", "gl"},
      {"Phistar", "pl"}, {"rhostar", "gl"}, {"taustar", "sym"}, {"tau", "nsym"}};
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ApiError{"cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (ht_apply_environment() != HT_OK) {
    std::cerr << "error: " << ht_last_error() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Exact computations in Hopf algebras of rooted trees and symmetric functions"};
  app.require_subcommand(1);
  const std::vector<std::string> algebras{"gl", "ck", "pl", "foissy", "sym", "qsym", "nsym"};
  std::string format = "text";
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  // enumerate
  auto* en = app.add_subcommand("enumerate", "List the basis of one degree");
  std::string en_alg;
  int en_degree = 0;
  en->add_option("--algebra", en_alg, "Algebra")->required()->check(CLI::IsMember(algebras));
  en->add_option("--degree,-n", en_degree, "Degree")->required()->check(CLI::NonNegativeNumber);
  add_format(en);

  // op
  auto* op = app.add_subcommand("op", "Product, coproduct, antipode or pairing of expressions");
  std::string op_alg, op_alg2, op_kind, op_expr, op_expr2, op_p;
  op->add_option("--algebra", op_alg, "Algebra")->required()->check(CLI::IsMember(algebras));
  op->add_option("--kind", op_kind, "Operation")
      ->required()
      ->check(CLI::IsMember({"product", "coproduct", "antipode", "pair", "render"}));
  op->add_option("--expr", op_expr, "First operand")->required();
  op->add_option("--expr2", op_expr2, "Second operand (product, pair)");
  op->add_option("--algebra2", op_alg2, "Algebra of the second operand (default: --algebra; nsym for qsym pairs)")
      ->check(CLI::IsMember(algebras));
  op->add_option("--p", op_p, "Evaluate the result at this rational value of p");
  add_format(op);

  // map
  auto* mp = app.add_subcommand("map", "Apply one of the morphisms");
  std::string mp_name, mp_expr;
  mp->add_option("name", mp_name, "phi, Phi, rho, phistar, Phistar, rhostar, taustar or tau")
      ->required()
      ->check(CLI::IsMember({"phi", "Phi", "rho", "phistar", "Phistar", "rhostar", "taustar", "tau"}));
  mp->add_option("--expr", mp_expr, "Expression in the source algebra")->required();
  add_format(mp);

  // special
  auto* sp = app.add_subcommand("special", "kappa_n, epsilon_n, natural growth and their checks");
  sp->require_subcommand(1);
  int sp_n = 0;
  auto* sp_kappa = sp->add_subcommand("kappa", "kappa_n in kT");
  sp_kappa->add_option("n", sp_n, "n")->required()->check(CLI::NonNegativeNumber);
  add_format(sp_kappa);
  auto* sp_eps = sp->add_subcommand("epsilon", "epsilon_n in kT");
  sp_eps->add_option("n", sp_n, "n")->required()->check(CLI::NonNegativeNumber);
  add_format(sp_eps);
  auto* sp_growth = sp->add_subcommand("growth", "k-fold natural growth of a kT expression");
  int sp_k = 0;
  std::string sp_expr;
  sp_growth->add_option("--k", sp_k, "k")->required()->check(CLI::NonNegativeNumber);
  sp_growth->add_option("--expr", sp_expr, "Expression in gl")->required();
  add_format(sp_growth);
  auto* sp_check = sp->add_subcommand("check", "Count identity, kappa/epsilon identities and growth formulas");
  int sp_max = -1;
  sp_check->add_option("--max-degree", sp_max, "Degree bound")->check(CLI::NonNegativeNumber);
  add_format(sp_check);

  // dse
  auto* ds = app.add_subcommand("dse", "Solve X = 1 + B_+(X^p)");
  int ds_max = 0;
  std::string ds_p, ds_alg = "ck";
  bool ds_coproduct = false;
  ds->add_option("--max-degree", ds_max, "Largest degree")->required()->check(CLI::PositiveNumber);
  ds->add_option("--p", ds_p, "Rational value of p (default: formal)");
  ds->add_option("--algebra", ds_alg, "ck or foissy")->check(CLI::IsMember({"ck", "foissy"}));
  ds->add_flag("--check-coproduct", ds_coproduct, "Also verify the coproduct formula through --max-degree");
  add_format(ds);

  // check
  auto* ck = app.add_subcommand("check", "Run a verification suite");
  std::string ck_suite, ck_golden;
  int ck_max = -1;
  ck->add_option("--suite", ck_suite, "Suite")
      ->required()
      ->check(CLI::IsMember(
          {"axioms", "duality", "diagrams", "special", "dse", "counts", "antipodes", "displays", "all"}));
  ck->add_option("--max-degree", ck_max, "Degree bound (default per suite)")->check(CLI::NonNegativeNumber);
  ck->add_option("--golden", ck_golden, "Golden display file (suite displays)");
  add_format(ck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (en->parsed()) {
      char* s = nullptr;
      ok(ht_enumerate(en_alg.c_str(), en_degree, format_of(format), &s));
      std::string out = take(s);
      std::cout << out;
      if (format == "json") std::cout << "\n";
      return 0;
    }

    if (op->parsed()) {
      auto a = parse(op_expr, op_alg);
      const bool binary = op_kind == "product" || op_kind == "pair";
      if (binary && op_expr2.empty()) {
        std::cerr << "error: --kind " << op_kind << " needs --expr2\n";
        return kExitUsage;
      }
      if (!binary && !op_expr2.empty()) {
        std::cerr << "error: --kind " << op_kind << " takes one operand\n";
        return kExitUsage;
      }
      if (op_kind == "pair") {
        std::string alg2 = op_alg2.empty() ? (op_alg == "qsym" ? "nsym" : op_alg == "nsym" ? "qsym" : op_alg) : op_alg2;
        auto b = parse(op_expr2, alg2);
        char* s = nullptr;
        ok(ht_expr_pair(a.get(), b.get(), &s));
        std::string v = take(s);
        if (format == "json")
          std::cout << "{\"pairing\":\"" << v << "\"}\n";
        else
          std::cout << v << "\n";
        return 0;
      }
      ht_expr* r = nullptr;
      if (op_kind == "product") {
        auto b = parse(op_expr2, op_alg2.empty() ? op_alg : op_alg2);
        ok(ht_expr_product(a.get(), b.get(), &r));
      } else if (op_kind == "coproduct") {
        ok(ht_expr_coproduct(a.get(), &r));
      } else if (op_kind == "antipode") {
        ok(ht_expr_antipode(a.get(), &r));
      } else {
        r = a.release();
      }
      ExprPtr result(r);
      if (!op_p.empty()) {
        ht_expr* ev = nullptr;
        ok(ht_expr_evaluate(result.get(), op_p.c_str(), &ev));
        result.reset(ev);
      }
      std::cout << render(result.get(), format) << "\n";
      return 0;
    }

    if (mp->parsed()) {
      auto a = parse(mp_expr, map_sources().at(mp_name));
      ht_expr* r = nullptr;
      ok(ht_expr_map(mp_name.c_str(), a.get(), &r));
      ExprPtr result(r);
      std::cout << render(result.get(), format) << "\n";
      return 0;
    }

    if (sp->parsed()) {
      ht_expr* r = nullptr;
      if (sp_kappa->parsed()) {
        ok(ht_kappa(sp_n, &r));
      } else if (sp_eps->parsed()) {
        ok(ht_epsilon(sp_n, &r));
      } else if (sp_growth->parsed()) {
        auto x = parse(sp_expr, "gl");
        ok(ht_natural_growth(x.get(), sp_k, &r));
      } else {
        ht_report* rep = nullptr;
        ok(ht_check("special", sp_max, &rep));
        return print_report(rep, format);
      }
      ExprPtr result(r);
      std::cout << render(result.get(), format) << "\n";
      return 0;
    }

    if (ds->parsed()) {
      char* s = nullptr;
      ok(ht_dse(ds_max, ds_alg.c_str(), ds_p.empty() ? nullptr : ds_p.c_str(), format_of(format), &s));
      std::string out = take(s);
      std::cout << out;
      if (format == "json") std::cout << "\n";
      if (ds_coproduct) {
        ht_report* rep = nullptr;
        ok(ht_dse_coproduct_check(ds_alg == "ck" ? ds_max : 0, ds_alg == "foissy" ? ds_max : 0, &rep));
        return print_report(rep, format);
      }
      return 0;
    }

    if (ck->parsed()) {
      ht_report* rep = nullptr;
      if (ck_suite == "displays") {
        if (ck_golden.empty()) {
          std::cerr << "error: --suite displays needs --golden FILE\n";
          return kExitUsage;
        }
        const std::string text = read_file(ck_golden);
        ok(ht_check_golden(text.c_str(), &rep));
      } else {
        if (!ck_golden.empty()) {
          std::cerr << "error: --golden applies only to --suite displays\n";
          return kExitUsage;
        }
        ok(ht_check(ck_suite.c_str(), ck_max, &rep));
      }
      return print_report(rep, format);
    }
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
