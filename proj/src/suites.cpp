#include "hopftrees/suites.hpp"

#include "hopftrees/dse.hpp"
#include "hopftrees/errors.hpp"
#include "hopftrees/limits.hpp"
#include "hopftrees/morphisms.hpp"
#include "hopftrees/special.hpp"

#include <algorithm>
#include <set>

namespace hopftrees {

namespace {

// a(n+1) = (1/n) sum_{k=1..n} (sum_{d|k} d a(d)) a(n-k+1), a(1) = 1.
std::vector<mpz_class> rooted_counts_by_recurrence(int max_vertices) {
  std::vector<mpz_class> a(static_cast<std::size_t>(max_vertices) + 1, 0);
  a[1] = 1;
  for (int n = 1; n < max_vertices; ++n) {
    mpz_class sum = 0;
    for (int k = 1; k <= n; ++k) {
      mpz_class s = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) s += d * a[static_cast<std::size_t>(d)];
      sum += s * a[static_cast<std::size_t>(n - k + 1)];
    }
    a[static_cast<std::size_t>(n) + 1] = sum / n;
  }
  return a;
}

template <BasisElement B, class Apply>
std::string involution_defect(const HopfOps<B>& h, int d, Apply&& s) {
  for (const auto& x : h.basis(d)) {
    auto ss = s(s(LinComb<B>(x)));
    if (ss != LinComb<B>(x)) return render_basis(x) + ": S^2 = " + render(ss);
  }
  return {};
}

}  // namespace

Report axioms_suite(int n, int foissy_n) {
  require_degree(n, "axiom suite");
  Report rep("Hopf axioms");
  rep.append(check_axioms(gl_hopf(), n, {.involutive_antipode = true, .check_cocommutative = true}), "kT");
  rep.append(check_axioms(ck_hopf(), n, {.involutive_antipode = true, .check_commutative = true}), "H_K");
  rep.append(check_axioms(kp_hopf(), n), "kP");
  rep.append(check_axioms(hf_hopf(), std::min(n, foissy_n)), "H_F");
  rep.append(check_axioms(sym_hopf(), n,
                          {.involutive_antipode = true, .check_cocommutative = true, .check_commutative = true}),
             "Sym");
  rep.append(check_axioms(qsym_hopf(), n, {.involutive_antipode = true, .check_commutative = true}), "QSym");
  rep.append(check_axioms(nsym_hopf(), n, {.involutive_antipode = true, .check_cocommutative = true}), "NSym");
  return rep;
}

Report duality_suite(int n) {
  require_degree(n, "duality suite");
  Report rep("duality");
  std::function<LinComb<RootedTree>(const Forest&)> graft = [](const Forest& f) { return GLElem(bplus(f)); };
  std::function<LinComb<PlanarTree>(const OrderedForest&)> graft_planar = [](const OrderedForest& f) {
    return PLElem(bplus_ordered(f));
  };
  rep.append(duality_check<Forest, RootedTree>(ck_hopf(), gl_hopf(), graft, pairing_hk, pairing_kt, n), "H_K/kT");
  rep.append(duality_check<OrderedForest, PlanarTree>(hf_hopf(), kp_hopf(), graft_planar, pairing_hf, pairing_kp, n),
             "H_F/kP");
  return rep;
}

Report diagrams_suite(int n) {
  Report rep("diagrams");
  rep.append(diagram_check(Diagram::d1, n), "d1");
  rep.append(diagram_check(Diagram::d2, n), "d2");
  return rep;
}

Report special_suite(int n) {
  Report rep("special families");
  rep.append(count_identity_check(n), "counts");
  rep.append(kappa_epsilon_check(n), "kappa/epsilon");
  rep.append(growth_formulas_check(n), "growth");
  return rep;
}

Report dse_suite(int n, int n_hk, int n_hf) {
  Report rep("Dyson-Schwinger");
  rep.append(dse_check(n));
  rep.append(dse_coproduct_check(n_hk, n_hf));
  return rep;
}

Report counts_suite(int planar_n, int rooted_n) {
  require_degree(std::max(planar_n, rooted_n), "count suite");
  Report rep("tree counts");
  for (int n = 0; n <= planar_n; ++n) {
    const mpz_class catalan = binomial(static_cast<unsigned>(2 * n), static_cast<unsigned>(n)).numerator() / (n + 1);
    const auto got = enumerate_planar(n).size();
    rep.record("|P_n| = C_n", n,
               mpz_class(static_cast<unsigned long>(got)) == catalan
                   ? ""
                   : std::to_string(got) + " planar trees, Catalan " + catalan.get_str());
  }
  const auto recurrence = rooted_counts_by_recurrence(rooted_n + 1);
  for (int n = 0; n <= rooted_n; ++n) {
    std::set<RootedTree> dedup;
    for (const auto& T : enumerate_planar(n)) dedup.insert(canonicalize(T));
    const auto direct = enumerate_rooted(n).size();
    const mpz_class expect = recurrence[static_cast<std::size_t>(n) + 1];
    std::string w;
    if (mpz_class(static_cast<unsigned long>(dedup.size())) != expect ||
        mpz_class(static_cast<unsigned long>(direct)) != expect)
      w = "deduplicated " + std::to_string(dedup.size()) + ", enumerated " + std::to_string(direct) +
          ", recurrence " + expect.get_str();
    rep.record("|T_n| by deduplication = enumeration = recurrence", n, w);
  }
  return rep;
}

Report antipode_suite(int n) {
  require_degree(n, "antipode suite");
  Report rep("antipodes");
  rep.append(check_antipode_agreement(ck_hopf(), n), "H_K");
  rep.append(check_antipode_agreement(hf_hopf(), n), "H_F");
  rep.append(check_antipode_agreement(sym_hopf(), n), "Sym");
  rep.append(check_antipode_agreement(qsym_hopf(), n), "QSym");

  GenericAntipode<RootedTree> gl_s(gl_hopf());
  auto ck_s = [](const CKElem& x) { return linear_extend([](const Forest& f) { return ck_antipode(f); }, x); };
  auto gl_apply = [&](const GLElem& x) { return gl_s.apply(x); };
  auto sym_s = [](const SymElem& x) { return linear_extend(sym_antipode, x); };
  auto qsym_s = [](const QSymElem& x) { return linear_extend(qsym_antipode, x); };
  for (int d = 0; d <= n; ++d) {
    rep.record("H_K: S^2 = id", d, involution_defect(ck_hopf(), d, ck_s));
    rep.record("kT: S^2 = id", d, involution_defect(gl_hopf(), d, gl_apply));
    rep.record("Sym: S^2 = id", d, involution_defect(sym_hopf(), d, sym_s));
    rep.record("QSym: S^2 = id", d, involution_defect(qsym_hopf(), d, qsym_s));
  }

  std::string witness;
  int witness_degree = 0;
  for (int d = 1; d <= std::min(n, 4) && witness.empty(); ++d)
    for (const auto& f : enumerate_ordered_forests(d)) {
      auto ss = linear_extend([](const OrderedForest& x) { return hf_antipode(x); }, hf_antipode(f));
      if (ss != FElem(f)) {
        witness = render_basis(f) + " has S^2 = " + render(ss);
        witness_degree = d;
        break;
      }
    }
  rep.add("H_F: S^2 != id witness" + (witness.empty() ? std::string() : " " + witness), witness_degree,
          !witness.empty(), witness.empty() ? "no basis element of degree <= 4 with S^2 != id" : "");
  return rep;
}

std::vector<std::string> suite_names() {
  return {"axioms", "duality", "diagrams", "special", "dse", "counts", "antipodes"};
}

int suite_default_degree(std::string_view name) {
  if (name == "axioms") return 6;
  if (name == "duality") return 5;
  if (name == "diagrams") return 5;
  if (name == "special") return 6;
  if (name == "dse") return 7;
  if (name == "counts") return 7;
  if (name == "antipodes") return 6;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

Report run_suite(std::string_view name, std::optional<int> max_degree) {
  if (name == "all") {
    Report rep("all suites");
    for (const auto& s : suite_names()) rep.append(run_suite(s, max_degree), s + "");
    return rep;
  }
  const int n = max_degree.value_or(suite_default_degree(name));
  if (n < 0) throw DomainError("degree bound must be non-negative");
  if (name == "axioms") return axioms_suite(n, n);
  if (name == "duality") return duality_suite(n);
  if (name == "diagrams") return diagrams_suite(n);
  if (name == "special") return special_suite(n);
  if (name == "dse") return dse_suite(n, std::max(n - 1, 1), std::max(n - 2, 1));
  if (name == "counts") return counts_suite(n + 1, n);
  if (name == "antipodes") return antipode_suite(n);
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace hopftrees
