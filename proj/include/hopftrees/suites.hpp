#pragma once

// Named verification suites, each a bundle of exhaustive checks up to a
// degree bound.

#include "hopftrees/report.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopftrees {

// Hopf axioms for all seven algebras through degree n (H_F through
// min(n, foissy_n)).
Report axioms_suite(int n, int foissy_n);
// (u (x) v, Delta w) = (B_+u o B_+v, B_+w) and its companions for H_K/kT and
// H_F/kP, total degree <= n.
Report duality_suite(int n);
Report diagrams_suite(int n);
// Count identity, kappa/epsilon identities and growth formulas through degree n.
Report special_suite(int n);
// Recursive = closed through n and the coproduct formulas for H_K through
// n_hk and H_F through n_hf.
Report dse_suite(int n, int n_hk, int n_hf);
// |P_n| against the Catalan numbers for n <= planar_n; rooted-tree counts
// by planar deduplication, by direct enumeration and by the classical
// recurrence for n <= rooted_n.
Report counts_suite(int planar_n, int rooted_n);
// Explicit antipodes against the recursion, S^2 = id on H_K, kT, Sym, QSym,
// and a basis element of H_F of degree <= 4 with S^2 != id.
Report antipode_suite(int n);

std::vector<std::string> suite_names();
// Default degree bound used when none is given.
int suite_default_degree(std::string_view name);
// Runs a named suite ("all" runs every suite). Throws DomainError on an
// unknown name.
Report run_suite(std::string_view name, std::optional<int> max_degree = std::nullopt);

}  // namespace hopftrees
