#include "hopftrees/morphisms.hpp"

#include "hopftrees/limits.hpp"

namespace hopftrees {

namespace {

// Vertex count of a ladder given its bracket string, or 0 if it is not one.
int ladder_size(const std::string& bba) {
  const std::size_t half = bba.size() / 2;
  if (bba.size() % 2 != 0) return 0;
  for (std::size_t i = 0; i < bba.size(); ++i)
    if (bba[i] != (i < half ? '<' : '>')) return 0;
  return static_cast<int>(half) + 1;
}

Forest ladder_forest(const Partition& lambda) {
  std::vector<RootedTree> trees;
  for (int part : lambda.parts) trees.push_back(ladder(part));
  return Forest(std::move(trees));
}

}  // namespace

std::optional<Partition> ladder_partition(const RootedTree& t) {
  std::vector<int> parts;
  for (const auto& b : t.branches()) {
    int k = ladder_size(b.bba());
    if (k == 0) return std::nullopt;
    parts.push_back(k);
  }
  return Partition(std::move(parts));
}

std::optional<Composition> ladder_composition(const PlanarTree& t) {
  std::vector<int> parts;
  for (const auto& b : t.branches()) {
    int k = ladder_size(b.bba());
    if (k == 0) return std::nullopt;
    parts.push_back(k);
  }
  return Composition(std::move(parts));
}

CKElem phi(const SymElem& x) {
  CKElem out;
  for (const auto& [lam, c] : to_e_basis(x)) out.add_term(ladder_forest(lam), c);
  return out;
}

FElem Phi(const NSymElem& x) {
  FElem out;
  for (const auto& [w, c] : x) {
    std::vector<PlanarTree> trees;
    for (int k : w.letters) trees.push_back(planar_ladder(k));
    out.add_term(OrderedForest(std::move(trees)), c);
  }
  return out;
}

CKElem rho(const FElem& x) {
  CKElem out;
  for (const auto& [f, c] : x) {
    std::vector<RootedTree> trees;
    for (const auto& t : f.trees()) trees.push_back(canonicalize(t));
    out.add_term(Forest(std::move(trees)), c);
  }
  return out;
}

SymElem phi_star(const GLElem& x) {
  SymElem out;
  for (const auto& [t, c] : x)
    if (auto lam = ladder_partition(t)) out.add_term(*lam, c * Rational(sym_order(t)));
  return out;
}

QSymElem Phi_star(const PLElem& x) {
  QSymElem out;
  for (const auto& [t, c] : x)
    if (auto comp = ladder_composition(t)) out.add_term(*comp, c);
  return out;
}

PLElem rho_star(const GLElem& x) {
  PLElem out;
  for (const auto& [t, c] : x) {
    Rational k = c * Rational(sym_order(t));
    for (const auto& real : planar_realizations(t)) out.add_term(real, k);
  }
  return out;
}

QSymElem tau_star(const SymElem& x) { return embed(x); }

Report diagram_check(Diagram d, int n) {
  require_degree(n, "diagram check");
  if (d == Diagram::d1) {
    Report rep("diagram d1");
    for (int k = 0; k <= n; ++k) {
      std::string w;
      for (const auto& word : nsym_basis(k)) {
        NSymElem x(word);
        auto up = rho(Phi(x));
        auto down = phi(tau(x));
        if (up != down) {
          w = render_basis(word) + ": rho(Phi) = " + render(up) + ", phi(tau) = " + render(down);
          break;
        }
      }
      rep.record("rho Phi = phi tau", k, w);
    }
    rep.append(check_hopf_morphism<Partition, Forest>(
                   sym_hopf(), ck_hopf(), [](const Partition& p) { return phi(SymElem(p)); }, "phi", n),
               "phi");
    rep.append(check_hopf_morphism<EWord, OrderedForest>(
                   nsym_hopf(), hf_hopf(), [](const EWord& w) { return Phi(NSymElem(w)); }, "Phi", n),
               "Phi");
    rep.append(check_hopf_morphism<EWord, Partition>(
                   nsym_hopf(), sym_hopf(), [](const EWord& w) { return tau(w); }, "tau", n),
               "tau");
    rep.append(check_hopf_morphism<OrderedForest, Forest>(
                   hf_hopf(), ck_hopf(), [](const OrderedForest& f) { return rho(FElem(f)); }, "rho", n),
               "rho");
    return rep;
  }

  Report rep("diagram d2");
  for (int k = 0; k <= n; ++k) {
    std::string w;
    for (const auto& t : enumerate_rooted(k)) {
      GLElem x(t);
      auto up = Phi_star(rho_star(x));
      auto down = tau_star(phi_star(x));
      if (up != down) {
        w = render_basis(t) + ": Phi*(rho*) = " + render(up) + ", tau*(phi*) = " + render(down);
        break;
      }
    }
    rep.record("Phi* rho* = tau* phi*", k, w);
  }
  rep.append(check_hopf_morphism<RootedTree, Partition>(
                 gl_hopf(), sym_hopf(), [](const RootedTree& t) { return phi_star(GLElem(t)); }, "phi*", n),
             "phi*");
  rep.append(check_hopf_morphism<PlanarTree, Composition>(
                 kp_hopf(), qsym_hopf(), [](const PlanarTree& t) { return Phi_star(PLElem(t)); }, "Phi*", n),
             "Phi*");
  rep.append(check_hopf_morphism<RootedTree, PlanarTree>(
                 gl_hopf(), kp_hopf(), [](const RootedTree& t) { return rho_star(GLElem(t)); }, "rho*", n),
             "rho*");
  rep.append(check_hopf_morphism<Partition, Composition>(
                 sym_hopf(), qsym_hopf(), [](const Partition& p) { return tau_star(SymElem(p)); }, "tau*", n),
             "tau*");
  return rep;
}

}  // namespace hopftrees
