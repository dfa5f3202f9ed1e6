#include <doctest.h>

#include "hopftrees/errors.hpp"
#include "hopftrees/symfun.hpp"

#include <random>

using namespace hopftrees;

namespace {
QSymElem M(std::initializer_list<int> parts) { return QSymElem(Composition(parts)); }
SymElem m(std::initializer_list<int> parts) { return SymElem(Partition(parts)); }

TensorElem<Composition> tensor(const Composition& a, const Composition& b) {
  return TensorElem<Composition>(std::make_pair(a, b));
}

// Random homogeneous symmetric function of degree d with small coefficients.
SymElem random_sym(std::mt19937& rng, int d) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  SymElem x;
  for (const auto& lam : partitions_of(d)) x.add_term(lam, Rational(coeff(rng)));
  return x;
}
}  // namespace

TEST_CASE("quasi-shuffle examples") {
  QSymElem expect = M({1, 1}).scaled(Rational(2)) + M({2});
  CHECK(qsym_product(Composition{1}, Composition{1}) == expect);
  CHECK(qsym_product(Composition{2, 1}, Composition()) == M({2, 1}));
  CHECK(sym_product(Partition{1}, Partition{2, 1}).coefficient(Partition{2, 1, 1}) == Rational(2));
}

TEST_CASE("series oracle") {
  CHECK(series_oracle(M({2}), 2, 6) == SeriesPoly{{{2, 0}, 1}, {{0, 2}, 1}});
  CHECK(series_oracle(M({1, 1}), 2, 6) == SeriesPoly{{{1, 1}, 1}});
  CHECK(series_oracle(embed(basis_expand(SymGenerator::e, 2)), 3, 6) ==
        SeriesPoly{{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}});
  CHECK_THROWS_AS(series_oracle(M({1, 1, 1}), 2, 6), DomainError);
}

TEST_CASE("quasi-shuffle agrees with the series oracle for |I| + |J| <= 6") {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b)
      for (const auto& I : compositions_of(a))
        for (const auto& J : compositions_of(b)) {
          int k = static_cast<int>(I.length() + J.length());
          auto lhs = series_oracle(qsym_product(I, J), k, 6);
          auto rhs = series_product(series_oracle(QSymElem(I), k, 6), series_oracle(QSymElem(J), k, 6), 6);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("QSym coproduct") {
  auto expect = tensor(Composition(), Composition{2, 1, 1}) + tensor(Composition{2}, Composition{1, 1}) +
                tensor(Composition{2, 1}, Composition{1}) + tensor(Composition{2, 1, 1}, Composition());
  CHECK(qsym_coproduct(Composition{2, 1, 1}) == expect);
  CHECK(qsym_coproduct(Composition()) == tensor(Composition(), Composition()));
  CHECK(qsym_coproduct(Composition{3}) == tensor(Composition{3}, Composition()) + tensor(Composition(), Composition{3}));
  CHECK(swap_factors(expect) != expect);
}

TEST_CASE("QSym coproduct is deconcatenation for |I| <= 6") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& c : compositions_of(n)) {
      TensorElem<Composition> split;
      for (std::size_t k = 0; k <= c.length(); ++k) {
        const auto mid = c.parts.begin() + static_cast<std::ptrdiff_t>(k);
        split += tensor(Composition(std::vector<int>(c.parts.begin(), mid)),
                        Composition(std::vector<int>(mid, c.parts.end())));
      }
      CHECK(qsym_coproduct(c) == split);
    }
}

TEST_CASE("QSym antipode") {
  CHECK(qsym_antipode(Composition{4}) == -M({4}));
  CHECK(qsym_antipode(Composition{1, 1}) == M({1, 1}) + M({2}));
  CHECK(qsym_antipode(Composition{2, 1}) == M({1, 2}) + M({3}));
  CHECK(check_antipode_agreement(qsym_hopf(), 6).passed());
}

TEST_CASE("Sym embedding and coproduct") {
  CHECK(embed(Partition{2, 1, 1}) == M({2, 1, 1}) + M({1, 2, 1}) + M({1, 1, 2}));
  TensorElem<Partition> expect;
  for (auto [l, r] : std::vector<std::pair<Partition, Partition>>{{{}, {2, 1, 1}},
                                                                   {{1}, {2, 1}},
                                                                   {{2}, {1, 1}},
                                                                   {{1, 1}, {2}},
                                                                   {{2, 1}, {1}},
                                                                   {{2, 1, 1}, {}}})
    expect.add_term({l, r}, Rational(1));
  CHECK(sym_coproduct(Partition{2, 1, 1}) == expect);
  CHECK(sym_coproduct(Partition()) == TensorElem<Partition>(std::make_pair(Partition(), Partition())));
  TensorElem<Partition> prim;
  prim.add_term({Partition{5}, Partition()}, Rational(1));
  prim.add_term({Partition(), Partition{5}}, Rational(1));
  CHECK(sym_coproduct(Partition{5}) == prim);
}

TEST_CASE("embedding intertwines the Sym and QSym coproducts for |lambda| <= 6") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& lam : partitions_of(n)) {
      auto via_qsym = comultiply(qsym_hopf(), embed(lam));
      TensorElem<Composition> via_sym;
      for (const auto& [p, c] : sym_coproduct(lam))
        for (const auto& [l, cl] : embed(p.first))
          for (const auto& [r, cr] : embed(p.second)) via_sym.add_term({l, r}, c * cl * cr);
      CHECK(via_qsym == via_sym);
    }
}

TEST_CASE("generator expansions") {
  CHECK(basis_expand(SymGenerator::e, 2) == m({1, 1}));
  CHECK(basis_expand(SymGenerator::h, 2) == m({2}) + m({1, 1}));
  CHECK(basis_expand(SymGenerator::p, 3) == m({3}));
  for (int k = 1; k <= 6; ++k) {
    QSymElem all;
    for (const auto& c : compositions_of(k)) all.add_term(c, Rational(1));
    CHECK(embed(basis_expand(SymGenerator::h, k)) == all);
  }
}

TEST_CASE("e/h identity") {
  // Degree 2 by hand: e_2 - e_1 h_1 + h_2 = m11 - (2 m11 + m2) + (m2 + m11) = 0.
  auto e1h1 = sym_product(basis_expand(SymGenerator::e, 1), basis_expand(SymGenerator::h, 1));
  CHECK(e1h1 == m({1, 1}).scaled(Rational(2)) + m({2}));
  CHECK(eh_identity_check(6).passed());
}

TEST_CASE("change of basis round trips") {
  std::mt19937 rng(11);
  for (int d = 0; d <= 6; ++d)
    for (int trial = 0; trial < 5; ++trial) {
      SymElem x = random_sym(rng, d);
      SymElem back_e, back_h;
      for (const auto& [lam, c] : to_e_basis(x)) back_e += basis_expand(SymGenerator::e, lam).scaled(c);
      for (const auto& [lam, c] : to_h_basis(x)) back_h += basis_expand(SymGenerator::h, lam).scaled(c);
      CHECK(back_e == x);
      CHECK(back_h == x);
    }
  CHECK(to_e_basis(m({1, 1})) == m({2}));  // e_2
  CHECK(to_h_basis(m({2}) + m({1, 1})) == m({2}));  // h_2
}

TEST_CASE("Hall pairing") {
  CHECK(sym_pairing(Partition{2, 1}, Partition{2, 1}) == Rational(1));
  CHECK(sym_pairing(Partition{2, 1}, Partition{1, 1, 1}) == Rational(0));
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (const auto& mu : partitions_of(a))
        for (const auto& nu : partitions_of(b)) {
          auto hh = sym_product(basis_expand(SymGenerator::h, mu), basis_expand(SymGenerator::h, nu));
          std::vector<int> uni = mu.parts;
          uni.insert(uni.end(), nu.parts.begin(), nu.parts.end());
          Partition union_part(uni);
          for (const auto& lam : partitions_of(a + b))
            CHECK(sym_pairing(hh, SymElem(lam)) == Rational(lam == union_part ? 1 : 0));
        }
}

TEST_CASE("NSym") {
  CHECK(nsym_product(EWord{2}, EWord{1}) == NSymElem(EWord{2, 1}));
  CHECK(nsym_product(EWord{2}, EWord{1}) != nsym_product(EWord{1}, EWord{2}));
  TensorElem<EWord> d2;
  d2.add_term({EWord{2}, EWord()}, Rational(1));
  d2.add_term({EWord{1}, EWord{1}}, Rational(1));
  d2.add_term({EWord(), EWord{2}}, Rational(1));
  CHECK(nsym_coproduct(EWord{2}) == d2);
  CHECK(generic_antipode(nsym_hopf(), EWord{1}) == -NSymElem(EWord{1}));
  CHECK(render(NSymElem(EWord{2, 1})) == "E[2,1]");
}

TEST_CASE("abelianization") {
  CHECK(tau(EWord{1}) == m({1}));
  CHECK(tau(EWord{1, 1}) == m({1, 1}).scaled(Rational(2)) + m({2}));
  CHECK(tau(EWord{2}) == m({1, 1}));
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (const auto& u : nsym_basis(a))
        for (const auto& v : nsym_basis(b)) CHECK(tau(nsym_product(u, v)) == sym_product(tau(u), tau(v)));
  for (int n = 0; n <= 5; ++n)
    for (const auto& w : nsym_basis(n)) {
      TensorElem<Partition> lhs;
      for (const auto& [p, c] : nsym_coproduct(w))
        for (const auto& [l, cl] : tau(p.first))
          for (const auto& [r, cr] : tau(p.second)) lhs.add_term({l, r}, c * cl * cr);
      CHECK(lhs == comultiply(sym_hopf(), tau(w)));
    }
}

TEST_CASE("rendering") {
  CHECK(render(m({2, 1, 1})) == "m[2,1,1]");
  CHECK(render(M({2, 1}) - M({1, 2}).scaled(Rational(3, 2))) == "-3/2*M[1,2] + M[2,1]");
  CHECK(render(SymElem(Partition())) == "1");
}

TEST_CASE("axioms at degree <= 5") {
  CHECK(check_axioms(sym_hopf(), 5,
                     {.involutive_antipode = true, .check_cocommutative = true, .check_commutative = true})
            .passed());
  CHECK(check_axioms(qsym_hopf(), 5, {.involutive_antipode = true, .check_commutative = true}).passed());
  CHECK(check_axioms(nsym_hopf(), 5, {.involutive_antipode = true, .check_cocommutative = true}).passed());
  CHECK(check_antipode_agreement(sym_hopf(), 6).passed());
}
