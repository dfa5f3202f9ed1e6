#include "hopftrees/symfun.hpp"

#include "hopftrees/errors.hpp"
#include "hopftrees/limits.hpp"
#include "memo.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hopftrees {

using detail::Memo;

int EWord::weight() const { return std::accumulate(letters.begin(), letters.end(), 0); }

std::string render_basis(const Partition& p) { return p.empty() ? "1" : "m" + render_parts(p.parts); }
std::string render_basis(const Composition& c) { return c.empty() ? "1" : "M" + render_parts(c.parts); }
std::string render_basis(const EWord& w) { return w.letters.empty() ? "1" : "E" + render_parts(w.letters); }

namespace {

Composition prepend(int first, const Composition& rest) {
  std::vector<int> parts{first};
  parts.insert(parts.end(), rest.parts.begin(), rest.parts.end());
  return Composition(std::move(parts));
}

Composition tail(const Composition& c) { return Composition(std::vector<int>(c.parts.begin() + 1, c.parts.end())); }

// Multiset union.
Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts;
  parts.insert(parts.end(), b.parts.begin(), b.parts.end());
  return Partition(std::move(parts));
}

// Product in a basis indexed by partitions that multiplies by union (h or e).
SymElem union_product(const SymElem& a, const SymElem& b) {
  return bilinear_extend([](const Partition& x, const Partition& y) { return SymElem(merge(x, y)); }, a, b);
}

bool weakly_decreasing(const Composition& c) {
  return std::is_sorted(c.parts.begin(), c.parts.end(), std::greater<>());
}

}  // namespace

// ---- QSym -------------------------------------------------------------------

QSymElem qsym_product(const Composition& a, const Composition& b) {
  if (a.empty()) return QSymElem(b);
  if (b.empty()) return QSymElem(a);
  static Memo<std::pair<Composition, Composition>, QSymElem> memo;
  return memo.get({a, b}, [&] {
    QSymElem out;
    Composition ta = tail(a), tb = tail(b);
    for (const auto& [c, k] : qsym_product(ta, b)) out.add_term(prepend(a.parts[0], c), k);
    for (const auto& [c, k] : qsym_product(a, tb)) out.add_term(prepend(b.parts[0], c), k);
    for (const auto& [c, k] : qsym_product(ta, tb)) out.add_term(prepend(a.parts[0] + b.parts[0], c), k);
    return out;
  });
}

QSymElem qsym_product(const QSymElem& a, const QSymElem& b) {
  return bilinear_extend([](const Composition& x, const Composition& y) { return qsym_product(x, y); }, a, b);
}

TensorElem<Composition> qsym_coproduct(const Composition& c) {
  TensorElem<Composition> out;
  for (std::size_t j = 0; j <= c.length(); ++j) {
    Composition left(std::vector<int>(c.parts.begin(), c.parts.begin() + static_cast<long>(j)));
    Composition right(std::vector<int>(c.parts.begin() + static_cast<long>(j), c.parts.end()));
    out.add_term({left, right}, Rational(1));
  }
  return out;
}

QSymElem qsym_antipode(const Composition& c) {
  QSymElem out;
  Rational sign(c.length() % 2 == 0 ? 1 : -1);
  for (const auto& j : coarsenings(c)) out.add_term(j.reversed(), sign);
  return out;
}

SeriesPoly series_oracle(const QSymElem& x, int k, int max_degree) {
  require_degree(max_degree, "series oracle");
  SeriesPoly out;
  for (const auto& [c, coeff] : x) {
    if (static_cast<int>(c.length()) > k)
      throw DomainError("series oracle: " + render_basis(c) + " needs more than " + std::to_string(k) +
                        " variables");
    if (c.weight() > max_degree) continue;
    // Increasing index tuples i_1 < ... < i_l in [0, k).
    std::vector<int> idx(c.length());
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int from) {
      if (pos == idx.size()) {
        std::vector<int> exps(static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < idx.size(); ++i) exps[static_cast<std::size_t>(idx[i])] = c.parts[i];
        Rational& slot = out[exps];
        slot += coeff;
        if (slot.is_zero()) out.erase(exps);
        return;
      }
      for (int v = from; v < k; ++v) {
        idx[pos] = v;
        rec(pos + 1, v + 1);
      }
    };
    rec(0, 0);
  }
  return out;
}

SeriesPoly series_product(const SeriesPoly& a, const SeriesPoly& b, int max_degree) {
  SeriesPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      int deg = 0;
      for (std::size_t i = 0; i < e.size(); ++i) deg += e[i] = ea[i] + eb[i];
      if (deg > max_degree) continue;
      Rational& slot = out[e];
      slot += ca * cb;
      if (slot.is_zero()) out.erase(e);
    }
  return out;
}

// ---- Sym --------------------------------------------------------------------

QSymElem embed(const Partition& p) {
  QSymElem out;
  for (const auto& c : rearrangements(p)) out.add_term(c, Rational(1));
  return out;
}

QSymElem embed(const SymElem& x) {
  return linear_extend([](const Partition& p) { return embed(p); }, x);
}

SymElem restrict_to_sym(const QSymElem& x) {
  SymElem out;
  for (const auto& [c, k] : x)
    if (weakly_decreasing(c)) out.add_term(partition_of(c), k);
  if (embed(out) != x) throw DomainError("not a symmetric function: " + render(x));
  return out;
}

SymElem sym_product(const Partition& a, const Partition& b) {
  static Memo<std::pair<Partition, Partition>, SymElem> memo;
  return memo.get({a, b}, [&] {
    // The product is symmetric, so reading the decreasing compositions suffices.
    SymElem out;
    for (const auto& [c, k] : qsym_product(embed(a), embed(b)))
      if (weakly_decreasing(c)) out.add_term(partition_of(c), k);
    return out;
  });
}

SymElem sym_product(const SymElem& a, const SymElem& b) {
  return bilinear_extend([](const Partition& x, const Partition& y) { return sym_product(x, y); }, a, b);
}

TensorElem<Partition> sym_coproduct(const Partition& p) {
  std::vector<std::pair<int, int>> mult;  // (part, multiplicity)
  for (int x : p.parts) {
    if (mult.empty() || mult.back().first != x)
      mult.emplace_back(x, 1);
    else
      ++mult.back().second;
  }
  TensorElem<Partition> out;
  std::vector<int> left, right;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == mult.size()) {
      out.add_term({Partition(left), Partition(right)}, Rational(1));
      return;
    }
    auto [part, m] = mult[i];
    for (int k = 0; k <= m; ++k) {
      left.insert(left.end(), static_cast<std::size_t>(k), part);
      right.insert(right.end(), static_cast<std::size_t>(m - k), part);
      rec(i + 1);
      left.resize(left.size() - static_cast<std::size_t>(k));
      right.resize(right.size() - static_cast<std::size_t>(m - k));
    }
  };
  rec(0);
  return out;
}

SymElem sym_antipode(const Partition& p) {
  static Memo<Partition, SymElem> memo;
  return memo.get(p, [&] {
    return restrict_to_sym(linear_extend([](const Composition& c) { return qsym_antipode(c); }, embed(p)));
  });
}

SymElem basis_expand(SymGenerator g, int k) {
  if (k < 0) throw DomainError("generator index must be nonnegative");
  if (k == 0) return SymElem(Partition());
  switch (g) {
    case SymGenerator::e:
      return SymElem(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
    case SymGenerator::p:
      return SymElem(Partition{k});
    case SymGenerator::h: {
      SymElem out;
      for (const auto& lam : partitions_of(k)) out.add_term(lam, Rational(1));
      return out;
    }
  }
  return {};
}

SymElem basis_expand(SymGenerator g, const Partition& lambda) {
  SymElem out{Partition()};
  for (int part : lambda.parts) out = sym_product(out, basis_expand(g, part));
  return out;
}

SymElem to_e_basis(const SymElem& x) {
  // e_{lambda'} = m_lambda + (terms strictly below lambda in dominance order),
  // so peeling off the lexicographically largest term terminates.
  SymElem rest = x, out;
  while (!rest.is_zero()) {
    auto [lam, c] = *rest.terms().rbegin();
    Partition mu = conjugate(lam);
    out.add_term(mu, c);
    rest -= basis_expand(SymGenerator::e, mu).scaled(c);
  }
  return out;
}

namespace {
// e_n in the h-basis from e_n = sum_{j=1..n} (-1)^{j+1} e_{n-j} h_j.
SymElem e_in_h(int n) {
  static Memo<int, SymElem> memo;
  return memo.get(n, [&] {
    SymElem out;
    if (n == 0) return SymElem(Partition());
    for (int j = 1; j <= n; ++j)
      out += union_product(e_in_h(n - j), SymElem(Partition{j})).scaled(Rational(j % 2 == 1 ? 1 : -1));
    return out;
  });
}
}  // namespace

SymElem to_h_basis(const SymElem& x) {
  SymElem out;
  for (const auto& [lam, c] : to_e_basis(x)) {
    SymElem term{Partition()};
    for (int part : lam.parts) term = union_product(term, e_in_h(part));
    out += term.scaled(c);
  }
  return out;
}

Rational sym_pairing(const Partition& h_index, const Partition& m_index) {
  return h_index == m_index ? Rational(1) : Rational(0);
}

Rational sym_pairing(const SymElem& x, const SymElem& y) {
  return pairing_extend([](const Partition& a, const Partition& b) { return sym_pairing(a, b); }, to_h_basis(x), y);
}

Report eh_identity_check(int n) {
  require_degree(n, "e/h identity check");
  Report rep("Sym e/h identities");
  for (int d = 1; d <= n; ++d) {
    QSymElem total;
    for (int i = 0; i <= d; ++i) {
      auto term = qsym_product(embed(basis_expand(SymGenerator::e, i)), embed(basis_expand(SymGenerator::h, d - i)));
      total += term.scaled(Rational((d - i) % 2 == 0 ? 1 : -1));
    }
    rep.record("sum e_i (-h)_j = 0", d, total.is_zero() ? "" : "degree part is " + render(total));

    auto se = linear_extend([](const Partition& p) { return sym_antipode(p); }, basis_expand(SymGenerator::e, d));
    auto expect = basis_expand(SymGenerator::h, d).scaled(Rational(d % 2 == 0 ? 1 : -1));
    rep.record("S(e_i) = (-1)^i h_i", d, se == expect ? "" : "S(e_" + std::to_string(d) + ") = " + render(se));
  }
  return rep;
}

// ---- NSym -------------------------------------------------------------------

NSymElem nsym_product(const EWord& a, const EWord& b) {
  std::vector<int> l = a.letters;
  l.insert(l.end(), b.letters.begin(), b.letters.end());
  return NSymElem(EWord(std::move(l)));
}

TensorElem<EWord> nsym_coproduct(const EWord& w) {
  TensorElem<EWord> out(std::make_pair(EWord(), EWord()));
  for (int k : w.letters) {
    TensorElem<EWord> dk;
    for (int i = 0; i <= k; ++i) {
      EWord left = i == 0 ? EWord() : EWord{i};
      EWord right = i == k ? EWord() : EWord{k - i};
      dk.add_term({left, right}, Rational(1));
    }
    out = tensor_product(nsym_product, out, dk);
  }
  return out;
}

SymElem tau(const EWord& w) {
  SymElem out{Partition()};
  for (int k : w.letters) out = sym_product(out, basis_expand(SymGenerator::e, k));
  return out;
}

SymElem tau(const NSymElem& x) {
  return linear_extend([](const EWord& w) { return tau(w); }, x);
}

std::vector<EWord> nsym_basis(int n) {
  std::vector<EWord> out;
  for (auto& c : compositions_of(n)) out.emplace_back(std::move(c.parts));
  return out;
}

const HopfOps<Partition>& sym_hopf() {
  static const HopfOps<Partition> h{
      .name = "Sym",
      .unit = Partition(),
      .product = [](const Partition& a, const Partition& b) { return sym_product(a, b); },
      .coproduct = sym_coproduct,
      .degree = [](const Partition& p) { return p.weight(); },
      .basis =
          [](int d) {
            require_degree(d, "Sym basis");
            return partitions_of(d);
          },
      .antipode = sym_antipode,
      .counit = {},
  };
  return h;
}

const HopfOps<Composition>& qsym_hopf() {
  static const HopfOps<Composition> h{
      .name = "QSym",
      .unit = Composition(),
      .product = [](const Composition& a, const Composition& b) { return qsym_product(a, b); },
      .coproduct = qsym_coproduct,
      .degree = [](const Composition& c) { return c.weight(); },
      .basis =
          [](int d) {
            require_degree(d, "QSym basis");
            return compositions_of(d);
          },
      .antipode = qsym_antipode,
      .counit = {},
  };
  return h;
}

const HopfOps<EWord>& nsym_hopf() {
  static const HopfOps<EWord> h{
      .name = "NSym",
      .unit = EWord(),
      .product = nsym_product,
      .coproduct = nsym_coproduct,
      .degree = [](const EWord& w) { return w.weight(); },
      .basis =
          [](int d) {
            require_degree(d, "NSym basis");
            return nsym_basis(d);
          },
      .antipode = {},
      .counit = {},
  };
  return h;
}

}  // namespace hopftrees
