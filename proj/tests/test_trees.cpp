#include <doctest.h>

#include "hopftrees/errors.hpp"
#include "hopftrees/limits.hpp"
#include "hopftrees/trees.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace hopftrees;

namespace {
RootedTree R(const char* s) { return RootedTree::from_bba(s); }
PlanarTree P(const char* s) { return PlanarTree::from_bba(s); }

// Rooted-tree counts by the classical recurrence
// a(n+1) = (1/n) sum_{k=1..n} (sum_{d|k} d a(d)) a(n-k+1), a(1) = 1.
std::vector<long> rooted_counts_by_recurrence(int max_vertices) {
  std::vector<long> a(static_cast<std::size_t>(max_vertices) + 1, 0);
  a[1] = 1;
  for (int n = 1; n < max_vertices; ++n) {
    long sum = 0;
    for (int k = 1; k <= n; ++k) {
      long s = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) s += d * a[d];
      sum += s * a[n - k + 1];
    }
    a[n + 1] = sum / n;
  }
  return a;
}

long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}
}  // namespace

TEST_CASE("bba_decode") {
  CHECK(bba_decode("").is_single_vertex());
  auto t = bba_decode("<><<>>");
  auto br = t.branches();
  REQUIRE(br.size() == 2);
  CHECK(br[0].is_single_vertex());
  CHECK(br[1] == planar_ladder(2));
  try {
    bba_decode("<>>");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(bba_decode("<<>"), ParseError);
  CHECK_THROWS_AS(bba_decode("<x>"), ParseError);
}

TEST_CASE("bba_encode") {
  CHECK(bba_encode(PlanarTree()) == "");
  CHECK(bba_encode(planar_ladder(3)) == "<<>>");
  auto star = PlanarTree::graft({PlanarTree(), PlanarTree(), PlanarTree()});
  CHECK(bba_encode(star) == "<><><>");
  CHECK(bba_decode(bba_encode(star)) == star);
}

TEST_CASE("round trip and encoded length over P_n, n <= 8") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& t : enumerate_planar(n)) {
      CHECK(bba_decode(bba_encode(t)) == t);
      CHECK(bba_encode(t).size() == static_cast<std::size_t>(2 * (t.vertex_count() - 1)));
    }
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(P("<><<>>")) == canonicalize(P("<<>><>")));
  CHECK(canonicalize(PlanarTree()) == RootedTree());
  CHECK(canonicalize(P("<><>")) == RootedTree::graft({RootedTree(), RootedTree()}));
  CHECK(canonicalize(P("<<>><>")).bba() == "<><<>>");
}

TEST_CASE("canonicalize is idempotent through every planar realization") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& t : enumerate_rooted(n))
      for (const auto& real : planar_realizations(t)) {
        CHECK(canonicalize(real) == t);
        CHECK(canonicalize(canonicalize(real).planar()) == t);
      }
}

TEST_CASE("sym_order") {
  CHECK(sym_order(RootedTree()) == 1);
  CHECK(sym_order(R("<><>")) == 2);
  CHECK(sym_order(t_lambda(Partition{1, 1, 2})) == 2);
  CHECK(sym_order(R("<<><>><<><>>")) == 8);
}

TEST_CASE("enumeration counts") {
  for (int n = 0; n <= 8; ++n) CHECK(static_cast<long>(enumerate_planar(n).size()) == catalan(n));
  CHECK(enumerate_planar(6).size() == 132);
  CHECK(enumerate_planar(3).size() == 5);

  const std::vector<long> expected{1, 1, 2, 4, 9, 20, 48, 115};
  auto recurrence = rooted_counts_by_recurrence(8);
  for (int n = 0; n <= 7; ++n) {
    std::set<RootedTree> dedup;
    for (const auto& t : enumerate_planar(n)) dedup.insert(canonicalize(t));
    CHECK(static_cast<long>(dedup.size()) == expected[n]);
    CHECK(recurrence[n + 1] == expected[n]);
    auto direct = enumerate_rooted(n);
    CHECK(static_cast<long>(direct.size()) == expected[n]);
    CHECK(std::vector<RootedTree>(dedup.begin(), dedup.end()) == direct);
  }
}

TEST_CASE("enumeration order is deterministic") {
  auto p = enumerate_planar(3);
  std::vector<std::string> strings;
  for (const auto& t : p) strings.push_back(t.bba());
  CHECK(strings == std::vector<std::string>{"<<<>>>", "<<><>>", "<<>><>", "<><<>>", "<><><>"});
  auto r = enumerate_rooted(2);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == ladder(3));
  CHECK(r[1] == R("<><>"));
  auto r5 = enumerate_rooted(5);
  CHECK(std::is_sorted(r5.begin(), r5.end()));
}

TEST_CASE("enumeration respects the degree ceiling") {
  int saved = degree_ceiling();
  set_degree_ceiling(4);
  CHECK_THROWS_AS(enumerate_planar(5), ResourceError);
  CHECK_THROWS_AS(enumerate_rooted(5), ResourceError);
  set_degree_ceiling(saved);
}

TEST_CASE("embedding_count") {
  CHECK(embedding_count(RootedTree()) == 1);
  CHECK(embedding_count(R("<><>")) == 1);
  CHECK(embedding_count(R("<><<>>")) == 2);
  auto reals = planar_realizations(R("<><<>>"));
  REQUIRE(reals.size() == 2);
  CHECK(reals[0].bba() == "<<>><>");
  CHECK(reals[1].bba() == "<><<>>");
}

TEST_CASE("embedding_count matches planar preimages for trees of <= 8 vertices") {
  std::map<RootedTree, long> preimages;
  for (int n = 0; n <= 7; ++n)
    for (const auto& T : enumerate_planar(n)) ++preimages[canonicalize(T)];
  for (const auto& [t, count] : preimages) {
    CHECK(embedding_count(t) == count);
    mpz_class prod = 1;
    for (int c : child_counts(t.bba())) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(c));
      prod *= f;
    }
    CHECK(embedding_count(t) * sym_order(t) == prod);
  }
}

TEST_CASE("ladders and ladder forests") {
  CHECK(ladder(1) == RootedTree());
  CHECK(ladder(3).bba() == "<<>>");
  CHECK(t_lambda(Partition{1, 1}) == R("<><>"));
  CHECK(T_comp(Composition{2, 1}) == bba_decode("<<>><>"));
  CHECK(t_lambda(Partition{2, 1}) == R("<<>><>"));
  CHECK_THROWS_AS(ladder(0), DomainError);
}

TEST_CASE("forest ordering and products") {
  Forest a(std::vector<RootedTree>{ladder(2), RootedTree()});
  Forest b(ladder(3));
  CHECK((a * b).degree() == 6);
  CHECK(a * b == b * a);
  CHECK(render_basis(a) == "()(<>)");
  CHECK(render_basis(Forest()) == "1");
  OrderedForest x(std::vector<PlanarTree>{planar_ladder(2), PlanarTree()});
  CHECK(x.reversed() != x);
  CHECK((x * x.reversed()).size() == 4);
}
