// Exercises the shared library through its C header only.

#include <doctest.h>

#include "hopftrees/hopftrees.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ht_string_free(s);
  return out;
}

std::string render(const ht_expr* e) {
  char* s = nullptr;
  REQUIRE(ht_expr_render(e, HT_FORMAT_TEXT, &s) == HT_OK);
  return take(s);
}

ht_expr* parse(const char* text, const char* alg) {
  ht_expr* e = nullptr;
  REQUIRE(ht_expr_parse(text, alg, &e) == HT_OK);
  return e;
}

bool golden_passes(const std::string& text) {
  ht_report* r = nullptr;
  REQUIRE(ht_check_golden(text.c_str(), &r) == HT_OK);
  const bool ok = ht_report_passed(r) != 0;
  ht_report_free(r);
  return ok;
}

// Every way of changing one coefficient on the right-hand side of a golden
// line: explicit integers are incremented, implicit coefficients become 2.
std::vector<std::string> single_coefficient_mutations(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& l = lines[i];
    if (l.empty() || l[0] == '#') continue;
    const auto eq = l.rfind(" = ");
    if (eq == std::string::npos) continue;
    // Term starts: right after " = ", " + " or " - ".
    std::vector<std::size_t> starts{eq + 3};
    for (std::size_t k = eq + 3; k + 3 <= l.size(); ++k)
      if (l.compare(k, 3, " + ") == 0 || l.compare(k, 3, " - ") == 0) starts.push_back(k + 3);
    for (std::size_t s : starts) {
      std::string m = l;
      if (s < m.size() && m[s] == '-') ++s;
      if (s < m.size() && std::isdigit(static_cast<unsigned char>(m[s]))) {
        std::size_t e = s;
        while (e < m.size() && std::isdigit(static_cast<unsigned char>(m[e]))) ++e;
        const long v = std::stol(m.substr(s, e - s));
        m.replace(s, e - s, std::to_string(v + 1));
      } else {
        m.insert(s, "2*");
      }
      std::string mutated;
      for (std::size_t j = 0; j < lines.size(); ++j) mutated += (j == i ? m : lines[j]) + "\n";
      out.push_back(mutated);
    }
  }
  return out;
}

std::string read_golden() {
  std::ifstream in(HOPFTREES_GOLDEN_DIR "/displays.txt");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse, operate, render") {
  ht_expr* a = parse("(<><>)", "gl");
  ht_expr* b = parse("(<>)", "gl");
  ht_expr* p = nullptr;
  REQUIRE(ht_expr_product(a, b, &p) == HT_OK);
  CHECK(render(p) == "(<<><>>) + 2*(<><<>>) + (<><><>)");
  CHECK(std::string(ht_expr_algebra(p)) == "gl");
  CHECK(ht_expr_is_tensor(p) == 0);

  ht_expr* d = nullptr;
  REQUIRE(ht_expr_coproduct(b, &d) == HT_OK);
  CHECK(ht_expr_is_tensor(d) == 1);

  char* json = nullptr;
  REQUIRE(ht_expr_render(b, HT_FORMAT_JSON, &json) == HT_OK);
  CHECK(take(json) == R"j({"algebra":"gl","tensor":false,"terms":[{"basis":"(<>)","coeff":"1"}]})j");

  char* pair = nullptr;
  REQUIRE(ht_expr_pair(a, a, &pair) == HT_OK);
  CHECK(take(pair) == "2");

  for (ht_expr* e : {a, b, p, d}) ht_expr_free(e);
}

TEST_CASE("error codes and offsets") {
  ht_expr* e = nullptr;
  CHECK(ht_expr_parse("(<>", "ck", &e) == HT_ERR_PARSE);
  CHECK(e == nullptr);
  CHECK(ht_last_error_offset() == 3);
  CHECK(std::string(ht_last_error()).find("offset 3") != std::string::npos);

  CHECK(ht_expr_parse("()", "nope", &e) == HT_ERR_DOMAIN);
  CHECK(ht_expr_parse(nullptr, "ck", &e) == HT_ERR_INVALID_ARGUMENT);

  ht_expr* x = parse("()", "gl");
  CHECK(ht_expr_evaluate(x, "1/0", &e) == HT_ERR_DIV0);
  CHECK(ht_expr_map("phi", x, &e) == HT_ERR_DOMAIN);

  const int old = ht_get_max_degree();
  REQUIRE(ht_set_max_degree(3) == HT_OK);
  ht_report* r = nullptr;
  CHECK(ht_check("dse", 7, &r) == HT_ERR_RESOURCE);
  CHECK(ht_kappa(4, &e) == HT_ERR_RESOURCE);
  REQUIRE(ht_set_max_degree(old) == HT_OK);
  ht_expr_free(x);

  // A successful call clears the error state.
  ht_expr* y = parse("()", "gl");
  CHECK(std::string(ht_last_error()).empty());
  ht_expr_free(y);
}

TEST_CASE("maps, families and enumeration") {
  ht_expr* m = parse("m[2,1,1]", "sym");
  ht_expr* t = nullptr;
  REQUIRE(ht_expr_map("taustar", m, &t) == HT_OK);
  CHECK(render(t) == "M[1,1,2] + M[1,2,1] + M[2,1,1]");

  ht_expr* k = nullptr;
  REQUIRE(ht_kappa(2, &k) == HT_OK);
  CHECK(render(k) == "(<<>>) + 1/2*(<><>)");
  ht_expr* h = nullptr;
  REQUIRE(ht_expr_map("phistar", k, &h) == HT_OK);
  CHECK(render(h) == "m[1,1] + m[2]");

  char* list = nullptr;
  REQUIRE(ht_enumerate("pl", 2, HT_FORMAT_TEXT, &list) == HT_OK);
  CHECK(take(list) == "(<<>>)\n(<><>)\n");

  char* dse = nullptr;
  REQUIRE(ht_dse(2, "ck", nullptr, HT_FORMAT_TEXT, &dse) == HT_OK);
  CHECK(take(dse) == "x_1 = ()\nx_2 = (p)*(<>)\n");
  REQUIRE(ht_dse(3, "foissy", "2", HT_FORMAT_TEXT, &dse) == HT_OK);
  CHECK(take(dse) == "X_1 = ()\nX_2 = 2*(<>)\nX_3 = 4*(<<>>) + (<><>)\n");

  for (ht_expr* e : {m, t, k, h}) ht_expr_free(e);
}

TEST_CASE("suites through the C interface") {
  ht_report* r = nullptr;
  REQUIRE(ht_check("counts", 5, &r) == HT_OK);
  CHECK(ht_report_passed(r) == 1);
  CHECK(ht_report_failures(r) == 0);
  char* text = nullptr;
  REQUIRE(ht_report_render(r, HT_FORMAT_TEXT, &text) == HT_OK);
  CHECK(take(text).rfind("PASS ", 0) == 0);
  ht_report_free(r);
  CHECK(ht_check("nonsense", 3, &r) == HT_ERR_DOMAIN);
}

TEST_CASE("golden displays and their single-coefficient mutations") {
  const std::string golden = read_golden();
  CHECK(golden_passes(golden));
  const auto mutations = single_coefficient_mutations(golden);
  CHECK(mutations.size() >= 20);
  for (const auto& m : mutations) CHECK_FALSE(golden_passes(m));
}
