#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "splitoct/star.hpp"

using namespace splitoct;

TEST_CASE("triple census: 7 associative, 28 anti-associative") {
  const auto triples = classify_triples();
  REQUIRE(triples.size() == 35);
  int assoc = 0;
  for (const auto& t : triples) {
    if (t.associative) {
      ++assoc;
      CHECK(max_abs(t.associator_witness) == 0.0);
    } else {
      CHECK(max_abs(t.associator_witness) > 0.0);
    }
  }
  CHECK(assoc == 7);
  CHECK(35 - assoc == 28);
}

TEST_CASE("classification consistent with the associator on all orderings") {
  for (const auto& t : classify_triples()) {
    const Octonion a = Octonion::unit(t.triple[0]), b = Octonion::unit(t.triple[1]),
                   c = Octonion::unit(t.triple[2]);
    bool all_zero = true;
    const Octonion perms[6][3] = {{a, b, c}, {a, c, b}, {b, a, c},
                                  {b, c, a}, {c, a, b}, {c, b, a}};
    for (const auto& p : perms)
      all_zero = all_zero && max_abs(associator(p[0], p[1], p[2])) == 0.0;
    CHECK(all_zero == t.associative);
  }
}

TEST_CASE("named triples") {
  const auto triples = classify_triples();
  auto kind_of = [&](std::array<int, 3> t) {
    std::sort(t.begin(), t.end());
    for (const auto& c : triples)
      if (c.triple == t) return c.associative;
    FAIL("triple not found");
    return false;
  };
  CHECK(kind_of({kj1, kj2, kj3}) == true);    // quaternionic line
  CHECK(kind_of({kJ1, kJ2, kJ3}) == false);   // associator -2I
}

TEST_CASE("lines: the seven David's Star lines") {
  const auto ls = lines();
  REQUIRE(ls.size() == 7);

  // lines through j1: {j1,j2,j3}, {j1,J2,J3}, {j1,J1,I}
  const auto through_j1 = lines_through(kj1);
  REQUIRE(through_j1.size() == 3);
  const std::set<std::set<int>> want_j1 = {
      {kj1, kj2, kj3}, {kJ2, kJ3, kj1}, {kJ1, kj1, kI}};
  std::set<std::set<int>> got_j1;
  for (const auto& l : through_j1) got_j1.insert({l[0], l[1], l[2]});
  CHECK(got_j1 == want_j1);

  // lines through I: {I,J1,j1}, {I,J2,j2}, {I,J3,j3}
  const auto through_I = lines_through(kI);
  REQUIRE(through_I.size() == 3);
  const std::set<std::set<int>> want_I = {
      {kJ1, kj1, kI}, {kJ2, kj2, kI}, {kJ3, kj3, kI}};
  std::set<std::set<int>> got_I;
  for (const auto& l : through_I) got_I.insert({l[0], l[1], l[2]});
  CHECK(got_I == want_I);
}

TEST_CASE("Fano incidence: every pair lies on exactly one line, 3 lines per node") {
  const auto ls = lines();
  for (int a = 1; a <= 7; ++a) {
    CHECK(lines_through(a).size() == 3);
    for (int b = a + 1; b <= 7; ++b) {
      int count = 0;
      for (const auto& l : ls) {
        const bool has_a = l[0] == a || l[1] == a || l[2] == a;
        const bool has_b = l[0] == b || l[1] == b || l[2] == b;
        if (has_a && has_b) ++count;
      }
      CHECK(count == 1);
    }
  }
}

TEST_CASE("DOT export: deterministic, 7 nodes, edges match the table") {
  const std::string dot = export_dot();
  CHECK(dot == export_dot());  // byte-stable

  int node_count = 0;
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line))
    if (line.find("\";") != std::string::npos && line.find("->") == std::string::npos &&
        line.find('"') != std::string::npos)
      ++node_count;
  CHECK(node_count == 7);

  // every edge u -> v labeled w must satisfy u*v = +w; 21 edges total
  auto index_of = [](const std::string& name) {
    for (int i = 0; i < 8; ++i)
      if (name == kUnitNames[static_cast<size_t>(i)]) return i;
    return -1;
  };
  in.clear();
  in.str(dot);
  int edges = 0;
  while (std::getline(in, line)) {
    const auto arrow = line.find("->");
    if (arrow == std::string::npos || line.find('"') == std::string::npos) continue;
    ++edges;
    auto quoted = [&line](size_t from) {
      const auto q1 = line.find('"', from);
      const auto q2 = line.find('"', q1 + 1);
      return line.substr(q1 + 1, q2 - q1 - 1);
    };
    const std::string u = quoted(0);
    const std::string v = quoted(arrow);
    const auto lbl = line.find("label=");
    const std::string w = quoted(lbl);
    const SignedUnit p = basis_mul(index_of(u), index_of(v));
    CHECK(p.sign == 1);
    CHECK(kUnitNames[static_cast<size_t>(p.index)] == w);
  }
  CHECK(edges == 21);
}

TEST_CASE("render_table: cells and shapes") {
  const std::string text = render_table(TableFormat::text);
  CHECK(text == render_table(TableFormat::text));

  const std::string csv = render_table(TableFormat::csv);
  // 9 rows x 9 columns including headers
  int rows = 0;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 8);
  }
  CHECK(rows == 9);

  // cell (J1, J2) = "+j3", cell (1,1) = "+1"
  CHECK(csv.find("J1,+J1,+1,+j3,-j2,+I,-J3,+J2,+j1") != std::string::npos);
  CHECK(csv.find("1,+1,+J1") != std::string::npos);

  CHECK_THROWS_AS(parse_table_format("yaml"), std::invalid_argument);
}
