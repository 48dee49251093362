#pragma once

// David's Star structure of the split-octonion basis: the seven associative
// "lines", triple classification, and deterministic table / graph exports.

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitoct/octonion.hpp"

namespace splitoct {

struct TripleClassification {
  std::array<int, 3> triple;       // ascending indices in 1..7
  bool associative;
  Octonion associator_witness;     // zero iff associative
};

/// All C(7,3)=35 unordered triples of distinct hypercomplex units, in
/// lexicographic order, classified by whether every ordering associates.
inline std::vector<TripleClassification> classify_triples() {
  std::vector<TripleClassification> out;
  out.reserve(35);
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b)
      for (int c = b + 1; c <= 7; ++c) {
        const Octonion ea = Octonion::unit(a), eb = Octonion::unit(b),
                       ec = Octonion::unit(c);
        const std::array<std::array<Octonion, 3>, 6> orders = {{
            {ea, eb, ec}, {ea, ec, eb}, {eb, ea, ec},
            {eb, ec, ea}, {ec, ea, eb}, {ec, eb, ea}}};
        bool assoc = true;
        Octonion witness;
        for (const auto& o : orders) {
          const Octonion w = associator(o[0], o[1], o[2]);
          if (max_abs(w) != 0.0) {
            assoc = false;
            witness = w;
            break;
          }
        }
        out.push_back({{a, b, c}, assoc, witness});
      }
  return out;
}

/// The seven associative triples ("lines" of the David's Star figure).
inline std::vector<std::array<int, 3>> lines() {
  std::vector<std::array<int, 3>> out;
  for (const auto& t : classify_triples())
    if (t.associative) out.push_back(t.triple);
  return out;
}

inline std::vector<std::array<int, 3>> lines_through(int unit) {
  std::vector<std::array<int, 3>> out;
  for (const auto& l : lines())
    if (l[0] == unit || l[1] == unit || l[2] == unit) out.push_back(l);
  return out;
}

/// Deterministic DOT digraph of the seven hypercomplex units. Each unordered
/// pair {u,v} lies on exactly one line; the edge is directed u -> v when
/// u*v = +w (the third unit of the line) and labeled with w. Moving against
/// an edge flips the product sign, per the figure convention. The three
/// I-corners of the printed figure are one logical node here.
inline std::string export_dot() {
  std::ostringstream os;
  os << "digraph david_star {\n";
  os << "  // split-octonion basis products: edge u -> v labeled w means u*v = +w\n";
  for (int u = 1; u <= 7; ++u)
    os << "  \"" << kUnitNames[u] << "\";\n";
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b) {
      const SignedUnit p = basis_mul(a, b);
      const int u = p.sign > 0 ? a : b;
      const int v = p.sign > 0 ? b : a;
      os << "  \"" << kUnitNames[u] << "\" -> \"" << kUnitNames[v]
         << "\" [label=\"" << kUnitNames[p.index] << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

enum class TableFormat { text, csv };

inline TableFormat parse_table_format(const std::string& s) {
  if (s == "text") return TableFormat::text;
  if (s == "csv") return TableFormat::csv;
  throw std::invalid_argument("unknown table format: " + s + " (expected text|csv)");
}

/// 8x8 grid of signed unit names. CSV form has a header row/column, 9x9 cells.
inline std::string render_table(TableFormat fmt) {
  auto cell = [](int a, int b) {
    const SignedUnit p = basis_mul(a, b);
    return std::string(p.sign > 0 ? "+" : "-") + std::string(kUnitNames[p.index]);
  };
  std::ostringstream os;
  if (fmt == TableFormat::csv) {
    os << "*";
    for (int b = 0; b < 8; ++b) os << "," << kUnitNames[b];
    os << "\r\n";
    for (int a = 0; a < 8; ++a) {
      os << kUnitNames[a];
      for (int b = 0; b < 8; ++b) os << "," << cell(a, b);
      os << "\r\n";
    }
  } else {
    os << "      ";
    for (int b = 0; b < 8; ++b) {
      os << kUnitNames[b];
      os << std::string(6 - kUnitNames[b].size(), ' ');
    }
    os << "\n";
    for (int a = 0; a < 8; ++a) {
      os << kUnitNames[a];
      os << std::string(6 - kUnitNames[a].size(), ' ');
      for (int b = 0; b < 8; ++b) {
        const std::string c = cell(a, b);
        os << c << std::string(6 - c.size(), ' ');
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace splitoct
