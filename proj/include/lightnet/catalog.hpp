#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lightnet/polyring/poly_io.hpp"
#include "lightnet/quasigroup.hpp"

namespace lightnet {

/// Reads a Cayley table: optional `# name` line, then the order n, then n
/// rows of n one-based entries. Other '#' lines and blank lines are skipped.
inline LatinSquare read_cayley(std::istream& in) {
  std::string name;
  std::size_t n = 0;
  std::vector<std::vector<Element>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (name.empty() && n == 0) {
        const auto rest = line.find_first_not_of(" \t", first + 1);
        if (rest != std::string::npos) {
          name = line.substr(rest);
          while (!name.empty() && (name.back() == '\r' || name.back() == ' ')) name.pop_back();
        }
      }
      continue;
    }
    std::istringstream ls(line);
    if (n == 0) {
      long v = 0;
      if (!(ls >> v) || v <= 0) throw ParseError("expected positive order", lineno, first + 1);
      n = static_cast<std::size_t>(v);
      std::string extra;
      if (ls >> extra) throw ParseError("trailing text after order", lineno, 0);
      continue;
    }
    if (rows.size() == n) throw ParseError("more than " + std::to_string(n) + " rows", lineno, 0);
    std::vector<Element> row;
    long v = 0;
    while (ls >> v) {
      if (v < 1 || static_cast<std::size_t>(v) > n) throw ParseError("entry out of range 1.." + std::to_string(n), lineno, 0);
      row.push_back(static_cast<Element>(v - 1));
    }
    if (!ls.eof()) throw ParseError("non-numeric entry", lineno, 0);
    if (row.size() != n) throw ParseError("row has " + std::to_string(row.size()) + " entries", lineno, 0);
    rows.push_back(std::move(row));
  }
  if (n == 0) throw ParseError("missing order", lineno, 0);
  if (rows.size() != n) throw ParseError("expected " + std::to_string(n) + " rows", lineno, 0);
  try {
    return LatinSquare(rows, name);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

inline void write_cayley(std::ostream& out, const LatinSquare& q) {
  if (!q.name().empty()) out << "# " << q.name() << '\n';
  out << q.order() << '\n';
  for (const auto& row : q.table()) {
    for (std::size_t y = 0; y < row.size(); ++y) out << (y ? " " : "") << row[y] + 1;
    out << '\n';
  }
}

/// "#6.5.1.1" -> "6.5".
inline std::string short_name(std::string_view name) {
  if (name.starts_with('#')) name.remove_prefix(1);
  if (name.ends_with(".1.1")) name.remove_suffix(4);
  return std::string(name);
}

/// The twelve main classes of quasigroups of order 6, one representative each,
/// named "#6.k.1.1".
inline const std::vector<LatinSquare>& order6_catalog() {
  static const std::vector<LatinSquare> catalog = [] {
    const std::vector<std::vector<std::vector<Element>>> t{
        {{1, 2, 3, 4, 5, 6}, {2, 3, 4, 5, 6, 1}, {3, 4, 5, 6, 1, 2}, {4, 5, 6, 1, 2, 3}, {5, 6, 1, 2, 3, 4}, {6, 1, 2, 3, 4, 5}},
        {{1, 2, 3, 4, 5, 6}, {2, 1, 5, 6, 3, 4}, {3, 6, 1, 5, 4, 2}, {4, 5, 6, 1, 2, 3}, {5, 4, 2, 3, 6, 1}, {6, 3, 4, 2, 1, 5}},
        {{1, 2, 3, 4, 5, 6}, {2, 3, 1, 5, 6, 4}, {3, 1, 2, 6, 4, 5}, {4, 6, 5, 2, 1, 3}, {5, 4, 6, 3, 2, 1}, {6, 5, 4, 1, 3, 2}},
        {{1, 2, 3, 4, 5, 6}, {2, 1, 4, 3, 6, 5}, {3, 4, 5, 6, 1, 2}, {4, 3, 6, 5, 2, 1}, {5, 6, 1, 2, 4, 3}, {6, 5, 2, 1, 3, 4}},
        {{1, 2, 3, 4, 5, 6}, {2, 1, 5, 6, 3, 4}, {3, 6, 2, 5, 4, 1}, {4, 5, 6, 2, 1, 3}, {5, 4, 1, 3, 6, 2}, {6, 3, 4, 1, 2, 5}},
        {{1, 2, 3, 4, 5, 6}, {2, 1, 4, 5, 6, 3}, {3, 6, 2, 1, 4, 5}, {4, 5, 6, 2, 3, 1}, {5, 3, 1, 6, 2, 4}, {6, 4, 5, 3, 1, 2}},
        {{1, 2, 3, 4, 5, 6}, {2, 1, 4, 3, 6, 5}, {3, 5, 1, 6, 4, 2}, {4, 6, 5, 1, 2, 3}, {5, 3, 6, 2, 1, 4}, {6, 4, 2, 5, 3, 1}},
        {{1, 2, 3, 4, 5, 6}, {2, 1, 6, 5, 3, 4}, {3, 6, 1, 2, 4, 5}, {4, 5, 2, 1, 6, 3}, {5, 3, 4, 6, 1, 2}, {6, 4, 5, 3, 2, 1}},
        {{1, 2, 3, 4, 5, 6}, {2, 3, 1, 6, 4, 5}, {3, 1, 2, 5, 6, 4}, {4, 6, 5, 1, 2, 3}, {5, 4, 6, 2, 3, 1}, {6, 5, 4, 3, 1, 2}},
        {{1, 2, 3, 4, 5, 6}, {2, 1, 6, 5, 4, 3}, {3, 5, 1, 2, 6, 4}, {4, 6, 2, 1, 3, 5}, {5, 3, 4, 6, 2, 1}, {6, 4, 5, 3, 1, 2}},
        {{1, 2, 3, 4, 5, 6}, {2, 1, 4, 5, 6, 3}, {3, 4, 2, 6, 1, 5}, {4, 5, 6, 2, 3, 1}, {5, 6, 1, 3, 2, 4}, {6, 3, 5, 1, 4, 2}},
        {{1, 2, 3, 4, 5, 6}, {2, 1, 5, 6, 4, 3}, {3, 5, 4, 2, 6, 1}, {4, 6, 2, 3, 1, 5}, {5, 4, 6, 1, 3, 2}, {6, 3, 1, 5, 2, 4}},
    };
    std::vector<LatinSquare> out;
    for (std::size_t k = 0; k < t.size(); ++k) {
      try {
        out.push_back(LatinSquare::from_one_based(t[k], "#6." + std::to_string(k + 1) + ".1.1"));
      } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("order6_catalog: corrupted table: ") + e.what());
      }
    }
    return out;
  }();
  return catalog;
}

inline std::vector<LatinSquare> load_catalog() { return order6_catalog(); }

}  // namespace lightnet
