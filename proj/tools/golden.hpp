#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lightnet/embedding.hpp"

namespace lightnet::golden {

struct ClassRow {
  std::string id;
  std::size_t superline_length;
  std::vector<std::string> names;
  std::uint64_t automorphism_order;
};

inline const std::vector<ClassRow>& class_table() {
  static const std::vector<ClassRow> rows{
      {"M1", 3, {"6.1", "6.9"}, 324},     {"M2", 3, {"6.2", "6.3", "6.9"}, 324}, {"M3", 2, {"6.1", "6.4"}, 48},
      {"M4", 2, {"6.2", "6.5"}, 48},      {"M5", 2, {"6.4"}, 48},                {"M6", 2, {"6.7"}, 48},
      {"M7", 2, {"6.5"}, 16},             {"M8", 2, {"6.8", "6.11"}, 16},        {"M9", 2, {"6.10"}, 16},
      {"M10", 2, {"6.11"}, 16},           {"M11", 2, {"6.9", "6.12"}, 8},        {"M12", 2, {"6.12"}, 8},
      {"M13", 2, {"6.6", "6.7"}, 6},      {"M14", 2, {"6.5", "6.10"}, 4},        {"M15", 2, {"6.7", "6.10"}, 4},
      {"M16", 2, {"6.11", "6.12"}, 4},
  };
  return rows;
}

struct PrimeRow {
  std::string id;
  std::size_t components;
  std::size_t admissible;
  std::optional<int> dimension;
  friend bool operator==(const PrimeRow&, const PrimeRow&) = default;
};

inline const std::vector<PrimeRow>& prime_table() {
  static const std::vector<PrimeRow> rows{
      {"M3", 6, 1, 2},  {"M4", 3, 1, 2},  {"M5", 5, 0, {}},  {"M6", 1, 0, {}},  {"M7", 5, 0, {}},
      {"M8", 1, 1, 1},  {"M9", 2, 1, 1},  {"M10", 4, 1, 1},  {"M11", 2, 0, {}}, {"M12", 3, 1, 2},
      {"M13", 2, 1, 1}, {"M14", 4, 1, 1}, {"M15", 1, 1, 1},  {"M16", 1, 1, 1},
  };
  return rows;
}

inline std::optional<PrimeRow> prime_row(const std::string& id) {
  for (const auto& r : prime_table()) {
    if (r.id == id) return r;
  }
  return std::nullopt;
}

/// Merged-block rows. The M14 row lists "3, 3  1" under P3; it is read as
/// two size-3 blocks there plus the single new long line of the first column.
inline std::optional<MergedSummary> merged_row(const std::string& id) {
  using V = std::vector<std::size_t>;
  if (id == "M3") return MergedSummary{2, {V{}, V{}, V{}}};
  if (id == "M4") return MergedSummary{0, {V{3, 3}, V{3, 3}, V{3, 3}}};
  if (id == "M8") return MergedSummary{0, {V{}, V{}, V{5}}};
  if (id == "M9") return MergedSummary{0, {V{}, V{}, V{3, 3}}};
  if (id == "M10") return MergedSummary{0, {V{}, V{}, V{3, 3, 3, 3}}};
  if (id == "M12") return MergedSummary{0, {V{}, V{}, V{3}}};
  if (id == "M13") return MergedSummary{0, {V{}, V{}, V{}}};
  if (id == "M14") return MergedSummary{1, {V{3, 3}, V{3, 3}, V{3, 3}}};
  if (id == "M15") return MergedSummary{0, {V{3, 3}, V{}, V{}}};
  if (id == "M16") return MergedSummary{1, {V{}, V{}, V{3, 3}}};
  return std::nullopt;
}

inline bool embeds(const std::string& id) {
  for (const char* e : {"M3", "M4", "M8", "M9", "M10", "M12", "M13", "M14", "M15", "M16"}) {
    if (id == e) return true;
  }
  return false;
}

/// Reference generators of the second component of the Z3 example.
inline const std::vector<std::string>& z3_second_prime() {
  static const std::vector<std::string> gens{
      "t8 - t12",
      "t6 - t10",
      "t4 + t5 - t10 - t11",
      "t3 - t11",
      "t2 + t7 - t9 - t12",
      "t1 - t9",
      "t5*t7 - t5*t9 - t7*t11 + t9*t10 + t9*t11 - t9*t12 - t10*t11 + t11*t12",
  };
  return gens;
}

}  // namespace lightnet::golden
