#pragma once

#include <string>

#include "json.hpp"
#include "lightnet/classify.hpp"
#include "lightnet/embedding.hpp"

namespace lightnet::io {

using nlohmann::json;

inline json to_json(const Multinet& m) {
  return json{{"n", m.order()}, {"blocks", m.blocks()}, {"name", m.name()}, {"quasigroups", m.quasigroups()}};
}

inline json to_json(const ClassRecord& r) {
  json j = to_json(r.representative);
  j["superline_length"] = r.superline_length;
  j["automorphism_order"] = r.automorphism_order;
  j["members"] = r.members.size();
  return j;
}

inline std::string kind_name(const MergedBlock& b) {
  if (b.kind == MergedBlock::Kind::kLongLine) return "long_line";
  return "part" + std::to_string(b.part + 1);
}

inline json to_json(const ComponentReport& r, const MonomialOrder& ord, Budget* budget) {
  json comps = json::array();
  for (const auto& c : r.components) {
    json gens = json::array();
    for (const auto& g : c.prime.groebner_basis(ord, budget)) gens.push_back(to_string(g));
    json jc{{"generators", gens}, {"admissible", c.admissible}};
    jc["dim"] = c.dimension ? json(*c.dimension) : json(nullptr);
    comps.push_back(std::move(jc));
  }
  json merged = json::array();
  for (const auto& b : r.merged) {
    merged.push_back(json{{"points", b.points}, {"kind", kind_name(b)}, {"size", b.points.size()}});
  }
  return json{{"class", r.multinet_id}, {"components", comps}, {"merged_blocks", merged}};
}

inline json to_json(const MergedSummary& s) {
  return json{{"long_lines", s.long_lines}, {"part1", s.part_sizes[0]}, {"part2", s.part_sizes[1]}, {"part3", s.part_sizes[2]}};
}

}  // namespace lightnet::io
