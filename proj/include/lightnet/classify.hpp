#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lightnet/catalog.hpp"
#include "lightnet/incidence.hpp"

namespace lightnet {

class ClassificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Key of a class: labeling quasigroups (short names) and automorphism order.
struct ClassKey {
  std::vector<std::string> names;
  std::uint64_t automorphism_order;
  friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

/// Reference order of the sixteen classes.
inline const std::vector<ClassKey>& order6_class_keys() {
  static const std::vector<ClassKey> keys{
      {{"6.1", "6.9"}, 324},  {{"6.2", "6.3", "6.9"}, 324}, {{"6.1", "6.4"}, 48},   {{"6.2", "6.5"}, 48},
      {{"6.4"}, 48},          {{"6.7"}, 48},                {{"6.5"}, 16},          {{"6.8", "6.11"}, 16},
      {{"6.10"}, 16},         {{"6.11"}, 16},               {{"6.9", "6.12"}, 8},   {{"6.12"}, 8},
      {{"6.6", "6.7"}, 6},    {{"6.5", "6.10"}, 4},         {{"6.7", "6.10"}, 4},   {{"6.11", "6.12"}, 4},
  };
  return keys;
}

struct CorpusEntry {
  std::size_t table;  // index into order6_catalog()
  SubsquareTriple subsquare;
  Multinet multinet;
};

/// Every (catalog table, proper subsquare) multinet, tables in catalog order
/// and subsquares in point-tuple order.
inline std::vector<CorpusEntry> order6_corpus() {
  std::vector<CorpusEntry> out;
  const auto& cat = order6_catalog();
  for (std::size_t t = 0; t < cat.size(); ++t) {
    for (auto& s : all_proper_subsquares(cat[t])) {
      auto m = multinet_with_superline(cat[t], s);
      out.push_back({t, std::move(s), std::move(m)});
    }
  }
  return out;
}

struct ClassRecord {
  std::string id;
  Multinet representative;  // well-indexed
  std::size_t superline_length;
  std::vector<std::string> names;
  std::uint64_t automorphism_order;
  std::vector<std::size_t> members;  // corpus indices
};

namespace detail {

/// Orders "6.10" after "6.9".
inline bool catalog_name_less(const std::string& a, const std::string& b) {
  auto num = [](const std::string& s) {
    const auto dot = s.rfind('.');
    return std::stoi(s.substr(dot + 1));
  };
  return num(a) < num(b);
}

}  // namespace detail

/// Partitions the order-6 corpus into isomorphism classes, represents each by
/// its first member (well-indexed) and orders the classes by reference key.
/// `jobs` > 1 spreads the isomorphism tests of each round over threads.
inline std::vector<ClassRecord> classify_order6(unsigned jobs = 1) {
  const auto corpus = order6_corpus();
  std::vector<std::size_t> remaining(corpus.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  std::vector<std::vector<std::size_t>> classes;
  while (!remaining.empty()) {
    const auto& head = corpus[remaining.front()].multinet.base();
    std::vector<char> same(remaining.size(), 0);
    auto test_range = [&](std::size_t begin, std::size_t step) {
      for (std::size_t k = begin; k < remaining.size(); k += step) {
        same[k] = k == 0 || static_cast<bool>(is_isomorphic(head, corpus[remaining[k]].multinet.base()));
      }
    };
    if (jobs <= 1) {
      test_range(0, 1);
    } else {
      std::vector<std::future<void>> tasks;
      for (unsigned j = 0; j < jobs; ++j) tasks.push_back(std::async(std::launch::async, test_range, j, jobs));
      for (auto& t : tasks) t.get();
    }
    std::vector<std::size_t> cls;
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < remaining.size(); ++k) (same[k] ? cls : rest).push_back(remaining[k]);
    classes.push_back(std::move(cls));
    remaining = std::move(rest);
  }

  const auto& keys = order6_class_keys();
  std::vector<std::optional<ClassRecord>> slots(keys.size());
  for (auto& cls : classes) {
    std::vector<std::string> names;
    for (auto i : cls) names.push_back(short_name(order6_catalog()[corpus[i].table].name()));
    std::sort(names.begin(), names.end(), detail::catalog_name_less);
    names.erase(std::unique(names.begin(), names.end()), names.end());

    const auto& first = corpus[cls.front()];
    Multinet rep = well_index(first.multinet);
    const std::uint64_t aut = automorphism_group(rep).order;
    const ClassKey key{names, aut};
    const auto it = std::find(keys.begin(), keys.end(), key);
    std::string desc;
    for (const auto& nm : names) desc += nm + " ";
    if (it == keys.end()) {
      throw ClassificationError("classify_order6: no reference class for {" + desc + "} with |Aut| = " + std::to_string(aut));
    }
    const auto pos = static_cast<std::size_t>(it - keys.begin());
    if (slots[pos]) throw ClassificationError("classify_order6: class key collision for {" + desc + "}");
    const std::string id = "M" + std::to_string(pos + 1);
    Multinet named(rep.order(), rep.base(), std::nullopt, id, names);
    slots[pos] = ClassRecord{id, std::move(named), first.subsquare.order(), names, aut, cls};
  }
  std::vector<ClassRecord> out;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!slots[k]) throw ClassificationError("classify_order6: reference class M" + std::to_string(k + 1) + " not found");
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

}  // namespace lightnet
