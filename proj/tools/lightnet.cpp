#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "golden.hpp"
#include "lightnet/lightnet.hpp"
#include "report_json.hpp"

namespace {

using namespace lightnet;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBudget = 4;

struct RunConfig {
  std::string command;
  std::vector<std::string> classes;
  std::string table;
  std::string order = "degrevlex";
  double budget_seconds = 900;
  std::string emit = "tsv";
  std::string output;
  bool verify = false;
  bool quiet = false;
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::mutex err_mutex;

void note(const std::string& s) {
  std::lock_guard<std::mutex> lock(err_mutex);
  std::cerr << s << '\n';
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v, const std::string& sep) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(std::to_string(x));
  return join(s, sep);
}

std::string dim_text(const std::optional<int>& d) { return d ? std::to_string(*d) : "-"; }

/// "all", "M3", "M3,M8" -> class ids in M3..M16.
std::vector<std::string> resolve_classes(const std::vector<std::string>& raw) {
  std::vector<std::string> ids;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "all") {
        for (int k = 3; k <= 16; ++k) ids.push_back("M" + std::to_string(k));
        continue;
      }
      int k = 0;
      if (tok.size() < 2 || tok[0] != 'M' || (k = std::atoi(tok.c_str() + 1)) < 1 || k > 16 ||
          tok != "M" + std::to_string(k)) {
        throw UsageError("unknown class '" + tok + "' (expected M1..M16 or all)");
      }
      if (k <= 2) {
        throw UsageError(tok + " has a superline of length 3; its embeddings are of conic-line or tetrahedron type "
                               "by a cited result and are outside the computed range M3..M16");
      }
      ids.push_back(tok);
    }
  }
  if (ids.empty()) throw UsageError("no class given; use --class M3..M16 or --class all");
  return ids;
}

const ClassRecord& record(const std::vector<ClassRecord>& cls, const std::string& id) {
  for (const auto& r : cls) {
    if (r.id == id) return r;
  }
  throw UsageError("unknown class " + id);
}

struct Outcome {
  std::string id;
  std::optional<ComponentReport> report;
  std::string failure;  // budget message when report is empty
  double seconds = 0;
};

/// Runs analyze on each class, at most `jobs` at a time, results in input order.
std::vector<Outcome> run_analyses(const std::vector<ClassRecord>& cls, const std::vector<std::string>& ids,
                                  const RunConfig& cfg) {
  auto one = [&](const std::string& id) {
    Outcome o{id, std::nullopt, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    auto last = t0;
    Budget budget = Budget::seconds(cfg.budget_seconds);
    SplitProgressFn progress;
    if (!cfg.quiet) {
      progress = [&, id](const SplitProgress& p) {
        const auto now = std::chrono::steady_clock::now();
        if (now - last < std::chrono::seconds(2)) return;
        last = now;
        note("[" + id + "] pending " + std::to_string(p.pending) + ", leaves " + std::to_string(p.leaves) +
             ", basis " + std::to_string(p.basis_size));
      };
    }
    try {
      o.report = analyze(record(cls, id).representative, &budget, progress);
    } catch (const PartialResult& e) {
      o.failure = e.what();
    } catch (const BudgetExceeded& e) {
      o.failure = e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!cfg.quiet) {
      std::ostringstream s;
      s << "[" << id << "] " << (o.report ? "done" : "budget exhausted") << " in " << o.seconds << " s";
      note(s.str());
    }
    return o;
  };

  std::vector<Outcome> out(ids.size());
  const std::size_t width = std::max(1u, cfg.jobs);
  for (std::size_t start = 0; start < ids.size(); start += width) {
    std::vector<std::future<Outcome>> batch;
    for (std::size_t k = start; k < std::min(ids.size(), start + width); ++k) {
      batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, one, ids[k]));
    }
    for (std::size_t k = 0; k < batch.size(); ++k) out[start + k] = batch[k].get();
  }
  return out;
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw UsageError("cannot open output file " + cfg.output);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_classify(const RunConfig& cfg) {
  const auto cls = classify_order6(cfg.jobs);
  std::ostringstream out;
  json arr = json::array();
  if (cfg.emit == "tsv") out << "id\tsuperline_length\tquasigroups\tautomorphism_order\n";
  for (const auto& r : cls) {
    if (cfg.emit == "json") {
      arr.push_back(io::to_json(r));
    } else {
      out << r.id << '\t' << r.superline_length << '\t' << join(r.names, ",") << '\t' << r.automorphism_order << '\n';
    }
  }
  write_output(cfg, cfg.emit == "json" ? dump(arr) : out.str());

  int rc = kExitOk;
  if (cfg.verify) {
    const auto& gold = golden::class_table();
    for (std::size_t k = 0; k < gold.size(); ++k) {
      const auto& g = gold[k];
      const auto& r = cls[k];
      if (r.id != g.id || r.superline_length != g.superline_length || r.names != g.names ||
          r.automorphism_order != g.automorphism_order) {
        note("mismatch " + g.id + ": computed {" + join(r.names, ",") + "} order " +
             std::to_string(r.automorphism_order) + ", expected {" + join(g.names, ",") + "} order " +
             std::to_string(g.automorphism_order));
        rc = kExitMismatch;
      }
    }
  }
  return rc;
}

LatinSquare load_table(const std::string& spec) {
  for (const auto& q : order6_catalog()) {
    if (spec == q.name() || spec == short_name(q.name())) return q;
  }
  std::ifstream f(spec);
  if (!f) throw UsageError("'" + spec + "' is neither a catalog name nor a readable file");
  return read_cayley(f);
}

int cmd_subsquares(const RunConfig& cfg) {
  const LatinSquare q = load_table(cfg.table);
  const auto subs = all_proper_subsquares(q);
  std::ostringstream out;
  json arr = json::array();
  if (cfg.emit == "tsv") out << "order\ts1\ts2\ts3\n";
  for (const auto& s : subs) {
    if (cfg.emit == "json") {
      arr.push_back(json{{"order", s.order()}, {"s1", s.s1}, {"s2", s.s2}, {"s3", s.s3}});
    } else {
      out << s.order() << '\t' << join_numbers(s.s1, ",") << '\t' << join_numbers(s.s2, ",") << '\t'
          << join_numbers(s.s3, ",") << '\n';
    }
  }
  write_output(cfg, cfg.emit == "json" ? dump(arr) : out.str());
  return kExitOk;
}

int cmd_embed(const RunConfig& cfg) {
  const auto ids = resolve_classes(cfg.classes);
  const auto cls = classify_order6(cfg.jobs);
  const auto outcomes = run_analyses(cls, ids, cfg);
  const auto ord = parse_order(cfg.order);

  int rc = kExitOk;
  std::ostringstream out;
  json arr = json::array();
  if (cfg.emit == "tsv") out << "class\tcomponents\tadmissible\tdim\tverdict\n";
  for (const auto& o : outcomes) {
    if (!o.report) {
      note("[" + o.id + "] " + o.failure);
      rc = kExitBudget;
      continue;
    }
    const auto& r = *o.report;
    const bool embeds = embedding_verdict(r) == Verdict::kEmbeds;
    const std::optional<int> dim = r.admissible_index ? r.components[*r.admissible_index].dimension : std::nullopt;
    if (cfg.emit == "json") {
      Budget budget = Budget::seconds(cfg.budget_seconds);
      try {
        json j = io::to_json(r, ord, &budget);
        j["verdict"] = embeds ? "embeds" : "does-not-embed";
        arr.push_back(std::move(j));
      } catch (const BudgetExceeded& e) {
        note("[" + o.id + "] " + cfg.order + " basis: " + e.what());
        rc = kExitBudget;
        continue;
      }
    } else {
      out << r.multinet_id << '\t' << r.components.size() << '\t' << r.admissible_count() << '\t' << dim_text(dim)
          << '\t' << (embeds ? "embeds" : "does-not-embed") << '\n';
    }
    if (cfg.verify) {
      const auto g = golden::prime_row(o.id);
      const golden::PrimeRow mine{o.id, r.components.size(), r.admissible_count(), dim};
      if (g && !(mine == *g)) {
        note("mismatch " + o.id + ": computed (" + std::to_string(mine.components) + ", " +
             std::to_string(mine.admissible) + ", " + dim_text(mine.dimension) + "), expected (" +
             std::to_string(g->components) + ", " + std::to_string(g->admissible) + ", " + dim_text(g->dimension) + ")");
        if (rc == kExitOk) rc = kExitMismatch;
      }
      if (embeds != golden::embeds(o.id)) {
        note("mismatch " + o.id + ": computed " + (embeds ? "embeds" : "does not embed") + ", expected the opposite");
        if (rc == kExitOk) rc = kExitMismatch;
      }
    }
  }
  if (cfg.emit == "json") {
    write_output(cfg, dump(arr.size() == 1 ? arr.front() : arr));
  } else {
    write_output(cfg, out.str());
  }
  return rc;
}

int cmd_merged(const RunConfig& cfg) {
  const auto ids = resolve_classes(cfg.classes);
  const auto cls = classify_order6(cfg.jobs);
  const auto outcomes = run_analyses(cls, ids, cfg);

  int rc = kExitOk;
  std::ostringstream out;
  json arr = json::array();
  if (cfg.emit == "tsv") out << "class\tlong_lines\tpart1\tpart2\tpart3\n";
  for (const auto& o : outcomes) {
    if (!o.report) {
      note("[" + o.id + "] " + o.failure);
      rc = kExitBudget;
      continue;
    }
    const auto& r = *o.report;
    const auto gold = golden::merged_row(o.id);
    if (!r.admissible_index) {
      note(o.id + " has no admissible component, so it has no weak projective embedding and no merged blocks");
      if (cfg.verify && gold) {
        note("mismatch " + o.id + ": merged blocks expected but no admissible component was found");
        if (rc == kExitOk) rc = kExitMismatch;
      }
      continue;
    }
    const MergedSummary s = summarize(r.merged);
    if (cfg.emit == "json") {
      json j = io::to_json(s);
      j["class"] = o.id;
      arr.push_back(std::move(j));
    } else {
      out << o.id << '\t' << s.long_lines << '\t' << join_numbers(s.part_sizes[0], ", ") << '\t'
          << join_numbers(s.part_sizes[1], ", ") << '\t' << join_numbers(s.part_sizes[2], ", ") << '\n';
    }
    if (o.id == "M14" && !cfg.quiet) {
      note("M14: the reference row has \"3, 3  1\" under P3; compared as two size-3 blocks in P3 plus one new long line");
    }
    if (cfg.verify && (!gold || !(s == *gold))) {
      note("mismatch " + o.id + ": merged blocks differ from the reference row");
      if (rc == kExitOk) rc = kExitMismatch;
    }
  }
  write_output(cfg, cfg.emit == "json" ? dump(arr) : out.str());
  return rc;
}

int cmd_example_z3(const RunConfig& cfg) {
  auto [s, xi] = z3_example_preembedding();
  const Multinet m(3, s, std::nullopt, "Z3");
  Budget budget = Budget::seconds(cfg.budget_seconds);
  ComponentReport r;
  try {
    r = analyze(m, xi, &budget);
  } catch (const std::runtime_error& e) {
    note(e.what());
    return kExitBudget;
  }
  const auto ord = parse_order(cfg.order);
  if (cfg.emit == "json") {
    write_output(cfg, dump(io::to_json(r, ord, &budget)));
  } else {
    std::ostringstream out;
    for (std::size_t k = 0; k < r.components.size(); ++k) {
      const auto& c = r.components[k];
      out << "P" << k + 1 << " (" << (c.admissible ? "admissible" : "not admissible") << ", dim "
          << dim_text(c.dimension) << ")\n";
      for (const auto& g : c.prime.groebner_basis(ord, &budget)) out << "  " << to_string(g) << '\n';
    }
    write_output(cfg, out.str());
  }

  if (!cfg.verify) return kExitOk;
  std::vector<Polynomial> reference;
  for (const auto& g : golden::z3_second_prime()) reference.push_back(parse_polynomial(g, xi.arity()));
  const Ideal p1(xi.arity(), {Polynomial::variable(xi.arity(), 12)});
  const Ideal p2(xi.arity(), reference);
  bool ok = r.components.size() == 2;
  bool saw1 = false;
  bool saw2 = false;
  for (const auto& c : r.components) {
    if (same_ideal(c.prime, p1)) saw1 = !c.admissible;
    if (same_ideal(c.prime, p2)) saw2 = c.admissible;
  }
  if (!(ok && saw1 && saw2)) {
    note("mismatch: expected exactly <t13> (not admissible) and the reference second prime (admissible)");
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Light dual multinets of order 6: classification and weak projective embeddings"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--budget-seconds", cfg.budget_seconds, "Time allowance per class")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--order", cfg.order, "Monomial order of printed generators")
      ->check(CLI::IsMember({"lex", "degrevlex"}))
      ->capture_default_str();
  app.add_option("--emit", cfg.emit, "Output format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
  app.add_option("-o,--output", cfg.output, "Write results to a file instead of standard output");
  app.add_flag("--verify", cfg.verify, "Compare against the reference tables; exit 3 on mismatch");
  app.add_flag("-q,--quiet", cfg.quiet, "No progress on standard error");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Isomorphism classes M1..M16 with superline length, quasigroups and |Aut|");
  auto* subsquares = app.add_subcommand("subsquares", "Proper subsquares of a Cayley table");
  subsquares->add_option("table", cfg.table, "Catalog name such as 6.5, or a table file")->required();
  auto* embed = app.add_subcommand("embed", "Minimal primes and admissibility for classes");
  embed->add_option("--class", cfg.classes, "M3..M16, comma separated, or all")->required();
  auto* merged = app.add_subcommand("merged", "Merged blocks of the admissible component");
  merged->add_option("--class", cfg.classes, "M3..M16, comma separated, or all")->required();
  auto* z3 = app.add_subcommand("example-z3", "Minimal primes of the nine-point Z3 example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(cfg);
    if (*subsquares) return cmd_subsquares(cfg);
    if (*embed) return cmd_embed(cfg);
    if (*merged) return cmd_merged(cfg);
    if (*z3) return cmd_example_z3(cfg);
  } catch (const UsageError& e) {
    note(std::string("error: ") + e.what());
    return kExitUsage;
  } catch (const ParseError& e) {
    note(std::string("parse error: ") + e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
