#include "cdlab/harness.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cdlab/cd_lattice.hpp"
#include "cdlab/families.hpp"
#include "cdlab/group_io.hpp"
#include "cdlab/theorems.hpp"

namespace cdlab {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Catalog default_catalog(int max_order, const std::string& data_dir) {
  Catalog cat;
  cat.source = "builtin";
  auto add = [&](std::string spec) { cat.entries.push_back({std::move(spec), {}}); };

  for (int n = 1; n <= max_order; ++n) add("cyclic:" + std::to_string(n));
  for (int n = 2; 2 * n <= max_order; ++n)
    add("dihedral:" + std::to_string(n));
  for (int n = 2; 4 * n <= max_order; ++n)
    add("dicyclic:" + std::to_string(n));
  for (int p = 2; p * p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (int k = 2;; ++k) {
      long long order = 1;
      for (int i = 0; i < k; ++i) order *= p;
      if (order > max_order) break;
      // leave out ranks whose enumeration is rejected by projected budget
      std::uint64_t projected = projected_elementary_abelian_subgroup_count(p, k);
      if (projected * projected / 2 > EnumBudget{}.max_projected_joins) break;
      add("elementary_abelian:" + std::to_string(p) + ":" + std::to_string(k));
    }
  }
  for (int n = 3; n <= 5; ++n) {
    long long order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    if (order <= max_order) add("symmetric:" + std::to_string(n));
  }
  for (int n = 4; n <= 5; ++n) {
    long long order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    if (order / 2 <= max_order) add("alternating:" + std::to_string(n));
  }
  for (int p : {3, 5, 7}) {
    if (p * p * p <= max_order) {
      add("heisenberg:" + std::to_string(p));
      add("extraspecial_exp_p2:" + std::to_string(p));
    }
  }
  struct ProductSpec {
    const char* spec;
    int order;
  };
  for (const ProductSpec& ps : {ProductSpec{"product(cyclic:2,cyclic:3)", 6},
                                {"product(symmetric:3,cyclic:2)", 12},
                                {"product(dihedral:4,cyclic:2)", 16},
                                {"product(dihedral:4,dihedral:4)", 64},
                                {"product(heisenberg:3,cyclic:3)", 81},
                                {"product(alternating:5,cyclic:2)", 120}}) {
    if (ps.order <= max_order) add(ps.spec);
  }
  if (max_order >= 120) add("file:" + data_dir + "/sl2_5.grp");
  return cat;
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open catalog '" + path.string() + "'");
  Catalog cat;
  cat.source = path.string();
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::istringstream ss(line);
    CatalogEntry entry;
    ss >> entry.spec;
    int cap = 0;
    if (ss >> cap) entry.max_order = cap;
    if (!entry.spec.starts_with("file:")) check_catalog_spec(entry.spec);
    if (!seen.insert(entry.spec).second)
      throw ParseError(lineno, "duplicate catalog spec '" + entry.spec + "'");
    cat.entries.push_back(std::move(entry));
  }
  return cat;
}

Group build_entry(const CatalogEntry& entry, const GroupLimits& limits) {
  GroupLimits use = limits;
  if (entry.max_order) use.max_order = *entry.max_order;
  if (entry.spec.starts_with("file:"))
    return load_group(entry.spec.substr(5), use);
  return named(entry.spec, use);
}

bool HarnessRun::all_passed() const {
  for (const TheoremReport& r : reports)
    if (r.verdict == Verdict::Fail) return false;
  return true;
}

HarnessRun run_harness(const Catalog& catalog, const HarnessOptions& options) {
  auto start = std::chrono::steady_clock::now();
  HarnessRun run;
  run.catalog = catalog;
  run.theorems = options.theorems;

  std::vector<std::vector<TheoremReport>> per_entry(catalog.size());
  std::atomic<std::size_t> next{0};

  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= catalog.size()) return;
      const CatalogEntry& entry = catalog.entries[i];
      std::vector<TheoremReport>& out = per_entry[i];
      try {
        Group g = build_entry(entry, options.limits);
        Analysis a(g, options.budget);
        for (TheoremId id : options.theorems)
          out.push_back(run_theorem(a, id));
      } catch (const Error& e) {
        out.clear();
        for (TheoremId id : options.theorems) {
          TheoremReport rep;
          rep.group_label = entry.spec;
          rep.group_order = 0;
          rep.theorem = id;
          rep.applicable = true;
          rep.verdict = Verdict::Fail;
          rep.add_witness("build_error", 1);
          rep.detail = std::string("group construction failed: ") + e.what();
          out.push_back(std::move(rep));
        }
      }
    }
  };

  int jobs = std::max(1, std::min(options.jobs, 64));
  if (jobs == 1 || catalog.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < per_entry.size(); ++i)
    for (TheoremReport& rep : per_entry[i])
      run.reports.push_back(std::move(rep));

  for (TheoremId id : run.theorems) run.summary[id];  // ensure zero rows
  for (const TheoremReport& rep : run.reports) {
    TheoremCounts& c = run.summary[rep.theorem];
    switch (rep.verdict) {
      case Verdict::Pass: ++c.pass; break;
      case Verdict::Fail: ++c.fail; break;
      case Verdict::NotApplicable: ++c.not_applicable; break;
    }
    if (rep.restricted) ++c.restricted;
  }
  run.wall_time = std::chrono::steady_clock::now() - start;
  return run;
}

namespace {

nlohmann::ordered_json report_to_json(const TheoremReport& rep) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["group"] = rep.group_label;
  j["order"] = rep.group_order;
  j["theorem"] = to_string(rep.theorem);
  j["applicable"] = rep.applicable;
  j["verdict"] = to_string(rep.verdict);
  j["restricted"] = rep.restricted;
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const Witness& w : rep.witnesses) {
    nlohmann::ordered_json wj;
    wj["name"] = w.name;
    if (std::holds_alternative<std::int64_t>(w.value))
      wj["value"] = std::get<std::int64_t>(w.value);
    else
      wj["value"] = std::get<std::vector<int>>(w.value);
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  j["detail"] = rep.detail;
  return j;
}

}  // namespace

std::string emit_report_records(const HarnessRun& run) {
  std::ostringstream out;
  for (const TheoremReport& rep : run.reports)
    out << report_to_json(rep).dump() << "\n";
  return out.str();
}

std::string emit_report_text(const HarnessRun& run) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "theorem" << std::right << std::setw(7)
      << "pass" << std::setw(7) << "fail" << std::setw(7) << "n/a"
      << std::setw(12) << "restricted" << "\n";
  for (TheoremId id : run.theorems) {
    const TheoremCounts& c = run.summary.at(id);
    out << std::left << std::setw(8) << to_string(id) << std::right
        << std::setw(7) << c.pass << std::setw(7) << c.fail << std::setw(7)
        << c.not_applicable << std::setw(12) << c.restricted << "\n";
  }
  out << "groups: " << run.catalog.size()
      << ", reports: " << run.reports.size() << "\n";
  bool any_fail = false;
  for (const TheoremReport& rep : run.reports) {
    if (rep.verdict != Verdict::Fail) continue;
    if (!any_fail) out << "failures:\n";
    any_fail = true;
    out << "  " << rep.group_label << " [" << to_string(rep.theorem)
        << "]: " << rep.detail << "\n";
  }
  out << "result: " << (any_fail ? "FAIL" : "PASS") << "\n";
  return out.str();
}

std::string emit_lattice_dot(const Group& g, const EnumBudget& budget) {
  return lattice_dot(cd_lattice(g, budget));
}

int max_order_from_env(int fallback) {
  const char* env = std::getenv("CDLAB_MAX_ORDER");
  if (!env || !*env) return std::min(fallback, kHardOrderCap);
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v < 1)
    throw BadParameterError("CDLAB_MAX_ORDER must be a positive integer");
  return static_cast<int>(std::min<long>(v, kHardOrderCap));
}

}  // namespace cdlab
