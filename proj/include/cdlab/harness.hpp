#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "cdlab/report.hpp"
#include "cdlab/subgroup.hpp"

namespace cdlab {

// One catalog row: a spec string (family grammar, or `file:<path>`) plus an
// optional per-entry order cap overriding the run default.
struct CatalogEntry {
  std::string spec;
  std::optional<int> max_order;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::string source;  // "builtin" or a file path

  std::size_t size() const { return entries.size(); }
};

// Built-in catalog: every family instance up to `max_order`, the curated
// product specs, and the checked-in SL(2,5) corpus file under `data_dir`.
// Elementary abelian 2-groups of rank >= 6 are left out; the enumeration
// stage rejects them by projected budget.
Catalog default_catalog(int max_order, const std::string& data_dir = "data");

// One spec per line, `#` comments; an optional trailing integer sets a
// per-entry order cap.
Catalog load_catalog(const std::filesystem::path& path);

// Builds the group an entry denotes.
Group build_entry(const CatalogEntry& entry, const GroupLimits& limits);

struct HarnessOptions {
  std::vector<TheoremId> theorems{kAllTheorems.begin(), kAllTheorems.end()};
  int jobs = 1;
  GroupLimits limits;
  EnumBudget budget;
};

struct TheoremCounts {
  int pass = 0;
  int fail = 0;
  int not_applicable = 0;
  int restricted = 0;  // restricted reports also count as pass/fail above
};

struct HarnessRun {
  Catalog catalog;
  std::vector<TheoremId> theorems;
  std::vector<TheoremReport> reports;  // catalog order x theorem order
  std::map<TheoremId, TheoremCounts> summary;
  std::chrono::duration<double> wall_time{0};

  bool all_passed() const;
};

// Runs every selected check on every catalog entry. Reports come back in
// catalog order x theorem order regardless of `jobs`; entry build failures
// become fail reports carrying the build error.
HarnessRun run_harness(const Catalog& catalog, const HarnessOptions& options);

// Newline-delimited records, one object per report, `schema: 1`.
std::string emit_report_records(const HarnessRun& run);

// Human-readable table plus per-theorem summary counts.
std::string emit_report_text(const HarnessRun& run);

std::string emit_lattice_dot(const Group& g, const EnumBudget& budget = {});

// Reads CDLAB_MAX_ORDER, falling back to `fallback`; the hard cap of 512
// always applies.
int max_order_from_env(int fallback);

inline constexpr int kHardOrderCap = 512;
inline constexpr int kDefaultVerifyMaxOrder = 128;

}  // namespace cdlab
