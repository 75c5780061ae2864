#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cdlab/cd_lattice.hpp"
#include "cdlab/families.hpp"
#include "cdlab/group_io.hpp"
#include "cdlab/harness.hpp"
#include "cdlab/theorems.hpp"

namespace {

cdlab::Group resolve_target(const std::string& target,
                            const cdlab::GroupLimits& limits) {
  if (target.starts_with("file:"))
    return cdlab::load_group(target.substr(5), limits);
  if (std::filesystem::exists(target)) return cdlab::load_group(target, limits);
  return cdlab::named(target, limits);
}

void print_analysis(const cdlab::Group& g, const cdlab::EnumBudget& budget) {
  const cdlab::CDLattice lat = cdlab::cd_lattice(g, budget);
  std::cout << "group " << (g.label().empty() ? "(unlabeled)" : g.label())
            << ": order " << g.order() << "\n";
  std::cout << "mu = " << lat.mu << "\n";
  std::cout << "CD-subgroups (" << lat.members.size() << "):\n";
  for (std::size_t i = 0; i < lat.members.size(); ++i) {
    const cdlab::Subgroup& h = lat.members[i];
    std::cout << "  order " << h.order << ", index " << g.order() / h.order
              << ": {";
    bool first = true;
    for (int e : h.elements()) {
      if (!first) std::cout << ", ";
      std::cout << e;
      first = false;
    }
    std::cout << "}";
    if (i == lat.top_index) std::cout << "  <- M(G)";
    if (i == lat.bottom_index) std::cout << "  <- m(G)";
    std::cout << "\n";
  }
}

std::vector<cdlab::TheoremId> parse_theorems(const std::string& csv) {
  std::vector<cdlab::TheoremId> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string tok = csv.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!tok.empty()) {
      auto id = cdlab::theorem_from_string(tok);
      if (!id)
        throw cdlab::BadParameterError("unknown theorem id '" + tok + "'");
      out.push_back(*id);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw cdlab::BadParameterError("no theorem ids given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chermak-Delgado measure and lattice laboratory"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "Compute mu, the CD-subgroups and the lattice of a group");
  std::string analyze_target;
  analyze->add_option("target", analyze_target,
                      "group file or catalog spec (e.g. dihedral:4)")
      ->required();

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Run the theorem harness over a catalog of groups");
  std::string theorems_csv = "t1,c2,c3,t4,t5,t5cor,t6,pconv";
  int verify_max_order = -1;
  int jobs = 1;
  std::string format = "text";
  std::string catalog_path;
  verify->add_option("--theorems", theorems_csv,
                     "comma-separated subset of t1,c2,c3,t4,t5,t5cor,t6,pconv");
  verify->add_option("--max-order", verify_max_order,
                     "catalog order cap (default 128, hard cap 512; "
                     "CDLAB_MAX_ORDER overrides the default)");
  verify->add_option("--jobs", jobs, "worker threads (default 1)");
  verify->add_option("--format", format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));
  verify->add_option("--catalog", catalog_path,
                     "catalog file (default: built-in catalog)");

  // lattice
  auto* lattice = app.add_subcommand(
      "lattice", "Emit the CD lattice of a group as a DOT graph");
  std::string lattice_target;
  std::string dot_out = "-";
  lattice->add_option("target", lattice_target, "group file or catalog spec")
      ->required();
  lattice->add_option("--dot", dot_out, "output path ('-' for stdout)");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog utilities");
  auto* catalog_list = catalog_cmd->add_subcommand(
      "list", "List the built-in catalog entries");
  int catalog_max_order = -1;
  catalog_list->add_option("--max-order", catalog_max_order,
                           "order cap (default 128)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    cdlab::GroupLimits limits{cdlab::kHardOrderCap};

    if (*analyze) {
      print_analysis(resolve_target(analyze_target, limits), {});
      return 0;
    }

    if (*lattice) {
      cdlab::Group g = resolve_target(lattice_target, limits);
      std::string dot = cdlab::emit_lattice_dot(g);
      if (dot_out == "-") {
        std::cout << dot;
      } else {
        std::ofstream out(dot_out);
        if (!out) {
          std::cerr << "cannot write '" << dot_out << "'\n";
          return 2;
        }
        out << dot;
      }
      return 0;
    }

    if (*catalog_list) {
      int cap = catalog_max_order > 0
                    ? std::min(catalog_max_order, cdlab::kHardOrderCap)
                    : cdlab::max_order_from_env(cdlab::kDefaultVerifyMaxOrder);
      cdlab::Catalog cat = cdlab::default_catalog(cap);
      for (const cdlab::CatalogEntry& e : cat.entries) {
        std::cout << e.spec;
        try {
          cdlab::Group g = cdlab::build_entry(e, limits);
          std::cout << "  # order " << g.order();
        } catch (const cdlab::Error& err) {
          std::cout << "  # unavailable: " << err.what();
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (*verify) {
      cdlab::HarnessOptions options;
      options.theorems = parse_theorems(theorems_csv);
      options.jobs = jobs;
      int cap = verify_max_order > 0
                    ? std::min(verify_max_order, cdlab::kHardOrderCap)
                    : cdlab::max_order_from_env(cdlab::kDefaultVerifyMaxOrder);
      options.limits.max_order = cdlab::kHardOrderCap;
      cdlab::Catalog cat = catalog_path.empty()
                               ? cdlab::default_catalog(cap)
                               : cdlab::load_catalog(catalog_path);
      cdlab::HarnessRun run = cdlab::run_harness(cat, options);
      if (format == "records")
        std::cout << cdlab::emit_report_records(run);
      else
        std::cout << cdlab::emit_report_text(run);
      std::cerr << "wall time: " << run.wall_time.count() << " s\n";
      return run.all_passed() ? 0 : 1;
    }
  } catch (const cdlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
