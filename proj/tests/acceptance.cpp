// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Run from the repository root (the SL(2,5) corpus file is data-relative).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "cdlab/cd_lattice.hpp"
#include "cdlab/families.hpp"
#include "cdlab/group_io.hpp"
#include "cdlab/harness.hpp"
#include "cdlab/theorems.hpp"
#include "oracle.hpp"

using namespace cdlab;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& message) {
    if (!cond) {
      ok = false;
      why << (why.str().empty() ? "" : "; ") << message;
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<void(Check&)>& body) {
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("[%s] %2d. %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", number,
              title.c_str(), secs, c.ok ? "" : " -- ",
              c.ok ? "" : c.why.str().c_str());
  if (!c.ok) ++failures;
}

const TheoremReport& report_for(const HarnessRun& run,
                                const std::string& label, TheoremId id) {
  for (const TheoremReport& rep : run.reports)
    if (rep.group_label == label && rep.theorem == id) return rep;
  throw Error("no report for " + label + " / " + to_string(id));
}

std::int64_t int_witness(const TheoremReport& rep, const std::string& name) {
  for (const Witness& w : rep.witnesses)
    if (w.name == name) return std::get<std::int64_t>(w.value);
  throw Error("missing witness " + name);
}

}  // namespace

int main() {
  std::printf("acceptance suite: default catalog max order %d\n",
              kDefaultVerifyMaxOrder);

  // 1. enumeration oracle equivalence at order <= 16
  criterion(1, "all_subgroups matches the subset-mask oracle (order <= 16)",
            [](Check& c) {
              auto start = std::chrono::steady_clock::now();
              Catalog cat = default_catalog(16);
              int checked = 0;
              for (const CatalogEntry& e : cat.entries) {
                Group g = build_entry(e, GroupLimits{16});
                std::vector<ElementSet> expect = oracle::all_subgroup_masks(g);
                SubgroupSet got = all_subgroups(g);
                c.expect(got.size() == expect.size(),
                         e.spec + ": count mismatch");
                for (std::size_t i = 0;
                     i < std::min(got.size(), expect.size()); ++i)
                  if (!(got[i].members == expect[i])) {
                    c.expect(false, e.spec + ": set mismatch");
                    break;
                  }
                ++checked;
              }
              c.expect(checked >= 30, "catalog at order 16 is too small");
              double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
              c.expect(secs < 10.0, "oracle sweep exceeded 10 s");
            });

  // 2. derived exact values, frozen ahead of the build
  criterion(2, "frozen exact values (mu and subgroup counts)", [](Check& c) {
    Group s3 = symmetric(3);
    c.expect(all_subgroups(s3).size() == 6, "|Sub(S3)| != 6");
    c.expect(mu(s3) == 4, "mu(S3) != 4");
    SubgroupSet cd = cd_subgroups(s3);
    c.expect(cd.size() == 1 && cd[0].order == 3, "CD(S3) != {C3}");

    Group q8 = dicyclic(2);
    c.expect(mu(q8) == 4, "mu(Q8) != 4");
    c.expect(cd_subgroups(q8).size() == 5, "|CD(Q8)| != 5");

    Group d8 = dihedral(4);
    c.expect(all_subgroups(d8).size() == 10, "|Sub(D8)| != 10");
    c.expect(mu(d8) == 4, "mu(D8) != 4");
    c.expect(cd_subgroups(d8).size() == 5, "|CD(D8)| != 5");

    c.expect(mu(heisenberg(3)) == 9, "mu(heisenberg(3)) != 9");
  });

  // one full harness pass over the default catalog, reused below
  Catalog cat = default_catalog(kDefaultVerifyMaxOrder);
  HarnessOptions opt;
  opt.jobs = 1;
  HarnessRun run = run_harness(cat, opt);

  // 3. theorem 1 verification across the catalog
  criterion(3, "t1 passes on every group in default_catalog(128)",
            [&](Check& c) {
              const TheoremCounts& t1 = run.summary.at(TheoremId::T1);
              c.expect(t1.fail == 0, "t1 failures");
              c.expect(t1.not_applicable == 0, "t1 must apply everywhere");
              c.expect(t1.pass == static_cast<int>(cat.size()),
                       "t1 pass count != catalog size");
              c.expect(run.wall_time.count() < 300.0,
                       "catalog run exceeded 5 minutes");
            });

  // 4. corollary 2 across the catalog
  criterion(4, "c2: lattice bottom normal abelian of index <= mu everywhere",
            [&](Check& c) {
              const TheoremCounts& c2 = run.summary.at(TheoremId::C2);
              c.expect(c2.fail == 0, "c2 failures");
              c.expect(c2.pass == static_cast<int>(cat.size()),
                       "c2 pass count != catalog size");
            });

  // 5. corollary 3 on A5 and SL(2,5)
  criterion(5, "c3: CD set {G, Z(G)} with mu = 60 for A5 and SL(2,5)",
            [&](Check& c) {
              for (const char* label : {"alternating:5", "sl2_5"}) {
                const TheoremReport& rep =
                    report_for(run, label, TheoremId::C3);
                c.expect(rep.applicable, std::string(label) + " ruled n/a");
                c.expect(rep.verdict == Verdict::Pass,
                         std::string(label) + " failed");
                c.expect(int_witness(rep, "mu") == 60,
                         std::string(label) + " mu != 60");
                c.expect(int_witness(rep, "cd_members") == 2,
                         std::string(label) + " CD set is not {G, Z}");
              }
            });

  // 6. theorem 4 exhaustively where Fitting is trivial, plus A5 x A5
  criterion(6, "t4 exact on trivial-Fitting catalog groups; A5xA5 restricted",
            [&](Check& c) {
              const TheoremCounts& t4 = run.summary.at(TheoremId::T4);
              c.expect(t4.fail == 0, "t4 failures in the catalog");
              for (const char* label : {"alternating:5", "symmetric:5"}) {
                const TheoremReport& rep =
                    report_for(run, label, TheoremId::T4);
                c.expect(rep.applicable && rep.verdict == Verdict::Pass,
                         std::string(label) + " not verified");
                c.expect(!rep.restricted,
                         std::string(label) + " unexpectedly restricted");
              }

              Group a5 = alternating(5);
              Group big = direct_product(a5, a5, GroupLimits{3600});
              Analysis a(big);
              TheoremReport rep = run_theorem(a, TheoremId::T4);
              c.expect(rep.applicable, "A5xA5 ruled n/a");
              c.expect(rep.restricted, "A5xA5 should run restricted");
              c.expect(rep.verdict == Verdict::Pass, "A5xA5 failed");
              c.expect(int_witness(rep, "cd_count") == 4 &&
                           int_witness(rep, "factor_count") == 4,
                       "A5xA5: factors not recovered");
              std::multiset<int> orders;
              for (const Subgroup& f : direct_factors(a)) orders.insert(f.order);
              c.expect(orders == std::multiset<int>{1, 60, 60, 3600},
                       "A5xA5 direct factors are not {1, A5, A5, G}");
            });

  // 7. theorem 5, strict, zero exceptions
  criterion(7, "t5: beta < m(G,H) for all nilpotent H != Z(G), zero exceptions",
            [&](Check& c) {
              const TheoremCounts& t5 = run.summary.at(TheoremId::T5);
              c.expect(t5.fail == 0, "t5 failures");
              for (const TheoremReport& rep : run.reports) {
                if (rep.theorem != TheoremId::T5) continue;
                if (rep.verdict == Verdict::NotApplicable)
                  c.expect(rep.detail == "G is abelian",
                           rep.group_label + ": unexpected n/a reason");
              }
            });

  // 8. theorem 5 corollary, non-integral bounds recorded not failed
  criterion(8, "t5cor: beta <= n^2/p everywhere; non-integral cases recorded",
            [&](Check& c) {
              const TheoremCounts& t5c = run.summary.at(TheoremId::T5Cor);
              c.expect(t5c.fail == 0, "t5cor failures");
              int nonintegral = 0;
              for (const TheoremReport& rep : run.reports)
                if (rep.theorem == TheoremId::T5Cor &&
                    rep.detail.find("non-integral") != std::string::npos)
                  ++nonintegral;
              std::printf("        (non-integral n^2/p bounds recorded: %d)\n",
                          nonintegral);
            });

  // 9. theorem 6 classification
  criterion(9, "t6: every applicable p-group satisfies (a), (b) or (c)",
            [&](Check& c) {
              const TheoremCounts& t6 = run.summary.at(TheoremId::T6);
              c.expect(t6.fail == 0, "t6 failures");
              const TheoremReport& d8 =
                  report_for(run, "dihedral:4", TheoremId::T6);
              c.expect(d8.applicable && d8.verdict == Verdict::Pass,
                       "dihedral:4 not verified");
              c.expect(int_witness(d8, "case_a") == 1,
                       "dihedral:4 must report case (a)");
              const TheoremReport& h27 =
                  report_for(run, "heisenberg:3", TheoremId::T6);
              c.expect(h27.applicable && h27.verdict == Verdict::Pass,
                       "heisenberg:3 not verified");
              c.expect(int_witness(h27, "case_a") == 1 &&
                           int_witness(h27, "case_c") == 1,
                       "heisenberg:3 must report cases (a) and (c)");
            });

  // 10. partial converses
  criterion(10, "pconv: mu = p^2/p^3/p^4 characterizations, zero exceptions",
            [&](Check& c) {
              const TheoremCounts& pc = run.summary.at(TheoremId::PConv);
              c.expect(pc.fail == 0, "pconv failures");
              c.expect(pc.pass > 0, "pconv applied nowhere");
            });

  // 11. determinism across parallelism levels
  criterion(11, "verify --jobs 1 and --jobs 8 emit byte-identical records",
            [&](Check& c) {
              HarnessOptions opt8;
              opt8.jobs = 8;
              HarnessRun run8 = run_harness(cat, opt8);
              c.expect(emit_report_records(run) == emit_report_records(run8),
                       "record streams differ");
              c.expect(emit_report_text(run) == emit_report_text(run8),
                       "text reports differ");
            });

  std::printf("%d/11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
