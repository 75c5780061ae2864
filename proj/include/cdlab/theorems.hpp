#pragma once

#include <optional>

#include "cdlab/cd_lattice.hpp"
#include "cdlab/report.hpp"
#include "cdlab/subgroup.hpp"

namespace cdlab {

// Per-group cache shared by the theorem checks, so one verification run
// enumerates subgroups at most once. Accessors compute lazily; the full
// enumeration may hit the budget, in which case `subgroups()` returns
// nullptr and checks that can fall back to normal subgroups do so.
class Analysis {
 public:
  explicit Analysis(const Group& g, const EnumBudget& budget = {})
      : g_(&g), budget_(budget) {}

  const Group& group() const { return *g_; }
  const EnumBudget& budget() const { return budget_; }

  const SubgroupSet* subgroups();            // nullptr if over budget
  const SubgroupSet& subgroups_or_throw();   // rethrows the budget error
  std::size_t budget_count() const { return budget_count_; }

  const SubgroupSet& normals();
  const Subgroup& center();
  const CentralSeries& series();
  const CDLattice& lattice();
  std::int64_t mu();

 private:
  const Group* g_;
  EnumBudget budget_;
  std::optional<SubgroupSet> subs_;
  bool subs_failed_ = false;
  std::string subs_error_;
  std::size_t budget_count_ = 0;
  std::optional<SubgroupSet> normals_;
  std::optional<Subgroup> center_;
  std::optional<CentralSeries> series_;
  std::optional<CDLattice> lattice_;
};

// Minimum of |G:N| over normal abelian N, with the (order, mask)-least
// witness attaining it. The trivial subgroup always qualifies.
struct MinNormalAbelian {
  std::int64_t index = 1;
  Subgroup witness;
};
MinNormalAbelian min_normal_abelian_index(Analysis& a);

// All normal H admitting a normal K with trivial intersection and HK = G.
SubgroupSet direct_factors(Analysis& a);

// True iff every abelian subgroup H has cyclic image HZ(G)/Z(G).
bool small_abelian_subgroups(Analysis& a);

TheoremReport verify_theorem1(Analysis& a);
TheoremReport verify_corollary2(Analysis& a);
TheoremReport verify_corollary3(Analysis& a);
TheoremReport verify_theorem4(Analysis& a);
TheoremReport verify_theorem5(Analysis& a);
TheoremReport verify_theorem5_corollary(Analysis& a);
TheoremReport classify_theorem6(Analysis& a);
TheoremReport verify_partial_converses(Analysis& a);

// Dispatcher used by the harness and CLI. Internal errors (enumeration
// budget, lattice violations) become fail reports rather than escaping.
TheoremReport run_theorem(Analysis& a, TheoremId id);

// Convenience single-shot forms.
TheoremReport verify_theorem(const Group& g, TheoremId id,
                             const EnumBudget& budget = {});

}  // namespace cdlab
