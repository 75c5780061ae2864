#pragma once

#include <cstdint>
#include <string>

#include "cdlab/report.hpp"
#include "cdlab/subgroup.hpp"

namespace cdlab {

// The measure m(G,H) = |G:H| * |G:C_G(H)|. Indices, not orders.
struct CDMeasure {
  std::int64_t subgroup_index = 0;
  std::int64_t centralizer_index = 0;
  std::int64_t value = 0;
};

CDMeasure cd_measure(const Group& g, const Subgroup& h);

// The subgroups attaining the minimum measure form a lattice with a unique
// top M(G) and bottom m(G); H -> C_G(H) is an inclusion-reversing
// involution of the member set.
struct CDLattice {
  const Group* parent = nullptr;
  std::int64_t mu = 0;
  SubgroupSet members;                // sorted by (order, mask)
  std::size_t top_index = 0;          // M(G)
  std::size_t bottom_index = 0;       // m(G)
  std::vector<std::size_t> dual;      // member -> index of its centralizer

  const Subgroup& top() const { return members[top_index]; }
  const Subgroup& bottom() const { return members[bottom_index]; }
};

std::int64_t mu(const Group& g, const EnumBudget& budget = {});
SubgroupSet cd_subgroups(const Group& g, const EnumBudget& budget = {});

// Variants reusing an existing enumeration.
std::int64_t mu_from(const Group& g, const SubgroupSet& all);
SubgroupSet cd_subgroups_from(const Group& g, const SubgroupSet& all);

CDLattice cd_lattice(const Group& g, const EnumBudget& budget = {});
CDLattice cd_lattice_from(const Group& g, const SubgroupSet& all);

// Locates the unique maximal and minimal members; throws LatticeViolation
// when either fails to be unique (cannot fire for a genuine CD member set).
std::pair<std::size_t, std::size_t> lattice_extremes(const SubgroupSet& members);

// Full structural check of the member set: closure under set products and
// intersections, centralizer duality, subnormality, permuting with
// conjugates, and the top/bottom identities. Failures become report
// entries, never exceptions.
TheoremReport verify_theorem1(const Group& g, const CDLattice& lattice);

// DOT rendering: one node per member labeled "order=<k>, index=<i>",
// directed edges along covering relations, top and bottom marked.
std::string lattice_dot(const CDLattice& lattice);

}  // namespace cdlab
