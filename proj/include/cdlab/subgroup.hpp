#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cdlab/element_set.hpp"
#include "cdlab/group.hpp"

namespace cdlab {

// A subgroup of a fixed parent group, stored as a membership mask. The
// parent is not owned; it must outlive the subgroup.
struct Subgroup {
  const Group* parent = nullptr;
  ElementSet members;
  int order = 0;

  bool contains(int e) const { return members.test(e); }
  bool contains(const Subgroup& other) const {
    return other.members.subset_of(members);
  }
  bool is_full() const { return order == parent->order(); }
  bool is_trivial() const { return order == 1; }
  std::vector<int> elements() const { return members.elements(); }
};

// All subgroups of one parent, deduplicated, sorted by (order, mask).
struct SubgroupSet {
  const Group* parent = nullptr;
  std::vector<Subgroup> items;

  std::size_t size() const { return items.size(); }
  const Subgroup& operator[](std::size_t i) const { return items[i]; }
  auto begin() const { return items.begin(); }
  auto end() const { return items.end(); }
  bool contains_mask(const ElementSet& mask) const;
};

// Enumeration budget. `max_subgroups` caps the number of subgroups (found
// or projected); `max_work` caps table lookups spent inside closures so
// runaway cases fail in seconds instead of hanging; `max_projected_joins`
// rejects families whose join stage is predictably hopeless (elementary
// abelian 2-groups of rank >= 6 being the canonical case).
struct EnumBudget {
  std::size_t max_subgroups = 100000;
  std::uint64_t max_work = 1'500'000'000;
  std::uint64_t max_projected_joins = 1'000'000;
};

bool mask_less(const ElementSet& a, const ElementSet& b);
bool subgroup_less(const Subgroup& a, const Subgroup& b);

// Exact subgroup count of an elementary abelian p-group of rank k (sum of
// Gaussian binomials); drives the up-front budget projection.
std::uint64_t projected_elementary_abelian_subgroup_count(int p, int k);

Subgroup trivial_subgroup(const Group& g);
Subgroup full_subgroup(const Group& g);
Subgroup subgroup_from_mask(const Group& g, ElementSet mask);

// Least subgroup containing the seed elements.
Subgroup closure(const Group& g, std::span<const int> seed);
Subgroup closure_of_mask(const Group& g, const ElementSet& seed);

// Exactly the set of all subgroups: closures of single elements, then
// pairwise joins to a fixed point.
SubgroupSet all_subgroups(const Group& g, const EnumBudget& budget = {});

// First members (in index order) whose closure is H.
std::vector<int> generating_set(const Group& g, const Subgroup& h);

// Computed by intersecting the element centralizers of a generating set.
Subgroup centralizer(const Group& g, const Subgroup& h);
Subgroup centralizer_of_element(const Group& g, int e);
Subgroup center(const Group& g);

// Element-set product {ab : a in A, b in B}; not a subgroup in general.
ElementSet set_product(const Group& g, const ElementSet& a,
                       const ElementSet& b);

Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, int by);
Subgroup normal_closure(const Group& g, const Subgroup& h);
bool is_normal(const Group& g, const Subgroup& h);

// Descending series N0 = G, N_{i+1} = normal closure of H in N_i;
// subnormal iff it terminates at H.
bool is_subnormal(const Group& g, const Subgroup& h);

// True iff HK = KH for every conjugate K of H.
bool permutes_with_conjugates(const Group& g, const Subgroup& h);

// Upper and lower central series, both run to stabilization.
struct CentralSeries {
  std::vector<Subgroup> ascending;   // Z1 = Z(G) <= Z2 <= ...
  std::vector<Subgroup> descending;  // G = g1 >= g2 = G' >= ...
  std::optional<int> nilpotency_class;

  bool is_nilpotent() const { return nilpotency_class.has_value(); }
  // gamma_2 = [G, G]; for the trivial and for perfect groups the chain has a
  // single entry, which is the derived subgroup itself
  const Subgroup& derived_subgroup() const {
    return descending.size() > 1 ? descending[1] : descending[0];
  }
  const Subgroup& second_center() const {
    return ascending.size() > 1 ? ascending[1] : ascending[0];
  }
};

CentralSeries central_series(const Group& g);
bool is_nilpotent(const Group& g);
Subgroup derived_subgroup(const Group& g);
Subgroup second_center(const Group& g);

// The subgroup, relabeled as a group in its own right (identity stays 0;
// the remaining elements keep their parent-index order).
Group extract_group(const Group& g, const Subgroup& h);

bool is_nilpotent_subgroup(const Group& g, const Subgroup& h);
bool is_abelian_subgroup(const Group& g, const Subgroup& h);

// Quotient by a normal subgroup: Cayley table on left cosets (indexed by
// least coset member, so the identity coset is 0) and the element -> coset
// surjection.
struct QuotientResult {
  Group group;
  std::vector<int> coset_of;
};
QuotientResult quotient(const Group& g, const Subgroup& n);

// All normal subgroups, computed as the join closure of the normal
// closures of single conjugacy classes. Complete, and far cheaper than
// filtering a full subgroup enumeration.
SubgroupSet normal_subgroups(const Group& g, const EnumBudget& budget = {});

// Join of all normal nilpotent subgroups.
Subgroup fitting_subgroup(const Group& g, const EnumBudget& budget = {});

bool is_simple(const Group& g, const EnumBudget& budget = {});

// p-groups only: |Z(G)| = p, Z(G) = G', and G/Z(G) of exponent p.
bool is_extraspecial(const Group& g);

}  // namespace cdlab
