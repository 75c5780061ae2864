#include "cdlab/cd_lattice.hpp"

#include <algorithm>
#include <sstream>

namespace cdlab {

CDMeasure cd_measure(const Group& g, const Subgroup& h) {
  Subgroup c = centralizer(g, h);
  CDMeasure m;
  m.subgroup_index = g.order() / h.order;
  m.centralizer_index = g.order() / c.order;
  m.value = m.subgroup_index * m.centralizer_index;
  return m;
}

std::int64_t mu_from(const Group& g, const SubgroupSet& all) {
  std::int64_t best = -1;
  for (const Subgroup& h : all) {
    std::int64_t v = cd_measure(g, h).value;
    if (best < 0 || v < best) best = v;
  }
  return best;
}

SubgroupSet cd_subgroups_from(const Group& g, const SubgroupSet& all) {
  std::int64_t best = -1;
  std::vector<Subgroup> members;
  for (const Subgroup& h : all) {
    std::int64_t v = cd_measure(g, h).value;
    if (best < 0 || v < best) {
      best = v;
      members.clear();
    }
    if (v == best) members.push_back(h);
  }
  SubgroupSet out;
  out.parent = &g;
  out.items = std::move(members);  // `all` is sorted, so members are too
  return out;
}

std::int64_t mu(const Group& g, const EnumBudget& budget) {
  return mu_from(g, all_subgroups(g, budget));
}

SubgroupSet cd_subgroups(const Group& g, const EnumBudget& budget) {
  return cd_subgroups_from(g, all_subgroups(g, budget));
}

std::pair<std::size_t, std::size_t> lattice_extremes(
    const SubgroupSet& members) {
  if (members.size() == 0)
    throw LatticeViolationError("empty CD member set");
  std::size_t top = 0, bottom = 0;
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i].order > members[top].order) top = i;
    if (members[i].order < members[bottom].order) bottom = i;
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!members[i].members.subset_of(members[top].members))
      throw LatticeViolationError(
          "no unique maximal CD-subgroup: member of order " +
          std::to_string(members[i].order) + " is not contained in the "
          "largest member (order " + std::to_string(members[top].order) + ")");
    if (!members[bottom].members.subset_of(members[i].members))
      throw LatticeViolationError(
          "no unique minimal CD-subgroup: the smallest member (order " +
          std::to_string(members[bottom].order) +
          ") is not contained in member of order " +
          std::to_string(members[i].order));
  }
  return {top, bottom};
}

CDLattice cd_lattice_from(const Group& g, const SubgroupSet& all) {
  CDLattice lat;
  lat.parent = &g;
  lat.members = cd_subgroups_from(g, all);
  lat.mu = cd_measure(g, lat.members[0]).value;
  auto [top, bottom] = lattice_extremes(lat.members);
  lat.top_index = top;
  lat.bottom_index = bottom;
  lat.dual.resize(lat.members.size());
  for (std::size_t i = 0; i < lat.members.size(); ++i) {
    Subgroup c = centralizer(g, lat.members[i]);
    auto it = std::lower_bound(lat.members.items.begin(),
                               lat.members.items.end(), c, subgroup_less);
    if (it == lat.members.items.end() || it->members != c.members)
      throw LatticeViolationError(
          "centralizer of a CD-subgroup (order " +
          std::to_string(lat.members[i].order) + ") is not a CD-subgroup");
    lat.dual[i] =
        static_cast<std::size_t>(it - lat.members.items.begin());
  }
  return lat;
}

CDLattice cd_lattice(const Group& g, const EnumBudget& budget) {
  return cd_lattice_from(g, all_subgroups(g, budget));
}

namespace {

std::size_t find_member(const SubgroupSet& members, const ElementSet& mask) {
  Subgroup probe;
  probe.parent = members.parent;
  probe.order = mask.count();
  probe.members = mask;
  auto it = std::lower_bound(members.items.begin(), members.items.end(),
                             probe, subgroup_less);
  if (it == members.items.end() || it->members != mask)
    return members.size();
  return static_cast<std::size_t>(it - members.items.begin());
}

}  // namespace

TheoremReport verify_theorem1(const Group& g, const CDLattice& lat) {
  TheoremReport rep;
  rep.group_label = g.label();
  rep.group_order = g.order();
  rep.theorem = TheoremId::T1;
  rep.applicable = true;

  std::ostringstream detail;
  bool all_ok = true;
  auto check = [&](const std::string& name, bool ok,
                   const std::vector<std::pair<std::string, std::int64_t>>&
                       context = {}) {
    detail << (ok ? "[pass] " : "[FAIL] ") << name << "\n";
    if (!ok) {
      all_ok = false;
      for (const auto& [n, v] : context) rep.add_witness(n, v);
    }
  };

  const SubgroupSet& mem = lat.members;
  std::size_t n = mem.size();

  // all members attain the minimum measure
  bool measures_ok = true;
  for (std::size_t i = 0; i < n; ++i)
    measures_ok &= cd_measure(g, mem[i]).value == lat.mu;
  check("every member attains the minimal measure", measures_ok);

  bool products_ok = true, join_ok = true, meet_ok = true,
       centralizer_product_ok = true;
  auto flag_pair = [&](bool& flag, const Subgroup& h, const Subgroup& k) {
    if (flag) {  // record only the first counterexample per category
      rep.add_witness("H", h.elements());
      rep.add_witness("K", k.elements());
    }
    flag = false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Subgroup& h = mem[i];
      const Subgroup& k = mem[j];
      ElementSet hk = set_product(g, h.members, k.members);
      ElementSet kh = set_product(g, k.members, h.members);
      if (hk != kh) flag_pair(products_ok, h, k);
      // HK must be the least member containing both H and K
      std::size_t prod_idx = find_member(mem, hk);
      bool this_join_ok = prod_idx < n;
      if (this_join_ok) {
        for (std::size_t m = 0; m < n; ++m) {
          if (h.members.subset_of(mem[m].members) &&
              k.members.subset_of(mem[m].members) &&
              !mem[prod_idx].members.subset_of(mem[m].members)) {
            this_join_ok = false;
            break;
          }
        }
      }
      if (!this_join_ok) flag_pair(join_ok, h, k);
      ElementSet meet = h.members & k.members;
      std::size_t meet_idx = find_member(mem, meet);
      if (meet_idx >= n) {
        flag_pair(meet_ok, h, k);
      } else {
        ElementSet cc = set_product(g, centralizer(g, h).members,
                                    centralizer(g, k).members);
        if (centralizer(g, mem[meet_idx]).members != cc)
          flag_pair(centralizer_product_ok, h, k);
      }
    }
  }
  check("HK = KH for all member pairs", products_ok);
  check("HK is a member and equals the join", join_ok);
  check("H intersect K is a member", meet_ok);
  check("C(H intersect K) = C(H)C(K)", centralizer_product_ok);

  bool dual_member_ok = true, involution_ok = true, subnormal_ok = true,
       permutes_ok = true, reversal_ok = true;
  auto flag_one = [&](bool& flag, const Subgroup& h) {
    if (flag) rep.add_witness("H", h.elements());
    flag = false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    Subgroup c = centralizer(g, mem[i]);
    std::size_t ci = find_member(mem, c.members);
    if (ci >= n) {
      flag_one(dual_member_ok, mem[i]);
      continue;
    }
    if (centralizer(g, c).members != mem[i].members)
      flag_one(involution_ok, mem[i]);
    if (!is_subnormal(g, mem[i])) flag_one(subnormal_ok, mem[i]);
    if (!permutes_with_conjugates(g, mem[i])) flag_one(permutes_ok, mem[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (mem[i].members.subset_of(mem[j].members) &&
          !mem[lat.dual[j]].members.subset_of(mem[lat.dual[i]].members))
        reversal_ok = false;
    }
  }
  check("C(H) is a member", dual_member_ok);
  check("C(C(H)) = H", involution_ok);
  check("members are subnormal", subnormal_ok);
  check("members permute with their conjugates", permutes_ok);
  check("duality reverses inclusion", reversal_ok);

  // top/bottom identities: m(G) = C(M(G)) = Z(M(G)), M(G) = C(m(G))
  const Subgroup& top = lat.top();
  const Subgroup& bot = lat.bottom();
  Subgroup ctop = centralizer(g, top);
  check("bottom = C(top)", ctop.members == bot.members,
        {{"top_order", top.order}, {"bottom_order", bot.order}});
  check("bottom = Z(top)", (ctop.members & top.members) == bot.members);
  check("top = C(bottom)",
        centralizer(g, bot).members == top.members);

  rep.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
  rep.add_witness("mu", lat.mu);
  rep.add_witness("members", static_cast<std::int64_t>(n));
  rep.detail = detail.str();
  return rep;
}

std::string lattice_dot(const CDLattice& lat) {
  const SubgroupSet& mem = lat.members;
  std::size_t n = mem.size();
  const Group& g = *lat.parent;
  std::ostringstream out;
  out << "digraph cd_lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  label=\"" << g.label() << ": mu=" << lat.mu << "\";\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "  n" << i << " [label=\"order=" << mem[i].order
        << ", index=" << g.order() / mem[i].order << "\"";
    if (i == lat.top_index) out << ", peripheries=2, xlabel=\"M(G)\"";
    if (i == lat.bottom_index) {
      if (i == lat.top_index)
        out << " /* top = bottom */";
      else
        out << ", peripheries=2, xlabel=\"m(G)\"";
    }
    out << "];\n";
  }
  // covering relations
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || mem[i].order >= mem[j].order) continue;
      if (!mem[i].members.subset_of(mem[j].members)) continue;
      bool covering = true;
      for (std::size_t k = 0; k < n && covering; ++k) {
        if (k == i || k == j) continue;
        if (mem[i].members.subset_of(mem[k].members) &&
            mem[k].members.subset_of(mem[j].members))
          covering = false;  // member strictly between: not a covering edge
      }
      if (covering) out << "  n" << i << " -> n" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cdlab
