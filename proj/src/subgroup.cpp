#include "cdlab/subgroup.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace cdlab {

namespace {

// Tracks enumeration spend. One unit is roughly one table lookup inside a
// closure; `count` is the number of subgroups found so far, reported when
// the budget trips.
struct WorkMeter {
  std::uint64_t left;
  std::size_t count = 0;

  void spend(std::uint64_t units) {
    if (units > left)
      throw SubgroupBudgetError(
          count, "subgroup enumeration exceeded its work budget after " +
                     std::to_string(count) + " subgroups");
    left -= units;
  }
};

// Extends (mask, elems) to the closure under products. Elements at indices
// >= first_unprocessed are treated as new; products among the existing
// prefix are assumed already present.
void close_in_place(const Group& g, ElementSet& mask, std::vector<int>& elems,
                    std::size_t first_unprocessed, WorkMeter* meter) {
  for (std::size_t k = first_unprocessed; k < elems.size(); ++k) {
    int x = elems[k];
    if (meter) meter->spend(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      int y = elems[i];
      int p = g.mul(x, y);
      if (!mask.test(p)) {
        mask.set(p);
        elems.push_back(p);
      }
      p = g.mul(y, x);
      if (!mask.test(p)) {
        mask.set(p);
        elems.push_back(p);
      }
    }
  }
}

Subgroup make_subgroup(const Group& g, ElementSet mask) {
  Subgroup s;
  s.parent = &g;
  s.order = mask.count();
  s.members = std::move(mask);
  return s;
}

ElementSet closure_mask_seeded(const Group& g, const ElementSet& seed,
                               WorkMeter* meter) {
  ElementSet mask(g.order());
  mask.set(0);
  std::vector<int> elems{0};
  seed.for_each([&](int e) {
    if (!mask.test(e)) {
      mask.set(e);
      elems.push_back(e);
    }
  });
  close_in_place(g, mask, elems, 1, meter);
  return mask;
}

// Join of two subgroups: closure of the union, seeded with the larger side
// (already closed) so only cross products are recomputed.
ElementSet join_masks(const Group& g, const ElementSet& a,
                      const ElementSet& b, WorkMeter* meter) {
  const ElementSet& big = a.count() >= b.count() ? a : b;
  const ElementSet& small = a.count() >= b.count() ? b : a;
  ElementSet mask = big;
  std::vector<int> elems = big.elements();
  std::size_t first_new = elems.size();
  small.for_each([&](int e) {
    if (!mask.test(e)) {
      mask.set(e);
      elems.push_back(e);
    }
  });
  close_in_place(g, mask, elems, first_new, meter);
  return mask;
}

// (p, k) if G is elementary abelian of order p^k with k >= 1.
std::optional<std::pair<int, int>> elementary_abelian_shape(const Group& g) {
  int p = g.p_group_prime();
  if (p == 0 || !g.is_abelian()) return std::nullopt;
  if (g.exponent() != p) return std::nullopt;
  int k = 0, m = g.order();
  while (m > 1) {
    m /= p;
    ++k;
  }
  return std::make_pair(p, k);
}

// Total subgroup count of an elementary abelian p-group of rank k:
// sum over i of the Gaussian binomial [k choose i]_p.
std::uint64_t gaussian_subgroup_count(int p, int k) {
  auto pw = [&](int e) {
    unsigned __int128 r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<unsigned>(p);
    return r;
  };
  unsigned __int128 total = 0;
  for (int i = 0; i <= k; ++i) {
    unsigned __int128 binom = 1;
    for (int j = 1; j <= i; ++j) {
      binom = binom * (pw(k - j + 1) - 1) / (pw(j) - 1);
    }
    total += binom;
  }
  if (total > ~std::uint64_t{0}) return ~std::uint64_t{0};
  return static_cast<std::uint64_t>(total);
}

std::vector<int> conjugacy_class_reps(const Group& g) {
  int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<int> reps;
  for (int e = 0; e < n; ++e) {
    if (seen[e]) continue;
    reps.push_back(e);
    for (int x = 0; x < n; ++x) seen[g.mul(g.mul(x, e), g.inv(x))] = 1;
  }
  return reps;
}

ElementSet conjugacy_class_mask(const Group& g, int e) {
  ElementSet m(g.order());
  for (int x = 0; x < g.order(); ++x) m.set(g.mul(g.mul(x, e), g.inv(x)));
  return m;
}

}  // namespace

bool mask_less(const ElementSet& a, const ElementSet& b) {
  return a.lex_less(b);
}

std::uint64_t projected_elementary_abelian_subgroup_count(int p, int k) {
  return gaussian_subgroup_count(p, k);
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order != b.order) return a.order < b.order;
  return a.members.lex_less(b.members);
}

bool SubgroupSet::contains_mask(const ElementSet& mask) const {
  Subgroup probe;
  probe.parent = parent;
  probe.order = mask.count();
  probe.members = mask;
  return std::binary_search(items.begin(), items.end(), probe, subgroup_less);
}

Subgroup trivial_subgroup(const Group& g) {
  ElementSet m(g.order());
  m.set(0);
  return make_subgroup(g, std::move(m));
}

Subgroup full_subgroup(const Group& g) {
  ElementSet m(g.order());
  for (int i = 0; i < g.order(); ++i) m.set(i);
  return make_subgroup(g, std::move(m));
}

Subgroup subgroup_from_mask(const Group& g, ElementSet mask) {
  assert(mask.test(0));
  return make_subgroup(g, std::move(mask));
}

Subgroup closure(const Group& g, std::span<const int> seed) {
  ElementSet s(g.order());
  for (int e : seed) s.set(e);
  return make_subgroup(g, closure_mask_seeded(g, s, nullptr));
}

Subgroup closure_of_mask(const Group& g, const ElementSet& seed) {
  return make_subgroup(g, closure_mask_seeded(g, seed, nullptr));
}

SubgroupSet all_subgroups(const Group& g, const EnumBudget& budget) {
  WorkMeter meter{budget.max_work};

  if (auto shape = elementary_abelian_shape(g)) {
    std::uint64_t projected =
        gaussian_subgroup_count(shape->first, shape->second);
    std::uint64_t joins = projected * projected / 2;
    if (projected > budget.max_subgroups ||
        joins > budget.max_projected_joins) {
      throw SubgroupBudgetError(
          static_cast<std::size_t>(projected),
          "elementary abelian " + std::to_string(shape->first) + "^" +
              std::to_string(shape->second) + ": projected subgroup count " +
              std::to_string(projected) + " (about " + std::to_string(joins) +
              " joins) exceeds the enumeration budget");
    }
  }

  std::unordered_set<ElementSet, ElementSet::Hash> seen;
  std::vector<ElementSet> masks;
  auto add = [&](ElementSet m) {
    if (seen.insert(m).second) {
      masks.push_back(std::move(m));
      meter.count = masks.size();
      if (masks.size() > budget.max_subgroups)
        throw SubgroupBudgetError(
            masks.size(), "subgroup count passed the configured cap of " +
                              std::to_string(budget.max_subgroups));
    }
  };

  add(trivial_subgroup(g).members);
  add(full_subgroup(g).members);
  for (int e = 1; e < g.order(); ++e) {
    ElementSet s(g.order());
    s.set(e);
    add(closure_mask_seeded(g, s, &meter));
  }

  // pairwise joins to a fixed point; each unordered pair handled once
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (masks[j].subset_of(masks[i]) || masks[i].subset_of(masks[j]))
        continue;
      ElementSet a = masks[i];  // copies: add() may reallocate the vector
      ElementSet b = masks[j];
      add(join_masks(g, a, b, &meter));
    }
  }

  SubgroupSet out;
  out.parent = &g;
  out.items.reserve(masks.size());
  for (auto& m : masks) out.items.push_back(make_subgroup(g, std::move(m)));
  std::sort(out.items.begin(), out.items.end(), subgroup_less);
  return out;
}

std::vector<int> generating_set(const Group& g, const Subgroup& h) {
  ElementSet mask(g.order());
  mask.set(0);
  std::vector<int> elems{0};
  std::vector<int> gens;
  if (h.order == static_cast<int>(elems.size())) return gens;
  std::vector<int> members = h.elements();
  for (int e : members) {
    if (mask.test(e)) continue;
    gens.push_back(e);
    std::size_t first_new = elems.size();
    mask.set(e);
    elems.push_back(e);
    close_in_place(g, mask, elems, first_new, nullptr);
    if (static_cast<int>(elems.size()) == h.order) break;
  }
  return gens;
}

Subgroup centralizer_of_element(const Group& g, int e) {
  ElementSet m(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (g.mul(x, e) == g.mul(e, x)) m.set(x);
  return make_subgroup(g, std::move(m));
}

Subgroup centralizer(const Group& g, const Subgroup& h) {
  ElementSet m = full_subgroup(g).members;
  for (int e : generating_set(g, h)) {
    ElementSet c(g.order());
    for (int x = 0; x < g.order(); ++x)
      if (g.mul(x, e) == g.mul(e, x)) c.set(x);
    m &= c;
  }
  return make_subgroup(g, std::move(m));
}

Subgroup center(const Group& g) {
  return centralizer(g, full_subgroup(g));
}

ElementSet set_product(const Group& g, const ElementSet& a,
                       const ElementSet& b) {
  ElementSet out(g.order());
  a.for_each([&](int x) { b.for_each([&](int y) { out.set(g.mul(x, y)); }); });
  return out;
}

Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, int by) {
  ElementSet m(g.order());
  int byi = g.inv(by);
  h.members.for_each([&](int x) { m.set(g.mul(g.mul(by, x), byi)); });
  return make_subgroup(g, std::move(m));
}

Subgroup normal_closure(const Group& g, const Subgroup& h) {
  // the union of the conjugacy classes of all members is class-closed, so
  // its product closure is already normal
  ElementSet seed(g.order());
  h.members.for_each([&](int e) {
    for (int x = 0; x < g.order(); ++x)
      seed.set(g.mul(g.mul(x, e), g.inv(x)));
  });
  return make_subgroup(g, closure_mask_seeded(g, seed, nullptr));
}

bool is_normal(const Group& g, const Subgroup& h) {
  std::vector<int> gens = generating_set(g, full_subgroup(g));
  std::vector<int> members = h.elements();
  for (int s : gens) {
    int si = g.inv(s);
    for (int x : members)
      if (!h.members.test(g.mul(g.mul(s, x), si))) return false;
  }
  return true;
}

namespace {

// Normal closure of h under conjugation by an ambient subgroup.
ElementSet normal_closure_in(const Group& g, const ElementSet& ambient,
                             const Subgroup& h) {
  std::vector<int> conjugators = ambient.elements();
  ElementSet mask = h.members;
  std::vector<int> elems = h.elements();
  std::size_t processed = 0;
  while (processed < elems.size()) {
    // conjugate everything new by the whole ambient subgroup
    std::size_t upto = elems.size();
    for (std::size_t k = processed; k < upto; ++k) {
      int e = elems[k];
      for (int x : conjugators) {
        int c = g.mul(g.mul(x, e), g.inv(x));
        if (!mask.test(c)) {
          mask.set(c);
          elems.push_back(c);
        }
      }
    }
    // close under products; anything new cycles back through conjugation
    close_in_place(g, mask, elems, processed, nullptr);
    processed = upto;
  }
  return mask;
}

}  // namespace

bool is_subnormal(const Group& g, const Subgroup& h) {
  ElementSet cur = full_subgroup(g).members;
  while (true) {
    ElementSet nxt = normal_closure_in(g, cur, h);
    if (nxt == h.members) return true;
    if (nxt == cur) return false;
    cur = nxt;
  }
}

bool permutes_with_conjugates(const Group& g, const Subgroup& h) {
  std::unordered_set<ElementSet, ElementSet::Hash> conjugates;
  for (int x = 0; x < g.order(); ++x)
    conjugates.insert(conjugate_subgroup(g, h, x).members);
  for (const auto& k : conjugates) {
    if (set_product(g, h.members, k) != set_product(g, k, h.members))
      return false;
  }
  return true;
}

CentralSeries central_series(const Group& g) {
  CentralSeries cs;
  std::vector<int> gens = generating_set(g, full_subgroup(g));

  // ascending: Z_{i+1} = {x : [x, s] in Z_i for all generators s}
  Subgroup z = center(g);
  cs.ascending.push_back(z);
  while (cs.ascending.back().order < g.order()) {
    const ElementSet& prev = cs.ascending.back().members;
    ElementSet nxt(g.order());
    for (int x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (int s : gens) {
        int comm = g.mul(g.mul(g.inv(x), g.inv(s)), g.mul(x, s));
        if (!prev.test(comm)) {
          ok = false;
          break;
        }
      }
      if (ok) nxt.set(x);
    }
    if (nxt == prev) break;
    cs.ascending.push_back(make_subgroup(g, std::move(nxt)));
  }

  // descending: gamma_{i+1} = <[a, b] : a in gamma_i, b in G>
  cs.descending.push_back(full_subgroup(g));
  while (cs.descending.back().order > 1) {
    const Subgroup& cur = cs.descending.back();
    ElementSet seed(g.order());
    cur.members.for_each([&](int a) {
      int ai = g.inv(a);
      for (int b = 0; b < g.order(); ++b)
        seed.set(g.mul(g.mul(ai, g.inv(b)), g.mul(a, b)));
    });
    ElementSet nxt = closure_mask_seeded(g, seed, nullptr);
    if (nxt == cur.members) break;
    cs.descending.push_back(make_subgroup(g, std::move(nxt)));
  }

  if (cs.descending.back().order == 1)
    cs.nilpotency_class = static_cast<int>(cs.descending.size()) - 1;
  return cs;
}

bool is_nilpotent(const Group& g) {
  return central_series(g).is_nilpotent();
}

Subgroup derived_subgroup(const Group& g) {
  ElementSet seed(g.order());
  for (int a = 0; a < g.order(); ++a) {
    int ai = g.inv(a);
    for (int b = a + 1; b < g.order(); ++b)
      seed.set(g.mul(g.mul(ai, g.inv(b)), g.mul(a, b)));
  }
  return make_subgroup(g, closure_mask_seeded(g, seed, nullptr));
}

Subgroup second_center(const Group& g) {
  CentralSeries cs = central_series(g);
  return cs.second_center();
}

Group extract_group(const Group& g, const Subgroup& h) {
  std::vector<int> members = h.elements();
  std::vector<int> where(g.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i)
    where[members[i]] = static_cast<int>(i);
  GroupBuilder b(h.order);
  for (int i = 0; i < h.order; ++i)
    for (int j = 0; j < h.order; ++j)
      b.set(i, j, where[g.mul(members[i], members[j])]);
  std::string label = g.label().empty()
                          ? std::string()
                          : g.label() + "[" + std::to_string(h.order) + "]";
  return std::move(b).build(std::move(label));
}

bool is_nilpotent_subgroup(const Group& g, const Subgroup& h) {
  if (h.order == 1) return true;
  if (is_abelian_subgroup(g, h)) return true;
  return is_nilpotent(extract_group(g, h));
}

bool is_abelian_subgroup(const Group& g, const Subgroup& h) {
  return h.members.subset_of(centralizer(g, h).members);
}

QuotientResult quotient(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw NotNormalError();
  int order = g.order();
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (int e = 0; e < order; ++e) {
    if (coset_of[e] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(e);  // least member, cosets discovered in ascending order
    n.members.for_each([&](int x) { coset_of[g.mul(e, x)] = idx; });
  }
  int q = static_cast<int>(reps.size());
  GroupBuilder b(q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      b.set(i, j, coset_of[g.mul(reps[i], reps[j])]);
  std::string label = g.label().empty()
                          ? std::string()
                          : g.label() + "/" + std::to_string(n.order);
  QuotientResult out{std::move(b).build(std::move(label)),
                     std::move(coset_of)};
  return out;
}

SubgroupSet normal_subgroups(const Group& g, const EnumBudget& budget) {
  WorkMeter meter{budget.max_work};
  std::unordered_set<ElementSet, ElementSet::Hash> seen;
  std::vector<ElementSet> masks;
  auto add = [&](ElementSet m) {
    if (seen.insert(m).second) {
      masks.push_back(std::move(m));
      meter.count = masks.size();
      if (masks.size() > budget.max_subgroups)
        throw SubgroupBudgetError(
            masks.size(),
            "normal subgroup count passed the configured cap of " +
                std::to_string(budget.max_subgroups));
    }
  };

  add(trivial_subgroup(g).members);
  add(full_subgroup(g).members);
  // normal closure of each conjugacy class: a class-closed seed keeps its
  // product closure class-closed, hence normal
  for (int rep : conjugacy_class_reps(g)) {
    ElementSet seed = conjugacy_class_mask(g, rep);
    add(closure_mask_seeded(g, seed, &meter));
  }
  // join closure; unions of class-closed masks stay class-closed
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (masks[j].subset_of(masks[i]) || masks[i].subset_of(masks[j]))
        continue;
      ElementSet a = masks[i];
      ElementSet b = masks[j];
      add(join_masks(g, a, b, &meter));
    }
  }

  SubgroupSet out;
  out.parent = &g;
  out.items.reserve(masks.size());
  for (auto& m : masks) out.items.push_back(make_subgroup(g, std::move(m)));
  std::sort(out.items.begin(), out.items.end(), subgroup_less);
  return out;
}

Subgroup fitting_subgroup(const Group& g, const EnumBudget& budget) {
  SubgroupSet normals = normal_subgroups(g, budget);
  ElementSet join(g.order());
  join.set(0);
  for (const Subgroup& n : normals.items) {
    if (is_nilpotent_subgroup(g, n)) join |= n.members;
  }
  Subgroup fit = make_subgroup(g, closure_mask_seeded(g, join, nullptr));
  // the join of normal nilpotent subgroups is itself normal and nilpotent
  assert(is_normal(g, fit));
  assert(is_nilpotent_subgroup(g, fit));
  return fit;
}

bool is_simple(const Group& g, const EnumBudget& budget) {
  if (g.order() <= 1) return false;
  return normal_subgroups(g, budget).size() == 2;
}

bool is_extraspecial(const Group& g) {
  int p = g.p_group_prime();
  if (p == 0) throw NotPGroupError(g.order());
  Subgroup z = center(g);
  if (z.order != p) return false;
  if (derived_subgroup(g).members != z.members) return false;
  return quotient(g, z).group.exponent() == p;
}

}  // namespace cdlab
