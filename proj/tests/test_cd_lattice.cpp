#include <doctest.h>

#include <algorithm>
#include <set>

#include "cdlab/cd_lattice.hpp"
#include "cdlab/families.hpp"
#include "oracle.hpp"

using namespace cdlab;

TEST_SUITE("cd-lattice") {

TEST_CASE("measure identities") {
  Group s3 = symmetric(3);
  CHECK(cd_measure(s3, full_subgroup(s3)).value ==
        s3.order() / center(s3).order);
  CHECK(cd_measure(s3, trivial_subgroup(s3)).value == 6);

  SubgroupSet subs = all_subgroups(s3);
  const Subgroup* c3 = nullptr;
  for (const Subgroup& h : subs)
    if (h.order == 3) c3 = &h;
  REQUIRE(c3);
  CDMeasure m = cd_measure(s3, *c3);
  CHECK(m.subgroup_index == 2);
  CHECK(m.centralizer_index == 2);
  CHECK(m.value == 4);
}

TEST_CASE("measure invariants across whole subgroup sets") {
  for (const char* spec :
       {"symmetric:4", "dihedral:8", "heisenberg:3", "dicyclic:4"}) {
    CAPTURE(spec);
    Group g = named(spec);
    for (const Subgroup& h : all_subgroups(g)) {
      CDMeasure m = cd_measure(g, h);
      CHECK(m.value == m.subgroup_index * m.centralizer_index);
      Subgroup c = centralizer(g, h);
      CHECK(m.value * h.order * c.order ==
            static_cast<std::int64_t>(g.order()) * g.order());
      CHECK(g.order() % m.subgroup_index == 0);
      CHECK(g.order() % m.centralizer_index == 0);
      CHECK(m.value > 0);
    }
  }
}

TEST_CASE("mu matches the oracle on every group of order <= 16") {
  for (const char* spec :
       {"symmetric:3", "dihedral:4", "dicyclic:2", "cyclic:12",
        "elementary_abelian:2:3", "alternating:4", "dihedral:8", "dicyclic:4",
        "product(symmetric:3,cyclic:2)", "product(dihedral:4,cyclic:2)"}) {
    CAPTURE(spec);
    Group g = named(spec);
    auto [expect_mu, expect_cd] = oracle::mu_and_cd(g);
    CHECK(mu(g) == expect_mu);
    SubgroupSet cd = cd_subgroups(g);
    REQUIRE(cd.size() == expect_cd.size());
    for (std::size_t i = 0; i < cd.size(); ++i)
      CHECK(cd[i].members == expect_cd[i]);
  }
}

TEST_CASE("frozen measure values") {
  Group s3 = symmetric(3);
  CHECK(mu(s3) == 4);
  SubgroupSet cd3 = cd_subgroups(s3);
  REQUIRE(cd3.size() == 1);
  CHECK(cd3[0].order == 3);

  CHECK(mu(dicyclic(2)) == 4);
  CHECK(cd_subgroups(dicyclic(2)).size() == 5);
  CHECK(mu(dihedral(4)) == 4);
  CHECK(cd_subgroups(dihedral(4)).size() == 5);
  CHECK(mu(heisenberg(3)) == 9);
  CHECK(cd_subgroups(heisenberg(3)).size() == 6);
}

TEST_CASE("mu bounds and the abelian characterization") {
  for (const char* spec : {"cyclic:9", "elementary_abelian:2:4", "symmetric:4",
                           "dicyclic:3", "heisenberg:3", "cyclic:1"}) {
    CAPTURE(spec);
    Group g = named(spec);
    std::int64_t m = mu(g);
    CHECK(m <= g.order());
    CHECK(m <= g.order() / center(g).order);
    CHECK((m == 1) == g.is_abelian());
  }
}

TEST_CASE("abelian lattice collapses to the whole group") {
  Group g = cyclic(6);
  CDLattice lat = cd_lattice(g);
  CHECK(lat.mu == 1);
  REQUIRE(lat.members.size() == 1);
  CHECK(lat.top_index == lat.bottom_index);
  CHECK(lat.top().is_full());
}

TEST_CASE("Q8 lattice: duality swaps top and bottom, fixes the middles") {
  Group q8 = dicyclic(2);
  CDLattice lat = cd_lattice(q8);
  REQUIRE(lat.members.size() == 5);
  CHECK(lat.top().is_full());
  CHECK(lat.bottom().members == center(q8).members);
  CHECK(lat.dual[lat.top_index] == lat.bottom_index);
  CHECK(lat.dual[lat.bottom_index] == lat.top_index);
  for (std::size_t i = 0; i < lat.members.size(); ++i) {
    if (lat.members[i].order == 4) CHECK(lat.dual[i] == i);  // self-dual
    CHECK(lat.dual[lat.dual[i]] == i);                       // involution
  }
}

TEST_CASE("dihedral:4 lattice members") {
  Group d8 = dihedral(4);
  CDLattice lat = cd_lattice(d8);
  REQUIRE(lat.members.size() == 5);
  std::multiset<int> orders;
  for (const Subgroup& h : lat.members) orders.insert(h.order);
  CHECK(orders == std::multiset<int>{2, 4, 4, 4, 8});
  CHECK(lat.top().is_full());
  CHECK(lat.bottom().members == center(d8).members);
}

TEST_CASE("a lattice need not contain the whole group") {
  Group d16 = dihedral(8);
  CDLattice lat = cd_lattice(d16);
  REQUIRE(lat.members.size() == 1);  // just the cyclic maximal subgroup
  CHECK(lat.members[0].order == 8);
  CHECK(lat.top_index == lat.bottom_index);
  CHECK_FALSE(lat.top().is_full());
}

TEST_CASE("|H| * |C(H)| is constant across the lattice") {
  for (const char* spec : {"dicyclic:2", "dihedral:4", "heisenberg:3",
                           "symmetric:4", "extraspecial_exp_p2:3"}) {
    CAPTURE(spec);
    Group g = named(spec);
    CDLattice lat = cd_lattice(g);
    std::int64_t expected =
        static_cast<std::int64_t>(g.order()) * g.order() / lat.mu;
    for (std::size_t i = 0; i < lat.members.size(); ++i)
      CHECK(static_cast<std::int64_t>(lat.members[i].order) *
                lat.members[lat.dual[i]].order ==
            expected);
  }
}

TEST_CASE("lattice_extremes rejects sets without unique extremes") {
  Group q8 = dicyclic(2);
  SubgroupSet fake;
  fake.parent = &q8;
  for (const Subgroup& h : all_subgroups(q8))
    if (h.order == 4) fake.items.push_back(h);  // three incomparable members
  REQUIRE(fake.size() == 3);
  CHECK_THROWS_AS(lattice_extremes(fake), LatticeViolationError);
  SubgroupSet empty;
  CHECK_THROWS_AS(lattice_extremes(empty), LatticeViolationError);
}

TEST_CASE("theorem-1 style verification passes on assorted groups") {
  for (const char* spec :
       {"cyclic:6", "symmetric:3", "dicyclic:2", "dihedral:4", "heisenberg:3",
        "dihedral:8", "symmetric:4", "extraspecial_exp_p2:3",
        "product(symmetric:3,cyclic:2)", "cyclic:1"}) {
    CAPTURE(spec);
    Group g = named(spec);
    CDLattice lat = cd_lattice(g);
    TheoremReport rep = verify_theorem1(g, lat);
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.applicable);
    CHECK(rep.detail.find("[FAIL]") == std::string::npos);
  }
}

TEST_CASE("DOT export of the Q8 lattice") {
  Group q8 = dicyclic(2);
  CDLattice lat = cd_lattice(q8);
  std::string dot = lattice_dot(lat);
  // one node line per member
  std::size_t nodes = 0, pos = 0;
  while ((pos = dot.find("[label=\"order=", pos)) != std::string::npos) {
    ++nodes;
    pos += 1;
  }
  CHECK(nodes == 5);
  CHECK(dot.find("xlabel=\"M(G)\"") != std::string::npos);
  CHECK(dot.find("xlabel=\"m(G)\"") != std::string::npos);
  // bottom -> three middles -> top: six covering edges
  std::size_t edges = 0;
  pos = 0;
  while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
    ++edges;
    pos += 1;
  }
  CHECK(edges == 6);
  CHECK(dot == lattice_dot(lat));  // deterministic
}

}  // TEST_SUITE
