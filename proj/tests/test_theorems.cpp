#include <doctest.h>

#include "cdlab/families.hpp"
#include "cdlab/group_io.hpp"
#include "cdlab/theorems.hpp"

using namespace cdlab;

namespace {

std::int64_t int_witness(const TheoremReport& rep, const std::string& name) {
  for (const Witness& w : rep.witnesses)
    if (w.name == name) return std::get<std::int64_t>(w.value);
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("min_normal_abelian_index") {
  Analysis ab(cyclic(9));
  MinNormalAbelian r = min_normal_abelian_index(ab);
  CHECK(r.index == 1);
  CHECK(r.witness.is_full());

  Analysis s3(symmetric(3));
  r = min_normal_abelian_index(s3);
  CHECK(r.index == 2);
  CHECK(r.witness.order == 3);

  // dihedral:4 tie between the cyclic C4 and two Kleins: mask order decides
  Group d8g = dihedral(4);
  Analysis d8(d8g);
  r = min_normal_abelian_index(d8);
  CHECK(r.index == 2);
  CHECK(r.witness.members == closure(d8g, std::vector<int>{1}).members);
}

TEST_CASE("corollary 2: lattice bottom is a small normal abelian subgroup") {
  for (const char* spec :
       {"cyclic:6", "dicyclic:2", "symmetric:3", "symmetric:4", "dihedral:8",
        "heisenberg:3", "product(symmetric:3,cyclic:2)"}) {
    CAPTURE(spec);
    Analysis a(named(spec));
    TheoremReport rep = verify_corollary2(a);
    CHECK(rep.applicable);
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(int_witness(rep, "index") <= int_witness(rep, "mu"));
    // the characteristic-subgroup caveat is recorded on every report
    CHECK(rep.detail.find("characteristic") != std::string::npos);
  }
  Analysis q8(dicyclic(2));
  TheoremReport rep = verify_corollary2(q8);
  CHECK(int_witness(rep, "index") == 4);
  CHECK(int_witness(rep, "mu") == 4);
}

TEST_CASE("corollary 3 on A5: CD set is {1, G}") {
  Analysis a(alternating(5));
  TheoremReport rep = verify_corollary3(a);
  CHECK(rep.applicable);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(int_witness(rep, "mu") == 60);
  CHECK(int_witness(rep, "center_index") == 60);
  CHECK(int_witness(rep, "cd_members") == 2);
}

TEST_CASE("corollary 3 on SL(2,5): CD set is {Z, G} with mu = 60") {
  Group g = load_group("data/sl2_5.grp");
  REQUIRE(g.order() == 120);
  Analysis a(g);
  TheoremReport rep = verify_corollary3(a);
  CHECK(rep.applicable);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(int_witness(rep, "mu") == 60);
  CHECK(int_witness(rep, "center_index") == 60);
}

TEST_CASE("corollary 3 inapplicability") {
  Analysis s3(symmetric(3));  // S3/Z = S3 is not simple
  CHECK(verify_corollary3(s3).verdict == Verdict::NotApplicable);
  Analysis q8(dicyclic(2));  // Q8/Z is abelian
  CHECK(verify_corollary3(q8).verdict == Verdict::NotApplicable);
  Analysis c5(cyclic(5));
  CHECK(verify_corollary3(c5).verdict == Verdict::NotApplicable);
}

TEST_CASE("direct factors") {
  Analysis any(symmetric(3));
  SubgroupSet f = direct_factors(any);
  REQUIRE(f.size() == 2);  // only the trivial factorization
  CHECK(f[0].is_trivial());
  CHECK(f[1].is_full());

  Analysis c6(named("product(cyclic:2,cyclic:3)"));
  CHECK(direct_factors(c6).size() == 4);

  Analysis a5(alternating(5));
  CHECK(direct_factors(a5).size() == 2);

  Analysis d12(named("product(symmetric:3,cyclic:2)"));
  CHECK(direct_factors(d12).size() == 5);
}

TEST_CASE("theorem 4 in exhaustive mode") {
  Analysis a5(alternating(5));
  TheoremReport rep = verify_theorem4(a5);
  CHECK(rep.applicable);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK_FALSE(rep.restricted);
  CHECK(int_witness(rep, "cd_count") == 2);
  CHECK(int_witness(rep, "factor_count") == 2);

  Analysis s5(symmetric(5));
  rep = verify_theorem4(s5);
  CHECK(rep.applicable);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK_FALSE(rep.restricted);

  Analysis q8(dicyclic(2));  // nilpotent: Fitting subgroup is everything
  CHECK(verify_theorem4(q8).verdict == Verdict::NotApplicable);
  Analysis s3(symmetric(3));
  CHECK(verify_theorem4(s3).verdict == Verdict::NotApplicable);
}

TEST_CASE("theorem 4 falls back to restricted mode over budget") {
  Group g = alternating(5);
  Analysis a(g, EnumBudget{.max_subgroups = 10});
  TheoremReport rep = verify_theorem4(a);
  CHECK(rep.applicable);
  CHECK(rep.restricted);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.detail.find("restricted") != std::string::npos);
}

TEST_CASE("theorem 5: strict bound on assorted non-abelian groups") {
  struct Case {
    const char* spec;
    std::int64_t beta, min_m;
  };
  for (const Case& c : {Case{"symmetric:3", 2, 4}, {"dicyclic:2", 2, 4},
                        {"dihedral:4", 2, 4}, {"heisenberg:3", 3, 9}}) {
    CAPTURE(c.spec);
    Analysis a(named(c.spec));
    TheoremReport rep = verify_theorem5(a);
    CHECK(rep.applicable);
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(int_witness(rep, "min_normal_abelian_index") == c.beta);
    CHECK(int_witness(rep, "min_measure") == c.min_m);
  }
  for (const char* spec :
       {"symmetric:4", "alternating:4", "alternating:5", "dihedral:8",
        "dicyclic:4", "extraspecial_exp_p2:3",
        "product(dihedral:4,cyclic:2)"}) {
    CAPTURE(spec);
    Analysis a(named(spec));
    CHECK(verify_theorem5(a).verdict == Verdict::Pass);
  }
  Analysis ab(cyclic(12));
  CHECK(verify_theorem5(ab).verdict == Verdict::NotApplicable);
}

TEST_CASE("theorem 5 corollary: beta <= n^2/p") {
  struct Case {
    const char* spec;
    std::int64_t n, p;
  };
  for (const Case& c : {Case{"symmetric:3", 2, 2}, {"dihedral:4", 2, 2},
                        {"heisenberg:3", 3, 3}}) {
    CAPTURE(c.spec);
    Analysis a(named(c.spec));
    TheoremReport rep = verify_theorem5_corollary(a);
    CHECK(rep.applicable);
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(int_witness(rep, "min_abelian_index") == c.n);
    CHECK(int_witness(rep, "smallest_prime") == c.p);
  }
  Analysis ab(elementary_abelian(3, 2));
  CHECK(verify_theorem5_corollary(ab).verdict == Verdict::NotApplicable);
}

TEST_CASE("small abelian subgroups predicate") {
  Analysis ab(cyclic(16));
  CHECK(small_abelian_subgroups(ab));
  Analysis h27(heisenberg(3));
  CHECK(small_abelian_subgroups(h27));
  Analysis q8(dicyclic(2));
  CHECK(small_abelian_subgroups(q8));
  // D8 x D8 contains C4 x C4, whose image modulo the center is Klein
  Analysis dd(named("product(dihedral:4,dihedral:4)"));
  CHECK_FALSE(small_abelian_subgroups(dd));
  // D8 x C2: |G : Z| = 4, so every abelian image is cyclic (an abelian
  // subgroup covering G/Z would make G abelian)
  Analysis dc(named("product(dihedral:4,cyclic:2)"));
  CHECK(small_abelian_subgroups(dc));
}

TEST_CASE("theorem 6 classification") {
  Analysis d8(dihedral(4));
  TheoremReport rep = classify_theorem6(d8);
  CHECK(rep.applicable);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(int_witness(rep, "case_a") == 1);

  Analysis h27(heisenberg(3));
  rep = classify_theorem6(h27);
  CHECK(rep.applicable);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(int_witness(rep, "case_a") == 1);
  CHECK(int_witness(rep, "case_c") == 1);

  Analysis c8(cyclic(8));
  CHECK(classify_theorem6(c8).verdict == Verdict::NotApplicable);
  Analysis s3(symmetric(3));  // not a p-group
  CHECK(classify_theorem6(s3).verdict == Verdict::NotApplicable);
  // beta = 4 but mu/p = 8: hypothesis fails
  Analysis dd(named("product(dihedral:4,dihedral:4)"));
  CHECK(classify_theorem6(dd).verdict == Verdict::NotApplicable);
}

TEST_CASE("partial converses on p-groups") {
  for (const char* spec :
       {"dihedral:4", "dicyclic:2", "heisenberg:3", "extraspecial_exp_p2:3",
        "dihedral:8", "dicyclic:4", "dihedral:16", "dicyclic:8",
        "heisenberg:5", "product(dihedral:4,cyclic:2)",
        "product(dihedral:4,dihedral:4)", "product(heisenberg:3,cyclic:3)"}) {
    CAPTURE(spec);
    Analysis a(named(spec));
    TheoremReport rep = verify_partial_converses(a);
    CHECK(rep.applicable);
    CHECK(rep.verdict == Verdict::Pass);
  }
  Analysis d8(dihedral(4));
  TheoremReport rep = verify_partial_converses(d8);
  CHECK(int_witness(rep, "mu") == 4);  // = p^2, with an abelian maximal
  CHECK(int_witness(rep, "abelian_maximal") == 1);

  // mu = p^4 case with |G:Z| = p^4 and no abelian maximal subgroup
  Analysis dd(named("product(dihedral:4,dihedral:4)"));
  rep = verify_partial_converses(dd);
  CHECK(int_witness(rep, "mu") == 16);
  CHECK(int_witness(rep, "abelian_maximal") == 0);
  CHECK(int_witness(rep, "center_index") == 16);

  Analysis np(symmetric(3));
  CHECK(verify_partial_converses(np).verdict == Verdict::NotApplicable);
  Analysis ab(elementary_abelian(2, 3));
  CHECK(verify_partial_converses(ab).verdict == Verdict::NotApplicable);
}

TEST_CASE("run_theorem turns budget overruns into fail reports") {
  Group g = alternating(5);
  Analysis a(g, EnumBudget{.max_subgroups = 10});
  TheoremReport rep = run_theorem(a, TheoremId::T5);
  CHECK(rep.verdict == Verdict::Fail);
  CHECK(rep.detail.find("budget") != std::string::npos);
  CHECK(!rep.witnesses.empty());
}

TEST_CASE("single-shot verify_theorem matches the analysis path") {
  TheoremReport rep = verify_theorem(symmetric(3), TheoremId::T5);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.group_label == "symmetric:3");
  CHECK(rep.group_order == 6);
}

TEST_CASE("verdict/applicable coupling holds across checks and groups") {
  for (const char* spec : {"cyclic:4", "symmetric:3", "dicyclic:2",
                           "alternating:4", "heisenberg:3"}) {
    Analysis a(named(spec));
    for (TheoremId id : kAllTheorems) {
      TheoremReport rep = run_theorem(a, id);
      CHECK((rep.verdict == Verdict::NotApplicable) == !rep.applicable);
      if (rep.verdict == Verdict::Fail) CHECK(!rep.witnesses.empty());
    }
  }
}

}  // TEST_SUITE
