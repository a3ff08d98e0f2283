#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "pgx/constructions.hpp"
#include "pgx/errors.hpp"
#include "pgx/groups.hpp"
#include "pgx/structure.hpp"

using namespace pgx;

namespace {

const CheckResult& check_named(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  static CheckResult missing;
  FAIL("no check named " << name);
  return missing;
}

GroupElement cyc(std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  return permutation_from_cycles(degree, cycles);
}

}  // namespace

TEST_CASE("verify_frobenius accepts the order-6480 group with its embedded parts") {
  Group g = paper_g1();
  auto [kernel, complement] = semidirect_embedded_parts(g);
  VerificationReport r = verify_frobenius(g, {kernel, complement});
  CHECK(r.overall);
  CHECK(r.kind == "frobenius");
  CHECK(r.subject == "paper.g1");
  REQUIRE(r.checks.size() == 7);
  CHECK(check_named(r, "kernel ≡ 1 mod complement").detail == "81 ≡ 1 (mod 80)");
  CHECK(check_named(r, "kernel and complement factor the group").detail ==
        "|G| = 6480, |K| = 81, |C| = 80, intersection 1");
  CHECK(check_named(r, "non-solvable complement criterion").status == CheckStatus::Skip);
  for (const auto& c : r.checks)
    if (c.name != "non-solvable complement criterion") CHECK(c.status == CheckStatus::Pass);
}

TEST_CASE("verify_frobenius accepts the order-300 group with its diagonal complement") {
  Group g = paper_g2();
  auto [kernel, complement] = semidirect_embedded_parts(g);
  VerificationReport r = verify_frobenius(g, {kernel, complement});
  CHECK(r.overall);
  CHECK(check_named(r, "kernel ≡ 1 mod complement").detail == "100 ≡ 1 (mod 3)");
}

TEST_CASE("the full complement of paper.g3 is rejected exactly at fixed points") {
  // (V, T) with |T| = 6 satisfies every Frobenius condition except freeness:
  // the field automorphism inside T fixes the prime subfield pointwise.
  Group g = paper_g3();
  auto [kernel, complement] = semidirect_embedded_parts(g);
  VerificationReport r = verify_frobenius(g, {kernel, complement});
  CHECK(!r.overall);
  CHECK(check_named(r, "kernel is normal").status == CheckStatus::Pass);
  CHECK(check_named(r, "kernel and complement factor the group").status == CheckStatus::Pass);
  const CheckResult& fpf = check_named(r, "conjugation action is fixed-point-free");
  CHECK(fpf.status == CheckStatus::Fail);
  CHECK(fpf.detail.substr(0, 12) == "fixed point:");
  CHECK(check_named(r, "kernel is nilpotent").status == CheckStatus::Pass);
  CHECK(check_named(r, "kernel ≡ 1 mod complement").detail == "25 ≡ 1 (mod 6)");
  CHECK(check_named(r, "complement Sylow subgroups are cyclic (2: cyclic or unique involution)")
            .status == CheckStatus::Pass);
}

TEST_CASE("a non-subgroup witness is an input error, not a failed report") {
  Group g = symmetric(4);
  Group other = symmetric(5);
  Group k5 = other.subgroup_generated({cyc(5, {{1, 2}, {3, 4}})});
  CHECK_THROWS_AS(verify_frobenius(g, {k5, k5}), input_error);
}

TEST_CASE("verify_2frobenius accepts the order-150 series") {
  SeriesWitness w = paper_g3_series();
  VerificationReport r = verify_2frobenius(w.g, w.h, w.k);
  CHECK(r.overall);
  CHECK(r.kind == "2frobenius");
  REQUIRE(r.checks.size() == 6);
  CHECK(check_named(r, "series is 1 < H < K < G").detail == "|H| = 25, |K/H| = 3, |G/K| = 2");
  CHECK(check_named(r, "K is Frobenius with kernel H").status == CheckStatus::Pass);
  CHECK(check_named(r, "G/H is Frobenius with kernel K/H").status == CheckStatus::Pass);
  CHECK(check_named(r, "layer primes are pi(K/H) = {3} and pi(H) u pi(G/K) = {2,5}").detail ==
        "pi(K/H) = {3}, pi(H) = {5}, pi(G/K) = {2}");
}

TEST_CASE("verify_2frobenius reports a broken series without throwing") {
  // sym(4) has the right shape with H = V4, K = A4, but its layer primes are
  // {2},{3},{2}: the final check pins the classified prime split.
  Group g = symmetric(4);
  Group v4 = g.subgroup_generated({cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})});
  Group a4 = g.subgroup_generated(
      {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}}), cyc(4, {{1, 2, 3}})});
  VerificationReport r = verify_2frobenius(g, v4, a4);
  CHECK(!r.overall);
  CHECK(check_named(r, "series is 1 < H < K < G").status == CheckStatus::Pass);
  CHECK(check_named(r, "K is Frobenius with kernel H").status == CheckStatus::Pass);
  CHECK(check_named(r, "G/H is Frobenius with kernel K/H").status == CheckStatus::Pass);
  CHECK(check_named(r, "layer primes are pi(K/H) = {3} and pi(H) u pi(G/K) = {2,5}").status ==
        CheckStatus::Fail);

  // A series that is not even a chain: H not inside K.
  Group c2 = g.subgroup_generated({cyc(4, {{1, 2}})});
  Group c3 = g.subgroup_generated({cyc(4, {{1, 2, 3}})});
  VerificationReport bad = verify_2frobenius(g, c2, c3);
  CHECK(!bad.overall);
  CHECK(check_named(bad, "series is 1 < H < K < G").status == CheckStatus::Fail);
}

TEST_CASE("find_frobenius_structure on the classified groups") {
  auto w1 = find_frobenius_structure(paper_g1());
  REQUIRE(w1.has_value());
  CHECK(w1->kernel.order() == 81);
  CHECK(w1->complement.order() == 80);
  CHECK(verify_frobenius(paper_g1(), *w1).overall);

  auto w2 = find_frobenius_structure(paper_g2());
  REQUIRE(w2.has_value());
  CHECK(w2->kernel.order() == 100);
  CHECK(w2->complement.order() == 3);
  CHECK(verify_frobenius(paper_g2(), *w2).overall);
}

TEST_CASE("find_frobenius_structure on the order-12 subgroup of alt(5)") {
  Group a5 = alternating(5);
  Group h = a5.subgroup_generated(
      {cyc(5, {{1, 2}, {3, 4}}), cyc(5, {{1, 3}, {2, 4}}), cyc(5, {{1, 2, 3}})});
  REQUIRE(h.order() == 12);
  auto w = find_frobenius_structure(h);
  REQUIRE(w.has_value());
  CHECK(w->kernel.order() == 4);
  CHECK(w->complement.order() == 3);
  CHECK(verify_frobenius(h, *w).overall);
}

TEST_CASE("find_frobenius_structure correctly comes up empty") {
  CHECK(!find_frobenius_structure(pgl2(9)).has_value());
  CHECK(!find_frobenius_structure(symmetric(5)).has_value());
  CHECK(!find_frobenius_structure(alternating(5)).has_value());
  // A connected prime graph makes the component search meaningless.
  Group c6 = Group::permutation_group(6, {cyc(6, {{1, 2, 3, 4, 5, 6}})}, "c6");
  CHECK_THROWS_AS(find_frobenius_structure(c6), input_error);
}

TEST_CASE("normal subgroup lattices of the small controls") {
  auto s4 = normal_subgroups(symmetric(4));
  std::vector<std::uint64_t> s4_orders;
  for (const auto& n : s4) s4_orders.push_back(n.order());
  CHECK(s4_orders == std::vector<std::uint64_t>{1, 4, 12, 24});

  auto a5 = normal_subgroups(alternating(5));
  std::vector<std::uint64_t> a5_orders;
  for (const auto& n : a5) a5_orders.push_back(n.order());
  CHECK(a5_orders == std::vector<std::uint64_t>{1, 60});  // simplicity
}

TEST_CASE("normal subgroup lattice of the order-6480 group") {
  // Every proper nontrivial normal subgroup is V(81) extended by one of the
  // proper divisors of the cyclic 80: exactly 11 normal subgroups in all.
  auto ns = normal_subgroups(paper_g1());
  std::vector<std::uint64_t> orders;
  for (const auto& n : ns) orders.push_back(n.order());
  CHECK(orders == std::vector<std::uint64_t>{1, 81, 162, 324, 405, 648, 810, 1296, 1620, 3240,
                                             6480});
}

TEST_CASE("find_2frobenius_series finds the order-150 series and nothing bogus") {
  auto found = find_2frobenius_series(paper_g3());
  REQUIRE(found.has_value());
  CHECK(found->first.order() == 25);
  CHECK(found->second.order() == 75);

  CHECK(!find_2frobenius_series(paper_g1()).has_value());
  CHECK(!find_2frobenius_series(symmetric(4)).has_value());  // wrong layer primes
}

TEST_CASE("theorem_case maps each built-in to its case") {
  auto c1 = theorem_case(paper_g1());
  CHECK(c1.which == TheoremCase::Case1);
  CHECK(c1.report.overall);
  CHECK(c1.report.kind == "theorem");
  CHECK(check_named(c1.report, "prime graph matches pgl2(9)").status == CheckStatus::Pass);

  CHECK(theorem_case(paper_g2()).which == TheoremCase::Case2);
  CHECK(theorem_case(paper_g3()).which == TheoremCase::Case3);
  auto c4 = theorem_case(pgl2(9));
  CHECK(c4.which == TheoremCase::Case4);
  CHECK(c4.report.overall);

  // Another member of the Frobenius family lands in Case1 as well.
  CHECK(theorem_case(frobenius_field(3, 4, 80)).which == TheoremCase::Case1);
}

TEST_CASE("theorem_case rejects the almost-simple controls") {
  for (const Group& g : {psl2(9), alternating(5), symmetric(5)}) {
    auto c = theorem_case(g);
    CHECK(c.which == TheoremCase::NoMatch);
    CHECK(!c.report.overall);
    CHECK(check_named(c.report, "prime graph matches pgl2(9)").status == CheckStatus::Fail);
  }
  // Wrong vertex set entirely.
  CHECK(theorem_case(frobenius_field(5, 2, 3)).which == TheoremCase::NoMatch);
}

TEST_CASE("check status names serialize in lowercase") {
  CHECK(check_status_name(CheckStatus::Pass) == "pass");
  CHECK(check_status_name(CheckStatus::Fail) == "fail");
  CHECK(check_status_name(CheckStatus::Skip) == "skip");
  CHECK(theorem_case_name(TheoremCase::Case1) == "Case1");
  CHECK(theorem_case_name(TheoremCase::NoMatch) == "NoMatch");
}
