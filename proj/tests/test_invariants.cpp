#include <doctest.h>

#include <algorithm>

#include "charzero/constructions.hpp"
#include "charzero/invariants.hpp"

using namespace charzero;

namespace {

InvariantReport synthetic_report(Rational anz, ClassificationFlags flags) {
  InvariantReport rep;
  rep.group_name = "synthetic";
  rep.order = 100;
  rep.num_classes = 10;
  rep.anz = anz;
  rep.acd = Rational(1);
  rep.flags = flags;
  return rep;
}

bool violated(const std::vector<TheoremCheck>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return c.violated;
  FAIL("no check named ", name);
  return false;
}

bool applicable(const std::vector<TheoremCheck>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return c.applicable;
  FAIL("no check named ", name);
  return false;
}

}  // namespace

TEST_CASE("S3 report: one zero in three classes") {
  const InvariantReport rep = invariant_report(symmetric(3));
  CHECK(rep.group_name == "S3");
  CHECK(rep.order == 6);
  CHECK(rep.num_classes == 3);
  CHECK(rep.zero_count == 1);
  CHECK(rep.degree_sum == 4);
  CHECK(rep.anz == Rational(1, 3));
  CHECK(rep.acd == Rational(4, 3));
  REQUIRE(rep.per_character.size() == 3);
  CHECK(rep.per_character[0].vanish_count == 0);
  CHECK(rep.per_character[1].vanish_count == 0);
  CHECK(rep.per_character[2].degree == 2);
  CHECK(rep.per_character[2].vanish_count == 1);
  CHECK(rep.per_character[2].vanishing_classes == std::vector<int>{1});
  CHECK(rep.flags.solvable);
  CHECK(!rep.flags.nilpotent);
}

TEST_CASE("the order-75 group: sixteen zeros in eleven classes") {
  const InvariantReport rep = invariant_report(g75());
  CHECK(rep.order == 75);
  CHECK(rep.num_classes == 11);
  CHECK(rep.zero_count == 16);
  CHECK(rep.anz == Rational(16, 11));
  CHECK(rep.acd == Rational(27, 11));
  CHECK(rep.flags.odd_order);
  CHECK(rep.flags.solvable);
  CHECK(!rep.flags.supersolvable);
  // every nonlinear row vanishes on both classes of size 25
  for (const auto& pc : rep.per_character)
    if (pc.degree == 3) CHECK(pc.vanishing_classes == std::vector<int>{1, 2});
}

TEST_CASE("closed forms for familiar families") {
  CHECK(invariant_report(alternating(4)).anz == Rational(1, 2));
  CHECK(invariant_report(alternating(4)).acd == Rational(3, 2));
  CHECK(invariant_report(alternating(5)).anz == Rational(1));
  for (int k = 1; k <= 2; ++k) {
    const long long fourk = 1LL << (2 * k), twok = 1LL << k;
    const auto rep = invariant_report(extraspecial(2, k, ExtraspecialType::minus));
    CHECK(rep.anz == Rational(fourk - 1, fourk + 1));
    CHECK(rep.acd == Rational(fourk + twok, fourk + 1));
  }
  for (int q : {4, 5, 7, 9}) {
    const auto rep = invariant_report(agl1(q));
    CHECK(rep.anz == Rational(q - 2, q));
    CHECK(rep.acd == Rational(2 * (q - 1), q));
    // exactly one nonlinear character, of degree q - 1
    int nonlinear = 0;
    for (const auto& pc : rep.per_character)
      if (pc.degree > 1) {
        ++nonlinear;
        CHECK(pc.degree == q - 1);
      }
    CHECK(nonlinear == 1);
  }
  // abelian groups have no zeros at all
  CHECK(invariant_report(cyclic(12)).zero_count == 0);
  CHECK(invariant_report(elementary_abelian(5, 2)).anz == Rational(0));
}

TEST_CASE("report from a table matches report from the group") {
  const Group g = symmetric(4);
  const auto a = invariant_report(g);
  const auto b = invariant_report(character_table(g));
  CHECK(a.zero_count == b.zero_count);
  CHECK(a.anz == b.anz);
  CHECK(a.acd == b.acd);
  CHECK(a.num_classes == b.num_classes);
}

TEST_CASE("theorem suite passes on honest corpus members") {
  for (const Group& g :
       {symmetric(3), symmetric(4), alternating(4), alternating(5), g75(), dihedral(5),
        extraspecial(3, 1, ExtraspecialType::exp9), agl1(7), psl2(7)}) {
    CAPTURE(g.name());
    CHECK(theorem_violations(invariant_report(g)).empty());
  }
}

TEST_CASE("strict thresholds: boundary groups are inapplicable, not violations") {
  // A4 sits exactly at anz = 1/2 and is not supersolvable
  const auto a4 = check_theorems(invariant_report(alternating(4)));
  CHECK(!applicable(a4, "anz < 1/2 implies supersolvable"));
  CHECK(!violated(a4, "anz < 1/2 implies supersolvable"));
  // A5 sits exactly at anz = 1 and is not solvable
  const auto a5 = check_theorems(invariant_report(alternating(5)));
  CHECK(!applicable(a5, "anz < 1 implies solvable"));
  CHECK(!violated(a5, "anz < 1 implies solvable"));
  // S3 is below 1 and solvable: applicable and clean
  const auto s3 = check_theorems(invariant_report(symmetric(3)));
  CHECK(applicable(s3, "anz < 1 implies solvable"));
  CHECK(!violated(s3, "anz < 1 implies solvable"));
}

TEST_CASE("the implication engine flags fabricated counterexamples") {
  ClassificationFlags bad;  // nothing true
  const auto checks = check_theorems(synthetic_report(Rational(1, 4), bad));
  CHECK(violated(checks, "anz < 1 implies solvable"));
  CHECK(violated(checks, "anz < 1/2 implies supersolvable"));
  CHECK(violated(checks, "anz < 1/3 implies nilpotent"));
  CHECK(violated(checks, "anz < 1/3 iff abelian"));

  // abelian with nonzero anz breaks the equivalence the other way
  ClassificationFlags ab;
  ab.abelian = ab.nilpotent = ab.supersolvable = ab.solvable = true;
  const auto checks2 = check_theorems(synthetic_report(Rational(3, 2), ab));
  CHECK(violated(checks2, "anz = 0 iff abelian"));

  // odd order, anz < 1, not supersolvable
  ClassificationFlags odd;
  odd.solvable = true;
  odd.odd_order = true;
  const auto checks3 = check_theorems(synthetic_report(Rational(2, 3), odd));
  CHECK(violated(checks3, "odd order and anz < 1 implies supersolvable"));
  CHECK(!violated(checks3, "anz < 1 implies solvable"));
}

TEST_CASE("zero-pattern checks: linear rows clean, nonlinear rows vanish") {
  InvariantReport rep = invariant_report(symmetric(4));
  CHECK(theorem_violations(rep).empty());
  // a linear row pretending to vanish somewhere is a violation
  rep.per_character[0].vanish_count = 1;
  CHECK(!theorem_violations(rep).empty());

  InvariantReport rep2 = invariant_report(symmetric(4));
  // a nonlinear row with no zeros contradicts the vanishing theorem
  rep2.per_character.back().vanish_count = 0;
  CHECK(!theorem_violations(rep2).empty());
}

TEST_CASE("quotient monotonicity on classical pairs") {
  const Group s3 = symmetric(3);
  const Group a3(3, {Permutation::from_cycles("(1,2,3)", 3)});
  const QuotientCheck q1 = check_quotient_monotonicity(s3, a3);
  CHECK(q1.holds);
  CHECK(q1.anz_group == Rational(1, 3));
  CHECK(q1.anz_quotient == Rational(0));
  CHECK(q1.quotient_order == 2);

  const Group a4 = alternating(4);
  const Group v4(4, {Permutation::from_cycles("(1,2)(3,4)", 4),
                     Permutation::from_cycles("(1,3)(2,4)", 4)});
  const QuotientCheck q2 = check_quotient_monotonicity(a4, v4);
  CHECK(q2.holds);
  CHECK(q2.anz_quotient == Rational(0));

  const Group d8 = dihedral(4);
  const Group d8p = derived_subgroup(d8);
  const QuotientCheck q3 = check_quotient_monotonicity(d8, d8p);
  CHECK(q3.holds);
  CHECK(q3.anz_group == Rational(3, 5));
  CHECK(q3.anz_quotient <= Rational(3, 5));
}

TEST_CASE("quotient monotonicity preconditions throw") {
  const Group s4 = symmetric(4);
  // not normal
  CHECK_THROWS_AS(check_quotient_monotonicity(s4, Group(4, {Permutation::from_cycles("(1,2)", 4)})),
                  std::invalid_argument);
  // not inside the derived subgroup
  const Group c4 = cyclic(4);
  const Group c2(4, {Permutation::from_cycles("(1,3)(2,4)", 4)});
  CHECK_THROWS_AS(check_quotient_monotonicity(c4, c2), std::invalid_argument);
  // anz(G) >= 1
  const Group a5 = alternating(5);
  CHECK_THROWS_AS(check_quotient_monotonicity(a5, Group::trivial(5)), std::invalid_argument);
}

TEST_CASE("conjecture probe on a small honest corpus") {
  std::vector<InvariantReport> reports;
  for (const Group& g : {trivial_group(), cyclic(3), g75(), symmetric(3),
                         extraspecial(3, 1, ExtraspecialType::exp3)})
    reports.push_back(invariant_report(g));
  const ConjectureFindings f = probe_conjecture(reports);
  CHECK(f.odd_scanned == 4);
  CHECK(f.even_skipped == 1);
  CHECK(f.counterexamples.empty());
  CHECK(std::count(f.boundary_witnesses.begin(), f.boundary_witnesses.end(), "g75") == 1);
}

TEST_CASE("conjecture probe reports fabricated counterexamples without asserting") {
  ClassificationFlags odd_bad;
  odd_bad.solvable = true;
  odd_bad.odd_order = true;
  auto below = synthetic_report(Rational(1), odd_bad);
  below.group_name = "below-bound";
  auto at = synthetic_report(Rational(16, 11), odd_bad);
  at.group_name = "at-bound";
  ClassificationFlags odd_good = odd_bad;
  odd_good.supersolvable = true;
  auto fine = synthetic_report(Rational(1, 2), odd_good);
  fine.group_name = "supersolvable-odd";
  const ConjectureFindings f = probe_conjecture({below, at, fine});
  CHECK(f.counterexamples == std::vector<std::string>{"below-bound"});
  CHECK(f.boundary_witnesses == std::vector<std::string>{"at-bound"});
  CHECK(f.odd_scanned == 3);
}

TEST_CASE("one-class vanishing degrees") {
  CHECK(one_class_vanishing_degrees(character_table(psl2(5))) ==
        std::vector<long long>{3, 3, 4});
  CHECK(one_class_vanishing_degrees(character_table(psl2(7))) ==
        std::vector<long long>{3, 3});
  CHECK(one_class_vanishing_degrees(character_table(cyclic(6))).empty());
  // A5 also has a row vanishing on two classes (the degree 5 one)
  const auto rep = invariant_report(alternating(5));
  bool has_two = false;
  for (const auto& pc : rep.per_character) has_two |= pc.vanish_count == 2;
  CHECK(has_two);
}

TEST_CASE("vanish_count agrees with the per-character data") {
  const CharacterTable t = character_table(symmetric(5));
  const InvariantReport rep = invariant_report(t);
  for (int i = 0; i < t.k(); ++i)
    CHECK(vanish_count(t, i) == rep.per_character[i].vanish_count);
}

TEST_CASE("degenerate frobenius detector") {
  // S3: the transpositions are a single class covering half the group
  const auto s3 = frobenius_degenerate_detector(Classes::compute(symmetric(3)));
  REQUIRE(s3.has_value());
  CHECK(s3->kernel_order == 3);
  CHECK(s3->kernel_abelian);
  CHECK(s3->kernel_odd);

  // C2 is the degenerate-degenerate case: trivial kernel
  const auto c2 = frobenius_degenerate_detector(Classes::compute(cyclic(2)));
  REQUIRE(c2.has_value());
  CHECK(c2->kernel_order == 1);

  // D8 and C4 have no class of half the group size
  CHECK(!frobenius_degenerate_detector(Classes::compute(dihedral(4))).has_value());
  CHECK(!frobenius_degenerate_detector(Classes::compute(cyclic(4))).has_value());
  CHECK(!frobenius_degenerate_detector(Classes::compute(alternating(4))).has_value());

  // dihedral groups of odd n: reflections form one class of size n
  const auto d5 = frobenius_degenerate_detector(Classes::compute(dihedral(5)));
  REQUIRE(d5.has_value());
  CHECK(d5->kernel_order == 5);
  CHECK(d5->kernel_odd);
}
