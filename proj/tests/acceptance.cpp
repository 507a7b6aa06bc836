// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "charzero/chartab.hpp"
#include "charzero/classes.hpp"
#include "charzero/constructions.hpp"
#include "charzero/cyclotomic.hpp"
#include "charzero/invariants.hpp"
#include "charzero/structure.hpp"

using namespace charzero;

namespace {

struct Failures {
  std::vector<std::string> messages;
  void expect(bool ok, const std::string& what) {
    if (!ok) messages.push_back(what);
  }
};

struct CorpusComputation {
  CorpusEntry entry;
  CharacterTable table;
  InvariantReport report;
};

const std::vector<CorpusComputation>& corpus() {
  static const std::vector<CorpusComputation> computed = [] {
    std::vector<CorpusComputation> out;
    for (const auto& e : builtin_manifest()) {
      CorpusComputation c{realize_constructed(e), {}, {}};
      c.table = character_table(c.entry.group);
      c.report = invariant_report(c.table);
      out.push_back(std::move(c));
    }
    return out;
  }();
  return computed;
}

std::vector<Cyclotomic> integer_row(long long e, const std::vector<long long>& row) {
  std::vector<Cyclotomic> out;
  for (long long v : row) out.push_back(Cyclotomic::integer(v, e));
  return out;
}

Cyclotomic zeta(long long e, long long j) { return Cyclotomic::zeta_power(e, j); }

std::string rstr(const Rational& r) { return r.str(); }

// 1. anz and acd of the three smallest classics, exact.
void criterion_fixtures(Failures& f) {
  const auto s3 = invariant_report(symmetric(3));
  const auto a4 = invariant_report(alternating(4));
  const auto a5 = invariant_report(alternating(5));
  f.expect(s3.anz == Rational(1, 3), "anz(S3) = " + rstr(s3.anz) + ", want 1/3");
  f.expect(a4.anz == Rational(1, 2), "anz(A4) = " + rstr(a4.anz) + ", want 1/2");
  f.expect(a5.anz == Rational(1), "anz(A5) = " + rstr(a5.anz) + ", want 1/1");
  f.expect(s3.acd == Rational(4, 3), "acd(S3) = " + rstr(s3.acd) + ", want 4/3");
  f.expect(a4.acd == Rational(3, 2), "acd(A4) = " + rstr(a4.acd) + ", want 3/2");
}

// 2. the nonabelian order-75 group sits exactly on 16/11 without being
//    supersolvable.
void criterion_g75(Failures& f) {
  const auto rep = invariant_report(g75());
  f.expect(rep.order == 75, "order 75 expected");
  f.expect(rep.anz == Rational(16, 11), "anz = " + rstr(rep.anz) + ", want 16/11");
  f.expect(rep.acd == Rational(27, 11), "acd = " + rstr(rep.acd) + ", want 27/11");
  f.expect(rep.flags.odd_order, "odd order flag");
  f.expect(!rep.flags.supersolvable, "must not be supersolvable");
  f.expect(rep.flags.solvable, "must be solvable");
}

// 3. extraspecial 2-groups of both types at orders 8, 32, 128 match the
//    closed forms anz = (4^k - 1)/(4^k + 1), acd = (4^k + 2^k)/(4^k + 1).
void criterion_extraspecial(Failures& f) {
  for (int k = 1; k <= 3; ++k) {
    const long long fourk = 1LL << (2 * k), twok = 1LL << k;
    const Rational want_anz(fourk - 1, fourk + 1);
    const Rational want_acd(fourk + twok, fourk + 1);
    for (auto type : {ExtraspecialType::plus, ExtraspecialType::minus}) {
      const auto rep = invariant_report(extraspecial(2, k, type));
      const std::string tag = "order " + std::to_string(2 * fourk) +
                              (type == ExtraspecialType::plus ? " plus" : " minus");
      f.expect(rep.anz == want_anz,
               tag + ": anz = " + rstr(rep.anz) + ", want " + want_anz.str());
      f.expect(rep.acd == want_acd,
               tag + ": acd = " + rstr(rep.acd) + ", want " + want_acd.str());
    }
  }
}

// 4. one-dimensional affine groups: anz = (q - 2)/q with a single nonlinear
//    character.
void criterion_affine(Failures& f) {
  for (int q : {4, 5, 7, 8, 9, 11, 13}) {
    const auto rep = invariant_report(agl1(q));
    const std::string tag = "agl1(" + std::to_string(q) + ")";
    f.expect(rep.anz == Rational(q - 2, q),
             tag + ": anz = " + rstr(rep.anz) + ", want " + Rational(q - 2, q).str());
    int nonlinear = 0;
    for (const auto& pc : rep.per_character)
      if (pc.degree > 1) ++nonlinear;
    f.expect(nonlinear == 1, tag + ": " + std::to_string(nonlinear) +
                                 " nonlinear characters, want exactly 1");
  }
}

// 5. degrees of characters vanishing on exactly one class.
void criterion_one_class(Failures& f) {
  auto degrees_of = [](const Group& g) {
    auto d = one_class_vanishing_degrees(character_table(g));
    std::sort(d.begin(), d.end());
    return d;
  };
  f.expect(degrees_of(psl2(5)) == std::vector<long long>{3, 3, 4},
           "psl2(5): one-class degrees must be {3,3,4}");
  f.expect(degrees_of(psl2(7)) == std::vector<long long>{3, 3},
           "psl2(7): one-class degrees must be {3,3}");
  for (int q : {5, 7, 9, 11}) {
    const auto d = degrees_of(pgl2(q));
    const std::string tag = "pgl2(" + std::to_string(q) + ")";
    f.expect(!d.empty(), tag + ": expected some one-class row");
    f.expect(std::all_of(d.begin(), d.end(), [q](long long v) { return v == q; }),
             tag + ": every one-class degree must equal " + std::to_string(q));
  }
  const auto d8 = degrees_of(pgammal2_8());
  f.expect(std::count(d8.begin(), d8.end(), 7) > 0,
           "pgammal2_8: one-class degrees must contain 7");
}

// 6. the sylow-3 normalizer of the order-1,876,896 projective group is a
//    solvable group with anz strictly above 1.
void criterion_sylow_normalizer(Failures& f) {
  const Group big = psl3_7();
  f.expect(big.order() == 1876896, "psl3_7 order");
  const Group syl = sylow_subgroup(big, 3);
  f.expect(syl.order() == 9, "sylow-3 order = " + std::to_string(syl.order()) + ", want 9");
  const Group n = normalizer(big, syl);
  f.expect(contains_subgroup(n, syl), "normalizer must contain the sylow subgroup");
  const auto rep = invariant_report(n);
  f.expect(rep.anz == Rational(7, 6), "anz = " + rstr(rep.anz) + ", want 7/6");
  f.expect(rep.anz > Rational(1), "anz must exceed 1");
  f.expect(rep.flags.solvable, "normalizer must be solvable");
  f.expect(same_subgroup(n, psl37_sylow3_normalizer()),
           "registry constructor must agree with the direct computation");
}

// 7. implication suite over the corpus, plus the perfect-group and
//    minimal-normal echoes.
void criterion_theorems(Failures& f) {
  for (const auto& c : corpus()) {
    for (const auto& v : theorem_violations(c.report))
      f.expect(false, c.entry.provenance + ": " + v);
    if (c.entry.expected_anz && c.report.anz != *c.entry.expected_anz)
      f.expect(false, c.entry.provenance + ": anz " + rstr(c.report.anz) +
                          " != expected " + c.entry.expected_anz->str());
    if (c.entry.expected_acd && c.report.acd != *c.entry.expected_acd)
      f.expect(false, c.entry.provenance + ": acd " + rstr(c.report.acd) +
                          " != expected " + c.entry.expected_acd->str());
    // perfect groups never fall below anz = 1
    if (derived_subgroup(c.entry.group).order() == c.entry.group.order() &&
        c.entry.group.order() > 1) {
      f.expect(c.report.anz >= Rational(1),
               c.entry.provenance + ": perfect group with anz " + rstr(c.report.anz));
    }
  }
  // A5 (minimal normal in itself) has a character vanishing on >= 2 classes
  const auto a5 = invariant_report(alternating(5));
  f.expect(std::any_of(a5.per_character.begin(), a5.per_character.end(),
                       [](const PerCharacter& pc) { return pc.vanish_count >= 2; }),
           "A5 must have a row vanishing on at least two classes");
}

// 8. anz(G/K) <= anz(G) for every corpus group with anz < 1 and every minimal
//    normal subgroup inside the derived subgroup.
void criterion_quotients(Failures& f) {
  int checked = 0;
  for (const auto& c : corpus()) {
    if (!(c.report.anz < Rational(1))) continue;
    const Group& g = c.entry.group;
    const Group derived = derived_subgroup(g);
    for (const auto& k : minimal_normal_subgroups(g, c.table.classes)) {
      if (!contains_subgroup(derived, k)) continue;
      const QuotientCheck qc = check_quotient_monotonicity(g, k);
      ++checked;
      if (!qc.holds) {
        std::ostringstream msg;
        msg << c.entry.provenance << ": anz(G/K) = " << qc.anz_quotient.str()
            << " > anz(G) = " << qc.anz_group.str() << " at |K| = " << qc.subgroup_order;
        f.expect(false, msg.str());
      }
    }
  }
  f.expect(checked >= 15, "only " + std::to_string(checked) +
                              " quotient checks ran; the corpus should provide >= 15");
}

// 9. orthogonality + degree equation on every table, mutation detection, and
//    the frozen small references.
void criterion_soundness(Failures& f) {
  for (const auto& c : corpus()) {
    const auto orth = verify_orthogonality(c.table);
    if (!orth.ok()) f.expect(false, c.entry.provenance + ": " + orth.detail);
    long long sum = 0;
    for (long long d : c.table.degrees) sum += d * d;
    f.expect(sum == c.table.order(), c.entry.provenance + ": degree equation");
  }

  CharacterTable mutated = character_table(symmetric(3));
  mutated.values[2][1] = mutated.values[2][1] + Cyclotomic::integer(1, mutated.exponent);
  f.expect(!verify_orthogonality(mutated).ok(), "mutated S3 table must be rejected");

  const CharacterTable s3 = character_table(symmetric(3));
  f.expect(s3.values == std::vector<std::vector<Cyclotomic>>{integer_row(6, {1, -1, 1}),
                                                             integer_row(6, {1, 1, 1}),
                                                             integer_row(6, {2, 0, -1})},
           "S3 reference table");

  const CharacterTable a4 = character_table(alternating(4));
  const Cyclotomic one = Cyclotomic::integer(1, 6);
  const Cyclotomic w = zeta(6, 2), w2 = zeta(6, 4);
  f.expect(a4.values.size() == 4 && a4.values[0] == std::vector<Cyclotomic>{one, one, w, w2} &&
               a4.values[1] == std::vector<Cyclotomic>{one, one, w2, w} &&
               a4.values[2] == integer_row(6, {1, 1, 1, 1}) &&
               a4.values[3] == integer_row(6, {3, -1, 0, 0}),
           "A4 reference table");

  const CharacterTable d8 = character_table(dihedral(4));
  const CharacterTable q8 = character_table(extraspecial(2, 1, ExtraspecialType::minus));
  const std::vector<std::vector<Cyclotomic>> dihedral_ref{
      integer_row(4, {1, 1, -1, -1, 1}), integer_row(4, {1, 1, -1, 1, -1}),
      integer_row(4, {1, 1, 1, -1, -1}), integer_row(4, {1, 1, 1, 1, 1}),
      integer_row(4, {2, -2, 0, 0, 0})};
  f.expect(d8.values == dihedral_ref, "D8 reference table");
  f.expect(q8.values == dihedral_ref, "Q8 shares the D8 reference table");

  const CharacterTable a5 = character_table(alternating(5));
  const Cyclotomic phi = Cyclotomic::integer(1, 30) + zeta(30, 6) + zeta(30, 24);
  const Cyclotomic psi = Cyclotomic::integer(1, 30) + zeta(30, 12) + zeta(30, 18);
  const bool golden = (a5.value(1, 3) == phi && a5.value(1, 4) == psi) ||
                      (a5.value(1, 3) == psi && a5.value(1, 4) == phi);
  f.expect(a5.degrees == std::vector<long long>{1, 3, 3, 4, 5}, "A5 degrees");
  f.expect(golden, "A5 degree-3 rows must carry the golden ratio pair");
  f.expect(a5.value(2, 3) == a5.value(1, 4) && a5.value(2, 4) == a5.value(1, 3),
           "A5 degree-3 rows must be Galois twins");
}

// 10. odd-order scan against the 16/11 threshold.
void criterion_probe(Failures& f) {
  std::vector<InvariantReport> reports;
  for (const auto& c : corpus()) reports.push_back(c.report);
  const ConjectureFindings findings = probe_conjecture(reports);
  f.expect(findings.counterexamples.empty(),
           std::to_string(findings.counterexamples.size()) + " counterexample(s) reported");
  f.expect(findings.odd_scanned > 0, "no odd-order groups scanned");
  const bool g75_witness =
      std::find(findings.boundary_witnesses.begin(), findings.boundary_witnesses.end(),
                "g75") != findings.boundary_witnesses.end();
  f.expect(g75_witness, "g75 must appear as a boundary witness");
  for (const auto& c : corpus()) {
    if (c.report.group_name != "g75") continue;
    f.expect(c.report.anz == Rational(16, 11), "g75 witness anz must equal 16/11");
    f.expect(!c.report.flags.supersolvable, "g75 witness must not be supersolvable");
  }
}

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;
  std::function<void(Failures&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact anz/acd fixtures for S3, A4, A5", 1.0, criterion_fixtures},
      {2, "order-75 boundary witness invariants", 1.0, criterion_g75},
      {3, "extraspecial closed forms at orders 8, 32, 128", 10.0, criterion_extraspecial},
      {4, "affine frobenius family anz and degree pattern", 10.0, criterion_affine},
      {5, "one-vanishing-class degree sets", 60.0, criterion_one_class},
      {6, "sylow-3 normalizer of the order-1876896 group", 600.0,
       criterion_sylow_normalizer},
      {7, "implication suite over the full corpus", 120.0, criterion_theorems},
      {8, "quotient monotonicity over the corpus", 120.0, criterion_quotients},
      {9, "table soundness, references, mutation detection", 60.0, criterion_soundness},
      {10, "16/11 threshold probe over odd-order corpus", 60.0, criterion_probe},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Failures f;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(f);
    } catch (const std::exception& e) {
      f.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= c.budget_seconds) {
      std::ostringstream msg;
      msg << "took " << elapsed << "s, budget " << c.budget_seconds << "s";
      f.expect(false, msg.str());
    }
    const bool pass = f.messages.empty();
    if (!pass) ++failed;
    std::printf("[%s] criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", c.id,
                c.label.c_str(), elapsed);
    for (const auto& m : f.messages) std::printf("       - %s\n", m.c_str());
  }
  if (failed) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
