#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charzero/chartab.hpp"
#include "charzero/rational.hpp"
#include "charzero/structure.hpp"

namespace charzero {

struct PerCharacter {
  long long degree = 0;
  int vanish_count = 0;                // n_v: classes where the character is 0
  std::vector<int> vanishing_classes;  // their indices, ascending
};

/// Everything the verification harness consumes for one group: the zero
/// statistics of the character table (nz, anz = nz/k, acd = T/k, all exact)
/// plus the structural classification flags.
struct InvariantReport {
  std::string group_name;
  long long order = 0;
  int num_classes = 0;      // k
  long long degree_sum = 0; // T = sum of character degrees
  long long zero_count = 0; // nz = zero entries of the table
  Rational anz;
  Rational acd;
  std::vector<PerCharacter> per_character;  // in canonical row order
  ClassificationFlags flags;
};

/// Zero entries in one row of the table.
int vanish_count(const CharacterTable& table, int row);

InvariantReport invariant_report(const CharacterTable& table);
InvariantReport invariant_report(const Group& g, const ChartabOptions& opts = {});

/// One implication instance evaluated on a report.  `applicable` records
/// whether the hypothesis held; `violated` means hypothesis true, conclusion
/// false.  Violations are data, not exceptions, so a scan can keep going.
struct TheoremCheck {
  std::string name;
  bool applicable = false;
  bool violated = false;
  std::string detail;  // filled only on violation
};

/// The implication suite, all thresholds exact and strict:
///   anz < 1   => solvable          anz < 1/2 => supersolvable
///   anz < 1/3 => nilpotent         anz < 1/3 <=> abelian
///   odd order and anz < 1 => supersolvable        anz = 0 <=> abelian
///   every linear row has no zeros; every nonlinear row has at least one.
std::vector<TheoremCheck> check_theorems(const InvariantReport& rep);

/// "name: detail" for every violated check.
std::vector<std::string> theorem_violations(const InvariantReport& rep);

struct QuotientCheck {
  long long subgroup_order = 0;
  long long quotient_order = 0;
  Rational anz_group;
  Rational anz_quotient;
  bool holds = false;  // anz(G/K) <= anz(G)
};

/// Exact check of anz(G/K) <= anz(G).  Preconditions (throwing
/// std::invalid_argument): K normal in G, K inside the derived subgroup,
/// and anz(G) < 1.
QuotientCheck check_quotient_monotonicity(const Group& g, const Group& k,
                                          const ChartabOptions& opts = {});

/// Scan result over odd-order groups for the threshold 16/11: a
/// counterexample is a non-supersolvable group with anz strictly below it, a
/// boundary witness sits exactly on it.  Never asserts; only reports.
struct ConjectureFindings {
  std::vector<std::string> counterexamples;
  std::vector<std::string> boundary_witnesses;
  int odd_scanned = 0;
  int even_skipped = 0;
};

ConjectureFindings probe_conjecture(const std::vector<InvariantReport>& reports);

/// Sorted degrees of the rows vanishing on exactly one class.
std::vector<long long> one_class_vanishing_degrees(const CharacterTable& table);

struct FrobeniusDegenerateFinding {
  long long kernel_order = 0;
  bool kernel_abelian = false;
  bool kernel_odd = false;
};

/// Detects a normal subgroup N with G minus N a single conjugacy class (so N
/// has index 2 and the class has size |G|/2).  On a hit the kernel is always
/// abelian of odd order; that is re-verified and any failure raises
/// InternalError.
std::optional<FrobeniusDegenerateFinding> frobenius_degenerate_detector(
    const Classes& classes);

}  // namespace charzero
