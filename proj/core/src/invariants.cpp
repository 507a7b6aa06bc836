#include "charzero/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "charzero/errors.hpp"

namespace charzero {

int vanish_count(const CharacterTable& table, int row) {
  int c = 0;
  for (int j = 0; j < table.k(); ++j)
    if (table.values[row][j].is_zero()) ++c;
  return c;
}

InvariantReport invariant_report(const CharacterTable& table) {
  InvariantReport rep;
  rep.group_name = table.classes.group().name();
  rep.order = table.order();
  rep.num_classes = table.k();
  rep.per_character.reserve(table.k());
  for (int i = 0; i < table.k(); ++i) {
    PerCharacter pc;
    pc.degree = table.degrees[i];
    for (int j = 0; j < table.k(); ++j)
      if (table.values[i][j].is_zero()) {
        ++pc.vanish_count;
        pc.vanishing_classes.push_back(j);
      }
    rep.degree_sum += pc.degree;
    rep.zero_count += pc.vanish_count;
    rep.per_character.push_back(std::move(pc));
  }
  rep.anz = Rational(rep.zero_count, rep.num_classes);
  rep.acd = Rational(rep.degree_sum, rep.num_classes);
  rep.flags = classify(table.classes.group());
  return rep;
}

InvariantReport invariant_report(const Group& g, const ChartabOptions& opts) {
  return invariant_report(character_table(g, opts));
}

std::vector<TheoremCheck> check_theorems(const InvariantReport& rep) {
  std::vector<TheoremCheck> out;
  const Rational one(1), half(1, 2), third(1, 3), zero(0);

  auto implication = [&out, &rep](std::string name, bool hypothesis, bool conclusion,
                                  const std::string& failure) {
    TheoremCheck c;
    c.name = std::move(name);
    c.applicable = hypothesis;
    c.violated = hypothesis && !conclusion;
    if (c.violated) c.detail = rep.group_name + ": " + failure;
    out.push_back(std::move(c));
  };

  const std::string anz_str = "anz = " + rep.anz.str();
  implication("anz < 1 implies solvable", rep.anz < one, rep.flags.solvable,
              anz_str + " but not solvable");
  implication("anz < 1/2 implies supersolvable", rep.anz < half, rep.flags.supersolvable,
              anz_str + " but not supersolvable");
  implication("anz < 1/3 implies nilpotent", rep.anz < third, rep.flags.nilpotent,
              anz_str + " but not nilpotent");
  implication("odd order and anz < 1 implies supersolvable",
              rep.flags.odd_order && rep.anz < one, rep.flags.supersolvable,
              "odd order, " + anz_str + ", but not supersolvable");
  implication("anz < 1/3 iff abelian", true, (rep.anz < third) == rep.flags.abelian,
              anz_str + (rep.flags.abelian ? " with abelian group" : " with nonabelian group"));
  implication("anz = 0 iff abelian", true, (rep.anz == zero) == rep.flags.abelian,
              anz_str + (rep.flags.abelian ? " with abelian group" : " with nonabelian group"));

  TheoremCheck rows;
  rows.name = "linear rows have no zeros, nonlinear rows have at least one";
  rows.applicable = true;
  for (std::size_t i = 0; i < rep.per_character.size(); ++i) {
    const auto& pc = rep.per_character[i];
    const bool ok = pc.degree == 1 ? pc.vanish_count == 0 : pc.vanish_count >= 1;
    if (!ok) {
      rows.violated = true;
      std::ostringstream msg;
      msg << rep.group_name << ": row " << i << " of degree " << pc.degree << " has "
          << pc.vanish_count << " zeros";
      rows.detail = msg.str();
      break;
    }
  }
  out.push_back(std::move(rows));
  return out;
}

std::vector<std::string> theorem_violations(const InvariantReport& rep) {
  std::vector<std::string> out;
  for (const auto& c : check_theorems(rep))
    if (c.violated) out.push_back(c.name + ": " + c.detail);
  return out;
}

QuotientCheck check_quotient_monotonicity(const Group& g, const Group& k,
                                          const ChartabOptions& opts) {
  if (!is_normal(g, k))
    throw std::invalid_argument("quotient monotonicity: subgroup is not normal");
  if (!contains_subgroup(derived_subgroup(g), k))
    throw std::invalid_argument(
        "quotient monotonicity: subgroup is not inside the derived subgroup");
  const InvariantReport rep_g = invariant_report(g, opts);
  if (!(rep_g.anz < Rational(1)))
    throw std::invalid_argument("quotient monotonicity: anz of the group is not below 1");
  const Group q = quotient_group(g, k);
  const InvariantReport rep_q = invariant_report(q, opts);
  QuotientCheck out;
  out.subgroup_order = k.order();
  out.quotient_order = q.order();
  out.anz_group = rep_g.anz;
  out.anz_quotient = rep_q.anz;
  out.holds = !(rep_g.anz < rep_q.anz);
  return out;
}

ConjectureFindings probe_conjecture(const std::vector<InvariantReport>& reports) {
  ConjectureFindings f;
  const Rational bound(16, 11);
  for (const auto& rep : reports) {
    if (!rep.flags.odd_order) {
      ++f.even_skipped;
      continue;
    }
    ++f.odd_scanned;
    if (!rep.flags.supersolvable && rep.anz < bound)
      f.counterexamples.push_back(rep.group_name);
    if (rep.anz == bound) f.boundary_witnesses.push_back(rep.group_name);
  }
  return f;
}

std::vector<long long> one_class_vanishing_degrees(const CharacterTable& table) {
  std::vector<long long> out;
  for (int i = 0; i < table.k(); ++i)
    if (vanish_count(table, i) == 1) out.push_back(table.degrees[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<FrobeniusDegenerateFinding> frobenius_degenerate_detector(
    const Classes& classes) {
  const Group& g = classes.group();
  const long long n = g.order();
  if (n % 2 != 0) return std::nullopt;
  int outside = -1;
  for (int i = 0; i < classes.count(); ++i)
    if (classes.size(i) == n / 2 && !classes.rep(i).is_identity()) {
      outside = i;
      break;
    }
  if (outside < 0) return std::nullopt;
  std::vector<Permutation> seeds;
  for (int i = 0; i < classes.count(); ++i)
    if (i != outside) seeds.push_back(classes.rep(i));
  const Group kernel = normal_closure(g, seeds);
  // The closure contains every class other than the outside one; if it is
  // anything but exactly their union, that union is not a subgroup.
  if (kernel.order() != n / 2) return std::nullopt;
  FrobeniusDegenerateFinding f;
  f.kernel_order = kernel.order();
  f.kernel_abelian = is_abelian(kernel);
  f.kernel_odd = kernel.order() % 2 == 1;
  if (!f.kernel_abelian || !f.kernel_odd)
    throw InternalError("single outside class but kernel is not abelian of odd order");
  return f;
}

}  // namespace charzero
