#pragma once

#include <string>
#include <vector>

#include "charzero/classes.hpp"
#include "charzero/cyclotomic.hpp"
#include "charzero/group.hpp"

namespace charzero {

struct ChartabOptions {
  long long order_cap = 2'000'000;      // refuse groups larger than this
  int class_cap = 120;                  // refuse tables wider than this
  unsigned long long seed = 42;         // used only if random splitting kicks in
  bool force_random_split = false;      // skip straight to random combinations
  ClassesOptions class_options{};
};

/// The irreducible character table of a finite group, exact values in
/// Z[zeta_e] where e is the group exponent.  Rows are sorted canonically:
/// by degree, then by the coefficient vectors of the values left to right.
/// Columns follow the canonical conjugacy class order.
struct CharacterTable {
  Classes classes;
  long long exponent = 1;
  long long prime = 0;  // the modular prime the table was computed through
  std::vector<long long> degrees;               // degrees[i] = values[i][0]
  std::vector<std::vector<Cyclotomic>> values;  // values[i][j] = chi_i(class j)

  int k() const { return classes.count(); }
  long long order() const { return classes.group().order(); }
  const Cyclotomic& value(int i, int j) const { return values[i][j]; }
};

/// Smallest prime p ≡ 1 (mod exponent) with p > 2*sqrt(order).  Every prime
/// divisor of the order divides the exponent, so p never divides the order.
long long choose_dixon_prime(long long order, long long exponent);

/// Computes the character table by the Dixon-Schneider method: simultaneous
/// eigenvectors of the class-constant matrices over F_p, then exact lifting
/// of each value as a multiplicity vector over powers of zeta_e.  The result
/// is verified against the orthogonality relations before being returned;
/// an InternalError is raised if any relation fails.
CharacterTable character_table(const Group& g, const ChartabOptions& opts = {});

/// Same, reusing conjugacy classes the caller already computed.
CharacterTable character_table(const Classes& classes, const ChartabOptions& opts = {});

struct OrthogonalityReport {
  bool degree_equation = false;      // sum of squared degrees = group order
  bool row_orthogonality = false;    // <chi_i, chi_j> = [i == j]
  bool column_orthogonality = false; // sum_i chi_i(g) conj(chi_i(h)) = [g ~ h] |C_G(g)|
  std::string detail;                // first failing relation, empty when clean
  bool ok() const { return degree_equation && row_orthogonality && column_orthogonality; }
};

/// Exact verification of the three orthogonality relations.
OrthogonalityReport verify_orthogonality(const CharacterTable& table);

}  // namespace charzero
