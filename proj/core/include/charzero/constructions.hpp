#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charzero/group.hpp"
#include "charzero/rational.hpp"

namespace charzero {

Group trivial_group();
Group cyclic(int n);
/// Dihedral group of order 2n acting on the n vertices; n >= 3.
Group dihedral(int n);
Group symmetric(int n);
Group alternating(int n);

/// The two isomorphism types of extraspecial groups per order: for p = 2 the
/// central products of D8/Q8 factors (plus/minus), for p = 3 the exponent-3
/// and exponent-9 groups.  Realized by the regular action, so the degree is
/// the order p^(2k+1), capped at 2048.
enum class ExtraspecialType { plus, minus, exp3, exp9 };
Group extraspecial(int p, int k, ExtraspecialType type);

/// The affine maps x -> ax + b of the q-element field: a Frobenius group of
/// order q(q-1) on q points, with elementary abelian kernel of order q and
/// cyclic complement of order q - 1.
Group agl1(int q);

/// Projective groups on the q+1 points of the projective line, 4 <= q <= 13.
Group pgl2(int q);
Group psl2(int q);

/// PSL(2,8) extended by the field automorphism x -> x^2; order 1512, degree 9.
Group pgammal2_8();

/// PSL(3,7) on the 57 points of the projective plane; order 1,876,896.
Group psl3_7();

/// F_p^k (as translations on p^k points) extended by a k-by-k matrix over F_p
/// whose multiplicative order must be exactly m; order p^k * m.
Group vector_semidirect_cyclic(int p, int k, const std::vector<std::vector<int>>& matrix,
                               int m);

/// F_p^k alone (the identity-matrix special case above).
Group elementary_abelian(int p, int k);

/// The nonabelian group of order 75: C5 x C5 extended by an order-3 matrix
/// acting irreducibly.
Group g75();

/// Normalizer of a Sylow 3-subgroup of PSL(3,7), computed by enumeration
/// filtering and memoized per seed (the result does not depend on the seed;
/// normalizers of conjugate subgroups are conjugate, and the invariants
/// downstream are conjugation-invariant).
Group psl37_sylow3_normalizer(std::uint64_t seed = 42);

/// Registry lookup: name plus integer parameters, e.g. ("agl1", {7}) or
/// ("extraspecial", {2, 3, 1}) with the last parameter 0 = plus/exp3,
/// 1 = minus/exp9.  Throws std::invalid_argument for unknown names or bad
/// parameter counts.
Group construct_by_name(const std::string& name, const std::vector<long long>& params);

/// One corpus item: either a constructor invocation or a group file, with
/// optional expected invariants for fixture checking.
struct ManifestEntry {
  std::string name;                  // constructor name, or "file"
  std::vector<long long> params;
  std::string path;                  // used when name == "file"
  std::optional<long long> expected_order;
  std::optional<Rational> expected_anz;
  std::optional<Rational> expected_acd;
};

struct CorpusEntry {
  Group group;
  std::string provenance;
  std::optional<long long> expected_order;
  std::optional<Rational> expected_anz;
  std::optional<Rational> expected_acd;
};

/// Realizes a constructor-type entry (file entries are handled by the IO
/// layer, which delegates here for the rest).
CorpusEntry realize_constructed(const ManifestEntry& entry);

/// The default verification corpus (~48 groups) with expected invariants on
/// the fixture members.
std::vector<ManifestEntry> builtin_manifest();

}  // namespace charzero
