#pragma once

#include <cstdint>
#include <vector>

#include "charzero/classes.hpp"
#include "charzero/group.hpp"

namespace charzero {

inline constexpr long long kCosetCap = 100'000;

bool is_abelian(const Group& g);

/// True iff n (a subgroup of g, same degree) is closed under conjugation by
/// g's generators.
bool is_normal(const Group& g, const Group& n);

/// Smallest normal subgroup of g containing the seed elements.
Group normal_closure(const Group& g, const std::vector<Permutation>& seeds);

Group derived_subgroup(const Group& g);

/// [G, G', G'', ...] with strictly decreasing orders; stops when stable.
std::vector<Group> derived_series(const Group& g);
bool is_solvable(const Group& g);

/// [G, [G,G], [[G,G],G], ...] with strictly decreasing orders.
std::vector<Group> lower_central_series(const Group& g);
bool is_nilpotent(const Group& g);

/// All minimal nontrivial normal subgroups, found as normal closures of class
/// representatives, deduplicated and filtered to inclusion-minimal.  Sorted by
/// order.
std::vector<Group> minimal_normal_subgroups(const Group& g, const Classes& cl);
std::vector<Group> minimal_normal_subgroups(const Group& g);

/// G/N realized through the right-coset action of G on the cosets of N; the
/// returned group has degree [G : N].  Throws std::invalid_argument when N is
/// not normal, CapExceededError when the index exceeds coset_cap.
Group quotient_group(const Group& g, const Group& n, long long coset_cap = kCosetCap);

/// Chief-factor recursion: true iff some (equivalently, every) chief series
/// has all factors of prime order.
bool is_supersolvable(const Group& g);

/// Subgroup generated by the size-1 classes.
Group center(const Group& g, const Classes& cl);
Group center(const Group& g);

/// A Sylow p-subgroup: seeded random p-part growth with a deterministic
/// normalizer-descent fallback.  The result's order is always verified to be
/// the full p-part of |G|.
Group sylow_subgroup(const Group& g, long long p, std::uint64_t seed = 42);

/// N_G(H) by filtering the full element enumeration; requires H <= G and
/// |G| within the enumeration cap.
Group normalizer(const Group& g, const Group& h);

struct ClassificationFlags {
  bool abelian = false;
  bool nilpotent = false;
  bool supersolvable = false;
  bool solvable = false;
  bool odd_order = false;
};

/// All five predicates; the implication chain abelian => nilpotent =>
/// supersolvable => solvable is rechecked on every emitted flag set.
ClassificationFlags classify(const Group& g);

}  // namespace charzero
