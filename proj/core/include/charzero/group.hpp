#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "charzero/perm.hpp"
#include "charzero/rng.hpp"

namespace charzero {

/// Default ceiling for operations that walk every group element.
inline constexpr long long kEnumerationCap = 10'000'000;

/// One level of a stabilizer chain: a base point, the strong generators that
/// fix all earlier base points, and the orbit/transversal of the base point
/// under those generators.
struct BsgsLevel {
  int base = -1;
  std::vector<Permutation> gens;
  std::vector<int> orbit;       // BFS order; orbit[0] == base
  std::vector<int> orbit_pos;   // point -> index into orbit, or -1
  std::vector<Permutation> transversal;      // by orbit index; base^u = point
  std::vector<Permutation> transversal_inv;  // inverses, precomputed for sifting
};

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm.  Base points are always the smallest non-fixed points, so the
/// chain (and everything derived from it: element order, ranks, enumeration)
/// is a pure function of the generator list.
struct Bsgs {
  int degree = 0;
  long long order = 1;
  std::vector<BsgsLevel> levels;

  struct SiftResult {
    Permutation residue;
    int level = 0;    // level where sifting stopped (== levels.size() on success)
    bool member = false;
  };

  SiftResult sift(const Permutation& p) const;
  bool is_member(const Permutation& p) const;

  /// Bijection between group elements and [0, order): the mixed-radix index of
  /// the transversal decomposition.  Requires membership.
  long long rank_of(const Permutation& p) const;
  Permutation element_at(long long rank) const;
};

Bsgs build_bsgs(int degree, const std::vector<Permutation>& generators);

/// A finite permutation group given by generators.  Copies are cheap and share
/// the lazily built stabilizer chain.
class Group {
public:
  Group() = default;
  Group(int degree, std::vector<Permutation> generators, std::string name = "");

  static Group trivial(int degree, std::string name = "1");

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  long long order() const;
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return order() == 1; }

  const Bsgs& bsgs() const;

  /// Visits every element exactly once, in the deterministic transversal
  /// enumeration order.  No cap: the caller decides how much walking is sane
  /// (use order() first).
  void for_each_element(const std::function<void(const Permutation&)>& fn) const;

  /// Materializes all elements; throws CapExceededError if order() > cap.
  std::vector<Permutation> elements(long long cap = kEnumerationCap) const;

  /// Uniformly random element: one uniformly chosen transversal representative
  /// per chain level, multiplied together.
  Permutation random_element(Rng& rng) const;

  long long rank_of(const Permutation& p) const { return bsgs().rank_of(p); }
  Permutation element_at(long long rank) const { return bsgs().element_at(rank); }

private:
  int degree_ = 1;
  std::string name_;
  std::vector<Permutation> gens_;
  mutable std::shared_ptr<const Bsgs> bsgs_;
};

/// True iff every generator of `h` lies in `g` (h's degree must match).
bool contains_subgroup(const Group& g, const Group& h);

/// Order-and-containment equality test.
bool same_subgroup(const Group& a, const Group& b);

}  // namespace charzero
