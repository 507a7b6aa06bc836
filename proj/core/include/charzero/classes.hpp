#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "charzero/group.hpp"

namespace charzero {

struct ClassesOptions {
  long long enumeration_cap = kEnumerationCap;  // refuse groups larger than this
  long long lookup_cap = 1'000'000;  // keep the rank -> class table up to this order
};

/// Conjugacy classes of a finite permutation group, in a canonical order:
/// sorted by (element order, class size, lexicographically smallest member).
/// Class representatives are those lexicographic minima.
class Classes {
public:
  Classes() = default;

  static Classes compute(const Group& g, const ClassesOptions& opts = {});

  const Group& group() const { return group_; }
  int count() const { return static_cast<int>(reps_.size()); }
  const Permutation& rep(int i) const { return reps_[i]; }
  long long size(int i) const { return sizes_[i]; }
  long long element_order(int i) const { return orders_[i]; }
  const std::vector<long long>& sizes() const { return sizes_; }

  /// Index of the class containing p.  O(1) table lookup when the group is
  /// within the lookup cap, otherwise an orbit walk under conjugation.
  /// Throws std::invalid_argument if p is not a group element.
  int class_of(const Permutation& p) const;

  /// i* with C_{i*} = { x^{-1} : x in C_i }.  An involution on class indices.
  int inverse_class(int i) const { return inverse_class_[i]; }

  /// pm[i] = class of rep(i)^t.
  std::vector<int> power_map(long long t) const;

  /// Class-constant slice M_i with (M_i)[j][k] = a_{ijk} =
  /// #{(x, y) in C_i x C_j : x*y = rep(k)}.  Computed once per i and cached;
  /// distinct slices may be requested concurrently.
  const std::vector<std::vector<long long>>& constants_slice(int i) const;

  long long class_constant(int i, int j, int k) const { return constants_slice(i)[j][k]; }

  /// lcm of the element orders.
  long long exponent() const;

  long long centralizer_order(int i) const { return group_.order() / sizes_[i]; }

private:
  Group group_;
  std::vector<Permutation> reps_;
  std::vector<long long> sizes_;
  std::vector<long long> orders_;
  std::vector<std::int32_t> class_by_rank_;  // empty when order > lookup_cap
  std::vector<int> inverse_class_;

  struct SliceCache {
    std::mutex mutex;
    std::vector<std::shared_ptr<const std::vector<std::vector<long long>>>> slices;
  };
  std::shared_ptr<SliceCache> slice_cache_;

  int class_of_by_walk(const Permutation& p) const;
};

inline Classes conjugacy_classes(const Group& g, const ClassesOptions& opts = {}) {
  return Classes::compute(g, opts);
}

}  // namespace charzero
