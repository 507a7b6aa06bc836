#pragma once

#include <compare>
#include <string>
#include <vector>

namespace charzero {

/// A permutation of {0, ..., n-1} stored as its image sequence.
/// Products compose left to right throughout the library:
/// compose(p, q) maps i to q(p(i)), so p acts first.
/// Text I/O uses 1-based disjoint cycle notation.
class Permutation {
public:
  Permutation() = default;

  /// Validates that `images` is a bijection on {0, ..., n-1}.
  explicit Permutation(std::vector<int> images);

  /// Internal fast path; the caller guarantees `images` is a bijection.
  static Permutation from_images_unchecked(std::vector<int> images);

  static Permutation identity(int degree);

  /// Parses 1-based cycle notation such as "(1,2,3)(4,5)".  "()" is the
  /// identity.  Rejects repeated points, points outside [1, degree], and
  /// malformed text.
  static Permutation from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// Multiplicative order (lcm of cycle lengths).
  long long order() const;

  Permutation inverse() const;

  /// 1-based disjoint cycles, smallest point first in each cycle, cycles
  /// sorted by their smallest point.  Identity renders as "()".
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

/// i -> q(p(i)); p acts first.
Permutation compose(const Permutation& p, const Permutation& q);

/// g^{-1} * p * g under the left-to-right product.
Permutation conjugate(const Permutation& p, const Permutation& g);

// Allocation-free variants for hot loops.  `out` must not alias an input.
void compose_into(std::vector<int>& out, const std::vector<int>& p, const std::vector<int>& q);
void invert_into(std::vector<int>& out, const std::vector<int>& p);

}  // namespace charzero
