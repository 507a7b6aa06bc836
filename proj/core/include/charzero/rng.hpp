#pragma once

#include <cstdint>
#include <random>

namespace charzero {

/// Seeded RNG wrapper.  The modulo-rejection draw below is pinned here (instead
/// of std::uniform_int_distribution) so that streams are identical across
/// standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 42) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform value in [0, n).  n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace charzero
