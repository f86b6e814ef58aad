#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace diamcount {

// Finalizer of the splitmix64 generator (public domain reference constants).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic 64-bit generator (splitmix64 stream).
///
/// All randomized operations in the library draw from this engine so that a
/// (seed, parameters) pair fixes every output bit.  No std:: distributions
/// are used anywhere: their output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  /// Unbiased uniform draw from {0, ..., bound-1} via masked rejection.
  std::uint64_t below(std::uint64_t bound) noexcept {
    if (bound <= 1) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    for (;;) {
      const std::uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double real01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) noexcept {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

/// Derives an independent sub-seed from a base seed and up to two stream
/// tags.  The derivation is a fixed function, so experiment sub-streams
/// (per degree, per trial, ...) are reproducible across runs.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                    std::uint64_t b = 0) noexcept {
  std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (a + 0xbf58476d1ce4e5b9ULL));
  h = mix64(h ^ (b + 0x94d049bb133111ebULL));
  return h;
}

}  // namespace diamcount
