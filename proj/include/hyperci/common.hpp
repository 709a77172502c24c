// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared small pieces: capacity limits, checked binomials, and the
// deterministic seed-mixing scheme used by every randomized routine.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperci {

// Guards against accidentally materializing astronomically large objects.
// max_basis bounds the number of monomials of a single graded piece (so it
// bounds coefficient vectors and matrix columns); max_matrix_cells bounds
// rows*cols of any slice matrix handed to the rank engine.
struct Limits {
  std::uint64_t max_basis = 200000;
  std::uint64_t max_matrix_cells = 100000000;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::uint64_t needed, std::uint64_t limit)
      : std::runtime_error(what + " (needs " + std::to_string(needed) +
                           ", limit " + std::to_string(limit) + ")"),
        needed_(needed),
        limit_(limit) {}

  std::uint64_t needed() const { return needed_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t needed_;
  std::uint64_t limit_;
};

// Binomial coefficients saturate at kBinomialSaturated instead of wrapping;
// every caller that cares about exactness checks against its own capacity
// limit first, which is far below the saturation point.
inline constexpr std::uint64_t kBinomialSaturated = std::uint64_t(1) << 62;

inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (r >= kBinomialSaturated) return kBinomialSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

// SplitMix64: tiny, fast, and fully reproducible across platforms.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a master seed and a context salt.
// Trials, generators, and worker items all get their own derived seed, so
// results do not depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) {
  return mix64(master ^ mix64(salt));
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform draw in [0, bound). The modulo bias is below 2^-32 for any
  // bound that fits in 32 bits, which is irrelevant for rank genericity.
  std::uint32_t below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(next() % bound);
  }

 private:
  std::uint64_t state_;
};

}  // namespace hyperci
