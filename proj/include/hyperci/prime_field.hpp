// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0
//
// Arithmetic in GF(p) for word-sized primes. Elements are plain uint32_t
// values in [0, p); the field object carries the modulus and a precomputed
// Barrett constant so reductions avoid hardware division.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hyperci/common.hpp"

namespace hyperci {

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;  // 2^31 - 1

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t f = 5; f * f <= n; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (!is_prime_u32(p)) {
      throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }
    im_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
  }

  std::uint32_t modulus() const { return p_; }

  // Barrett reduction of a 64-bit value. Valid for any x < 2^64.
  std::uint32_t reduce64(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * im_) >> 64);
    std::uint64_t r = x - q * p_;
    if (r >= p_) r -= p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b - p_;
    if (s > a) s += p_;  // wrapped, so a + b < p
    return s;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a - b;
    if (s > a) s += p_;
    return s;
  }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return reduce64(static_cast<std::uint64_t>(a) * b);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t base = a;
    std::uint32_t acc = 1;
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) {
    return a.p_ != b.p_;
  }

 private:
  std::uint32_t p_;
  std::uint64_t im_;  // floor(2^64 / p)
};

}  // namespace hyperci
