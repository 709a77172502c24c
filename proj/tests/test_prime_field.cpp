// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "hyperci/prime_field.hpp"

using hyperci::PrimeField;
using hyperci::SplitMix64;

TEST_CASE("primality check") {
  CHECK(hyperci::is_prime_u32(2));
  CHECK(hyperci::is_prime_u32(3));
  CHECK(hyperci::is_prime_u32(101));
  CHECK(hyperci::is_prime_u32(2147483647u));
  CHECK(hyperci::is_prime_u32(4294967291u));
  CHECK_FALSE(hyperci::is_prime_u32(0));
  CHECK_FALSE(hyperci::is_prime_u32(1));
  CHECK_FALSE(hyperci::is_prime_u32(4));
  CHECK_FALSE(hyperci::is_prime_u32(2147483647u - 1));
  CHECK_FALSE(hyperci::is_prime_u32(4294967295u));
}

TEST_CASE("field construction rejects composites") {
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(91), std::invalid_argument);
  CHECK_NOTHROW(PrimeField(2));
  CHECK(PrimeField().modulus() == 2147483647u);
}

TEST_CASE("small fields match naive arithmetic exhaustively") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField F(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        CHECK(F.add(a, b) == (a + b) % p);
        CHECK(F.sub(a, b) == (a + p - b) % p);
        CHECK(F.mul(a, b) == (a * b) % p);
      }
      CHECK(F.neg(a) == (p - a) % p);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    }
  }
}

TEST_CASE("Barrett reduction matches hardware modulo") {
  SplitMix64 rng(42);
  for (std::uint32_t p : {2u, 97u, 2147483647u, 4294967291u}) {
    PrimeField F(p);
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t x = rng.next();
      CHECK(F.reduce64(x) == x % p);
    }
    CHECK(F.reduce64(0) == 0);
    CHECK(F.reduce64(~std::uint64_t(0)) == (~std::uint64_t(0)) % p);
  }
}

TEST_CASE("field operations on random large-prime inputs") {
  PrimeField F(2147483647u);
  SplitMix64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t a = rng.next() % F.modulus();
    const std::uint64_t b = rng.next() % F.modulus();
    const std::uint32_t a32 = static_cast<std::uint32_t>(a);
    const std::uint32_t b32 = static_cast<std::uint32_t>(b);
    CHECK(F.add(a32, b32) == (a + b) % F.modulus());
    CHECK(F.sub(a32, b32) == (a + F.modulus() - b) % F.modulus());
    CHECK(F.mul(a32, b32) == (a * b) % F.modulus());
    if (a32) {
      CHECK(F.mul(a32, F.inv(a32)) == 1);
    }
  }
}

TEST_CASE("pow is iterated multiplication") {
  PrimeField F(101);
  for (std::uint32_t a = 0; a < 101; ++a) {
    std::uint32_t acc = 1;
    for (std::uint64_t e = 0; e < 12; ++e) {
      CHECK(F.pow(a, e) == acc);
      acc = F.mul(acc, a);
    }
  }
  CHECK(F.pow(0, 0) == 1);
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
}

TEST_CASE("seed derivation is deterministic and spreads") {
  CHECK(hyperci::derive_seed(1, 2) == hyperci::derive_seed(1, 2));
  CHECK(hyperci::derive_seed(1, 2) != hyperci::derive_seed(1, 3));
  CHECK(hyperci::derive_seed(1, 2) != hyperci::derive_seed(2, 2));
  SplitMix64 a(5), b(5), c(6);
  CHECK(a.next() == b.next());
  CHECK(a.next() != c.next());
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.below(17) < 17);
  }
}
