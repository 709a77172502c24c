// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0
//
// Monomials of fixed total degree in n+1 variables x0..xn, ordered by
// graded reverse lexicographic order, listed descending. The first monomial
// of the degree-d slice is x0^d and the last is xn^d. Coefficient vectors
// and matrix columns are indexed by the rank of a monomial in this list.

#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperci/common.hpp"

namespace hyperci {

struct Monomial {
  std::vector<int> exponents;  // one entry per variable x0..xn

  int degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
  }
};

// Number of monomials of degree d in n+1 variables: C(n+d, n).
inline std::uint64_t monomial_count(int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("monomial_count: negative argument");
  return binomial(static_cast<std::int64_t>(n) + d, n);
}

// monomial_count checked against limits.max_basis; the usual entry point for
// sizing coefficient vectors and slice columns.
inline std::size_t checked_basis_size(int n, int d, const Limits& limits = default_limits()) {
  std::uint64_t c = monomial_count(n, d);
  if (c > limits.max_basis) {
    throw CapacityError("graded piece of degree " + std::to_string(d) + " in " +
                            std::to_string(n + 1) + " variables exceeds basis capacity",
                        c, limits.max_basis);
  }
  return static_cast<std::size_t>(c);
}

namespace detail {

// Rank of an exponent vector within the descending grevlex list of its
// degree. Counts, for each trailing variable, the monomials that precede by
// having a smaller exponent there: with j variables x0..xj remaining and
// degree D left, the monomials with last exponent t < e form blocks whose
// total is C(j+D, j) - C(j+D-e, j).
inline std::size_t grevlex_rank(std::span<const int> exps) {
  int deg = 0;
  for (int e : exps) deg += e;
  std::size_t rank = 0;
  int rem = deg;
  for (int j = static_cast<int>(exps.size()) - 1; j >= 1; --j) {
    int e = exps[j];
    rank += static_cast<std::size_t>(binomial(j + rem, j) - binomial(j + rem - e, j));
    rem -= e;
  }
  return rank;
}

// Pascal cache for the hot paths (slice assembly, products); avoids
// recomputing binomials per term. Stores C(i, k) for i <= n+d and k <= d,
// which covers every lookup grevlex ranking needs for degrees up to d and
// keeps all stored values at or below C(n+d, d).
class RankTable {
 public:
  RankTable(int n, int d)
      : dmax_(d), c_((static_cast<std::size_t>(n) + d + 1) * (d + 1), 0) {
    int imax = n + d;
    for (int i = 0; i <= imax; ++i) {
      at(i, 0) = 1;
      for (int k = 1; k <= std::min(i, d); ++k) {
        at(i, k) = at(i - 1, k - 1) + (k <= i - 1 ? at(i - 1, k) : 0);
      }
    }
  }

  std::size_t rank(std::span<const int> exps) const {
    int deg = 0;
    for (int e : exps) deg += e;
    std::size_t r = 0;
    int rem = deg;
    for (int j = static_cast<int>(exps.size()) - 1; j >= 1 && rem > 0; --j) {
      int e = exps[j];
      r += static_cast<std::size_t>(at(j + rem, rem) - at(j + rem - e, rem - e));
      rem -= e;
    }
    return r;
  }

 private:
  std::uint64_t& at(int i, int k) { return c_[static_cast<std::size_t>(i) * (dmax_ + 1) + k]; }
  std::uint64_t at(int i, int k) const { return c_[static_cast<std::size_t>(i) * (dmax_ + 1) + k]; }

  int dmax_;
  std::vector<std::uint64_t> c_;
};

}  // namespace detail

// All monomials of degree d in variables x0..xn, descending grevlex.
inline std::vector<Monomial> enumerate_monomials(int n, int d,
                                                 const Limits& limits = default_limits()) {
  if (n < 0 || d < 0) throw std::invalid_argument("enumerate_monomials: negative argument");
  std::size_t count = checked_basis_size(n, d, limits);
  std::vector<Monomial> out;
  out.reserve(count);
  std::vector<int> cur(static_cast<std::size_t>(n) + 1, 0);
  // Descending grevlex means ascending exponent on the last variable at each
  // recursion level, with the remaining degree pushed onto earlier variables.
  auto rec = [&](auto&& self, int j, int rem) -> void {
    if (j == 0) {
      cur[0] = rem;
      out.push_back(Monomial{cur});
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur[j] = e;
      self(self, j - 1, rem - e);
    }
    cur[j] = 0;
  };
  rec(rec, n, d);
  return out;
}

// Position of m within enumerate_monomials(n, m.degree()).
inline std::size_t monomial_index(const Monomial& m, int n) {
  if (static_cast<int>(m.exponents.size()) != n + 1) {
    throw std::invalid_argument("monomial_index: exponent vector has wrong length");
  }
  for (int e : m.exponents) {
    if (e < 0) throw std::invalid_argument("monomial_index: negative exponent");
  }
  if (binomial(static_cast<std::int64_t>(n) + m.degree(), n) >= kBinomialSaturated) {
    throw std::overflow_error("monomial_index: rank does not fit in 64 bits");
  }
  return detail::grevlex_rank(m.exponents);
}

}  // namespace hyperci
