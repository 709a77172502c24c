// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0
//
// Homogeneous forms over GF(p), stored as dense coefficient vectors indexed
// by descending grevlex rank. A form remembers its variable count and degree
// even when all coefficients vanish, so degree bookkeeping survives
// arithmetic on zero forms.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperci/common.hpp"
#include "hyperci/monomial.hpp"
#include "hyperci/prime_field.hpp"

namespace hyperci {

class Form {
 public:
  // The zero form of the given degree in variables x0..xn.
  Form(int n, int degree, PrimeField field, const Limits& limits = default_limits())
      : n_(n), degree_(degree), field_(field) {
    if (n < 0) throw std::invalid_argument("Form: negative variable index bound");
    if (degree < 0) throw std::invalid_argument("Form: negative degree");
    coeffs_.assign(checked_basis_size(n, degree, limits), 0);
  }

  // The constant form c of degree 0.
  static Form constant(int n, std::uint32_t c, PrimeField field) {
    Form f(n, 0, field);
    f.coeffs_[0] = c % field.modulus();
    return f;
  }

  // Uniformly random coefficients, redrawn until some coefficient is
  // nonzero. Fully determined by (n, degree, seed, p).
  static Form random(int n, int degree, std::uint64_t seed, PrimeField field,
                     const Limits& limits = default_limits()) {
    Form f(n, degree, field);
    SplitMix64 rng(seed);
    const std::uint32_t p = field.modulus();
    do {
      for (auto& c : f.coeffs_) c = rng.below(p);
    } while (f.is_zero());
    return f;
  }

  int n() const { return n_; }
  int degree() const { return degree_; }
  const PrimeField& field() const { return field_; }
  std::size_t basis_size() const { return coeffs_.size(); }
  std::span<const std::uint32_t> coeffs() const { return coeffs_; }

  std::uint32_t coeff(std::size_t index) const { return coeffs_.at(index); }
  void set_coeff(std::size_t index, std::uint32_t value) {
    coeffs_.at(index) = value % field_.modulus();
  }

  bool is_zero() const {
    for (std::uint32_t c : coeffs_)
      if (c) return false;
    return true;
  }

  std::size_t term_count() const {
    std::size_t t = 0;
    for (std::uint32_t c : coeffs_)
      if (c) ++t;
    return t;
  }

  friend bool operator==(const Form& a, const Form& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ &&
           a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int n_;
  int degree_;
  PrimeField field_;
  std::vector<std::uint32_t> coeffs_;
};

inline Form random_form(int n, int d, std::uint64_t seed, PrimeField field,
                        const Limits& limits = default_limits()) {
  return Form::random(n, d, seed, field, limits);
}

namespace detail {

inline void require_same_ring(const Form& a, const Form& b, const char* op) {
  if (a.n() != b.n()) throw std::invalid_argument(std::string(op) + ": variable count mismatch");
  if (a.field() != b.field()) throw std::invalid_argument(std::string(op) + ": field mismatch");
}

}  // namespace detail

inline Form add(const Form& a, const Form& b) {
  detail::require_same_ring(a, b, "add");
  if (a.degree() != b.degree()) throw std::invalid_argument("add: degree mismatch");
  Form out = a;
  const PrimeField& F = a.field();
  for (std::size_t i = 0; i < out.basis_size(); ++i) {
    out.set_coeff(i, F.add(a.coeff(i), b.coeff(i)));
  }
  return out;
}

inline Form scale(const Form& a, std::uint32_t c) {
  Form out = a;
  const PrimeField& F = a.field();
  for (std::size_t i = 0; i < out.basis_size(); ++i) {
    out.set_coeff(i, F.mul(a.coeff(i), c % F.modulus()));
  }
  return out;
}

inline Form multiply(const Form& a, const Form& b, const Limits& limits = default_limits()) {
  detail::require_same_ring(a, b, "multiply");
  const int n = a.n();
  const int d = a.degree() + b.degree();
  Form out(n, d, a.field(), limits);
  if (a.is_zero() || b.is_zero()) return out;
  const PrimeField& F = a.field();
  const auto ma = enumerate_monomials(n, a.degree(), limits);
  const auto mb = enumerate_monomials(n, b.degree(), limits);
  const detail::RankTable table(n, d);
  std::vector<std::uint64_t> acc(out.basis_size(), 0);
  std::vector<int> sum(static_cast<std::size_t>(n) + 1);
  // Lazy modular accumulation: fold partial sums back below p before the
  // next product could overflow 64 bits.
  const std::uint64_t cap = ~std::uint64_t(0) -
      static_cast<std::uint64_t>(F.modulus() - 1) * (F.modulus() - 1);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    const std::uint32_t ca = a.coeff(i);
    if (!ca) continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      const std::uint32_t cb = b.coeff(j);
      if (!cb) continue;
      for (int v = 0; v <= n; ++v) sum[v] = ma[i].exponents[v] + mb[j].exponents[v];
      std::size_t r = table.rank(sum);
      std::uint64_t term = static_cast<std::uint64_t>(ca) * cb;
      if (acc[r] >= cap) acc[r] = F.reduce64(acc[r]);
      acc[r] += term;
    }
  }
  for (std::size_t r = 0; r < acc.size(); ++r) out.set_coeff(r, F.reduce64(acc[r]));
  return out;
}

inline std::uint32_t evaluate(const Form& f, std::span<const std::uint32_t> point) {
  if (point.size() != static_cast<std::size_t>(f.n()) + 1) {
    throw std::invalid_argument("evaluate: point has wrong dimension");
  }
  const PrimeField& F = f.field();
  const auto mons = enumerate_monomials(f.n(), f.degree());
  std::uint32_t total = 0;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const std::uint32_t c = f.coeff(i);
    if (!c) continue;
    std::uint32_t v = c;
    for (int j = 0; j <= f.n(); ++j) {
      int e = mons[i].exponents[j];
      if (e) v = F.mul(v, F.pow(point[j] % F.modulus(), e));
    }
    total = F.add(total, v);
  }
  return total;
}

// Substitutes variable x_var := replacement into f and returns the result in
// the polynomial ring on the remaining n variables (indices shift down past
// var). The replacement must be a form of degree at most 1 in those
// remaining variables; the substitution is exact, not generic.
inline Form substitute_variable(const Form& f, int var, const Form& replacement,
                                const Limits& limits = default_limits()) {
  const int n = f.n();
  if (n < 1) throw std::invalid_argument("substitute_variable: no variable left to keep");
  if (var < 0 || var > n) throw std::invalid_argument("substitute_variable: variable out of range");
  if (replacement.n() != n - 1 || replacement.degree() > 1) {
    throw std::invalid_argument("substitute_variable: replacement must be linear in the smaller ring");
  }
  if (replacement.field() != f.field()) {
    throw std::invalid_argument("substitute_variable: field mismatch");
  }
  const int d = f.degree();
  const PrimeField& F = f.field();
  // Split f = sum_k x_var^k * part[k] with part[k] in the smaller ring.
  std::vector<Form> part;
  part.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) part.emplace_back(n - 1, d - k, F, limits);
  const auto mons = enumerate_monomials(n, d, limits);
  std::vector<int> rest(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const std::uint32_t c = f.coeff(i);
    if (!c) continue;
    int k = mons[i].exponents[var];
    std::size_t w = 0;
    for (int j = 0; j <= n; ++j) {
      if (j != var) rest[w++] = mons[i].exponents[j];
    }
    std::size_t r = detail::grevlex_rank(rest);
    part[k].set_coeff(r, F.add(part[k].coeff(r), c));
  }
  // Horner in the replacement: result = (..(part[d]*R + part[d-1])*R + ...).
  Form lin = replacement;
  if (lin.degree() == 0) {
    // Promote a constant replacement to degree 1 so Horner's degree
    // bookkeeping is uniform; a degree-1 form can represent any constant
    // only when it is zero, which is the one constant substitute_variable
    // accepts.
    if (!lin.is_zero()) {
      throw std::invalid_argument("substitute_variable: nonzero constant replacement not supported");
    }
    lin = Form(n - 1, 1, F, limits);
  }
  Form acc = part[d];
  for (int k = d - 1; k >= 0; --k) {
    acc = add(multiply(acc, lin, limits), part[k]);
  }
  return acc;
}

}  // namespace hyperci
