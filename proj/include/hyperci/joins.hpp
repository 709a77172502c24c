// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0
//
// Dimensions of joins and secant varieties of the varieties of lambda
// reducible forms inside P(S_d). The tangent space at a product
// f_1 * .. * f_s is spanned by the degree-d pieces of the omit-one-factor
// ideals, so dimensions reduce to one Hilbert function value of a product
// ideal at a random point, and joins take the span over one random point
// per factor variety.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperci/common.hpp"
#include "hyperci/form.hpp"
#include "hyperci/monomial.hpp"
#include "hyperci/slice_rank.hpp"

namespace hyperci {

// A factorization type: the multiset of factor degrees of a reducible form.
class Partition {
 public:
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("Partition: no parts");
    for (int p : parts_) {
      if (p < 1) throw std::invalid_argument("Partition: parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += '+';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;  // descending
};

// A join of varieties of reducible forms in the same P(S_d) over P^n.
struct JoinSpec {
  int n;
  std::vector<Partition> lambdas;

  JoinSpec(int n_in, std::vector<Partition> lambdas_in)
      : n(n_in), lambdas(std::move(lambdas_in)) {
    if (n < 1) throw std::invalid_argument("JoinSpec: n must be at least 1");
    if (lambdas.empty()) throw std::invalid_argument("JoinSpec: no varieties");
    const int d = lambdas.front().total();
    for (const Partition& l : lambdas) {
      if (l.total() != d) {
        throw std::invalid_argument("JoinSpec: all partitions must have the same total");
      }
    }
  }

  int degree() const { return lambdas.front().total(); }
};

// Projective dimension of the variety of forms that factor with degree
// multiset lambda: the product map from the factor spaces drops one scaling
// per extra factor.
inline long long reducible_dim(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("reducible_dim: n must be at least 1");
  long long dim = 0;
  for (int part : lambda.parts()) {
    const std::uint64_t c = binomial(static_cast<std::int64_t>(part) + n, n);
    if (c >= kBinomialSaturated) throw std::overflow_error("reducible_dim: overflow");
    dim += static_cast<long long>(c);
  }
  return dim - lambda.size();
}

// Projective dimension of the embedded tangent space to the reducible
// variety at the product of the given factors.
inline long long tangent_dim(std::span<const Form> factors,
                             const Limits& limits = default_limits()) {
  if (factors.empty()) throw std::invalid_argument("tangent_dim: no factors");
  const int n = factors.front().n();
  const PrimeField field = factors.front().field();
  int d = 0;
  for (const Form& f : factors) {
    if (f.n() != n) throw std::invalid_argument("tangent_dim: factors in different rings");
    if (f.field() != field) throw std::invalid_argument("tangent_dim: field mismatch");
    if (f.is_zero()) throw std::invalid_argument("tangent_dim: zero factor");
    d += f.degree();
  }
  const std::size_t s = factors.size();
  std::vector<Form> pre, suf(s, Form::constant(n, 1, field));
  pre.reserve(s);
  pre.push_back(Form::constant(n, 1, field));
  for (std::size_t i = 1; i < s; ++i) {
    pre.push_back(multiply(pre[i - 1], factors[i - 1], limits));
  }
  for (std::size_t i = s - 1; i-- > 0;) {
    suf[i] = multiply(suf[i + 1], factors[i + 1], limits);
  }
  std::vector<Form> products;
  products.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    products.push_back(multiply(pre[i], suf[i], limits));
  }
  const long long cols = static_cast<long long>(checked_basis_size(n, d, limits));
  return cols - 1 - hilbert_value(n, products, d, field, limits);
}

// Dimension of the join: span of tangent spaces at one random point per
// factor variety, maximized over trials.
inline long long join_dim(const JoinSpec& spec, int trials, std::uint64_t seed,
                          const PrimeField& field, const Limits& limits = default_limits()) {
  if (trials < 1) throw std::invalid_argument("join_dim: trials must be positive");
  const int n = spec.n;
  const int d = spec.degree();
  const long long cols = static_cast<long long>(checked_basis_size(n, d, limits));
  const long long ambient = cols - 1;
  long long best = -1;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    std::vector<Form> products;
    for (std::size_t m = 0; m < spec.lambdas.size(); ++m) {
      const std::uint64_t point_seed = derive_seed(trial_seed, m);
      const auto& parts = spec.lambdas[m].parts();
      std::vector<Form> factors;
      factors.reserve(parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i) {
        factors.push_back(Form::random(n, parts[i], derive_seed(point_seed, i), field, limits));
      }
      for (std::size_t i = 0; i < factors.size(); ++i) {
        Form p = Form::constant(n, 1, field);
        for (std::size_t j = 0; j < factors.size(); ++j) {
          if (j != i) p = multiply(p, factors[j], limits);
        }
        products.push_back(std::move(p));
      }
    }
    best = std::max(best, ambient - hilbert_value(n, products, d, field, limits));
    if (best == ambient) break;
  }
  return best;
}

// Dimension of the k-th secant variety of the lambda reducible variety.
inline long long secant_dim(const Partition& lambda, int k, int n, int trials,
                            std::uint64_t seed, const PrimeField& field,
                            const Limits& limits = default_limits()) {
  if (k < 1) throw std::invalid_argument("secant_dim: k must be positive");
  return join_dim(JoinSpec(n, std::vector<Partition>(static_cast<std::size_t>(k), lambda)),
                  trials, seed, field, limits);
}

// Secant defect of the lambda reducible variety: expected dimension
// 2 dim X + 1 of the chordal variety minus its actual dimension.
inline long long defect(const Partition& lambda, int n, int trials, std::uint64_t seed,
                        const PrimeField& field, const Limits& limits = default_limits()) {
  return 2 * reducible_dim(lambda, n) + 1 -
         secant_dim(lambda, 2, n, trials, seed, field, limits);
}

}  // namespace hyperci
