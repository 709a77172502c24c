// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0
//
// Degree slices of graded ideals as explicit matrices over GF(p), and the
// rank computations behind every Hilbert function value in this library.
//
// For generators g_1..g_m and a degree d, the slice matrix has one row per
// product (monomial of degree d - deg g_i) * g_i and one column per monomial
// of degree d; its rank is dim (g_1..g_m)_d, so the Hilbert function of the
// quotient in degree d is the corank. Generators of degree 1 are first
// eliminated exactly: quotienting by a nonzero linear form is an isomorphism
// onto a polynomial ring with one variable fewer, and substituting it into
// the remaining generators preserves every graded dimension. This reduction
// changes no value and turns many large rank problems into small ones.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperci/common.hpp"
#include "hyperci/form.hpp"
#include "hyperci/hilbert_vector.hpp"
#include "hyperci/monomial.hpp"
#include "hyperci/prime_field.hpp"

namespace hyperci {

struct SliceMatrix {
  struct Entry {
    std::uint32_t col;
    std::uint32_t val;
  };

  int n = 0;
  int d = 0;
  std::size_t cols = 0;
  PrimeField field{kDefaultPrime};
  std::vector<std::size_t> row_start;  // rows()+1 offsets into entries
  std::vector<Entry> entries;

  std::size_t rows() const {
    return row_start.empty() ? 0 : row_start.size() - 1;
  }
};

// Rows appear generator by generator, multipliers in descending grevlex
// order. Generators of degree above d contribute no rows; zero generators
// of degree at most d contribute their (empty) rows so the shape matches
// the multiplier count formula.
inline SliceMatrix build_slice_matrix(int n, std::span<const Form> gens, int d,
                                      const PrimeField& field,
                                      const Limits& limits = default_limits()) {
  if (n < 0 || d < 0) throw std::invalid_argument("build_slice_matrix: negative argument");
  for (const Form& g : gens) {
    if (g.n() != n) throw std::invalid_argument("build_slice_matrix: generator in wrong ring");
    if (g.field() != field) throw std::invalid_argument("build_slice_matrix: field mismatch");
  }
  SliceMatrix m;
  m.n = n;
  m.d = d;
  m.field = field;
  m.cols = checked_basis_size(n, d, limits);

  std::uint64_t rows = 0;
  for (const Form& g : gens) {
    if (g.degree() <= d) rows += monomial_count(n, d - g.degree());
  }
  if (rows * static_cast<std::uint64_t>(m.cols) > limits.max_matrix_cells) {
    throw CapacityError("slice matrix " + std::to_string(rows) + "x" +
                            std::to_string(m.cols) + " in degree " + std::to_string(d) +
                            " exceeds cell capacity",
                        rows * static_cast<std::uint64_t>(m.cols), limits.max_matrix_cells);
  }

  const detail::RankTable table(n, d);
  m.row_start.reserve(static_cast<std::size_t>(rows) + 1);
  m.row_start.push_back(0);
  std::vector<int> sum(static_cast<std::size_t>(n) + 1);
  for (const Form& g : gens) {
    if (g.degree() > d) continue;
    const auto mults = enumerate_monomials(n, d - g.degree(), limits);
    const auto terms = enumerate_monomials(n, g.degree(), limits);
    std::vector<std::pair<std::size_t, std::uint32_t>> support;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      if (g.coeff(t)) support.emplace_back(t, g.coeff(t));
    }
    for (const Monomial& mult : mults) {
      for (const auto& [t, c] : support) {
        for (int v = 0; v <= n; ++v) sum[v] = mult.exponents[v] + terms[t].exponents[v];
        m.entries.push_back(SliceMatrix::Entry{
            static_cast<std::uint32_t>(table.rank(sum)), c});
      }
      m.row_start.push_back(m.entries.size());
    }
  }
  return m;
}

// Row-reduction rank over GF(p). Rows are scattered one at a time into a
// dense 64-bit work vector and eliminated against the normalized pivot rows
// found so far; products accumulate unreduced for as many steps as fit in
// 64 bits before a Barrett pass folds the tail back below p.
inline std::size_t matrix_rank(const SliceMatrix& m) {
  const std::size_t cols = m.cols;
  if (cols == 0 || m.rows() == 0) return 0;
  const PrimeField& F = m.field;
  const std::uint32_t p = F.modulus();

  const unsigned __int128 sq =
      static_cast<unsigned __int128>(p - 1) * (p - 1);
  const std::uint64_t budget = sq == 0
      ? std::numeric_limits<std::uint64_t>::max()
      : static_cast<std::uint64_t>(
            ((static_cast<unsigned __int128>(1) << 64) - (std::uint64_t(1) << 33)) / sq);

  std::vector<std::vector<std::uint32_t>> pivots;  // suffix rows, leading 1
  std::vector<std::int32_t> pivot_at(cols, -1);
  std::vector<std::uint64_t> work(cols);
  std::size_t rank = 0;

  for (std::size_t r = 0; r < m.rows() && rank < cols; ++r) {
    const std::size_t b = m.row_start[r];
    const std::size_t e = m.row_start[r + 1];
    if (b == e) continue;
    std::fill(work.begin(), work.end(), 0);
    std::size_t lead = cols;
    for (std::size_t k = b; k < e; ++k) {
      work[m.entries[k].col] += m.entries[k].val;
      lead = std::min(lead, static_cast<std::size_t>(m.entries[k].col));
    }
    std::uint64_t pending = 0;
    for (std::size_t c = lead; c < cols; ++c) {
      const std::uint32_t v = F.reduce64(work[c]);
      work[c] = v;
      if (!v) continue;
      const std::int32_t pi = pivot_at[c];
      if (pi < 0) {
        std::vector<std::uint32_t> row(cols - c);
        const std::uint32_t inv = F.inv(v);
        for (std::size_t k = c; k < cols; ++k) {
          row[k - c] = F.mul(inv, F.reduce64(work[k]));
        }
        pivots.push_back(std::move(row));
        pivot_at[c] = static_cast<std::int32_t>(pivots.size() - 1);
        ++rank;
        break;
      }
      if (pending >= budget) {
        for (std::size_t k = c; k < cols; ++k) work[k] = F.reduce64(work[k]);
        pending = 0;
      }
      const std::uint32_t mult = p - v;
      const std::uint32_t* prow = pivots[static_cast<std::size_t>(pi)].data();
      std::uint64_t* w = work.data() + c;
      const std::size_t len = cols - c;
      for (std::size_t k = 0; k < len; ++k) {
        w[k] += static_cast<std::uint64_t>(mult) * prow[k];
      }
      ++pending;
    }
  }
  return rank;
}

namespace detail {

// Replaces every generator of degree 1 by an exact variable substitution.
// Returns the reduced variable bound and generator list; a nonzero constant
// generator collapses the quotient entirely, reported via unit_ideal.
struct ReducedGenerators {
  int n = 0;
  std::vector<Form> gens;
  bool unit_ideal = false;
};

inline ReducedGenerators eliminate_linear_generators(int n, std::vector<Form> gens,
                                                     const PrimeField& field,
                                                     const Limits& limits) {
  for (;;) {
    std::vector<Form> kept;
    kept.reserve(gens.size());
    for (Form& g : gens) {
      if (g.is_zero()) continue;
      if (g.degree() == 0) return ReducedGenerators{n, {}, true};
      kept.push_back(std::move(g));
    }
    gens = std::move(kept);
    std::size_t li = gens.size();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].degree() == 1) {
        li = i;
        break;
      }
    }
    if (li == gens.size() || n == 0) return ReducedGenerators{n, std::move(gens), false};

    // In degree 1 the grevlex basis lists x0..xn in order, so coefficient
    // rank j is the coefficient of x_j.
    const Form lin = gens[li];
    int j = n;
    while (lin.coeff(static_cast<std::size_t>(j)) == 0) --j;
    const std::uint32_t cinv = field.inv(lin.coeff(static_cast<std::size_t>(j)));
    Form repl(n - 1, 1, field, limits);
    for (int i = 0; i <= n; ++i) {
      if (i == j) continue;
      const std::uint32_t ci = lin.coeff(static_cast<std::size_t>(i));
      if (!ci) continue;
      const std::size_t ri = static_cast<std::size_t>(i < j ? i : i - 1);
      repl.set_coeff(ri, field.neg(field.mul(ci, cinv)));
    }
    std::vector<Form> next;
    next.reserve(gens.size() - 1);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i == li) continue;
      next.push_back(substitute_variable(gens[i], j, repl, limits));
    }
    gens = std::move(next);
    --n;
  }
}

}  // namespace detail

// H(S/(gens), d) for the given generators, by corank of the degree-d slice
// after exact elimination of linear generators.
inline long long hilbert_value(int n, std::span<const Form> gens, int d,
                               const PrimeField& field,
                               const Limits& limits = default_limits()) {
  if (n < 0) throw std::invalid_argument("hilbert_value: negative variable index bound");
  if (d < 0) throw std::invalid_argument("hilbert_value: negative degree");
  std::vector<Form> work(gens.begin(), gens.end());
  for (const Form& g : work) {
    if (g.n() != n) throw std::invalid_argument("hilbert_value: generator in wrong ring");
    if (g.field() != field) throw std::invalid_argument("hilbert_value: field mismatch");
  }
  auto reduced = detail::eliminate_linear_generators(n, std::move(work), field, limits);
  if (reduced.unit_ideal) return 0;
  if (reduced.gens.empty()) {
    const std::uint64_t c = monomial_count(reduced.n, d);
    if (c >= kBinomialSaturated) {
      throw std::overflow_error("hilbert_value: value does not fit in 64 bits");
    }
    return static_cast<long long>(c);
  }
  SliceMatrix slice = build_slice_matrix(reduced.n, reduced.gens, d, field, limits);
  return static_cast<long long>(slice.cols) - static_cast<long long>(matrix_rank(slice));
}

struct GenericValue {
  long long value = 0;
  bool certified_zero = false;  // true exactly when value == 0: a vanishing
                                // corank at one random instance already
                                // proves the generic corank vanishes
  int trials_used = 0;
};

// H(S/I, d) for an ideal of random forms of the given degrees, minimized
// over independently seeded trials. Stops early once a trial certifies 0.
inline GenericValue generic_hilbert_value(int n, std::span<const int> degrees, int d,
                                          int trials, std::uint64_t seed,
                                          const PrimeField& field,
                                          const Limits& limits = default_limits()) {
  if (trials < 1) throw std::invalid_argument("generic_hilbert_value: trials must be positive");
  for (int a : degrees) {
    if (a < 0) throw std::invalid_argument("generic_hilbert_value: negative generator degree");
  }
  GenericValue out;
  out.value = std::numeric_limits<long long>::max();
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    std::vector<Form> gens;
    gens.reserve(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      gens.push_back(Form::random(n, degrees[i], derive_seed(trial_seed, i), field, limits));
    }
    out.value = std::min(out.value, hilbert_value(n, gens, d, field, limits));
    out.trials_used = t + 1;
    if (out.value == 0) break;
  }
  out.certified_zero = (out.value == 0);
  return out;
}

// Hilbert function table H(S/I, k) for k = 0..d_max with random generators,
// minimized per degree over trials. The same generators serve every degree
// within one trial.
inline HilbertVector randomized_hilbert_vector(int n, std::span<const int> degrees, int d_max,
                                               int trials, std::uint64_t seed,
                                               const PrimeField& field,
                                               const Limits& limits = default_limits()) {
  if (d_max < 0) throw std::invalid_argument("randomized_hilbert_vector: negative degree bound");
  if (trials < 1) throw std::invalid_argument("randomized_hilbert_vector: trials must be positive");
  HilbertVector hv;
  hv.nvars = n + 1;
  hv.gen_degrees.assign(degrees.begin(), degrees.end());
  std::sort(hv.gen_degrees.begin(), hv.gen_degrees.end());
  hv.mode = SeriesMode::randomized;
  hv.trials_used = trials;
  hv.values.assign(static_cast<std::size_t>(d_max) + 1,
                   std::numeric_limits<long long>::max());
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    std::vector<Form> gens;
    gens.reserve(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      gens.push_back(Form::random(n, degrees[i], derive_seed(trial_seed, i), field, limits));
    }
    for (int k = 0; k <= d_max; ++k) {
      hv.values[static_cast<std::size_t>(k)] =
          std::min(hv.values[static_cast<std::size_t>(k)],
                   hilbert_value(n, gens, k, field, limits));
    }
  }
  return hv;
}

}  // namespace hyperci
