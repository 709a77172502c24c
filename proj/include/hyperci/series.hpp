// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0
//
// Closed-form Hilbert series. For m <= nvars generic forms the quotient is a
// complete intersection and prod (1 - t^{a_i}) / (1 - t)^{nvars} is exact;
// beyond that range the positive-part truncation of the same series is the
// conjectured (and here clearly labeled) generic value. The Gorenstein
// profile packages the symmetric Hilbert function of the Artinian algebra
// attached to a containment instance together with its shape checks.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperci/common.hpp"
#include "hyperci/hilbert_vector.hpp"

namespace hyperci {

struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

namespace detail {

// Coefficients 0..d_max of prod (1 - t^{a}) / (1 - t)^{nvars}, computed by
// starting from the binomial series of 1 / (1 - t)^{nvars} and folding in
// one numerator factor at a time.
inline std::vector<long long> ci_series_raw(int nvars, std::span<const int> degrees,
                                            int d_max) {
  if (nvars < 1) throw std::invalid_argument("series: nvars must be positive");
  if (d_max < 0) throw std::invalid_argument("series: negative degree bound");
  for (int a : degrees) {
    if (a < 1) throw std::invalid_argument("series: generator degrees must be positive");
  }
  std::vector<long long> h(static_cast<std::size_t>(d_max) + 1);
  for (int k = 0; k <= d_max; ++k) {
    std::uint64_t c = binomial(static_cast<std::int64_t>(k) + nvars - 1, nvars - 1);
    if (c >= kBinomialSaturated) {
      throw std::overflow_error("series: coefficient does not fit in 64 bits");
    }
    h[static_cast<std::size_t>(k)] = static_cast<long long>(c);
  }
  for (int a : degrees) {
    for (int k = d_max; k >= a; --k) {
      h[static_cast<std::size_t>(k)] -= h[static_cast<std::size_t>(k - a)];
    }
  }
  return h;
}

}  // namespace detail

// Exact Hilbert function of a complete intersection of forms of the given
// degrees in nvars variables; requires at most nvars degrees.
inline HilbertVector ci_series(int nvars, std::span<const int> degrees, int d_max) {
  if (static_cast<int>(degrees.size()) > nvars) {
    throw std::invalid_argument(
        "ci_series: more generators than variables is not a complete intersection");
  }
  HilbertVector hv;
  hv.nvars = nvars;
  hv.gen_degrees.assign(degrees.begin(), degrees.end());
  std::sort(hv.gen_degrees.begin(), hv.gen_degrees.end());
  hv.values = detail::ci_series_raw(nvars, degrees, d_max);
  hv.mode = SeriesMode::exact;
  return hv;
}

// Positive-part truncation of the same series: the first nonpositive
// coefficient and everything after it become zero.
inline HilbertVector froberg_series(int nvars, std::span<const int> degrees, int d_max) {
  HilbertVector hv;
  hv.nvars = nvars;
  hv.gen_degrees.assign(degrees.begin(), degrees.end());
  std::sort(hv.gen_degrees.begin(), hv.gen_degrees.end());
  hv.values = detail::ci_series_raw(nvars, degrees, d_max);
  bool cut = false;
  for (auto& v : hv.values) {
    if (cut || v <= 0) {
      cut = true;
      v = 0;
    }
  }
  hv.mode = SeriesMode::exact_conjectural;
  return hv;
}

// Center of symmetry of the Hilbert function of the Artinian complete
// intersection in 2r - 1 variables with generator degrees
// (a_1..a_r, d - a_r, .., d - a_2): half the socle degree
// (r - 1) d + a_1 - 2r + 1.
inline Rational symmetry_center(int r, int d, int a1) {
  if (r < 2) throw std::invalid_argument("symmetry_center: r must be at least 2");
  if (a1 < 1 || 2 * a1 > d) {
    throw std::invalid_argument("symmetry_center: need 1 <= a1 <= d/2");
  }
  return Rational(static_cast<long long>(r - 1) * d + a1 - 2 * r + 1, 2);
}

// Left side minus right side of the containment obstruction count
// C(a + 2r - 2, a + 1) >= (2r - 1)(2r - 2) for equigenerated profiles;
// nonnegative values make the corank argument go through.
inline long long star_lhs(int a, int r) {
  if (a < 1) throw std::invalid_argument("star_lhs: a must be positive");
  if (r < 2) throw std::invalid_argument("star_lhs: r must be at least 2");
  const std::uint64_t b = binomial(static_cast<std::int64_t>(a) + 2 * r - 2, a + 1);
  if (b >= kBinomialSaturated) throw std::overflow_error("star_lhs: overflow");
  return static_cast<long long>(b) -
         static_cast<long long>(2 * r - 1) * (2 * r - 2);
}

// Values H(A, a) and H(A, a + 1) for the equigenerated algebra
// A = k[y_1..y_{2r-1}]/(2r - 1 forms of degree a), in closed form. The
// closed forms assume a >= 2; in_hypothesis records that.
struct EquigeneratedValues {
  long long at_a = 0;
  long long at_a_plus_1 = 0;
  bool in_hypothesis = false;
};

inline EquigeneratedValues equigenerated_values(int a, int r) {
  if (a < 1) throw std::invalid_argument("equigenerated_values: a must be positive");
  if (r < 2) throw std::invalid_argument("equigenerated_values: r must be at least 2");
  const std::uint64_t b0 = binomial(static_cast<std::int64_t>(a) + 2 * r - 2, a);
  const std::uint64_t b1 = binomial(static_cast<std::int64_t>(a) + 2 * r - 1, a + 1);
  if (b0 >= kBinomialSaturated || b1 >= kBinomialSaturated) {
    throw std::overflow_error("equigenerated_values: overflow");
  }
  EquigeneratedValues out;
  out.at_a = static_cast<long long>(b0) - (2 * r - 1);
  out.at_a_plus_1 = static_cast<long long>(b1) -
                    static_cast<long long>(2 * r - 1) * (2 * r - 1);
  out.in_hypothesis = (a >= 2);
  return out;
}

// The Artinian Gorenstein algebra attached to a containment instance:
// A = k[y_1..y_{2r-1}] / (f_1..f_r, g_2..g_r) with deg f_i = a_i and
// deg g_i = d - a_i, for a normalized profile with 2 <= a_1 <= .. <= a_r
// and 2 a_r <= d. 2r - 1 generic forms in 2r - 1 variables form a regular
// sequence, so the Hilbert function is exact.
struct GorensteinProfile {
  int r = 0;
  int d = 0;
  std::vector<int> a;
  std::vector<long long> hf;  // H(A, k) for k = 0..socle+1
  int socle = 0;              // top nonzero degree, equals 2c
  Rational c;                 // center of symmetry
  Rational alpha;             // c - a_1
  Rational beta;              // d - c
  bool general_case = false;  // parameter range where shape checks (3)-(5) apply
  bool symmetric = false;
  bool unimodal = false;
  bool strictly_increasing_to_a1 = false;
  bool middle_exceeds_a1 = false;
  bool tail_balanced = false;
  bool m_surjective = false;  // H(A, a_1) >= H(A, d)
};

inline GorensteinProfile gorenstein_profile(int r, int d, std::span<const int> a_in) {
  if (r < 2) throw std::invalid_argument("gorenstein_profile: r must be at least 2");
  if (static_cast<int>(a_in.size()) != r) {
    throw std::invalid_argument("gorenstein_profile: need exactly r degrees");
  }
  std::vector<int> a(a_in.begin(), a_in.end());
  std::sort(a.begin(), a.end());
  if (a.front() < 2) {
    throw std::invalid_argument(
        "gorenstein_profile: a_1 = 1 collapses a variable; use the reduced profile instead");
  }
  if (2 * a.back() > d) {
    throw std::invalid_argument("gorenstein_profile: need 2 a_i <= d for every i");
  }

  GorensteinProfile out;
  out.r = r;
  out.d = d;
  out.a = a;
  const int a1 = a.front();
  out.socle = (r - 1) * d + a1 - 2 * r + 1;
  out.c = symmetry_center(r, d, a1);
  out.alpha = Rational(out.socle - 2LL * a1, 2);
  out.beta = Rational(2LL * d - out.socle, 2);

  const int nvars = 2 * r - 1;
  std::vector<int> degrees(a.begin(), a.end());
  for (int i = r - 1; i >= 1; --i) degrees.push_back(d - a[static_cast<std::size_t>(i)]);
  out.hf = detail::ci_series_raw(nvars, degrees, out.socle + 1);

  auto at = [&](long long k) -> long long {
    if (k < 0 || k > out.socle + 1) return 0;
    return out.hf[static_cast<std::size_t>(k)];
  };

  out.general_case = (r == 2 && a1 >= 5) || (r == 3 && a1 >= 3) ||
                     (r == 3 && a1 == 2 && d != 4) || (r > 3 && a1 >= 2);

  out.symmetric = at(out.socle + 1) == 0;
  for (int i = 0; i <= out.socle && out.symmetric; ++i) {
    if (at(i) != at(out.socle - i)) out.symmetric = false;
  }

  out.unimodal = true;
  bool falling = false;
  for (int i = 0; i <= out.socle; ++i) {
    if (at(i + 1) < at(i)) falling = true;
    else if (falling && at(i + 1) > at(i)) out.unimodal = false;
  }

  out.strictly_increasing_to_a1 = true;
  for (int i = 0; i <= a1; ++i) {
    if (!(at(i) < at(i + 1))) out.strictly_increasing_to_a1 = false;
  }

  out.middle_exceeds_a1 = true;
  for (int i = a1 + 1; 2 * i <= out.socle; ++i) {
    if (!(at(a1) < at(i))) out.middle_exceeds_a1 = false;
  }

  out.tail_balanced = true;
  for (int i = out.socle / 2 + 1; i <= out.socle + 1; ++i) {
    const bool drops_below = at(a1) > at(i);
    const bool past_mirror = (out.socle - 2LL * a1) < (2LL * i - out.socle);
    if (drops_below != past_mirror) out.tail_balanced = false;
  }

  out.m_surjective = at(a1) >= at(d);
  return out;
}

}  // namespace hyperci
