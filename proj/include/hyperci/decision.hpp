// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0
//
// The containment decision. The generic degree-d hypersurface of P^n
// contains a complete intersection of type (a_1..a_r) exactly when generic
// forms F_1..F_r, G_1..G_r of degrees a_i and d - a_i leave no room in
// degree d, that is H(S/(F_1..F_r, G_1..G_r), d) = 0: the containments
// F = sum F_i G_i realize every hypersurface through a generic complete
// intersection. A vanishing corank at one random instance certifies the
// generic vanishing; a positive corank is generic only with high
// probability, and the report says which case occurred.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hyperci/common.hpp"
#include "hyperci/prime_field.hpp"
#include "hyperci/slice_rank.hpp"

namespace hyperci {

enum class Verdict { Contains, NotContains, TriviallyContains, OutOfRange };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Contains: return "Contains";
    case Verdict::NotContains: return "NotContains";
    case Verdict::TriviallyContains: return "TriviallyContains";
    case Verdict::OutOfRange: return "OutOfRange";
  }
  return "unknown";
}

// A containment instance: generic hypersurface of degree d in P^n asked to
// contain a complete intersection of type (a_1 <= .. <= a_r).
struct CIProfile {
  int n = 0;
  int d = 0;
  std::vector<int> a;

  CIProfile() = default;
  CIProfile(int n_in, int d_in, std::vector<int> a_in)
      : n(n_in), d(d_in), a(std::move(a_in)) {
    if (n < 2) throw std::invalid_argument("CIProfile: n must be at least 2");
    if (d < 1) throw std::invalid_argument("CIProfile: d must be at least 1");
    if (a.empty()) throw std::invalid_argument("CIProfile: empty degree list");
    if (static_cast<int>(a.size()) > n) {
      throw std::invalid_argument(
          "CIProfile: more degrees than the ambient dimension admits");
    }
    for (int ai : a) {
      if (ai < 1) throw std::invalid_argument("CIProfile: degrees must be positive");
    }
    std::sort(a.begin(), a.end());
  }

  int r() const { return static_cast<int>(a.size()); }
};

struct NormalizeResult {
  bool trivially_contains = false;
  CIProfile profile;  // the reduced profile; the input when trivial
};

// Reduction to a normalized profile with a_i <= d/2. A degree equal to d is
// satisfied by the hypersurface itself (checked first); degrees above d
// admit no nonzero forms that divide into the construction and are dropped;
// remaining degrees switch to the complementary cofactor degree when that
// is smaller, which leaves the decision unchanged.
inline NormalizeResult normalize(const CIProfile& profile) {
  for (int ai : profile.a) {
    if (ai == profile.d) return NormalizeResult{true, profile};
  }
  std::vector<int> kept;
  kept.reserve(profile.a.size());
  for (int ai : profile.a) {
    if (ai < profile.d) kept.push_back(std::min(ai, profile.d - ai));
  }
  if (kept.empty()) {
    throw std::invalid_argument(
        "normalize: every requested degree exceeds d; the profile is empty");
  }
  return NormalizeResult{false, CIProfile(profile.n, profile.d, std::move(kept))};
}

struct DecisionReport {
  Verdict verdict = Verdict::NotContains;
  bool certified = false;     // exact answer: trivial containment or corank 0
  long long hilbert_at_d = -1;  // -1 when no rank computation was needed
  int trials_requested = 0;
  int trials_used = 0;
  CIProfile input;
  CIProfile normalized;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
};

// Unconditional decision by rank: no regular-sequence or genericity
// conjecture enters, only the one-sided certification of random modular
// evaluation.
inline DecisionReport decide(const CIProfile& profile, int trials, std::uint64_t seed,
                             const PrimeField& field,
                             const Limits& limits = default_limits()) {
  if (trials < 1) throw std::invalid_argument("decide: trials must be positive");
  DecisionReport report;
  report.input = profile;
  report.trials_requested = trials;
  report.prime = field.modulus();
  report.seed = seed;
  NormalizeResult norm = normalize(profile);
  report.normalized = norm.profile;
  if (norm.trivially_contains) {
    report.verdict = Verdict::TriviallyContains;
    report.certified = true;
    return report;
  }
  std::vector<int> degrees;
  degrees.reserve(2 * norm.profile.a.size());
  for (int ai : norm.profile.a) {
    degrees.push_back(ai);
    degrees.push_back(norm.profile.d - ai);
  }
  GenericValue gv = generic_hilbert_value(norm.profile.n, degrees, norm.profile.d,
                                          trials, seed, field, limits);
  report.hilbert_at_d = gv.value;
  report.trials_used = gv.trials_used;
  report.certified = gv.certified_zero;
  report.verdict = gv.value == 0 ? Verdict::Contains : Verdict::NotContains;
  return report;
}

struct TheoremPrediction {
  Verdict verdict = Verdict::OutOfRange;
  std::string branch;  // "2r<n+1", "2r=n+1", "2r=n+2", or "2r>n+2"
};

// Closed-form classification by (n, r, d) alone, valid for normalized
// profiles. Instances with 2r > n + 2 are outside the classified range.
inline TheoremPrediction classify(const CIProfile& profile) {
  if (profile.d < 2) throw std::invalid_argument("classify: d must be at least 2");
  for (int ai : profile.a) {
    if (2 * ai > profile.d) {
      throw std::invalid_argument("classify: profile is not normalized (need 2 a_i <= d)");
    }
  }
  const int n = profile.n;
  const int d = profile.d;
  const int r = profile.r();
  TheoremPrediction out;
  if (2 * r < n + 1) {
    out.branch = "2r<n+1";
    out.verdict = Verdict::NotContains;
  } else if (2 * r == n + 1) {
    out.branch = "2r=n+1";
    out.verdict = d >= r * (d - 2) + 1 ? Verdict::Contains : Verdict::NotContains;
  } else if (2 * r == n + 2) {
    out.branch = "2r=n+2";
    const bool contains = r == 2 || (r == 3 && d <= 5) || ((r == 4 || r == 5) && d <= 3) ||
                          d == 2;
    out.verdict = contains ? Verdict::Contains : Verdict::NotContains;
  } else {
    out.branch = "2r>n+2";
    out.verdict = Verdict::OutOfRange;
  }
  return out;
}

// Containment criterion for complete intersections of Fano type: whether
// degree-d forms on a generic codimension-r complete intersection of
// degrees below d/2 are forced to vanish by dimension count alone.
inline bool fano_ci_criterion(int n, int d, int r) {
  if (r < 1 || r > n) throw std::invalid_argument("fano_ci_criterion: need 1 <= r <= n");
  if (d <= 2) throw std::invalid_argument("fano_ci_criterion: need d > 2");
  const std::uint64_t lhs = binomial(static_cast<std::int64_t>(n) - r + d, d);
  return lhs <= static_cast<std::uint64_t>(n - r + 1) * static_cast<std::uint64_t>(r);
}

struct VerifyInstance {
  CIProfile profile;
  Verdict decided = Verdict::NotContains;
  Verdict predicted = Verdict::NotContains;
  std::string branch;
  long long hilbert_at_d = -1;
  bool certified = false;
  bool agree = false;
};

struct VerifySkip {
  CIProfile profile;
  std::string reason;
};

struct VerifyReport {
  int n_max = 0;
  int d_max = 0;
  std::vector<VerifyInstance> instances;
  std::vector<VerifySkip> skipped;

  int total() const { return static_cast<int>(instances.size() + skipped.size()); }
  int agreements() const {
    int k = 0;
    for (const auto& i : instances) k += i.agree ? 1 : 0;
    return k;
  }
  int disagreements() const {
    return static_cast<int>(instances.size()) - agreements();
  }
};

namespace detail {

inline std::uint64_t profile_key(const CIProfile& p) {
  std::uint64_t h = derive_seed(0x636f6e7461696e73ull, static_cast<std::uint64_t>(p.n));
  h = derive_seed(h, static_cast<std::uint64_t>(p.d));
  for (int ai : p.a) h = derive_seed(h, static_cast<std::uint64_t>(ai));
  return h;
}

}  // namespace detail

// Sweeps every normalized profile with 2 <= n <= n_max, 2 <= d <= d_max and
// r on the classified boundary (2r = n+1 for odd n, 2r = n+2 for even n),
// comparing the rank decision against the closed form. Instances whose
// matrices exceed the capacity limits are reported as skipped, not errors.
inline VerifyReport verify_theorem(int n_max, int d_max, int trials, std::uint64_t seed,
                                   int jobs, const PrimeField& field,
                                   const Limits& limits = default_limits()) {
  if (n_max < 2 || d_max < 2) {
    throw std::invalid_argument("verify_theorem: need n_max >= 2 and d_max >= 2");
  }
  if (jobs < 1) throw std::invalid_argument("verify_theorem: jobs must be positive");
  std::vector<CIProfile> profiles;
  for (int n = 2; n <= n_max; ++n) {
    const int r = (n % 2 == 1) ? (n + 1) / 2 : (n + 2) / 2;
    if (r > n) continue;
    for (int d = 2; d <= d_max; ++d) {
      const int amax = d / 2;
      std::vector<int> a(static_cast<std::size_t>(r), 1);
      for (;;) {
        profiles.emplace_back(n, d, a);
        int i = r - 1;
        while (i >= 0 && a[static_cast<std::size_t>(i)] == amax) --i;
        if (i < 0) break;
        const int v = a[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < r; ++j) a[static_cast<std::size_t>(j)] = v;
      }
    }
  }

  std::vector<VerifyInstance> results(profiles.size());
  std::vector<std::string> errors(profiles.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= profiles.size()) return;
      VerifyInstance& out = results[i];
      out.profile = profiles[i];
      TheoremPrediction pred = classify(profiles[i]);
      out.predicted = pred.verdict;
      out.branch = pred.branch;
      try {
        DecisionReport rep = decide(profiles[i], trials,
                                    derive_seed(seed, detail::profile_key(profiles[i])),
                                    field, limits);
        out.decided = rep.verdict;
        out.hilbert_at_d = rep.hilbert_at_d;
        out.certified = rep.certified;
        out.agree = (out.decided == out.predicted);
      } catch (const CapacityError& e) {
        errors[i] = e.what();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerifyReport report;
  report.n_max = n_max;
  report.d_max = d_max;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (!errors[i].empty()) {
      report.skipped.push_back(VerifySkip{profiles[i], errors[i]});
    } else {
      report.instances.push_back(std::move(results[i]));
    }
  }
  return report;
}

}  // namespace hyperci
