// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperci {

// How the values of a Hilbert function table were obtained. Exact values
// come from closed-form series manipulation for regular sequences;
// exact_conjectural marks the positive-part truncation applied beyond the
// regular-sequence range; randomized values are ranks of random instances
// over GF(p) and are certified only where they vanish.
enum class SeriesMode { exact, exact_conjectural, randomized };

inline std::string to_string(SeriesMode m) {
  switch (m) {
    case SeriesMode::exact: return "exact";
    case SeriesMode::exact_conjectural: return "exact_conjectural";
    case SeriesMode::randomized: return "randomized";
  }
  return "unknown";
}

struct HilbertVector {
  int nvars = 0;                  // number of ring variables
  std::vector<int> gen_degrees;   // generator degrees, sorted ascending
  std::vector<long long> values;  // values[k] = H(S/I, k) for k = 0..d_max
  SeriesMode mode = SeriesMode::exact;
  int trials_used = 0;            // 0 unless mode == randomized
};

}  // namespace hyperci
