// Copyright 2026 The Dirloud Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIRLOUD_TESTS_DFT_ORACLE_H_
#define DIRLOUD_TESTS_DFT_ORACLE_H_

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace dirloud::testing {

// Direct O(n^2) one-sided DFT. Deliberately independent of the FFT-backed
// analysis path it cross-checks.
inline std::vector<std::complex<double>> dft_one_sided(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::complex<double> sum = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      const double phase = -2.0 * std::numbers::pi * static_cast<double>(k) *
                           static_cast<double>(t) / static_cast<double>(n);
      sum += x[t] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    out[k] = sum;
  }
  return out;
}

}  // namespace dirloud::testing

#endif  // DIRLOUD_TESTS_DFT_ORACLE_H_
