// Copyright 2026 The abelianfft Authors.
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

#ifndef ABELIANFFT_VERIFY_HPP_
#define ABELIANFFT_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "abelianfft/group.hpp"

namespace abelianfft {

// One property check. A case passes when residual <= limit; worst_ratio is
// the largest residual / limit seen (exact checks use limit 0 and report 0
// or infinity).
struct CheckResult {
  std::string module;
  std::string name;
  std::string range;
  double worst_residual = 0.0;
  double worst_ratio = 0.0;
  bool passed = true;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
};

// Scopes: "all", "complex_core", "group", "circulant", "fourier", "fft", "cli".
bool is_verify_scope(std::string_view scope);

// Runs every property check in `scope`. Stated thresholds are multiplied by
// tolerance / 1e-9, so the default tolerance leaves them unchanged; exact
// checks stay exact. Randomized inputs derive from `seed` only, so the
// report is reproducible. `on_check`, when set, sees each result as it
// completes.
VerifyReport run_verify(std::string_view scope, std::uint64_t seed, double tolerance,
                        const std::function<void(const CheckResult&)>& on_check = {});

std::string format_check(const CheckResult& check);

// Groups used by the property checks: Z_n for n <= 64, Z_2^k for k <= 6,
// Z_2xZ_3, Z_3xZ_4, Z_2xZ_2xZ_9 and the non-canonical Z_3xZ_2.
std::vector<FiniteAbelianGroup> standard_test_groups();

// Canonical groups (prime-power factors, non-decreasing) with at least two
// factors and order <= max_order, plus Z_3xZ_2.
std::vector<FiniteAbelianGroup> multi_factor_groups(std::uint64_t max_order);

}  // namespace abelianfft

#endif  // ABELIANFFT_VERIFY_HPP_
