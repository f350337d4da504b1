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

#include "abelianfft/verify.hpp"

#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

namespace abelianfft {
namespace {

using testing::thrown_kind;

std::string render(const VerifyReport& report) {
  std::string out;
  for (const auto& c : report.checks) out += format_check(c) + "\n";
  return out;
}

TEST(Verify, GroupScopeIsDeterministicPerSeed) {
  const VerifyReport a = run_verify("group", 7, 1e-9);
  const VerifyReport b = run_verify("group", 7, 1e-9);
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(render(a), render(b));
  EXPECT_EQ(a.seed, 7u);
}

TEST(Verify, CircularScopePassesAndStreams) {
  std::vector<std::string> streamed;
  const VerifyReport r =
      run_verify("circulant", 3, 1e-9, [&](const CheckResult& c) { streamed.push_back(c.name); });
  EXPECT_TRUE(r.passed()) << render(r);
  ASSERT_EQ(streamed.size(), r.checks.size());
  for (std::size_t i = 0; i < streamed.size(); ++i) EXPECT_EQ(streamed[i], r.checks[i].name);
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.module, "circulant");
    EXPECT_FALSE(c.range.empty());
  }
}

TEST(Verify, ToleranceRescalesLimits) {
  const VerifyReport strict = run_verify("circulant", 1, 1e-30);
  EXPECT_FALSE(strict.passed());
  std::set<std::string> failed;
  for (const auto& c : strict.checks) {
    if (!c.passed) failed.insert(c.name);
  }
  // Exact checks do not depend on the tolerance.
  EXPECT_FALSE(failed.count("g_naive_convolve equals dense G-circulant product"));
  EXPECT_TRUE(failed.count("circular convolution commutes"));
}

TEST(Verify, RejectsBadArguments) {
  EXPECT_EQ(thrown_kind([] { run_verify("nope", 1, 1e-9); }), ErrorKind::kInvalidArgument);
  EXPECT_EQ(thrown_kind([] { run_verify("all", 1, 0.0); }), ErrorKind::kInvalidArgument);
  EXPECT_TRUE(is_verify_scope("fft"));
  EXPECT_FALSE(is_verify_scope("FFT"));
}

TEST(Verify, FormatNamesOutcome) {
  CheckResult c{"fft", "fft oracle equivalence", "n <= 4096", 1e-3, 5.0, false};
  const std::string line = format_check(c);
  EXPECT_EQ(line.rfind("FAIL", 0), 0u);
  EXPECT_NE(line.find("fft oracle equivalence"), std::string::npos);
}

TEST(Verify, TestGroupSets) {
  const auto groups = standard_test_groups();
  std::set<std::string> names;
  for (const auto& g : groups) names.insert(g.to_string());
  for (const char* want : {"Z1", "Z64", "Z2xZ2", "Z2xZ2xZ2xZ2xZ2xZ2", "Z2xZ3", "Z3xZ4",
                           "Z2xZ2xZ9", "Z3xZ2"}) {
    EXPECT_TRUE(names.count(want)) << want;
  }
  std::set<std::string> multi;
  for (const auto& g : multi_factor_groups(8)) multi.insert(g.to_string());
  EXPECT_EQ(multi, (std::set<std::string>{"Z2xZ2", "Z2xZ3", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ2"}));
}

}  // namespace
}  // namespace abelianfft
