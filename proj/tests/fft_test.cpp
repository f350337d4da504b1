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

#include "abelianfft/fft.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <thread>

#include "abelianfft/circulant.hpp"
#include "abelianfft/fourier.hpp"
#include "test_support.hpp"

namespace abelianfft {
namespace {

using testing::thrown_kind;
using Moduli = std::vector<std::uint64_t>;

FiniteAbelianGroup product(Moduli moduli) { return FiniteAbelianGroup::direct_product(moduli); }

TEST(Fft, DenseFourExample) {
  const CVector y = fft(CVector{0.0, 1.0, 0.0, -1.0});
  EXPECT_LE(max_abs_diff(y, CVector{0.0, Complex(0, 2), 0.0, Complex(0, -2)}), 1e-15);
}

TEST(Fft, MatchesLongDoubleOracle) {
  std::mt19937_64 rng(77);
  for (std::uint64_t k = 0; k <= 11; ++k) {
    const std::uint64_t n = std::uint64_t{1} << k;
    const CVector x = testing::random_cvector(rng, n);
    const double limit = 1e-9 * x.max_abs() * std::max<double>(1.0, static_cast<double>(k));
    EXPECT_LE(testing::max_diff(fft(x), testing::reference_transform({n}, x, false)), limit) << n;
  }
}

TEST(Fft, RejectsNonPowerOfTwo) {
  EXPECT_EQ(thrown_kind([] { fft(CVector::ones(6)); }), ErrorKind::kUnsupportedLength);
  EXPECT_EQ(thrown_kind([] { ifft(CVector::ones(3)); }), ErrorKind::kUnsupportedLength);
  EXPECT_EQ(thrown_kind([] { walsh_hadamard(CVector::ones(12)); }),
            ErrorKind::kUnsupportedLength);
  EXPECT_EQ(thrown_kind([] { fast_convolve(CVector::ones(6), CVector::ones(6)); }),
            ErrorKind::kUnsupportedLength);
  EXPECT_EQ(thrown_kind([] { fast_convolve(CVector::ones(4), CVector::ones(8)); }),
            ErrorKind::kDimension);
}

TEST(Fft, InverseRoundTrip) {
  std::mt19937_64 rng(2);
  for (std::uint64_t n = 1; n <= 2048; n *= 2) {
    const CVector x = testing::random_cvector(rng, n);
    EXPECT_LE(max_abs_diff(ifft(fft(x)), x), 1e-10);
    EXPECT_LE(max_abs_diff(ifft(x), apply_D(product({n}), x)), 1e-12);
  }
}

TEST(Fft, RealInputConjugateSymmetric) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> dist(-1, 1);
  std::vector<double> re(256);
  for (double& v : re) v = dist(rng);
  const CVector y = fft(CVector::from_real(re));
  for (std::size_t k = 1; k < 256; ++k) EXPECT_LE(std::abs(y[k] - std::conj(y[256 - k])), 1e-10);
}

TEST(Twiddle, TableMatchesRootsAndIsShared) {
  const TwiddleTable& t = twiddle_table(16);
  ASSERT_EQ(t.powers().size(), 8u);
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_EQ(t.powers()[k], root_of_unity(16, static_cast<std::int64_t>(k)));
  }
  EXPECT_EQ(&twiddle_table(16), &t);
  EXPECT_EQ(thrown_kind([] { twiddle_table(12); }), ErrorKind::kUnsupportedLength);
}

TEST(Twiddle, ConcurrentFirstUseYieldsOneTable) {
  constexpr int kThreads = 8;
  std::vector<const TwiddleTable*> seen(kThreads);
  std::vector<std::thread> threads;
  for (int i = 0; i < kThreads; ++i) {
    threads.emplace_back([&seen, i] { seen[i] = &twiddle_table(std::uint64_t{1} << 17); });
  }
  for (auto& th : threads) th.join();
  for (int i = 1; i < kThreads; ++i) EXPECT_EQ(seen[i], seen[0]);
}

TEST(Fft, ConcurrentTransformsAgree) {
  std::mt19937_64 rng(13);
  const CVector x = testing::random_cvector(rng, 1 << 14);
  const CVector expected = fft(x);
  std::vector<std::thread> threads;
  std::vector<int> ok(6, 0);
  for (int i = 0; i < 6; ++i) {
    threads.emplace_back([&, i] { ok[i] = fft(x) == expected; });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) EXPECT_TRUE(v);
}

TEST(Convolution, FastMatchesSchoolbook) {
  EXPECT_LE(max_abs_diff(fast_convolve(CVector{1.0, 1.0, 0.0, 0.0}, CVector{1.0, 1.0, 0.0, 0.0}),
                         CVector{1.0, 2.0, 1.0, 0.0}),
            1e-15);
  std::mt19937_64 rng(14);
  for (std::uint64_t n = 1; n <= 512; n *= 2) {
    const CVector c = testing::random_cvector(rng, n);
    const CVector d = testing::random_cvector(rng, n);
    const auto ref = testing::reference_circular(c, d);
    EXPECT_LE(testing::max_diff(fast_convolve(c, d), ref), 1e-8 * std::max(1.0, CVector(ref).max_abs()));
  }
}

TEST(Convolution, LinearIsPolynomialProduct) {
  EXPECT_LE(max_abs_diff(linear_convolve(CVector{1.0, 2.0, 3.0}, CVector{4.0, 5.0}),
                         CVector{4.0, 13.0, 22.0, 15.0}),
            1e-13);
  std::mt19937_64 rng(15);
  const CVector a = testing::random_cvector(rng, 37);
  const CVector b = testing::random_cvector(rng, 20);
  std::vector<Complex> ref(56, 0.0);
  for (std::size_t i = 0; i < 37; ++i) {
    for (std::size_t j = 0; j < 20; ++j) ref[i + j] += a[i] * b[j];
  }
  EXPECT_LE(testing::max_diff(linear_convolve(a, b), ref), 1e-12);
}

TEST(Convolution, TheoremWithNaiveTransforms) {
  std::mt19937_64 rng(16);
  for (std::uint64_t n : {1u, 5u, 12u, 64u}) {
    const FiniteAbelianGroup g = product({n});
    const CVector c = testing::random_cvector(rng, n);
    const CVector d = testing::random_cvector(rng, n);
    const CVector lhs = apply_D(g, naive_convolve(c, d));
    const CVector prod = hadamard(apply_D(g, c), apply_D(g, d));
    std::vector<Complex> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = static_cast<double>(n) * prod[i];
    EXPECT_LE(max_abs_diff(lhs, CVector(rhs)), 1e-9);
  }
}

TEST(GroupFft, PlanDescription) {
  const PlanG plan = make_plan(product({3, 4}));
  EXPECT_EQ(plan.describe(), "Z3:dense Z4:radix2");
  EXPECT_EQ(plan.strategies, (std::vector<FactorStrategy>{FactorStrategy::kDense,
                                                          FactorStrategy::kRadix2}));
}

TEST(GroupFft, MatchesLongDoubleOracle) {
  std::mt19937_64 rng(17);
  for (const Moduli& m : std::vector<Moduli>{{3, 4}, {3, 2}, {2, 2, 2, 2}, {8}, {7}, {5, 8}}) {
    const FiniteAbelianGroup g = product(m);
    const CVector x = testing::random_cvector(rng, g.order());
    EXPECT_LE(testing::max_diff(g_fft(g, x, Direction::kSynthesis),
                                testing::reference_transform(m, x, false)),
              1e-10);
    EXPECT_LE(testing::max_diff(g_fft(g, x, Direction::kAnalysis),
                                testing::reference_transform(m, x, true)),
              1e-10);
  }
  EXPECT_EQ(thrown_kind([] { g_fft(product({3, 4}), CVector::ones(11), Direction::kAnalysis); }),
            ErrorKind::kDimension);
}

TEST(GroupFft, TrivialGroup) {
  EXPECT_EQ(g_fft(FiniteAbelianGroup(), CVector{Complex(2, 3)}, Direction::kAnalysis),
            (CVector{Complex(2, 3)}));
}

TEST(WalshHadamard, SmallExampleAndInvolution) {
  EXPECT_EQ(walsh_hadamard(CVector{1.0, 2.0, 3.0, 4.0}), (CVector{10.0, -2.0, -4.0, 0.0}));
  const CVector x{3.0, -7.0, 11.0, 0.0, 5.0, 1.0, -2.0, 8.0};
  const CVector twice = walsh_hadamard(walsh_hadamard(x));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(twice[i], 8.0 * x[i]);
}

TEST(Engines, TransformNaiveAndFastAgree) {
  std::mt19937_64 rng(18);
  for (const Moduli& m : std::vector<Moduli>{{3, 2}, {8}, {6}, {2, 2, 3}}) {
    const FiniteAbelianGroup g = product(m);
    const CVector x = testing::random_cvector(rng, g.order());
    for (Direction dir : {Direction::kAnalysis, Direction::kSynthesis}) {
      const auto naive = transform(g, x, dir, Engine::kNaive);
      const auto fast = transform(g, x, dir, Engine::kFast);
      EXPECT_EQ(naive.method, "naive dense");
      EXPECT_LE(max_abs_diff(naive.result, fast.result), 1e-12);
    }
  }
}

TEST(Engines, ConvolveRoutes) {
  std::mt19937_64 rng(19);
  const CVector c8 = testing::random_cvector(rng, 8);
  const CVector d8 = testing::random_cvector(rng, 8);
  const auto fast = convolve(product({8}), c8, d8, Engine::kFast);
  EXPECT_EQ(fast.method, "fft radix2");
  EXPECT_FALSE(fast.notice.has_value());
  EXPECT_LE(max_abs_diff(fast.result, convolve(product({8}), c8, d8, Engine::kNaive).result),
            1e-12);

  const auto six = convolve(product({6}), CVector::ones(6), CVector::delta(6, 1), Engine::kFast);
  EXPECT_TRUE(six.notice.has_value());
  EXPECT_EQ(six.result, CVector::ones(6));

  const FiniteAbelianGroup z3z2 = product({3, 2});
  const auto mixed = convolve(z3z2, CVector{1, 2, 3, 4, 5, 6}, CVector::delta(6, 1), Engine::kFast);
  EXPECT_FALSE(mixed.notice.has_value());
  EXPECT_LE(max_abs_diff(mixed.result, CVector{2, 1, 4, 3, 6, 5}), 1e-12);
}

TEST(Radix2, FourPointFactorsAsDisplayed) {
  const Radix2Factorization f = radix2_factorization(4);
  const Complex i(0, 1);
  EXPECT_EQ(f.butterfly, DenseMatrix(4, 4, {1, 0, 1, 0,   //
                                            0, 1, 0, i,   //
                                            1, 0, -1, 0,  //
                                            0, 1, 0, -i}));
  EXPECT_EQ(f.half_transforms, DenseMatrix(4, 4, {1, 1, 0, 0,   //
                                                  1, -1, 0, 0,  //
                                                  0, 0, 1, 1,   //
                                                  0, 0, 1, -1}));
  EXPECT_EQ(f.even_odd, DenseMatrix(4, 4, {1, 0, 0, 0,  //
                                           0, 0, 1, 0,  //
                                           0, 1, 0, 0,  //
                                           0, 0, 0, 1}));
  const DenseMatrix product4 = mat_mul(mat_mul(f.butterfly, f.half_transforms), f.even_odd);
  const DenseMatrix f4(4, 4, {1, 1, 1, 1, 1, i, -1, -i, 1, -1, 1, -1, 1, -i, -1, i});
  EXPECT_LE(max_abs_diff(product4, f4), 1e-12);
  EXPECT_EQ(thrown_kind([] { radix2_factorization(6); }), ErrorKind::kUnsupportedLength);
}

TEST(Bench, RowsAndSkips) {
  const std::uint64_t sizes[] = {16, 32, 64};
  BenchOptions options;
  options.oracle_cap = 32;
  options.repeats = 1;
  options.min_sample_seconds = 0.0;
  const BenchReport report = bench(sizes, options);
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_TRUE(report.rows[0].naive_seconds.has_value());
  EXPECT_TRUE(report.rows[1].naive_seconds.has_value());
  EXPECT_FALSE(report.rows[2].naive_seconds.has_value());
  EXPECT_FALSE(report.rows[0].doubling_ratio.has_value());
  EXPECT_TRUE(report.rows[2].doubling_ratio.has_value());
  for (const auto& row : report.rows) EXPECT_GT(row.fft_seconds, 0.0);

  const std::uint64_t descending[] = {32, 16};
  EXPECT_EQ(thrown_kind([&] { bench(descending); }), ErrorKind::kInvalidArgument);
  const std::uint64_t odd[] = {12};
  EXPECT_EQ(thrown_kind([&] { bench(odd); }), ErrorKind::kInvalidArgument);
}

}  // namespace
}  // namespace abelianfft
