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

#include "abelianfft/fourier.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "abelianfft/circulant.hpp"
#include "test_support.hpp"

namespace abelianfft {
namespace {

using testing::thrown_kind;
using Moduli = std::vector<std::uint64_t>;

FiniteAbelianGroup product(Moduli moduli) { return FiniteAbelianGroup::direct_product(moduli); }

const std::vector<Moduli>& sample_groups() {
  static const std::vector<Moduli> groups = {{1},    {2},       {5},    {8},       {12},
                                             {3, 2}, {2, 3},    {3, 4}, {2, 2, 9}, {2, 2, 2, 2},
                                             {6, 4}, {4, 2, 5}};
  return groups;
}

TEST(Characters, FourierColumnOfZ4) {
  EXPECT_EQ(fourier_column(4, 1), (CVector{1.0, Complex(0, 1), -1.0, Complex(0, -1)}));
  EXPECT_EQ(thrown_kind([] { fourier_column(4, 4); }), ErrorKind::kInvalidArgument);
}

TEST(Characters, ShiftEigenvector) {
  for (std::uint64_t n : {3u, 5u, 8u, 12u}) {
    const DenseMatrix p = shift_matrix(n);
    for (std::uint64_t k = 0; k < n; ++k) {
      const CVector chi = fourier_column(n, k);
      const Complex w = root_of_unity(n, static_cast<std::int64_t>(k));
      std::vector<Complex> scaled(n);
      for (std::size_t i = 0; i < n; ++i) scaled[i] = w * chi[i];
      EXPECT_LE(max_abs_diff(mat_vec(p, chi), CVector(scaled)), 1e-12);
    }
  }
}

TEST(Characters, SelfInnerProductIsN) {
  for (std::uint64_t n : {1u, 3u, 7u, 16u}) {
    for (std::uint64_t k = 0; k < n; ++k) {
      const CVector chi = fourier_column(n, k);
      EXPECT_LE(std::abs(inner_product(chi, chi) - Complex(static_cast<double>(n))), 1e-12);
    }
  }
}

TEST(Characters, BooleanCube) {
  const FiniteAbelianGroup g = product({2, 2});
  const CVector expected{1.0, -1.0, -1.0, 1.0};
  EXPECT_EQ(character(g, GroupElement(g, {1, 1})), expected);
  const std::size_t both[] = {1, 2};
  EXPECT_EQ(boolean_character(2, both), expected);
  const std::size_t second[] = {2};
  EXPECT_EQ(boolean_character(2, second), (CVector{1.0, -1.0, 1.0, -1.0}));
  const std::size_t bad[] = {3};
  EXPECT_EQ(thrown_kind([&] { boolean_character(2, bad); }), ErrorKind::kInvalidArgument);
}

TEST(Characters, MatchLongDoubleOracle) {
  for (const Moduli& m : sample_groups()) {
    const FiniteAbelianGroup g = product(m);
    Moduli kept;
    for (auto k : m) {
      if (k > 1) kept.push_back(k);
    }
    const DenseMatrix f = dft_matrix(g);
    for (std::uint64_t x = 0; x < g.order(); ++x) {
      for (std::uint64_t h = 0; h < g.order(); ++h) {
        const auto ref = testing::reference_character(kept, h, x);
        EXPECT_LE(std::abs(f(x, h) - Complex(static_cast<double>(ref.real()),
                                             static_cast<double>(ref.imag()))),
                  1e-15);
      }
    }
  }
}

TEST(Characters, KroneckerAndClosedFormAgree) {
  for (const Moduli& m : sample_groups()) {
    const FiniteAbelianGroup g = product(m);
    for (const GroupElement& h : enumerate(g)) {
      EXPECT_LE(max_abs_diff(character(g, h), character_by_kronecker(g, h)), 1e-12);
    }
  }
}

TEST(Characters, SingleValueMatchesVector) {
  const FiniteAbelianGroup g = product({3, 4});
  const GroupElement h(g, {2, 3});
  const CVector chi = character(g, h);
  for (const GroupElement& x : enumerate(g)) {
    EXPECT_EQ(character_value(h, x), chi[index_of(x)]);
  }
  EXPECT_EQ(thrown_kind([&] { character_value(h, GroupElement(product({12}), {1})); }),
            ErrorKind::kInvalidArgument);
}

TEST(Characters, DistinctGroupsOfOrderSixDiffer) {
  // Z_6 and Z_3 x Z_2 are isomorphic but indexed differently.
  EXPECT_NE(dft_matrix(product({6})), dft_matrix(product({3, 2})));
}

TEST(Transforms, MatchLongDoubleOracle) {
  std::mt19937_64 rng(8);
  for (const Moduli& m : sample_groups()) {
    const FiniteAbelianGroup g = product(m);
    Moduli kept;
    for (auto k : m) {
      if (k > 1) kept.push_back(k);
    }
    const CVector x = testing::random_cvector(rng, g.order());
    EXPECT_LE(testing::max_diff(apply_F(g, x), testing::reference_transform(kept, x, false)),
              1e-12);
    EXPECT_LE(testing::max_diff(apply_D(g, x), testing::reference_transform(kept, x, true)),
              1e-13);
    EXPECT_LE(max_abs_diff(apply_F_inverse(g, apply_F(g, x)), x), 1e-10);
  }
}

TEST(Transforms, AnalysisOfDeltaIsUniform) {
  const FiniteAbelianGroup g = product({4});
  EXPECT_EQ(apply_F(g, CVector::delta(4, 0)), CVector::ones(4));
  EXPECT_EQ(apply_D(g, CVector::ones(4)), CVector::delta(4, 0));
  EXPECT_EQ(thrown_kind([&] { apply_F(g, CVector::ones(3)); }), ErrorKind::kDimension);
}

TEST(Eigenvalues, ZThreeExample) {
  const Spectrum s = circulant_eigenvalues(CVector{1.0, 2.0, 3.0});
  EXPECT_EQ(s.values[0], Complex(6.0));
  EXPECT_LE(std::abs(s.values[1] - Complex(-1.5, std::sqrt(3.0) / 2)), 1e-14);
  EXPECT_LE(std::abs(s.values[2] - Complex(-1.5, -std::sqrt(3.0) / 2)), 1e-14);
}

TEST(Eigenvalues, BruteForceRatioOnZTwoSquared) {
  const FiniteAbelianGroup g = product({2, 2});
  const CVector v{3.0, -1.0, 4.0, 2.0};
  const DenseMatrix c = materialize_g(GCirculant(g, v));
  const Spectrum s = g_circulant_eigenvalues(g, v);
  for (const GroupElement& h : enumerate(g)) {
    const CVector chi = character(g, h);
    const CVector image = mat_vec(c, chi);
    for (std::size_t x = 0; x < 4; ++x) {
      EXPECT_LE(std::abs(image[x] / chi[x] - s.values[index_of(h)]), 1e-14);
    }
  }
}

TEST(Eigenvalues, EigenRelationRandom) {
  std::mt19937_64 rng(12);
  for (const Moduli& m : sample_groups()) {
    const FiniteAbelianGroup g = product(m);
    const CVector v = testing::random_cvector(rng, g.order());
    const DenseMatrix c = materialize_g(GCirculant(g, v));
    const Spectrum s = g_circulant_eigenvalues(g, v);
    for (const GroupElement& h : enumerate(g)) {
      const CVector chi = character_by_kronecker(g, h);
      std::vector<Complex> rhs(chi.size());
      for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = s.values[index_of(h)] * chi[i];
      EXPECT_LE(max_abs_diff(mat_vec(c, chi), CVector(rhs)), 1e-9);
    }
  }
}

TEST(Diagonalization, Residuals) {
  EXPECT_LE(diagonalize_check(product({3}), CVector{1.0, 2.0, 3.0}), 1e-10);
  std::mt19937_64 rng(4);
  EXPECT_LE(diagonalize_check(product({2, 4}), testing::random_cvector(rng, 8)), 1e-10);
  EXPECT_EQ(thrown_kind([] { diagonalize_check(product({8}), CVector::ones(8), 4); }),
            ErrorKind::kResourceLimit);
}

TEST(DftMatrix, SymmetricForCyclic) {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const DenseMatrix f = dft_matrix(product({n}));
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = 0; j < n; ++j) EXPECT_EQ(f(i, j), f(j, i));
    }
  }
}

TEST(DftMatrix, BooleanEntriesExactlyPlusMinusOne) {
  const DenseMatrix f = dft_matrix(product({2, 2, 2, 2, 2}));
  for (const Complex& z : f.entries()) {
    EXPECT_TRUE(z == Complex(1.0) || z == Complex(-1.0));
  }
}

}  // namespace
}  // namespace abelianfft
