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

#ifndef ABELIANFFT_FOURIER_HPP_
#define ABELIANFFT_FOURIER_HPP_

// Dense reference transforms. Conventions used throughout the library:
//
//   F(x, g) = chi_g(x) = e(sum_i g_i x_i / k_i)   columns are characters
//   synthesis  y = F x                            (apply_F)
//   analysis   y = (1/|G|) F^* x                  (apply_D)
//
// Analysis carries the 1/|G| factor, the reverse of most DSP libraries.

#include <cstddef>
#include <cstdint>
#include <span>

#include "abelianfft/complex_core.hpp"
#include "abelianfft/group.hpp"

namespace abelianfft {

// Eigenvalues (Lambda_g) of a G-circulant, in lexicographic g order.
struct Spectrum {
  FiniteAbelianGroup group;
  CVector values;
};

// Column k of F_n: entry j is w_n^{jk}.
CVector fourier_column(std::uint64_t n, std::uint64_t k);

// chi_g over all x in lexicographic order, from the closed-form formula.
CVector character(const FiniteAbelianGroup& group, const GroupElement& g);

// chi_g built as chi_{g_1} (x) chi_{g'} recursively from per-factor Fourier
// columns. Independent of character(); the two must agree.
CVector character_by_kronecker(const FiniteAbelianGroup& group, const GroupElement& g);

// chi_g(x) for a single x.
Complex character_value(const GroupElement& g, const GroupElement& x);

// (-1)^{sum_{i in S} x_i} over Z_2^n. subset holds 1-based coordinates.
CVector boolean_character(std::size_t n, std::span<const std::size_t> subset);

DenseMatrix dft_matrix(const FiniteAbelianGroup& group,
                       std::size_t cap = kDefaultOracleCap);

// O(|G|^2) oracles. None of them materializes F.
CVector apply_F(const FiniteAbelianGroup& group, const CVector& x);
CVector apply_D(const FiniteAbelianGroup& group, const CVector& x);
CVector apply_F_inverse(const FiniteAbelianGroup& group, const CVector& y);

// Lambda = conj(F_n) c.
Spectrum circulant_eigenvalues(const CVector& c);

// Lambda_g = sum_x v(x) conj(chi_g(x)).
Spectrum g_circulant_eigenvalues(const FiniteAbelianGroup& group, const CVector& v);

// max |C - F diag(Lambda) (1/|G|) F^*| over all entries, computed densely.
double diagonalize_check(const FiniteAbelianGroup& group, const CVector& v,
                         std::size_t cap = kDefaultOracleCap);

}  // namespace abelianfft

#endif  // ABELIANFFT_FOURIER_HPP_
