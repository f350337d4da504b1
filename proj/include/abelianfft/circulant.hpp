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

#ifndef ABELIANFFT_CIRCULANT_HPP_
#define ABELIANFFT_CIRCULANT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "abelianfft/complex_core.hpp"
#include "abelianfft/group.hpp"

namespace abelianfft {

// The n x n matrix with entry (i, j) = c[(i - j) mod n]. Only the generator
// is stored.
class CirculantMatrix {
 public:
  explicit CirculantMatrix(CVector generator) : generator_(std::move(generator)) {}

  const CVector& generator() const noexcept { return generator_; }
  std::size_t size() const noexcept { return generator_.size(); }
  Complex entry(std::size_t i, std::size_t j) const;

 private:
  CVector generator_;
};

// The |G| x |G| matrix with entry (x, y) = v(x - y), rows and columns in
// lexicographic element order.
class GCirculant {
 public:
  // Throws kDimension unless generator.size() == group.order().
  GCirculant(FiniteAbelianGroup group, CVector generator);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const CVector& generator() const noexcept { return generator_; }
  Complex entry(const GroupElement& x, const GroupElement& y) const;
  Complex entry_at(std::uint64_t row, std::uint64_t col) const;

 private:
  FiniteAbelianGroup group_;
  CVector generator_;
};

Complex circulant_entry(const CVector& c, std::size_t i, std::size_t j);

DenseMatrix materialize(const CirculantMatrix& c,
                        std::size_t cap = kDefaultOracleCap);
DenseMatrix materialize_g(const GCirculant& c, std::size_t cap = kDefaultOracleCap);

// P with P(i, (i + 1) mod n) = 1, so (P x)_i = x_{i+1}.
DenseMatrix shift_matrix(std::size_t n);

// Coefficients a_m with C = sum_m a_m P^m: a_0 = c_0, a_m = c_{n-m}.
std::vector<Complex> decompose_in_powers_of_p(const CVector& c);

// sum_m coefficients[m] * P^m, densely. Oracle helper.
DenseMatrix polynomial_in_shift(std::span<const Complex> coefficients,
                                std::size_t cap = kDefaultOracleCap);

// O(n^2) circular convolution (c * d)_x = sum_y c[(x - y) mod n] d_y.
CVector naive_convolve(const CVector& c, const CVector& d);

// O(|G|^2) group convolution (v * u)(x) = sum_y v(x - y) u(y). Sums in the
// same order as mat_vec(materialize_g(...), u).
CVector g_naive_convolve(const FiniteAbelianGroup& group, const CVector& v,
                         const CVector& u);

// For G = Z_k x G', returns C_0..C_{k-1} with C_m := the (0, k - m) block
// of C, so that C = sum_i P^i (x) C_{(k - i) mod k}. The generator of C_m is
// v restricted to first coordinate m.
std::vector<GCirculant> block_decompose(const GCirculant& c);

// sum_i P^i (x) blocks[(k - i) mod k], with k = blocks.size(). Dense oracle.
DenseMatrix reconstruct_from_blocks(std::span<const GCirculant> blocks,
                                    std::size_t cap = kDefaultOracleCap);

}  // namespace abelianfft

#endif  // ABELIANFFT_CIRCULANT_HPP_
