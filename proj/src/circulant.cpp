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

#include "abelianfft/circulant.hpp"

#include <string>
#include <utility>

#include "abelianfft/error.hpp"

namespace abelianfft {

Complex circulant_entry(const CVector& c, std::size_t i, std::size_t j) {
  const std::size_t n = c.size();
  if (i >= n || j >= n) {
    throw_invalid_argument("circulant index (" + std::to_string(i) + ", " +
                           std::to_string(j) + ") out of range for n = " +
                           std::to_string(n));
  }
  return c[(i + n - j) % n];
}

Complex CirculantMatrix::entry(std::size_t i, std::size_t j) const {
  return circulant_entry(generator_, i, j);
}

GCirculant::GCirculant(FiniteAbelianGroup group, CVector generator)
    : group_(std::move(group)), generator_(std::move(generator)) {
  if (generator_.size() != group_.order()) {
    throw_dimension("G-circulant generator has length " +
                    std::to_string(generator_.size()) + " but |G| = " +
                    std::to_string(group_.order()));
  }
}

Complex GCirculant::entry(const GroupElement& x, const GroupElement& y) const {
  if (!(x.group() == group_) || !(y.group() == group_)) {
    throw_invalid_argument("element does not belong to " + group_.to_string());
  }
  return generator_[index_of(sub(x, y))];
}

Complex GCirculant::entry_at(std::uint64_t row, std::uint64_t col) const {
  if (row >= group_.order() || col >= group_.order()) {
    throw_invalid_argument("G-circulant index out of range");
  }
  return generator_[group_.sub_index(row, col)];
}

DenseMatrix materialize(const CirculantMatrix& c, std::size_t cap) {
  const std::size_t n = c.size();
  check_oracle_cap(n, cap);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c.generator()[(i + n - j) % n];
  }
  return m;
}

DenseMatrix materialize_g(const GCirculant& c, std::size_t cap) {
  const std::uint64_t n = c.group().order();
  check_oracle_cap(n, cap);
  DenseMatrix m(n, n);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) m(x, y) = c.generator()[c.group().sub_index(x, y)];
  }
  return m;
}

DenseMatrix shift_matrix(std::size_t n) {
  if (n == 0) throw_invalid_argument("shift_matrix: n must be >= 1");
  DenseMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, (i + 1) % n) = 1.0;
  return p;
}

std::vector<Complex> decompose_in_powers_of_p(const CVector& c) {
  const std::size_t n = c.size();
  std::vector<Complex> a(n);
  a[0] = c[0];
  for (std::size_t m = 1; m < n; ++m) a[m] = c[n - m];
  return a;
}

DenseMatrix polynomial_in_shift(std::span<const Complex> coefficients,
                                std::size_t cap) {
  const std::size_t n = coefficients.size();
  if (n == 0) throw_invalid_argument("polynomial_in_shift: no coefficients");
  check_oracle_cap(n, cap);
  const DenseMatrix p = shift_matrix(n);
  DenseMatrix power = DenseMatrix::identity(n);
  DenseMatrix sum(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sum(i, j) += coefficients[m] * power(i, j);
    }
    power = mat_mul(power, p);
  }
  return sum;
}

CVector naive_convolve(const CVector& c, const CVector& d) {
  const std::size_t n = c.size();
  if (d.size() != n) {
    throw_dimension("naive_convolve: length mismatch (" + std::to_string(n) +
                    " vs " + std::to_string(d.size()) + ")");
  }
  std::vector<Complex> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    Complex acc(0.0, 0.0);
    for (std::size_t y = 0; y < n; ++y) acc += c[(x + n - y) % n] * d[y];
    out[x] = acc;
  }
  return CVector(std::move(out));
}

CVector g_naive_convolve(const FiniteAbelianGroup& group, const CVector& v,
                         const CVector& u) {
  const std::uint64_t n = group.order();
  if (v.size() != n || u.size() != n) {
    throw_dimension("g_naive_convolve: vectors must have length |G| = " +
                    std::to_string(n));
  }
  std::vector<Complex> out(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    Complex acc(0.0, 0.0);
    for (std::uint64_t y = 0; y < n; ++y) acc += v[group.sub_index(x, y)] * u[y];
    out[x] = acc;
  }
  return CVector(std::move(out));
}

std::vector<GCirculant> block_decompose(const GCirculant& c) {
  const FiniteAbelianGroup& group = c.group();
  if (group.rank() < 2) {
    throw_invalid_argument("block_decompose needs a group with >= 2 factors, got " +
                           group.to_string());
  }
  const std::uint64_t k = group.factors()[0];
  const FiniteAbelianGroup rest = group.tail();
  const std::uint64_t block = rest.order();

  // Block (0, j) has entries v((-j, x' - y')); with j = k - m that is the
  // slice of v whose first coordinate is m.
  std::vector<GCirculant> blocks;
  blocks.reserve(k);
  for (std::uint64_t m = 0; m < k; ++m) {
    const auto first = c.generator().data().begin() + static_cast<std::ptrdiff_t>(m * block);
    blocks.emplace_back(rest, CVector(std::vector<Complex>(
                                  first, first + static_cast<std::ptrdiff_t>(block))));
  }
  return blocks;
}

DenseMatrix reconstruct_from_blocks(std::span<const GCirculant> blocks,
                                    std::size_t cap) {
  const std::size_t k = blocks.size();
  if (k == 0) throw_invalid_argument("reconstruct_from_blocks: no blocks");
  const std::uint64_t block = blocks[0].group().order();
  check_oracle_cap(k * block, cap);

  const DenseMatrix p = shift_matrix(k);
  DenseMatrix power = DenseMatrix::identity(k);
  DenseMatrix sum(k * block, k * block);
  for (std::size_t i = 0; i < k; ++i) {
    const DenseMatrix term =
        kronecker(power, materialize_g(blocks[(k - i) % k], cap));
    sum = mat_add(sum, term);
    power = mat_mul(power, p);
  }
  return sum;
}

}  // namespace abelianfft
