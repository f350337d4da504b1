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

#ifndef ABELIANFFT_COMPLEX_CORE_HPP_
#define ABELIANFFT_COMPLEX_CORE_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace abelianfft {

using Complex = std::complex<double>;

// Largest dimension any dense (oracle) matrix may take unless the caller
// raises it explicitly.
inline constexpr std::size_t kDefaultOracleCap = 4096;

// Absolute comparison tolerance, scaled by max(1, ||input||_inf) at use sites.
inline constexpr double kDefaultTolerance = 1e-9;

// A non-empty vector of finite complex numbers. Immutable once built.
class CVector {
 public:
  // Throws kInvalidArgument on an empty sequence or a non-finite element.
  explicit CVector(std::vector<Complex> elements);
  CVector(std::initializer_list<Complex> elements);

  static CVector zeros(std::size_t n);
  static CVector ones(std::size_t n);
  static CVector delta(std::size_t n, std::size_t at);
  static CVector from_real(std::span<const double> values);

  std::size_t size() const noexcept { return elements_.size(); }
  const Complex& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const Complex> elements() const noexcept { return elements_; }
  const std::vector<Complex>& data() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  // Infinity norm, max_j |x_j|.
  double max_abs() const noexcept;

  friend bool operator==(const CVector&, const CVector&) = default;

 private:
  std::vector<Complex> elements_;
};

// Row-major dense complex matrix. Used by oracles and small verification
// runs only; structured operators never build one unless asked.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

// e^{2 pi i k / n}, with k reduced modulo n before the angle is formed.
// Quarter turns are exact: root_of_unity(4, 1) == (0, 1) bit for bit.
Complex root_of_unity(std::uint64_t n, std::int64_t k);

namespace detail {
// Same as root_of_unity for an already reduced exponent 0 <= r < n.
Complex reduced_root_of_unity(std::uint64_t n, std::uint64_t r);
}  // namespace detail

CVector hadamard(const CVector& u, const CVector& v);

// sum_j conj(u_j) v_j. The first argument is conjugated.
Complex inner_product(const CVector& u, const CVector& v);

double max_abs_diff(const CVector& u, const CVector& v);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

CVector mat_vec(const DenseMatrix& m, const CVector& x);

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix conj_transpose(const DenseMatrix& m);
DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b);
CVector kronecker(const CVector& a, const CVector& b);

// Throws kResourceLimit when rows or cols would exceed cap.
void check_oracle_cap(std::size_t dimension, std::size_t cap);

}  // namespace abelianfft

#endif  // ABELIANFFT_COMPLEX_CORE_HPP_
