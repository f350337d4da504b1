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

#include "abelianfft/complex_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "abelianfft/error.hpp"

namespace abelianfft {

namespace {

bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void require_same_length(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw_dimension(std::string(op) + ": length mismatch (" +
                    std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

CVector::CVector(std::vector<Complex> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) throw_invalid_argument("vector must have length >= 1");
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    if (!is_finite(elements_[j])) {
      throw_invalid_argument("vector element " + std::to_string(j) +
                             " is not finite");
    }
  }
}

CVector::CVector(std::initializer_list<Complex> elements)
    : CVector(std::vector<Complex>(elements)) {}

CVector CVector::zeros(std::size_t n) {
  return CVector(std::vector<Complex>(n, Complex(0.0, 0.0)));
}

CVector CVector::ones(std::size_t n) {
  return CVector(std::vector<Complex>(n, Complex(1.0, 0.0)));
}

CVector CVector::delta(std::size_t n, std::size_t at) {
  if (at >= n) throw_invalid_argument("delta position out of range");
  std::vector<Complex> e(n, Complex(0.0, 0.0));
  e[at] = 1.0;
  return CVector(std::move(e));
}

CVector CVector::from_real(std::span<const double> values) {
  return CVector(std::vector<Complex>(values.begin(), values.end()));
}

double CVector::max_abs() const noexcept {
  double m = 0.0;
  for (const Complex& z : elements_) m = std::max(m, std::abs(z));
  return m;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {
  if (rows == 0 || cols == 0) throw_invalid_argument("matrix must be non-empty");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw_invalid_argument("matrix must be non-empty");
  if (entries_.size() != rows * cols) {
    throw_dimension("matrix entry count does not equal rows * cols");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

namespace detail {

__extension__ typedef unsigned __int128 uint128;

// Splits the turn r/n into a whole number of quarter turns and a remainder
// angle in [0, pi/4], so the symmetric points of the circle come out exact
// and w^{k + n/2} == -w^k holds bitwise for even n.
Complex reduced_root_of_unity(std::uint64_t n, std::uint64_t r) {
  if (r == 0) return {1.0, 0.0};
  const uint128 scaled = static_cast<uint128>(r) * 4;
  const auto quadrant = static_cast<unsigned>(scaled / n);
  const auto rem = static_cast<std::uint64_t>(scaled % n);  // in [0, n)

  // Angle within the quadrant is (pi/2) * rem / n.
  double c;
  double s;
  if (rem == 0) {
    c = 1.0;
    s = 0.0;
  } else if (2 * static_cast<uint128>(rem) == n) {
    c = std::numbers::sqrt2 / 2;
    s = c;
  } else if (2 * static_cast<uint128>(rem) < n) {
    const double phi = std::numbers::pi / 2 * static_cast<double>(rem) /
                       static_cast<double>(n);
    c = std::cos(phi);
    s = std::sin(phi);
  } else {
    const double phi = std::numbers::pi / 2 * static_cast<double>(n - rem) /
                       static_cast<double>(n);
    c = std::sin(phi);
    s = std::cos(phi);
  }
  // Adding +0.0 turns a negated zero back into +0.0.
  switch (quadrant) {
    case 0:
      return {c, s};
    case 1:
      return {-s + 0.0, c};
    case 2:
      return {-c + 0.0, -s + 0.0};
    default:
      return {s, -c + 0.0};
  }
}

}  // namespace detail

Complex root_of_unity(std::uint64_t n, std::int64_t k) {
  if (n == 0) throw_invalid_argument("root_of_unity: n must be >= 1");
  std::uint64_t r;
  if (k >= 0) {
    r = static_cast<std::uint64_t>(k) % n;
  } else {
    // -(k + 1) avoids overflow at INT64_MIN.
    const std::uint64_t m = static_cast<std::uint64_t>(-(k + 1)) % n;
    r = n - 1 - m;
  }
  return detail::reduced_root_of_unity(n, r);
}

CVector hadamard(const CVector& u, const CVector& v) {
  require_same_length(u.size(), v.size(), "hadamard");
  std::vector<Complex> out(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) out[j] = u[j] * v[j];
  return CVector(std::move(out));
}

Complex inner_product(const CVector& u, const CVector& v) {
  require_same_length(u.size(), v.size(), "inner_product");
  Complex acc(0.0, 0.0);
  for (std::size_t j = 0; j < u.size(); ++j) acc += std::conj(u[j]) * v[j];
  return acc;
}

double max_abs_diff(const CVector& u, const CVector& v) {
  require_same_length(u.size(), v.size(), "max_abs_diff");
  double m = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) m = std::max(m, std::abs(u[j] - v[j]));
  return m;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw_dimension("max_abs_diff: matrix shapes differ");
  }
  double m = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t j = 0; j < ea.size(); ++j) m = std::max(m, std::abs(ea[j] - eb[j]));
  return m;
}

CVector mat_vec(const DenseMatrix& m, const CVector& x) {
  if (m.cols() != x.size()) {
    throw_dimension("mat_vec: matrix has " + std::to_string(m.cols()) +
                    " columns but vector has length " + std::to_string(x.size()));
  }
  std::vector<Complex> y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Complex acc(0.0, 0.0);
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * x[c];
    y[r] = acc;
  }
  return CVector(std::move(y));
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw_dimension("mat_mul: inner dimensions differ");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw_dimension("mat_add: matrix shapes differ");
  }
  DenseMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

DenseMatrix conj_transpose(const DenseMatrix& m) {
  DenseMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  }
  return out;
}

DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
      }
    }
  }
  return out;
}

CVector kronecker(const CVector& a, const CVector& b) {
  std::vector<Complex> out;
  out.reserve(a.size() * b.size());
  for (const Complex& x : a) {
    for (const Complex& y : b) out.push_back(x * y);
  }
  return CVector(std::move(out));
}

void check_oracle_cap(std::size_t dimension, std::size_t cap) {
  if (dimension > cap) {
    throw_resource_limit("dense dimension " + std::to_string(dimension) +
                         " exceeds oracle cap " + std::to_string(cap));
  }
}

}  // namespace abelianfft
