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

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "abelianfft/circulant.hpp"
#include "abelianfft/error.hpp"

namespace abelianfft {

namespace {

__extension__ typedef unsigned __int128 uint128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if ((a | b) >> 32 == 0) return a * b % m;
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

// Characters of G take values in the L-th roots of unity, L = lcm(k_i).
// chi_g(x) = w_L^{sum_i (g_i x_i mod k_i) * (L / k_i)}, which keeps the
// angle an exact integer multiple of 2 pi / L.
class CharacterTable {
 public:
  explicit CharacterTable(const FiniteAbelianGroup& group)
      : factors_(group.factors().begin(), group.factors().end()),
        order_(group.order()) {
    lcm_ = 1;
    for (std::uint64_t k : factors_) lcm_ = std::lcm(lcm_, k);
    for (std::uint64_t k : factors_) weights_.push_back(lcm_ / k);
    roots_.resize(lcm_);
    for (std::uint64_t r = 0; r < lcm_; ++r) roots_[r] = detail::reduced_root_of_unity(lcm_, r);
    digits_.resize(order_ * factors_.size());
    for (std::uint64_t idx = 0; idx < order_; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = factors_.size(); i-- > 0;) {
        digits_[idx * factors_.size() + i] = rest % factors_[i];
        rest /= factors_[i];
      }
    }
  }

  std::uint64_t exponent(std::uint64_t g, std::uint64_t x) const {
    const std::size_t u = factors_.size();
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < u; ++i) {
      const std::uint64_t gi = digits_[g * u + i];
      const std::uint64_t xi = digits_[x * u + i];
      e += mul_mod(gi, xi, factors_[i]) * weights_[i];
      if (e >= lcm_) e -= lcm_;
    }
    return e;
  }

  // chi_g(x); F(x, g).
  const Complex& value(std::uint64_t g, std::uint64_t x) const {
    return roots_[exponent(g, x)];
  }

 private:
  std::vector<std::uint64_t> factors_;
  std::uint64_t order_;
  std::uint64_t lcm_ = 1;
  std::vector<std::uint64_t> weights_;
  std::vector<Complex> roots_;
  std::vector<std::uint64_t> digits_;
};

void require_length(const FiniteAbelianGroup& group, const CVector& x, const char* op) {
  if (x.size() != group.order()) {
    throw_dimension(std::string(op) + ": vector has length " +
                    std::to_string(x.size()) + " but |G| = " +
                    std::to_string(group.order()));
  }
}

void require_member(const FiniteAbelianGroup& group, const GroupElement& g) {
  if (!(g.group() == group)) {
    throw_invalid_argument("element " + g.to_string() + " of " +
                           g.group().to_string() + " is not in " + group.to_string());
  }
}

}  // namespace

CVector fourier_column(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw_invalid_argument("fourier_column: n must be >= 1");
  if (k >= n) {
    throw_invalid_argument("fourier_column: k = " + std::to_string(k) +
                           " out of range for n = " + std::to_string(n));
  }
  std::vector<Complex> col(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    col[j] = detail::reduced_root_of_unity(n, mul_mod(j, k, n));
  }
  return CVector(std::move(col));
}

Complex character_value(const GroupElement& g, const GroupElement& x) {
  if (!(g.group() == x.group())) {
    throw_invalid_argument("character_value: elements from different groups");
  }
  const auto factors = g.group().factors();
  std::uint64_t lcm = 1;
  for (std::uint64_t k : factors) lcm = std::lcm(lcm, k);
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    e = (e + mul_mod(g[i], x[i], factors[i]) * (lcm / factors[i])) % lcm;
  }
  return detail::reduced_root_of_unity(lcm, e);
}

CVector character(const FiniteAbelianGroup& group, const GroupElement& g) {
  require_member(group, g);
  const CharacterTable table(group);
  const std::uint64_t gi = index_of(g);
  std::vector<Complex> out(group.order());
  for (std::uint64_t x = 0; x < group.order(); ++x) out[x] = table.value(gi, x);
  return CVector(std::move(out));
}

CVector character_by_kronecker(const FiniteAbelianGroup& group, const GroupElement& g) {
  require_member(group, g);
  if (group.is_trivial()) return CVector{Complex(1.0, 0.0)};
  const auto coords = g.coordinates();
  const FiniteAbelianGroup rest = group.tail();
  const GroupElement g_rest(rest, std::vector<std::uint64_t>(coords.begin() + 1, coords.end()));
  return kronecker(fourier_column(group.factors()[0], coords[0]),
                   character_by_kronecker(rest, g_rest));
}

CVector boolean_character(std::size_t n, std::span<const std::size_t> subset) {
  if (n > 40) throw_invalid_argument("boolean_character: n must be <= 40");
  std::uint64_t mask = 0;
  for (std::size_t i : subset) {
    if (i < 1 || i > n) {
      throw_invalid_argument("boolean_character: coordinate " + std::to_string(i) +
                             " not in {1.." + std::to_string(n) + "}");
    }
    // Coordinate 1 is the most significant bit of the lexicographic index.
    mask |= std::uint64_t{1} << (n - i);
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Complex> out(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    out[x] = (std::popcount(x & mask) % 2 == 0) ? 1.0 : -1.0;
  }
  return CVector(std::move(out));
}

DenseMatrix dft_matrix(const FiniteAbelianGroup& group, std::size_t cap) {
  const std::uint64_t n = group.order();
  check_oracle_cap(n, cap);
  const CharacterTable table(group);
  DenseMatrix f(n, n);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t g = 0; g < n; ++g) f(x, g) = table.value(g, x);
  }
  return f;
}

CVector apply_F(const FiniteAbelianGroup& group, const CVector& x) {
  require_length(group, x, "apply_F");
  const std::uint64_t n = group.order();
  const CharacterTable table(group);
  std::vector<Complex> y(n);
  for (std::uint64_t row = 0; row < n; ++row) {
    Complex acc(0.0, 0.0);
    for (std::uint64_t g = 0; g < n; ++g) acc += table.value(g, row) * x[g];
    y[row] = acc;
  }
  return CVector(std::move(y));
}

CVector apply_D(const FiniteAbelianGroup& group, const CVector& x) {
  require_length(group, x, "apply_D");
  const std::uint64_t n = group.order();
  const CharacterTable table(group);
  const double scale = static_cast<double>(n);
  std::vector<Complex> y(n);
  for (std::uint64_t g = 0; g < n; ++g) {
    Complex acc(0.0, 0.0);
    for (std::uint64_t col = 0; col < n; ++col) acc += std::conj(table.value(g, col)) * x[col];
    y[g] = acc / scale;
  }
  return CVector(std::move(y));
}

CVector apply_F_inverse(const FiniteAbelianGroup& group, const CVector& y) {
  return apply_D(group, y);
}

Spectrum g_circulant_eigenvalues(const FiniteAbelianGroup& group, const CVector& v) {
  require_length(group, v, "g_circulant_eigenvalues");
  const std::uint64_t n = group.order();
  const CharacterTable table(group);
  std::vector<Complex> lambda(n);
  for (std::uint64_t g = 0; g < n; ++g) {
    Complex acc(0.0, 0.0);
    for (std::uint64_t x = 0; x < n; ++x) acc += v[x] * std::conj(table.value(g, x));
    lambda[g] = acc;
  }
  return Spectrum{group, CVector(std::move(lambda))};
}

Spectrum circulant_eigenvalues(const CVector& c) {
  return g_circulant_eigenvalues(FiniteAbelianGroup::cyclic(c.size()), c);
}

double diagonalize_check(const FiniteAbelianGroup& group, const CVector& v,
                         std::size_t cap) {
  require_length(group, v, "diagonalize_check");
  const std::uint64_t n = group.order();
  check_oracle_cap(n, cap);
  const DenseMatrix c = materialize_g(GCirculant(group, v), cap);
  const DenseMatrix f = dft_matrix(group, cap);
  const Spectrum spectrum = g_circulant_eigenvalues(group, v);

  DenseMatrix f_lambda = f;
  for (std::uint64_t r = 0; r < n; ++r) {
    for (std::uint64_t g = 0; g < n; ++g) f_lambda(r, g) *= spectrum.values[g];
  }
  DenseMatrix rebuilt = mat_mul(f_lambda, conj_transpose(f));
  const double scale = static_cast<double>(n);
  for (std::uint64_t r = 0; r < n; ++r) {
    for (std::uint64_t s = 0; s < n; ++s) rebuilt(r, s) /= scale;
  }
  return max_abs_diff(c, rebuilt);
}

}  // namespace abelianfft
