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

#ifndef ABELIANFFT_FFT_HPP_
#define ABELIANFFT_FFT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abelianfft/complex_core.hpp"
#include "abelianfft/group.hpp"

namespace abelianfft {

enum class Direction {
  kAnalysis,   // (1/|G|) F^*
  kSynthesis,  // F
};

enum class Engine {
  kNaive,
  kFast,
};

const char* to_string(Direction direction) noexcept;
const char* to_string(Engine engine) noexcept;

constexpr bool is_power_of_two(std::uint64_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

// w_n^k for k = 0 .. n/2 - 1. The diagonal of the butterfly matrix A_{n/2}.
class TwiddleTable {
 public:
  explicit TwiddleTable(std::uint64_t n);

  std::uint64_t size() const noexcept { return n_; }
  std::span<const Complex> powers() const noexcept { return powers_; }

 private:
  std::uint64_t n_;
  std::vector<Complex> powers_;
};

// Process-wide cache; each size is built at most once and is read-only
// afterwards. Safe to call from any thread.
const TwiddleTable& twiddle_table(std::uint64_t n);

// y = F_n x for n a power of two (kUnsupportedLength otherwise).
CVector fft(const CVector& x);
// (1/n) conj(F_n) y.
CVector ifft(const CVector& y);

// Circular convolution via (1/n) F (conj(F) c o conj(F) d).
CVector fast_convolve(const CVector& c, const CVector& d);

// Acyclic (polynomial) product of length p + q - 1 by zero padding.
CVector linear_convolve(const CVector& c, const CVector& d);

enum class FactorStrategy {
  kRadix2,
  kDense,
};

// How g_fft treats each cyclic factor, in factor order.
struct PlanG {
  FiniteAbelianGroup group;
  std::vector<FactorStrategy> strategies;

  std::string describe() const;  // "Z3:dense Z4:radix2"
};

PlanG make_plan(const FiniteAbelianGroup& group);

// F_{k_1} (x) ... (x) F_{k_u} applied one axis at a time. Analysis includes
// the single 1/|G| normalization.
CVector g_fft(const FiniteAbelianGroup& group, const CVector& x, Direction direction);
CVector g_fft(const PlanG& plan, const CVector& x, Direction direction);

// Transform by the +-1 character matrix of Z_2^n using additions and
// subtractions only; applying it twice scales by 2^n.
CVector walsh_hadamard(const CVector& x);

struct TransformOutcome {
  CVector result;
  std::string method;
};

// Naive routes go through apply_F / apply_D; fast routes through g_fft.
TransformOutcome transform(const FiniteAbelianGroup& group, const CVector& x,
                           Direction direction, Engine engine);

struct ConvolveOutcome {
  CVector result;
  std::string method;
  // Set when the fast engine was requested but the naive path ran.
  std::optional<std::string> notice;
};

// Group convolution. Fast engine: radix-2 fast_convolve on cyclic groups of
// power-of-two order, g_fft diagonalization on multi-factor groups, and the
// naive sum on other cyclic groups.
ConvolveOutcome convolve(const FiniteAbelianGroup& group, const CVector& c,
                         const CVector& d, Engine engine);

// The three factors of one radix-2 step,
//   F_n = [[I, A], [I, -A]] * diag(F_{n/2}, F_{n/2}) * P_even_odd.
struct Radix2Factorization {
  DenseMatrix butterfly;
  DenseMatrix half_transforms;
  DenseMatrix even_odd;
};

Radix2Factorization radix2_factorization(std::uint64_t n);

struct BenchOptions {
  std::size_t oracle_cap = kDefaultOracleCap;
  int repeats = 5;
  double min_sample_seconds = 0.005;
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::uint64_t n = 0;
  double fft_seconds = 0.0;
  std::optional<double> naive_seconds;   // empty above the oracle cap
  std::optional<double> doubling_ratio;  // fft T(n) / T(n/2) when n/2 was measured
};

struct BenchReport {
  std::vector<BenchRow> rows;

  bool fft_times_monotone() const;
};

// Median-of-repeats wall time per size. Sizes must be ascending powers of two.
BenchReport bench(std::span<const std::uint64_t> sizes, const BenchOptions& options = {});

}  // namespace abelianfft

#endif  // ABELIANFFT_FFT_HPP_
