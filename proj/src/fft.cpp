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

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>

#include "abelianfft/circulant.hpp"
#include "abelianfft/error.hpp"
#include "abelianfft/fourier.hpp"

namespace abelianfft {

const char* to_string(Direction direction) noexcept {
  return direction == Direction::kAnalysis ? "analysis" : "synthesis";
}

const char* to_string(Engine engine) noexcept {
  return engine == Engine::kNaive ? "naive" : "fast";
}

TwiddleTable::TwiddleTable(std::uint64_t n) : n_(n) {
  if (!is_power_of_two(n)) {
    throw_unsupported_length("twiddle table size " + std::to_string(n) +
                             " is not a power of two");
  }
  powers_.resize(n / 2);
  for (std::uint64_t k = 0; k < n / 2; ++k) {
    powers_[k] = detail::reduced_root_of_unity(n, k);
  }
}

namespace {

constexpr int kMaxLog2 = 48;

struct TwiddleCache {
  std::array<std::once_flag, kMaxLog2 + 1> once;
  std::array<std::unique_ptr<const TwiddleTable>, kMaxLog2 + 1> tables;
};

TwiddleCache& twiddle_cache() {
  static TwiddleCache cache;
  return cache;
}

// std::complex multiplication goes through the NaN-recovering libcall; the
// butterflies only ever see finite values.
inline Complex mul(const Complex& a, const Complex& b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

void require_power_of_two(std::uint64_t n, const char* op) {
  if (!is_power_of_two(n)) {
    throw_unsupported_length(std::string(op) + ": length " + std::to_string(n) +
                             " is not a power of two");
  }
}

// In-place y = F_n y. Bit-reversal permutation, then log2(n) butterfly
// stages; stage `len` uses w_len^j = w_n^{j n / len}.
void fft_in_place(std::span<Complex> a) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const auto w = twiddle_table(n).powers();
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const Complex t = mul(w[j * stride], a[i + j + half]);
        const Complex u = a[i + j];
        a[i + j] = u + t;
#ifdef ABELIANFFT_MUTATE_BUTTERFLY_SIGN
        a[i + j + half] = t - u;
#else
        a[i + j + half] = u - t;
#endif
      }
    }
  }
}

std::vector<Complex> conjugated(std::span<const Complex> x) {
  std::vector<Complex> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::conj(x[i]);
  return out;
}

// Fourier matrix of a single cyclic factor, applied along strided lines.
class AxisKernel {
 public:
  AxisKernel(std::uint64_t k, FactorStrategy strategy) : k_(k), strategy_(strategy) {
    if (strategy_ == FactorStrategy::kDense) {
      roots_.resize(k);
      for (std::uint64_t r = 0; r < k; ++r) roots_[r] = detail::reduced_root_of_unity(k, r);
    }
    line_.resize(k);
    scratch_.resize(k);
  }

  // Synthesis transform of the line base, base + stride, ...
  void apply(std::vector<Complex>& data, std::size_t base, std::size_t stride) {
    for (std::uint64_t m = 0; m < k_; ++m) line_[m] = data[base + m * stride];
    if (strategy_ == FactorStrategy::kRadix2) {
      fft_in_place(line_);
      for (std::uint64_t m = 0; m < k_; ++m) data[base + m * stride] = line_[m];
      return;
    }
    for (std::uint64_t j = 0; j < k_; ++j) {
      Complex acc(0.0, 0.0);
      std::uint64_t e = 0;  // j * m mod k
      for (std::uint64_t m = 0; m < k_; ++m) {
        acc += mul(roots_[e], line_[m]);
        e += j;
        if (e >= k_) e -= k_;
      }
      scratch_[j] = acc;
    }
    for (std::uint64_t m = 0; m < k_; ++m) data[base + m * stride] = scratch_[m];
  }

 private:
  std::uint64_t k_;
  FactorStrategy strategy_;
  std::vector<Complex> roots_;
  std::vector<Complex> line_;
  std::vector<Complex> scratch_;
};

// F_{k_1} (x) ... (x) F_{k_u}, axes left to right.
void separable_synthesis(const PlanG& plan, std::vector<Complex>& data) {
  const auto factors = plan.group.factors();
  const std::uint64_t order = plan.group.order();
  std::uint64_t stride = order;
  for (std::size_t axis = 0; axis < factors.size(); ++axis) {
    const std::uint64_t k = factors[axis];
    stride /= k;
    const std::uint64_t block = k * stride;
    AxisKernel kernel(k, plan.strategies[axis]);
    for (std::uint64_t outer = 0; outer < order; outer += block) {
      for (std::uint64_t inner = 0; inner < stride; ++inner) {
        kernel.apply(data, outer + inner, stride);
      }
    }
  }
}

}  // namespace

const TwiddleTable& twiddle_table(std::uint64_t n) {
  if (!is_power_of_two(n)) {
    throw_unsupported_length("twiddle table size " + std::to_string(n) +
                             " is not a power of two");
  }
  const int log2n = std::countr_zero(n);
  if (log2n > kMaxLog2) throw_unsupported_length("transform length too large");
  TwiddleCache& cache = twiddle_cache();
  std::call_once(cache.once[log2n], [&] {
    cache.tables[log2n] = std::make_unique<const TwiddleTable>(n);
  });
  return *cache.tables[log2n];
}

CVector fft(const CVector& x) {
  require_power_of_two(x.size(), "fft");
  std::vector<Complex> a = x.data();
  fft_in_place(a);
  return CVector(std::move(a));
}

CVector ifft(const CVector& y) {
  require_power_of_two(y.size(), "ifft");
  std::vector<Complex> a = conjugated(y.elements());
  fft_in_place(a);
  const double scale = static_cast<double>(a.size());
  for (Complex& z : a) z = std::conj(z) / scale;
  return CVector(std::move(a));
}

CVector fast_convolve(const CVector& c, const CVector& d) {
  if (c.size() != d.size()) {
    throw_dimension("fast_convolve: length mismatch (" + std::to_string(c.size()) +
                    " vs " + std::to_string(d.size()) + ")");
  }
  require_power_of_two(c.size(), "fast_convolve");
  // conj(F) v = conj(F conj(v)).
  std::vector<Complex> spec_c = conjugated(c.elements());
  std::vector<Complex> spec_d = conjugated(d.elements());
  fft_in_place(spec_c);
  fft_in_place(spec_d);
  for (std::size_t k = 0; k < spec_c.size(); ++k) {
    spec_c[k] = mul(std::conj(spec_c[k]), std::conj(spec_d[k]));
  }
  fft_in_place(spec_c);
  const double scale = static_cast<double>(spec_c.size());
  for (Complex& z : spec_c) z /= scale;
  return CVector(std::move(spec_c));
}

CVector linear_convolve(const CVector& c, const CVector& d) {
  const std::size_t out_len = c.size() + d.size() - 1;
  const std::size_t padded = std::bit_ceil(out_len);
  std::vector<Complex> pc(padded, Complex(0.0, 0.0));
  std::vector<Complex> pd(padded, Complex(0.0, 0.0));
  std::copy(c.begin(), c.end(), pc.begin());
  std::copy(d.begin(), d.end(), pd.begin());
  const CVector full = fast_convolve(CVector(std::move(pc)), CVector(std::move(pd)));
  return CVector(std::vector<Complex>(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(out_len)));
}

std::string PlanG::describe() const {
  if (group.is_trivial()) return "trivial";
  std::string out;
  const auto factors = group.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += ' ';
    out += 'Z' + std::to_string(factors[i]) + ':' +
           (strategies[i] == FactorStrategy::kRadix2 ? "radix2" : "dense");
  }
  return out;
}

PlanG make_plan(const FiniteAbelianGroup& group) {
  PlanG plan{group, {}};
  for (std::uint64_t k : group.factors()) {
    plan.strategies.push_back(is_power_of_two(k) ? FactorStrategy::kRadix2
                                                 : FactorStrategy::kDense);
  }
  return plan;
}

CVector g_fft(const PlanG& plan, const CVector& x, Direction direction) {
  const std::uint64_t order = plan.group.order();
  if (x.size() != order) {
    throw_dimension("g_fft: vector has length " + std::to_string(x.size()) +
                    " but |G| = " + std::to_string(order));
  }
  if (plan.strategies.size() != plan.group.rank()) {
    throw_invalid_argument("g_fft: plan does not cover every factor");
  }
  if (direction == Direction::kSynthesis) {
    std::vector<Complex> data = x.data();
    separable_synthesis(plan, data);
    return CVector(std::move(data));
  }
  std::vector<Complex> data = conjugated(x.elements());
  separable_synthesis(plan, data);
  const double scale = static_cast<double>(order);
  for (Complex& z : data) z = std::conj(z) / scale;
  return CVector(std::move(data));
}

CVector g_fft(const FiniteAbelianGroup& group, const CVector& x, Direction direction) {
  return g_fft(make_plan(group), x, direction);
}

CVector walsh_hadamard(const CVector& x) {
  require_power_of_two(x.size(), "walsh_hadamard");
  std::vector<Complex> a = x.data();
  const std::size_t n = a.size();
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * half) {
      for (std::size_t j = i; j < i + half; ++j) {
        const Complex u = a[j];
        const Complex v = a[j + half];
        a[j] = u + v;
        a[j + half] = u - v;
      }
    }
  }
  return CVector(std::move(a));
}

TransformOutcome transform(const FiniteAbelianGroup& group, const CVector& x,
                           Direction direction, Engine engine) {
  if (engine == Engine::kNaive) {
    CVector y = direction == Direction::kSynthesis ? apply_F(group, x) : apply_D(group, x);
    return {std::move(y), "naive dense"};
  }
  const PlanG plan = make_plan(group);
  return {g_fft(plan, x, direction), "g_fft [" + plan.describe() + "]"};
}

ConvolveOutcome convolve(const FiniteAbelianGroup& group, const CVector& c,
                         const CVector& d, Engine engine) {
  const std::uint64_t order = group.order();
  if (c.size() != order || d.size() != order) {
    throw_dimension("convolve: vectors must have length |G| = " + std::to_string(order));
  }
  if (engine == Engine::kNaive) {
    return {g_naive_convolve(group, c, d), "naive", std::nullopt};
  }
  if (group.rank() <= 1) {
    if (is_power_of_two(order)) return {fast_convolve(c, d), "fft radix2", std::nullopt};
    return {g_naive_convolve(group, c, d), "naive",
            "cyclic length " + std::to_string(order) +
                " is not a power of two; using the O(n^2) sum"};
  }
  // v * u = F (|G| Dv o Du).
  const PlanG plan = make_plan(group);
  const CVector dc = g_fft(plan, c, Direction::kAnalysis);
  const CVector dd = g_fft(plan, d, Direction::kAnalysis);
  std::vector<Complex> prod(order);
  const double scale = static_cast<double>(order);
  for (std::uint64_t g = 0; g < order; ++g) prod[g] = scale * mul(dc[g], dd[g]);
  return {g_fft(plan, CVector(std::move(prod)), Direction::kSynthesis),
          "g_fft diagonalization [" + plan.describe() + "]", std::nullopt};
}

Radix2Factorization radix2_factorization(std::uint64_t n) {
  if (n < 2 || !is_power_of_two(n)) {
    throw_unsupported_length("radix2_factorization needs a power of two >= 2");
  }
  const std::uint64_t half = n / 2;
  const auto a = twiddle_table(n).powers();

  DenseMatrix butterfly(n, n);
  for (std::uint64_t i = 0; i < half; ++i) {
    butterfly(i, i) = 1.0;
    butterfly(i, half + i) = a[i];
    butterfly(half + i, i) = 1.0;
    butterfly(half + i, half + i) = -a[i];
  }

  const DenseMatrix f_half = dft_matrix(FiniteAbelianGroup::cyclic(half), half);
  DenseMatrix half_transforms(n, n);
  for (std::uint64_t i = 0; i < half; ++i) {
    for (std::uint64_t j = 0; j < half; ++j) {
      half_transforms(i, j) = f_half(i, j);
      half_transforms(half + i, half + j) = f_half(i, j);
    }
  }

  DenseMatrix even_odd(n, n);
  for (std::uint64_t r = 0; r < half; ++r) {
    even_odd(r, 2 * r) = 1.0;
    even_odd(half + r, 2 * r + 1) = 1.0;
  }
  return {std::move(butterfly), std::move(half_transforms), std::move(even_odd)};
}

bool BenchReport::fft_times_monotone() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].fft_seconds < rows[i - 1].fft_seconds) return false;
  }
  return true;
}

namespace {

// Median over `repeats` samples; each sample loops `fn` until it has run for
// at least min_seconds and reports the per-call time.
template <typename Fn>
double median_seconds(Fn&& fn, int repeats, double min_seconds) {
  using Clock = std::chrono::steady_clock;
  std::vector<double> samples;
  for (int r = 0; r < std::max(repeats, 1); ++r) {
    std::size_t calls = 0;
    const auto start = Clock::now();
    double elapsed = 0.0;
    do {
      fn();
      ++calls;
      elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    } while (elapsed < min_seconds);
    samples.push_back(elapsed / static_cast<double>(calls));
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

}  // namespace

BenchReport bench(std::span<const std::uint64_t> sizes, const BenchOptions& options) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (!is_power_of_two(sizes[i])) {
      throw_invalid_argument("bench size " + std::to_string(sizes[i]) +
                             " is not a power of two");
    }
    if (i > 0 && sizes[i] <= sizes[i - 1]) {
      throw_invalid_argument("bench sizes must be strictly ascending");
    }
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  BenchReport report;
  for (std::uint64_t n : sizes) {
    std::vector<Complex> values(n);
    for (Complex& z : values) z = Complex(dist(rng), dist(rng));
    const CVector x(std::move(values));
    twiddle_table(n);  // keep table construction out of the timing

    BenchRow row;
    row.n = n;
    volatile double sink = 0.0;
    row.fft_seconds = median_seconds(
        [&] { sink = sink + fft(x)[0].real(); }, options.repeats, options.min_sample_seconds);
    if (n <= options.oracle_cap) {
      const FiniteAbelianGroup zn = FiniteAbelianGroup::cyclic(n);
      row.naive_seconds = median_seconds([&] { sink = sink + apply_F(zn, x)[0].real(); },
                                         std::min(options.repeats, 3), 0.0);
    }
    if (!report.rows.empty() && report.rows.back().n * 2 == n) {
      row.doubling_ratio = row.fft_seconds / report.rows.back().fft_seconds;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace abelianfft
