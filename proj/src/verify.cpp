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

#include "abelianfft/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <utility>

#include "abelianfft/circulant.hpp"
#include "abelianfft/complex_core.hpp"
#include "abelianfft/error.hpp"
#include "abelianfft/fft.hpp"
#include "abelianfft/fourier.hpp"
#include "abelianfft/vector_io.hpp"

namespace abelianfft {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Accumulates one named property over many cases.
class Check {
 public:
  Check(std::string module, std::string name, std::string range, double scale)
      : scale_(scale) {
    result_.module = std::move(module);
    result_.name = std::move(name);
    result_.range = std::move(range);
  }

  // residual <= limit * scale.
  void within(double residual, double limit) {
    const double allowed = limit * scale_;
    record(residual, allowed > 0 ? residual / allowed : (residual == 0 ? 0.0 : kInf));
  }

  // Bitwise/exact properties; not rescaled by the tolerance.
  void exact(bool ok, double residual = 0.0) { record(ok ? residual : std::max(residual, 1.0), ok ? 0.0 : kInf); }

  CheckResult result() const { return result_; }

 private:
  void record(double residual, double ratio) {
    if (std::isnan(residual) || std::isnan(ratio)) {
      residual = kInf;
      ratio = kInf;
    }
    result_.worst_residual = std::max(result_.worst_residual, residual);
    result_.worst_ratio = std::max(result_.worst_ratio, ratio);
    if (ratio > 1.0) result_.passed = false;
  }

  double scale_;
  CheckResult result_;
};

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

class Context {
 public:
  Context(std::uint64_t seed, double tolerance,
          const std::function<void(const CheckResult&)>& on_check)
      : seed_(seed), scale_(tolerance / kDefaultTolerance), on_check_(on_check) {}

  Check begin(std::string module, std::string name, std::string range) const {
    return Check(std::move(module), std::move(name), std::move(range), scale_);
  }

  // Each check gets its own stream so scoped runs match the full run.
  std::mt19937_64 rng(std::string_view check_name) const {
    return std::mt19937_64(seed_ ^ fnv1a(check_name));
  }

  void finish(const Check& check) {
    checks_.push_back(check.result());
    if (on_check_) on_check_(checks_.back());
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  std::uint64_t seed_;
  double scale_;
  const std::function<void(const CheckResult&)>& on_check_;
  std::vector<CheckResult> checks_;
};

CVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> v(n);
  for (Complex& z : v) z = Complex(dist(rng), dist(rng));
  return CVector(std::move(v));
}

CVector random_integer_vector(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  std::vector<Complex> v(n);
  for (Complex& z : v) {
    z = Complex(static_cast<double>(dist(rng)), static_cast<double>(dist(rng)));
  }
  return CVector(std::move(v));
}

CVector scaled(const CVector& v, double s) {
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return CVector(std::move(out));
}

// ---------------------------------------------------------------- complex_core

void verify_complex_core(Context& ctx) {
  {
    Check check = ctx.begin("complex_core", "root_of_unity has modulus 1",
                            "all k, n <= 512 and n = 2^j <= 2^20; 20000 random (n,k), n <= 2^20");
    for (std::uint64_t n = 1; n <= 512; ++n) {
      for (std::uint64_t k = 0; k < n; ++k) {
        check.within(std::abs(std::abs(root_of_unity(n, static_cast<std::int64_t>(k))) - 1.0), 1e-12);
      }
    }
    for (std::uint64_t n = 1024; n <= (1u << 20); n *= 2) {
      for (std::uint64_t k = 0; k < n; ++k) {
        check.within(std::abs(std::abs(detail::reduced_root_of_unity(n, k)) - 1.0), 1e-12);
      }
    }
    auto rng = ctx.rng("root_of_unity modulus");
    for (int t = 0; t < 20000; ++t) {
      const std::uint64_t n = 1 + rng() % (1u << 20);
      const std::uint64_t k = rng() % n;
      check.within(std::abs(std::abs(root_of_unity(n, static_cast<std::int64_t>(k))) - 1.0), 1e-12);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("complex_core", "root_of_unity product rule w^k w^j = w^{k+j}",
                            "all k, j for n <= 64; 20000 random triples, n <= 2^20");
    for (std::int64_t n = 1; n <= 64; ++n) {
      for (std::int64_t k = 0; k < n; ++k) {
        for (std::int64_t j = 0; j < n; ++j) {
          check.within(std::abs(root_of_unity(n, k) * root_of_unity(n, j) - root_of_unity(n, k + j)), 1e-12);
        }
      }
    }
    auto rng = ctx.rng("root_of_unity product");
    for (int t = 0; t < 20000; ++t) {
      const auto n = static_cast<std::int64_t>(1 + rng() % (1u << 20));
      const auto k = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
      const auto j = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
      check.within(std::abs(root_of_unity(n, k) * root_of_unity(n, j) - root_of_unity(n, k + j)), 1e-12);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("complex_core", "root_of_unity half-turn w^k = -w^{k+n/2}",
                            "all k, even n <= 512 and n = 2^j <= 2^20");
    auto run = [&](std::int64_t n) {
      for (std::int64_t k = 0; k < n; ++k) {
        check.within(std::abs(root_of_unity(n, k) + root_of_unity(n, k + n / 2)), 1e-12);
      }
    };
    for (std::int64_t n = 2; n <= 512; n += 2) run(n);
    for (std::int64_t n = 1024; n <= (1 << 20); n *= 2) run(n);
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("complex_core", "inner_product(u,u) is real and non-negative",
                            "200 random vectors, n <= 4096");
    auto rng = ctx.rng("inner_product self");
    for (int t = 0; t < 200; ++t) {
      const CVector u = random_vector(rng, 1 + rng() % 4096);
      const Complex ip = inner_product(u, u);
      check.within(std::abs(ip.imag()), 1e-12);
      check.exact(ip.real() >= 0.0);
    }
    ctx.finish(check);
  }
}

// ----------------------------------------------------------------------- group

void verify_group(Context& ctx) {
  {
    Check check = ctx.begin("group", "canonicalize preserves order and is canonical",
                            "all single moduli and pairs with product <= 10^4");
    auto check_one = [&](std::span<const std::uint64_t> moduli, std::uint64_t product) {
      const auto factors = canonical_factors(moduli);
      std::uint64_t order = 1;
      bool ok = true;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        order *= factors[i];
        ok = ok && is_prime_power(factors[i]) && (i == 0 || factors[i - 1] <= factors[i]);
      }
      check.exact(ok && order == product);
    };
    for (std::uint64_t m = 1; m <= 10000; ++m) {
      const std::uint64_t moduli[] = {m};
      check_one(moduli, m);
    }
    for (std::uint64_t a = 2; a * 2 <= 10000; ++a) {
      for (std::uint64_t b = 2; a * b <= 10000; ++b) {
        const std::uint64_t moduli[] = {a, b};
        check_one(moduli, a * b);
      }
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("group", "canonicalize index map is an isomorphism",
                            "moduli lists with product <= 144");
    const std::vector<std::vector<std::uint64_t>> cases = {
        {6}, {12}, {12, 2}, {3, 2}, {10}, {4, 6}, {2, 3, 4}, {36}, {9, 6}, {1, 15}, {30}, {12, 12}};
    for (const auto& moduli : cases) {
      const CanonicalForm form = canonicalize(moduli);
      const FiniteAbelianGroup input = FiniteAbelianGroup::direct_product(moduli);
      const std::uint64_t n = input.order();
      std::vector<bool> hit(n, false);
      for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t t = form.permutation[i];
        check.exact(t < n && !hit[t]);
        if (t < n) hit[t] = true;
      }
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < n; ++b) {
          check.exact(form.permutation[input.add_index(a, b)] ==
                      form.group.add_index(form.permutation[a], form.permutation[b]));
        }
      }
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("group", "group axioms (assoc., identity, inverse, commutative)",
                            "every test group and canonical group with |G| <= 256");
    std::vector<FiniteAbelianGroup> groups = standard_test_groups();
    for (auto& g : multi_factor_groups(256)) groups.push_back(g);
    for (const std::uint64_t n : {128u, 243u, 256u}) groups.push_back(FiniteAbelianGroup::cyclic(n));
    for (const FiniteAbelianGroup& g : groups) {
      const std::uint64_t n = g.order();
      const std::vector<GroupElement> elems = enumerate(g);
      std::vector<std::uint64_t> table(n * n);
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < n; ++b) table[a * n + b] = index_of(add(elems[a], elems[b]));
      }
      const GroupElement zero = GroupElement::identity(g);
      const std::uint64_t z = index_of(zero);
      bool ok = true;
      for (std::uint64_t a = 0; a < n && ok; ++a) {
        ok = table[a * n + z] == a && table[a * n + index_of(neg(elems[a]))] == z &&
             index_of(sub(elems[a], elems[a])) == z;
        for (std::uint64_t b = 0; b < n && ok; ++b) {
          ok = table[a * n + b] == table[b * n + a];
          const std::uint64_t ab = table[a * n + b];
          for (std::uint64_t c = 0; c < n && ok; ++c) {
            ok = table[ab * n + c] == table[a * n + table[b * n + c]];
          }
        }
      }
      check.exact(ok);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("group", "index_of and element_at are inverse",
                            "every test group and canonical group with |G| <= 256");
    std::vector<FiniteAbelianGroup> groups = standard_test_groups();
    for (auto& g : multi_factor_groups(256)) groups.push_back(g);
    groups.emplace_back();
    for (const FiniteAbelianGroup& g : groups) {
      const std::vector<GroupElement> elems = enumerate(g);
      check.exact(elems.size() == g.order());
      for (std::uint64_t i = 0; i < g.order(); ++i) {
        check.exact(index_of(elems[i]) == i && element_at(g, index_of(elems[i])) == elems[i]);
      }
    }
    ctx.finish(check);
  }
}

// ------------------------------------------------------------------- circulant

void verify_circulant(Context& ctx) {
  {
    Check check = ctx.begin("circulant", "circulant equals sum of a_m P^m",
                            "n = 1..64, random generator");
    auto rng = ctx.rng("circulant shift powers");
    for (std::size_t n = 1; n <= 64; ++n) {
      const CVector c = random_vector(rng, n);
      const DenseMatrix dense = materialize(CirculantMatrix(c));
      const DenseMatrix poly = polynomial_in_shift(decompose_in_powers_of_p(c));
      check.within(max_abs_diff(dense, poly), 1e-12);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("circulant", "circular convolution commutes", "n = 1..256");
    auto rng = ctx.rng("convolution commutes");
    for (std::size_t n = 1; n <= 256; ++n) {
      const CVector c = random_vector(rng, n);
      const CVector d = random_vector(rng, n);
      check.within(max_abs_diff(naive_convolve(c, d), naive_convolve(d, c)), 1e-10);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("circulant", "g_naive_convolve equals dense G-circulant product",
                            "test groups, Z_256, Z_4xZ_8xZ_8, exact");
    auto rng = ctx.rng("g convolution dense");
    std::vector<FiniteAbelianGroup> groups = standard_test_groups();
    groups.push_back(FiniteAbelianGroup::cyclic(256));
    const std::uint64_t big[] = {4, 8, 8};
    groups.push_back(FiniteAbelianGroup::direct_product(big));
    for (const FiniteAbelianGroup& g : groups) {
      const CVector v = random_vector(rng, g.order());
      const CVector u = random_vector(rng, g.order());
      const CVector fast = g_naive_convolve(g, v, u);
      const CVector dense = mat_vec(materialize_g(GCirculant(g, v)), u);
      check.exact(fast == dense, max_abs_diff(fast, dense));
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("circulant", "block decomposition reconstructs the G-circulant",
                            "canonical groups with >= 2 factors, |G| <= 64, and Z_3xZ_2");
    auto rng = ctx.rng("block reconstruction");
    for (const FiniteAbelianGroup& g : multi_factor_groups(64)) {
      const GCirculant c(g, random_vector(rng, g.order()));
      const auto blocks = block_decompose(c);
      check.within(max_abs_diff(materialize_g(c), reconstruct_from_blocks(blocks)), 1e-12);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("circulant", "each block is a G'-circulant read off C",
                            "canonical groups with >= 2 factors, |G| <= 64, and Z_3xZ_2");
    auto rng = ctx.rng("block structure");
    for (const FiniteAbelianGroup& g : multi_factor_groups(64)) {
      const GCirculant c(g, random_vector(rng, g.order()));
      const DenseMatrix dense = materialize_g(c);
      const auto blocks = block_decompose(c);
      const std::uint64_t k = g.factors()[0];
      const std::uint64_t b = g.order() / k;
      for (std::uint64_t m = 0; m < k; ++m) {
        const std::uint64_t col_block = (k - m) % k;
        const DenseMatrix block = materialize_g(blocks[m]);
        bool ok = true;
        for (std::uint64_t i = 0; i < b && ok; ++i) {
          for (std::uint64_t j = 0; j < b && ok; ++j) {
            ok = block(i, j) == dense(i, col_block * b + j) &&
                 block(i, j) == blocks[m].generator()[blocks[m].group().sub_index(i, j)];
          }
        }
        check.exact(ok);
      }
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("circulant", "worked examples (Z_3 circulant, P powers, Z_3xZ_2)",
                            "fixed inputs 1..6");
    const CVector c123{1.0, 2.0, 3.0};
    const DenseMatrix expected(3, 3, {1, 3, 2, 2, 1, 3, 3, 2, 1});
    check.exact(materialize(CirculantMatrix(c123)) == expected);
    const auto coeffs = decompose_in_powers_of_p(c123);
    check.exact(coeffs == std::vector<Complex>{1.0, 3.0, 2.0});
    check.exact(polynomial_in_shift(coeffs) == expected);

    const std::uint64_t z3z2[] = {3, 2};
    const FiniteAbelianGroup g = FiniteAbelianGroup::direct_product(z3z2);
    // a..f = 1..6; rows of the worked example in terms of a..f.
    const int rows[6][6] = {{1, 2, 5, 6, 3, 4}, {2, 1, 6, 5, 4, 3}, {3, 4, 1, 2, 5, 6},
                            {4, 3, 2, 1, 6, 5}, {5, 6, 3, 4, 1, 2}, {6, 5, 4, 3, 2, 1}};
    const DenseMatrix m = materialize_g(GCirculant(g, CVector{1, 2, 3, 4, 5, 6}));
    bool ok = true;
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) ok = ok && m(i, j) == Complex(rows[i][j], 0.0);
    }
    check.exact(ok);
    ctx.finish(check);
  }
}

// --------------------------------------------------------------------- fourier

void verify_fourier(Context& ctx) {
  std::vector<FiniteAbelianGroup> groups = standard_test_groups();
  for (const std::uint64_t n : {128u, 256u}) groups.push_back(FiniteAbelianGroup::cyclic(n));
  const std::uint64_t extra[][3] = {{2, 8, 16}, {4, 4, 9}, {3, 5, 7}};
  for (const auto& e : extra) groups.push_back(FiniteAbelianGroup::direct_product(e));

  {
    Check check = ctx.begin("fourier", "characters are orthogonal: <chi_g, chi_h> = |G| delta",
                            "all pairs, test groups plus groups with |G| <= 256");
    for (const FiniteAbelianGroup& g : groups) {
      const std::uint64_t n = g.order();
      const DenseMatrix f = dft_matrix(g);
      const double limit = 1e-9 * static_cast<double>(n);
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = a; b < n; ++b) {
          Complex acc(0.0, 0.0);
          for (std::uint64_t x = 0; x < n; ++x) acc += std::conj(f(x, a)) * f(x, b);
          const Complex want = a == b ? Complex(static_cast<double>(n), 0.0) : Complex(0.0, 0.0);
          check.within(std::abs(acc - want), limit);
        }
      }
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fourier", "F is symmetric for Z_n", "n = 1..256, exact");
    for (std::uint64_t n = 1; n <= 256; ++n) {
      const DenseMatrix f = dft_matrix(FiniteAbelianGroup::cyclic(n));
      bool ok = true;
      for (std::uint64_t i = 0; i < n && ok; ++i) {
        for (std::uint64_t j = 0; j < i && ok; ++j) ok = f(i, j) == f(j, i);
      }
      check.exact(ok);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fourier", "characters are multiplicative", "all g, x, y; |G| <= 64");
    for (const FiniteAbelianGroup& g : groups) {
      const std::uint64_t n = g.order();
      if (n > 64) continue;
      const DenseMatrix f = dft_matrix(g);
      for (std::uint64_t h = 0; h < n; ++h) {
        for (std::uint64_t x = 0; x < n; ++x) {
          for (std::uint64_t y = 0; y < n; ++y) {
            check.within(std::abs(f(g.add_index(x, y), h) - f(x, h) * f(y, h)), 1e-10);
          }
        }
      }
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fourier", "closed-form and Kronecker characters agree",
                            "every g, test groups plus groups with |G| <= 256");
    for (const FiniteAbelianGroup& g : groups) {
      for (const GroupElement& h : enumerate(g)) {
        check.within(max_abs_diff(character(g, h), character_by_kronecker(g, h)), 1e-12);
      }
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fourier", "G-circulant eigen-relation C chi_g = Lambda_g chi_g",
                            "every g, random v, |G| <= 128 (formula gate at |G| <= 16)");
    auto rng = ctx.rng("eigen relation");
    for (const FiniteAbelianGroup& g : groups) {
      if (g.order() > 128) continue;
      const CVector v = random_vector(rng, g.order());
      const DenseMatrix c = materialize_g(GCirculant(g, v));
      const Spectrum s = g_circulant_eigenvalues(g, v);
      for (const GroupElement& h : enumerate(g)) {
        const CVector chi = character(g, h);
        const CVector lhs = mat_vec(c, chi);
        const Complex lambda = s.values[index_of(h)];
        std::vector<Complex> rhs(chi.size());
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = lambda * chi[i];
        check.within(max_abs_diff(lhs, CVector(std::move(rhs))), 1e-9);
        if (g.order() <= 16) {
          // Direct sum over x as an independent gate on Lambda_g.
          Complex direct(0.0, 0.0);
          for (const GroupElement& x : enumerate(g)) {
            direct += v[index_of(x)] * std::conj(character_value(h, x));
          }
          check.within(std::abs(direct - lambda), 1e-12);
        }
      }
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fourier", "diagonalization residual C - F diag(Lambda) D",
                            "10 random generators per group, |G| <= 128");
    auto rng = ctx.rng("diagonalization");
    for (const FiniteAbelianGroup& g : groups) {
      if (g.order() > 128) continue;
      for (int t = 0; t < 10; ++t) {
        check.within(diagonalize_check(g, random_vector(rng, g.order())), 1e-10);
      }
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fourier", "Boolean-cube characters are exactly +-1",
                            "Z_2^n, n = 1..8, every subset");
    for (std::size_t n = 1; n <= 8; ++n) {
      const std::vector<std::uint64_t> twos(n, 2);
      const FiniteAbelianGroup g = FiniteAbelianGroup::direct_product(twos);
      const DenseMatrix f = dft_matrix(g);
      bool ok = true;
      for (const Complex& z : f.entries()) {
        ok = ok && z.imag() == 0.0 && (z.real() == 1.0 || z.real() == -1.0);
      }
      check.exact(ok);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> subset;
        std::vector<std::uint64_t> coords(n);
        for (std::size_t i = 1; i <= n; ++i) {
          if (mask >> (n - i) & 1) {
            subset.push_back(i);
            coords[i - 1] = 1;
          }
        }
        check.exact(boolean_character(n, subset) == character(g, GroupElement(g, coords)));
      }
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fourier", "naive analysis inverts naive synthesis",
                            "random x on every test group, |G| <= 256");
    auto rng = ctx.rng("naive round trip");
    for (const FiniteAbelianGroup& g : groups) {
      const CVector x = random_vector(rng, g.order());
      check.within(max_abs_diff(apply_D(g, apply_F(g, x)), x), 1e-10);
    }
    ctx.finish(check);
  }
}

// ------------------------------------------------------------------------- fft

std::vector<FiniteAbelianGroup> g_fft_groups() {
  const std::vector<std::vector<std::uint64_t>> specs = {
      {7}, {64}, {100}, {512}, {2, 2, 2, 2, 2, 2, 2, 2, 2}, {4, 8, 16}, {2, 2, 4, 8},
      {3, 4}, {2, 2, 9}, {3, 2}, {5, 8, 9}, {2, 3}, {4, 4, 27}, {6, 10}, {2, 256}};
  std::vector<FiniteAbelianGroup> out;
  for (const auto& s : specs) out.push_back(FiniteAbelianGroup::direct_product(s));
  return out;
}

void verify_fft(Context& ctx) {
  {
    Check check = ctx.begin("fft", "twiddle table matches root_of_unity", "n = 2^0..2^16, exact");
    for (std::uint64_t n = 1; n <= (1u << 16); n *= 2) {
      const auto powers = twiddle_table(n).powers();
      bool ok = powers.size() == n / 2;
      for (std::uint64_t k = 0; k < powers.size() && ok; ++k) {
        ok = powers[k] == root_of_unity(n, static_cast<std::int64_t>(k));
      }
      check.exact(ok);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fft", "fft oracle equivalence",
                            "n = 2^0..2^12, 20 random x each, limit 1e-9 ||x|| log2 n");
    auto rng = ctx.rng("fft oracle");
    for (std::uint64_t k = 0; k <= 12; ++k) {
      const std::uint64_t n = std::uint64_t{1} << k;
      const FiniteAbelianGroup zn = FiniteAbelianGroup::cyclic(n);
      for (int t = 0; t < 20; ++t) {
        const CVector x = random_vector(rng, n);
        check.within(max_abs_diff(fft(x), apply_F(zn, x)),
                     1e-9 * x.max_abs() * static_cast<double>(k));
      }
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fft", "radix-2 factorization reproduces F_n",
                            "n = 2..64, product of the three factors");
    for (std::uint64_t n = 2; n <= 64; n *= 2) {
      const Radix2Factorization f = radix2_factorization(n);
      const DenseMatrix product = mat_mul(mat_mul(f.butterfly, f.half_transforms), f.even_odd);
      check.within(max_abs_diff(product, dft_matrix(FiniteAbelianGroup::cyclic(n))), 1e-12);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fft", "ifft inverts fft", "n = 2^0..2^12, 5 random x each");
    auto rng = ctx.rng("ifft round trip");
    for (std::uint64_t n = 1; n <= 4096; n *= 2) {
      for (int t = 0; t < 5; ++t) {
        const CVector x = random_vector(rng, n);
        check.within(max_abs_diff(ifft(fft(x)), x), 1e-10);
      }
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fft", "convolution theorem D(c*d) = n (Dc o Dd), naive D",
                            "n = 1..64, 128, 256, 512, 1024");
    auto rng = ctx.rng("convolution theorem");
    std::vector<std::uint64_t> sizes;
    for (std::uint64_t n = 1; n <= 64; ++n) sizes.push_back(n);
    for (const std::uint64_t n : {128u, 256u, 512u, 1024u}) sizes.push_back(n);
    for (const std::uint64_t n : sizes) {
      const FiniteAbelianGroup zn = FiniteAbelianGroup::cyclic(n);
      const CVector c = random_vector(rng, n);
      const CVector d = random_vector(rng, n);
      const CVector lhs = apply_D(zn, naive_convolve(c, d));
      const CVector rhs = scaled(hadamard(apply_D(zn, c), apply_D(zn, d)), static_cast<double>(n));
      check.within(max_abs_diff(lhs, rhs), 1e-9);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fft", "fast_convolve matches naive_convolve",
                            "n = 2^0..2^12, relative inf-norm");
    auto rng = ctx.rng("fast convolve");
    for (std::uint64_t n = 1; n <= 4096; n *= 2) {
      const CVector c = random_vector(rng, n);
      const CVector d = random_vector(rng, n);
      const CVector naive = naive_convolve(c, d);
      const double norm = std::max(naive.max_abs(), std::numeric_limits<double>::min());
      check.within(max_abs_diff(fast_convolve(c, d), naive) / norm, 1e-8);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fft", "g_fft matches naive F and D",
                            "single-factor, power-of-two and mixed groups, |G| <= 512");
    auto rng = ctx.rng("g_fft oracle");
    for (const FiniteAbelianGroup& g : g_fft_groups()) {
      const CVector x = random_vector(rng, g.order());
      check.within(max_abs_diff(g_fft(g, x, Direction::kSynthesis), apply_F(g, x)), 1e-9);
      check.within(max_abs_diff(g_fft(g, x, Direction::kAnalysis), apply_D(g, x)), 1e-9);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fft", "g_fft convolution matches naive group convolution",
                            "mixed groups, |G| <= 512");
    auto rng = ctx.rng("g_fft convolution");
    for (const FiniteAbelianGroup& g : g_fft_groups()) {
      const CVector c = random_vector(rng, g.order());
      const CVector d = random_vector(rng, g.order());
      const CVector naive = g_naive_convolve(g, c, d);
      check.within(max_abs_diff(convolve(g, c, d, Engine::kFast).result, naive) /
                       std::max(naive.max_abs(), 1.0),
                   1e-9);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fft", "Walsh-Hadamard exact on integers, WHT(WHT x) = 2^n x",
                            "n = 2^0..2^16, |x_i| <= 2^20, exact");
    auto rng = ctx.rng("walsh hadamard");
    for (std::uint64_t n = 1; n <= (1u << 16); n *= 2) {
      const CVector x = random_integer_vector(rng, n, std::int64_t{1} << 20);
      const CVector y = walsh_hadamard(x);
      bool integral = true;
      for (const Complex& z : y) {
        integral = integral && z.real() == std::round(z.real()) && z.imag() == std::round(z.imag());
      }
      check.exact(integral);
      check.exact(walsh_hadamard(y) == scaled(x, static_cast<double>(n)));
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fft", "Walsh-Hadamard equals the +-1 character matrix",
                            "n = 2^0..2^8, integer x, exact");
    auto rng = ctx.rng("walsh hadamard matrix");
    for (std::size_t bits = 0; bits <= 8; ++bits) {
      const std::vector<std::uint64_t> twos(bits, 2);
      const FiniteAbelianGroup g = FiniteAbelianGroup::direct_product(twos);
      const CVector x = random_integer_vector(rng, g.order(), 1000);
      check.exact(walsh_hadamard(x) == mat_vec(dft_matrix(g), x));
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fft", "real input gives conjugate-symmetric output",
                            "n = 2^1..2^12, y_k = conj(y_{n-k})");
    auto rng = ctx.rng("conjugate symmetry");
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::uint64_t n = 2; n <= 4096; n *= 2) {
      std::vector<double> re(n);
      for (double& v : re) v = dist(rng);
      const CVector y = fft(CVector::from_real(re));
      for (std::uint64_t k = 1; k < n; ++k) check.within(std::abs(y[k] - std::conj(y[n - k])), 1e-10);
    }
    ctx.finish(check);
  }
  {
    Check check = ctx.begin("fft", "worked examples (fft, WHT, linear convolution)", "fixed inputs");
    check.within(max_abs_diff(fft(CVector{0.0, 1.0, 0.0, -1.0}),
                              CVector{0.0, Complex(0, 2), 0.0, Complex(0, -2)}),
                 1e-12);
    check.exact(walsh_hadamard(CVector{1.0, 2.0, 3.0, 4.0}) == CVector{10.0, -2.0, -4.0, 0.0});
    check.within(max_abs_diff(linear_convolve(CVector{1.0, 2.0, 3.0}, CVector{4.0, 5.0}),
                              CVector{4.0, 13.0, 22.0, 15.0}),
                 1e-12);
    check.within(max_abs_diff(fast_convolve(CVector{1.0, 1.0, 0.0, 0.0}, CVector{1.0, 1.0, 0.0, 0.0}),
                              CVector{1.0, 2.0, 1.0, 0.0}),
                 1e-12);
    ctx.finish(check);
  }
}

// ------------------------------------------------------------------------- cli

void verify_cli(Context& ctx) {
  Check check = ctx.begin("cli", "vector file write/parse round trip is lossless",
                          "json and csv, 50 random vectors incl. extreme doubles, exact");
  auto rng = ctx.rng("vector io");
  std::uniform_int_distribution<int> exponent(-300, 300);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  const double specials[] = {0.0, -0.0, 1.0, -1.0, std::numeric_limits<double>::max(),
                             std::numeric_limits<double>::lowest(),
                             std::numeric_limits<double>::min(),
                             std::numeric_limits<double>::denorm_min(), 0.1, 1.0 / 3.0};
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 64;
    std::vector<Complex> v(n);
    for (Complex& z : v) {
      z = Complex(mant(rng) * std::pow(10.0, exponent(rng)), mant(rng) * std::pow(10.0, exponent(rng)));
    }
    if (t == 0) {
      v.clear();
      for (double a : specials) {
        for (double b : specials) v.emplace_back(a, b);
      }
    }
    const CVector x(std::move(v));
    for (const VectorFormat fmt : {VectorFormat::kJson, VectorFormat::kCsv}) {
      check.exact(parse_vector(write_vector(x, fmt), fmt) == x);
    }
  }
  ctx.finish(check);
}

}  // namespace

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

bool is_verify_scope(std::string_view scope) {
  return scope == "all" || scope == "complex_core" || scope == "group" ||
         scope == "circulant" || scope == "fourier" || scope == "fft" || scope == "cli";
}

VerifyReport run_verify(std::string_view scope, std::uint64_t seed, double tolerance,
                        const std::function<void(const CheckResult&)>& on_check) {
  if (!is_verify_scope(scope)) {
    throw_invalid_argument("unknown verify scope '" + std::string(scope) + "'");
  }
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw_invalid_argument("tolerance must be a positive number");
  }
  Context ctx(seed, tolerance, on_check);
  const bool all = scope == "all";
  if (all || scope == "complex_core") verify_complex_core(ctx);
  if (all || scope == "group") verify_group(ctx);
  if (all || scope == "circulant") verify_circulant(ctx);
  if (all || scope == "fourier") verify_fourier(ctx);
  if (all || scope == "fft") verify_fft(ctx);
  if (all || scope == "cli") verify_cli(ctx);
  return VerifyReport{seed, tolerance, ctx.take()};
}

std::string format_check(const CheckResult& check) {
  char numbers[96];
  std::snprintf(numbers, sizeof(numbers), "worst=%.3e ratio=%.3f", check.worst_residual,
                check.worst_ratio);
  return std::string(check.passed ? "PASS" : "FAIL") + "  " + check.module + ": " +
         check.name + "  [" + check.range + "]  " + numbers;
}

std::vector<FiniteAbelianGroup> standard_test_groups() {
  std::vector<FiniteAbelianGroup> groups;
  for (std::uint64_t n = 1; n <= 64; ++n) groups.push_back(FiniteAbelianGroup::cyclic(n));
  for (std::size_t k = 2; k <= 6; ++k) {
    const std::vector<std::uint64_t> twos(k, 2);
    groups.push_back(FiniteAbelianGroup::direct_product(twos));
  }
  const std::vector<std::vector<std::uint64_t>> mixed = {{2, 3}, {3, 4}, {2, 2, 9}, {3, 2}};
  for (const auto& m : mixed) groups.push_back(FiniteAbelianGroup::direct_product(m));
  return groups;
}

std::vector<FiniteAbelianGroup> multi_factor_groups(std::uint64_t max_order) {
  std::vector<std::uint64_t> prime_powers;
  for (std::uint64_t q = 2; q <= max_order; ++q) {
    if (is_prime_power(q)) prime_powers.push_back(q);
  }
  std::vector<FiniteAbelianGroup> out;
  std::vector<std::uint64_t> current;
  // Non-decreasing sequences of prime powers with product <= max_order.
  auto extend = [&](auto&& self, std::size_t from, std::uint64_t product) -> void {
    if (current.size() >= 2) out.push_back(FiniteAbelianGroup::from_canonical_factors(current));
    for (std::size_t i = from; i < prime_powers.size(); ++i) {
      if (product * prime_powers[i] > max_order) break;
      current.push_back(prime_powers[i]);
      self(self, i, product * prime_powers[i]);
      current.pop_back();
    }
  };
  extend(extend, 0, 1);
  if (max_order >= 6) {
    const std::uint64_t z3z2[] = {3, 2};
    out.push_back(FiniteAbelianGroup::direct_product(z3z2));
  }
  return out;
}

}  // namespace abelianfft
