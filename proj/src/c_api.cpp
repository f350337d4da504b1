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

#include "abelianfft/abelianfft.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "abelianfft/circulant.hpp"
#include "abelianfft/complex_core.hpp"
#include "abelianfft/error.hpp"
#include "abelianfft/fft.hpp"
#include "abelianfft/fourier.hpp"
#include "abelianfft/group.hpp"
#include "abelianfft/vector_io.hpp"
#include "abelianfft/verify.hpp"

struct afft_vector {
  abelianfft::CVector value;
};

struct afft_group {
  explicit afft_group(abelianfft::FiniteAbelianGroup g)
      : value(std::move(g)),
        name(value.to_string()),
        plan(abelianfft::make_plan(value).describe()) {}

  abelianfft::FiniteAbelianGroup value;
  std::string name;
  std::string plan;
};

struct afft_matrix {
  abelianfft::DenseMatrix value;
};

namespace {

using abelianfft::CVector;
using abelianfft::ErrorKind;

thread_local std::string last_error;

afft_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return AFFT_ERR_INVALID_ARGUMENT;
    case ErrorKind::kDimension: return AFFT_ERR_DIMENSION;
    case ErrorKind::kUnsupportedLength: return AFFT_ERR_UNSUPPORTED_LENGTH;
    case ErrorKind::kResourceLimit: return AFFT_ERR_RESOURCE_LIMIT;
    case ErrorKind::kParse: return AFFT_ERR_PARSE;
  }
  return AFFT_ERR_INTERNAL;
}

afft_status fail(afft_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body` and translates exceptions into status codes.
template <typename Body>
afft_status guarded(Body&& body) noexcept {
  try {
    body();
    last_error.clear();
    return AFFT_OK;
  } catch (const abelianfft::Error& e) {
    return fail(status_for(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(AFFT_ERR_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(AFFT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(AFFT_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) abelianfft::throw_invalid_argument(what);
}

std::size_t cap_or_default(std::size_t cap) {
  return cap == 0 ? abelianfft::kDefaultOracleCap : cap;
}

void copy_string(const std::string& text, char* buf, std::size_t capacity,
                 std::size_t* needed) {
  if (needed) *needed = text.size();
  if (buf == nullptr || capacity == 0) return;
  const std::size_t n = std::min(text.size(), capacity - 1);
  std::memcpy(buf, text.data(), n);
  buf[n] = '\0';
}

abelianfft::VectorFormat resolve_format(afft_format format, const char* path) {
  switch (format) {
    case AFFT_FORMAT_JSON: return abelianfft::VectorFormat::kJson;
    case AFFT_FORMAT_CSV: return abelianfft::VectorFormat::kCsv;
    case AFFT_FORMAT_AUTO: return abelianfft::format_for_path(path);
  }
  abelianfft::throw_invalid_argument("unknown vector format");
}

abelianfft::Engine to_engine(afft_engine engine) {
  require(engine == AFFT_ENGINE_NAIVE || engine == AFFT_ENGINE_FAST, "unknown engine");
  return engine == AFFT_ENGINE_FAST ? abelianfft::Engine::kFast : abelianfft::Engine::kNaive;
}

afft_vector* wrap(CVector v) { return new afft_vector{std::move(v)}; }

}  // namespace

extern "C" {

const char* afft_version(void) { return "1.0.0"; }

const char* afft_status_name(afft_status status) {
  switch (status) {
    case AFFT_OK: return "ok";
    case AFFT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case AFFT_ERR_DIMENSION: return "dimension mismatch";
    case AFFT_ERR_UNSUPPORTED_LENGTH: return "unsupported length";
    case AFFT_ERR_RESOURCE_LIMIT: return "resource limit";
    case AFFT_ERR_PARSE: return "parse error";
    case AFFT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* afft_last_error(void) { return last_error.c_str(); }

size_t afft_default_oracle_cap(void) { return abelianfft::kDefaultOracleCap; }

double afft_default_tolerance(void) { return abelianfft::kDefaultTolerance; }

// ---- vectors

afft_status afft_vector_create(const double* interleaved, size_t n, afft_vector** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    require(interleaved != nullptr || n == 0, "data must not be null");
    std::vector<abelianfft::Complex> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = {interleaved[2 * i], interleaved[2 * i + 1]};
    *out = wrap(CVector(std::move(values)));
  });
}

size_t afft_vector_size(const afft_vector* v) { return v ? v->value.size() : 0; }

afft_status afft_vector_get(const afft_vector* v, double* interleaved, size_t n) {
  return guarded([&] {
    require(v != nullptr && interleaved != nullptr, "arguments must not be null");
    if (n != v->value.size()) {
      abelianfft::throw_dimension("buffer holds " + std::to_string(n) + " values, vector has " +
                                  std::to_string(v->value.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      interleaved[2 * i] = v->value[i].real();
      interleaved[2 * i + 1] = v->value[i].imag();
    }
  });
}

void afft_vector_destroy(afft_vector* v) { delete v; }

afft_status afft_vector_load(const char* path, afft_format format, afft_vector** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "arguments must not be null");
    *out = wrap(abelianfft::load_vector(path, resolve_format(format, path)));
  });
}

afft_status afft_vector_save(const afft_vector* v, const char* path, afft_format format) {
  return guarded([&] {
    require(v != nullptr && path != nullptr, "arguments must not be null");
    abelianfft::save_vector(v->value, path, resolve_format(format, path));
  });
}

afft_status afft_vector_max_abs_diff(const afft_vector* a, const afft_vector* b, double* out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "arguments must not be null");
    *out = abelianfft::max_abs_diff(a->value, b->value);
  });
}

void afft_format_complex(double re, double im, int precision, char* buf, size_t capacity,
                         size_t* needed) {
  copy_string(abelianfft::format_complex_short({re, im}, precision), buf, capacity, needed);
}

// ---- groups

afft_status afft_group_parse(const char* spec, afft_group** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "arguments must not be null");
    *out = new afft_group(abelianfft::parse_group_spec(spec));
  });
}

afft_status afft_group_from_moduli(const uint64_t* moduli, size_t count, afft_group** out) {
  return guarded([&] {
    require(out != nullptr && (moduli != nullptr || count == 0), "arguments must not be null");
    *out = new afft_group(
        abelianfft::FiniteAbelianGroup::direct_product(std::span<const uint64_t>(moduli, count)));
  });
}

afft_status afft_group_canonicalize(const afft_group* g, afft_group** out,
                                    uint64_t* permutation) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "arguments must not be null");
    const abelianfft::CanonicalForm form = abelianfft::canonicalize(g->value.factors());
    if (permutation) std::copy(form.permutation.begin(), form.permutation.end(), permutation);
    *out = new afft_group(form.group);
  });
}

void afft_group_destroy(afft_group* g) { delete g; }

uint64_t afft_group_order(const afft_group* g) { return g ? g->value.order() : 0; }

size_t afft_group_rank(const afft_group* g) { return g ? g->value.rank() : 0; }

size_t afft_group_factors(const afft_group* g, uint64_t* out, size_t capacity) {
  if (g == nullptr) return 0;
  const auto factors = g->value.factors();
  if (out) std::copy_n(factors.begin(), std::min(capacity, factors.size()), out);
  return factors.size();
}

const char* afft_group_name(const afft_group* g) { return g ? g->name.c_str() : ""; }

const char* afft_group_plan(const afft_group* g) { return g ? g->plan.c_str() : ""; }

afft_status afft_group_tail(const afft_group* g, afft_group** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "arguments must not be null");
    require(!g->value.is_trivial(), "the trivial group has no first factor");
    *out = new afft_group(g->value.tail());
  });
}

afft_status afft_group_index_of(const afft_group* g, const uint64_t* coords, size_t rank,
                                uint64_t* index) {
  return guarded([&] {
    require(g != nullptr && index != nullptr && (coords != nullptr || rank == 0),
            "arguments must not be null");
    const abelianfft::GroupElement x(g->value, std::vector<uint64_t>(coords, coords + rank));
    *index = abelianfft::index_of(x);
  });
}

afft_status afft_group_element_at(const afft_group* g, uint64_t index, uint64_t* coords,
                                  size_t rank) {
  return guarded([&] {
    require(g != nullptr && (coords != nullptr || rank == 0), "arguments must not be null");
    if (rank != g->value.rank()) abelianfft::throw_dimension("rank mismatch");
    const auto x = abelianfft::element_at(g->value, index);
    std::copy(x.coordinates().begin(), x.coordinates().end(), coords);
  });
}

afft_status afft_group_parse_element(const afft_group* g, const char* label, uint64_t* index) {
  return guarded([&] {
    require(g != nullptr && label != nullptr && index != nullptr, "arguments must not be null");
    *index = abelianfft::index_of(abelianfft::parse_element(g->value, label));
  });
}

afft_status afft_group_element_label(const afft_group* g, uint64_t index, char* buf,
                                     size_t capacity, size_t* needed) {
  return guarded([&] {
    require(g != nullptr, "group must not be null");
    copy_string(abelianfft::element_at(g->value, index).to_string(), buf, capacity, needed);
  });
}

// ---- transforms

afft_status afft_transform(const afft_group* g, const afft_vector* x, afft_direction direction,
                           afft_engine engine, afft_vector** out, char* method,
                           size_t method_capacity) {
  return guarded([&] {
    require(g != nullptr && x != nullptr && out != nullptr, "arguments must not be null");
    require(direction == AFFT_ANALYSIS || direction == AFFT_SYNTHESIS, "unknown direction");
    auto outcome = abelianfft::transform(
        g->value, x->value,
        direction == AFFT_ANALYSIS ? abelianfft::Direction::kAnalysis
                                   : abelianfft::Direction::kSynthesis,
        to_engine(engine));
    copy_string(outcome.method, method, method_capacity, nullptr);
    *out = wrap(std::move(outcome.result));
  });
}

afft_status afft_convolve(const afft_group* g, const afft_vector* c, const afft_vector* d,
                          afft_engine engine, afft_vector** out, char* method,
                          size_t method_capacity, char* notice, size_t notice_capacity) {
  return guarded([&] {
    require(g != nullptr && c != nullptr && d != nullptr && out != nullptr,
            "arguments must not be null");
    auto outcome = abelianfft::convolve(g->value, c->value, d->value, to_engine(engine));
    copy_string(outcome.method, method, method_capacity, nullptr);
    copy_string(outcome.notice.value_or(""), notice, notice_capacity, nullptr);
    *out = wrap(std::move(outcome.result));
  });
}

afft_status afft_fft(const afft_vector* x, afft_vector** out) {
  return guarded([&] {
    require(x != nullptr && out != nullptr, "arguments must not be null");
    *out = wrap(abelianfft::fft(x->value));
  });
}

afft_status afft_ifft(const afft_vector* y, afft_vector** out) {
  return guarded([&] {
    require(y != nullptr && out != nullptr, "arguments must not be null");
    *out = wrap(abelianfft::ifft(y->value));
  });
}

afft_status afft_walsh_hadamard(const afft_vector* x, afft_vector** out) {
  return guarded([&] {
    require(x != nullptr && out != nullptr, "arguments must not be null");
    *out = wrap(abelianfft::walsh_hadamard(x->value));
  });
}

afft_status afft_fast_convolve(const afft_vector* c, const afft_vector* d, afft_vector** out) {
  return guarded([&] {
    require(c != nullptr && d != nullptr && out != nullptr, "arguments must not be null");
    *out = wrap(abelianfft::fast_convolve(c->value, d->value));
  });
}

afft_status afft_linear_convolve(const afft_vector* c, const afft_vector* d,
                                 afft_vector** out) {
  return guarded([&] {
    require(c != nullptr && d != nullptr && out != nullptr, "arguments must not be null");
    *out = wrap(abelianfft::linear_convolve(c->value, d->value));
  });
}

afft_status afft_character(const afft_group* g, uint64_t g_index, afft_vector** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "arguments must not be null");
    *out = wrap(abelianfft::character(g->value, abelianfft::element_at(g->value, g_index)));
  });
}

afft_status afft_dft_matrix(const afft_group* g, size_t oracle_cap, afft_matrix** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "arguments must not be null");
    *out = new afft_matrix{abelianfft::dft_matrix(g->value, cap_or_default(oracle_cap))};
  });
}

// ---- G-circulants

afft_status afft_circulant_materialize(const afft_group* g, const afft_vector* v,
                                       size_t oracle_cap, afft_matrix** out) {
  return guarded([&] {
    require(g != nullptr && v != nullptr && out != nullptr, "arguments must not be null");
    const abelianfft::GCirculant c(g->value, v->value);
    *out = new afft_matrix{abelianfft::materialize_g(c, cap_or_default(oracle_cap))};
  });
}

afft_status afft_circulant_spectrum(const afft_group* g, const afft_vector* v,
                                    afft_vector** out) {
  return guarded([&] {
    require(g != nullptr && v != nullptr && out != nullptr, "arguments must not be null");
    *out = wrap(abelianfft::g_circulant_eigenvalues(g->value, v->value).values);
  });
}

afft_status afft_circulant_block(const afft_group* g, const afft_vector* v, uint64_t m,
                                 afft_vector** out) {
  return guarded([&] {
    require(g != nullptr && v != nullptr && out != nullptr, "arguments must not be null");
    const auto blocks = abelianfft::block_decompose(abelianfft::GCirculant(g->value, v->value));
    require(m < blocks.size(), "block index out of range");
    *out = wrap(blocks[m].generator());
  });
}

afft_status afft_circulant_check(const afft_group* g, const afft_vector* v, size_t oracle_cap,
                                 double* residual) {
  return guarded([&] {
    require(g != nullptr && v != nullptr && residual != nullptr, "arguments must not be null");
    *residual = abelianfft::diagonalize_check(g->value, v->value, cap_or_default(oracle_cap));
  });
}

// ---- dense matrices

size_t afft_matrix_rows(const afft_matrix* m) { return m ? m->value.rows() : 0; }

size_t afft_matrix_cols(const afft_matrix* m) { return m ? m->value.cols() : 0; }

afft_status afft_matrix_get(const afft_matrix* m, double* interleaved, size_t count) {
  return guarded([&] {
    require(m != nullptr && interleaved != nullptr, "arguments must not be null");
    const auto entries = m->value.entries();
    if (count != entries.size()) abelianfft::throw_dimension("matrix entry count mismatch");
    for (std::size_t i = 0; i < count; ++i) {
      interleaved[2 * i] = entries[i].real();
      interleaved[2 * i + 1] = entries[i].imag();
    }
  });
}

void afft_matrix_destroy(afft_matrix* m) { delete m; }

// ---- verification and benchmarks

afft_status afft_verify(const char* scope, uint64_t seed, double tolerance,
                        afft_check_callback callback, void* user, size_t* failures) {
  return guarded([&] {
    require(scope != nullptr, "scope must not be null");
    std::function<void(const abelianfft::CheckResult&)> forward;
    if (callback) {
      forward = [&](const abelianfft::CheckResult& r) {
        const afft_check c{r.module.c_str(), r.name.c_str(),   r.range.c_str(),
                           r.worst_residual, r.worst_ratio,   r.passed ? 1 : 0};
        callback(&c, user);
      };
    }
    const auto report = abelianfft::run_verify(scope, seed, tolerance, forward);
    if (failures) *failures = report.failures();
  });
}

afft_status afft_bench(const uint64_t* sizes, size_t count, size_t oracle_cap, uint64_t seed,
                       afft_bench_row* rows) {
  return guarded([&] {
    require(sizes != nullptr && rows != nullptr, "arguments must not be null");
    abelianfft::BenchOptions options;
    options.oracle_cap = cap_or_default(oracle_cap);
    options.seed = seed;
    const auto report = abelianfft::bench(std::span<const uint64_t>(sizes, count), options);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      const auto& r = report.rows[i];
      rows[i] = afft_bench_row{r.n, r.fft_seconds, r.naive_seconds.value_or(-1.0),
                               r.doubling_ratio.value_or(-1.0)};
    }
  });
}

}  // extern "C"
