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

// abelianfft command-line front end. Talks to the library only through the
// C interface in abelianfft/abelianfft.h.

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abelianfft/abelianfft.h"

namespace {

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitSemantic = 2;
constexpr int kExitParse = 3;
constexpr int kExitResource = 4;

struct VectorDeleter {
  void operator()(afft_vector* v) const { afft_vector_destroy(v); }
};
struct GroupDeleter {
  void operator()(afft_group* g) const { afft_group_destroy(g); }
};
struct MatrixDeleter {
  void operator()(afft_matrix* m) const { afft_matrix_destroy(m); }
};
using Vector = std::unique_ptr<afft_vector, VectorDeleter>;
using Group = std::unique_ptr<afft_group, GroupDeleter>;
using Matrix = std::unique_ptr<afft_matrix, MatrixDeleter>;

// Carries a library failure up to main().
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(afft_status status) {
  switch (status) {
    case AFFT_OK: return kExitOk;
    case AFFT_ERR_PARSE: return kExitParse;
    case AFFT_ERR_RESOURCE_LIMIT: return kExitResource;
    default: return kExitSemantic;
  }
}

void check(afft_status status, const std::string& context = "") {
  if (status == AFFT_OK) return;
  std::string message = afft_last_error();
  if (!context.empty()) message = context + ": " + message;
  throw Failure{exit_code_for(status), message};
}

struct Settings {
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
  std::size_t oracle_cap = 0;
  std::string format;  // empty: from the output path, JSON on stdout
  bool porcelain = false;
  int precision = 6;
};

std::size_t resolve_oracle_cap(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ABELIANFFT_ORACLE_CAP"); env && *env) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0' || value == 0 || env[0] == '-') {
      throw Failure{kExitSemantic,
                    std::string("ABELIANFFT_ORACLE_CAP must be a positive integer, got '") + env +
                        "'"};
    }
    return static_cast<std::size_t>(value);
  }
  return afft_default_oracle_cap();
}

afft_format output_format(const Settings& s) {
  if (s.format == "json") return AFFT_FORMAT_JSON;
  if (s.format == "csv") return AFFT_FORMAT_CSV;
  return AFFT_FORMAT_AUTO;
}

Group parse_group(const std::string& spec) {
  afft_group* g = nullptr;
  check(afft_group_parse(spec.c_str(), &g), "group '" + spec + "'");
  return Group(g);
}

Vector load(const std::string& path) {
  afft_vector* v = nullptr;
  check(afft_vector_load(path.c_str(), AFFT_FORMAT_AUTO, &v), path);
  return Vector(v);
}

std::vector<double> values_of(const afft_vector* v) {
  std::vector<double> out(2 * afft_vector_size(v));
  check(afft_vector_get(v, out.data(), afft_vector_size(v)));
  return out;
}

std::string short_complex(double re, double im, int precision) {
  char buf[96];
  afft_format_complex(re, im, precision, buf, sizeof(buf), nullptr);
  return buf;
}

std::string element_label(const afft_group* g, std::uint64_t index) {
  char buf[256];
  check(afft_group_element_label(g, index, buf, sizeof(buf), nullptr));
  return buf;
}

// Writes to `path`, or to stdout in full precision when `path` is empty.
void emit_vector(const afft_vector* v, const std::string& path, const Settings& s) {
  if (!path.empty()) {
    check(afft_vector_save(v, path.c_str(), output_format(s)), path);
    return;
  }
  const std::vector<double> xs = values_of(v);
  const bool csv = s.format == "csv";
  std::string out = csv ? "re,im\n" : "[";
  for (std::size_t i = 0; i < xs.size() / 2; ++i) {
    char re[40];
    char im[40];
    std::snprintf(re, sizeof(re), "%.17g", xs[2 * i] + 0.0);
    std::snprintf(im, sizeof(im), "%.17g", xs[2 * i + 1] + 0.0);
    if (csv) {
      out += std::string(re) + "," + im + "\n";
    } else {
      out += std::string(i ? ", " : "") + "[" + re + ", " + im + "]";
    }
  }
  if (!csv) out += "]\n";
  std::cout << out;
}

// One table row: a label followed by complex entries.
void print_row(const std::string& label, const std::vector<double>& xs, const Settings& s) {
  std::string line = label;
  const char* sep = s.porcelain ? "\t" : "  ";
  if (!label.empty()) line += '\t';
  for (std::size_t i = 0; i < xs.size() / 2; ++i) {
    if (i > 0) line += sep;
    line += short_complex(xs[2 * i], xs[2 * i + 1], s.precision);
  }
  std::cout << line << '\n';
}

void info(const std::string& text) { std::cerr << text << '\n'; }

const char* normalization_note(afft_direction direction) {
  return direction == AFFT_ANALYSIS ? "D = (1/|G|) F^*, scaled once by 1/|G|"
                                    : "F, chi_g(x) = e(sum g_i x_i / k_i), unscaled";
}

// ---- subcommands

struct TransformArgs {
  std::string group;
  std::string input;
  std::string output;
  std::string direction = "analysis";
  std::string engine = "fast";
};

afft_engine engine_of(const std::string& name) {
  return name == "naive" ? AFFT_ENGINE_NAIVE : AFFT_ENGINE_FAST;
}

int run_transform(const TransformArgs& a, const Settings& s) {
  const Group g = parse_group(a.group);
  const Vector x = load(a.input);
  const afft_direction direction = a.direction == "synthesis" ? AFFT_SYNTHESIS : AFFT_ANALYSIS;
  afft_vector* out = nullptr;
  char method[128];
  check(afft_transform(g.get(), x.get(), direction, engine_of(a.engine), &out, method,
                       sizeof(method)));
  const Vector y(out);
  info(std::string("group: ") + afft_group_name(g.get()) + "  order: " +
       std::to_string(afft_group_order(g.get())));
  info("engine: " + a.engine + " (" + method + ")");
  info("direction: " + a.direction + "  normalization: " + normalization_note(direction));
  emit_vector(y.get(), a.output, s);
  return kExitOk;
}

struct ConvolveArgs {
  std::string group;
  std::string c;
  std::string d;
  std::string output;
  std::string engine = "fast";
};

int run_convolve(const ConvolveArgs& a, const Settings& s) {
  const Group g = parse_group(a.group);
  const Vector c = load(a.c);
  const Vector d = load(a.d);
  afft_vector* out = nullptr;
  char method[128];
  char notice[256];
  check(afft_convolve(g.get(), c.get(), d.get(), engine_of(a.engine), &out, method,
                      sizeof(method), notice, sizeof(notice)));
  const Vector y(out);
  info(std::string("group: ") + afft_group_name(g.get()) + "  engine: " + a.engine + " (" +
       method + ")");
  if (notice[0] != '\0') info(std::string("notice: ") + notice);
  emit_vector(y.get(), a.output, s);
  return kExitOk;
}

struct CharactersArgs {
  std::string group;
  std::string element;
};

int run_characters(const CharactersArgs& a, const Settings& s) {
  const Group g = parse_group(a.group);
  const std::uint64_t n = afft_group_order(g.get());
  std::uint64_t first = 0;
  std::uint64_t last = n;
  if (!a.element.empty()) {
    check(afft_group_parse_element(g.get(), a.element.c_str(), &first), "element");
    last = first + 1;
  } else if (n > s.oracle_cap) {
    throw Failure{kExitResource, "character table of order " + std::to_string(n) +
                                     " exceeds oracle cap " + std::to_string(s.oracle_cap)};
  }
  if (!s.porcelain) std::cout << "g\tchi_g(x), x in index order\n";
  for (std::uint64_t i = first; i < last; ++i) {
    afft_vector* chi = nullptr;
    check(afft_character(g.get(), i, &chi));
    const Vector owned(chi);
    print_row(element_label(g.get(), i), values_of(chi), s);
  }
  return kExitOk;
}

struct CirculantArgs {
  std::string group;
  std::string input;
  std::string action;
};

int run_circulant(const CirculantArgs& a, const Settings& s) {
  const Group g = parse_group(a.group);
  const Vector v = load(a.input);
  if (a.action == "materialize") {
    afft_matrix* raw = nullptr;
    check(afft_circulant_materialize(g.get(), v.get(), s.oracle_cap, &raw));
    const Matrix m(raw);
    const std::size_t rows = afft_matrix_rows(raw);
    const std::size_t cols = afft_matrix_cols(raw);
    std::vector<double> xs(2 * rows * cols);
    check(afft_matrix_get(raw, xs.data(), rows * cols));
    for (std::size_t r = 0; r < rows; ++r) {
      print_row("", std::vector<double>(xs.begin() + 2 * r * cols, xs.begin() + 2 * (r + 1) * cols),
                s);
    }
    return kExitOk;
  }
  if (a.action == "spectrum") {
    afft_vector* raw = nullptr;
    check(afft_circulant_spectrum(g.get(), v.get(), &raw));
    const Vector lambda(raw);
    const std::vector<double> xs = values_of(raw);
    if (!s.porcelain) std::cout << "g\tLambda_g\n";
    for (std::uint64_t i = 0; i < afft_vector_size(raw); ++i) {
      print_row(element_label(g.get(), i), {xs[2 * i], xs[2 * i + 1]}, s);
    }
    return kExitOk;
  }
  if (a.action == "blocks") {
    std::vector<std::uint64_t> factors(afft_group_rank(g.get()));
    afft_group_factors(g.get(), factors.data(), factors.size());
    if (factors.size() < 2) {
      throw Failure{kExitSemantic, "blocks need a group with at least two factors"};
    }
    afft_group* tail_raw = nullptr;
    check(afft_group_tail(g.get(), &tail_raw));
    const Group tail(tail_raw);
    if (!s.porcelain) {
      std::cout << "# C = sum_i P^i (x) C_{(k-i) mod k}, blocks over " << afft_group_name(tail_raw)
                << '\n';
    }
    for (std::uint64_t m = 0; m < factors[0]; ++m) {
      afft_vector* raw = nullptr;
      check(afft_circulant_block(g.get(), v.get(), m, &raw));
      const Vector block(raw);
      print_row("C_" + std::to_string(m), values_of(raw), s);
    }
    return kExitOk;
  }
  // check
  double residual = 0.0;
  check(afft_circulant_check(g.get(), v.get(), s.oracle_cap, &residual));
  const bool pass = residual <= s.tolerance;
  char buf[128];
  if (s.porcelain) {
    std::snprintf(buf, sizeof(buf), "%.6e\t%.6e\t%s", residual, s.tolerance,
                  pass ? "PASS" : "FAIL");
  } else {
    std::snprintf(buf, sizeof(buf), "diagonalization residual %.6e (tolerance %.1e): %s",
                  residual, s.tolerance, pass ? "PASS" : "FAIL");
  }
  std::cout << buf << '\n';
  return pass ? kExitOk : kExitVerifyFailed;
}

struct VerifyState {
  const Settings* settings;
  std::vector<std::string> failed;
  std::size_t count = 0;
};

void on_check(const afft_check* c, void* user) {
  auto* state = static_cast<VerifyState*>(user);
  ++state->count;
  if (!c->passed) state->failed.push_back(std::string(c->module) + ": " + c->name);
  char numbers[128];
  if (state->settings->porcelain) {
    std::snprintf(numbers, sizeof(numbers), "%.6e\t%.6g", c->worst_residual, c->worst_ratio);
    std::cout << (c->passed ? "PASS" : "FAIL") << '\t' << c->module << '\t' << c->name << '\t'
              << c->range << '\t' << numbers << '\n';
  } else {
    std::snprintf(numbers, sizeof(numbers), "worst residual %.3e (%.3g of limit)",
                  c->worst_residual, c->worst_ratio);
    std::cout << (c->passed ? "PASS" : "FAIL") << "  " << c->module << ": " << c->name << "  ["
              << c->range << "]  " << numbers << '\n';
  }
  std::cout.flush();
}

int run_verify(const std::string& scope, const Settings& s) {
  VerifyState state{&s, {}, 0};
  if (!s.porcelain) {
    std::cout << "verify " << scope << "  seed " << s.seed << "  tolerance " << s.tolerance
              << '\n';
  }
  std::size_t failures = 0;
  check(afft_verify(scope.c_str(), s.seed, s.tolerance, on_check, &state, &failures));
  if (failures == 0) {
    if (!s.porcelain) std::cout << "all " << state.count << " checks passed\n";
    return kExitOk;
  }
  std::cerr << failures << " of " << state.count << " checks failed (seed " << s.seed << "):\n";
  for (const std::string& name : state.failed) std::cerr << "  " << name << '\n';
  return kExitVerifyFailed;
}

struct BenchArgs {
  int min_exponent = 12;
  int max_exponent = 18;
};

int run_bench(const BenchArgs& a, const Settings& s) {
  if (a.max_exponent > 24 || a.min_exponent < 0 || a.min_exponent > a.max_exponent) {
    throw Failure{kExitSemantic, "need 0 <= min-exponent <= max-exponent <= 24"};
  }
  std::vector<std::uint64_t> sizes;
  for (int e = a.min_exponent; e <= a.max_exponent; ++e) sizes.push_back(std::uint64_t{1} << e);
  std::vector<afft_bench_row> rows(sizes.size());
  check(afft_bench(sizes.data(), sizes.size(), s.oracle_cap, s.seed, rows.data()));

  const char* sep = s.porcelain ? "\t" : "  ";
  std::cout << "n" << sep << "fft_s" << sep << "naive_s" << sep << "doubling_ratio\n";
  std::vector<std::string> warnings;
  for (const afft_bench_row& r : rows) {
    char fft_s[32];
    char naive_s[32];
    char ratio[32];
    std::snprintf(fft_s, sizeof(fft_s), "%.6g", r.fft_seconds);
    if (r.naive_seconds < 0) {
      std::snprintf(naive_s, sizeof(naive_s), "skipped");
    } else {
      std::snprintf(naive_s, sizeof(naive_s), "%.6g", r.naive_seconds);
    }
    if (r.doubling_ratio < 0) {
      std::snprintf(ratio, sizeof(ratio), "-");
    } else {
      std::snprintf(ratio, sizeof(ratio), "%.3f", r.doubling_ratio);
      if (r.doubling_ratio < 1.6 || r.doubling_ratio > 3.0) {
        warnings.push_back("doubling ratio " + std::string(ratio) + " at n = " +
                           std::to_string(r.n) + " outside [1.6, 3.0]");
      }
    }
    std::cout << r.n << sep << fft_s << sep << naive_s << sep << ratio << '\n';
    if (r.n == 4096 && r.naive_seconds >= 0 && r.naive_seconds < 10 * r.fft_seconds) {
      warnings.push_back("fft at n = 4096 is less than 10x faster than the naive transform");
    }
  }
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Fourier analysis on finite abelian groups.\n"
      "Groups: Z4, Z3xZ2, Z2^3 or a bare n for Z_n. Vectors: JSON [[re, im], ...] or CSV.\n"
      "synthesis computes F x with F(x,g) = chi_g(x); analysis computes (1/|G|) F^* x.",
      "abelianfft"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", afft_version());

  Settings settings;
  std::optional<std::size_t> cap_flag;
  app.add_option("--tolerance", settings.tolerance, "Residual tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", settings.seed, "Seed for randomized checks (default 1)");
  app.add_option("--oracle-cap", cap_flag,
                 "Largest dimension for dense matrices (default 4096, or "
                 "$ABELIANFFT_ORACLE_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", settings.format, "Output vector format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--porcelain", settings.porcelain, "Tab-separated tables without headers");
  app.add_option("--precision", settings.precision, "Significant digits in tables")
      ->check(CLI::Range(1, 17));

  TransformArgs transform;
  auto* t = app.add_subcommand("transform", "Fourier transform of a vector on a group");
  t->add_option("group", transform.group, "Group spec")->required();
  t->add_option("input", transform.input, "Input vector file")->required();
  t->add_option("-o,--output", transform.output, "Output file (default stdout)");
  t->add_option("--direction", transform.direction, "analysis: (1/|G|) F^* x; synthesis: F x")
      ->check(CLI::IsMember({"analysis", "synthesis"}));
  t->add_option("--engine", transform.engine, "naive or fast (default fast)")
      ->check(CLI::IsMember({"naive", "fast"}));

  ConvolveArgs convolve;
  auto* c = app.add_subcommand("convolve", "Group convolution (c * d)(x) = sum_y c(x-y) d(y)");
  c->add_option("group", convolve.group, "Group spec")->required();
  c->add_option("c", convolve.c, "First vector file")->required();
  c->add_option("d", convolve.d, "Second vector file")->required();
  c->add_option("-o,--output", convolve.output, "Output file (default stdout)");
  c->add_option("--engine", convolve.engine, "naive or fast (default fast)")
      ->check(CLI::IsMember({"naive", "fast"}));

  CharactersArgs characters;
  auto* ch = app.add_subcommand("characters", "Character table, one chi_g per row");
  ch->add_option("group", characters.group, "Group spec")->required();
  ch->add_option("--element", characters.element, "Only chi_g for this g, e.g. 1,1");

  CirculantArgs circulant;
  auto* ci = app.add_subcommand("circulant", "G-circulant C(x,y) = v(x - y)");
  ci->add_option("group", circulant.group, "Group spec")->required();
  ci->add_option("input", circulant.input, "Generator vector file")->required();
  ci->add_option("action", circulant.action, "materialize, spectrum, blocks or check")
      ->required()
      ->check(CLI::IsMember({"materialize", "spectrum", "blocks", "check"}));

  std::string scope = "all";
  auto* v = app.add_subcommand("verify", "Run the property suite");
  v->add_option("scope", scope,
                "all, complex_core, group, circulant, fourier, fft or cli (default all)")
      ->check(CLI::IsMember({"all", "complex_core", "group", "circulant", "fourier", "fft", "cli"}));

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time fft against the naive transform");
  b->add_option("--max-exponent", bench.max_exponent, "Largest size 2^E, E <= 24 (default 18)");
  b->add_option("--min-exponent", bench.min_exponent, "Smallest size 2^E (default 12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitSemantic;
  }

  try {
    settings.oracle_cap = resolve_oracle_cap(cap_flag);
    if (t->parsed()) return run_transform(transform, settings);
    if (c->parsed()) return run_convolve(convolve, settings);
    if (ch->parsed()) return run_characters(characters, settings);
    if (ci->parsed()) return run_circulant(circulant, settings);
    if (v->parsed()) return run_verify(scope, settings);
    return run_bench(bench, settings);
  } catch (const Failure& f) {
    std::cerr << "abelianfft: " << f.message << '\n';
    return f.exit_code;
  }
}
