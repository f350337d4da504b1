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

#ifndef ABELIANFFT_VECTOR_IO_HPP_
#define ABELIANFFT_VECTOR_IO_HPP_

// Vector files.
//
//   json: [[re, im], ...]; a bare number stands for [re, 0].
//   csv:  one "re,im" per line; a single column means im = 0; an optional
//         header line "re,im" is skipped.
//
// Writers emit 17 significant digits, so parse(write(v)) == v exactly.

#include <string>
#include <string_view>

#include "abelianfft/complex_core.hpp"

namespace abelianfft {

enum class VectorFormat {
  kJson,
  kCsv,
};

// ".csv" -> kCsv, anything else -> kJson.
VectorFormat format_for_path(std::string_view path);

// Throws kParse on malformed text.
CVector parse_vector(std::string_view text, VectorFormat format);
std::string write_vector(const CVector& v, VectorFormat format);

CVector load_vector(const std::string& path, VectorFormat format);
void save_vector(const CVector& v, const std::string& path, VectorFormat format);

// "%.17g" of a double, with -0 printed as 0.
std::string format_double(double value);

// Human-readable "re+imi" with `precision` significant digits; components
// below half a unit of that precision print as 0.
std::string format_complex_short(const Complex& z, int precision = 6);

}  // namespace abelianfft

#endif  // ABELIANFFT_VECTOR_IO_HPP_
