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

#include "abelianfft/vector_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "abelianfft/error.hpp"
#include "json.hpp"

namespace abelianfft {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view field, std::size_t line) {
  const std::string text(trim(field));
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw_parse("line " + std::to_string(line) + ": '" + text + "' is not a number");
  }
  return value;
}

CVector parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw_parse(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw_parse("JSON vector must be an array");
  std::vector<Complex> out;
  out.reserve(doc.size());
  for (std::size_t j = 0; j < doc.size(); ++j) {
    const auto& item = doc[j];
    if (item.is_number()) {
      out.emplace_back(item.get<double>(), 0.0);
    } else if (item.is_array() && item.size() == 2 && item[0].is_number() &&
               item[1].is_number()) {
      out.emplace_back(item[0].get<double>(), item[1].get<double>());
    } else {
      throw_parse("JSON element " + std::to_string(j) +
                  " must be a number or a [re, im] pair");
    }
  }
  if (out.empty()) throw_parse("vector file is empty");
  return CVector(std::move(out));
}

CVector parse_csv(std::string_view text) {
  std::vector<Complex> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;
    if (out.empty() && std::isalpha(static_cast<unsigned char>(line.front()))) {
      continue;  // header
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      out.emplace_back(parse_number(line, line_no), 0.0);
    } else {
      if (line.find(',', comma + 1) != std::string_view::npos) {
        throw_parse("line " + std::to_string(line_no) + ": expected 're,im'");
      }
      out.emplace_back(parse_number(line.substr(0, comma), line_no),
                       parse_number(line.substr(comma + 1), line_no));
    }
  }
  if (out.empty()) throw_parse("vector file is empty");
  return CVector(std::move(out));
}

}  // namespace

VectorFormat format_for_path(std::string_view path) {
  if (path.size() >= 4) {
    std::string ext(path.substr(path.size() - 4));
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == ".csv") return VectorFormat::kCsv;
  }
  return VectorFormat::kJson;
}

std::string format_double(double value) {
  if (value == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_complex_short(const Complex& z, int precision) {
  const double snap = 0.5 * std::pow(10.0, -precision);
  double re = std::abs(z.real()) < snap ? 0.0 : z.real();
  double im = std::abs(z.imag()) < snap ? 0.0 : z.imag();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g%s%.*gi", precision, re + 0.0,
                im < 0 ? "-" : "+", precision, std::abs(im));
  return buf;
}

CVector parse_vector(std::string_view text, VectorFormat format) {
  return format == VectorFormat::kJson ? parse_json(text) : parse_csv(text);
}

std::string write_vector(const CVector& v, VectorFormat format) {
  std::string out;
  if (format == VectorFormat::kJson) {
    out += '[';
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j > 0) out += ", ";
      out += '[' + format_double(v[j].real()) + ", " + format_double(v[j].imag()) + ']';
    }
    out += "]\n";
  } else {
    out += "re,im\n";
    for (const Complex& z : v) {
      out += format_double(z.real()) + ',' + format_double(z.imag()) + '\n';
    }
  }
  return out;
}

CVector load_vector(const std::string& path, VectorFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_parse("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_vector(buffer.str(), format);
}

void save_vector(const CVector& v, const std::string& path, VectorFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw_invalid_argument("cannot write '" + path + "'");
  out << write_vector(v, format);
  if (!out) throw_invalid_argument("write to '" + path + "' failed");
}

}  // namespace abelianfft
