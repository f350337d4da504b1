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

#ifndef ABELIANFFT_ERROR_HPP_
#define ABELIANFFT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace abelianfft {

enum class ErrorKind {
  kInvalidArgument,
  kDimension,
  kUnsupportedLength,
  kResourceLimit,
  kParse,
};

// All library failures are reported by throwing Error. The C API maps the
// kind onto a stable status code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid_argument(const std::string& message) {
  throw Error(ErrorKind::kInvalidArgument, message);
}
[[noreturn]] inline void throw_dimension(const std::string& message) {
  throw Error(ErrorKind::kDimension, message);
}
[[noreturn]] inline void throw_unsupported_length(const std::string& message) {
  throw Error(ErrorKind::kUnsupportedLength, message);
}
[[noreturn]] inline void throw_resource_limit(const std::string& message) {
  throw Error(ErrorKind::kResourceLimit, message);
}
[[noreturn]] inline void throw_parse(const std::string& message) {
  throw Error(ErrorKind::kParse, message);
}

}  // namespace abelianfft

#endif  // ABELIANFFT_ERROR_HPP_
