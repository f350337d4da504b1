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

#include "abelianfft/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <utility>

#include "abelianfft/error.hpp"

namespace abelianfft {

namespace {

// Vectors indexed by a group must fit comfortably in memory.
constexpr std::uint64_t kMaxGroupOrder = std::uint64_t{1} << 40;

std::uint64_t checked_order(std::span<const std::uint64_t> factors) {
  std::uint64_t order = 1;
  for (std::uint64_t k : factors) {
    if (k == 0) throw_invalid_argument("group modulus must be >= 1");
    if (order > kMaxGroupOrder / k) {
      throw_invalid_argument("group order exceeds 2^40");
    }
    order *= k;
  }
  return order;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw_parse("expected a non-negative integer for " + std::string(what) +
                ", got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup()
    : factors_(std::make_shared<const std::vector<std::uint64_t>>()) {}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> factors)
    : order_(checked_order(factors)) {
  factors_ = std::make_shared<const std::vector<std::uint64_t>>(std::move(factors));
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::uint64_t n) {
  const std::uint64_t moduli[] = {n};
  return direct_product(moduli);
}

FiniteAbelianGroup FiniteAbelianGroup::direct_product(
    std::span<const std::uint64_t> moduli) {
  std::vector<std::uint64_t> kept;
  for (std::uint64_t m : moduli) {
    if (m == 0) throw_invalid_argument("group modulus must be >= 1");
    if (m > 1) kept.push_back(m);
  }
  return FiniteAbelianGroup(std::move(kept));
}

FiniteAbelianGroup FiniteAbelianGroup::from_canonical_factors(
    std::span<const std::uint64_t> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2 || !is_prime_power(factors[i])) {
      throw_invalid_argument("canonical factor " + std::to_string(factors[i]) +
                             " is not a prime power >= 2");
    }
    if (i > 0 && factors[i] < factors[i - 1]) {
      throw_invalid_argument("canonical factors must be non-decreasing");
    }
  }
  return FiniteAbelianGroup(std::vector<std::uint64_t>(factors.begin(), factors.end()));
}

bool FiniteAbelianGroup::is_canonical() const noexcept {
  const auto& f = *factors_;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!is_prime_power(f[i])) return false;
    if (i > 0 && f[i] < f[i - 1]) return false;
  }
  return true;
}

FiniteAbelianGroup FiniteAbelianGroup::tail() const {
  if (factors_->empty()) throw_invalid_argument("trivial group has no tail");
  return FiniteAbelianGroup(
      std::vector<std::uint64_t>(factors_->begin() + 1, factors_->end()));
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_->empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < factors_->size(); ++i) {
    if (i > 0) out += 'x';
    out += 'Z';
    out += std::to_string((*factors_)[i]);
  }
  return out;
}

// The three index operations walk the mixed-radix digits from the least
// significant (last) coordinate up, without materializing elements.
std::uint64_t FiniteAbelianGroup::add_index(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t result = 0;
  std::uint64_t place = 1;
  for (auto it = factors_->rbegin(); it != factors_->rend(); ++it) {
    const std::uint64_t k = *it;
    const std::uint64_t digit = (a % k + b % k) % k;
    result += digit * place;
    place *= k;
    a /= k;
    b /= k;
  }
  return result;
}

std::uint64_t FiniteAbelianGroup::sub_index(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t result = 0;
  std::uint64_t place = 1;
  for (auto it = factors_->rbegin(); it != factors_->rend(); ++it) {
    const std::uint64_t k = *it;
    const std::uint64_t digit = (a % k + k - b % k) % k;
    result += digit * place;
    place *= k;
    a /= k;
    b /= k;
  }
  return result;
}

std::uint64_t FiniteAbelianGroup::neg_index(std::uint64_t a) const {
  return sub_index(0, a);
}

GroupElement::GroupElement(FiniteAbelianGroup group,
                           std::vector<std::uint64_t> coordinates)
    : group_(std::move(group)), coordinates_(std::move(coordinates)) {
  const auto factors = group_.factors();
  if (coordinates_.size() != factors.size()) {
    throw_invalid_argument("element has " + std::to_string(coordinates_.size()) +
                           " coordinates but group " + group_.to_string() +
                           " has " + std::to_string(factors.size()) + " factors");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (coordinates_[i] >= factors[i]) {
      throw_invalid_argument("coordinate " + std::to_string(i) + " = " +
                             std::to_string(coordinates_[i]) +
                             " out of range for Z" + std::to_string(factors[i]));
    }
  }
}

GroupElement GroupElement::identity(const FiniteAbelianGroup& group) {
  return GroupElement(group, std::vector<std::uint64_t>(group.rank(), 0));
}

std::string GroupElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coordinates_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(coordinates_[i]);
  }
  return out + ")";
}

std::vector<std::uint64_t> prime_power_parts(std::uint64_t n) {
  if (n == 0) throw_invalid_argument("cannot factor 0");
  std::vector<std::uint64_t> parts;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    std::uint64_t q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    parts.push_back(q);
  }
  if (n > 1) parts.push_back(n);
  return parts;
}

bool is_prime_power(std::uint64_t n) {
  return n >= 2 && prime_power_parts(n).size() == 1;
}

std::vector<std::uint64_t> canonical_factors(std::span<const std::uint64_t> moduli) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t m : moduli) {
    if (m == 0) throw_invalid_argument("group modulus must be >= 1");
    for (std::uint64_t q : prime_power_parts(m)) factors.push_back(q);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

CanonicalForm canonicalize(std::span<const std::uint64_t> moduli) {
  struct Part {
    std::uint64_t modulus;
    std::size_t source;
  };
  std::vector<Part> parts;
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    if (moduli[j] == 0) throw_invalid_argument("group modulus must be >= 1");
    for (std::uint64_t q : prime_power_parts(moduli[j])) parts.push_back({q, j});
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Part& a, const Part& b) { return a.modulus < b.modulus; });

  std::vector<std::uint64_t> factors;
  std::vector<std::size_t> source;
  for (const Part& p : parts) {
    factors.push_back(p.modulus);
    source.push_back(p.source);
  }
  FiniteAbelianGroup group = FiniteAbelianGroup::from_canonical_factors(factors);

  // Input order equals canonical order, so checked_order() above already
  // bounds the loop below.
  const std::uint64_t order = group.order();
  std::vector<std::uint64_t> permutation(order);
  std::vector<std::uint64_t> digits(moduli.size());
  for (std::uint64_t i = 0; i < order; ++i) {
    std::uint64_t rest = i;
    for (std::size_t j = moduli.size(); j-- > 0;) {
      digits[j] = rest % moduli[j];
      rest /= moduli[j];
    }
    std::uint64_t target = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      target = target * factors[f] + digits[source[f]] % factors[f];
    }
    permutation[i] = target;
  }
  return CanonicalForm{std::move(group), std::move(permutation), std::move(source)};
}

std::uint64_t index_of(const GroupElement& x) {
  const auto factors = x.group().factors();
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    index = index * factors[i] + x[i];
  }
  return index;
}

GroupElement element_at(const FiniteAbelianGroup& group, std::uint64_t index) {
  if (index >= group.order()) {
    throw_invalid_argument("index " + std::to_string(index) +
                           " out of range for group of order " +
                           std::to_string(group.order()));
  }
  const auto factors = group.factors();
  std::vector<std::uint64_t> coords(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    coords[i] = index % factors[i];
    index /= factors[i];
  }
  return GroupElement(group, std::move(coords));
}

namespace {

void require_same_group(const GroupElement& x, const GroupElement& y) {
  if (!(x.group() == y.group())) {
    throw_invalid_argument("elements belong to different groups (" +
                           x.group().to_string() + " vs " +
                           y.group().to_string() + ")");
  }
}

}  // namespace

GroupElement add(const GroupElement& x, const GroupElement& y) {
  require_same_group(x, y);
  const auto factors = x.group().factors();
  std::vector<std::uint64_t> coords(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    coords[i] = (x[i] + y[i]) % factors[i];
  }
  return GroupElement(x.group(), std::move(coords));
}

GroupElement neg(const GroupElement& x) {
  const auto factors = x.group().factors();
  std::vector<std::uint64_t> coords(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    coords[i] = (factors[i] - x[i]) % factors[i];
  }
  return GroupElement(x.group(), std::move(coords));
}

GroupElement sub(const GroupElement& x, const GroupElement& y) {
  require_same_group(x, y);
  return add(x, neg(y));
}

std::vector<GroupElement> enumerate(const FiniteAbelianGroup& group) {
  std::vector<GroupElement> out;
  out.reserve(group.order());
  for (std::uint64_t i = 0; i < group.order(); ++i) out.push_back(element_at(group, i));
  return out;
}

FiniteAbelianGroup parse_group_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw_parse("empty group spec");

  std::vector<std::uint64_t> moduli;
  const bool bare = std::all_of(spec.begin(), spec.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if (bare) {
    moduli.push_back(parse_unsigned(spec, "group order"));
  } else {
    std::size_t start = 0;
    while (start <= spec.size()) {
      std::size_t end = spec.find_first_of("xX", start);
      if (end == std::string_view::npos) end = spec.size();
      std::string_view term = trim(spec.substr(start, end - start));
      if (term.empty() || (term.front() != 'Z' && term.front() != 'z')) {
        throw_parse("bad group factor '" + std::string(term) + "' in '" +
                    std::string(spec) + "' (expected Zk or Zk^e)");
      }
      term.remove_prefix(1);
      std::uint64_t power = 1;
      if (const auto caret = term.find('^'); caret != std::string_view::npos) {
        power = parse_unsigned(term.substr(caret + 1), "exponent");
        term = term.substr(0, caret);
        if (power > 64) throw_invalid_argument("group exponent too large");
      }
      const std::uint64_t k = parse_unsigned(term, "cyclic factor");
      for (std::uint64_t e = 0; e < power; ++e) moduli.push_back(k);
      start = end + 1;
    }
  }
  for (std::uint64_t m : moduli) {
    if (m == 0) throw_invalid_argument("Z0 is not a group");
  }
  return FiniteAbelianGroup::direct_product(moduli);
}

GroupElement parse_element(const FiniteAbelianGroup& group, std::string_view label) {
  label = trim(label);
  if (!label.empty() && label.front() == '(' && label.back() == ')') {
    label = label.substr(1, label.size() - 2);
  }
  std::vector<std::uint64_t> coords;
  if (!trim(label).empty()) {
    std::size_t start = 0;
    while (start <= label.size()) {
      std::size_t end = label.find(',', start);
      if (end == std::string_view::npos) end = label.size();
      std::uint64_t value = 0;
      const std::string_view part = trim(label.substr(start, end - start));
      const auto [ptr, ec] =
          std::from_chars(part.data(), part.data() + part.size(), value);
      if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
        throw_invalid_argument("bad element label '" + std::string(label) + "'");
      }
      coords.push_back(value);
      start = end + 1;
    }
  }
  return GroupElement(group, std::move(coords));
}

}  // namespace abelianfft
