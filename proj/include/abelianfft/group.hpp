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

#ifndef ABELIANFFT_GROUP_HPP_
#define ABELIANFFT_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelianfft {

// Z_{k_1} x ... x Z_{k_u}, elements ordered lexicographically (last
// coordinate fastest). Cheap to copy; the factor list is shared.
//
// Two construction paths exist. canonicalize() yields the canonical form:
// prime-power factors in non-decreasing order. direct_product() keeps the
// given cyclic factors verbatim (any modulus >= 2, any order), which is what
// Z_n for composite n and the Z_3 x Z_2 worked example need.
class FiniteAbelianGroup {
 public:
  // The trivial group: no factors, order 1.
  FiniteAbelianGroup();

  static FiniteAbelianGroup cyclic(std::uint64_t n);
  // Moduli of 1 are dropped; 0 is rejected.
  static FiniteAbelianGroup direct_product(std::span<const std::uint64_t> moduli);
  // Rejects anything that is not already in canonical form.
  static FiniteAbelianGroup from_canonical_factors(
      std::span<const std::uint64_t> factors);

  std::span<const std::uint64_t> factors() const noexcept { return *factors_; }
  std::size_t rank() const noexcept { return factors_->size(); }
  std::uint64_t order() const noexcept { return order_; }
  bool is_canonical() const noexcept;
  bool is_trivial() const noexcept { return factors_->empty(); }

  // The group without its first factor (G' in G = Z_k x G').
  FiniteAbelianGroup tail() const;

  // "Z3xZ2"; "Z1" for the trivial group.
  std::string to_string() const;

  // Index-level arithmetic; all arguments must be < order().
  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_index(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_index(std::uint64_t a) const;

  friend bool operator==(const FiniteAbelianGroup& a,
                         const FiniteAbelianGroup& b) noexcept {
    return *a.factors_ == *b.factors_;
  }

 private:
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> factors);

  std::shared_ptr<const std::vector<std::uint64_t>> factors_;
  std::uint64_t order_ = 1;
};

class GroupElement {
 public:
  // Throws kInvalidArgument on a wrong coordinate count or a coordinate
  // outside its modulus.
  GroupElement(FiniteAbelianGroup group, std::vector<std::uint64_t> coordinates);

  static GroupElement identity(const FiniteAbelianGroup& group);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  std::span<const std::uint64_t> coordinates() const noexcept {
    return coordinates_;
  }
  std::uint64_t operator[](std::size_t i) const { return coordinates_[i]; }

  std::string to_string() const;  // "(2,1)"

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  FiniteAbelianGroup group_;
  std::vector<std::uint64_t> coordinates_;
};

struct CanonicalForm {
  FiniteAbelianGroup group;
  // permutation[i] is the canonical index of the element whose index in the
  // input product Z_{m_1} x ... x Z_{m_t} is i. Moduli of 1 contribute a
  // single coordinate 0.
  std::vector<std::uint64_t> permutation;
  // For each canonical factor, the input position it was split from.
  std::vector<std::size_t> source_modulus;
};

// Splits each Z_m into its prime-power parts (CRT) and sorts them.
CanonicalForm canonicalize(std::span<const std::uint64_t> moduli);

// The canonical factor list of Z_{m_1} x ... x Z_{m_t} without the index
// permutation; cheap enough for exhaustive sweeps.
std::vector<std::uint64_t> canonical_factors(std::span<const std::uint64_t> moduli);

// Prime-power decomposition of n by trial division, e.g. 12 -> {4, 3}.
// Returned in increasing prime order; empty for n == 1.
std::vector<std::uint64_t> prime_power_parts(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

std::uint64_t index_of(const GroupElement& x);
GroupElement element_at(const FiniteAbelianGroup& group, std::uint64_t index);

GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement neg(const GroupElement& x);
GroupElement sub(const GroupElement& x, const GroupElement& y);

std::vector<GroupElement> enumerate(const FiniteAbelianGroup& group);

// Grammar: factors "Zk" joined by 'x', each optionally raised with "^e";
// a bare integer "n" means Z_n. Whitespace is ignored. The result is built
// with direct_product(), i.e. factors are kept as written.
FiniteAbelianGroup parse_group_spec(std::string_view spec);

// "1,0,2" -> element of group. Throws kInvalidArgument on a bad label.
GroupElement parse_element(const FiniteAbelianGroup& group, std::string_view label);

}  // namespace abelianfft

#endif  // ABELIANFFT_GROUP_HPP_
