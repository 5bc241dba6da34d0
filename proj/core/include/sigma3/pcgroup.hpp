// Copyright 2026 The sigma3 Authors
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

#ifndef SIGMA3_PCGROUP_HPP
#define SIGMA3_PCGROUP_HPP

// Finite 3-groups given by power-commutator presentations.
//
// Generators a_0, ..., a_{n-1} all have relative order 3. Each power a_i^3 and
// each commutator [a_j, a_i] (j > i) is a normal word in generators strictly
// later than i (resp. j); missing relations are trivial. Elements are
// exponent vectors with entries in {0, 1, 2}; products are computed by
// collection from the left.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sigma3 {

inline constexpr int kPrime = 3;

struct PcLetter {
  int gen = 0;
  int exp = 1;

  friend auto operator<=>(const PcLetter&, const PcLetter&) = default;
};

/// Normal word: letters with strictly increasing generators and exponents 1 or 2.
using NormalWord = std::vector<PcLetter>;

struct PcElement {
  std::vector<std::uint8_t> exponents;

  bool is_identity() const;
  /// Index of the first nonzero exponent, or size() for the identity.
  int depth() const;
  int leading_exponent() const;
  NormalWord to_word() const;

  friend auto operator<=>(const PcElement&, const PcElement&) = default;
};

/// How a generator was introduced by the p-quotient machinery.
struct Definition {
  enum class Kind : std::uint8_t {
    kImage,       ///< image of presentation generator `first`
    kPower,       ///< a_first ^ 3
    kCommutator,  ///< [a_first, a_second], first > second
  };
  Kind kind = Kind::kImage;
  int first = 0;
  int second = 0;

  friend bool operator==(const Definition&, const Definition&) = default;
};

/// Raw relation data; the input of PcGroup.
struct PcRelations {
  int num_gens = 0;
  std::vector<NormalWord> powers;     ///< size num_gens
  std::vector<NormalWord> commutators;  ///< flattened, see comm_index
  std::vector<int> weights;           ///< empty when unknown
  std::vector<Definition> definitions;  ///< empty when unknown

  explicit PcRelations(int n = 0);
  static std::size_t comm_index(int j, int i) {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(j - 1) / 2 + static_cast<std::size_t>(i);
  }
  NormalWord& power(int i) { return powers[static_cast<std::size_t>(i)]; }
  NormalWord& commutator(int j, int i) { return commutators[comm_index(j, i)]; }
};

class PcGroup {
 public:
  PcGroup() = default;
  /// Validates the shape of the relations (not consistency).
  explicit PcGroup(PcRelations relations);

  /// Elementary abelian group of rank n, with weights and definitions.
  static PcGroup elementary_abelian(int n);
  /// Cyclic group of order 3^n.
  static PcGroup cyclic(int n);

  int num_gens() const { return rel_.num_gens; }
  /// log_3 of the order (assuming consistency).
  int order_log3() const { return rel_.num_gens; }
  const PcRelations& relations() const { return rel_; }
  const NormalWord& power_rhs(int i) const { return rel_.powers[static_cast<std::size_t>(i)]; }
  const NormalWord& commutator_rhs(int j, int i) const { return rel_.commutators[PcRelations::comm_index(j, i)]; }
  bool has_weights() const { return !rel_.weights.empty(); }
  bool has_definitions() const { return !rel_.definitions.empty(); }
  int weight(int i) const { return rel_.weights[static_cast<std::size_t>(i)]; }
  const Definition& definition(int i) const { return rel_.definitions[static_cast<std::size_t>(i)]; }
  /// Generators defined as images of presentation generators (kImage), ascending.
  std::vector<int> defining_generators() const;

  PcElement identity() const;
  PcElement generator(int i, int e = 1) const;
  PcElement element(const NormalWord& w) const;

  PcElement multiply(const PcElement& a, const PcElement& b) const;
  /// Collects an arbitrary word in the generators (exponents may be negative).
  PcElement collect(const std::vector<PcLetter>& word) const;
  PcElement inverse(const PcElement& a) const;
  PcElement power(const PcElement& a, std::int64_t e) const;
  /// a^-1 b^-1 a b
  PcElement commutator(const PcElement& a, const PcElement& b) const;
  /// b^-1 a b
  PcElement conjugate(const PcElement& a, const PcElement& b) const;
  /// Multiplicative order (a power of 3).
  std::uint64_t element_order(const PcElement& a) const;

  /// Runs the standard consistency test words; returns a description of each
  /// failing test (empty when consistent).
  std::vector<std::string> consistency_failures(bool stop_at_first = false) const;
  bool is_consistent() const { return consistency_failures(true).empty(); }
  /// Calls visit(label, left, right) for each test word on generators below
  /// `limit`; stops early when visit returns false.
  void for_each_consistency_test(
      int limit, const std::function<bool(const std::string&, const PcElement&, const PcElement&)>& visit) const;

  /// Every element of the group, in lexicographic exponent order.
  std::vector<PcElement> elements() const;

 private:
  void collect_into(std::vector<std::uint8_t>& r, std::vector<PcLetter>& stack) const;
  void push_reversed(std::vector<PcLetter>& stack, const NormalWord& w) const;

  PcRelations rel_;
  std::vector<std::vector<NormalWord>> conj_;  // conj_[j][i] = a_j^(a_i), i < j
  int central_start_ = 0;
};

/// Text format: `pc p=3 n=<gens>` header, then `g<i>^3 = <word>` and
/// `[g<j>,g<i>] = <word>` lines with 1-based indices; omitted relations are
/// trivial; `#` starts a comment.
PcGroup parse_pc_group(std::string_view text);
std::string format_pc_group(const PcGroup& g, std::string_view provenance = {});
std::string format_element(const PcElement& e);

/// Groups named in the descendant search: 243 = 3^5 elements each.
PcGroup q1_group();
PcGroup q2_group();

}  // namespace sigma3

#endif  // SIGMA3_PCGROUP_HPP
