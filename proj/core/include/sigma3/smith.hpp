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

#ifndef SIGMA3_SMITH_HPP
#define SIGMA3_SMITH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigma3 {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Invariant factors d_1 | d_2 | ... of Z^cols / rowspace(m). The result has
/// exactly `cols` entries: units become 1, free summands become 0. Pivots are
/// chosen by least absolute value.
std::vector<BigInt> smith_invariant_factors(IntMatrix m, std::size_t cols);

/// Finite or finitely generated abelian group written as a multiset of
/// prime-power cyclic orders, ascending, with infinite cyclic factors recorded
/// as 0 at the end. "[3,9]" is C3 x C9.
class AbelianInvariants {
 public:
  AbelianInvariants() = default;

  /// Splits arbitrary cyclic orders into prime powers. Orders of 1 vanish.
  static AbelianInvariants from_cyclic_orders(const std::vector<BigInt>& orders);
  static AbelianInvariants from_relations(const IntMatrix& relations, std::size_t generators);
  /// "3,9" or "[3,9]" or "" / "[]" for the trivial group.
  static AbelianInvariants parse(std::string_view text);

  const std::vector<std::uint64_t>& orders() const { return orders_; }
  bool is_finite() const;
  /// Group order; 0 when infinite.
  BigInt order() const;
  /// Number of cyclic factors of order a power of p.
  int rank(std::uint64_t p) const;
  /// The p-primary part.
  AbelianInvariants sylow(std::uint64_t p) const;

  /// True iff `target` surjects onto this group (componentwise comparison of
  /// descending exponent vectors, prime by prime).
  bool is_quotient_of(const AbelianInvariants& target) const;

  std::string to_string() const;

  friend auto operator<=>(const AbelianInvariants&, const AbelianInvariants&) = default;

 private:
  std::vector<std::uint64_t> orders_;
};

}  // namespace sigma3

#endif  // SIGMA3_SMITH_HPP
