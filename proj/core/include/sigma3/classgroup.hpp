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

#ifndef SIGMA3_CLASSGROUP_HPP
#define SIGMA3_CLASSGROUP_HPP

// Class groups of imaginary quadratic fields as groups of reduced positive
// definite binary quadratic forms.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sigma3/smith.hpp"

namespace sigma3 {

/// d < 0 and d is the discriminant of an imaginary quadratic field.
bool is_fundamental_discriminant(std::int64_t d);

inline constexpr std::int64_t kMaxAbsDiscriminant = 10'000'000;

/// a x^2 + b x y + c y^2 with a > 0.
struct QuadForm {
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::int64_t c = 1;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  /// |b| <= a <= c, and b >= 0 when |b| = a or a = c.
  bool is_reduced() const;
  QuadForm inverse() const;
  std::string to_string() const;

  friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

/// The unique reduced form equivalent to f (which must be positive definite).
QuadForm reduce(QuadForm f);
QuadForm principal_form(std::int64_t d);

/// Reduced forms of discriminant d, sorted; one per class. Throws
/// std::invalid_argument for non-fundamental d and ResourceLimitError when
/// |d| exceeds kMaxAbsDiscriminant.
std::vector<QuadForm> reduced_forms(std::int64_t d);

/// Dirichlet composition followed by reduction.
QuadForm compose(const QuadForm& f, const QuadForm& g);
QuadForm power(const QuadForm& f, std::int64_t e);
/// Order of the class of f; `h` (the class number) is used to bound the search.
std::uint64_t form_order(const QuadForm& f, std::uint64_t h);

struct ClassGroupStructure {
  std::int64_t d = 0;
  std::uint64_t h = 0;
  AbelianInvariants invariants;
  /// Greedily chosen generators, largest order first.
  std::vector<QuadForm> generators;
};

ClassGroupStructure group_structure(std::int64_t d);
AbelianInvariants sylow3(const ClassGroupStructure& s);

/// log_3 of the number of classes x with x^3 principal, computed directly.
int three_rank_by_cubes(std::int64_t d);

struct ScanRecord {
  std::int64_t d = 0;
  std::uint64_t h = 0;
  AbelianInvariants invariants;
  AbelianInvariants sylow3;
};

/// Every fundamental d in [min_d, max_d] whose record satisfies `keep`,
/// sorted by d. Work is split over `threads` workers (0 picks the hardware
/// concurrency); the output does not depend on the split.
std::vector<ScanRecord> scan(std::int64_t min_d, std::int64_t max_d,
                             const std::function<bool(const ScanRecord&)>& keep, unsigned threads = 0);

/// Discriminants -50000 <= d < 0 listed as having 3-class tower group G_1.
const std::vector<std::int64_t>& g1_tower_discriminants();
/// Discriminants -50000 < d < 0 whose unramified cubic extensions match the
/// invariants [3,9], [3,3,3], [3,3,3], [3,3,3] of G_n for n >= 2.
const std::vector<std::int64_t>& gn_candidate_discriminants();

}  // namespace sigma3

#endif  // SIGMA3_CLASSGROUP_HPP
