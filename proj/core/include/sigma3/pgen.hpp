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

#ifndef SIGMA3_PGEN_HPP
#define SIGMA3_PGEN_HPP

// Immediate descendants of 3-groups (the p-group generation algorithm with
// brute-force automorphism groups) and a descendant-tree search constrained by
// abelian quotient invariants.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sigma3/f3_linear.hpp"
#include "sigma3/pcgroup.hpp"
#include "sigma3/smith.hpp"

namespace sigma3 {

/// Images of the defining generators, one tuple per automorphism. `g` must
/// carry definitions; throws ResourceLimitError above 3^max_order_log3.
std::vector<std::vector<PcElement>> automorphism_group(const PcGroup& g, int max_order_log3 = 6);

/// Action of each automorphism on the 3-multiplicator of g's covering group,
/// as matrices acting on row vectors.
std::vector<F3Matrix> multiplicator_action(const PcGroup& g, const std::vector<std::vector<PcElement>>& automorphisms);

/// One representative per isomorphism class of immediate descendants, ordered
/// by step size and then by allowable subgroup. Accepts any consistent group
/// (it is standardized first when it carries no definitions).
std::vector<PcGroup> immediate_descendants(const PcGroup& g, int max_order_log3 = 6);

/// Every immediate descendant, one per allowable subgroup (no orbit
/// reduction). Exposed for cross-checking.
std::vector<PcGroup> all_allowable_quotients(const PcGroup& g);

struct AQIConstraint {
  AbelianInvariants whole;
  std::vector<AbelianInvariants> maximal;

  /// Lines `whole: 3,3` and `max: 3,9 | 3,9 | 3,9 | 3,3,3`; `#` comments.
  static AQIConstraint parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const AQIConstraint&, const AQIConstraint&) = default;
};

struct AQIFingerprint {
  AbelianInvariants whole;
  std::vector<AbelianInvariants> maximal;  // sorted
};

AQIFingerprint aqi_fingerprint(const PcGroup& g);

/// Every invariant could still grow into its target: the whole-group AQI is a
/// quotient of the target and the maximal-subgroup AQIs can be matched one to
/// one with quotient-compatible targets.
bool may_refine_to(const AQIFingerprint& f, const AQIConstraint& c);
bool matches_exactly(const AQIFingerprint& f, const AQIConstraint& c);

struct DescendantNode {
  PcGroup group;
  int parent = -1;  ///< index into SearchResult::tree, -1 for the root
  int p_class = 0;
  AQIFingerprint fingerprint;
};

struct SearchResult {
  /// Exact matches all of whose immediate descendants violate the constraint.
  std::vector<DescendantNode> terminal;
  /// Every node that was generated, including pruned ones.
  std::vector<DescendantNode> tree;
  std::size_t pruned = 0;
};

struct SearchOptions {
  int max_p_class = 12;
  int max_order_log3 = 6;
};

SearchResult constrained_search(const PcGroup& root, const AQIConstraint& constraint, const SearchOptions& options = {});

}  // namespace sigma3

#endif  // SIGMA3_PGEN_HPP
