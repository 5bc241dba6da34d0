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

#ifndef SIGMA3_HOMOMORPHISM_HPP
#define SIGMA3_HOMOMORPHISM_HPP

// Homomorphisms out of pc groups that carry definitions, and isomorphism
// testing for small 3-groups.

#include <optional>
#include <string>
#include <vector>

#include "sigma3/fpgroup.hpp"
#include "sigma3/pcgroup.hpp"

namespace sigma3 {

class PcHomomorphism {
 public:
  /// Extends images of the defining generators of `domain` (which must carry
  /// definitions) through the definitions and checks every pc relation.
  /// Returns nullopt when some relation fails in the codomain.
  static std::optional<PcHomomorphism> from_defining_images(const PcGroup& domain, const PcGroup& codomain,
                                                            const std::vector<PcElement>& defining_images);

  const std::vector<PcElement>& generator_images() const { return images_; }
  PcElement apply(const PcElement& x) const;
  bool is_surjective() const;
  bool is_bijective() const;

 private:
  int domain_order_log3_ = 0;
  PcGroup codomain_;
  std::vector<PcElement> images_;
};

/// Images of all generators from those of the defining generators.
std::vector<PcElement> extend_defining_images(const PcGroup& domain, const PcGroup& codomain,
                                              const std::vector<PcElement>& defining_images);

/// Invariants used to reject non-isomorphic pairs quickly.
struct GroupFingerprint {
  int order_log3 = 0;
  int generator_rank = 0;
  int p_class = 0;
  std::string abelian_invariants;
  /// Number of elements of order 3^k for k = 0, 1, ...
  std::vector<std::uint64_t> order_counts;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const PcGroup& g);

/// Images in `b` of the defining generators of the standardized form of `a`,
/// or nullopt when a and b are not isomorphic. Throws ResourceLimitError when
/// the groups have more than 3^max_order_log3 elements.
std::optional<std::vector<PcElement>> find_isomorphism(const PcGroup& a, const PcGroup& b, int max_order_log3 = 7);
bool isomorphic(const PcGroup& a, const PcGroup& b, int max_order_log3 = 7);

struct SigmaCheck {
  bool relations_hold = false;   ///< x -> x^-1, y -> y^-1 respects the relations
  bool bijective = false;
  bool involution = false;
  bool inverts_abelianization = false;
  bool ok() const { return relations_hold && bijective && involution && inverts_abelianization; }
};

/// Checks that x -> x^-1, y -> y^-1 induces an automorphism of g, where g is
/// the 3-quotient of a two-generator presentation with defining generators
/// the images of x and y.
SigmaCheck check_sigma_automorphism(const PcGroup& g);

/// Image of a free-group word under generators -> `images`.
PcElement evaluate_word(const PcGroup& g, const std::vector<PcElement>& images, const Word& w);

/// True iff every relator of `p` maps to the identity under `images`.
bool satisfies_relators(const PcGroup& g, const std::vector<PcElement>& images, const Presentation& p);

}  // namespace sigma3

#endif  // SIGMA3_HOMOMORPHISM_HPP
