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

#ifndef SIGMA3_REWRITE_HPP
#define SIGMA3_REWRITE_HPP

// Reidemeister-Schreier rewriting for normal subgroups of cyclic index, and
// comparison of presentations through their finite 3-quotients.

#include <vector>

#include "sigma3/fpgroup.hpp"

namespace sigma3 {

/// Coset data for the kernel of a map F -> Z/k. `coset_of_generator[g]` is the
/// image of generator g; `representatives[c]` is a prefix-closed choice of
/// word with image c.
struct Transversal {
  int index = 1;
  std::vector<int> coset_of_generator;
  std::vector<Word> representatives;
};

/// {e, x, x^2} for the subgroup generated by y x^-1 and its conjugates in a
/// two-generator group where x has order 3.
Transversal xy_index3_transversal();

struct Rewriting {
  Presentation presentation;
  /// The Schreier generator (as a word in the original generators) behind each
  /// generator of `presentation`.
  std::vector<Word> generator_words;
};

/// Presentation of the kernel of the coset map. Schreier generators that are
/// freely trivial, or killed by a relator of length one, are eliminated;
/// relators are cyclically reduced and deduplicated up to rotation and
/// inversion. Throws std::invalid_argument when a relator does not lie in the
/// kernel or the index is not 1 or 3.
Rewriting rewrite_index3(const Presentation& p, const Transversal& tv);

/// <z_0, z_1, z_2 | z_i z_{i+1}^2 z_i^2 z_{i+1}>, indices mod 3.
Presentation k_presentation();
/// <z_0, z_1, z_2 | [z_i, z_{i+1}^-1] z_{i+1}^3 z_i^3>
Presentation k_commutator_presentation();

/// Same generator count, equal orders of the class-bounded 3-quotients, and
/// generator-respecting homomorphisms both ways between them.
bool same_normal_closure(const Presentation& a, const Presentation& b, int class_bound = 6, int order_cap_log3 = 14);

}  // namespace sigma3

#endif  // SIGMA3_REWRITE_HPP
