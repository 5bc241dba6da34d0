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

#ifndef SIGMA3_PQUOTIENT_HPP
#define SIGMA3_PQUOTIENT_HPP

// The 3-quotient algorithm: consistent power-commutator presentations for the
// class-c quotients of a finitely presented group, plus covering groups.

#include <vector>

#include "sigma3/f3_linear.hpp"
#include "sigma3/fpgroup.hpp"
#include "sigma3/pcgroup.hpp"
#include "sigma3/subgroup.hpp"

namespace sigma3 {

struct PQuotientOptions {
  /// Refuse to build quotients of order larger than 3^order_cap_log3.
  int order_cap_log3 = 20;
};

struct PQuotientResult {
  /// Consistent, with weights and definitions.
  PcGroup quotient;
  /// Image of each presentation generator.
  std::vector<PcElement> epimorphism;
  int achieved_class = 0;
  /// True when the next class adds nothing, so `quotient` is the largest
  /// 3-quotient.
  bool stabilized = false;
};

/// Largest 3-quotient of class at most max_class. Throws ResourceLimitError
/// when the order cap is exceeded.
PQuotientResult p_quotient(const Presentation& p, int max_class, const PQuotientOptions& options = {});

/// One relation of the covering group that received a tail.
struct TailSlot {
  /// kPower / kCommutator name a pc relation; kImage names a presentation
  /// generator whose image is not a defining generator.
  Definition lhs;
  int weight = 0;
};

/// G extended by central elementary abelian tails after consistency
/// enforcement. Generators [0, base) are those of G, the rest are tails.
struct TailedCover {
  PcGroup base_group;
  PcGroup cover;
  int base = 0;
  int tails = 0;
  std::vector<TailSlot> slots;
  /// Value of each slot's tail as a vector in F_3^tails.
  F3Matrix slot_values;
};

/// Tails every non-defining relation of weight <= c + 1 (c the largest weight)
/// and the listed presentation generators, then enforces consistency.
TailedCover tailed_cover(const PcGroup& g, const std::vector<int>& image_slots = {});

struct Extension {
  PcGroup group;
  /// F_3^tails -> F_3^(new generators), tails x new.
  F3Matrix projection;
  std::vector<int> chosen_slots;
};

/// Factors the cover by the tail subspace spanned by `relations` and turns the
/// remaining tails into new generators of weight `weight` defined by slots.
Extension quotient_by_tail_subspace(const TailedCover& cover, const F3Matrix& relations, int weight);

/// Presentation of a pc group on its pc generators.
Presentation pc_presentation(const PcGroup& g);

/// An isomorphic copy of g with weights and definitions, plus the images of
/// g's generators.
PQuotientResult standardize(const PcGroup& g);

struct PCover {
  /// The standardized group being covered.
  PcGroup group;
  TailedCover data;
  Subgroup multiplicator;
  Subgroup nucleus;
  int p_class = 0;
};

/// 3-covering group. Accepts any consistent group (it is standardized first
/// when it carries no definitions).
PCover p_cover(const PcGroup& g);

/// Rank of the 3-multiplicator.
int relation_rank(const PcGroup& g);

}  // namespace sigma3

#endif  // SIGMA3_PQUOTIENT_HPP
