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

#ifndef SIGMA3_SUBGROUP_HPP
#define SIGMA3_SUBGROUP_HPP

// Subgroups of pc groups as induced generating sequences, characteristic
// series, abelian quotient invariants and quotients by normal subgroups.

#include <optional>
#include <vector>

#include "sigma3/pcgroup.hpp"
#include "sigma3/smith.hpp"

namespace sigma3 {

/// Echelonized induced generating sequence: at most one element per depth,
/// each with leading exponent 1.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(int num_gens);
  static Subgroup whole(const PcGroup& g);

  int num_gens() const { return static_cast<int>(table_.size()); }
  int order_log3() const;
  bool is_trivial() const { return order_log3() == 0; }
  /// Elements in increasing depth.
  std::vector<PcElement> igs() const;
  /// Depths occupied by the igs.
  std::vector<int> depths() const;
  const std::optional<PcElement>& at_depth(int d) const { return table_[static_cast<std::size_t>(d)]; }

  /// Strips x by the igs; the result is the identity iff x is a member.
  PcElement sift(const PcGroup& g, PcElement x) const;
  bool contains(const PcGroup& g, const PcElement& x) const;
  bool contains(const PcGroup& g, const Subgroup& other) const;
  bool same_as(const PcGroup& g, const Subgroup& other) const;

  /// Sifts x in and, when it is new, records it. Returns the depth of the new
  /// entry or -1.
  int insert(const PcGroup& g, const PcElement& x);

 private:
  std::vector<std::optional<PcElement>> table_;
};

Subgroup subgroup_closure(const PcGroup& g, const std::vector<PcElement>& gens);
/// Smallest subgroup containing gens and closed under conjugation by conj_by.
Subgroup closure_under(const PcGroup& g, const std::vector<PcElement>& gens, const std::vector<PcElement>& conj_by);
/// Normal closure in the whole group.
Subgroup normal_closure(const PcGroup& g, const std::vector<PcElement>& gens);

bool is_normal(const PcGroup& g, const Subgroup& s);
bool is_central(const PcGroup& g, const Subgroup& s);

Subgroup derived_subgroup(const PcGroup& g, const Subgroup& s);

/// G = S_0 > S_1 > ... > 1, ending with the trivial subgroup.
std::vector<Subgroup> derived_series(const PcGroup& g);
std::vector<Subgroup> lower_central_series(const PcGroup& g);
/// P_1 = G, P_{k+1} = P_k^3 [P_k, G].
std::vector<Subgroup> lower_p_central_series(const PcGroup& g);

int derived_length(const PcGroup& g);
int nilpotency_class(const PcGroup& g);
/// Number of nontrivial terms of the lower exponent-3 central series.
int p_class(const PcGroup& g);

Subgroup frattini_subgroup(const PcGroup& g);
/// Rank of the Frattini quotient (minimal number of generators).
int generator_rank(const PcGroup& g);

/// Invariants of S/[S,S] via a relation matrix over a factor pc sequence and
/// Smith normal form.
AbelianInvariants abelian_invariants(const PcGroup& g, const Subgroup& s);
AbelianInvariants abelian_invariants(const PcGroup& g);

/// All subgroups of index 3.
std::vector<Subgroup> maximal_subgroups(const PcGroup& g);

/// Abelian invariants of each maximal subgroup, sorted.
std::vector<AbelianInvariants> maximal_subgroup_invariants(const PcGroup& g);

/// G/N as a pc group on the generators of G that are not depths of N.
struct QuotientMap {
  PcGroup group;
  std::vector<int> factor_depths;
  Subgroup kernel;
  std::vector<std::vector<PcElement>> kernel_inverse_powers;

  PcElement project(const PcGroup& g, PcElement x) const;
};

QuotientMap quotient(const PcGroup& g, const Subgroup& normal);

}  // namespace sigma3

#endif  // SIGMA3_SUBGROUP_HPP
