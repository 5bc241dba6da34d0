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


#include <algorithm>

#include "gtest/gtest.h"
#include "sigma3/errors.hpp"
#include "sigma3/fpgroup.hpp"
#include "sigma3/pquotient.hpp"
#include "sigma3/rewrite.hpp"
#include "sigma3/sl2.hpp"
#include "sigma3/smith.hpp"

namespace sigma3 {
namespace {

Word z(int i, std::int64_t e = 1) { return Word::letter(i, e); }

AbelianInvariants abelianize(const Presentation& p) {
  IntMatrix m;
  for (const auto& r : p.relators) {
    std::vector<BigInt> row;
    for (int g = 0; g < p.generator_count; ++g) row.emplace_back(r.exponent_sum(g));
    m.push_back(row);
  }
  return AbelianInvariants::from_relations(m, static_cast<std::size_t>(p.generator_count));
}

Presentation relabel(const Presentation& p, const std::vector<int>& perm) {
  Presentation q = p;
  for (auto& r : q.relators) {
    std::vector<Syllable> s = r.syllables();
    for (auto& syl : s) syl.gen = perm[static_cast<std::size_t>(syl.gen)];
    r = Word::from_syllables(s);
  }
  return q;
}

TEST(RewriteIndex3, SchreierGeneratorsOfH) {
  const Rewriting rw = rewrite_index3(h_presentation(), xy_index3_transversal());
  EXPECT_EQ(rw.presentation.generator_count, 3);
  EXPECT_EQ(rw.presentation.relators.size(), 3u);
  // Coset order e, x, x^2 yields y x^-1, x y, x^2 y x: that is z_0, z_2, z_1.
  ASSERT_EQ(rw.generator_words.size(), 3u);
  EXPECT_EQ(rw.generator_words[0], z_word(0));
}

TEST(RewriteIndex3, AbelianizationPattern) {
  const Rewriting rw = rewrite_index3(h_presentation(), xy_index3_transversal());
  // z_i z_{i+1}^2 z_i^2 z_{i+1} abelianizes to 3 z_i + 3 z_{i+1}; the 3x3
  // circulant relation matrix has determinant 54 and 2x2 minors with gcd 9,
  // so Smith form diag(3, 3, 6).
  EXPECT_EQ(abelianize(rw.presentation).to_string(), "[2,3,3,3]");
  EXPECT_EQ(abelianize(rw.presentation).to_string(), abelianize(k_presentation()).to_string());
}

TEST(RewriteIndex3, MatchesKAfterRelabeling) {
  const Rewriting rw = rewrite_index3(h_presentation(), xy_index3_transversal());
  const Presentation k = relabel(rw.presentation, {0, 2, 1});
  EXPECT_TRUE(same_normal_closure(k, k_presentation(), 4));
  // Literal agreement up to rotation and inversion.
  for (const auto& r : k.relators) {
    bool found = false;
    for (const auto& target : k_presentation().relators) found = found || free_conjugate(r, target) || free_conjugate(r, target.inverse());
    EXPECT_TRUE(found) << format_word(r, k.names);
  }
}

TEST(RewriteIndex3, IndexOneIsIdentity) {
  Transversal trivial;
  trivial.index = 1;
  trivial.coset_of_generator = {0, 0};
  trivial.representatives = {Word()};
  EXPECT_EQ(rewrite_index3(h_presentation(), trivial).presentation, h_presentation());
}

TEST(RewriteIndex3, RejectsRelatorsOutsideKernel) {
  Presentation p = h_presentation();
  p.relators.push_back(Word::letter(0));
  EXPECT_THROW(rewrite_index3(p, xy_index3_transversal()), std::invalid_argument);
  Transversal bad = xy_index3_transversal();
  bad.index = 2;
  EXPECT_THROW(rewrite_index3(h_presentation(), bad), std::invalid_argument);
}

TEST(SameNormalClosure, KCommutatorForm) {
  EXPECT_TRUE(same_normal_closure(k_presentation(), k_commutator_presentation(), 4));
}

TEST(SameNormalClosure, Reflexive) {
  EXPECT_TRUE(same_normal_closure(gn_presentation(2), gn_presentation(2), 6));
}

TEST(SameNormalClosure, DistinguishesCubeFromNinthPower) {
  const Presentation a{1, {"x"}, {z(0, 3)}};
  const Presentation b{1, {"x"}, {z(0, 9)}};
  EXPECT_FALSE(same_normal_closure(a, b, 2));
  // Oracle: the abelianizations differ.
  EXPECT_NE(abelianize(a), abelianize(b));
}

TEST(SameNormalClosure, KWithoutRelabelingDiffers) {
  const Rewriting rw = rewrite_index3(h_presentation(), xy_index3_transversal());
  EXPECT_FALSE(same_normal_closure(rw.presentation, k_presentation(), 4));
}

TEST(SameNormalClosure, CapAndArity) {
  EXPECT_THROW(same_normal_closure(k_presentation(), k_presentation(), 6), ResourceLimitError);
  EXPECT_THROW(same_normal_closure(k_presentation(), gn_presentation(1), 2), std::invalid_argument);
}

TEST(KPresentation, QuotientOrders) {
  // The class-c 3-quotients of K have order 3^(3c): K is uniform of dimension 3.
  for (int c = 1; c <= 4; ++c) EXPECT_EQ(p_quotient(k_presentation(), c).quotient.order_log3(), 3 * c) << c;
}

}  // namespace
}  // namespace sigma3
