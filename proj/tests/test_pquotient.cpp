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


#include "gtest/gtest.h"
#include "sigma3/errors.hpp"
#include "sigma3/homomorphism.hpp"
#include "sigma3/pquotient.hpp"
#include "sigma3/subgroup.hpp"

namespace sigma3 {
namespace {

int floor_log2(int v) {
  int r = 0;
  while (v >>= 1) ++r;
  return r;
}

TEST(PQuotient, GnTheoremValues) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = p_quotient(gn_presentation(n), 2 * n + 2);
    EXPECT_TRUE(r.stabilized) << n;
    EXPECT_EQ(r.quotient.order_log3(), 3 * n + 2) << n;
    EXPECT_EQ(nilpotency_class(r.quotient), 2 * n + 1) << n;
    EXPECT_EQ(derived_length(r.quotient), floor_log2(3 * n + 3)) << n;
    EXPECT_TRUE(r.quotient.is_consistent()) << n;
  }
}

TEST(PQuotient, G3AtLargeClassBound) {
  const auto r = p_quotient(gn_presentation(3), 20);
  EXPECT_TRUE(r.stabilized);
  EXPECT_EQ(r.quotient.order_log3(), 11);
  EXPECT_EQ(r.achieved_class, 7);
}

TEST(PQuotient, ElementaryAbelian) {
  const Presentation p = parse_presentation("gens: x y\nx^3\ny^3\nx^-1 y^-1 x y\n");
  const auto r = p_quotient(p, 5);
  EXPECT_TRUE(r.stabilized);
  EXPECT_EQ(r.quotient.order_log3(), 2);
}

TEST(PQuotient, EpimorphismKillsRelators) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = p_quotient(gn_presentation(n), 2 * n + 2);
    EXPECT_TRUE(satisfies_relators(r.quotient, r.epimorphism, gn_presentation(n)));
    EXPECT_EQ(subgroup_closure(r.quotient, r.epimorphism).order_log3(), r.quotient.order_log3());
  }
  const auto h = p_quotient(hn_presentation(3), 8);
  EXPECT_TRUE(satisfies_relators(h.quotient, h.epimorphism, hn_presentation(3)));
}

TEST(PQuotient, MonotoneInClass) {
  int last = 0;
  for (int c = 1; c <= 8; ++c) {
    const auto r = p_quotient(gn_presentation(2), c);
    EXPECT_GE(r.quotient.order_log3(), last);
    EXPECT_EQ(p_class(r.quotient), std::min(c, 5));
    last = r.quotient.order_log3();
  }
  EXPECT_EQ(last, 8);
}

TEST(PQuotient, InfiniteGroupDoesNotStabilize) {
  const auto r = p_quotient(h_presentation(), 3);
  EXPECT_FALSE(r.stabilized);
  EXPECT_EQ(r.achieved_class, 3);
}

TEST(PQuotient, OrderCap) {
  PQuotientOptions opts;
  opts.order_cap_log3 = 10;
  EXPECT_THROW(p_quotient(gn_presentation(4), 10, opts), ResourceLimitError);
  EXPECT_THROW(p_quotient(gn_presentation(1), 0), std::invalid_argument);
}

TEST(PQuotient, QuotientByXCubeIsHn) {
  for (int n = 1; n <= 4; ++n) {
    const auto g = p_quotient(gn_presentation(n), 2 * n + 2);
    const auto h = p_quotient(hn_presentation(n), 2 * n + 2);
    EXPECT_EQ(h.quotient.order_log3(), 3 * n + 1);
    const Subgroup k = normal_closure(g.quotient, {g.quotient.power(g.epimorphism[0], 3)});
    EXPECT_EQ(k.order_log3(), 1);
    const QuotientMap q = quotient(g.quotient, k);
    if (n <= 2) {
      EXPECT_TRUE(isomorphic(q.group, h.quotient));
    }
    std::vector<PcElement> images;
    for (const auto& e : g.epimorphism) images.push_back(q.project(g.quotient, e));
    EXPECT_TRUE(satisfies_relators(q.group, images, hn_presentation(n)));
  }
}

TEST(PCover, ElementaryAbelian) {
  const PCover c = p_cover(PcGroup::elementary_abelian(2));
  EXPECT_EQ(c.multiplicator.order_log3(), 3);
  EXPECT_EQ(c.group.order_log3(), 2);
  EXPECT_EQ(c.data.cover.order_log3(), 5);
  EXPECT_TRUE(is_central(c.data.cover, c.multiplicator));
  EXPECT_TRUE(c.multiplicator.contains(c.data.cover, c.nucleus));
  EXPECT_THROW(c.multiplicator.contains(c.group, c.nucleus), std::invalid_argument);
  // Oracle: dim H^2(C3 x C3, F3) = d(d+1)/2 with d = 2.
  EXPECT_EQ(relation_rank(PcGroup::elementary_abelian(2)), 3);
}

TEST(PCover, CoverModMultiplicator) {
  for (const PcGroup& g : {q1_group(), q2_group(), PcGroup::cyclic(2)}) {
    const PCover c = p_cover(g);
    EXPECT_TRUE(c.data.cover.is_consistent());
    EXPECT_TRUE(is_central(c.data.cover, c.multiplicator));
    EXPECT_TRUE(isomorphic(quotient(c.data.cover, c.multiplicator).group, g));
  }
}

TEST(RelationRank, Q1AndQ2) {
  // Q1 = G_1 is finite with two generators and two relators, so 2 <= r <= 2.
  EXPECT_EQ(relation_rank(q1_group()), 2);
  EXPECT_EQ(gn_presentation(1).relators.size(), 2u);
  EXPECT_EQ(relation_rank(q2_group()), 3);
  EXPECT_EQ(relation_rank(PcGroup::cyclic(1)), 1);
}

TEST(Standardize, PreservesGroup) {
  const PcGroup s = standardize(q2_group()).quotient;
  EXPECT_TRUE(s.has_definitions());
  EXPECT_TRUE(isomorphic(s, q2_group()));
}

}  // namespace
}  // namespace sigma3
