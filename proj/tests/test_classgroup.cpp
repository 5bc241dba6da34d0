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


#include <cmath>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "sigma3/classgroup.hpp"
#include "sigma3/errors.hpp"

namespace sigma3 {
namespace {

// All reduced forms by scanning every (a, b) with |b| <= a <= sqrt(|d|/3).
std::set<QuadForm> brute_reduced(std::int64_t d) {
  std::set<QuadForm> out;
  for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      if ((b * b - d) % (4 * a) != 0) continue;
      const std::int64_t c = (b * b - d) / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      out.insert({a, b, c});
    }
  }
  return out;
}

// 3-rank as log_3 of the number of classes whose cube is principal.
int rank_by_cubes(std::int64_t d) {
  const auto forms = reduced_forms(d);
  const QuadForm one = principal_form(d);
  int count = 0;
  for (const auto& f : forms) count += compose(compose(f, f), f) == one;
  int r = 0;
  while (count > 1) {
    count /= 3;
    ++r;
  }
  return r;
}

TEST(Discriminants, Fundamental) {
  EXPECT_TRUE(is_fundamental_discriminant(-3));
  EXPECT_TRUE(is_fundamental_discriminant(-4));
  EXPECT_TRUE(is_fundamental_discriminant(-8));
  EXPECT_TRUE(is_fundamental_discriminant(-4027));
  EXPECT_FALSE(is_fundamental_discriminant(-12));
  EXPECT_FALSE(is_fundamental_discriminant(-27));
  EXPECT_FALSE(is_fundamental_discriminant(-16));
  EXPECT_FALSE(is_fundamental_discriminant(-5));
  EXPECT_THROW(reduced_forms(-12), std::invalid_argument);
  EXPECT_THROW(reduced_forms(-(kMaxAbsDiscriminant + 3)), ResourceLimitError);
}

TEST(ReducedForms, SmallDiscriminants) {
  EXPECT_EQ(reduced_forms(-3), (std::vector<QuadForm>{{1, 1, 1}}));
  const auto f23 = reduced_forms(-23);
  EXPECT_EQ(std::set<QuadForm>(f23.begin(), f23.end()), (std::set<QuadForm>{{1, 1, 6}, {2, 1, 3}, {2, -1, 3}}));
  for (std::int64_t d : {-23, -47, -71, -4027, -3896, -20003}) {
    const auto f = reduced_forms(d);
    EXPECT_EQ(std::set<QuadForm>(f.begin(), f.end()), brute_reduced(d)) << d;
  }
}

TEST(Compose, Laws) {
  const std::int64_t d = -23;
  const QuadForm f{2, 1, 3};
  EXPECT_EQ(compose(principal_form(d), f), f);
  EXPECT_EQ(compose(f, f), (QuadForm{2, -1, 3}));
  EXPECT_EQ(compose(compose(f, f), f), principal_form(d));
  EXPECT_EQ(compose(f, f.inverse()), principal_form(d));
  EXPECT_THROW(compose(f, principal_form(-31)), std::invalid_argument);
}

TEST(GroupStructure, Examples) {
  EXPECT_EQ(group_structure(-23).invariants.to_string(), "[3]");
  EXPECT_EQ(group_structure(-23).h, reduced_forms(-23).size());
  EXPECT_EQ(group_structure(-4).invariants.to_string(), "[]");
  EXPECT_EQ(group_structure(-4).h, 1u);
  EXPECT_EQ(sylow3(group_structure(-3896)).to_string(), "[3,3]");
  EXPECT_EQ(rank_by_cubes(-3896), 2);
  const auto s = group_structure(-4027);
  EXPECT_EQ(s.h % 9, 0u);
  EXPECT_EQ(sylow3(s).to_string(), "[3,3]");
}

TEST(GroupStructure, Sylow3DropsOtherPrimes) {
  ClassGroupStructure s;
  s.invariants = AbelianInvariants::parse("2,3,9");
  EXPECT_EQ(sylow3(s).to_string(), "[3,9]");
}

TEST(GroupStructure, ClosureMatchesFormCount) {
  for (std::int64_t d = -4; d >= -3000; --d) {
    if (!is_fundamental_discriminant(d)) continue;
    const auto forms = reduced_forms(d);
    if (forms.size() > 1000) continue;
    const auto s = group_structure(d);
    ASSERT_EQ(s.h, forms.size()) << d;
    ASSERT_EQ(s.invariants.order(), BigInt(forms.size())) << d;
    std::set<QuadForm> closure{principal_form(d)};
    std::vector<QuadForm> frontier{principal_form(d)};
    while (!frontier.empty()) {
      std::vector<QuadForm> next;
      for (const auto& f : frontier) {
        for (const auto& g : s.generators) {
          const QuadForm h = compose(f, g);
          if (closure.insert(h).second) next.push_back(h);
        }
      }
      frontier = std::move(next);
    }
    ASSERT_EQ(closure.size(), forms.size()) << d;
    ASSERT_EQ(sylow3(s).rank(3), rank_by_cubes(d)) << d;
    ASSERT_EQ(three_rank_by_cubes(d), rank_by_cubes(d)) << d;
  }
}

TEST(GroupLaws, SampledTriples) {
  std::mt19937_64 rng(20260101);
  int tested = 0;
  for (std::int64_t d = -3; d >= -20000 && tested < 60; --d) {
    if (!is_fundamental_discriminant(d)) continue;
    const auto forms = reduced_forms(d);
    if (forms.size() > 50 || forms.size() < 3) continue;
    ++tested;
    std::uniform_int_distribution<std::size_t> pick(0, forms.size() - 1);
    for (int i = 0; i < 1000; ++i) {
      const QuadForm &a = forms[pick(rng)], &b = forms[pick(rng)], &c = forms[pick(rng)];
      ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
      ASSERT_EQ(compose(a, b), compose(b, a));
      ASSERT_TRUE(compose(a, b).is_reduced());
    }
    for (const auto& f : forms) ASSERT_EQ(power(f, static_cast<std::int64_t>(forms.size())), principal_form(d));
  }
  EXPECT_EQ(tested, 60);
}

TEST(Lists, AllListedDiscriminantsHaveClThreeThree) {
  EXPECT_EQ(g1_tower_discriminants().size(), 22u);
  EXPECT_EQ(gn_candidate_discriminants().size(), 13u);
  for (const auto* list : {&g1_tower_discriminants(), &gn_candidate_discriminants()}) {
    for (std::int64_t d : *list) {
      EXPECT_TRUE(is_fundamental_discriminant(d)) << d;
      EXPECT_EQ(sylow3(group_structure(d)).to_string(), "[3,3]") << d;
      EXPECT_EQ(rank_by_cubes(d), 2) << d;
    }
  }
}

TEST(Scan, SmallRangeMatchesDirectComputation) {
  const auto all = scan(-2000, -1, [](const ScanRecord&) { return true; }, 2);
  std::size_t fundamental = 0;
  for (std::int64_t d = -2000; d <= -1; ++d) fundamental += is_fundamental_discriminant(d);
  ASSERT_EQ(all.size(), fundamental);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].d, all[i].d);
  for (std::size_t i = 0; i < all.size(); i += 37) EXPECT_EQ(all[i].h, reduced_forms(all[i].d).size());
  const auto one = scan(-2000, -1, [](const ScanRecord& r) { return r.sylow3.rank(3) == 2; }, 1);
  const auto many = scan(-2000, -1, [](const ScanRecord& r) { return r.sylow3.rank(3) == 2; }, 3);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i].d, many[i].d);
}

}  // namespace
}  // namespace sigma3
