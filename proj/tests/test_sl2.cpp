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


#include <random>
#include <set>

#include "gtest/gtest.h"
#include "sigma3/errors.hpp"
#include "sigma3/fpgroup.hpp"
#include "sigma3/sl2.hpp"

namespace sigma3 {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

Mat2 rho_y_power(int n, int m) { return rho(1, m).power(pow3(n)); }

TEST(SqrtMinus2, SmallPrecisions) {
  // Oracle: exhaustive search among residues congruent to 1 mod 3.
  for (int m = 1; m <= 5; ++m) {
    const std::int64_t q = pow3(m);
    std::vector<std::int64_t> roots;
    for (std::int64_t a = 1; a < q; a += 3) {
      if (mod(a * a + 2, q) == 0) roots.push_back(a);
    }
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_EQ(sqrt_minus2(m).value(), roots[0]);
  }
  EXPECT_EQ(sqrt_minus2(1).value(), 1);
  EXPECT_EQ(sqrt_minus2(2).value(), 4);
  EXPECT_EQ(sqrt_minus2(3).value(), 22);
}

TEST(SqrtMinus2, HenselPropertyUpToTwelveDigits) {
  for (int m = 1; m <= 12; ++m) {
    const Z3Trunc a = sqrt_minus2(m);
    EXPECT_EQ(mod(mulmod(a.value(), a.value(), a.modulus()) + 2, a.modulus()), 0) << m;
    EXPECT_EQ(a.value() % 3, 1);
    if (m >= 2) {
      EXPECT_NE(a.value() % 9, 1);
    }
  }
}

TEST(Z3Trunc, Arithmetic) {
  const Z3Trunc a(5, 3), b(25, 3);
  EXPECT_EQ((a * b).value(), 125 % 27);
  EXPECT_EQ((a - b).value(), mod(5 - 25, 27));
  EXPECT_EQ((a * a.inverse()).value(), 1);
  EXPECT_EQ(Z3Trunc(18, 3).valuation(), 2);
  EXPECT_EQ(Z3Trunc(0, 3).valuation(), 3);
  EXPECT_ANY_THROW(Z3Trunc(3, 3).inverse());
}

TEST(Rho, Basics) {
  const Mat2 x = rho(0, 1);
  EXPECT_EQ(std::vector<std::int64_t>({x.a, x.b, x.c, x.d}), std::vector<std::int64_t>({0, 2, 1, 2}));
  for (int m = 1; m <= 6; ++m) {
    EXPECT_TRUE(rho(0, m).power(3).is_identity());
    EXPECT_EQ(rho(1, m).det(), 1);
    EXPECT_TRUE(rho_word(schur_sigma_relator(t_word()), m).is_identity());
  }
}

TEST(Rho, RandomWordProperties) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> len(1, 15), gen(0, 1), e(-4, 4);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Syllable> s;
    for (int k = len(rng); k > 0; --k) s.push_back({gen(rng), e(rng)});
    const Word w = Word::from_syllables(s);
    const Mat2 r = rho_word(w, 5);
    ASSERT_EQ(r.det(), 1);
    ASSERT_EQ(rho_word(apply_sigma(w), 5), sigma_prime(r));
  }
}

TEST(Rho, Z0PowersAreDiagonal) {
  const int m = 6;
  const Z3Trunc alpha = sqrt_minus2(m);
  for (int k = 1; k < m; ++k) {
    const std::int64_t q = pow3(k - 1);
    Z3Trunc aq(1, m);
    for (std::int64_t i = 0; i < q; ++i) aq = aq * alpha;
    const Mat2 z = rho_z(0, m).power(q);
    EXPECT_EQ(z.b, 0);
    EXPECT_EQ(z.c, 0);
    EXPECT_EQ(z.d, aq.value());
    EXPECT_EQ(z.a, aq.inverse().value());
  }
}

TEST(Rho, LayerRanks) {
  const int m = 5;
  for (int k = 1; k < m; ++k) {
    std::vector<Mat2> ms;
    for (int i = 0; i < 3; ++i) ms.push_back(rho_z(i, m).power(pow3(k - 1)));
    EXPECT_EQ(nk_layer_rank(ms, k), 3) << k;
  }
}

TEST(Rho, YCubeConjugateToZProduct) {
  const int m = 5;
  const Mat2 target = rho_z(2, m) * rho_z(1, m) * rho_z(0, m);
  const Mat2 y3 = rho(1, m).power(3);
  bool found = false;
  Mat2 c = Mat2::identity(m);
  for (int i = 0; i < 3; ++i, c = c * rho(0, m)) found = found || c.inverse() * y3 * c == target;
  EXPECT_TRUE(found);
}

TEST(Nk, Membership) {
  EXPECT_TRUE(is_in_Nk(Mat2::identity(4), 3));
  EXPECT_TRUE(is_in_Nk(rho_z(0, 3).power(3), 1));
  EXPECT_FALSE(is_in_Nk(rho(0, 3), 1));
  EXPECT_ANY_THROW(is_in_Nk(Mat2::identity(2), 3));
}

TEST(KernelCongruences, Examples) {
  EXPECT_TRUE(hn_kernel_membership(Mat2::identity(3), 1));
  EXPECT_FALSE(hn_kernel_membership(rho(1, 3), 1));
  EXPECT_ANY_THROW(hn_kernel_membership(Mat2::identity(2), 1));
  EXPECT_ANY_THROW(hn_kernel_membership(Mat2::identity(3), 1, 2));
}

TEST(KernelCongruences, PrintedFormDoesNotDescribeR) {
  for (int n = 1; n <= 2; ++n) {
    const int m = n + 2;
    const Mat2 g = rho_y_power(n, m);
    // The generator of R itself breaks a + b = 1 mod 3^(n+1); a - b holds.
    EXPECT_FALSE(hn_kernel_membership(g, n));
    EXPECT_TRUE(hn_kernel_membership(g, n, -1));
    EXPECT_EQ(mod(g.a - g.b, pow3(n + 1)), 1);
    EXPECT_NE(mod(g.a + g.b, pow3(n + 1)), 1);
  }
}

TEST(KernelCongruences, SignCorrectedFormCutsOutR) {
  for (int n = 1; n <= 2; ++n) {
    const int m = n + 2;
    const MatGroup r = normal_closure_in_P({rho_y_power(n, m)}, m);
    const MatGroup p = sylow_subgroup(m);
    EXPECT_EQ(p.order() / r.order(), std::uint64_t(pow3(3 * n + 1)));
    std::uint64_t printed = 0, corrected = 0;
    bool printed_inside = true;
    for (const Mat2& e : p.elements()) {
      if (hn_kernel_membership(e, n, -1)) {
        ++corrected;
        EXPECT_TRUE(r.contains(e));
      }
      if (hn_kernel_membership(e, n)) {
        ++printed;
        printed_inside = printed_inside && r.contains(e);
      }
    }
    EXPECT_EQ(corrected, r.order());
    EXPECT_FALSE(printed == r.order() && printed_inside);
  }
}

TEST(MatGroupBfs, Orders) {
  EXPECT_EQ(MatGroup({rho(0, 2)}, 2).order(), 3u);
  EXPECT_EQ(MatGroup({rho(0, 2), rho(1, 2)}, 2).order(), 81u);
  EXPECT_EQ(MatGroup({rho(0, 3), rho(1, 3)}, 3).order(), 2187u);
  EXPECT_THROW(MatGroup({rho(0, 4), rho(1, 4)}, 4, 1000), ResourceLimitError);
}

TEST(MatGroupBfs, KernelOfReductionModThree) {
  // Oracle: count matrices = I mod 3 with determinant 1 mod 9 directly.
  std::uint64_t count = 0;
  for (int a = 1; a < 9; a += 3)
    for (int b = 0; b < 9; b += 3)
      for (int c = 0; c < 9; c += 3)
        for (int d = 1; d < 9; d += 3) count += mod(a * d - b * c, 9) == 1;
  EXPECT_EQ(count, 27u);
  EXPECT_EQ(congruence_kernel(1, 2).order(), count);
}

TEST(SylowOrder, AgreesWithBruteForce) {
  // |SL_2(F_3)| = 24 by direct count.
  int sl2_f3 = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) sl2_f3 += mod(a * d - b * c, 3) == 1;
  EXPECT_EQ(sl2_f3, 24);
  EXPECT_EQ(sylow_order(1), 3u);
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(sylow_subgroup(m).order(), sylow_order(m));
  EXPECT_EQ(sylow_order(3), 2187u);
}

TEST(NormalClosureInP, Trivial) { EXPECT_EQ(normal_closure_in_P({Mat2::identity(3)}, 3).order(), 1u); }

TEST(SeriesFormulas, LiteralClosedFormFails) {
  int mismatches = 0;
  for (const auto& c : series_formula_check(4, 0)) {
    if (c.name.rfind("gamma_", 0) == 0 && c.computed_order > 1) mismatches += !c.equal;
  }
  EXPECT_EQ(mismatches, 6);
}

TEST(SeriesFormulas, ShiftedExponentMatches) {
  for (const auto& c : series_formula_check(4, 1)) EXPECT_TRUE(c.equal) << c.name;
}

TEST(SeriesFormulas, DerivedAgainstLowerCentral) {
  const auto gammas = lower_central_series_of_P(4);
  const auto derived = derived_series_of_P(4);
  ASSERT_GE(derived.size(), 3u);
  EXPECT_TRUE(derived[1].same_as(gammas[1]));
  EXPECT_TRUE(derived[2].same_as(gammas[4]));
}

TEST(CommutatorIdentity, Examples) {
  EXPECT_TRUE(matrix_commutator_identity_check({0, 1, 0, 0}, {0, 0, 1, 0}, 1, 1, 3));
  EXPECT_TRUE(matrix_commutator_identity_check({1, 2, 3, 4}, {1, 2, 3, 4}, 1, 2, 4));
  EXPECT_ANY_THROW(matrix_commutator_identity_check({0, 1, 0, 0}, {0, 0, 1, 0}, 1, 1, 2));
}

TEST(CommutatorIdentity, RandomSamples) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> entry(-50, 50);
  for (int i = 0; i < 100; ++i) {
    const IntMat2 a{entry(rng), entry(rng), entry(rng), entry(rng)};
    const IntMat2 b{entry(rng), entry(rng), entry(rng), entry(rng)};
    EXPECT_TRUE(matrix_commutator_identity_check(a, b, 1, 1, 3));
  }
}

TEST(NkCommutators, Pairs) {
  EXPECT_TRUE(nk_commutator_check(1, 1, 3));
  EXPECT_TRUE(nk_commutator_check(1, 1, 4));
  EXPECT_TRUE(nk_commutator_check(1, 2, 4));
  EXPECT_TRUE(nk_commutator_check(2, 1, 4));
  EXPECT_TRUE(nk_commutator_check(2, 2, 4));
}

}  // namespace
}  // namespace sigma3
