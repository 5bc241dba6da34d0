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

#ifndef SIGMA3_SL2_HPP
#define SIGMA3_SL2_HPP

// SL_2 over Z/3^M: the representation of <x, y | x^3, t^-1 sigma(t)> into the
// 3-adic Sylow subgroup, congruence kernels, and the subgroup computations
// built on exhaustive enumeration of finite truncations.

#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "sigma3/fpgroup.hpp"

namespace sigma3 {

std::int64_t pow3(int e);

/// Residue modulo 3^precision.
class Z3Trunc {
 public:
  Z3Trunc(std::int64_t value, int precision);

  std::int64_t value() const { return value_; }
  int precision() const { return precision_; }
  std::int64_t modulus() const { return pow3(precision_); }
  bool is_unit() const { return value_ % 3 != 0; }
  /// 3-adic valuation; `precision` for zero.
  int valuation() const;
  Z3Trunc inverse() const;

  friend Z3Trunc operator+(const Z3Trunc& a, const Z3Trunc& b);
  friend Z3Trunc operator-(const Z3Trunc& a, const Z3Trunc& b);
  friend Z3Trunc operator*(const Z3Trunc& a, const Z3Trunc& b);
  friend bool operator==(const Z3Trunc&, const Z3Trunc&) = default;

 private:
  std::int64_t value_;
  int precision_;
};

/// The square root of -2 congruent to 1 mod 3, by Hensel lifting.
Z3Trunc sqrt_minus2(int precision);

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t invmod(std::int64_t a, std::int64_t m);

/// 2x2 matrix over Z/3^precision, row major.
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  int precision = 1;

  static Mat2 make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int precision);
  static Mat2 identity(int precision);

  std::int64_t modulus() const { return pow3(precision); }
  std::int64_t det() const;
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  Mat2 inverse() const;
  Mat2 power(std::int64_t e) const;
  /// Reduction to a lower precision.
  Mat2 reduce(int lower) const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 commutator(const Mat2& g, const Mat2& h);

/// rho(x) = (0 -1; 1 -1), rho(y) = alpha (0 1/2; 1 -1); gen 0 is x, 1 is y.
Mat2 rho(int gen, int precision);
Mat2 rho_word(const Word& w, int precision);
/// z_i = x^-i y x^(i-1)
Word z_word(int i);
Mat2 rho_z(int i, int precision);
/// Conjugation by (-1 1; 0 1), which realizes x -> x^-1, y -> y^-1.
Mat2 sigma_prime(const Mat2& m);

/// m = identity mod 3^k. Throws PrecisionError when k > precision.
bool is_in_Nk(const Mat2& m, int k);
/// (m - 1) / 3^k mod 3 as a vector (a, b, c, d) over F_3; m must lie in N_k.
std::array<std::uint8_t, 4> nk_layer_vector(const Mat2& m, int k);
/// Rank over F_3 of the images of ms in N_k / N_{k+1}.
int nk_layer_rank(const std::vector<Mat2>& ms, int k);

/// The five congruences proposed for the kernel of P -> H_n, in the order
/// a,d = 1 (3^n); b,c = 0 (3^n); a+d = 2 (3^(n+2)); a + s*b = 1 (3^(n+1));
/// a+b-c = 1 (3^(n+2)), with s = b_sign. Needs precision >= n + 2.
///
/// With s = +1 the set does not match the normal closure of rho(y^(3^n)) for
/// the representation above; s = -1 does (see the sl2 tests).
std::array<bool, 5> hn_kernel_congruences(const Mat2& m, int n, int b_sign = 1);
bool hn_kernel_membership(const Mat2& m, int n, int b_sign = 1);

inline constexpr std::uint64_t kDefaultBfsCap = 43'046'721;  // 3^16

/// Finite matrix group, enumerated exhaustively.
class MatGroup {
 public:
  MatGroup(std::vector<Mat2> generators, int precision, std::uint64_t cap = kDefaultBfsCap);

  int precision() const { return precision_; }
  std::uint64_t order() const { return keys_.size(); }
  const std::vector<Mat2>& generators() const { return generators_; }
  bool contains(const Mat2& m) const;
  /// Returns false when g was already a member.
  bool add_generator(const Mat2& g);
  std::vector<Mat2> elements() const;
  bool contains(const MatGroup& other) const;
  bool same_as(const MatGroup& other) const { return order() == other.order() && contains(other); }

 private:
  std::uint64_t key(const Mat2& m) const;
  Mat2 decode(std::uint64_t k) const;
  void expand(std::size_t from);

  std::vector<Mat2> generators_;
  int precision_;
  std::uint64_t cap_;
  std::vector<std::uint64_t> keys_;
  std::unordered_set<std::uint64_t> seen_;
};

/// Smallest subgroup containing gens and normalized by every conjugator.
MatGroup normal_closure(const std::vector<Mat2>& gens, const std::vector<Mat2>& conjugators, int precision,
                        std::uint64_t cap = kDefaultBfsCap);
/// Normal closure in P = <rho(x), rho(y)>.
MatGroup normal_closure_in_P(const std::vector<Mat2>& gens, int precision, std::uint64_t cap = kDefaultBfsCap);

std::vector<Mat2> sylow_generators(int precision);
MatGroup sylow_subgroup(int precision, std::uint64_t cap = kDefaultBfsCap);
/// 3^(3M - 2)
std::uint64_t sylow_order(int precision);
std::vector<Mat2> nk_generators(int k, int precision);
MatGroup congruence_kernel(int k, int precision, std::uint64_t cap = kDefaultBfsCap);

/// gamma_1 = P, ..., ending with the trivial group.
std::vector<MatGroup> lower_central_series_of_P(int precision, std::uint64_t cap = kDefaultBfsCap);
/// P^(0) = P, ..., ending with the trivial group.
std::vector<MatGroup> derived_series_of_P(int precision, std::uint64_t cap = kDefaultBfsCap);

struct SeriesComparison {
  std::string name;
  std::uint64_t computed_order = 0;
  std::uint64_t formula_order = 0;
  bool equal = false;
};

/// Compares gamma_j(P) with N_{k+1}<(z0/z1)^(3^e), (z1/z2)^(3^e)> for j = 2k and
/// N_{k+1}<(z0 z1 z2)^(3^e)> for j = 2k+1, where e = k - exponent_shift, for
/// every j >= 2 up to the first trivial term; also P^(d) against
/// gamma_{(2^(d+2)-1)/3} (d even) and gamma_{(2^(d+2)-2)/3} (d odd).
std::vector<SeriesComparison> series_formula_check(int precision, int exponent_shift = 0,
                                                   std::uint64_t cap = kDefaultBfsCap);

/// Integer 2x2 matrix, row major.
using IntMat2 = std::array<std::int64_t, 4>;

/// [1 + 3^m A, 1 + 3^n B] = 1 + 3^(m+n) (AB - BA) modulo 3^(m+n+min(m,n)).
/// Needs precision >= m + n + min(m, n).
bool matrix_commutator_identity_check(const IntMat2& a, const IntMat2& b, int m, int n, int precision);

/// [N_k, N_l] = N_{k+l} in SL_2(Z/3^precision).
bool nk_commutator_check(int k, int l, int precision, std::uint64_t cap = kDefaultBfsCap);

}  // namespace sigma3

#endif  // SIGMA3_SL2_HPP
