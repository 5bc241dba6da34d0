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

#include "sigma3/sl2.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "sigma3/errors.hpp"
#include "sigma3/f3_linear.hpp"

namespace sigma3 {

std::int64_t pow3(int e) {
  if (e < 0 || e > 39) throw PrecisionError("3^" + std::to_string(e) + " is out of range");
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

namespace {

std::int64_t norm(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

void require_precision(int have, int need) {
  if (have < need)
    throw PrecisionError("precision 3^" + std::to_string(have) + " is too low; need 3^" + std::to_string(need));
}

}  // namespace

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return norm(static_cast<std::int64_t>(static_cast<__int128>(a) * b % m), m);
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = norm(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) throw std::domain_error("not a unit");
  return norm(s0, m);
}

Z3Trunc::Z3Trunc(std::int64_t value, int precision) : value_(norm(value, pow3(precision))), precision_(precision) {
  if (precision < 1) throw PrecisionError("precision must be positive");
}

int Z3Trunc::valuation() const {
  if (value_ == 0) return precision_;
  int v = 0;
  for (std::int64_t x = value_; x % 3 == 0; x /= 3) ++v;
  return v;
}

Z3Trunc Z3Trunc::inverse() const { return Z3Trunc(invmod(value_, modulus()), precision_); }

Z3Trunc operator+(const Z3Trunc& a, const Z3Trunc& b) { return Z3Trunc(a.value_ + b.value_, a.precision_); }
Z3Trunc operator-(const Z3Trunc& a, const Z3Trunc& b) { return Z3Trunc(a.value_ - b.value_, a.precision_); }
Z3Trunc operator*(const Z3Trunc& a, const Z3Trunc& b) {
  return Z3Trunc(mulmod(a.value_, b.value_, a.modulus()), a.precision_);
}

Z3Trunc sqrt_minus2(int precision) {
  const std::int64_t m = pow3(precision);
  std::int64_t a = 1;
  // Newton steps double the number of correct digits.
  for (int correct = 1; correct < precision; correct *= 2) {
    const std::int64_t f = norm(mulmod(a, a, m) + 2, m);
    a = norm(a - mulmod(f, invmod(2 * a, m), m), m);
  }
  return Z3Trunc(a, precision);
}

Mat2 Mat2::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int precision) {
  const std::int64_t m = pow3(precision);
  return Mat2{norm(a, m), norm(b, m), norm(c, m), norm(d, m), precision};
}

Mat2 Mat2::identity(int precision) { return make(1, 0, 0, 1, precision); }

std::int64_t Mat2::det() const {
  const std::int64_t m = modulus();
  return norm(mulmod(a, d, m) - mulmod(b, c, m), m);
}

Mat2 Mat2::inverse() const {
  const std::int64_t m = modulus();
  const std::int64_t u = invmod(det(), m);
  return make(mulmod(d, u, m), mulmod(m - b, u, m), mulmod(m - c, u, m), mulmod(a, u, m), precision);
}

Mat2 Mat2::power(std::int64_t e) const {
  if (e < 0) return inverse().power(-e);
  Mat2 result = identity(precision);
  Mat2 base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Mat2 Mat2::reduce(int lower) const {
  require_precision(precision, lower);
  return make(a, b, c, d, lower);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  const std::int64_t m = x.modulus();
  return Mat2{norm(mulmod(x.a, y.a, m) + mulmod(x.b, y.c, m), m), norm(mulmod(x.a, y.b, m) + mulmod(x.b, y.d, m), m),
              norm(mulmod(x.c, y.a, m) + mulmod(x.d, y.c, m), m), norm(mulmod(x.c, y.b, m) + mulmod(x.d, y.d, m), m),
              x.precision};
}

Mat2 commutator(const Mat2& g, const Mat2& h) { return g.inverse() * h.inverse() * g * h; }

Mat2 rho(int gen, int precision) {
  if (gen == 0) return Mat2::make(0, -1, 1, -1, precision);
  if (gen != 1) throw std::invalid_argument("rho is defined on x and y only");
  const std::int64_t m = pow3(precision);
  const std::int64_t alpha = sqrt_minus2(precision).value();
  return Mat2::make(0, mulmod(alpha, invmod(2, m), m), alpha, m - alpha, precision);
}

Mat2 rho_word(const Word& w, int precision) {
  Mat2 r = Mat2::identity(precision);
  for (const auto& s : w.syllables()) r = r * rho(s.gen, precision).power(s.exp);
  return r;
}

Word z_word(int i) { return Word::letter(0, -i) * Word::letter(1) * Word::letter(0, i - 1); }

Mat2 rho_z(int i, int precision) { return rho_word(z_word(i), precision); }

Mat2 sigma_prime(const Mat2& m) {
  const Mat2 c = Mat2::make(-1, 1, 0, 1, m.precision);
  return c * m * c.inverse();
}

bool is_in_Nk(const Mat2& m, int k) {
  require_precision(m.precision, k);
  const std::int64_t q = pow3(k);
  return norm(m.a - 1, q) == 0 && m.b % q == 0 && m.c % q == 0 && norm(m.d - 1, q) == 0;
}

std::array<std::uint8_t, 4> nk_layer_vector(const Mat2& m, int k) {
  require_precision(m.precision, k + 1);
  if (!is_in_Nk(m, k)) throw std::invalid_argument("matrix is not in N_k");
  const std::int64_t q = pow3(k);
  auto digit = [&](std::int64_t v) { return static_cast<std::uint8_t>((v / q) % 3); };
  return {digit(norm(m.a - 1, m.modulus())), digit(m.b), digit(m.c), digit(norm(m.d - 1, m.modulus()))};
}

int nk_layer_rank(const std::vector<Mat2>& ms, int k) {
  EchelonBasis basis(4);
  for (const auto& m : ms) {
    const auto v = nk_layer_vector(m, k);
    basis.add(F3Vector(v.begin(), v.end()));
  }
  return basis.rank();
}

std::array<bool, 5> hn_kernel_congruences(const Mat2& m, int n, int b_sign) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (b_sign != 1 && b_sign != -1) throw std::invalid_argument("b_sign must be +1 or -1");
  require_precision(m.precision, n + 2);
  auto is0 = [](std::int64_t v, int e) { return norm(v, pow3(e)) == 0; };
  return {is0(m.a - 1, n) && is0(m.d - 1, n), is0(m.b, n) && is0(m.c, n), is0(m.a + m.d - 2, n + 2),
          is0(m.a + b_sign * m.b - 1, n + 1), is0(m.a + m.b - m.c - 1, n + 2)};
}

bool hn_kernel_membership(const Mat2& m, int n, int b_sign) {
  const auto c = hn_kernel_congruences(m, n, b_sign);
  return std::all_of(c.begin(), c.end(), [](bool b) { return b; });
}

MatGroup::MatGroup(std::vector<Mat2> generators, int precision, std::uint64_t cap)
    : precision_(precision), cap_(cap) {
  if (precision < 1 || precision > 10) throw PrecisionError("enumeration supports precision 1..10");
  keys_.push_back(key(Mat2::identity(precision)));
  seen_.insert(keys_.back());
  for (auto& g : generators) {
    if (g.precision != precision) throw std::invalid_argument("generator precision mismatch");
    add_generator(g);
  }
}

std::uint64_t MatGroup::key(const Mat2& m) const {
  const auto q = static_cast<std::uint64_t>(pow3(precision_));
  return ((static_cast<std::uint64_t>(m.a) * q + static_cast<std::uint64_t>(m.b)) * q + static_cast<std::uint64_t>(m.c)) * q +
         static_cast<std::uint64_t>(m.d);
}

Mat2 MatGroup::decode(std::uint64_t k) const {
  const auto q = static_cast<std::uint64_t>(pow3(precision_));
  Mat2 m;
  m.precision = precision_;
  m.d = static_cast<std::int64_t>(k % q);
  k /= q;
  m.c = static_cast<std::int64_t>(k % q);
  k /= q;
  m.b = static_cast<std::int64_t>(k % q);
  m.a = static_cast<std::int64_t>(k / q);
  return m;
}

bool MatGroup::contains(const Mat2& m) const { return seen_.count(key(m)) != 0; }

bool MatGroup::contains(const MatGroup& other) const {
  for (std::uint64_t k : other.keys_) {
    if (!contains(other.decode(k))) return false;
  }
  return true;
}

std::vector<Mat2> MatGroup::elements() const {
  std::vector<Mat2> out;
  out.reserve(keys_.size());
  for (std::uint64_t k : keys_) out.push_back(decode(k));
  return out;
}

bool MatGroup::add_generator(const Mat2& g) {
  if (contains(g)) return false;
  generators_.push_back(g);
  const std::size_t old = keys_.size();
  for (std::size_t i = 0; i < old; ++i) {
    const std::uint64_t k = key(decode(keys_[i]) * g);
    if (seen_.insert(k).second) keys_.push_back(k);
  }
  expand(old);
  return true;
}

void MatGroup::expand(std::size_t from) {
  for (std::size_t i = from; i < keys_.size(); ++i) {
    const Mat2 x = decode(keys_[i]);
    for (const auto& g : generators_) {
      const std::uint64_t k = key(x * g);
      if (seen_.insert(k).second) {
        keys_.push_back(k);
        if (keys_.size() > cap_) throw ResourceLimitError("matrix group exceeds enumeration cap " + std::to_string(cap_));
      }
    }
  }
}

MatGroup normal_closure(const std::vector<Mat2>& gens, const std::vector<Mat2>& conjugators, int precision,
                        std::uint64_t cap) {
  MatGroup h(gens, precision, cap);
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    const Mat2 g = h.generators()[i];
    for (const auto& c : conjugators) h.add_generator(c.inverse() * g * c);
  }
  return h;
}

std::vector<Mat2> sylow_generators(int precision) { return {rho(0, precision), rho(1, precision)}; }

MatGroup normal_closure_in_P(const std::vector<Mat2>& gens, int precision, std::uint64_t cap) {
  return normal_closure(gens, sylow_generators(precision), precision, cap);
}

MatGroup sylow_subgroup(int precision, std::uint64_t cap) { return MatGroup(sylow_generators(precision), precision, cap); }

std::uint64_t sylow_order(int precision) {
  if (precision < 1) throw std::invalid_argument("precision must be positive");
  return static_cast<std::uint64_t>(pow3(3 * precision - 2));
}

std::vector<Mat2> nk_generators(int k, int precision) {
  const std::int64_t q = k >= precision ? 0 : pow3(k);
  const Mat2 diag = Mat2::make(1 + q, 0, 0, 1, precision);
  return {Mat2::make(1, q, 0, 1, precision), Mat2::make(1, 0, q, 1, precision),
          Mat2::make(1 + q, 0, 0, invmod(diag.a, diag.modulus()), precision)};
}

MatGroup congruence_kernel(int k, int precision, std::uint64_t cap) {
  return MatGroup(nk_generators(k, precision), precision, cap);
}

std::vector<MatGroup> lower_central_series_of_P(int precision, std::uint64_t cap) {
  const auto p_gens = sylow_generators(precision);
  std::vector<MatGroup> out{MatGroup(p_gens, precision, cap)};
  while (out.back().order() > 1) {
    std::vector<Mat2> comms;
    for (const auto& g : out.back().generators()) {
      for (const auto& c : p_gens) comms.push_back(commutator(g, c));
    }
    MatGroup next = normal_closure(comms, p_gens, precision, cap);
    if (next.order() == out.back().order()) throw std::logic_error("lower central series of P did not descend");
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<MatGroup> derived_series_of_P(int precision, std::uint64_t cap) {
  const auto p_gens = sylow_generators(precision);
  std::vector<MatGroup> out{MatGroup(p_gens, precision, cap)};
  while (out.back().order() > 1) {
    const auto& gens = out.back().generators();
    std::vector<Mat2> comms;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
    }
    MatGroup next = normal_closure(comms, p_gens, precision, cap);
    if (next.order() == out.back().order()) throw std::logic_error("derived series of P did not descend");
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<SeriesComparison> series_formula_check(int precision, int exponent_shift, std::uint64_t cap) {
  const auto gammas = lower_central_series_of_P(precision, cap);
  const Mat2 z0 = rho_z(0, precision), z1 = rho_z(1, precision), z2 = rho_z(2, precision);
  std::vector<SeriesComparison> out;
  for (std::size_t j = 2; j <= gammas.size(); ++j) {
    const int k = static_cast<int>(j / 2);
    const int e = k - exponent_shift;
    if (e < 0) continue;
    std::vector<Mat2> gens = nk_generators(k + 1, precision);
    const std::int64_t q = pow3(e);
    if (j % 2 == 0) {
      gens.push_back((z0 * z1.inverse()).power(q));
      gens.push_back((z1 * z2.inverse()).power(q));
    } else {
      gens.push_back((z0 * z1 * z2).power(q));
    }
    const MatGroup formula(gens, precision, cap);
    const MatGroup& computed = gammas[j - 1];
    out.push_back({"gamma_" + std::to_string(j), computed.order(), formula.order(), computed.same_as(formula)});
  }
  const auto derived = derived_series_of_P(precision, cap);
  const MatGroup trivial({}, precision, cap);
  for (std::size_t d = 0; d < derived.size(); ++d) {
    const std::uint64_t two = std::uint64_t{1} << (d + 2);
    const std::size_t idx = static_cast<std::size_t>(d % 2 == 0 ? (two - 1) / 3 : (two - 2) / 3);
    const MatGroup& gamma = idx <= gammas.size() ? gammas[idx - 1] : trivial;
    out.push_back({"P^(" + std::to_string(d) + ") = gamma_" + std::to_string(idx), derived[d].order(), gamma.order(),
                   derived[d].same_as(gamma)});
  }
  return out;
}

bool matrix_commutator_identity_check(const IntMat2& a, const IntMat2& b, int m, int n, int precision) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
  const int bound = m + n + std::min(m, n);
  require_precision(precision, bound);
  const std::int64_t qm = pow3(m), qn = pow3(n), mod = pow3(precision);
  auto lift = [&](const IntMat2& x, std::int64_t q) {
    return Mat2::make(1 + mulmod(q, norm(x[0], mod), mod), mulmod(q, norm(x[1], mod), mod),
                      mulmod(q, norm(x[2], mod), mod), 1 + mulmod(q, norm(x[3], mod), mod), precision);
  };
  const Mat2 lhs = commutator(lift(a, qm), lift(b, qn)).reduce(bound);
  // AB - BA over the integers, reduced modulo 3^bound.
  const std::int64_t mb = pow3(bound);
  auto e = [&](std::int64_t v) { return norm(v, mb); };
  const std::int64_t ab[4] = {e(mulmod(a[0], b[0], mb) + mulmod(a[1], b[2], mb)), e(mulmod(a[0], b[1], mb) + mulmod(a[1], b[3], mb)),
                              e(mulmod(a[2], b[0], mb) + mulmod(a[3], b[2], mb)), e(mulmod(a[2], b[1], mb) + mulmod(a[3], b[3], mb))};
  const std::int64_t ba[4] = {e(mulmod(b[0], a[0], mb) + mulmod(b[1], a[2], mb)), e(mulmod(b[0], a[1], mb) + mulmod(b[1], a[3], mb)),
                              e(mulmod(b[2], a[0], mb) + mulmod(b[3], a[2], mb)), e(mulmod(b[2], a[1], mb) + mulmod(b[3], a[3], mb))};
  const std::int64_t q = pow3(m + n);
  const Mat2 rhs = Mat2::make(1 + mulmod(q, ab[0] - ba[0] + mb, mb), mulmod(q, ab[1] - ba[1] + mb, mb),
                              mulmod(q, ab[2] - ba[2] + mb, mb), 1 + mulmod(q, ab[3] - ba[3] + mb, mb), bound);
  return lhs == rhs;
}

bool nk_commutator_check(int k, int l, int precision, std::uint64_t cap) {
  if (k < 1 || l < 1) throw std::invalid_argument("k and l must be positive");
  const auto gk = nk_generators(k, precision);
  const auto gl = nk_generators(l, precision);
  std::vector<Mat2> comms;
  for (const auto& g : gk) {
    for (const auto& h : gl) comms.push_back(commutator(g, h));
  }
  std::vector<Mat2> conj = gk;
  conj.insert(conj.end(), gl.begin(), gl.end());
  const MatGroup lhs = normal_closure(comms, conj, precision, cap);
  return lhs.same_as(congruence_kernel(k + l, precision, cap));
}

}  // namespace sigma3
