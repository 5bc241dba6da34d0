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

#include "sigma3/classgroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "sigma3/errors.hpp"

namespace sigma3 {

namespace {

bool squarefree(std::int64_t n) {
  n = n < 0 ? -n : n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Returns (g, x, y) with a x + b y = g = gcd(a, b) >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> xgcd(std::int64_t a, std::int64_t b) {
  std::int64_t r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
    std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
  }
  if (r0 < 0) return {-r0, -x0, -y0};
  return {r0, x0, y0};
}

void check_discriminant(std::int64_t d) {
  if (d < -kMaxAbsDiscriminant) throw ResourceLimitError("|d| exceeds " + std::to_string(kMaxAbsDiscriminant));
  if (!is_fundamental_discriminant(d)) throw std::invalid_argument(std::to_string(d) + " is not a negative fundamental discriminant");
}

}  // namespace

bool is_fundamental_discriminant(std::int64_t d) {
  if (d >= 0) return false;
  switch (floor_mod(d, 4)) {
    case 1:
      return squarefree(d);
    case 0: {
      const std::int64_t m = floor_mod(d / 4, 4);
      return (m == 2 || m == 3) && squarefree(d / 4);
    }
    default:
      return false;
  }
}

bool QuadForm::is_reduced() const {
  const std::int64_t ab = b < 0 ? -b : b;
  if (!(ab <= a && a <= c)) return false;
  if ((ab == a || a == c) && b < 0) return false;
  return true;
}

QuadForm QuadForm::inverse() const { return reduce({a, -b, c}); }

std::string QuadForm::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

QuadForm reduce(QuadForm f) {
  const std::int64_t d = f.discriminant();
  if (f.a <= 0 || d >= 0) throw std::invalid_argument("form is not positive definite");
  for (;;) {
    // Bring b into (-a, a].
    std::int64_t r = floor_mod(f.b, 2 * f.a);
    if (r > f.a) r -= 2 * f.a;
    f.b = r;
    f.c = (f.b * f.b - d) / (4 * f.a);
    if (f.a > f.c) {
      f = {f.c, -f.b, f.a};
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
  }
}

QuadForm principal_form(std::int64_t d) {
  const std::int64_t b = floor_mod(d, 2);
  return {1, b, (b * b - d) / 4};
}

std::vector<QuadForm> reduced_forms(std::int64_t d) {
  check_discriminant(d);
  std::vector<QuadForm> out;
  for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (floor_mod(b - d, 2) != 0) continue;
      const std::int64_t num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const QuadForm f{a, b, num / (4 * a)};
      if (f.is_reduced()) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
  const std::int64_t d = f.discriminant();
  if (g.discriminant() != d) throw std::invalid_argument("forms have different discriminants");
  const std::int64_t s = (f.b + g.b) / 2;
  const auto [g1, u1, v1] = xgcd(f.a, g.a);
  const auto [e, x, w] = xgcd(g1, s);
  const std::int64_t u = x * u1, v = x * v1;
  const std::int64_t a3 = (f.a / e) * (g.a / e);
  // B = (u a1 b2 + v a2 b1 + w (b1 b2 + D) / 2) / e  (mod 2 A)
  const __int128 num = static_cast<__int128>(u) * f.a * g.b + static_cast<__int128>(v) * g.a * f.b +
                       static_cast<__int128>(w) * ((static_cast<__int128>(f.b) * g.b + d) / 2);
  __int128 b3 = (num / e) % (2 * static_cast<__int128>(a3));
  if (b3 < 0) b3 += 2 * static_cast<__int128>(a3);
  const auto b = static_cast<std::int64_t>(b3);
  return reduce({a3, b, (b * b - d) / (4 * a3)});
}

QuadForm power(const QuadForm& f, std::int64_t e) {
  if (e < 0) return power(f.inverse(), -e);
  QuadForm result = principal_form(f.discriminant());
  QuadForm base = reduce(f);
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

std::uint64_t form_order(const QuadForm& f, std::uint64_t h) {
  const QuadForm one = principal_form(f.discriminant());
  std::uint64_t order = h;
  // Strip prime factors of h while the power stays principal.
  std::uint64_t rest = h;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    while (order % p == 0 && power(f, static_cast<std::int64_t>(order / p)) == one) order /= p;
  }
  return order;
}

ClassGroupStructure group_structure(std::int64_t d) {
  const auto forms = reduced_forms(d);
  ClassGroupStructure out;
  out.d = d;
  out.h = forms.size();
  std::vector<std::pair<std::uint64_t, QuadForm>> by_order;
  for (const auto& f : forms) by_order.emplace_back(form_order(f, out.h), f);
  std::stable_sort(by_order.begin(), by_order.end(), [](const auto& x, const auto& y) { return x.first > y.first; });

  // Elements of the subgroup generated so far, with exponent vectors.
  std::map<QuadForm, std::vector<std::int64_t>> table{{principal_form(d), {}}};
  IntMatrix relations;
  for (const auto& [order, g] : by_order) {
    if (table.size() == out.h) break;
    if (table.count(g)) continue;
    const std::size_t i = out.generators.size();
    out.generators.push_back(g);
    for (auto& [form, exps] : table) exps.push_back(0);
    std::int64_t m = 1;
    QuadForm gm = g;
    while (!table.count(gm)) {
      gm = compose(gm, g);
      ++m;
    }
    std::vector<BigInt> row(i + 1, 0);
    const auto& lower = table.at(gm);
    for (std::size_t j = 0; j < i; ++j) row[j] = -lower[j];
    row[i] = m;
    relations.push_back(std::move(row));
    std::map<QuadForm, std::vector<std::int64_t>> grown;
    for (const auto& [form, exps] : table) {
      QuadForm x = form;
      for (std::int64_t k = 0; k < m; ++k) {
        auto e = exps;
        e[i] = k;
        grown.emplace(x, std::move(e));
        x = compose(x, g);
      }
    }
    table = std::move(grown);
  }
  for (auto& row : relations) row.resize(out.generators.size(), 0);
  out.invariants = AbelianInvariants::from_relations(relations, out.generators.size());
  return out;
}

AbelianInvariants sylow3(const ClassGroupStructure& s) { return s.invariants.sylow(3); }

int three_rank_by_cubes(std::int64_t d) {
  const QuadForm one = principal_form(d);
  std::uint64_t count = 0;
  for (const auto& f : reduced_forms(d)) {
    if (compose(compose(f, f), f) == one) ++count;
  }
  int r = 0;
  while (count > 1) {
    if (count % 3 != 0) throw std::logic_error("number of 3-torsion classes is not a power of 3");
    count /= 3;
    ++r;
  }
  return r;
}

std::vector<ScanRecord> scan(std::int64_t min_d, std::int64_t max_d, const std::function<bool(const ScanRecord&)>& keep,
                             unsigned threads) {
  if (min_d < -kMaxAbsDiscriminant) throw ResourceLimitError("scan range exceeds |d| cap");
  max_d = std::min<std::int64_t>(max_d, -1);
  std::vector<std::int64_t> ds;
  for (std::int64_t d = min_d; d <= max_d; ++d) {
    if (is_fundamental_discriminant(d)) ds.push_back(d);
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(ds.size(), 1)));
  std::vector<std::vector<ScanRecord>> parts(threads);
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < ds.size(); i += threads) {
      const auto s = group_structure(ds[i]);
      ScanRecord r{s.d, s.h, s.invariants, sylow3(s)};
      if (keep(r)) parts[t].push_back(std::move(r));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::vector<ScanRecord> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const ScanRecord& x, const ScanRecord& y) { return x.d < y.d; });
  return out;
}

const std::vector<std::int64_t>& g1_tower_discriminants() {
  static const std::vector<std::int64_t> kList{-4027,  -8751,  -19651, -21224, -22711, -24904, -26139, -28031,
                                               -28759, -34088, -36807, -40299, -40692, -41015, -42423, -43192,
                                               -44004, -45835, -46587, -48052, -49128, -49812};
  return kList;
}

const std::vector<std::int64_t>& gn_candidate_discriminants() {
  static const std::vector<std::int64_t> kList{-3896,  -6583,  -23428, -25447, -27355, -27991, -36276,
                                               -37219, -37540, -39819, -41063, -43827, -46551};
  return kList;
}

}  // namespace sigma3
