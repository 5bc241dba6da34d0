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

#include "sigma3/smith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "sigma3/errors.hpp"

namespace sigma3 {

namespace {

BigInt babs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<BigInt> smith_invariant_factors(IntMatrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  for (auto& r : m) r.resize(cols);
  std::vector<BigInt> diag;

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot: least nonzero absolute value in the trailing block.
      std::size_t pr = rows, pc = cols;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || babs(m[i][j]) < best)) {
            best = babs(m[i][j]);
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      std::swap(m[t], m[pr]);
      for (auto& r : m) std::swap(r[t], r[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = floor_div(m[i][t], m[t][t]);
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = floor_div(m[t][j], m[t][t]);
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (m[t][t] == 0) break;
    diag.push_back(babs(m[t][t]));
  }
  while (diag.size() < cols) diag.push_back(0);
  return diag;
}

AbelianInvariants AbelianInvariants::from_cyclic_orders(const std::vector<BigInt>& orders) {
  AbelianInvariants a;
  int infinite = 0;
  for (BigInt n : orders) {
    if (n < 0) n = -n;
    if (n == 0) {
      ++infinite;
      continue;
    }
    for (BigInt p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      BigInt q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      a.orders_.push_back(q.convert_to<std::uint64_t>());
    }
    if (n > 1) a.orders_.push_back(n.convert_to<std::uint64_t>());
  }
  std::sort(a.orders_.begin(), a.orders_.end());
  a.orders_.insert(a.orders_.end(), static_cast<std::size_t>(infinite), 0);
  return a;
}

AbelianInvariants AbelianInvariants::from_relations(const IntMatrix& relations, std::size_t generators) {
  return from_cyclic_orders(smith_invariant_factors(relations, generators));
}

AbelianInvariants AbelianInvariants::parse(std::string_view text) {
  std::vector<BigInt> orders;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    orders.emplace_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    } else if (c == ',' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      throw ParseError("bad abelian invariants '" + std::string(text) + "'");
    }
  }
  flush();
  return from_cyclic_orders(orders);
}

bool AbelianInvariants::is_finite() const {
  return std::find(orders_.begin(), orders_.end(), 0u) == orders_.end();
}

BigInt AbelianInvariants::order() const {
  BigInt n = 1;
  for (std::uint64_t q : orders_) {
    if (q == 0) return 0;
    n *= q;
  }
  return n;
}

namespace {

bool is_power_of(std::uint64_t q, std::uint64_t p) {
  if (q < p) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::vector<std::uint64_t> primes_of(const std::vector<std::uint64_t>& orders) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t q : orders) {
    if (q == 0) continue;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
  }
  return ps;
}

}  // namespace

int AbelianInvariants::rank(std::uint64_t p) const {
  return static_cast<int>(std::count_if(orders_.begin(), orders_.end(), [p](std::uint64_t q) { return is_power_of(q, p); }));
}

AbelianInvariants AbelianInvariants::sylow(std::uint64_t p) const {
  AbelianInvariants a;
  for (std::uint64_t q : orders_)
    if (is_power_of(q, p)) a.orders_.push_back(q);
  return a;
}

bool AbelianInvariants::is_quotient_of(const AbelianInvariants& target) const {
  auto count_inf = [](const std::vector<std::uint64_t>& v) { return std::count(v.begin(), v.end(), 0u); };
  const auto inf_self = count_inf(orders_);
  const auto inf_target = count_inf(target.orders_);
  if (inf_self > inf_target) return false;
  // A free summand of the target can absorb any cyclic factor, so only the
  // finite factors in excess of the target's free rank need to be matched.
  auto ps = primes_of(orders_);
  for (std::uint64_t p : ps) {
    std::vector<std::uint64_t> mine = sylow(p).orders_, theirs = target.sylow(p).orders_;
    std::sort(mine.rbegin(), mine.rend());
    std::sort(theirs.rbegin(), theirs.rend());
    std::size_t slack = static_cast<std::size_t>(inf_target - inf_self);
    if (mine.size() > theirs.size() + slack) return false;
    for (std::size_t i = slack; i < mine.size(); ++i)
      if (mine[i] > theirs[i - slack]) return false;
  }
  return true;
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) os << ',';
    os << orders_[i];
  }
  os << ']';
  return os.str();
}

}  // namespace sigma3
