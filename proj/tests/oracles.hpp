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


// Brute-force reference computations over explicit element sets. They only
// use multiplication and inversion, never the subgroup machinery.

#ifndef SIGMA3_TESTS_ORACLES_HPP
#define SIGMA3_TESTS_ORACLES_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "sigma3/pcgroup.hpp"
#include "sigma3/smith.hpp"

namespace sigma3::oracle {

inline std::set<PcElement> generated(const PcGroup& g, const std::vector<PcElement>& gens) {
  std::set<PcElement> seen{g.identity()};
  std::vector<PcElement> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<PcElement> next;
    for (const auto& a : frontier) {
      for (const auto& s : gens) {
        PcElement b = g.multiply(a, s);
        if (seen.insert(b).second) next.push_back(std::move(b));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline std::uint64_t order(const PcGroup& g, const PcElement& x) {
  std::uint64_t k = 1;
  for (PcElement y = x; !y.is_identity(); y = g.multiply(y, x)) ++k;
  return k;
}

// Abelian invariants of S/[S,S] from the sizes of its 3^k-torsion, where S is
// the element set of <gens>. [S,S] is generated by the [a, s] with a in S and
// s in gens: that subgroup is normal since [a,s]^b = [ab,s][b,s]^-1.
inline AbelianInvariants abelianization(const PcGroup& g, const std::set<PcElement>& s,
                                        const std::vector<PcElement>& gens) {
  std::set<PcElement> comm_set;
  const std::vector<PcElement> elems(s.begin(), s.end());
  for (const auto& a : elems) {
    for (const auto& b : gens) comm_set.insert(g.commutator(a, b));
  }
  const std::set<PcElement> derived = generated(g, std::vector<PcElement>(comm_set.begin(), comm_set.end()));
  const std::uint64_t quotient = s.size() / derived.size();
  std::vector<std::uint64_t> torsion{1};  // |A[3^k]| for k = 0, 1, ...
  while (torsion.back() < quotient) {
    std::int64_t q = 1;
    for (std::size_t k = 0; k < torsion.size(); ++k) q *= 3;
    std::uint64_t count = 0;
    for (const auto& x : elems) {
      PcElement y = g.identity();
      for (std::int64_t i = 0; i < q; ++i) y = g.multiply(y, x);
      if (derived.count(y)) ++count;
    }
    torsion.push_back(count / derived.size());
  }
  // The number of cyclic factors of order >= 3^k is log_3(|A[3^k]| / |A[3^(k-1)]|).
  std::vector<int> at_least;
  for (std::size_t k = 1; k < torsion.size(); ++k) {
    int r = 0;
    for (std::uint64_t v = torsion[k] / torsion[k - 1]; v > 1; v /= 3) ++r;
    at_least.push_back(r);
  }
  std::vector<BigInt> orders;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const int exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    BigInt q = 1;
    for (std::size_t i = 0; i <= k; ++i) q *= 3;
    for (int i = 0; i < exactly; ++i) orders.push_back(q);
  }
  return AbelianInvariants::from_cyclic_orders(orders);
}

}  // namespace sigma3::oracle

#endif  // SIGMA3_TESTS_ORACLES_HPP
