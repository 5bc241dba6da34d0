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

#include "sigma3/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "sigma3/f3_linear.hpp"

namespace sigma3 {

Subgroup::Subgroup(int num_gens) : table_(static_cast<std::size_t>(num_gens)) {}

Subgroup Subgroup::whole(const PcGroup& g) {
  Subgroup s(g.num_gens());
  for (int i = 0; i < g.num_gens(); ++i) s.table_[static_cast<std::size_t>(i)] = g.generator(i);
  return s;
}

int Subgroup::order_log3() const {
  return static_cast<int>(std::count_if(table_.begin(), table_.end(), [](const auto& e) { return e.has_value(); }));
}

std::vector<PcElement> Subgroup::igs() const {
  std::vector<PcElement> out;
  for (const auto& e : table_) {
    if (e) out.push_back(*e);
  }
  return out;
}

std::vector<int> Subgroup::depths() const {
  std::vector<int> out;
  for (int d = 0; d < num_gens(); ++d) {
    if (table_[static_cast<std::size_t>(d)]) out.push_back(d);
  }
  return out;
}

PcElement Subgroup::sift(const PcGroup& g, PcElement x) const {
  if (g.num_gens() != num_gens() || static_cast<int>(x.exponents.size()) != num_gens()) {
    throw std::invalid_argument("subgroup, group and element have different generator counts");
  }
  for (;;) {
    const int d = x.depth();
    if (d >= num_gens()) return x;
    const auto& t = table_[static_cast<std::size_t>(d)];
    if (!t) return x;
    const int e = x.leading_exponent();
    x = g.multiply(x, g.power(*t, 3 - e));
  }
}

bool Subgroup::contains(const PcGroup& g, const PcElement& x) const { return sift(g, x).is_identity(); }

bool Subgroup::contains(const PcGroup& g, const Subgroup& other) const {
  for (const auto& e : other.table_) {
    if (e && !contains(g, *e)) return false;
  }
  return true;
}

bool Subgroup::same_as(const PcGroup& g, const Subgroup& other) const {
  return order_log3() == other.order_log3() && contains(g, other);
}

int Subgroup::insert(const PcGroup& g, const PcElement& x) {
  PcElement r = sift(g, x);
  if (r.is_identity()) return -1;
  if (r.leading_exponent() == 2) r = g.power(r, 2);
  const int d = r.depth();
  table_[static_cast<std::size_t>(d)] = std::move(r);
  return d;
}

Subgroup closure_under(const PcGroup& g, const std::vector<PcElement>& gens, const std::vector<PcElement>& conj_by) {
  Subgroup s(g.num_gens());
  std::deque<int> queue;
  auto add = [&](const PcElement& x) {
    const int d = s.insert(g, x);
    if (d >= 0) queue.push_back(d);
  };
  for (const auto& x : gens) add(x);
  while (!queue.empty()) {
    const int d = queue.front();
    queue.pop_front();
    const PcElement t = *s.at_depth(d);
    add(g.power(t, 3));
    for (const auto& u : s.igs()) {
      if (u != t) add(g.commutator(t, u));
    }
    for (const auto& c : conj_by) add(g.commutator(t, c));
  }
  return s;
}

Subgroup subgroup_closure(const PcGroup& g, const std::vector<PcElement>& gens) { return closure_under(g, gens, {}); }

namespace {

std::vector<PcElement> all_generators(const PcGroup& g) {
  std::vector<PcElement> out;
  for (int i = 0; i < g.num_gens(); ++i) out.push_back(g.generator(i));
  return out;
}

}  // namespace

Subgroup normal_closure(const PcGroup& g, const std::vector<PcElement>& gens) {
  return closure_under(g, gens, all_generators(g));
}

bool is_normal(const PcGroup& g, const Subgroup& s) {
  for (const auto& t : s.igs()) {
    for (int i = 0; i < g.num_gens(); ++i) {
      if (!s.contains(g, g.conjugate(t, g.generator(i)))) return false;
    }
  }
  return true;
}

bool is_central(const PcGroup& g, const Subgroup& s) {
  for (const auto& t : s.igs()) {
    for (int i = 0; i < g.num_gens(); ++i) {
      if (!g.commutator(t, g.generator(i)).is_identity()) return false;
    }
  }
  return true;
}

Subgroup derived_subgroup(const PcGroup& g, const Subgroup& s) {
  const auto gens = s.igs();
  std::vector<PcElement> comms;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) comms.push_back(g.commutator(gens[b], gens[a]));
  }
  return closure_under(g, comms, gens);
}

std::vector<Subgroup> derived_series(const PcGroup& g) {
  std::vector<Subgroup> out{Subgroup::whole(g)};
  while (!out.back().is_trivial()) {
    Subgroup next = derived_subgroup(g, out.back());
    if (next.order_log3() == out.back().order_log3()) throw std::logic_error("derived series of a 3-group did not descend");
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Subgroup> lower_central_series(const PcGroup& g) {
  const auto gens = all_generators(g);
  std::vector<Subgroup> out{Subgroup::whole(g)};
  while (!out.back().is_trivial()) {
    std::vector<PcElement> comms;
    for (const auto& u : out.back().igs()) {
      for (const auto& a : gens) comms.push_back(g.commutator(u, a));
    }
    Subgroup next = closure_under(g, comms, gens);
    if (next.order_log3() == out.back().order_log3()) throw std::logic_error("lower central series did not descend");
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Subgroup> lower_p_central_series(const PcGroup& g) {
  const auto gens = all_generators(g);
  std::vector<Subgroup> out{Subgroup::whole(g)};
  while (!out.back().is_trivial()) {
    std::vector<PcElement> next_gens;
    for (const auto& u : out.back().igs()) {
      next_gens.push_back(g.power(u, 3));
      for (const auto& a : gens) next_gens.push_back(g.commutator(u, a));
    }
    Subgroup next = closure_under(g, next_gens, gens);
    if (next.order_log3() == out.back().order_log3()) throw std::logic_error("lower 3-central series did not descend");
    out.push_back(std::move(next));
  }
  return out;
}

int derived_length(const PcGroup& g) { return static_cast<int>(derived_series(g).size()) - 1; }
int nilpotency_class(const PcGroup& g) { return static_cast<int>(lower_central_series(g).size()) - 1; }
int p_class(const PcGroup& g) { return static_cast<int>(lower_p_central_series(g).size()) - 1; }

Subgroup frattini_subgroup(const PcGroup& g) {
  const auto series = lower_p_central_series(g);
  return series.size() > 1 ? series[1] : series[0];
}

int generator_rank(const PcGroup& g) { return g.num_gens() - frattini_subgroup(g).order_log3(); }

AbelianInvariants abelian_invariants(const PcGroup& g, const Subgroup& s) {
  const Subgroup d = derived_subgroup(g, s);
  std::vector<int> factor;
  std::vector<int> index_of(static_cast<std::size_t>(g.num_gens()), -1);
  for (int depth : s.depths()) {
    if (!d.at_depth(depth)) {
      index_of[static_cast<std::size_t>(depth)] = static_cast<int>(factor.size());
      factor.push_back(depth);
    }
  }
  const std::size_t r = factor.size();
  // Integer coordinates of x in S/[S,S] with respect to the factor sequence.
  auto coords = [&](PcElement x) {
    std::vector<BigInt> c(r, 0);
    while (!x.is_identity()) {
      const int dep = x.depth();
      const int e = x.leading_exponent();
      const std::size_t du = static_cast<std::size_t>(dep);
      if (d.at_depth(dep)) {
        x = g.multiply(x, g.power(*d.at_depth(dep), 3 - e));
      } else if (index_of[du] >= 0) {
        c[static_cast<std::size_t>(index_of[du])] += e - 3;
        x = g.multiply(x, g.power(*s.at_depth(dep), 3 - e));
      } else {
        throw std::logic_error("element outside the subgroup");
      }
    }
    return c;
  };
  IntMatrix rel;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<BigInt> row = coords(g.power(*s.at_depth(factor[i]), 3));
    for (auto& v : row) v = -v;
    row[i] += 3;
    rel.push_back(std::move(row));
  }
  return AbelianInvariants::from_relations(rel, r);
}

AbelianInvariants abelian_invariants(const PcGroup& g) { return abelian_invariants(g, Subgroup::whole(g)); }

std::vector<Subgroup> maximal_subgroups(const PcGroup& g) {
  const Subgroup phi = frattini_subgroup(g);
  std::vector<int> factor;
  for (int i = 0; i < g.num_gens(); ++i) {
    if (!phi.at_depth(i)) factor.push_back(i);
  }
  const int d = static_cast<int>(factor.size());
  std::vector<Subgroup> out;
  if (d == 0) return out;
  for (const auto& hyper : enumerate_subspaces(d, d - 1)) {
    std::vector<PcElement> gens = phi.igs();
    for (const auto& v : hyper) {
      NormalWord w;
      for (int k = 0; k < d; ++k) {
        if (v[static_cast<std::size_t>(k)] != 0) w.push_back({factor[static_cast<std::size_t>(k)], v[static_cast<std::size_t>(k)]});
      }
      gens.push_back(g.element(w));
    }
    out.push_back(subgroup_closure(g, gens));
  }
  return out;
}

std::vector<AbelianInvariants> maximal_subgroup_invariants(const PcGroup& g) {
  std::vector<AbelianInvariants> out;
  for (const auto& m : maximal_subgroups(g)) out.push_back(abelian_invariants(g, m));
  std::sort(out.begin(), out.end());
  return out;
}

PcElement QuotientMap::project(const PcGroup& g, PcElement x) const {
  PcElement out = group.identity();
  std::size_t k = 0;
  for (;;) {
    const int d = x.depth();
    if (d >= g.num_gens()) break;
    const int e = x.leading_exponent();
    if (kernel.at_depth(d)) {
      x = g.multiply(kernel_inverse_powers[static_cast<std::size_t>(d)][static_cast<std::size_t>(e)], x);
      continue;
    }
    while (factor_depths[k] != d) ++k;
    out.exponents[k] = static_cast<std::uint8_t>(e);
    x.exponents[static_cast<std::size_t>(d)] = 0;
  }
  return out;
}

QuotientMap quotient(const PcGroup& g, const Subgroup& normal) {
  QuotientMap q;
  q.kernel = normal;
  q.kernel_inverse_powers.resize(static_cast<std::size_t>(g.num_gens()));
  for (int d = 0; d < g.num_gens(); ++d) {
    if (const auto& t = normal.at_depth(d)) {
      const PcElement inv = g.inverse(*t);
      q.kernel_inverse_powers[static_cast<std::size_t>(d)] = {g.identity(), inv, g.multiply(inv, inv)};
    } else {
      q.factor_depths.push_back(d);
    }
  }
  const int m = static_cast<int>(q.factor_depths.size());
  PcRelations rel(m);
  // A placeholder group of the right size so project() can build results.
  q.group = PcGroup(PcRelations(m));
  auto to_word = [&](const PcElement& x) { return q.project(g, x).to_word(); };
  for (int i = 0; i < m; ++i) {
    const PcElement ai = g.generator(q.factor_depths[static_cast<std::size_t>(i)]);
    rel.power(i) = to_word(g.power(ai, 3));
    for (int j = i + 1; j < m; ++j) {
      const PcElement aj = g.generator(q.factor_depths[static_cast<std::size_t>(j)]);
      rel.commutator(j, i) = to_word(g.commutator(aj, ai));
    }
  }
  q.group = PcGroup(std::move(rel));
  return q;
}

}  // namespace sigma3
