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

#include "sigma3/pgen.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sigma3/errors.hpp"
#include "sigma3/homomorphism.hpp"
#include "sigma3/pquotient.hpp"
#include "sigma3/subgroup.hpp"

namespace sigma3 {

namespace {

PcGroup standardized(const PcGroup& g) {
  if (g.num_gens() == 0 || (g.has_weights() && g.has_definitions())) return g;
  return standardize(g).quotient;
}

PcElement lift(const PcElement& x, int total) {
  PcElement y = x;
  y.exponents.resize(static_cast<std::size_t>(total), 0);
  return y;
}

F3Vector tail_vector(const PcElement& x, int base, int tails) {
  for (int i = 0; i < base; ++i) {
    if (x.exponents[static_cast<std::size_t>(i)] != 0) throw std::logic_error("lifted automorphism left the multiplicator");
  }
  return F3Vector(x.exponents.begin() + base, x.exponents.begin() + base + tails);
}

PcElement evaluate(const PcGroup& g, const std::vector<PcElement>& images, const NormalWord& w) {
  PcElement x = g.identity();
  for (const auto& l : w) x = g.multiply(x, g.power(images[static_cast<std::size_t>(l.gen)], l.exp));
  return x;
}

F3Matrix nucleus_vectors(const PCover& cov) {
  F3Matrix rows;
  for (const auto& e : cov.nucleus.igs()) rows.push_back(tail_vector(e, cov.data.base, cov.data.tails));
  return canonical_subspace(rows, cov.data.tails);
}

bool supplements(const F3Matrix& u, const F3Matrix& nucleus, int dim) {
  EchelonBasis b(dim);
  for (const auto& r : u) b.add(r);
  for (const auto& r : nucleus) b.add(r);
  return b.rank() == dim;
}

}  // namespace

std::vector<std::vector<PcElement>> automorphism_group(const PcGroup& g, int max_order_log3) {
  if (g.num_gens() > max_order_log3)
    throw ResourceLimitError("automorphism group enumeration limited to order 3^" + std::to_string(max_order_log3));
  if (g.num_gens() == 0) return {{}};
  if (!g.has_definitions()) throw std::invalid_argument("automorphism_group needs a group with definitions");
  const auto defining = g.defining_generators();
  const QuotientMap frattini = quotient(g, frattini_subgroup(g));
  const int d = frattini.group.num_gens();
  const auto elements = g.elements();

  std::vector<std::vector<PcElement>> candidates(defining.size());
  std::vector<std::vector<F3Vector>> coords(defining.size());
  for (std::size_t t = 0; t < defining.size(); ++t) {
    const std::uint64_t order = g.element_order(g.generator(defining[t]));
    for (const auto& x : elements) {
      const PcElement v = frattini.project(g, x);
      if (v.is_identity() || g.element_order(x) != order) continue;
      candidates[t].push_back(x);
      coords[t].push_back(v.exponents);
    }
  }

  std::vector<std::vector<PcElement>> out;
  std::vector<PcElement> chosen;
  std::function<void(std::size_t, const EchelonBasis&)> search = [&](std::size_t t, const EchelonBasis& span) {
    if (t == defining.size()) {
      const auto h = PcHomomorphism::from_defining_images(g, g, chosen);
      if (h && h->is_bijective()) out.push_back(chosen);
      return;
    }
    for (std::size_t c = 0; c < candidates[t].size(); ++c) {
      EchelonBasis next = span;
      if (!next.add(coords[t][c])) continue;
      chosen.push_back(candidates[t][c]);
      search(t + 1, next);
      chosen.pop_back();
    }
  };
  search(0, EchelonBasis(d));
  return out;
}

std::vector<F3Matrix> multiplicator_action(const PcGroup& g, const std::vector<std::vector<PcElement>>& automorphisms) {
  const TailedCover data = tailed_cover(g);
  const PcGroup& cov = data.cover;
  const int n = data.base, m = data.tails;

  // A relation whose tail is exactly the t-th basis vector.
  std::vector<int> slot_for(static_cast<std::size_t>(m), -1);
  for (std::size_t s = 0; s < data.slots.size(); ++s) {
    const F3Vector& v = data.slot_values[s];
    if (std::count_if(v.begin(), v.end(), [](std::uint8_t e) { return e != 0; }) != 1) continue;
    const auto t = static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](std::uint8_t e) { return e != 0; }) - v.begin());
    if (v[t] == 1 && slot_for[t] < 0) slot_for[t] = static_cast<int>(s);
  }
  if (std::find(slot_for.begin(), slot_for.end(), -1) != slot_for.end()) throw std::logic_error("tail basis is not realized by relations");

  std::vector<F3Matrix> out;
  for (const auto& aut : automorphisms) {
    std::vector<PcElement> defining_images;
    for (const auto& x : aut) defining_images.push_back(lift(x, n + m));
    const auto img = extend_defining_images(g, cov, defining_images);
    F3Matrix a;
    for (int t = 0; t < m; ++t) {
      const TailSlot& slot = data.slots[static_cast<std::size_t>(slot_for[static_cast<std::size_t>(t)])];
      PcElement lhs, rhs;
      if (slot.lhs.kind == Definition::Kind::kPower) {
        lhs = cov.power(img[static_cast<std::size_t>(slot.lhs.first)], kPrime);
        rhs = evaluate(cov, img, g.power_rhs(slot.lhs.first));
      } else {
        lhs = cov.commutator(img[static_cast<std::size_t>(slot.lhs.first)], img[static_cast<std::size_t>(slot.lhs.second)]);
        rhs = evaluate(cov, img, g.commutator_rhs(slot.lhs.first, slot.lhs.second));
      }
      a.push_back(tail_vector(cov.multiply(cov.inverse(rhs), lhs), n, m));
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<PcGroup> immediate_descendants(const PcGroup& g, int max_order_log3) {
  const PcGroup std_g = standardized(g);
  const PCover cov = p_cover(std_g);
  const int m = cov.data.tails;
  const F3Matrix nucleus = nucleus_vectors(cov);
  const int nd = static_cast<int>(nucleus.size());
  std::vector<PcGroup> out;
  if (nd == 0) return out;
  const auto mats = multiplicator_action(std_g, automorphism_group(std_g, max_order_log3));
  for (int step = 1; step <= nd; ++step) {
    std::set<F3Matrix> seen;
    for (const auto& u : enumerate_subspaces(m, m - step)) {
      if (seen.count(u) || !supplements(u, nucleus, m)) continue;
      for (const auto& a : mats) seen.insert(canonical_subspace(mul_mat(u, a, m), m));
      seen.insert(u);
      out.push_back(quotient_by_tail_subspace(cov.data, u, cov.p_class + 1).group);
    }
  }
  return out;
}

std::vector<PcGroup> all_allowable_quotients(const PcGroup& g) {
  const PcGroup std_g = standardized(g);
  const PCover cov = p_cover(std_g);
  const int m = cov.data.tails;
  const F3Matrix nucleus = nucleus_vectors(cov);
  const int nd = static_cast<int>(nucleus.size());
  std::vector<PcGroup> out;
  for (int step = 1; step <= nd; ++step) {
    for (const auto& u : enumerate_subspaces(m, m - step)) {
      if (supplements(u, nucleus, m)) out.push_back(quotient_by_tail_subspace(cov.data, u, cov.p_class + 1).group);
    }
  }
  return out;
}

AQIConstraint AQIConstraint::parse(std::string_view text) {
  AQIConstraint c;
  bool have_whole = false, have_max = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto colon = line.find(':');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (colon == std::string::npos) throw ParseError("expected `whole:` or `max:` in constraint line: " + line);
    std::string key = line.substr(0, colon);
    key.erase(std::remove_if(key.begin(), key.end(), [](unsigned char ch) { return std::isspace(ch); }), key.end());
    const std::string value = line.substr(colon + 1);
    if (key == "whole") {
      c.whole = AbelianInvariants::parse(value);
      have_whole = true;
    } else if (key == "max") {
      std::istringstream parts(value);
      std::string part;
      while (std::getline(parts, part, '|')) c.maximal.push_back(AbelianInvariants::parse(part));
      have_max = true;
    } else {
      throw ParseError("unknown constraint key: " + key);
    }
  }
  if (!have_whole || !have_max) throw ParseError("constraint needs both `whole:` and `max:` lines");
  // A 3-group with abelianization of 3-rank d has (3^d - 1) / 2 maximal subgroups.
  const int d = c.whole.rank(3);
  std::size_t expected = 0;
  for (int i = 0, p = 1; i < d; ++i, p *= 3) expected += static_cast<std::size_t>(p);
  if (c.maximal.size() != expected)
    throw ParseError("whole-group invariants imply " + std::to_string(expected) + " maximal subgroups, got " +
                     std::to_string(c.maximal.size()));
  std::sort(c.maximal.begin(), c.maximal.end());
  return c;
}

std::string AQIConstraint::to_string() const {
  std::string s = "whole: " + whole.to_string() + "\nmax:";
  for (std::size_t i = 0; i < maximal.size(); ++i) s += (i ? " | " : " ") + maximal[i].to_string();
  return s + "\n";
}

AQIFingerprint aqi_fingerprint(const PcGroup& g) { return {abelian_invariants(g), maximal_subgroup_invariants(g)}; }

bool may_refine_to(const AQIFingerprint& f, const AQIConstraint& c) {
  if (!f.whole.is_quotient_of(c.whole) || f.maximal.size() != c.maximal.size()) return false;
  std::vector<std::size_t> perm(c.maximal.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) ok = f.maximal[i].is_quotient_of(c.maximal[perm[i]]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool matches_exactly(const AQIFingerprint& f, const AQIConstraint& c) {
  auto a = f.maximal, b = c.maximal;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return f.whole == c.whole && a == b;
}

SearchResult constrained_search(const PcGroup& root, const AQIConstraint& constraint, const SearchOptions& options) {
  SearchResult res;
  DescendantNode node;
  node.group = standardized(root);
  node.p_class = p_class(node.group);
  node.fingerprint = aqi_fingerprint(node.group);
  res.tree.push_back(node);
  if (!may_refine_to(node.fingerprint, constraint)) {
    res.pruned = 1;
    return res;
  }
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int idx = queue.front();
    queue.pop_front();
    if (res.tree[static_cast<std::size_t>(idx)].p_class >= options.max_p_class)
      throw ResourceLimitError("descendant search passed p-class " + std::to_string(options.max_p_class));
    const PcGroup parent = res.tree[static_cast<std::size_t>(idx)].group;
    const int child_class = res.tree[static_cast<std::size_t>(idx)].p_class + 1;
    bool any_alive = false;
    for (auto& child : immediate_descendants(parent, options.max_order_log3)) {
      DescendantNode c;
      c.fingerprint = aqi_fingerprint(child);
      c.group = std::move(child);
      c.parent = idx;
      c.p_class = child_class;
      const bool alive = may_refine_to(c.fingerprint, constraint);
      res.tree.push_back(std::move(c));
      if (alive) {
        any_alive = true;
        queue.push_back(static_cast<int>(res.tree.size()) - 1);
      } else {
        ++res.pruned;
      }
    }
    const DescendantNode& self = res.tree[static_cast<std::size_t>(idx)];
    if (!any_alive && matches_exactly(self.fingerprint, constraint)) res.terminal.push_back(self);
  }
  return res;
}

}  // namespace sigma3
