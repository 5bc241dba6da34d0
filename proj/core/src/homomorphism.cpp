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

#include "sigma3/homomorphism.hpp"

#include <functional>
#include <stdexcept>

#include "sigma3/errors.hpp"
#include "sigma3/f3_linear.hpp"
#include "sigma3/pquotient.hpp"
#include "sigma3/subgroup.hpp"

namespace sigma3 {

namespace {

PcElement evaluate(const PcGroup& codomain, const std::vector<PcElement>& images, const NormalWord& w) {
  PcElement x = codomain.identity();
  for (const auto& l : w) x = codomain.multiply(x, codomain.power(images[static_cast<std::size_t>(l.gen)], l.exp));
  return x;
}

}  // namespace

std::vector<PcElement> extend_defining_images(const PcGroup& domain, const PcGroup& codomain,
                                              const std::vector<PcElement>& defining_images) {
  if (!domain.has_definitions() && domain.num_gens() > 0) throw std::invalid_argument("domain carries no definitions");
  std::vector<PcElement> img;
  std::size_t next = 0;
  for (int i = 0; i < domain.num_gens(); ++i) {
    const Definition& d = domain.definition(i);
    switch (d.kind) {
      case Definition::Kind::kImage:
        if (next >= defining_images.size()) throw std::invalid_argument("too few defining images");
        img.push_back(defining_images[next++]);
        break;
      case Definition::Kind::kPower:
        img.push_back(codomain.power(img[static_cast<std::size_t>(d.first)], kPrime));
        break;
      case Definition::Kind::kCommutator:
        img.push_back(codomain.commutator(img[static_cast<std::size_t>(d.first)], img[static_cast<std::size_t>(d.second)]));
        break;
    }
  }
  if (next != defining_images.size()) throw std::invalid_argument("too many defining images");
  return img;
}

std::optional<PcHomomorphism> PcHomomorphism::from_defining_images(const PcGroup& domain, const PcGroup& codomain,
                                                                   const std::vector<PcElement>& defining_images) {
  PcHomomorphism h;
  h.domain_order_log3_ = domain.order_log3();
  h.codomain_ = codomain;
  h.images_ = extend_defining_images(domain, codomain, defining_images);
  const auto& img = h.images_;
  for (int i = 0; i < domain.num_gens(); ++i) {
    const std::size_t iu = static_cast<std::size_t>(i);
    if (codomain.power(img[iu], kPrime) != evaluate(codomain, img, domain.power_rhs(i))) return std::nullopt;
    for (int j = i + 1; j < domain.num_gens(); ++j) {
      if (codomain.commutator(img[static_cast<std::size_t>(j)], img[iu]) != evaluate(codomain, img, domain.commutator_rhs(j, i)))
        return std::nullopt;
    }
  }
  return h;
}

PcElement PcHomomorphism::apply(const PcElement& x) const {
  PcElement y = codomain_.identity();
  for (std::size_t i = 0; i < x.exponents.size(); ++i) {
    if (x.exponents[i] != 0) y = codomain_.multiply(y, codomain_.power(images_[i], x.exponents[i]));
  }
  return y;
}

bool PcHomomorphism::is_surjective() const {
  return subgroup_closure(codomain_, images_).order_log3() == codomain_.order_log3();
}

bool PcHomomorphism::is_bijective() const { return domain_order_log3_ == codomain_.order_log3() && is_surjective(); }

GroupFingerprint fingerprint(const PcGroup& g) {
  GroupFingerprint f;
  f.order_log3 = g.order_log3();
  f.generator_rank = generator_rank(g);
  f.p_class = p_class(g);
  f.abelian_invariants = abelian_invariants(g).to_string();
  for (const auto& x : g.elements()) {
    std::uint64_t o = g.element_order(x);
    std::size_t k = 0;
    while (o > 1) {
      o /= kPrime;
      ++k;
    }
    if (f.order_counts.size() <= k) f.order_counts.resize(k + 1, 0);
    ++f.order_counts[k];
  }
  return f;
}

std::optional<std::vector<PcElement>> find_isomorphism(const PcGroup& a, const PcGroup& b, int max_order_log3) {
  if (a.order_log3() != b.order_log3()) return std::nullopt;
  if (a.order_log3() > max_order_log3)
    throw ResourceLimitError("isomorphism test limited to order 3^" + std::to_string(max_order_log3));
  if (a.num_gens() == 0) return std::vector<PcElement>{};
  const PcGroup std_a = a.has_definitions() ? a : standardize(a).quotient;
  if (!(fingerprint(std_a) == fingerprint(b))) return std::nullopt;

  const auto defining = std_a.defining_generators();
  const QuotientMap frattini = quotient(b, frattini_subgroup(b));
  const int d = frattini.group.num_gens();
  if (static_cast<int>(defining.size()) != d) return std::nullopt;

  const auto elements = b.elements();
  std::vector<std::vector<PcElement>> candidates(defining.size());
  std::vector<std::vector<F3Vector>> coords(defining.size());
  for (std::size_t t = 0; t < defining.size(); ++t) {
    const std::uint64_t order = std_a.element_order(std_a.generator(defining[t]));
    for (const auto& x : elements) {
      const PcElement v = frattini.project(b, x);
      if (v.is_identity() || b.element_order(x) != order) continue;
      candidates[t].push_back(x);
      coords[t].push_back(v.exponents);
    }
  }

  std::vector<PcElement> chosen;
  std::optional<std::vector<PcElement>> found;
  std::function<void(std::size_t, const EchelonBasis&)> search = [&](std::size_t t, const EchelonBasis& span) {
    if (found) return;
    if (t == defining.size()) {
      auto h = PcHomomorphism::from_defining_images(std_a, b, chosen);
      if (h && h->is_bijective()) found = chosen;
      return;
    }
    for (std::size_t c = 0; c < candidates[t].size() && !found; ++c) {
      EchelonBasis next = span;
      if (!next.add(coords[t][c])) continue;
      chosen.push_back(candidates[t][c]);
      search(t + 1, next);
      chosen.pop_back();
    }
  };
  search(0, EchelonBasis(d));
  return found;
}

bool isomorphic(const PcGroup& a, const PcGroup& b, int max_order_log3) {
  return find_isomorphism(a, b, max_order_log3).has_value();
}

SigmaCheck check_sigma_automorphism(const PcGroup& g) {
  SigmaCheck out;
  const auto defining = g.defining_generators();
  if (defining.size() != 2 || g.definition(defining[0]).first != 0 || g.definition(defining[1]).first != 1)
    throw std::invalid_argument("expected a two-generator quotient with defining generators x and y");
  std::vector<PcElement> images;
  for (int i : defining) images.push_back(g.inverse(g.generator(i)));
  const auto h = PcHomomorphism::from_defining_images(g, g, images);
  if (!h) return out;
  out.relations_hold = true;
  out.bijective = h->is_bijective();
  out.involution = true;
  for (int i = 0; i < g.num_gens(); ++i) {
    if (h->apply(h->apply(g.generator(i))) != g.generator(i)) out.involution = false;
  }
  const Subgroup derived = derived_subgroup(g, Subgroup::whole(g));
  out.inverts_abelianization = true;
  for (int i = 0; i < g.num_gens(); ++i) {
    if (!derived.contains(g, g.multiply(h->apply(g.generator(i)), g.generator(i)))) out.inverts_abelianization = false;
  }
  return out;
}

PcElement evaluate_word(const PcGroup& g, const std::vector<PcElement>& images, const Word& w) {
  PcElement x = g.identity();
  for (const auto& s : w.syllables()) {
    if (s.gen < 0 || static_cast<std::size_t>(s.gen) >= images.size()) throw std::invalid_argument("word uses a generator without image");
    x = g.multiply(x, g.power(images[static_cast<std::size_t>(s.gen)], s.exp));
  }
  return x;
}

bool satisfies_relators(const PcGroup& g, const std::vector<PcElement>& images, const Presentation& p) {
  for (const auto& r : p.relators) {
    if (!evaluate_word(g, images, r).is_identity()) return false;
  }
  return true;
}

}  // namespace sigma3
