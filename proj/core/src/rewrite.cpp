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

#include "sigma3/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "sigma3/errors.hpp"
#include "sigma3/homomorphism.hpp"
#include "sigma3/pquotient.hpp"

namespace sigma3 {

namespace {

int mod(std::int64_t a, int k) { return static_cast<int>(((a % k) + k) % k); }

constexpr std::int64_t kMaxRewrittenLength = 1'000'000;

Word canonical_cyclic(const Word& w) {
  const Word core = w.cyclically_reduced();
  if (core.empty()) return core;
  Word best = core;
  for (const Word& base : {core, core.inverse().cyclically_reduced()}) {
    for (const Word& r : base.rotations()) best = std::min(best, r);
  }
  return best;
}

}  // namespace

Transversal xy_index3_transversal() {
  Transversal tv;
  tv.index = 3;
  tv.coset_of_generator = {1, 1};
  tv.representatives = {Word(), Word::letter(0), Word::letter(0, 2)};
  return tv;
}

Rewriting rewrite_index3(const Presentation& p, const Transversal& tv) {
  p.validate();
  const int k = tv.index;
  if (k != 1 && k != 3) throw std::invalid_argument("only index 1 and index 3 transversals are supported");
  if (static_cast<int>(tv.coset_of_generator.size()) != p.generator_count ||
      static_cast<int>(tv.representatives.size()) != k)
    throw std::invalid_argument("transversal does not match the presentation");
  auto coset_of = [&](const Word& w) {
    std::int64_t c = 0;
    for (const auto& s : w.syllables()) c += s.exp * tv.coset_of_generator[static_cast<std::size_t>(s.gen)];
    return mod(c, k);
  };
  for (int c = 0; c < k; ++c) {
    if (coset_of(tv.representatives[static_cast<std::size_t>(c)]) != c)
      throw std::invalid_argument("representative " + std::to_string(c) + " lies in the wrong coset");
  }
  for (const auto& r : p.relators) {
    if (coset_of(r) != 0) throw std::invalid_argument("coset action is not well defined: a relator leaves the subgroup");
  }
  if (k == 1) {
    Rewriting out{p, {}};
    for (int g = 0; g < p.generator_count; ++g) out.generator_words.push_back(Word::letter(g));
    return out;
  }

  // Schreier generators s(c, g) = rep_c g rep_{c + phi(g)}^-1, numbered c-major.
  const int n = p.generator_count;
  std::vector<Word> schreier;
  for (int c = 0; c < k; ++c) {
    for (int g = 0; g < n; ++g) {
      const int next = mod(c + tv.coset_of_generator[static_cast<std::size_t>(g)], k);
      schreier.push_back(tv.representatives[static_cast<std::size_t>(c)] * Word::letter(g) *
                         tv.representatives[static_cast<std::size_t>(next)].inverse());
    }
  }
  auto sid = [&](int c, int g) { return c * n + g; };

  std::vector<Word> relators;
  for (const auto& r : p.relators) {
    if (r.length() * k > kMaxRewrittenLength) throw ResourceLimitError("relator too long to rewrite");
    for (int start = 0; start < k; ++start) {
      std::vector<Syllable> out;
      int c = start;
      for (const auto& s : r.syllables()) {
        const int f = tv.coset_of_generator[static_cast<std::size_t>(s.gen)];
        const std::int64_t steps = s.exp > 0 ? s.exp : -s.exp;
        for (std::int64_t i = 0; i < steps; ++i) {
          if (s.exp > 0) {
            out.push_back({sid(c, s.gen), 1});
            c = mod(c + f, k);
          } else {
            c = mod(c - f, k);
            out.push_back({sid(c, s.gen), -1});
          }
        }
      }
      relators.push_back(free_reduce(out));
    }
  }

  // Drop freely trivial generators, then those killed by a relator of length one.
  std::vector<char> dead(schreier.size(), 0);
  for (std::size_t i = 0; i < schreier.size(); ++i) dead[i] = schreier[i].empty();
  auto strip = [&](const Word& w) {
    std::vector<Syllable> s;
    for (const auto& syl : w.syllables()) {
      if (!dead[static_cast<std::size_t>(syl.gen)]) s.push_back(syl);
    }
    return free_reduce(s);
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& r : relators) {
      r = strip(r).cyclically_reduced();
      if (r.syllables().size() == 1 && (r.syllables()[0].exp == 1 || r.syllables()[0].exp == -1)) {
        dead[static_cast<std::size_t>(r.syllables()[0].gen)] = 1;
        changed = true;
      }
    }
  }

  std::map<int, int> rename;
  Rewriting out;
  for (std::size_t i = 0; i < schreier.size(); ++i) {
    if (dead[i]) continue;
    rename[static_cast<int>(i)] = static_cast<int>(out.generator_words.size());
    out.generator_words.push_back(schreier[i]);
  }
  out.presentation.generator_count = static_cast<int>(out.generator_words.size());
  for (int i = 0; i < out.presentation.generator_count; ++i) out.presentation.names.push_back("z" + std::to_string(i));
  std::set<Word> seen;
  for (const auto& r : relators) {
    std::vector<Syllable> s;
    const Word stripped = strip(r);
    for (const auto& syl : stripped.syllables()) s.push_back({rename.at(syl.gen), syl.exp});
    const Word w = free_reduce(s).cyclically_reduced();
    if (w.empty() || !seen.insert(canonical_cyclic(w)).second) continue;
    out.presentation.relators.push_back(w);
  }
  return out;
}

namespace {

Presentation z_presentation(const std::vector<Word>& relators) {
  Presentation p;
  p.generator_count = 3;
  p.names = {"z0", "z1", "z2"};
  p.relators = relators;
  return p;
}

}  // namespace

Presentation k_presentation() {
  std::vector<Word> rel;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    rel.push_back(Word::letter(i) * Word::letter(j, 2) * Word::letter(i, 2) * Word::letter(j));
  }
  return z_presentation(rel);
}

Presentation k_commutator_presentation() {
  std::vector<Word> rel;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    rel.push_back(commutator(Word::letter(i), Word::letter(j, -1)) * Word::letter(j, 3) * Word::letter(i, 3));
  }
  return z_presentation(rel);
}

namespace {

bool respects_generators(const PQuotientResult& from, const PQuotientResult& to) {
  std::vector<PcElement> defining_images;
  for (int i : from.quotient.defining_generators()) {
    defining_images.push_back(to.epimorphism[static_cast<std::size_t>(from.quotient.definition(i).first)]);
  }
  const auto h = PcHomomorphism::from_defining_images(from.quotient, to.quotient, defining_images);
  if (!h) return false;
  for (std::size_t k = 0; k < from.epimorphism.size(); ++k) {
    if (h->apply(from.epimorphism[k]) != to.epimorphism[k]) return false;
  }
  return h->is_surjective();
}

}  // namespace

bool same_normal_closure(const Presentation& a, const Presentation& b, int class_bound, int order_cap_log3) {
  if (a.generator_count != b.generator_count) throw std::invalid_argument("presentations have different generator counts");
  PQuotientOptions opts;
  opts.order_cap_log3 = order_cap_log3;
  const PQuotientResult qa = p_quotient(a, class_bound, opts);
  const PQuotientResult qb = p_quotient(b, class_bound, opts);
  if (qa.quotient.order_log3() != qb.quotient.order_log3()) return false;
  return respects_generators(qa, qb) && respects_generators(qb, qa);
}

}  // namespace sigma3
