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

#include "sigma3/pquotient.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sigma3/errors.hpp"

namespace sigma3 {

namespace {

std::uint8_t mod3(std::int64_t v) { return static_cast<std::uint8_t>(((v % 3) + 3) % 3); }

int max_weight(const PcGroup& g) {
  int c = 0;
  for (int i = 0; i < g.num_gens(); ++i) c = std::max(c, g.weight(i));
  return c;
}

NormalWord with_tail(NormalWord w, const F3Vector& tail, int offset) {
  for (std::size_t t = 0; t < tail.size(); ++t) {
    if (tail[t] != 0) w.push_back({offset + static_cast<int>(t), tail[t]});
  }
  return w;
}

F3Vector tail_part(const PcElement& x, int base, int tails) {
  F3Vector v(static_cast<std::size_t>(tails));
  for (int t = 0; t < tails; ++t) v[static_cast<std::size_t>(t)] = x.exponents[static_cast<std::size_t>(base + t)];
  return v;
}

bool base_trivial(const PcElement& x, int base) {
  for (int i = 0; i < base; ++i) {
    if (x.exponents[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

PcElement extend(const PcElement& x, int total) {
  PcElement y = x;
  y.exponents.resize(static_cast<std::size_t>(total), 0);
  return y;
}

const NormalWord& slot_rhs(const PcGroup& g, const TailSlot& s) {
  static const NormalWord kEmpty;
  switch (s.lhs.kind) {
    case Definition::Kind::kPower:
      return g.power_rhs(s.lhs.first);
    case Definition::Kind::kCommutator:
      return g.commutator_rhs(s.lhs.first, s.lhs.second);
    case Definition::Kind::kImage:
      break;
  }
  return kEmpty;
}

// Which slots we would rather keep as free tails: higher is better.
int slot_preference(const PcGroup& g, const TailSlot& s, int top_weight) {
  if (s.lhs.kind == Definition::Kind::kImage) return 0;
  if (s.weight < top_weight) return 1;
  if (!slot_rhs(g, s).empty()) return 2;
  if (s.lhs.kind == Definition::Kind::kCommutator && g.weight(s.lhs.second) != 1) return 3;
  return 4;
}

}  // namespace

TailedCover tailed_cover(const PcGroup& g, const std::vector<int>& image_slots) {
  if (g.num_gens() > 0 && (!g.has_weights() || !g.has_definitions()))
    throw std::invalid_argument("tailed_cover needs a group with weights and definitions");
  const int n = g.num_gens();
  const int c = max_weight(g);

  std::vector<char> def_power(static_cast<std::size_t>(n), 0);
  std::vector<char> def_comm(PcRelations::comm_index(std::max(n, 1), 0) + 1, 0);
  for (int i = 0; i < n; ++i) {
    const Definition& d = g.definition(i);
    if (d.kind == Definition::Kind::kPower) def_power[static_cast<std::size_t>(d.first)] = 1;
    if (d.kind == Definition::Kind::kCommutator) def_comm[PcRelations::comm_index(d.first, d.second)] = 1;
  }

  TailedCover out;
  out.base_group = g;
  out.base = n;
  std::vector<int> power_slot(static_cast<std::size_t>(n), -1);
  std::vector<int> comm_slot(def_comm.size(), -1);
  for (int j = 0; j < n; ++j) {
    if (def_power[static_cast<std::size_t>(j)]) continue;
    power_slot[static_cast<std::size_t>(j)] = static_cast<int>(out.slots.size());
    out.slots.push_back({{Definition::Kind::kPower, j, 0}, g.weight(j) + 1});
  }
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const std::size_t ci = PcRelations::comm_index(j, i);
      if (def_comm[ci] || g.weight(i) + g.weight(j) > c + 1) continue;
      comm_slot[ci] = static_cast<int>(out.slots.size());
      out.slots.push_back({{Definition::Kind::kCommutator, j, i}, g.weight(i) + g.weight(j)});
    }
  }
  for (int k : image_slots) out.slots.push_back({{Definition::Kind::kImage, k, 0}, 1});

  // Raw extension with one free central tail per slot.
  const int raw_tails = static_cast<int>(out.slots.size());
  auto unit = [&](int s) {
    F3Vector v(static_cast<std::size_t>(raw_tails), 0);
    if (s >= 0) v[static_cast<std::size_t>(s)] = 1;
    return v;
  };
  PcRelations raw(n + raw_tails);
  for (int j = 0; j < n; ++j) {
    raw.power(j) = with_tail(g.power_rhs(j), unit(power_slot[static_cast<std::size_t>(j)]), n);
    for (int i = 0; i < j; ++i) {
      raw.commutator(j, i) =
          with_tail(g.commutator_rhs(j, i), unit(comm_slot[PcRelations::comm_index(j, i)]), n);
    }
  }
  const PcGroup raw_group(std::move(raw));

  std::vector<int> order(static_cast<std::size_t>(raw_tails));
  for (int s = 0; s < raw_tails; ++s) order[static_cast<std::size_t>(s)] = s;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return slot_preference(g, out.slots[static_cast<std::size_t>(a)], c + 1) <
           slot_preference(g, out.slots[static_cast<std::size_t>(b)], c + 1);
  });
  EchelonBasis forced(raw_tails, order);
  raw_group.for_each_consistency_test(n, [&](const std::string& label, const PcElement& l, const PcElement& r) {
    for (int i = 0; i < n; ++i) {
      if (l.exponents[static_cast<std::size_t>(i)] != r.exponents[static_cast<std::size_t>(i)])
        throw std::logic_error("base group is inconsistent at " + label);
    }
    F3Vector diff(static_cast<std::size_t>(raw_tails));
    for (int t = 0; t < raw_tails; ++t) {
      const std::size_t k = static_cast<std::size_t>(n + t);
      diff[static_cast<std::size_t>(t)] = f3_add(l.exponents[k], f3_neg(r.exponents[k]));
    }
    forced.add(diff);
    return true;
  });

  std::vector<int> pivot_row(static_cast<std::size_t>(raw_tails), -1);
  for (std::size_t r = 0; r < forced.pivots().size(); ++r) pivot_row[static_cast<std::size_t>(forced.pivots()[r])] = static_cast<int>(r);
  std::vector<int> survivor(static_cast<std::size_t>(raw_tails), -1);
  int m = 0;
  for (int s = 0; s < raw_tails; ++s) {
    if (pivot_row[static_cast<std::size_t>(s)] < 0) survivor[static_cast<std::size_t>(s)] = m++;
  }
  out.tails = m;
  out.slot_values.assign(static_cast<std::size_t>(raw_tails), F3Vector(static_cast<std::size_t>(m), 0));
  for (int s = 0; s < raw_tails; ++s) {
    F3Vector& v = out.slot_values[static_cast<std::size_t>(s)];
    if (survivor[static_cast<std::size_t>(s)] >= 0) {
      v[static_cast<std::size_t>(survivor[static_cast<std::size_t>(s)])] = 1;
      continue;
    }
    const F3Vector& row = forced.rows()[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(s)])];
    for (int q = 0; q < raw_tails; ++q) {
      const int idx = survivor[static_cast<std::size_t>(q)];
      if (idx >= 0) v[static_cast<std::size_t>(idx)] = f3_neg(row[static_cast<std::size_t>(q)]);
    }
  }

  auto value = [&](int s) {
    return s >= 0 ? out.slot_values[static_cast<std::size_t>(s)] : F3Vector(static_cast<std::size_t>(m), 0);
  };
  PcRelations rel(n + m);
  for (int j = 0; j < n; ++j) {
    rel.power(j) = with_tail(g.power_rhs(j), value(power_slot[static_cast<std::size_t>(j)]), n);
    for (int i = 0; i < j; ++i) {
      rel.commutator(j, i) = with_tail(g.commutator_rhs(j, i), value(comm_slot[PcRelations::comm_index(j, i)]), n);
    }
  }
  out.cover = PcGroup(std::move(rel));
  return out;
}

Extension quotient_by_tail_subspace(const TailedCover& cover, const F3Matrix& relations, int weight) {
  const PcGroup& g = cover.base_group;
  const int n = cover.base;
  const int m = cover.tails;
  EchelonBasis u_basis(m);
  for (const auto& r : relations) u_basis.add(r);
  const int u = u_basis.rank();

  std::vector<int> eligible;
  auto consider = [&](auto pred) {
    for (int s = 0; s < static_cast<int>(cover.slots.size()); ++s) {
      const TailSlot& slot = cover.slots[static_cast<std::size_t>(s)];
      if (slot.lhs.kind == Definition::Kind::kImage || slot.weight != weight || !slot_rhs(g, slot).empty()) continue;
      if (pred(slot)) eligible.push_back(s);
    }
  };
  consider([&](const TailSlot& s) { return s.lhs.kind == Definition::Kind::kCommutator && g.weight(s.lhs.second) == 1; });
  consider([](const TailSlot& s) { return s.lhs.kind == Definition::Kind::kPower; });
  consider([&](const TailSlot& s) { return s.lhs.kind == Definition::Kind::kCommutator && g.weight(s.lhs.second) != 1; });

  Extension ext;
  EchelonBasis span = u_basis;
  for (int s : eligible) {
    if (span.rank() == m) break;
    if (span.add(cover.slot_values[static_cast<std::size_t>(s)])) ext.chosen_slots.push_back(s);
  }
  if (span.rank() != m) throw std::logic_error("definitions do not span the tail module");
  const int k = static_cast<int>(ext.chosen_slots.size());

  F3Matrix basis = u_basis.rows();
  for (int s : ext.chosen_slots) basis.push_back(cover.slot_values[static_cast<std::size_t>(s)]);
  ext.projection.assign(static_cast<std::size_t>(m), F3Vector(static_cast<std::size_t>(k), 0));
  if (m > 0) {
    const auto inv = invert(basis);
    if (!inv) throw std::logic_error("tail basis is singular");
    for (int t = 0; t < m; ++t) {
      for (int j = 0; j < k; ++j) {
        ext.projection[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] =
            (*inv)[static_cast<std::size_t>(t)][static_cast<std::size_t>(u + j)];
      }
    }
  }

  auto project = [&](const F3Vector& v) { return mul_vec_mat(v, ext.projection, k); };
  PcRelations rel(n + k);
  std::vector<F3Vector> power_tail(static_cast<std::size_t>(n));
  std::vector<F3Vector> comm_tail(PcRelations::comm_index(std::max(n, 1), 0) + 1);
  for (std::size_t s = 0; s < cover.slots.size(); ++s) {
    const Definition& lhs = cover.slots[s].lhs;
    if (lhs.kind == Definition::Kind::kPower) power_tail[static_cast<std::size_t>(lhs.first)] = project(cover.slot_values[s]);
    if (lhs.kind == Definition::Kind::kCommutator)
      comm_tail[PcRelations::comm_index(lhs.first, lhs.second)] = project(cover.slot_values[s]);
  }
  for (int j = 0; j < n; ++j) {
    rel.power(j) = with_tail(g.power_rhs(j), power_tail[static_cast<std::size_t>(j)], n);
    for (int i = 0; i < j; ++i) {
      rel.commutator(j, i) = with_tail(g.commutator_rhs(j, i), comm_tail[PcRelations::comm_index(j, i)], n);
    }
  }
  rel.weights = g.relations().weights;
  rel.definitions = g.relations().definitions;
  for (int s : ext.chosen_slots) {
    rel.weights.push_back(weight);
    rel.definitions.push_back(cover.slots[static_cast<std::size_t>(s)].lhs);
  }
  ext.group = PcGroup(std::move(rel));
  return ext;
}

PQuotientResult p_quotient(const Presentation& p, int max_class, const PQuotientOptions& options) {
  p.validate();
  if (max_class < 1) throw std::invalid_argument("class bound must be at least 1");
  const int m = p.generator_count;

  // Class 1: the exponent-sum matrix over F_3.
  std::vector<int> order;
  for (int k = m - 1; k >= 0; --k) order.push_back(k);
  EchelonBasis sums(m, order);
  for (const auto& r : p.relators) {
    F3Vector row(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) row[static_cast<std::size_t>(k)] = mod3(r.exponent_sum(k));
    sums.add(row);
  }
  std::vector<int> pivot_row(static_cast<std::size_t>(m), -1);
  for (std::size_t r = 0; r < sums.pivots().size(); ++r) pivot_row[static_cast<std::size_t>(sums.pivots()[r])] = static_cast<int>(r);
  std::vector<int> defining_index(static_cast<std::size_t>(m), -1);
  int d = 0;
  for (int k = 0; k < m; ++k) {
    if (pivot_row[static_cast<std::size_t>(k)] < 0) defining_index[static_cast<std::size_t>(k)] = d++;
  }
  if (d > options.order_cap_log3) throw ResourceLimitError("3-quotient exceeds order cap 3^" + std::to_string(options.order_cap_log3));

  PcRelations rel(d);
  rel.weights.assign(static_cast<std::size_t>(d), 1);
  for (int k = 0; k < m; ++k) {
    if (defining_index[static_cast<std::size_t>(k)] >= 0) rel.definitions.push_back({Definition::Kind::kImage, k, 0});
  }
  PQuotientResult res;
  res.quotient = PcGroup(std::move(rel));
  for (int k = 0; k < m; ++k) {
    PcElement img = res.quotient.identity();
    if (defining_index[static_cast<std::size_t>(k)] >= 0) {
      img.exponents[static_cast<std::size_t>(defining_index[static_cast<std::size_t>(k)])] = 1;
    } else {
      const F3Vector& row = sums.rows()[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(k)])];
      for (int q = 0; q < m; ++q) {
        const int idx = defining_index[static_cast<std::size_t>(q)];
        if (idx >= 0) img.exponents[static_cast<std::size_t>(idx)] = f3_neg(row[static_cast<std::size_t>(q)]);
      }
    }
    res.epimorphism.push_back(std::move(img));
  }
  if (d == 0) {
    res.stabilized = true;
    return res;
  }

  int c = 1;
  for (;;) {
    const PcGroup& q = res.quotient;
    const int n = q.num_gens();
    std::vector<char> is_defining(static_cast<std::size_t>(m), 0);
    std::vector<int> gen_of(static_cast<std::size_t>(m), -1);
    for (int i = 0; i < n; ++i) {
      if (q.definition(i).kind == Definition::Kind::kImage) {
        is_defining[static_cast<std::size_t>(q.definition(i).first)] = 1;
        gen_of[static_cast<std::size_t>(q.definition(i).first)] = i;
      }
    }
    std::vector<int> image_slots;
    for (int k = 0; k < m; ++k) {
      if (!is_defining[static_cast<std::size_t>(k)]) image_slots.push_back(k);
    }
    const TailedCover cover = tailed_cover(q, image_slots);
    const int total = n + cover.tails;
    const std::size_t first_image_slot = cover.slots.size() - image_slots.size();

    std::vector<PcElement> lifted(static_cast<std::size_t>(m));
    for (int k = 0, img_slot = 0; k < m; ++k) {
      if (is_defining[static_cast<std::size_t>(k)]) {
        lifted[static_cast<std::size_t>(k)] = cover.cover.generator(gen_of[static_cast<std::size_t>(k)]);
      } else {
        PcElement x = extend(res.epimorphism[static_cast<std::size_t>(k)], total);
        const F3Vector& v = cover.slot_values[first_image_slot + static_cast<std::size_t>(img_slot++)];
        for (int t = 0; t < cover.tails; ++t) x.exponents[static_cast<std::size_t>(n + t)] = v[static_cast<std::size_t>(t)];
        lifted[static_cast<std::size_t>(k)] = std::move(x);
      }
    }

    F3Matrix rows;
    for (const auto& r : p.relators) {
      PcElement x = cover.cover.identity();
      for (const auto& syl : r.syllables()) {
        x = cover.cover.multiply(x, cover.cover.power(lifted[static_cast<std::size_t>(syl.gen)], syl.exp));
      }
      if (!base_trivial(x, n)) throw std::logic_error("relator is not trivial in the previous quotient");
      rows.push_back(tail_part(x, n, cover.tails));
    }

    Extension ext = quotient_by_tail_subspace(cover, rows, c + 1);
    const int k_new = ext.group.num_gens() - n;
    if (k_new == 0) {
      res.stabilized = true;
      break;
    }
    if (c >= max_class) break;
    if (ext.group.num_gens() > options.order_cap_log3)
      throw ResourceLimitError("3-quotient exceeds order cap 3^" + std::to_string(options.order_cap_log3));

    for (int k = 0; k < m; ++k) {
      PcElement x = extend(res.epimorphism[static_cast<std::size_t>(k)], n + k_new);
      const F3Vector tails = tail_part(lifted[static_cast<std::size_t>(k)], n, cover.tails);
      const F3Vector img = mul_vec_mat(tails, ext.projection, k_new);
      for (int j = 0; j < k_new; ++j) x.exponents[static_cast<std::size_t>(n + j)] = img[static_cast<std::size_t>(j)];
      res.epimorphism[static_cast<std::size_t>(k)] = std::move(x);
    }
    res.quotient = std::move(ext.group);
    ++c;
  }
  res.achieved_class = c;
  return res;
}

Presentation pc_presentation(const PcGroup& g) {
  Presentation p;
  p.generator_count = g.num_gens();
  for (int i = 0; i < g.num_gens(); ++i) p.names.push_back("g" + std::to_string(i + 1));
  auto word = [](const NormalWord& w) {
    std::vector<Syllable> s;
    for (const auto& l : w) s.push_back({l.gen, l.exp});
    return Word::from_syllables(s);
  };
  for (int i = 0; i < g.num_gens(); ++i) {
    p.relators.push_back(Word::letter(i, kPrime) * word(g.power_rhs(i)).inverse());
  }
  for (int j = 1; j < g.num_gens(); ++j) {
    for (int i = 0; i < j; ++i) {
      p.relators.push_back(commutator(Word::letter(j), Word::letter(i)) * word(g.commutator_rhs(j, i)).inverse());
    }
  }
  return p;
}

PQuotientResult standardize(const PcGroup& g) {
  const int n = g.num_gens();
  if (n == 0) return PQuotientResult{g, {}, 0, true};
  PQuotientOptions opts;
  opts.order_cap_log3 = std::max(opts.order_cap_log3, n);
  PQuotientResult r = p_quotient(pc_presentation(g), n, opts);
  if (!r.stabilized || r.quotient.num_gens() != n)
    throw std::invalid_argument("pc presentation is inconsistent (its 3-quotient has order 3^" +
                                std::to_string(r.quotient.num_gens()) + ")");
  return r;
}

PCover p_cover(const PcGroup& g) {
  PCover out;
  out.group = (g.num_gens() == 0 || (g.has_weights() && g.has_definitions())) ? g : standardize(g).quotient;
  out.data = tailed_cover(out.group);
  out.p_class = out.group.num_gens() == 0 ? 0 : max_weight(out.group);
  const PcGroup& cov = out.data.cover;
  out.multiplicator = Subgroup(cov.num_gens());
  for (int t = 0; t < out.data.tails; ++t) out.multiplicator.insert(cov, cov.generator(out.data.base + t));
  const auto series = lower_p_central_series(cov);
  const std::size_t idx = static_cast<std::size_t>(out.p_class);
  out.nucleus = idx < series.size() ? series[idx] : Subgroup(cov.num_gens());
  return out;
}

int relation_rank(const PcGroup& g) { return p_cover(g).data.tails; }

}  // namespace sigma3
