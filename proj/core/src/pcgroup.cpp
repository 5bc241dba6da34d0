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

#include "sigma3/pcgroup.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "sigma3/errors.hpp"

namespace sigma3 {

bool PcElement::is_identity() const {
  return std::all_of(exponents.begin(), exponents.end(), [](std::uint8_t e) { return e == 0; });
}

int PcElement::depth() const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) return static_cast<int>(i);
  return static_cast<int>(exponents.size());
}

int PcElement::leading_exponent() const {
  int d = depth();
  return d < static_cast<int>(exponents.size()) ? exponents[static_cast<std::size_t>(d)] : 0;
}

NormalWord PcElement::to_word() const {
  NormalWord w;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) w.push_back({static_cast<int>(i), exponents[i]});
  return w;
}

PcRelations::PcRelations(int n)
    : num_gens(n),
      powers(static_cast<std::size_t>(n)),
      commutators(n > 1 ? comm_index(n, 0) : 0) {}

PcGroup::PcGroup(PcRelations relations) : rel_(std::move(relations)) {
  const int n = rel_.num_gens;
  if (n < 0) throw std::invalid_argument("negative generator count");
  if (static_cast<int>(rel_.powers.size()) != n || rel_.commutators.size() != (n > 1 ? PcRelations::comm_index(n, 0) : 0))
    throw std::invalid_argument("pc relations have the wrong shape");
  if (!rel_.weights.empty() && static_cast<int>(rel_.weights.size()) != n)
    throw std::invalid_argument("weights have the wrong length");
  if (!rel_.definitions.empty() && static_cast<int>(rel_.definitions.size()) != n)
    throw std::invalid_argument("definitions have the wrong length");

  auto check_word = [n](const NormalWord& w, int after) {
    int last = after;
    for (const PcLetter& l : w) {
      if (l.gen <= last || l.gen >= n || l.exp < 1 || l.exp >= kPrime)
        throw std::invalid_argument("pc relation right-hand side is not a normal word in later generators");
      last = l.gen;
    }
  };
  for (int i = 0; i < n; ++i) check_word(rel_.powers[static_cast<std::size_t>(i)], i);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) check_word(rel_.commutators[PcRelations::comm_index(j, i)], j);

  conj_.assign(static_cast<std::size_t>(n), {});
  for (int j = 1; j < n; ++j) {
    auto& row = conj_[static_cast<std::size_t>(j)];
    row.resize(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i) {
      NormalWord w{{j, 1}};
      const NormalWord& c = commutator_rhs(j, i);
      w.insert(w.end(), c.begin(), c.end());
      row[static_cast<std::size_t>(i)] = std::move(w);
    }
  }

  std::vector<bool> central(static_cast<std::size_t>(n), true);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (!commutator_rhs(j, i).empty()) central[static_cast<std::size_t>(i)] = central[static_cast<std::size_t>(j)] = false;
  central_start_ = n;
  while (central_start_ > 0 && central[static_cast<std::size_t>(central_start_ - 1)]) --central_start_;
}

PcGroup PcGroup::elementary_abelian(int n) {
  PcRelations r(n);
  r.weights.assign(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n; ++i) r.definitions.push_back({Definition::Kind::kImage, i, 0});
  return PcGroup(std::move(r));
}

PcGroup PcGroup::cyclic(int n) {
  PcRelations r(n);
  for (int i = 0; i + 1 < n; ++i) r.power(i) = {{i + 1, 1}};
  for (int i = 0; i < n; ++i) {
    r.weights.push_back(i + 1);
    r.definitions.push_back(i == 0 ? Definition{Definition::Kind::kImage, 0, 0} : Definition{Definition::Kind::kPower, i - 1, 0});
  }
  return PcGroup(std::move(r));
}

std::vector<int> PcGroup::defining_generators() const {
  std::vector<int> out;
  for (int i = 0; i < num_gens(); ++i)
    if (has_definitions() && definition(i).kind == Definition::Kind::kImage) out.push_back(i);
  return out;
}

PcElement PcGroup::identity() const { return PcElement{std::vector<std::uint8_t>(static_cast<std::size_t>(num_gens()), 0)}; }

PcElement PcGroup::generator(int i, int e) const {
  PcElement x = identity();
  std::vector<PcLetter> stack{{i, ((e % kPrime) + kPrime) % kPrime}};
  if (stack.back().exp == 0) return x;
  collect_into(x.exponents, stack);
  return x;
}

PcElement PcGroup::element(const NormalWord& w) const {
  PcElement x = identity();
  for (const PcLetter& l : w) x.exponents[static_cast<std::size_t>(l.gen)] = static_cast<std::uint8_t>(l.exp);
  return x;
}

void PcGroup::push_reversed(std::vector<PcLetter>& stack, const NormalWord& w) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) stack.push_back(*it);
}

void PcGroup::collect_into(std::vector<std::uint8_t>& r, std::vector<PcLetter>& stack) const {
  while (!stack.empty()) {
    const PcLetter top = stack.back();
    stack.pop_back();
    const int g = top.gen;
    const auto gi = static_cast<std::size_t>(g);

    int last = -1;
    if (g < central_start_) {
      for (int h = central_start_ - 1; h > g; --h)
        if (r[static_cast<std::size_t>(h)] != 0) {
          last = h;
          break;
        }
    }

    if (last < 0) {
      int v = r[gi] + top.exp;
      if (v >= kPrime) {
        r[gi] = static_cast<std::uint8_t>(v - kPrime);
        push_reversed(stack, power_rhs(g));
      } else {
        r[gi] = static_cast<std::uint8_t>(v);
      }
      continue;
    }

    // r = r_{<=g} s with s in generators (g, last]; r a_g = r_{<=g} a_g s^(a_g).
    if (top.exp > 1) stack.push_back({g, top.exp - 1});
    for (int h = last; h > g; --h) {
      auto hi = static_cast<std::size_t>(h);
      for (int k = 0; k < r[hi]; ++k) push_reversed(stack, conj_[hi][gi]);
      r[hi] = 0;
    }
    if (r[gi] + 1 == kPrime) {
      r[gi] = 0;
      push_reversed(stack, power_rhs(g));
    } else {
      ++r[gi];
    }
  }
}

PcElement PcGroup::multiply(const PcElement& a, const PcElement& b) const {
  PcElement r = a;
  std::vector<PcLetter> stack;
  for (int i = num_gens() - 1; i >= 0; --i)
    if (b.exponents[static_cast<std::size_t>(i)] != 0) stack.push_back({i, b.exponents[static_cast<std::size_t>(i)]});
  collect_into(r.exponents, stack);
  return r;
}

PcElement PcGroup::collect(const std::vector<PcLetter>& word) const {
  PcElement r = identity();
  for (const PcLetter& l : word) {
    if (l.gen < 0 || l.gen >= num_gens()) throw std::invalid_argument("collect: generator out of range");
    if (l.exp >= 0 && l.exp < kPrime) {
      std::vector<PcLetter> stack;
      if (l.exp > 0) stack.push_back(l);
      collect_into(r.exponents, stack);
    } else {
      r = multiply(r, power(generator(l.gen), l.exp));
    }
  }
  return r;
}

PcElement PcGroup::inverse(const PcElement& a) const {
  PcElement x = a;
  PcElement v = identity();
  std::vector<PcLetter> stack;
  while (!x.is_identity()) {
    int d = x.depth();
    int k = kPrime - x.exponents[static_cast<std::size_t>(d)];
    stack.push_back({d, k});
    collect_into(x.exponents, stack);
    stack.push_back({d, k});
    collect_into(v.exponents, stack);
  }
  return v;
}

PcElement PcGroup::power(const PcElement& a, std::int64_t e) const {
  if (e < 0) return power(inverse(a), -e);
  PcElement result = identity();
  PcElement base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

PcElement PcGroup::commutator(const PcElement& a, const PcElement& b) const {
  return multiply(inverse(multiply(b, a)), multiply(a, b));
}

PcElement PcGroup::conjugate(const PcElement& a, const PcElement& b) const {
  return multiply(inverse(b), multiply(a, b));
}

std::uint64_t PcGroup::element_order(const PcElement& a) const {
  std::uint64_t ord = 1;
  PcElement x = a;
  while (!x.is_identity()) {
    x = power(x, kPrime);
    ord *= kPrime;
  }
  return ord;
}

void PcGroup::for_each_consistency_test(int limit, const std::function<bool(const std::string&, const PcElement&, const PcElement&)>& visit) const {
  const int n = std::min(limit, num_gens());
  auto g = [this](int i, int e = 1) { return generator(i, e); };
  auto pw = [this](int i) { return element(power_rhs(i)); };
  auto name = [](int i) { return "g" + std::to_string(i + 1); };

  for (int k = 2; k < n; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        if (!visit("(" + name(k) + " " + name(j) + ") " + name(i), multiply(multiply(g(k), g(j)), g(i)),
                   multiply(g(k), multiply(g(j), g(i)))))
          return;
      }
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (!visit("(" + name(j) + "^3) " + name(i), multiply(pw(j), g(i)), multiply(g(j, kPrime - 1), multiply(g(j), g(i)))))
        return;
      if (!visit(name(j) + " (" + name(i) + "^3)", multiply(g(j), pw(i)), multiply(multiply(g(j), g(i)), g(i, kPrime - 1))))
        return;
    }
  for (int i = 0; i < n; ++i) {
    if (!visit("(" + name(i) + "^3) " + name(i), multiply(pw(i), g(i)), multiply(g(i), pw(i)))) return;
  }
}

std::vector<std::string> PcGroup::consistency_failures(bool stop_at_first) const {
  std::vector<std::string> fails;
  for_each_consistency_test(num_gens(), [&](const std::string& label, const PcElement& l, const PcElement& r) {
    if (l != r) fails.push_back(label);
    return fails.empty() || !stop_at_first;
  });
  return fails;
}

std::vector<PcElement> PcGroup::elements() const {
  const int n = num_gens();
  if (n > 16) throw ResourceLimitError("refusing to enumerate more than 3^16 elements");
  std::vector<PcElement> out;
  PcElement x = identity();
  while (true) {
    out.push_back(x);
    int i = n - 1;
    while (i >= 0 && x.exponents[static_cast<std::size_t>(i)] == kPrime - 1) x.exponents[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++x.exponents[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

std::string trim(std::string s) {
  auto ns = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), ns));
  s.erase(std::find_if(s.rbegin(), s.rend(), ns).base(), s.end());
  return s;
}

int parse_gen(const std::string& tok, int n) {
  std::string t = trim(tok);
  if (t.size() < 2 || (t[0] != 'g' && t[0] != 'x') ||
      !std::all_of(t.begin() + 1, t.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("bad pc generator '" + t + "'");
  int i = std::stoi(t.substr(1)) - 1;
  if (i < 0 || i >= n) throw ParseError("pc generator out of range '" + t + "'");
  return i;
}

NormalWord parse_normal_word(const std::string& text, int n) {
  NormalWord w;
  std::istringstream in(text);
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') compact.push_back(c);
  if (compact.empty() || compact == "1") return w;
  // split at generator letters
  std::size_t pos = 0;
  while (pos < compact.size()) {
    std::size_t next = compact.find_first_of("gx", pos + 1);
    std::string tok = compact.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    int exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      exp = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    int g = parse_gen(tok, n);
    if (exp < 1 || exp >= kPrime) throw ParseError("pc word exponents must be 1 or 2");
    if (!w.empty() && w.back().gen >= g) throw ParseError("pc word is not in normal form: " + text);
    w.push_back({g, exp});
    pos = next == std::string::npos ? compact.size() : next;
  }
  return w;
}

}  // namespace

PcGroup parse_pc_group(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<PcRelations> rel;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!rel) {
      std::istringstream hs(line);
      std::string pc, p, n;
      hs >> pc >> p >> n;
      if (pc != "pc" || p != "p=3" || n.rfind("n=", 0) != 0) throw ParseError("pc file must start with 'pc p=3 n=<gens>'");
      int gens = std::stoi(n.substr(2));
      if (gens < 0) throw ParseError("negative generator count");
      rel.emplace(gens);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("pc relation without '=': " + line);
    std::string lhs = trim(line.substr(0, eq)), rhs = line.substr(eq + 1);
    lhs.erase(std::remove_if(lhs.begin(), lhs.end(), [](unsigned char c) { return std::isspace(c); }), lhs.end());
    NormalWord w = parse_normal_word(rhs, rel->num_gens);
    if (lhs.front() == '[') {
      auto comma = lhs.find(',');
      if (comma == std::string::npos || lhs.back() != ']') throw ParseError("bad commutator: " + lhs);
      int j = parse_gen(lhs.substr(1, comma - 1), rel->num_gens);
      int i = parse_gen(lhs.substr(comma + 1, lhs.size() - comma - 2), rel->num_gens);
      if (j <= i) throw ParseError("commutator relations must be written [g_j,g_i] with j > i");
      rel->commutator(j, i) = w;
    } else {
      auto caret = lhs.find('^');
      if (caret == std::string::npos || lhs.substr(caret + 1) != "3") throw ParseError("bad power relation: " + lhs);
      rel->power(parse_gen(lhs.substr(0, caret), rel->num_gens)) = w;
    }
  }
  if (!rel) throw ParseError("empty pc file");
  try {
    return PcGroup(std::move(*rel));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

namespace {

std::string format_normal_word(const NormalWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ' ';
    os << 'g' << w[k].gen + 1;
    if (w[k].exp != 1) os << '^' << w[k].exp;
  }
  return os.str();
}

}  // namespace

std::string format_element(const PcElement& e) { return format_normal_word(e.to_word()); }

std::string format_pc_group(const PcGroup& g, std::string_view provenance) {
  std::ostringstream os;
  if (!provenance.empty()) {
    std::istringstream ps{std::string(provenance)};
    for (std::string l; std::getline(ps, l);) os << "# " << l << '\n';
  }
  os << "pc p=3 n=" << g.num_gens() << '\n';
  for (int i = 0; i < g.num_gens(); ++i)
    if (!g.power_rhs(i).empty()) os << 'g' << i + 1 << "^3 = " << format_normal_word(g.power_rhs(i)) << '\n';
  for (int j = 1; j < g.num_gens(); ++j)
    for (int i = 0; i < j; ++i)
      if (!g.commutator_rhs(j, i).empty())
        os << "[g" << j + 1 << ",g" << i + 1 << "] = " << format_normal_word(g.commutator_rhs(j, i)) << '\n';
  return os.str();
}

PcGroup q1_group() {
  return parse_pc_group(
      "pc p=3 n=5\n"
      "g1^3 = g4\n"
      "g2^3 = g4\n"
      "[g2,g1] = g3\n"
      "[g3,g1] = g4\n"
      "[g3,g2] = g5\n");
}

PcGroup q2_group() {
  return parse_pc_group(
      "pc p=3 n=5\n"
      "g1^3 = g4^2\n"
      "[g2,g1] = g3\n"
      "[g3,g1] = g4\n"
      "[g3,g2] = g5\n");
}

}  // namespace sigma3
