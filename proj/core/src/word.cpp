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

#include "sigma3/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "sigma3/errors.hpp"

namespace sigma3 {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("word exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("word exponent overflow");
  return r;
}

// Appends s to a reduced stack of syllables, cancelling as needed.
void push_reduced(std::vector<Syllable>& out, Syllable s) {
  if (s.exp == 0) return;
  if (!out.empty() && out.back().gen == s.gen) {
    out.back().exp = checked_add(out.back().exp, s.exp);
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(s);
}

}  // namespace

Word free_reduce(const std::vector<Syllable>& syllables) { return Word::from_syllables(syllables); }

Word Word::from_syllables(const std::vector<Syllable>& syllables) {
  Word w;
  for (const Syllable& s : syllables) push_reduced(w.syllables_, s);
  return w;
}

Word Word::letter(int gen, std::int64_t exp) { return from_syllables({{gen, exp}}); }

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const Syllable& s : syllables_) n = checked_add(n, s.exp < 0 ? -s.exp : s.exp);
  return n;
}

int Word::max_generator() const {
  int m = -1;
  for (const Syllable& s : syllables_) m = std::max(m, s.gen);
  return m;
}

std::int64_t Word::exponent_sum(int gen) const {
  std::int64_t n = 0;
  for (const Syllable& s : syllables_)
    if (s.gen == gen) n = checked_add(n, s.exp);
  return n;
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) w.syllables_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::power(std::int64_t k) const {
  if (k < 0) return inverse().power(-k);
  if (k == 0 || empty()) return {};
  if (syllables_.size() == 1) return letter(syllables_[0].gen, checked_mul(syllables_[0].exp, k));
  Word result;
  Word base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Word Word::cyclically_reduced() const {
  std::vector<Syllable> s = syllables_;
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
    std::int64_t e = checked_add(s[lo].exp, s[hi - 1].exp);
    --hi;
    if (e == 0) {
      ++lo;
    } else {
      s[lo].exp = e;
    }
  }
  Word w;
  w.syllables_.assign(s.begin() + static_cast<std::ptrdiff_t>(lo), s.begin() + static_cast<std::ptrdiff_t>(hi));
  return w;
}

std::vector<Word> Word::rotations() const {
  Word core = cyclically_reduced();
  std::vector<Word> out;
  const auto& s = core.syllables_;
  for (std::size_t i = 0; i < std::max<std::size_t>(s.size(), 1); ++i) {
    Word r;
    for (std::size_t j = 0; j < s.size(); ++j) r.syllables_.push_back(s[(i + j) % s.size()]);
    out.push_back(std::move(r));
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  for (const Syllable& s : b.syllables_) push_reduced(w.syllables_, s);
  return w;
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word apply_sigma(const Word& w) {
  std::vector<Syllable> out;
  out.reserve(w.syllables().size());
  for (const Syllable& s : w.syllables()) {
    if (s.gen < 0 || s.gen > 1) throw std::invalid_argument("apply_sigma: word is not over the alphabet {x, y}");
    out.push_back({s.gen, -s.exp});
  }
  return Word::from_syllables(out);
}

Word schur_sigma_relator(const Word& r) { return r.inverse() * apply_sigma(r); }

bool free_conjugate(const Word& u, const Word& v) {
  Word cu = u.cyclically_reduced();
  for (const Word& r : v.rotations())
    if (r == cu) return true;
  return cu.empty() && v.cyclically_reduced().empty();
}

void Presentation::validate() const {
  if (generator_count <= 0) throw std::invalid_argument("presentation needs a positive generator count");
  if (static_cast<int>(names.size()) != generator_count)
    throw std::invalid_argument("presentation names do not match generator count");
  for (const Word& r : relators) {
    for (const Syllable& s : r.syllables())
      if (s.gen < 0 || s.gen >= generator_count)
        throw std::invalid_argument("relator uses a generator outside the alphabet");
  }
}

std::vector<std::string> default_generator_names(int count) {
  if (count == 1) return {"x"};
  if (count == 2) return {"x", "y"};
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back("g" + std::to_string(i + 1));
  return names;
}

Word r_word(int n) {
  if (n <= 0) throw std::invalid_argument("r_n requires n >= 1");
  std::int64_t p = 1;
  for (int i = 0; i < n; ++i) p = checked_mul(p, 3);
  return Word::from_syllables({{0, 3}, {1, -p}});
}

Word t_word() { return Word::from_syllables({{1, 1}, {0, 1}, {1, 1}, {0, -1}, {1, 1}}); }

Presentation gn_presentation(int n) {
  if (n <= 0) throw std::invalid_argument("G_n requires n >= 1");
  return {2, {"x", "y"}, {schur_sigma_relator(r_word(n)), schur_sigma_relator(t_word())}};
}

Presentation hn_presentation(int n) {
  if (n <= 0) throw std::invalid_argument("H_n requires n >= 1");
  std::int64_t p = 1;
  for (int i = 0; i < n; ++i) p = checked_mul(p, 3);
  return {2, {"x", "y"}, {Word::letter(0, 3), Word::letter(1, p), schur_sigma_relator(t_word())}};
}

Presentation h_presentation() {
  return {2, {"x", "y"}, {Word::letter(0, 3), schur_sigma_relator(t_word())}};
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : w.syllables()) {
    if (!first) os << ' ';
    first = false;
    if (s.gen >= 0 && s.gen < static_cast<int>(names.size()))
      os << names[static_cast<std::size_t>(s.gen)];
    else
      os << "?" << s.gen;
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty() || compact == "1") return {};

  std::vector<Syllable> out;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t g = 0; g < names.size(); ++g) {
      const std::string& nm = names[g];
      if (nm.size() > best_len && compact.compare(pos, nm.size(), nm) == 0) {
        best = static_cast<int>(g);
        best_len = nm.size();
      }
    }
    if (best < 0) throw ParseError("unknown generator at '" + compact.substr(pos) + "'");
    pos += best_len;
    std::int64_t exp = 1;
    if (pos < compact.size() && compact[pos] == '^') {
      ++pos;
      bool neg = false;
      if (pos < compact.size() && (compact[pos] == '-' || compact[pos] == '+')) {
        neg = compact[pos] == '-';
        ++pos;
      }
      std::size_t start = pos;
      exp = 0;
      while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) {
        exp = checked_add(checked_mul(exp, 10), compact[pos] - '0');
        ++pos;
      }
      if (pos == start) throw ParseError("missing exponent digits in '" + compact + "'");
      if (neg) exp = -exp;
    }
    out.push_back({best, exp});
  }
  return Word::from_syllables(out);
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    if (std::find_if(line.begin(), line.end(), not_space) == line.end()) continue;
    if (!have_header) {
      auto colon = line.find(':');
      std::string key = line.substr(0, colon);
      key.erase(std::remove_if(key.begin(), key.end(), [](unsigned char c) { return std::isspace(c); }), key.end());
      if (colon == std::string::npos || key != "gens") throw ParseError("presentation must start with 'gens:'");
      std::istringstream rest(line.substr(colon + 1));
      std::vector<std::string> tokens;
      for (std::string tok; rest >> tok;) {
        tok.erase(std::remove(tok.begin(), tok.end(), ','), tok.end());
        if (!tok.empty()) tokens.push_back(tok);
      }
      if (tokens.size() == 1 && std::all_of(tokens[0].begin(), tokens[0].end(), [](unsigned char c) { return std::isdigit(c); })) {
        p.generator_count = std::stoi(tokens[0]);
        if (p.generator_count <= 0) throw ParseError("generator count must be positive");
        p.names = default_generator_names(p.generator_count);
      } else {
        if (tokens.empty()) throw ParseError("empty generator list");
        p.generator_count = static_cast<int>(tokens.size());
        p.names = tokens;
      }
      have_header = true;
      continue;
    }
    p.relators.push_back(parse_word(line, p.names));
  }
  if (!have_header) throw ParseError("presentation has no 'gens:' line");
  p.validate();
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const std::string& n : p.names) os << ' ' << n;
  os << '\n';
  for (const Word& r : p.relators) os << format_word(r, p.names) << '\n';
  return os.str();
}

}  // namespace sigma3
