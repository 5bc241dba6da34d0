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

#ifndef SIGMA3_FPGROUP_HPP
#define SIGMA3_FPGROUP_HPP

// Free-group words and finite presentations over small named alphabets.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sigma3 {

/// One run `gen^exp` of a word. Exponents are never zero inside a Word.
struct Syllable {
  int gen = 0;
  std::int64_t exp = 0;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word stored run-length encoded, so that y^(3^n) costs one
/// syllable regardless of n.
class Word {
 public:
  Word() = default;

  /// Freely reduces `syllables` (merging runs, cancelling, dropping zeros).
  static Word from_syllables(const std::vector<Syllable>& syllables);
  static Word letter(int gen, std::int64_t exp = 1);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  /// Number of letters, i.e. the sum of |exp|.
  std::int64_t length() const;
  /// Largest generator index used, or -1 for the empty word.
  int max_generator() const;
  /// Sum of exponents of generator `gen`.
  std::int64_t exponent_sum(int gen) const;

  Word inverse() const;
  Word power(std::int64_t k) const;
  /// Conjugates away matching ends: returns the cyclically reduced core.
  Word cyclically_reduced() const;
  /// All cyclic rotations of a cyclically reduced word, at letter granularity
  /// but with runs kept whole where possible.
  std::vector<Word> rotations() const;

  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

Word free_reduce(const std::vector<Syllable>& syllables);

/// a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);

/// The involution x -> x^-1, y -> y^-1 on the free group of rank 2.
/// Throws std::invalid_argument on generators outside {x, y}.
Word apply_sigma(const Word& w);

/// free_reduce(r^-1 sigma(r))
Word schur_sigma_relator(const Word& r);

/// True iff u and v are conjugate in the free group.
bool free_conjugate(const Word& u, const Word& v);

struct Presentation {
  int generator_count = 0;
  std::vector<std::string> names;
  std::vector<Word> relators;

  /// Throws std::invalid_argument when a relator mentions a generator index
  /// outside [0, generator_count) or names are inconsistent.
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

std::vector<std::string> default_generator_names(int count);

/// x^3 y^(-3^n)
Word r_word(int n);
/// y x y x^-1 y
Word t_word();

/// <x, y | r_n^-1 sigma(r_n), t^-1 sigma(t)>
Presentation gn_presentation(int n);
/// <x, y | x^3, y^(3^n), t^-1 sigma(t)>
Presentation hn_presentation(int n);
/// <x, y | x^3, t^-1 sigma(t)>
Presentation h_presentation();

std::string format_word(const Word& w, const std::vector<std::string>& names);
Word parse_word(std::string_view text, const std::vector<std::string>& names);

/// Text format: a `gens: k` (or `gens: a b c`) line followed by one relator
/// per line in letter-exponent syntax, e.g. `x^3 y^-9`. `#` starts a comment.
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

}  // namespace sigma3

#endif  // SIGMA3_FPGROUP_HPP
