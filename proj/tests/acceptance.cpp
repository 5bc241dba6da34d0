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


// Acceptance suite: one line per criterion, "[PASS]" or "[FAIL]", followed by
// the individual checks. Exit status is 0 only when every selected criterion
// passes. `--criterion k` runs a single criterion; `--quiet` drops the detail.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "report.hpp"
#include "sigma3/classgroup.hpp"
#include "sigma3/fpgroup.hpp"
#include "sigma3/homomorphism.hpp"
#include "sigma3/pcgroup.hpp"
#include "sigma3/pquotient.hpp"
#include "sigma3/sl2.hpp"
#include "sigma3/subgroup.hpp"

namespace {

using sigma3::cli::Report;
using sigma3::cli::RunConfig;
using sigma3::cli::Verdict;
using namespace sigma3;

// Seeds and sample sizes for the sampled suites.
constexpr std::uint64_t kSeed = 20260101;
constexpr int kAssocTriples = 10'000;
constexpr int kFormTriples = 1'000;
constexpr std::uint64_t kFormMaxH = 50;
constexpr int kWordSamples = 10'000;
constexpr double kTheoremBudgetSeconds = 300;
constexpr double kScanBudgetSeconds = 300;
constexpr double kSearchBudgetSeconds = 120;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string p3(int e) { return "3^" + std::to_string(e); }

int floor_log2(int v) {
  int r = 0;
  while (v >>= 1) ++r;
  return r;
}

PQuotientResult quotient_of(const Presentation& p, int max_class) {
  PQuotientOptions opts;
  opts.order_cap_log3 = 20;
  return p_quotient(p, max_class, opts);
}

Report criterion_theorem() {
  Report rep("theorem");
  const auto t0 = Clock::now();
  for (int n = 1; n <= 4; ++n) {
    const std::string tag = "G_" + std::to_string(n);
    const auto r = quotient_of(gn_presentation(n), 2 * n + 2);
    rep.check(tag + " stabilizes", "p-quotient stabilizes", r.stabilized);
    rep.check_eq(tag + " order", "order 3^(3n+2)", p3(3 * n + 2), p3(r.quotient.order_log3()));
    rep.check_eq(tag + " nilpotency class", "class 2n+1", std::to_string(2 * n + 1),
                 std::to_string(nilpotency_class(r.quotient)));
    rep.check_eq(tag + " derived length", "derived length floor(log2(3n+3))", std::to_string(floor_log2(3 * n + 3)),
                 std::to_string(derived_length(r.quotient)));
  }
  const double secs = since(t0);
  rep.check("runtime " + std::to_string(secs) + " s", "within 5 minutes", secs <= kTheoremBudgetSeconds);
  return rep;
}

Report criterion_central_extension() {
  Report rep("central-extension");
  for (int n = 1; n <= 4; ++n) {
    const std::string tag = "G_" + std::to_string(n);
    const auto r = quotient_of(gn_presentation(n), 2 * n + 2);
    const PcGroup& g = r.quotient;
    const Subgroup k = normal_closure(g, {g.power(r.epimorphism[0], 3)});
    rep.check_eq(tag + " |<<x^3>>|", "normal closure of x^3 has order 3", "3^1", p3(k.order_log3()));
    rep.check(tag + " <<x^3>> central", "normal closure of x^3 is central", is_central(g, k));
    const auto h = quotient_of(hn_presentation(n), 2 * n + 2);
    rep.check_eq("H_" + std::to_string(n) + " order", "|H_n| = 3^(3n+1)", p3(3 * n + 1), p3(h.quotient.order_log3()));
    const QuotientMap q = quotient(g, k);
    std::vector<PcElement> images;
    for (const auto& e : r.epimorphism) images.push_back(q.project(g, e));
    rep.check(tag + "/<<x^3>> satisfies the H_n relators", "quotient maps onto H_n",
              satisfies_relators(q.group, images, hn_presentation(n)));
    rep.check_eq(tag + "/<<x^3>> order", "quotient has the order of H_n", p3(h.quotient.order_log3()),
                 p3(q.group.order_log3()));
    if (h.quotient.order_log3() <= 7) {
      rep.check(tag + "/<<x^3>> isomorphic to H_n by search", "quotient is isomorphic to H_n",
                isomorphic(q.group, h.quotient));
    }
  }
  return rep;
}

Report from_command(Report sub, const std::string& name) {
  Report rep(name);
  rep.merge(sub);
  return rep;
}

Report criterion_sl2_image() {
  RunConfig c;
  c.precision = 3;
  c.seed = kSeed;
  return from_command(cli::sl2(c, "lemma2"), "sl2-image");
}

Report criterion_sl2_kernel() {
  RunConfig c;
  c.n_min = 1;
  c.n_max = 2;
  return from_command(cli::sl2(c, "lemma3"), "sl2-kernel");
}

Report criterion_series() {
  RunConfig c;
  c.precision = 4;
  c.seed = kSeed;
  Report rep("series");
  rep.merge(cli::sl2(c, "series"));
  rep.merge(cli::sl2(c, "identities"));
  return rep;
}

Report criterion_search() {
  const auto t0 = Clock::now();
  Report rep = from_command(cli::descend(RunConfig{}, "", nullptr), "search");
  const double secs = since(t0);
  rep.check("runtime " + std::to_string(secs) + " s", "within 2 minutes", secs <= kSearchBudgetSeconds);
  return rep;
}

Report criterion_aqi() { return from_command(cli::aqi(RunConfig{}), "aqi"); }

Report criterion_classgroup() {
  RunConfig c;
  const auto t0 = Clock::now();
  Report rep = from_command(cli::classgroup(c, -50000, -1, "3,3"), "classgroup");
  const double secs = since(t0);
  rep.check("scan runtime " + std::to_string(secs) + " s", "scan within 5 minutes", secs <= kScanBudgetSeconds);
  return rep;
}

Report criterion_sigma() {
  Report rep("sigma");
  for (int n = 1; n <= 4; ++n) {
    const std::string tag = "G_" + std::to_string(n);
    const PcGroup g = quotient_of(gn_presentation(n), 2 * n + 2).quotient;
    const SigmaCheck s = check_sigma_automorphism(g);
    rep.check(tag + " sigma extends to an automorphism", "x -> x^-1, y -> y^-1 is an automorphism", s.ok());
    rep.check_eq(tag + " abelianization", "abelianization is [3,3]", "[3,3]", abelian_invariants(g).to_string());
  }
  return rep;
}

// Random element as a product of random generator powers, collected.
PcElement random_element(const PcGroup& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 2);
  NormalWord w;
  for (int i = 0; i < g.num_gens(); ++i) {
    const int x = e(rng);
    if (x != 0) w.push_back({i, x});
  }
  return g.element(w);
}

// Expands a word letter by letter and cancels with a stack.
std::vector<std::pair<int, int>> stack_reduce(const std::vector<Syllable>& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& syl : s) {
    const int sign = syl.exp > 0 ? 1 : -1;
    for (std::int64_t i = 0; i < (syl.exp > 0 ? syl.exp : -syl.exp); ++i) {
      if (!out.empty() && out.back().first == syl.gen && out.back().second == -sign) {
        out.pop_back();
      } else {
        out.emplace_back(syl.gen, sign);
      }
    }
  }
  return out;
}

std::vector<std::pair<int, int>> letters(const Word& w) { return stack_reduce(w.syllables()); }

Report criterion_properties() {
  Report rep("properties");
  rep.info("seed", "sampled suites", std::to_string(kSeed));

  std::vector<std::pair<std::string, PcGroup>> groups;
  for (int n = 1; n <= 4; ++n) groups.emplace_back("G_" + std::to_string(n), quotient_of(gn_presentation(n), 2 * n + 2).quotient);
  groups.emplace_back("Q1", q1_group());
  groups.emplace_back("Q2", q2_group());
  std::mt19937_64 rng(kSeed);
  for (const auto& [name, g] : groups) {
    int bad = 0;
    for (int i = 0; i < kAssocTriples; ++i) {
      const PcElement a = random_element(g, rng), b = random_element(g, rng), c = random_element(g, rng);
      const PcElement left = g.multiply(g.multiply(a, b), c);
      std::vector<PcLetter> word = a.to_word();
      for (const auto* x : {&b, &c}) {
        const auto w = x->to_word();
        word.insert(word.end(), w.begin(), w.end());
      }
      if (left != g.multiply(a, g.multiply(b, c)) || left != g.collect(word)) ++bad;
    }
    rep.check_eq(name + " associativity on " + std::to_string(kAssocTriples) + " triples", "collection is associative",
                 "0 failures", std::to_string(bad) + " failures");
  }

  int forms_tested = 0, form_bad = 0;
  for (std::int64_t d = -3; d >= -50000; --d) {
    if (!is_fundamental_discriminant(d)) continue;
    const auto forms = reduced_forms(d);
    if (forms.size() > kFormMaxH) continue;
    ++forms_tested;
    const QuadForm one = principal_form(d);
    std::uniform_int_distribution<std::size_t> pick(0, forms.size() - 1);
    for (int i = 0; i < kFormTriples; ++i) {
      const QuadForm &a = forms[pick(rng)], &b = forms[pick(rng)], &c = forms[pick(rng)];
      const QuadForm ab = compose(a, b);
      if (compose(ab, c) != compose(a, compose(b, c)) || ab != compose(b, a) || compose(a, one) != a ||
          compose(a, a.inverse()) != one || !ab.is_reduced() || ab.discriminant() != d) {
        ++form_bad;
      }
    }
  }
  rep.info("discriminants with h <= 50 in [-50000, -3]", "quadratic-form group laws", std::to_string(forms_tested));
  rep.check_eq("form group laws, " + std::to_string(kFormTriples) + " triples per discriminant",
               "composition is an abelian group law", "0 failures", std::to_string(form_bad) + " failures");

  int alpha_bad = 0;
  for (int m = 1; m <= 12; ++m) {
    const Z3Trunc a = sqrt_minus2(m);
    if (((a * a).value() + 2) % pow3(m) != 0 || a.value() % 3 != 1) ++alpha_bad;
  }
  rep.check_eq("alpha^2 = -2 mod 3^M, M = 1..12", "Hensel lifting", "0 failures", std::to_string(alpha_bad) + " failures");

  std::uniform_int_distribution<int> len(0, 20), gen(0, 2), ex(-3, 3);
  int word_bad = 0;
  for (int i = 0; i < kWordSamples; ++i) {
    std::vector<Syllable> raw;
    for (int k = len(rng); k > 0; --k) raw.push_back({gen(rng), ex(rng)});
    const Word w = Word::from_syllables(raw);
    const bool ok = letters(w) == stack_reduce(raw) && w.inverse().inverse() == w && (w * w.inverse()).empty() &&
                    Word::from_syllables(w.syllables()) == w && (w * w).inverse() == w.inverse() * w.inverse();
    if (!ok) ++word_bad;
  }
  rep.check_eq("free reduction on " + std::to_string(kWordSamples) + " random words", "free reduction laws", "0 failures",
               std::to_string(word_bad) + " failures");
  return rep;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Report()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigma3 acceptance suite"};
  int only = 0;
  bool quiet = false;
  app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  app.add_flag("--quiet", quiet, "print only the per-criterion lines");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "G_n orders, classes and derived lengths for n = 1..4", criterion_theorem},
      {2, "<<x^3>> is central of order 3 with quotient H_n", criterion_central_extension},
      {3, "SL2 image of H, truncations mod 3^M", criterion_sl2_image},
      {4, "kernel of H -> H_n as a congruence subgroup", criterion_sl2_kernel},
      {5, "lower central and derived series of P in closed form", criterion_series},
      {6, "descendant search from [3,3] yields Q1 and Q2", criterion_search},
      {7, "index-3 subgroup invariants of G_n", criterion_aqi},
      {8, "class groups of the listed discriminants and full scan", criterion_classgroup},
      {9, "sigma automorphism and abelianization of G_n", criterion_sigma},
      {10, "sampled property suites", criterion_properties},
  };

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = Clock::now();
    Report rep("criterion");
    bool ok = false;
    std::string error;
    try {
      rep = c.run();
      ok = rep.passed() && rep.count(Verdict::kPass) > 0;
    } catch (const std::exception& e) {
      error = e.what();
    }
    all_pass = all_pass && ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title << " (" << since(t0)
              << " s)\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    if (quiet) continue;
    for (const auto& r : rep.records()) {
      std::cout << "    " << sigma3::cli::to_string(r.verdict) << "  " << r.name;
      if (r.verdict == Verdict::kInfo) {
        std::cout << ": " << r.actual;
      } else if (!r.expected.empty() || !r.actual.empty()) {
        std::cout << "  expected " << r.expected << ", got " << r.actual;
      }
      std::cout << "\n";
    }
  }
  std::cout.flush();
  return all_pass ? 0 : 1;
}
