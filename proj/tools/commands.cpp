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


#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sigma3/classgroup.hpp"
#include "sigma3/errors.hpp"
#include "sigma3/fpgroup.hpp"
#include "sigma3/homomorphism.hpp"
#include "sigma3/pcgroup.hpp"
#include "sigma3/pgen.hpp"
#include "sigma3/pquotient.hpp"
#include "sigma3/sl2.hpp"
#include "sigma3/subgroup.hpp"

namespace sigma3::cli {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string p3(long long e) { return "3^" + std::to_string(e); }

std::string join(std::vector<AbelianInvariants> v) {
  std::sort(v.begin(), v.end());
  std::string s;
  for (const auto& a : v) s += (s.empty() ? "" : " ") + a.to_string();
  return s;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

int floor_log2(int v) {
  int r = 0;
  while (v >>= 1) ++r;
  return r;
}

PQuotientResult build(const Presentation& p, int max_class, const RunConfig& config) {
  PQuotientOptions opts;
  opts.order_cap_log3 = config.max_order_log3;
  return p_quotient(p, max_class, opts);
}

const char* kIdentifyConstraint = "whole: 3,3\nmax: 3,9 | 3,9 | 3,9 | 3,3,3\n";

Word random_xy_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 12), gen(0, 1), e(-2, 2);
  std::vector<Syllable> s;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int x = 0;
    while (x == 0) x = e(rng);
    s.push_back({gen(rng), x});
  }
  return Word::from_syllables(s);
}

void image_checks(Report& rep, int precision, std::uint64_t seed) {
  const int m = precision;
  const Z3Trunc alpha = sqrt_minus2(m);
  const std::int64_t mod = pow3(m);
  rep.check("alpha^2 = -2 mod " + p3(m), "alpha is a 3-adic square root of -2",
            ((alpha * alpha).value() + 2) % mod == 0);
  rep.check("alpha = 1 mod 3, alpha != 1 mod 9", "alpha is the Hensel root congruent to 1 mod 3",
            alpha.value() % 3 == 1 && (m < 2 || alpha.value() % 9 != 1));

  const Mat2 x1 = rho(0, 1);
  rep.check_eq("rho(x) mod 3", "rho(x) = (0 -1; 1 -1)", "(0 2; 1 2)",
            "(" + std::to_string(x1.a) + " " + std::to_string(x1.b) + "; " + std::to_string(x1.c) + " " +
                std::to_string(x1.d) + ")");
  const Mat2 x = rho(0, m), y = rho(1, m);
  rep.check("det rho(x) = det rho(y) = 1", "rho lands in SL2", x.det() == 1 && y.det() == 1);
  rep.check("rho(x)^3 = 1", "rho(x)^3 = 1", x.power(3).is_identity());
  rep.check("rho(t^-1 sigma(t)) = 1", "rho kills the relator t^-1 sigma(t)",
            rho_word(schur_sigma_relator(t_word()), m).is_identity());

  for (int k = 1; k <= m; ++k) {
    const std::uint64_t bfs = sylow_subgroup(k).order();
    rep.check_eq("|<rho(x), rho(y)>| mod " + p3(k), "the image of rho is the Sylow 3-subgroup P, of order 3^(3M-2)",
              std::to_string(sylow_order(k)), std::to_string(bfs));
  }

  std::mt19937_64 rng(seed);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Word w = random_xy_word(rng);
    if (!(rho_word(apply_sigma(w), m) == sigma_prime(rho_word(w, m)))) ++bad;
  }
  rep.check_eq("sigma' rho = rho sigma on 1000 random words", "sigma is realized by conjugation by (-1 1; 0 1)", "0 mismatches",
            std::to_string(bad) + " mismatches");

  for (int k = 1; k < m; ++k) {
    std::vector<Mat2> ms;
    for (int i = 0; i < 3; ++i) ms.push_back(rho_z(i, m).power(pow3(k - 1)));
    rep.check_eq("rank of rho(z_i^(3^" + std::to_string(k - 1) + ")) in N_" + std::to_string(k) + "/N_" +
                  std::to_string(k + 1),
              "N_k/N_(k+1) has rank 3 and is spanned by the z_i powers", "3", std::to_string(nk_layer_rank(ms, k)));
    const std::int64_t q = pow3(k - 1);
    const Mat2 z0q = rho_z(0, m).power(q);
    const Z3Trunc aq = [&] {
      Z3Trunc r(1, m);
      for (std::int64_t i = 0; i < q; ++i) r = r * alpha;
      return r;
    }();
    rep.check("rho(z_0^(3^" + std::to_string(k - 1) + ")) = diag(alpha^-q, alpha^q)",
              "rho(z_0) is diagonal with entries alpha^-1, alpha",
              z0q.b == 0 && z0q.c == 0 && z0q.d == aq.value() && z0q.a == aq.inverse().value());
  }

  const Mat2 target = rho_z(2, m) * rho_z(1, m) * rho_z(0, m);
  const Mat2 y3 = y.power(3);
  std::string found = "none";
  Mat2 c = Mat2::identity(m);
  for (int i = 0; i < 3; ++i, c = c * x) {
    if (c.inverse() * y3 * c == target) {
      found = i == 0 ? "e" : (i == 1 ? "x" : "x^2");
      break;
    }
  }
  rep.check("rho(y^3) conjugate to rho(z_2 z_1 z_0)", "y^3 is conjugate to z_2 z_1 z_0", found != "none");
  rep.info("conjugating coset representative", "y^3 is conjugate to z_2 z_1 z_0", found);
}

std::string mask_str(int mask) {
  std::string s = "{";
  for (int i = 0; i < 5; ++i) {
    if (mask & (1 << i)) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
  }
  return s + "}";
}

void kernel_checks(Report& rep, int n, int precision, std::uint64_t cap) {
  const int m = std::max(precision, n + 2);
  const std::string tag = "n=" + std::to_string(n) + " M=" + std::to_string(m);
  const Mat2 gen = rho(1, m).power(pow3(n));
  const MatGroup r = normal_closure_in_P({gen}, m, cap);
  const MatGroup p = sylow_subgroup(m, cap);
  rep.check_eq(tag + " [P : R]", "|H_n| = [P : R] = 3^(3n+1)", p3(3 * n + 1),
            "3^" + std::to_string(static_cast<int>(std::lround(std::log(double(p.order() / r.order())) / std::log(3.0)))));
  rep.check(tag + " rho(y^(3^n)) satisfies the five congruences", "the generator of R lies in the congruence subgroup",
            hn_kernel_membership(gen, n));

  const auto elements = p.elements();
  for (int sign : {1, -1}) {
    std::vector<std::uint64_t> counts(32, 0);
    std::vector<bool> inside(32, true);
    for (const Mat2& e : elements) {
      const auto cong = hn_kernel_congruences(e, n, sign);
      int mask = 0;
      for (int i = 0; i < 5; ++i) mask |= cong[static_cast<std::size_t>(i)] ? (1 << i) : 0;
      const bool in_r = r.contains(e);
      for (int s = 1; s < 32; ++s) {
        if ((mask & s) != s) continue;
        ++counts[static_cast<std::size_t>(s)];
        if (!in_r) inside[static_cast<std::size_t>(s)] = false;
      }
    }
    auto cuts_out_r = [&](int s) { return inside[static_cast<std::size_t>(s)] && counts[static_cast<std::size_t>(s)] == r.order(); };
    const std::string form = sign == 1 ? "a + b = 1" : "a - b = 1";
    if (sign == 1) {
      rep.check(tag + " R = congruence subgroup (printed form, a + b = 1 mod 3^(n+1))",
                "R is cut out by the five congruences", cuts_out_r(31));
    } else {
      rep.info(tag + " R = congruence subgroup with a - b = 1 mod 3^(n+1)", "R is cut out by the five congruences",
               bool_str(cuts_out_r(31)));
    }
    std::string minimal;
    for (int s = 1; s < 32; ++s) {
      if (!cuts_out_r(s)) continue;
      bool is_min = true;
      for (int t = 1; t < 32; ++t) {
        if (t != s && (t & s) == t && cuts_out_r(t)) is_min = false;
      }
      if (is_min) minimal += (minimal.empty() ? "" : " ") + mask_str(s);
    }
    rep.info(tag + " minimal congruence subsets cutting out R (" + form + ")",
             "independence of the five congruences", minimal.empty() ? "none" : minimal);
    rep.info(tag + " |subgroup cut out by all five| (" + form + ")", "R is cut out by the five congruences",
             std::to_string(counts[31]) + " of |R| = " + std::to_string(r.order()));
  }
}

void series_checks(Report& rep, int precision, std::uint64_t cap) {
  for (const auto& c : series_formula_check(precision, 0, cap)) {
    rep.check_eq("M=" + std::to_string(precision) + " " + c.name + " (closed form as stated)",
              c.name.rfind("P^(", 0) == 0 ? "P^(2k) = gamma_((2^(2k+2)-1)/3), P^(2k+1) = gamma_((2^(2k+3)-2)/3)"
                                          : "gamma_2k = N_(k+1)<(z0/z1)^(3^k), (z1/z2)^(3^k)>, gamma_(2k+1) = N_(k+1)<(z0 z1 z2)^(3^k)>",
              std::to_string(c.computed_order), std::to_string(c.formula_order) + (c.equal ? "" : " (sets differ)"));
  }
  for (const auto& c : series_formula_check(precision, 1, cap)) {
    if (c.name.rfind("gamma_", 0) != 0) continue;
    rep.info("M=" + std::to_string(precision) + " " + c.name + " with exponent 3^(k-1)",
             "lower central series of P in closed form",
             std::to_string(c.computed_order) + (c.equal ? " = " : " != ") + std::to_string(c.formula_order));
  }
}

void identity_checks(Report& rep, int precision, std::uint64_t seed, std::uint64_t cap) {
  rep.check("[1+3A, 1+3B] with A = E12, B = E21 mod 27", "[1+3^m A, 1+3^n B] = 1 + 3^(m+n)(AB - BA)",
            matrix_commutator_identity_check({0, 1, 0, 0}, {0, 0, 1, 0}, 1, 1, 3));
  rep.check("[1+3A, 1+3A] mod 27", "[1+3^m A, 1+3^n B] = 1 + 3^(m+n)(AB - BA)",
            matrix_commutator_identity_check({2, 5, 7, 1}, {2, 5, 7, 1}, 1, 1, 3));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> entry(-40, 40);
  std::uniform_int_distribution<int> level(1, 2);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    const IntMat2 a{entry(rng), entry(rng), entry(rng), entry(rng)};
    const IntMat2 b{entry(rng), entry(rng), entry(rng), entry(rng)};
    const int m = level(rng), n = level(rng);
    if (!matrix_commutator_identity_check(a, b, m, n, m + n + std::min(m, n))) ++bad;
  }
  rep.check_eq("commutator identity on 100 random samples mod 3^(m+n+min(m,n))",
            "[1+3^m A, 1+3^n B] = 1 + 3^(m+n)(AB - BA)", "0 failures", std::to_string(bad) + " failures");
  const int m = std::max(precision, 4);
  for (auto [k, l] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
    rep.check("[N_" + std::to_string(k) + ", N_" + std::to_string(l) + "] = N_" + std::to_string(k + l) +
                  " mod " + p3(m),
              "[N_k, N_l] = N_(k+l)", nk_commutator_check(k, l, m, cap));
  }
}

}  // namespace

Report verify_gn(const RunConfig& config) {
  Report rep("verify-theorem1");
  for (int n = config.n_min; n <= config.n_max; ++n) {
    const auto t0 = Clock::now();
    const std::string tag = "G_" + std::to_string(n);
    try {
      const PQuotientResult r = build(gn_presentation(n), 2 * n + 2, config);
      const PcGroup& g = r.quotient;
      rep.check(tag + " stabilized", "G_n is finite", r.stabilized);
      rep.check_eq(tag + " order", "|G_n| = 3^(3n+2)", p3(3 * n + 2), p3(g.order_log3()));
      rep.check_eq(tag + " nilpotency class", "G_n is nilpotent of class 2n+1", std::to_string(2 * n + 1),
                std::to_string(nilpotency_class(g)));
      rep.check_eq(tag + " derived length", "G_n has derived length floor(log2(3n+3))",
                std::to_string(floor_log2(3 * n + 3)), std::to_string(derived_length(g)));
      rep.info(tag + " p-class", "length of the lower exponent-3 central series", std::to_string(p_class(g)));
      rep.check_eq(tag + " abelianization", "G_n/[G_n, G_n] = [3,3]", "[3,3]", abelian_invariants(g).to_string());
      rep.check(tag + " sigma automorphism", "x -> x^-1, y -> y^-1 is an involutive automorphism inverting G_n^ab",
                check_sigma_automorphism(g).ok());
      rep.check(tag + " satisfies its relators", "the quotient map respects the relators",
                satisfies_relators(g, r.epimorphism, gn_presentation(n)));

      const Subgroup k = normal_closure(g, {g.power(r.epimorphism[0], 3)});
      rep.check_eq(tag + " |<<x^3>>|", "the kernel of G_n -> H_n is cyclic of order 3", "3",
                std::to_string(static_cast<int>(std::pow(3, k.order_log3()))));
      rep.check(tag + " <<x^3>> central", "G_n is a central extension of H_n", is_central(g, k));
      const PQuotientResult h = build(hn_presentation(n), 2 * n + 2, config);
      rep.check_eq("H_" + std::to_string(n) + " order", "|H_n| = 3^(3n+1)", p3(3 * n + 1), p3(h.quotient.order_log3()));
      // G_n/<<x^3>> is generated by the images of x and y; if those satisfy the
      // relators of H_n and the orders agree, the natural map is an isomorphism.
      const QuotientMap q = quotient(g, k);
      std::vector<PcElement> images;
      for (const auto& e : r.epimorphism) images.push_back(q.project(g, e));
      rep.check(tag + "/<<x^3>> = H_" + std::to_string(n), "G_n/<<x^3>> is isomorphic to H_n",
                h.stabilized && q.group.order_log3() == h.quotient.order_log3() &&
                    satisfies_relators(q.group, images, hn_presentation(n)));
    } catch (const ResourceLimitError& e) {
      rep.add({tag + " construction", "G_n is finite", "within caps", e.what(), Verdict::kFail});
    }
    rep.timing(tag, since(t0));
  }
  return rep;
}

Report aqi(const RunConfig& config) {
  Report rep("aqi");
  for (int n = config.n_min; n <= config.n_max; ++n) {
    const auto t0 = Clock::now();
    const std::string tag = "G_" + std::to_string(n);
    try {
      const PcGroup g = build(gn_presentation(n), 2 * n + 2, config).quotient;
      rep.check_eq(tag + " abelianization", "G_n/[G_n, G_n] = [3,3]", "[3,3]", abelian_invariants(g).to_string());
      rep.check_eq(tag + " maximal subgroup invariants",
                n == 1 ? "index-3 subgroups of G_1 have abelianizations [3,9] x3 and [3,3,3]"
                       : "for n >= 2 the index-3 subgroups have abelianizations [3,9] and [3,3,3] x3",
                n == 1 ? "[3,3,3] [3,9] [3,9] [3,9]" : "[3,3,3] [3,3,3] [3,3,3] [3,9]",
                join(maximal_subgroup_invariants(g)));
    } catch (const ResourceLimitError& e) {
      rep.add({tag + " construction", "G_n is finite", "within caps", e.what(), Verdict::kFail});
    }
    rep.timing(tag, since(t0));
  }
  return rep;
}

Report descend(const RunConfig& config, const std::string& constraint_text, std::ostream* groups_out) {
  Report rep("descend");
  const AQIConstraint target = AQIConstraint::parse(constraint_text.empty() ? kIdentifyConstraint : constraint_text);
  const bool standard = target == AQIConstraint::parse(kIdentifyConstraint);
  const auto t0 = Clock::now();
  SearchResult res;
  try {
    res = constrained_search(PcGroup::elementary_abelian(2), target);
  } catch (const ResourceLimitError& e) {
    rep.add({"search", "the constrained descendant search terminates", "terminates", e.what(), Verdict::kFail});
    return rep;
  }
  rep.timing("search", since(t0));
  rep.info("constraint", "target abelianization and index-3 subgroup invariants", join({target.whole}) + " / " + join(target.maximal));
  rep.info("nodes visited", "size of the pruned descendant tree", std::to_string(res.tree.size()));
  rep.info("nodes pruned", "size of the pruned descendant tree", std::to_string(res.pruned));

  const PcGroup q1 = q1_group(), q2 = q2_group();
  bool any_q1 = false, any_q2 = false;
  for (std::size_t i = 0; i < res.terminal.size(); ++i) {
    const PcGroup& g = res.terminal[i].group;
    const std::string tag = "terminal " + std::to_string(i + 1);
    rep.info(tag + " order", "terminal groups of the search", p3(g.order_log3()));
    rep.info(tag + " relation rank", "terminal groups of the search", std::to_string(relation_rank(g)));
    rep.check(tag + " matches the constraint exactly", "terminal groups realize the target invariants",
              matches_exactly(aqi_fingerprint(g), target));
    if (standard) {
      const bool is_q1 = g.order_log3() == q1.order_log3() && isomorphic(g, q1);
      const bool is_q2 = g.order_log3() == q2.order_log3() && isomorphic(g, q2);
      any_q1 = any_q1 || is_q1;
      any_q2 = any_q2 || is_q2;
      rep.info(tag + " isomorphic to Q1", "terminal groups are Q1 and Q2", bool_str(is_q1));
      rep.info(tag + " isomorphic to Q2", "terminal groups are Q1 and Q2", bool_str(is_q2));
    }
    if (groups_out) *groups_out << format_pc_group(g, tag) << "\n";
  }
  if (standard) {
    rep.check_eq("number of terminal groups", "the search terminates with two candidates", "2",
              std::to_string(res.terminal.size()));
    bool all_243 = !res.terminal.empty();
    for (const auto& t : res.terminal) all_243 = all_243 && t.group.order_log3() == 5;
    rep.check("terminal groups have order 243", "the two candidates have order 243", all_243);
    rep.check("some terminal group is isomorphic to Q1", "the candidates are Q1 and Q2", any_q1);
    rep.check("some terminal group is isomorphic to Q2", "the candidates are Q1 and Q2", any_q2);
    const PcGroup g1 = build(gn_presentation(1), 4, config).quotient;
    rep.check("Q1 isomorphic to G_1", "Q1 = G_1", isomorphic(q1, g1));
    rep.check("Q1 not isomorphic to Q2", "Q1 and Q2 are distinct groups", !isomorphic(q1, q2));
    rep.check_eq("relation rank of Q1", "Q1 has trivial Schur multiplier", "2", std::to_string(relation_rank(q1)));
    rep.check_eq("relation rank of Q2", "Q2 has nontrivial Schur multiplier", "3", std::to_string(relation_rank(q2)));
    rep.info("index-3 subgroup invariants of Q2", "the candidates are Q1 and Q2", join(maximal_subgroup_invariants(q2)));
  }
  return rep;
}

Report sl2(const RunConfig& config, const std::string& check) {
  Report rep("sl2");
  const std::uint64_t cap = kDefaultBfsCap;
  const auto t0 = Clock::now();
  const bool all = check == "all";
  if (all || check == "lemma2") {
    image_checks(rep, config.precision > 0 ? config.precision : 3, config.seed);
    rep.timing("lemma2", since(t0));
  }
  if (all || check == "lemma3") {
    const auto t1 = Clock::now();
    for (int n = config.n_min; n <= config.n_max; ++n) kernel_checks(rep, n, config.precision, cap);
    rep.timing("lemma3", since(t1));
  }
  if (all || check == "series") {
    const auto t1 = Clock::now();
    series_checks(rep, config.precision > 0 ? config.precision : 4, cap);
    rep.timing("series", since(t1));
  }
  if (all || check == "identities") {
    const auto t1 = Clock::now();
    identity_checks(rep, config.precision, config.seed, cap);
    rep.timing("identities", since(t1));
  }
  if (rep.records().empty()) throw std::invalid_argument("unknown sl2 check: " + check);
  return rep;
}

Report classgroup(const RunConfig& config, std::int64_t min_d, std::int64_t max_d, const std::string& sylow3_filter) {
  Report rep("classgroup");
  const auto filter = sylow3_filter.empty() ? std::optional<AbelianInvariants>{} : AbelianInvariants::parse(sylow3_filter);
  std::atomic<std::uint64_t> scanned{0}, mismatches{0};
  const auto t0 = Clock::now();
  const auto records = scan(
      min_d, max_d,
      [&](const ScanRecord& r) {
        ++scanned;
        if (three_rank_by_cubes(r.d) != r.sylow3.rank(3)) ++mismatches;
        return !filter || r.sylow3 == *filter;
      },
      config.threads);
  rep.timing("scan", since(t0));
  rep.info("fundamental discriminants scanned", "scan range", std::to_string(scanned.load()));
  rep.info("discriminants kept", "scan predicate", std::to_string(records.size()));
  rep.check_eq("3-rank by structure = 3-rank by counting cube roots of 1", "two independent 3-rank computations agree",
            "0 mismatches", std::to_string(mismatches.load()) + " mismatches");

  std::set<std::int64_t> kept;
  for (const auto& r : records) kept.insert(r.d);
  const std::set<std::int64_t> list1(g1_tower_discriminants().begin(), g1_tower_discriminants().end());
  const std::set<std::int64_t> list2(gn_candidate_discriminants().begin(), gn_candidate_discriminants().end());
  const AbelianInvariants three_three = AbelianInvariants::parse("3,3");
  for (const auto* list : {&list1, &list2}) {
    const std::string which = list == &list1 ? "G_1 list" : "G_n list";
    for (std::int64_t d : *list) {
      if (d < min_d || d > max_d) continue;
      const std::string tag = which + " d=" + std::to_string(d);
      if (!is_fundamental_discriminant(d)) {
        rep.add({tag, "listed discriminants are fundamental with Cl_3 = [3,3]", "fundamental", "not fundamental", Verdict::kFail});
        continue;
      }
      const AbelianInvariants s = sylow3(group_structure(d));
      rep.check_eq(tag + " Cl_3", "listed discriminants are fundamental with Cl_3 = [3,3]", "[3,3]", s.to_string());
      if (filter && *filter == three_three) {
        rep.check(tag + " found by scan", "the scan contains every listed discriminant", kept.count(d) == 1);
      }
    }
  }

  if (!config.csv_path.empty()) {
    std::ofstream out(config.csv_path);
    if (!out) throw std::runtime_error("cannot write " + config.csv_path);
    out << "d,h,invariants,sylow3-invariants,matches-list-1,matches-list-2\n";
    for (const auto& r : records) {
      out << r.d << "," << r.h << ",\"" << r.invariants.to_string() << "\",\"" << r.sylow3.to_string() << "\","
          << bool_str(list1.count(r.d) == 1) << "," << bool_str(list2.count(r.d) == 1) << "\n";
    }
  }
  return rep;
}

Report pquotient(const RunConfig& config, const std::string& presentation_text, int max_class, std::ostream* group_out) {
  Report rep("pquotient");
  const Presentation p = parse_presentation(presentation_text);
  const auto t0 = Clock::now();
  try {
    const PQuotientResult r = build(p, max_class, config);
    rep.timing("p-quotient", since(t0));
    rep.info("order", "maximal 3-quotient of bounded class", p3(r.quotient.order_log3()));
    rep.info("achieved class", "maximal 3-quotient of bounded class", std::to_string(r.achieved_class));
    rep.info("stabilized", "maximal 3-quotient of bounded class", bool_str(r.stabilized));
    rep.info("abelianization", "maximal 3-quotient of bounded class", abelian_invariants(r.quotient).to_string());
    rep.check("relators hold in the quotient", "the quotient map respects the relators",
              satisfies_relators(r.quotient, r.epimorphism, p));
    if (group_out) {
      *group_out << format_pc_group(r.quotient, "3-quotient of class <= " + std::to_string(max_class) + " of\n" +
                                                    format_presentation(p));
    }
  } catch (const ResourceLimitError& e) {
    rep.add({"p-quotient", "maximal 3-quotient of bounded class", "within caps", e.what(), Verdict::kFail});
  }
  return rep;
}

Report report_all(const RunConfig& config) {
  Report rep("report-all");
  RunConfig c = config;
  c.n_min = 1;
  c.n_max = 4;
  rep.merge(verify_gn(c));
  rep.merge(aqi(c));
  rep.merge(descend(c, "", nullptr));
  c.n_max = 2;
  c.precision = 0;
  rep.merge(sl2(c, "all"));
  c.csv_path.clear();
  rep.merge(classgroup(c, -50000, -1, "3,3"));
  return rep;
}

}  // namespace sigma3::cli
