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


// sigma3: reproduces the computations behind the Schur-sigma 3-groups G_n.

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "commands.hpp"
#include "sigma3/errors.hpp"

namespace {

using sigma3::cli::Report;
using sigma3::cli::RunConfig;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void parse_range(const std::string& text, RunConfig& config) {
  static const std::regex re(R"(\s*(\d+)\s*(?:(?:-|\.\.)\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("bad --n range: " + text);
  config.n_min = std::stoi(m[1]);
  config.n_max = m[2].matched ? std::stoi(m[2]) : config.n_min;
  if (config.n_min < 1 || config.n_max < config.n_min) throw UsageError("empty or nonpositive --n range: " + text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const Report& report, const RunConfig& config) {
  std::cout << report.to_table();
  if (!config.json_path.empty()) {
    std::ofstream out(config.json_path);
    if (!out) throw UsageError("cannot write " + config.json_path);
    out << report.to_json(config).dump(2) << "\n";
  }
  return report.passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigma3: finite 3-group, 3-adic matrix and class-group checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sigma3::cli::version());

  RunConfig config;
  std::string n_range;
  app.add_option("--n", n_range, "range of n, e.g. 3 or 1-4")->expected(1);
  app.add_option("--precision", config.precision, "3-adic precision M (0 = per-check default)")
      ->check(CLI::Range(0, 10));
  app.add_option("--max-order", config.max_order_log3, "order cap for p-quotients, as an exponent of 3")
      ->check(CLI::Range(1, 40));
  app.add_option("--threads", config.threads, "worker threads for scans (0 = hardware)");
  app.add_option("--json", config.json_path, "write a JSON report");
  app.add_option("--csv", config.csv_path, "write a CSV table (classgroup)");
  app.add_option("--seed", config.seed, "seed for sampled checks");

  auto* theorem = app.add_subcommand("verify-theorem1", "order, class and derived length of G_n");
  auto* aqi = app.add_subcommand("aqi", "abelian invariants of the index-3 subgroups of G_n");

  auto* descend = app.add_subcommand("descend", "constrained descendant search from [3,3]");
  std::string constraint_file;
  descend->add_option("--constraint", constraint_file, "constraint file (whole: / max: lines)");

  auto* sl2 = app.add_subcommand("sl2", "checks in SL2 over truncated 3-adic integers");
  std::string check = "all";
  sl2->add_option("--check", check, "lemma2, lemma3, series, identities or all")
      ->check(CLI::IsMember({"lemma2", "lemma3", "series", "identities", "all"}));

  auto* cg = app.add_subcommand("classgroup", "scan imaginary quadratic class groups");
  std::int64_t min_d = -50000, max_d = -1;
  std::string sylow_filter = "3,3";
  cg->add_option("--min", min_d, "smallest discriminant");
  cg->add_option("--max", max_d, "largest discriminant");
  cg->add_option("--sylow3", sylow_filter, "keep discriminants with this 3-Sylow subgroup (empty keeps all)");
  cg->add_option("--out", config.csv_path, "CSV output (same as --csv)");

  auto* pq = app.add_subcommand("pquotient", "3-quotient of a finitely presented group");
  std::string presentation_file;
  int max_class = 10;
  pq->add_option("--presentation-file", presentation_file, "presentation (gens: line, one relator per line)")
      ->required();
  pq->add_option("--max-class", max_class, "class bound")->check(CLI::PositiveNumber);

  auto* all = app.add_subcommand("report-all", "run every check with default settings");

  for (auto* sub : {theorem, aqi, descend, sl2, cg, pq, all}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!n_range.empty()) {
      parse_range(n_range, config);
    } else if (sl2->parsed()) {
      config.n_max = 2;
    }
    if (config.threads > 256) throw UsageError("--threads must be at most 256");

    if (theorem->parsed()) return emit(sigma3::cli::verify_gn(config), config);
    if (aqi->parsed()) return emit(sigma3::cli::aqi(config), config);
    if (descend->parsed()) {
      const std::string text = constraint_file.empty() ? std::string() : read_file(constraint_file);
      return emit(sigma3::cli::descend(config, text, &std::cout), config);
    }
    if (sl2->parsed()) return emit(sigma3::cli::sl2(config, check), config);
    if (cg->parsed()) {
      if (min_d > max_d || max_d >= 0) throw UsageError("--min/--max must give a nonempty range of negative integers");
      return emit(sigma3::cli::classgroup(config, min_d, max_d, sylow_filter), config);
    }
    if (pq->parsed()) return emit(sigma3::cli::pquotient(config, read_file(presentation_file), max_class, &std::cout), config);
    if (all->parsed()) return emit(sigma3::cli::report_all(config), config);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sigma3::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
