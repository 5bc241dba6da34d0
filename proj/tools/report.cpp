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


#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace sigma3::cli {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInfo:
      return "info";
  }
  return "?";
}

void Report::check_eq(std::string name, std::string anchor, const std::string& expected, const std::string& actual) {
  add({std::move(name), std::move(anchor), expected, actual, expected == actual ? Verdict::kPass : Verdict::kFail});
}

void Report::check(std::string name, std::string anchor, bool ok) {
  add({std::move(name), std::move(anchor), "true", ok ? "true" : "false",
       ok ? Verdict::kPass : Verdict::kFail});
}

void Report::info(std::string name, std::string anchor, std::string actual) {
  add({std::move(name), std::move(anchor), "", std::move(actual), Verdict::kInfo});
}

void Report::merge(const Report& other) {
  for (auto r : other.records_) {
    r.name = other.command_ + ": " + r.name;
    records_.push_back(std::move(r));
  }
  for (const auto& [label, s] : other.timings_) timings_.emplace_back(other.command_ + ": " + label, s);
}

bool Report::passed() const { return count(Verdict::kFail) == 0; }

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [v](const Record& r) { return r.verdict == v; }));
}

nlohmann::json Report::to_json(const RunConfig& config) const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["toolkit_version"] = version();
  j["command"] = command_;
  j["seed"] = config.seed;
  j["config"] = {{"n_min", config.n_min},
                 {"n_max", config.n_max},
                 {"precision", config.precision},
                 {"max_order_log3", config.max_order_log3},
                 {"threads", config.threads}};
  j["verdict"] = passed() ? "pass" : "fail";
  auto& recs = j["records"] = nlohmann::json::array();
  for (const auto& r : records_) {
    recs.push_back({{"name", r.name},
                    {"anchor", r.anchor},
                    {"expected", r.expected},
                    {"actual", r.actual},
                    {"verdict", to_string(r.verdict)}});
  }
  auto& t = j["timings"] = nlohmann::json::object();
  for (const auto& [label, s] : timings_) t[label] = s;
  return j;
}

std::string Report::to_table() const {
  std::size_t width = 4;
  for (const auto& r : records_) width = std::max(width, r.name.size());
  width = std::min<std::size_t>(width, 72);
  std::ostringstream out;
  for (const auto& r : records_) {
    out << std::left << std::setw(6) << to_string(r.verdict) << std::setw(static_cast<int>(width) + 2) << r.name
        << r.actual;
    if (r.verdict != Verdict::kInfo && r.verdict != Verdict::kPass) out << "  (expected " << r.expected << ")";
    out << "\n";
  }
  for (const auto& [label, s] : timings_) out << "time  " << label << ": " << std::fixed << std::setprecision(2) << s << " s\n";
  out << (passed() ? "PASS" : "FAIL") << "  " << count(Verdict::kPass) << " passed, " << count(Verdict::kFail)
      << " failed, " << count(Verdict::kInfo) << " informational\n";
  return out.str();
}

std::string version() { return SIGMA3_VERSION; }

}  // namespace sigma3::cli
