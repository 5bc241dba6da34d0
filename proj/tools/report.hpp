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


#ifndef SIGMA3_TOOLS_REPORT_HPP
#define SIGMA3_TOOLS_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace sigma3::cli {

enum class Verdict { kPass, kFail, kInfo };

std::string to_string(Verdict v);

// One checked statement. `anchor` names the claim being checked in words.
struct Record {
  std::string name;
  std::string anchor;
  std::string expected;
  std::string actual;
  Verdict verdict = Verdict::kInfo;
};

struct RunConfig {
  std::string command;
  int n_min = 1;
  int n_max = 4;
  int precision = 0;  // 0 selects each check's own default
  int max_order_log3 = 20;
  unsigned threads = 0;
  std::uint64_t seed = 20260101;
  std::string json_path;
  std::string csv_path;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  const std::string& command() const { return command_; }
  const std::vector<Record>& records() const { return records_; }

  void add(Record r) { records_.push_back(std::move(r)); }
  // Pass when actual == expected.
  void check_eq(std::string name, std::string anchor, const std::string& expected, const std::string& actual);
  void check(std::string name, std::string anchor, bool ok);
  void info(std::string name, std::string anchor, std::string actual);
  void timing(std::string label, double seconds) { timings_.emplace_back(std::move(label), seconds); }
  void merge(const Report& other);

  bool passed() const;
  std::size_t count(Verdict v) const;

  nlohmann::json to_json(const RunConfig& config) const;
  std::string to_table() const;

 private:
  std::string command_;
  std::vector<Record> records_;
  std::vector<std::pair<std::string, double>> timings_;
};

std::string version();

}  // namespace sigma3::cli

#endif  // SIGMA3_TOOLS_REPORT_HPP
