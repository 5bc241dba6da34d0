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


#ifndef SIGMA3_TOOLS_COMMANDS_HPP
#define SIGMA3_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>

#include "report.hpp"

namespace sigma3::cli {

Report verify_gn(const RunConfig& config);
Report aqi(const RunConfig& config);
// `constraint_text` empty selects the [3,9] x3, [3,3,3] target. Terminal
// groups are written to `groups_out` in pc text format.
Report descend(const RunConfig& config, const std::string& constraint_text, std::ostream* groups_out);
// check is one of lemma2, lemma3, series, identities, all.
Report sl2(const RunConfig& config, const std::string& check);
Report classgroup(const RunConfig& config, std::int64_t min_d, std::int64_t max_d, const std::string& sylow3_filter);
Report pquotient(const RunConfig& config, const std::string& presentation_text, int max_class,
                 std::ostream* group_out);
Report report_all(const RunConfig& config);

}  // namespace sigma3::cli

#endif  // SIGMA3_TOOLS_COMMANDS_HPP
