// Copyright 2026 The rees-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Structured command results and their text / JSON / CSV renderings.

#ifndef REES_REPORT_HPP_
#define REES_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"

namespace rees {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "rees-lab/1";

enum class Format { kText, kJson, kCsv };

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  bool passed = true;
  // Noteworthy observations that are not failures.
  std::vector<std::string> findings;
  // Timing trailer; never part of the canonical body.
  double elapsed_ms = 0.0;

  // Equality of the canonical body (timing ignored).
  friend bool operator==(const Report& a, const Report& b) {
    return a.command == b.command && a.parameters == b.parameters &&
           a.results == b.results && a.passed == b.passed && a.findings == b.findings;
  }
};

Json to_json(const Report& report);
// Throws ParseError on malformed input or a schema mismatch.
Report report_from_json(const std::string& text);

// Canonical body; byte-identical for identical inputs.
std::string render(const Report& report, Format format);

// CSV of results.table using results.columns; falls back to key,value rows of
// the scalar results.
std::string render_csv(const Report& report);

}  // namespace rees

#endif  // REES_REPORT_HPP_
