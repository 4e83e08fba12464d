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

#include "rees/report.hpp"

#include <algorithm>
#include <sstream>

#include "rees/errors.hpp"

namespace rees {

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

std::string inline_object(const Json& obj) {
  std::string out;
  for (const auto& [k, v] : obj.items()) {
    if (!out.empty()) out += "  ";
    out += k + ": " + (is_scalar(v) ? scalar(v) : v.dump());
  }
  return out;
}

void render_value(std::ostringstream& os, const std::string& key, const Json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  if (is_scalar(v)) {
    os << pad << key << ": " << scalar(v) << "\n";
  } else if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, child] : v.items()) render_value(os, k, child, depth + 1);
  } else if (std::all_of(v.begin(), v.end(), is_scalar)) {
    os << pad << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
    os << "]\n";
  } else {
    os << pad << key << ":\n";
    for (const auto& item : v) {
      os << pad << "  - " << (item.is_object() ? inline_object(item) : item.dump()) << "\n";
    }
  }
}

std::string csv_cell(const Json& v) {
  std::string s = scalar(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Report& report) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = report.command;
  j["parameters"] = report.parameters;
  j["passed"] = report.passed;
  j["results"] = report.results;
  j["findings"] = report.findings;
  return j;
}

Report report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("schema", "") != kSchema) {
    throw ParseError("report JSON lacks schema " + std::string(kSchema));
  }
  Report r;
  try {
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters");
    r.results = j.at("results");
    r.passed = j.at("passed").get<bool>();
    r.findings = j.at("findings").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
  return r;
}

std::string render_csv(const Report& report) {
  std::ostringstream os;
  const Json& res = report.results;
  if (res.contains("table") && res.contains("columns")) {
    const Json& cols = res["columns"];
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << scalar(cols[i]);
    os << "\n";
    for (const auto& row : res["table"]) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const std::string key = cols[i].get<std::string>();
        os << (i ? "," : "") << (row.contains(key) ? csv_cell(row[key]) : "");
      }
      os << "\n";
    }
    return os.str();
  }
  os << "key,value\n";
  for (const auto& [k, v] : res.items()) {
    if (is_scalar(v)) os << csv_cell(Json(k)) << "," << csv_cell(v) << "\n";
  }
  return os.str();
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::kJson:
      return to_json(report).dump(2) + "\n";
    case Format::kCsv:
      return render_csv(report);
    case Format::kText:
      break;
  }
  std::ostringstream os;
  os << "command: " << report.command << "\n";
  os << "parameters: " << inline_object(report.parameters) << "\n";
  for (const auto& [k, v] : report.results.items()) render_value(os, k, v, 0);
  if (!report.findings.empty()) {
    os << "findings:\n";
    for (const auto& f : report.findings) os << "  - " << f << "\n";
  }
  os << "verdict: " << (report.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace rees
