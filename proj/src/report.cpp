// Copyright 2026 The bellobs Authors
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

#include "bellobs/report.hpp"

#include <algorithm>
#include <cmath>

namespace bellobs {

using nlohmann::json;

void VerificationReport::check_at_most(const std::string& name, double error, double tolerance) {
  // NaN fails.
  checks.push_back({name, error, tolerance, error <= tolerance});
}

void VerificationReport::check_above(const std::string& name, double value, double threshold) {
  checks.push_back({name, value, threshold, value > threshold});
}

void VerificationReport::check_true(const std::string& name, bool ok) {
  checks.push_back({name, ok ? 0.0 : 1.0, 0.0, ok});
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

json VerificationReport::to_json() const {
  json j;
  j["schema"] = kReportSchema;
  j["suite"] = suite;
  j["parameters"] = parameters;
  json cs = json::array();
  for (const auto& c : checks) {
    cs.push_back({{"name", c.name}, {"error", c.error}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  }
  j["checks"] = std::move(cs);
  j["measurements"] = measurements;
  json ws = json::array();
  for (const auto& w : warnings) ws.push_back({{"source", w.source}, {"defect", w.defect}});
  j["warnings"] = std::move(ws);
  j["pass"] = pass();
  j["duration_s"] = duration_s;
  return j;
}

VerificationReport VerificationReport::from_json(const json& j) {
  if (j.value("schema", 0) != kReportSchema) {
    throw std::invalid_argument("report json: unsupported schema");
  }
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.parameters = j.at("parameters");
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("error").get<double>(),
                        c.at("tolerance").get<double>(), c.at("pass").get<bool>()});
  }
  r.measurements = j.at("measurements").get<std::map<std::string, double>>();
  for (const auto& w : j.at("warnings")) {
    r.warnings.push_back({w.at("source").get<std::string>(), w.at("defect").get<double>()});
  }
  r.duration_s = j.value("duration_s", 0.0);
  return r;
}

bool VerificationReport::same_payload(const VerificationReport& other) const {
  return suite == other.suite && parameters == other.parameters && checks == other.checks &&
         measurements == other.measurements && warnings == other.warnings;
}

json reports_document(const std::vector<VerificationReport>& reports) {
  json doc;
  doc["schema"] = kReportSchema;
  json rs = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    rs.push_back(r.to_json());
    ok = ok && r.pass();
  }
  doc["reports"] = std::move(rs);
  doc["pass"] = ok;
  return doc;
}

}  // namespace bellobs
