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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace bellobs {

inline constexpr int kReportSchema = 1;

struct CheckResult {
  std::string name;
  double error;
  double tolerance;
  bool pass;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ReportWarning {
  std::string source;
  double defect;
  friend bool operator==(const ReportWarning&, const ReportWarning&) = default;
};

/// Outcome of one CLI suite. `duration_s` is excluded from equality.
struct VerificationReport {
  std::string suite;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<CheckResult> checks;
  /// Informational values (sweeps) that carry no pass/fail verdict.
  std::map<std::string, double> measurements;
  std::vector<ReportWarning> warnings;
  double duration_s = 0.0;

  /// Records `error <= tolerance` as a check.
  void check_at_most(const std::string& name, double error, double tolerance);
  /// Records `value > threshold` as a check; `error` holds the value.
  void check_above(const std::string& name, double value, double threshold);
  /// Records a boolean property; error is 0 on success and 1 otherwise.
  void check_true(const std::string& name, bool ok);

  bool pass() const;
  const CheckResult* find(const std::string& name) const;

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);

  /// Equality of the checked payload (everything except duration).
  bool same_payload(const VerificationReport& other) const;
};

/// Top-level document {"schema": 1, "reports": [...], "pass": bool}.
nlohmann::json reports_document(const std::vector<VerificationReport>& reports);

}  // namespace bellobs
