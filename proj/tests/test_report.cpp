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


#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "bellobs/report.hpp"
#include "bellobs/suites.hpp"

namespace bellobs {
namespace {

VerificationReport sample_report() {
  VerificationReport r;
  r.suite = "sample";
  r.parameters = {{"d", 3}, {"tol", 1e-11}};
  r.check_at_most("small", 1.0 / 3.0 * 1e-12, 1e-11);
  r.check_above("fidelity", 0.9990000000000001, 0.999);
  r.check_true("monotone", true);
  r.measurements["x"] = 0.1 + 0.2;
  r.warnings.push_back({"squeezer", 1.234567890123e-7});
  r.duration_s = 0.5;
  return r;
}

TEST(ReportTest, PassIffAllChecksPass) {
  auto r = sample_report();
  EXPECT_TRUE(r.pass());
  r.check_at_most("too_big", 2e-11, 1e-11);
  EXPECT_FALSE(r.pass());
  ASSERT_NE(r.find("too_big"), nullptr);
  EXPECT_FALSE(r.find("too_big")->pass);
  EXPECT_EQ(r.find("missing"), nullptr);
}

TEST(ReportTest, NanFailsCheck) {
  VerificationReport r;
  r.check_at_most("nan", std::numeric_limits<double>::quiet_NaN(), 1.0);
  r.check_above("nan_above", std::numeric_limits<double>::quiet_NaN(), 0.0);
  EXPECT_FALSE(r.checks[0].pass);
  EXPECT_FALSE(r.checks[1].pass);
}

TEST(ReportTest, JsonRoundTripIsLossless) {
  const auto r = sample_report();
  const auto text = r.to_json().dump();
  const auto back = VerificationReport::from_json(nlohmann::json::parse(text));
  EXPECT_TRUE(back.same_payload(r));
  EXPECT_EQ(back.measurements.at("x"), 0.1 + 0.2);
  EXPECT_EQ(back.warnings[0].defect, 1.234567890123e-7);
  EXPECT_EQ(back.duration_s, 0.5);
}

TEST(ReportTest, DurationExcludedFromPayload) {
  auto a = sample_report(), b = sample_report();
  b.duration_s = 99.0;
  EXPECT_TRUE(a.same_payload(b));
  b.measurements["x"] = 0.3;
  EXPECT_FALSE(a.same_payload(b));
}

TEST(ReportTest, SchemaVersionEnforced) {
  auto j = sample_report().to_json();
  EXPECT_EQ(j["schema"], 1);
  j["schema"] = 2;
  EXPECT_THROW(VerificationReport::from_json(j), std::invalid_argument);
}

TEST(ReportTest, DocumentAggregatesPass) {
  auto bad = sample_report();
  bad.check_true("broken", false);
  const auto doc = reports_document({sample_report(), bad});
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["reports"].size(), 2u);
  EXPECT_FALSE(doc["pass"].get<bool>());
  EXPECT_TRUE(reports_document({sample_report()})["pass"].get<bool>());
}

TEST(SuiteParsingTest, DimensionRanges) {
  EXPECT_EQ(suites::parse_d_range("2..16"), (std::pair<std::size_t, std::size_t>{2, 16}));
  EXPECT_EQ(suites::parse_d_range("5"), (std::pair<std::size_t, std::size_t>{5, 5}));
  for (const char* bad : {"1", "0..3", "5..4", "", "a..3", "2..", "2...4", "-2"}) {
    EXPECT_THROW(suites::parse_d_range(bad), std::invalid_argument) << bad;
  }
}

TEST(SuiteParsingTest, CutoffLists) {
  EXPECT_EQ(suites::parse_cutoffs("20,30,40"), (std::vector<std::size_t>{20, 30, 40}));
  EXPECT_EQ(suites::parse_cutoffs("8"), (std::vector<std::size_t>{8}));
  for (const char* bad : {"", ",", "20,", "2", "x", "20;30"}) {
    EXPECT_THROW(suites::parse_cutoffs(bad), std::invalid_argument) << bad;
  }
}

TEST(SuiteTest, QuditReportsAreDeterministic) {
  const auto a = suites::qudit_verify({2, 6, 1e-11});
  const auto b = suites::qudit_verify({2, 6, 1e-11});
  ASSERT_EQ(a.size(), 5u);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_TRUE(a[k].same_payload(b[k]));
    EXPECT_EQ(a[k].parameters["d"], 2 + k);
    EXPECT_TRUE(a[k].pass());
  }
  ASSERT_NE(a[0].find("V==CNOT"), nullptr);
  EXPECT_EQ(a[1].find("V==CNOT"), nullptr);
  EXPECT_THROW(suites::qudit_verify({1, 3, 1e-11}), std::invalid_argument);
}

TEST(SuiteTest, ParamsTextMatchesJson) {
  const auto j = suites::params_json();
  const auto text = suites::params_text();
  for (const char* key : {"alpha", "beta", "gamma", "r1", "r2", "tau1", "g"}) {
    const auto pos = text.find(std::string(key) + " ");
    ASSERT_NE(pos, std::string::npos) << key;
    const double value = std::stod(text.substr(text.find('=', pos) + 1));
    EXPECT_EQ(value, j[key].get<double>()) << key;
  }
  EXPECT_NE(text.find("-0.523598775"), std::string::npos);
  EXPECT_NE(text.find("WARNING"), std::string::npos);
}

}  // namespace
}  // namespace bellobs
