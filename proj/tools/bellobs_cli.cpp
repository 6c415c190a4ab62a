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

// bellobs: verification front end.
//
//   bellobs qudit verify --d 2..16 --tol 1e-11 [--out report.json]
//   bellobs qudit synth --d 3 --format json|csv [--out PATH]
//   bellobs cv verify --cutoffs 20,30,40 [--tol 1e-12] [--out report.json]
//   bellobs params [--json]
//
// Machine output goes to stdout, progress to stderr. Exit code 0 iff every
// check passed; 2 on usage errors; 1 on failed checks or I/O errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bellobs/qudit.hpp"
#include "bellobs/suites.hpp"
#include "json.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void log_summary(const std::vector<bellobs::VerificationReport>& reports) {
  for (const auto& r : reports) {
    std::cerr << "[" << (r.pass() ? "ok  " : "FAIL") << "] " << r.suite << ' ' << r.parameters.dump()
              << '\n';
    for (const auto& c : r.checks) {
      if (!c.pass) {
        std::cerr << "       " << c.name << ": " << c.error << " vs " << c.tolerance << '\n';
      }
    }
  }
}

int emit_reports(const std::vector<bellobs::VerificationReport>& reports, const std::string& out) {
  const auto doc = bellobs::reports_document(reports);
  const std::string text = doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write " << out << '\n';
      return kExitFail;
    }
    f << text;
    std::cerr << "wrote " << out << '\n';
  }
  log_summary(reports);
  return doc["pass"].get<bool>() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell-observable construction and verification"};
  app.require_subcommand(1);

  auto* qudit = app.add_subcommand("qudit", "qudit Bell-basis tools");
  qudit->require_subcommand(1);

  std::string d_range = "2..16";
  double qudit_tol = 1e-11;
  std::string qudit_out;
  auto* qverify = qudit->add_subcommand("verify", "verify the Bell map for a range of d");
  qverify->add_option("--d", d_range, "dimension A or range A..B")->capture_default_str();
  qverify->add_option("--tol", qudit_tol, "tolerance")->capture_default_str();
  qverify->add_option("--out", qudit_out, "write JSON report here instead of stdout");

  std::size_t synth_d = 2;
  std::string synth_format = "json";
  std::string synth_out;
  auto* qsynth = qudit->add_subcommand("synth", "export Z, W, F, V and the Bell vectors");
  qsynth->add_option("--d", synth_d, "dimension")->required();
  qsynth->add_option("--format", synth_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  qsynth->add_option("--out", synth_out, "json: file (default stdout); csv: directory");

  auto* cv = app.add_subcommand("cv", "continuous-variable tools");
  cv->require_subcommand(1);
  std::string cutoffs = "20,30,40";
  bellobs::suites::CvOptions cv_opts;
  std::string cv_out;
  auto* cverify = cv->add_subcommand("verify", "symplectic and Fock-space verification");
  cverify->add_option("--cutoffs", cutoffs, "comma-separated Fock cutoffs")->capture_default_str();
  cverify->add_option("--tol", cv_opts.tol_exact, "tolerance of the exact symplectic check")
      ->capture_default_str();
  cverify->add_option("--out", cv_out, "write JSON report here instead of stdout");

  bool params_as_json = false;
  auto* params = app.add_subcommand("params", "print the optical-chain constants");
  params->add_flag("--json", params_as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (qverify->parsed()) {
      bellobs::suites::QuditOptions opts;
      try {
        std::tie(opts.d_min, opts.d_max) = bellobs::suites::parse_d_range(d_range);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      opts.tol = qudit_tol;
      std::cerr << "qudit verify: d = " << opts.d_min << ".." << opts.d_max << '\n';
      return emit_reports(bellobs::suites::qudit_verify(opts), qudit_out);
    }
    if (qsynth->parsed()) {
      if (synth_d < 2) throw UsageError("--d must be at least 2");
      const auto gs = bellobs::qudit::make_gateset(synth_d);
      if (synth_format == "json") {
        if (synth_out.empty()) {
          std::cout << bellobs::qudit::gateset_to_json(gs) << '\n';
        } else {
          bellobs::qudit::write_gateset_json(gs, synth_out);
          std::cerr << "wrote " << synth_out << '\n';
        }
      } else {
        if (synth_out.empty()) throw UsageError("--format csv needs --out DIR");
        bellobs::qudit::write_gateset_csv(gs, synth_out);
        std::cerr << "wrote CSV files to " << synth_out << '\n';
      }
      return 0;
    }
    if (cverify->parsed()) {
      try {
        cv_opts.cutoffs = bellobs::suites::parse_cutoffs(cutoffs);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::cerr << "cv verify: cutoffs " << cutoffs << '\n';
      return emit_reports(bellobs::suites::cv_verify(cv_opts), cv_out);
    }
    if (params->parsed()) {
      if (params_as_json) {
        std::cout << bellobs::suites::params_json().dump(2) << '\n';
      } else {
        std::cout << bellobs::suites::params_text();
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
