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

#include "bellobs/suites.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "bellobs/fock.hpp"
#include "bellobs/gaussian.hpp"
#include "bellobs/qudit.hpp"

namespace bellobs::suites {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string key(const char* fmt, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a);
  return buf;
}

std::string key(const char* fmt, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

void add_warnings(VerificationReport& r, const std::vector<fock::TruncationWarning>& ws) {
  for (const auto& w : ws) r.warnings.push_back({w.source, w.defect});
}

std::size_t parse_positive(std::string_view s, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument(std::string(what) + ": '" + std::string(s) + "' is not an integer");
  }
  return value;
}

constexpr std::size_t kBlockPhotons = 4;
constexpr double kEntbsSweep[] = {0.6, 0.5, 0.4, 0.3};

}  // namespace

VerificationReport qudit_verify_one(std::size_t d, double tol) {
  const auto start = Clock::now();
  VerificationReport r;
  r.suite = "qudit";
  r.parameters = {{"d", d}, {"tol", tol}};
  const auto gs = qudit::make_gateset(d);
  r.check_at_most("bell_map", qudit::verify_bell_map(gs), tol);
  r.check_at_most("basis_orthonormality", qudit::verify_basis_orthonormality(gs), tol);
  r.check_at_most("bell_gram", qudit::bell_gram_error(gs), tol);
  r.check_at_most("V_formal==V_controlled", max_abs_diff(qudit::formal_v_oracle(gs), gs.v), tol);
  if (d == 2) {
    const ComplexMatrix cnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    r.check_at_most("V==CNOT", max_abs_diff(gs.v, cnot), 1e-14);
  }
  r.duration_s = seconds_since(start);
  return r;
}

std::vector<VerificationReport> qudit_verify(const QuditOptions& opts) {
  if (opts.d_min < 2 || opts.d_min > opts.d_max) {
    throw std::invalid_argument("qudit verify: need 2 <= d_min <= d_max");
  }
  const std::size_t count = opts.d_max - opts.d_min + 1;
  std::vector<VerificationReport> out(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(count); ++k) {
    out[k] = qudit_verify_one(opts.d_min + static_cast<std::size_t>(k), opts.tol);
  }
  return out;
}

std::vector<VerificationReport> cv_verify(const CvOptions& opts) {
  if (opts.cutoffs.empty()) throw std::invalid_argument("cv verify: no cutoffs given");
  for (auto n : opts.cutoffs) {
    if (n < 4) throw std::invalid_argument("cv verify: cutoffs must be >= 4");
  }
  std::vector<VerificationReport> reports;
  const auto params = gaussian::decomposition_params();

  {
    const auto start = Clock::now();
    VerificationReport r;
    r.suite = "cv_exact";
    r.parameters = {{"tol_exact", opts.tol_exact}, {"tol_su11", opts.tol_su11}};
    r.check_at_most("su11_2x2", gaussian::verify_su11_2x2(params), opts.tol_su11);
    r.check_at_most("decomposition_symplectic", gaussian::verify_decomposition_symplectic(params),
                    opts.tol_exact);
    r.check_at_most("target_symplectic_invariant",
                    gaussian::symplectic_defect(gaussian::target_C_symplectic()), 1e-13);
    for (std::size_t k = 0; k < 5; ++k) {
      r.measurements[key("ablation_error[factor=%.0f]", double(k))] =
          gaussian::ablated_decomposition_error(params, k);
    }
    r.duration_s = seconds_since(start);
    reports.push_back(std::move(r));
  }

  std::vector<std::size_t> cutoffs = opts.cutoffs;
  std::vector<double> distances(cutoffs.size());
  std::vector<VerificationReport> per_cutoff(cutoffs.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(cutoffs.size()); ++k) {
    const std::size_t n = cutoffs[k];
    const auto start = Clock::now();
    VerificationReport& r = per_cutoff[k];
    r.suite = "cv_fock";
    r.parameters = {{"cutoff", n}};

    const fock::FockOperator c = fock::assemble_C(n);
    const fock::FockOperator target = fock::controlled_shift(n);
    const auto block = fock::low_energy_indices(n, kBlockPhotons);
    distances[k] = fock::block_distance_mod_phase(c.matrix(), target.matrix(), block);
    r.measurements["C_lowblock_distance"] = distances[k];
    r.measurements["C_vacuum_column_distance"] =
        max_abs_diff(c.matrix().column(0), target.matrix().column(0));
    r.check_at_most("C_unitarity_low_energy",
                    fock::unitarity_defect_on(c.matrix(), fock::total_photon_indices(n, n / 2)),
                    1e-6);
    add_warnings(r, c.warnings());

    std::vector<double> displaced;
    for (double s : kEntbsSweep) {
      const auto centered = fock::verify_entbs(n, 0.0, 0.0, s);
      const auto shifted = fock::verify_entbs(n, 1.0, -0.5, s);
      r.measurements[key("entbs_fidelity[x=0,y=0,s=%.1f]", s)] = centered.fidelity;
      r.measurements[key("entbs_fidelity[x=1,y=-0.5,s=%.1f]", s)] = shifted.fidelity;
      r.measurements[key("entbs_symmetric_fidelity[x=1,y=-0.5,s=%.1f]", s)] =
          shifted.symmetric_fidelity;
      displaced.push_back(shifted.fidelity);
      if (s == 0.5) r.check_above("entbs_fidelity[x=0,y=0,s=0.5]", centered.fidelity, 0.999);
    }
    r.check_true("entbs_fidelity_increases_as_s_decreases",
                 std::is_sorted(displaced.begin(), displaced.end()) &&
                     std::adjacent_find(displaced.begin(), displaced.end()) == displaced.end());

    // Residual at z = 0 against the untruncated closed form sqrt((1-l)/(1+l)).
    const double lam_lo = 0.5, lam_hi = 0.9;
    const auto res_lo = fock::heterodyne_eigen_residual(n, lam_lo, 0.0);
    const auto res_lo_z = fock::heterodyne_eigen_residual(n, lam_lo, 1.0);
    const auto res_hi = fock::heterodyne_eigen_residual(n, lam_hi, 0.0);
    const auto res_hi_z = fock::heterodyne_eigen_residual(n, lam_hi, 1.0);
    r.measurements[key("heterodyne_residual[lambda=%.1f,z=%.0f]", lam_lo, 0.0)] = res_lo.residual;
    r.measurements[key("heterodyne_residual[lambda=%.1f,z=%.0f]", lam_lo, 1.0)] = res_lo_z.residual;
    r.measurements[key("heterodyne_residual[lambda=%.1f,z=%.0f]", lam_hi, 0.0)] = res_hi.residual;
    r.measurements[key("heterodyne_residual[lambda=%.1f,z=%.0f]", lam_hi, 1.0)] = res_hi_z.residual;
    r.check_at_most("heterodyne_residual_closed_form[lambda=0.5]",
                    std::abs(res_lo.residual - std::sqrt((1 - lam_lo) / (1 + lam_lo))), 1e-10);
    r.check_true("heterodyne_residual_decreases_with_lambda", res_hi.residual < res_lo.residual);
    // z-independence is only asserted where D(z) itself is not truncated.
    const double z_spread = std::abs(res_lo.residual - res_lo_z.residual);
    if (res_lo_z.warnings.empty()) {
      r.check_at_most("heterodyne_residual_z_independent[lambda=0.5]", z_spread, 1e-8);
    } else {
      r.measurements["heterodyne_residual_z_spread[lambda=0.5]"] = z_spread;
    }
    add_warnings(r, res_lo_z.warnings);
    add_warnings(r, res_hi_z.warnings);

    r.duration_s = seconds_since(start);
  }
  for (auto& r : per_cutoff) reports.push_back(std::move(r));

  if (cutoffs.size() > 1) {
    VerificationReport r;
    r.suite = "cv_convergence";
    r.parameters = {{"cutoffs", cutoffs}, {"block_max_photons", kBlockPhotons}};
    std::vector<std::size_t> order(cutoffs.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](auto i, auto j) { return cutoffs[i] < cutoffs[j]; });
    bool strictly = true;
    for (std::size_t k = 1; k < order.size(); ++k) {
      strictly = strictly && distances[order[k]] < distances[order[k - 1]];
    }
    for (std::size_t k = 0; k < cutoffs.size(); ++k) {
      r.measurements[key("C_lowblock_distance[N=%.0f]", double(cutoffs[k]))] = distances[k];
    }
    r.check_true("C_distance_strictly_decreasing", strictly);
    reports.push_back(std::move(r));
  }
  return reports;
}

nlohmann::json params_json() {
  const auto p = gaussian::decomposition_params();
  const auto hw = gaussian::hardware_params(p);
  return {{"schema", kReportSchema},
          {"alpha", p.alpha},
          {"beta", p.beta},
          {"gamma", p.gamma},
          {"r1", p.r1},
          {"r2", p.r2},
          {"tau1", p.tau1},
          {"g", p.g},
          {"tau_from_beta", hw.tau_from_beta},
          {"field_gain_from_alpha", hw.field_gain_from_alpha},
          {"power_gain_from_alpha", hw.power_gain_from_alpha},
          {"tau_consistent", hw.tau_consistent},
          {"g_consistent", hw.g_consistent},
          {"consistency_notes", hw.consistency_notes}};
}

std::string params_text() {
  const auto p = gaussian::decomposition_params();
  const auto hw = gaussian::hardware_params(p);
  std::ostringstream os;
  char buf[128];
  auto line = [&](const char* name, double v) {
    std::snprintf(buf, sizeof buf, "%-6s = %.17g\n", name, v);
    os << buf;
  };
  line("alpha", p.alpha);
  line("beta", p.beta);
  line("gamma", p.gamma);
  line("r1", p.r1);
  line("r2", p.r2);
  line("tau1", p.tau1);
  line("g", p.g);
  for (const auto& note : hw.consistency_notes) os << "# " << note << '\n';
  return os.str();
}

std::pair<std::size_t, std::size_t> parse_d_range(const std::string& text) {
  const auto dots = text.find("..");
  std::size_t lo = 0, hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_positive(text, "--d");
  } else {
    lo = parse_positive(std::string_view(text).substr(0, dots), "--d");
    hi = parse_positive(std::string_view(text).substr(dots + 2), "--d");
  }
  if (lo < 2 || lo > hi) {
    throw std::invalid_argument("--d: need 2 <= A <= B, got '" + text + "'");
  }
  return {lo, hi};
}

std::vector<std::size_t> parse_cutoffs(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = std::string_view(text).substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t n = parse_positive(piece, "--cutoffs");
    if (n < 4) throw std::invalid_argument("--cutoffs: each cutoff must be at least 4");
    out.push_back(n);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("--cutoffs: empty list");
  return out;
}

}  // namespace bellobs::suites
