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

#include "bellobs/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace bellobs::gaussian {

SymplecticMatrix::SymplecticMatrix() : m_{} {
  for (std::size_t i = 0; i < 4; ++i) m_[i * 4 + i] = 1.0;
}

SymplecticMatrix SymplecticMatrix::transpose() const {
  SymplecticMatrix t;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t(i, j) = (*this)(j, i);
  return t;
}

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  SymplecticMatrix c(SymplecticMatrix::Entries{});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

const SymplecticMatrix& omega() {
  static const SymplecticMatrix kOmega(SymplecticMatrix::Entries{
      0.0, 0.5, 0.0, 0.0,   //
      -0.5, 0.0, 0.0, 0.0,  //
      0.0, 0.0, 0.0, 0.5,   //
      0.0, 0.0, -0.5, 0.0});
  return kOmega;
}

double max_abs_diff(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < 16; ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

double symplectic_defect(const SymplecticMatrix& m) {
  return max_abs_diff(m * omega() * m.transpose(), omega());
}

namespace {

struct ElementAction {
  SymplecticMatrix operator()(const Squeezer& s) const {
    if (!(s.r > 0.0)) throw std::invalid_argument("squeezer: r must be positive");
    SymplecticMatrix m;
    const std::size_t i = 2 * static_cast<std::size_t>(s.mode);
    m(i, i) = s.r;
    m(i + 1, i + 1) = 1.0 / s.r;
    return m;
  }

  SymplecticMatrix operator()(const BeamSplitter& bs) const {
    // a -> a cos + b sin, b -> b cos - a sin; real mixing acts alike on x and p.
    const double c = std::cos(bs.theta), s = std::sin(bs.theta);
    return SymplecticMatrix(SymplecticMatrix::Entries{
        c, 0, s, 0,   //
        0, c, 0, s,   //
        -s, 0, c, 0,  //
        0, -s, 0, c});
  }

  SymplecticMatrix operator()(const PhaseShift& ps) const {
    // a -> exp(-i theta) a.
    SymplecticMatrix m;
    const std::size_t i = 2 * static_cast<std::size_t>(ps.mode);
    const double c = std::cos(ps.theta), s = std::sin(ps.theta);
    m(i, i) = c;
    m(i, i + 1) = s;
    m(i + 1, i) = -s;
    m(i + 1, i + 1) = c;
    return m;
  }

  SymplecticMatrix operator()(const TwoModeSqueezer& t) const {
    // a -> a cosh + b^dagger sinh, b -> b cosh + a^dagger sinh.
    const double c = std::cosh(t.kappa), s = std::sinh(t.kappa);
    return SymplecticMatrix(SymplecticMatrix::Entries{
        c, 0, s, 0,   //
        0, c, 0, -s,  //
        s, 0, c, 0,   //
        0, -s, 0, c});
  }

  SymplecticMatrix operator()(const ControlledShift& cs) const {
    SymplecticMatrix m;
    m(0, 2) = cs.strength;
    m(3, 1) = -cs.strength;
    return m;
  }
};

}  // namespace

SymplecticMatrix symplectic_of(const Element& element) { return std::visit(ElementAction{}, element); }

SymplecticMatrix symplectic_of(const Circuit& circuit) {
  SymplecticMatrix m;
  for (const auto& e : circuit) m = m * symplectic_of(e);
  return m;
}

Element element_from_name(std::string_view kind, double parameter) {
  if (kind == "squeezer_a") return Squeezer{Mode::a, parameter};
  if (kind == "squeezer_b") return Squeezer{Mode::b, parameter};
  if (kind == "beam_splitter") return BeamSplitter{parameter};
  if (kind == "phase_a") return PhaseShift{Mode::a, parameter};
  if (kind == "phase_b") return PhaseShift{Mode::b, parameter};
  if (kind == "opa") return TwoModeSqueezer{parameter};
  if (kind == "controlled_shift") return ControlledShift{parameter};
  throw std::invalid_argument("unknown Gaussian element kind '" + std::string(kind) + "'");
}

std::string element_name(const Element& element) {
  struct Namer {
    std::string operator()(const Squeezer& s) const {
      return s.mode == Mode::a ? "squeezer_a" : "squeezer_b";
    }
    std::string operator()(const BeamSplitter&) const { return "beam_splitter"; }
    std::string operator()(const PhaseShift& p) const {
      return p.mode == Mode::a ? "phase_a" : "phase_b";
    }
    std::string operator()(const TwoModeSqueezer&) const { return "opa"; }
    std::string operator()(const ControlledShift&) const { return "controlled_shift"; }
  };
  return std::visit(Namer{}, element);
}

DecompositionParams decomposition_params() {
  const double t = 2.0 - std::sqrt(3.0);
  DecompositionParams p{};
  p.alpha = -2.0 * std::atanh(t);
  p.beta = -2.0 * std::atan(t);
  p.gamma = std::log(std::sqrt(3.0) / 2.0);
  p.r1 = 1.0 / std::sqrt(2.0);
  p.r2 = std::pow(0.75, -0.25);
  p.tau1 = 1.0 / (4.0 * t);
  p.g = 1.0 / (2.0 * (3.0 - 2.0 * std::sqrt(3.0)));
  return p;
}

Su11Sides su11_2x2_sides(const DecompositionParams& params) {
  // exp(-(i/2) K_-) with K_- = K_x - i K_y = i sigma_-; the exponent (1/2) sigma_-
  // is nilpotent.
  ComplexMatrix lhs{{1.0, 0.0}, {0.5, 1.0}};

  // exp(i alpha K_x) = exp(-(alpha/2) sigma_x)
  const double ch = std::cosh(params.alpha / 2), sh = std::sinh(params.alpha / 2);
  ComplexMatrix ex{{ch, -sh}, {-sh, ch}};
  // exp(beta K_y) = exp(i (beta/2) sigma_y)
  const double c = std::cos(params.beta / 2), s = std::sin(params.beta / 2);
  ComplexMatrix ey{{c, s}, {-s, c}};
  // exp(gamma K_z) = exp((gamma/2) sigma_z)
  ComplexMatrix ez{{std::exp(params.gamma / 2), 0.0}, {0.0, std::exp(-params.gamma / 2)}};

  return {lhs, matmul(matmul(ex, ey), ez)};
}

double verify_su11_2x2(const DecompositionParams& params) {
  const auto sides = su11_2x2_sides(params);
  return bellobs::max_abs_diff(sides.lhs, sides.rhs);
}

SymplecticMatrix target_C_symplectic() { return symplectic_of(ControlledShift{1.0}); }

std::vector<Circuit> optical_chain_factors(const DecompositionParams& params) {
  return {
      {BeamSplitter{std::numbers::pi / 4}},
      {Squeezer{Mode::a, params.r1}, Squeezer{Mode::b, 1.0 / params.r1}},
      {TwoModeSqueezer{-params.alpha / 2}},
      {BeamSplitter{params.beta / 2}},
      {Squeezer{Mode::a, 1.0 / params.r2}, Squeezer{Mode::b, params.r2}},
  };
}

namespace {

double chain_error(const DecompositionParams& params, std::size_t skip) {
  SymplecticMatrix m;
  const auto factors = optical_chain_factors(params);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k == skip) continue;
    m = m * symplectic_of(factors[k]);
  }
  return max_abs_diff(m, target_C_symplectic());
}

}  // namespace

double verify_decomposition_symplectic(const DecompositionParams& params) {
  return chain_error(params, static_cast<std::size_t>(-1));
}

double ablated_decomposition_error(const DecompositionParams& params, std::size_t skip) {
  if (skip >= optical_chain_factors(params).size()) {
    throw std::out_of_range("ablated_decomposition_error: factor index " + std::to_string(skip));
  }
  return chain_error(params, skip);
}

HardwareReport hardware_params(const DecompositionParams& params) {
  HardwareReport r{};
  r.tau1 = params.tau1;
  r.g = params.g;
  r.tau_from_beta = std::pow(std::cos(params.beta / 2), 2);
  r.field_gain_from_alpha = std::cosh(params.alpha / 2);
  r.power_gain_from_alpha = r.field_gain_from_alpha * r.field_gain_from_alpha;
  r.tau_consistent = std::abs(r.tau1 - r.tau_from_beta) <= 1e-12;
  r.g_consistent = std::abs(r.g - r.field_gain_from_alpha) <= 1e-12;

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "tau1 = 1/(4(2-sqrt3)) = %.12f; cos^2(beta/2) = %.12f; %s", r.tau1,
                r.tau_from_beta, r.tau_consistent ? "consistent" : "MISMATCH");
  r.consistency_notes.emplace_back(buf);
  if (r.g < 0) {
    std::snprintf(buf, sizeof buf, "WARNING: g = 1/(2(3-2sqrt3)) = %.12f is negative", r.g);
    r.consistency_notes.emplace_back(buf);
  }
  std::snprintf(buf, sizeof buf,
                "OPA exponent alpha/2 gives field-amplitude gain cosh(alpha/2) = %.12f and "
                "power gain cosh^2(alpha/2) = %.12f; |g| %s the power gain",
                r.field_gain_from_alpha, r.power_gain_from_alpha,
                std::abs(std::abs(r.g) - r.power_gain_from_alpha) <= 1e-12 ? "equals"
                                                                          : "differs from");
  r.consistency_notes.emplace_back(buf);
  return r;
}

}  // namespace bellobs::gaussian
