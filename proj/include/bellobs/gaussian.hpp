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

// Cutoff-free layer: two-mode Gaussian unitaries as 4x4 real symplectic
// matrices, and the su(1,1) parameters of the optical controlled-shift chain.
//
// Conventions:
//   quadratures  x = (a + a^dagger)/2,  p = (i/2)(a^dagger - a),  [x, p] = i/2
//   ordering     (x_a, p_a, x_b, p_b)
//   action       Heisenberg, q -> U^dagger q U = M q, so U1 U2 maps to M1 M2

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bellobs/matrix.hpp"

namespace bellobs::gaussian {

class SymplecticMatrix {
 public:
  using Entries = std::array<double, 16>;

  SymplecticMatrix();  // identity
  explicit SymplecticMatrix(const Entries& row_major) : m_(row_major) {}

  static SymplecticMatrix identity() { return SymplecticMatrix(); }

  double operator()(std::size_t i, std::size_t j) const { return m_[i * 4 + j]; }
  double& operator()(std::size_t i, std::size_t j) { return m_[i * 4 + j]; }
  const Entries& entries() const noexcept { return m_; }

  SymplecticMatrix transpose() const;
  friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b);

 private:
  Entries m_;
};

/// Commutation form with entries +-1/2: Omega_ij = -i [q_i, q_j].
const SymplecticMatrix& omega();

/// max |M Omega M^T - Omega|.
double symplectic_defect(const SymplecticMatrix& m);

double max_abs_diff(const SymplecticMatrix& a, const SymplecticMatrix& b);

enum class Mode { a = 0, b = 1 };

/// S(r) = exp((log r / 2)(c^dagger^2 - c^2)) on one mode: x -> r x, p -> p / r.
struct Squeezer {
  Mode mode;
  double r;
};
/// exp(theta (a^dagger b - a b^dagger)).
struct BeamSplitter {
  double theta;
};
/// exp(-i theta c^dagger c) on one mode.
struct PhaseShift {
  Mode mode;
  double theta;
};
/// exp(kappa (a^dagger b^dagger - a b)).
struct TwoModeSqueezer {
  double kappa;
};
/// exp(-i s 2 p_a x_b), the controlled shift x_a -> x_a + s x_b.
struct ControlledShift {
  double strength = 1.0;
};

using Element = std::variant<Squeezer, BeamSplitter, PhaseShift, TwoModeSqueezer, ControlledShift>;

/// A product U1 U2 ... Un, listed left to right as written.
using Circuit = std::vector<Element>;

SymplecticMatrix symplectic_of(const Element& element);
SymplecticMatrix symplectic_of(const Circuit& circuit);

/// Builds an element from a textual kind ("squeezer_a", "squeezer_b",
/// "beam_splitter", "phase_a", "phase_b", "opa", "controlled_shift") and one
/// parameter. Throws std::invalid_argument for an unknown kind.
Element element_from_name(std::string_view kind, double parameter);
std::string element_name(const Element& element);

struct DecompositionParams {
  double alpha;
  double beta;
  double gamma;
  double r1;
  double r2;
  double tau1;
  double g;
};

DecompositionParams decomposition_params();

/// Entrywise max difference between exp(-(i/2)K_-) and
/// exp(i alpha K_x) exp(beta K_y) exp(gamma K_z) in the 2x2 realization
/// K_x = (i/2) sigma_x, K_y = (i/2) sigma_y, K_z = (1/2) sigma_z.
double verify_su11_2x2(const DecompositionParams& params);

/// The two sides of the 2x2 identity, exposed for inspection.
struct Su11Sides {
  ComplexMatrix lhs;
  ComplexMatrix rhs;
};
Su11Sides su11_2x2_sides(const DecompositionParams& params);

/// Symplectic action of exp(-2i X_{pi/2} (x) X_0).
SymplecticMatrix target_C_symplectic();

/// The five optical factors V (S(r1) (x) S(r1)^dagger) OPA BS(beta/2)
/// (S(r2)^dagger (x) S(r2)), in operator order. Each squeezer pair is a
/// single factor of two elements.
std::vector<Circuit> optical_chain_factors(const DecompositionParams& params);

/// Entrywise max distance between the composed chain and the target.
double verify_decomposition_symplectic(const DecompositionParams& params);

/// Same check with factor `skip` (0..4) removed.
double ablated_decomposition_error(const DecompositionParams& params, std::size_t skip);

struct HardwareReport {
  double tau1;
  double g;
  double tau_from_beta;          // cos^2(beta / 2)
  double field_gain_from_alpha;  // cosh(alpha / 2)
  double power_gain_from_alpha;  // cosh^2(alpha / 2)
  bool tau_consistent;
  bool g_consistent;
  std::vector<std::string> consistency_notes;
};

/// Compares the optical-scheme constants with the decomposition exponents.
/// Discrepancies are reported, never thrown.
HardwareReport hardware_params(const DecompositionParams& params);

}  // namespace bellobs::gaussian
