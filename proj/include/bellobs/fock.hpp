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

// Truncated Fock-space realization of the bosonic objects: ladder operators,
// quadratures, Gaussian unitaries, regularized Dirac states and the optical
// controlled-shift chain.
//
// A cutoff N keeps photon numbers 0..N in each mode. Two-mode operators act on
// |n_a>|n_b> with n_a the slow index. Truncated quadratic generators stay
// exactly anti-Hermitian, so their exponentials are unitary at any cutoff;
// truncation instead shows up as population pushed onto the top Fock level,
// which is what TruncationWarning records.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bellobs/matrix.hpp"

namespace bellobs::fock {

inline constexpr double kTruncationThreshold = 1e-8;

struct TruncationWarning {
  std::string source;
  double defect;
};

class FockOperator {
 public:
  FockOperator(std::size_t cutoff, std::size_t modes, ComplexMatrix matrix);

  std::size_t cutoff() const noexcept { return cutoff_; }
  std::size_t modes() const noexcept { return modes_; }
  std::size_t levels() const noexcept { return cutoff_ + 1; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<TruncationWarning>& warnings() const noexcept { return warnings_; }

  void add_warning(TruncationWarning w) { warnings_.push_back(std::move(w)); }
  void add_warnings(const std::vector<TruncationWarning>& ws);

 private:
  std::size_t cutoff_;
  std::size_t modes_;
  ComplexMatrix matrix_;
  std::vector<TruncationWarning> warnings_;
};

struct RegularizedState {
  std::size_t cutoff;
  std::size_t modes;
  std::vector<Complex> amplitudes;
  std::string regularization;  // "lambda" or "squeezing"
  double parameter;
  std::vector<TruncationWarning> warnings;

  double norm() const;
  ComplexMatrix as_column() const;
};

/// Index of |n_a>|n_b> in the two-mode basis.
inline std::size_t two_mode_index(std::size_t cutoff, std::size_t na, std::size_t nb) {
  return na * (cutoff + 1) + nb;
}

/// Two-mode basis indices with n_a, n_b <= max_each.
std::vector<std::size_t> low_energy_indices(std::size_t cutoff, std::size_t max_each);
/// Two-mode basis indices with n_a + n_b <= max_total.
std::vector<std::size_t> total_photon_indices(std::size_t cutoff, std::size_t max_total);

/// Max over inputs with every mode <= N/2 of the population sent to a state
/// with some mode at level N.
double boundary_leakage(const ComplexMatrix& op, std::size_t cutoff, std::size_t modes);

// Single-mode objects. Throw std::invalid_argument when cutoff < 1.

std::pair<FockOperator, FockOperator> mode_ops(std::size_t cutoff);
FockOperator number_operator(std::size_t cutoff);
/// X_phi = (exp(i phi) a^dagger + exp(-i phi) a) / 2.
FockOperator quadrature(std::size_t cutoff, double phi);
/// D(alpha) = exp(alpha a^dagger - alpha^* a).
FockOperator displacement(std::size_t cutoff, Complex alpha);
/// S(r) = exp((log r / 2)(a^dagger^2 - a^2)); throws for r <= 0.
FockOperator squeezer(std::size_t cutoff, double r);
/// exp(-i theta a^dagger a).
FockOperator phase_shift(std::size_t cutoff, double theta);

// Two-mode objects.

FockOperator embed_a(const FockOperator& op);
FockOperator embed_b(const FockOperator& op);
FockOperator tensor(const FockOperator& on_a, const FockOperator& on_b);

/// exp(theta (a^dagger b - a b^dagger)), built per total-photon-number block.
FockOperator beam_splitter(std::size_t cutoff, double theta);
FockOperator beam_splitter_5050(std::size_t cutoff);
/// exp(kappa (a^dagger b^dagger - a b)), built per photon-difference block.
FockOperator two_mode_squeezer(std::size_t cutoff, double kappa);
/// The OPA factor exp(-(alpha/2)(a^dagger b^dagger - a b)).
FockOperator opa(std::size_t cutoff, double alpha_param);

/// Generators of su(1,1) on two modes:
///   K_x = (a^dag b^dag + a b)/2, K_y = (i/2)(a b^dag + a^dag b),
///   K_z = (a^dag^2 - a^2 + b^dag^2 - b^2)/4.
FockOperator su11_kx(std::size_t cutoff);
FockOperator su11_ky(std::size_t cutoff);
FockOperator su11_kz(std::size_t cutoff);

/// -2i X_{pi/2} (x) X_0, the generator of the controlled shift.
FockOperator controlled_shift_generator(std::size_t cutoff);
/// exp(-2i X_{pi/2} (x) X_0), evaluated by spectral substitution of the
/// truncated quadratures.
FockOperator controlled_shift(std::size_t cutoff);

/// C = V (S(r1) (x) S(r1)^dag) OPA BS(beta/2) (S(r2)^dag (x) S(r2)).
FockOperator assemble_C(std::size_t cutoff);

/// max |a - phase * b| over the listed two-mode indices, the phase taken from
/// the largest-modulus entry of b's block.
double block_distance_mod_phase(const ComplexMatrix& a, const ComplexMatrix& b,
                                const std::vector<std::size_t>& indices);
/// max |(C P)^dag (C P) - I| with P selecting `indices` as columns.
double unitarity_defect_on(const ComplexMatrix& op, const std::vector<std::size_t>& indices);
/// (U P)^dag Q (U P) for P selecting `indices`; the Heisenberg image of Q on
/// the low-energy block.
ComplexMatrix heisenberg_block(const ComplexMatrix& u, const ComplexMatrix& q,
                               const std::vector<std::size_t>& indices);

// Regularized Dirac states.

enum class TruncationPolicy { strict, warn };

/// Normalized sqrt(1-lambda^2) sum_n lambda^n |n, n>, the regularized |I>>.
/// Strict policy throws std::domain_error when the discarded tail mass
/// lambda^(2(N+1)) exceeds kTruncationThreshold.
RegularizedState identity_doubleket(std::size_t cutoff, double lambda,
                                    TruncationPolicy policy = TruncationPolicy::strict);

/// (D(z) (x) I) applied to identity_doubleket(lambda), as a state.
RegularizedState displaced_doubleket(std::size_t cutoff, double lambda, Complex z);

struct ResidualReport {
  double residual;
  std::vector<TruncationWarning> warnings;
};
/// || (a - b^dagger - z) |D(z)>>_lambda ||.
ResidualReport heterodyne_eigen_residual(std::size_t cutoff, double lambda, Complex z);

/// exp(+i phi a^dagger a) D(x) S(s)|0>, normalized: the regularized
/// eigenvector of X_phi with eigenvalue x. Throws for s outside (0, 1].
RegularizedState quad_eigenstate_approx(std::size_t cutoff, double x, double phi, double s);

/// lambda = (1 - s^2)/(1 + s^2): the two-mode squeezing produced by a 50-50
/// splitter acting on orthogonally squeezed vacua of strength s.
double matched_lambda(double s);

struct EntbsReport {
  double fidelity;            // against (D(x+iy) (x) I)|lambda>>
  double symmetric_fidelity;  // against (D(z/2) (x) D(z/2)^T)|lambda>>
  double lambda;
  std::vector<TruncationWarning> warnings;
};

/// Beam-splitter image of |x/sqrt2>_0 (x) |y/sqrt2>_{pi/2} compared with the
/// regularized |D(x+iy)>> at the matched lambda.
EntbsReport verify_entbs(std::size_t cutoff, double x, double y, double s);

/// Fidelity against (D(x+iy) (x) I)|lambda>> for an arbitrary lambda.
double entbs_fidelity_at(std::size_t cutoff, double x, double y, double s, double lambda);

}  // namespace bellobs::fock
