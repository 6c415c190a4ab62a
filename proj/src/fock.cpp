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

#include "bellobs/fock.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

#include "bellobs/double_ket.hpp"
#include "bellobs/gaussian.hpp"

namespace bellobs::fock {

namespace {

void require_cutoff(std::size_t cutoff) {
  if (cutoff < 1) throw std::invalid_argument("fock: cutoff must be >= 1");
}

void warn_if_leaky(FockOperator& op, const std::string& source) {
  const double leak = boundary_leakage(op.matrix(), op.cutoff(), op.modes());
  if (leak > kTruncationThreshold) op.add_warning({source, leak});
}

// Population on the top two levels of any mode. Two levels, because squeezed
// states only occupy one parity.
double top_population(const std::vector<Complex>& amps, std::size_t cutoff, std::size_t modes) {
  const std::size_t levels = cutoff + 1;
  const std::size_t edge = cutoff >= 1 ? cutoff - 1 : 0;
  double s = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    const bool top = modes == 1 ? k >= edge : (k / levels >= edge || k % levels >= edge);
    if (top) s += std::norm(amps[k]);
  }
  return s;
}

void normalize(std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  const double inv = 1.0 / std::sqrt(s);
  for (auto& z : v) z *= inv;
}

std::vector<Complex> column_vector(const ComplexMatrix& m) {
  const auto d = m.data();
  return {d.begin(), d.end()};
}

struct Coupling {
  std::size_t na;
  std::size_t nb;
  Complex amplitude;
};

// Two-mode unitary exp(G) for a generator that preserves `label(na, nb)`.
// `apply(na, nb)` lists the nonzero components of G|na, nb>.
class BlockUnitary {
 public:
  BlockUnitary(std::size_t cutoff, const std::function<long(std::size_t, std::size_t)>& label,
               const std::function<std::vector<Coupling>(std::size_t, std::size_t)>& apply)
      : cutoff_(cutoff) {
    const std::size_t levels = cutoff + 1;
    std::map<long, std::vector<std::size_t>> groups;
    for (std::size_t na = 0; na < levels; ++na)
      for (std::size_t nb = 0; nb < levels; ++nb)
        groups[label(na, nb)].push_back(two_mode_index(cutoff, na, nb));

    for (auto& [key, members] : groups) {
      const std::size_t n = members.size();
      ComplexMatrix g(n, n);
      for (std::size_t col = 0; col < n; ++col) {
        const std::size_t na = members[col] / levels, nb = members[col] % levels;
        for (const auto& c : apply(na, nb)) {
          if (label(c.na, c.nb) != key) {
            throw std::logic_error("BlockUnitary: generator does not conserve the block label");
          }
          const std::size_t target = two_mode_index(cutoff, c.na, c.nb);
          const auto row = std::lower_bound(members.begin(), members.end(), target) - members.begin();
          g(static_cast<std::size_t>(row), col) += c.amplitude;
        }
      }
      blocks_.push_back({std::move(members), expm(g)});
    }
  }

  std::vector<Complex> apply(const std::vector<Complex>& v) const {
    std::vector<Complex> out(v.size());
    for (const auto& b : blocks_) {
      for (std::size_t i = 0; i < b.members.size(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < b.members.size(); ++j) s += b.unitary(i, j) * v[b.members[j]];
        out[b.members[i]] = s;
      }
    }
    return out;
  }

  ComplexMatrix dense() const {
    const std::size_t dim = (cutoff_ + 1) * (cutoff_ + 1);
    ComplexMatrix out(dim, dim);
    for (const auto& b : blocks_)
      for (std::size_t i = 0; i < b.members.size(); ++i)
        for (std::size_t j = 0; j < b.members.size(); ++j)
          out(b.members[i], b.members[j]) = b.unitary(i, j);
    return out;
  }

 private:
  struct Block {
    std::vector<std::size_t> members;
    ComplexMatrix unitary;
  };
  std::size_t cutoff_;
  std::vector<Block> blocks_;
};

BlockUnitary beam_splitter_blocks(std::size_t cutoff, double theta) {
  return BlockUnitary(
      cutoff, [](std::size_t na, std::size_t nb) { return static_cast<long>(na + nb); },
      [cutoff, theta](std::size_t na, std::size_t nb) {
        std::vector<Coupling> out;
        // theta a^dag b
        if (nb > 0 && na < cutoff) {
          out.push_back({na + 1, nb - 1, theta * std::sqrt(double(na + 1) * double(nb))});
        }
        // -theta a b^dag
        if (na > 0 && nb < cutoff) {
          out.push_back({na - 1, nb + 1, -theta * std::sqrt(double(na) * double(nb + 1))});
        }
        return out;
      });
}

BlockUnitary two_mode_squeezer_blocks(std::size_t cutoff, double kappa) {
  return BlockUnitary(
      cutoff,
      [](std::size_t na, std::size_t nb) { return static_cast<long>(na) - static_cast<long>(nb); },
      [cutoff, kappa](std::size_t na, std::size_t nb) {
        std::vector<Coupling> out;
        if (na < cutoff && nb < cutoff) {
          out.push_back({na + 1, nb + 1, kappa * std::sqrt(double(na + 1) * double(nb + 1))});
        }
        if (na > 0 && nb > 0) {
          out.push_back({na - 1, nb - 1, -kappa * std::sqrt(double(na) * double(nb))});
        }
        return out;
      });
}

ComplexMatrix annihilation(std::size_t cutoff) {
  ComplexMatrix a(cutoff + 1, cutoff + 1);
  for (std::size_t n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

FockOperator two_mode(std::size_t cutoff, ComplexMatrix m) {
  return FockOperator(cutoff, 2, std::move(m));
}

}  // namespace

FockOperator::FockOperator(std::size_t cutoff, std::size_t modes, ComplexMatrix matrix)
    : cutoff_(cutoff), modes_(modes), matrix_(std::move(matrix)) {
  if (modes != 1 && modes != 2) throw std::invalid_argument("FockOperator: modes must be 1 or 2");
  const std::size_t dim = modes == 1 ? cutoff + 1 : (cutoff + 1) * (cutoff + 1);
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw DimensionError("FockOperator: matrix is " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + ", expected " + std::to_string(dim));
  }
}

void FockOperator::add_warnings(const std::vector<TruncationWarning>& ws) {
  warnings_.insert(warnings_.end(), ws.begin(), ws.end());
}

double RegularizedState::norm() const {
  double s = 0.0;
  for (const auto& z : amplitudes) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix RegularizedState::as_column() const {
  return ComplexMatrix(amplitudes.size(), 1, amplitudes);
}

std::vector<std::size_t> low_energy_indices(std::size_t cutoff, std::size_t max_each) {
  std::vector<std::size_t> idx;
  const std::size_t top = std::min(max_each, cutoff);
  for (std::size_t na = 0; na <= top; ++na)
    for (std::size_t nb = 0; nb <= top; ++nb) idx.push_back(two_mode_index(cutoff, na, nb));
  return idx;
}

std::vector<std::size_t> total_photon_indices(std::size_t cutoff, std::size_t max_total) {
  std::vector<std::size_t> idx;
  for (std::size_t na = 0; na <= cutoff; ++na)
    for (std::size_t nb = 0; nb <= cutoff; ++nb)
      if (na + nb <= max_total) idx.push_back(two_mode_index(cutoff, na, nb));
  return idx;
}

double boundary_leakage(const ComplexMatrix& op, std::size_t cutoff, std::size_t modes) {
  const std::size_t levels = cutoff + 1;
  const std::size_t half = cutoff / 2;
  auto is_low = [&](std::size_t k) {
    return modes == 1 ? k <= half : (k / levels <= half && k % levels <= half);
  };
  auto is_boundary = [&](std::size_t k) {
    return modes == 1 ? k == cutoff : (k / levels == cutoff || k % levels == cutoff);
  };
  double worst = 0.0;
  for (std::size_t col = 0; col < op.cols(); ++col) {
    if (!is_low(col)) continue;
    double s = 0.0;
    for (std::size_t row = 0; row < op.rows(); ++row) {
      if (is_boundary(row)) s += std::norm(op(row, col));
    }
    worst = std::max(worst, s);
  }
  return worst;
}

std::pair<FockOperator, FockOperator> mode_ops(std::size_t cutoff) {
  require_cutoff(cutoff);
  ComplexMatrix a = annihilation(cutoff);
  ComplexMatrix ad = a.adjoint();
  return {FockOperator(cutoff, 1, std::move(a)), FockOperator(cutoff, 1, std::move(ad))};
}

FockOperator number_operator(std::size_t cutoff) {
  require_cutoff(cutoff);
  ComplexMatrix n(cutoff + 1, cutoff + 1);
  for (std::size_t k = 0; k <= cutoff; ++k) n(k, k) = static_cast<double>(k);
  return FockOperator(cutoff, 1, std::move(n));
}

FockOperator quadrature(std::size_t cutoff, double phi) {
  require_cutoff(cutoff);
  const ComplexMatrix a = annihilation(cutoff);
  ComplexMatrix x = 0.5 * std::polar(1.0, phi) * a.adjoint() + 0.5 * std::polar(1.0, -phi) * a;
  return FockOperator(cutoff, 1, std::move(x));
}

FockOperator displacement(std::size_t cutoff, Complex alpha) {
  require_cutoff(cutoff);
  const ComplexMatrix a = annihilation(cutoff);
  FockOperator op(cutoff, 1, expm(alpha * a.adjoint() - std::conj(alpha) * a));
  warn_if_leaky(op, "displacement");
  return op;
}

FockOperator squeezer(std::size_t cutoff, double r) {
  require_cutoff(cutoff);
  if (!(r > 0.0)) throw std::invalid_argument("squeezer: r must be positive");
  const ComplexMatrix a = annihilation(cutoff);
  const ComplexMatrix ad = a.adjoint();
  FockOperator op(cutoff, 1, expm(0.5 * std::log(r) * (matmul(ad, ad) - matmul(a, a))));
  warn_if_leaky(op, "squeezer");
  return op;
}

FockOperator phase_shift(std::size_t cutoff, double theta) {
  require_cutoff(cutoff);
  ComplexMatrix p(cutoff + 1, cutoff + 1);
  for (std::size_t n = 0; n <= cutoff; ++n) p(n, n) = std::polar(1.0, -theta * static_cast<double>(n));
  return FockOperator(cutoff, 1, std::move(p));
}

FockOperator embed_a(const FockOperator& op) {
  if (op.modes() != 1) throw std::invalid_argument("embed_a: expected a single-mode operator");
  FockOperator out(op.cutoff(), 2, kron(op.matrix(), ComplexMatrix::identity(op.levels())));
  out.add_warnings(op.warnings());
  return out;
}

FockOperator embed_b(const FockOperator& op) {
  if (op.modes() != 1) throw std::invalid_argument("embed_b: expected a single-mode operator");
  FockOperator out(op.cutoff(), 2, kron(ComplexMatrix::identity(op.levels()), op.matrix()));
  out.add_warnings(op.warnings());
  return out;
}

FockOperator tensor(const FockOperator& on_a, const FockOperator& on_b) {
  if (on_a.modes() != 1 || on_b.modes() != 1 || on_a.cutoff() != on_b.cutoff()) {
    throw std::invalid_argument("tensor: expected single-mode operators with equal cutoff");
  }
  FockOperator out(on_a.cutoff(), 2, kron(on_a.matrix(), on_b.matrix()));
  out.add_warnings(on_a.warnings());
  out.add_warnings(on_b.warnings());
  return out;
}

FockOperator beam_splitter(std::size_t cutoff, double theta) {
  require_cutoff(cutoff);
  return two_mode(cutoff, beam_splitter_blocks(cutoff, theta).dense());
}

FockOperator beam_splitter_5050(std::size_t cutoff) {
  return beam_splitter(cutoff, std::numbers::pi / 4);
}

FockOperator two_mode_squeezer(std::size_t cutoff, double kappa) {
  require_cutoff(cutoff);
  FockOperator op = two_mode(cutoff, two_mode_squeezer_blocks(cutoff, kappa).dense());
  warn_if_leaky(op, "two_mode_squeezer");
  return op;
}

FockOperator opa(std::size_t cutoff, double alpha_param) {
  return two_mode_squeezer(cutoff, -alpha_param / 2);
}

FockOperator su11_kx(std::size_t cutoff) {
  require_cutoff(cutoff);
  const ComplexMatrix a = annihilation(cutoff);
  const ComplexMatrix ad = a.adjoint();
  return two_mode(cutoff, 0.5 * (kron(ad, ad) + kron(a, a)));
}

FockOperator su11_ky(std::size_t cutoff) {
  require_cutoff(cutoff);
  const ComplexMatrix a = annihilation(cutoff);
  const ComplexMatrix ad = a.adjoint();
  return two_mode(cutoff, Complex(0.0, 0.5) * (kron(a, ad) + kron(ad, a)));
}

FockOperator su11_kz(std::size_t cutoff) {
  require_cutoff(cutoff);
  const ComplexMatrix a = annihilation(cutoff);
  const ComplexMatrix ad = a.adjoint();
  const ComplexMatrix single = matmul(ad, ad) - matmul(a, a);
  const ComplexMatrix id = ComplexMatrix::identity(cutoff + 1);
  return two_mode(cutoff, 0.25 * (kron(single, id) + kron(id, single)));
}

FockOperator controlled_shift_generator(std::size_t cutoff) {
  const ComplexMatrix x = quadrature(cutoff, 0.0).matrix();
  const ComplexMatrix p = quadrature(cutoff, std::numbers::pi / 2).matrix();
  return two_mode(cutoff, Complex(0.0, -2.0) * kron(p, x));
}

FockOperator controlled_shift(std::size_t cutoff) {
  require_cutoff(cutoff);
  const std::size_t levels = cutoff + 1;
  // Truncated X_0 is real symmetric tridiagonal with off-diagonal sqrt(n)/2,
  // and X_{pi/2} = Phi X_0 Phi^dag with Phi = diag(i^n).
  std::vector<double> diag(levels, 0.0), off(cutoff);
  for (std::size_t n = 1; n <= cutoff; ++n) off[n - 1] = 0.5 * std::sqrt(static_cast<double>(n));
  const TridiagonalEigen eig = eigh_tridiagonal(diag, off);

  ComplexMatrix q(levels, levels), w(levels, levels);
  static constexpr Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t n = 0; n < levels; ++n) {
    for (std::size_t k = 0; k < levels; ++k) {
      q(n, k) = eig.vectors[n * levels + k];
      w(n, k) = kPowersOfI[n % 4] * q(n, k);
    }
  }
  // exp(-2i p (x) x) = (W (x) Q) diag(exp(-2i xi_j xi_k)) (W (x) Q)^dag.
  ComplexMatrix right = kron(w.adjoint(), q.transpose());
  for (std::size_t j = 0; j < levels; ++j) {
    for (std::size_t k = 0; k < levels; ++k) {
      const Complex phase = std::polar(1.0, -2.0 * eig.values[j] * eig.values[k]);
      const std::size_t row = j * levels + k;
      for (std::size_t col = 0; col < right.cols(); ++col) right(row, col) *= phase;
    }
  }
  FockOperator op = two_mode(cutoff, kron_apply(w, q, right));
  warn_if_leaky(op, "controlled_shift");
  return op;
}

FockOperator assemble_C(std::size_t cutoff) {
  require_cutoff(cutoff);
  const auto params = gaussian::decomposition_params();
  const FockOperator s1 = squeezer(cutoff, params.r1);
  const FockOperator s2 = squeezer(cutoff, params.r2);

  std::vector<TruncationWarning> warnings = s1.warnings();
  warnings.insert(warnings.end(), s2.warnings().begin(), s2.warnings().end());

  // Right to left: (S(r2)^dag (x) S(r2)), BS(beta/2), OPA, (S(r1) (x) S(r1)^dag), V.
  ComplexMatrix m = kron(s2.matrix().adjoint(), s2.matrix());
  m = matmul(beam_splitter_blocks(cutoff, params.beta / 2).dense(), m);
  const FockOperator amp = opa(cutoff, params.alpha);
  warnings.insert(warnings.end(), amp.warnings().begin(), amp.warnings().end());
  m = matmul(amp.matrix(), m);
  m = kron_apply(s1.matrix(), s1.matrix().adjoint(), m);
  m = matmul(beam_splitter_blocks(cutoff, std::numbers::pi / 4).dense(), m);

  FockOperator c = two_mode(cutoff, std::move(m));
  c.add_warnings(warnings);
  warn_if_leaky(c, "assemble_C");
  return c;
}

double block_distance_mod_phase(const ComplexMatrix& a, const ComplexMatrix& b,
                                const std::vector<std::size_t>& indices) {
  const ComplexMatrix ab = a.select(indices, indices);
  const ComplexMatrix bb = b.select(indices, indices);
  std::size_t best = 0;
  for (std::size_t k = 1; k < bb.size(); ++k) {
    if (std::abs(bb.data()[k]) > std::abs(bb.data()[best])) best = k;
  }
  Complex phase = 1.0;
  if (std::abs(bb.data()[best]) > 0.0 && std::abs(ab.data()[best]) > 0.0) {
    phase = ab.data()[best] / bb.data()[best];
    phase /= std::abs(phase);
  }
  return max_abs_diff(ab, phase * bb);
}

double unitarity_defect_on(const ComplexMatrix& op, const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> all(op.rows());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  const ComplexMatrix cols = op.select(all, indices);
  return max_abs_diff(matmul(cols.adjoint(), cols), ComplexMatrix::identity(indices.size()));
}

ComplexMatrix heisenberg_block(const ComplexMatrix& u, const ComplexMatrix& q,
                               const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> all(u.rows());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  const ComplexMatrix cols = u.select(all, indices);
  return matmul(cols.adjoint(), matmul(q, cols));
}

RegularizedState identity_doubleket(std::size_t cutoff, double lambda, TruncationPolicy policy) {
  require_cutoff(cutoff);
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::invalid_argument("identity_doubleket: lambda must lie in (0, 1)");
  }
  const std::size_t levels = cutoff + 1;
  RegularizedState st{cutoff, 2, std::vector<Complex>(levels * levels), "lambda", lambda, {}};
  double amp = 1.0;
  for (std::size_t n = 0; n < levels; ++n) {
    st.amplitudes[two_mode_index(cutoff, n, n)] = amp;
    amp *= lambda;
  }
  normalize(st.amplitudes);
  const double tail = std::pow(lambda, 2.0 * static_cast<double>(levels));
  if (tail > kTruncationThreshold) {
    if (policy == TruncationPolicy::strict) {
      throw std::domain_error("identity_doubleket: lambda " + std::to_string(lambda) +
                              " too close to 1 for cutoff " + std::to_string(cutoff) +
                              " (tail mass " + std::to_string(tail) + ")");
    }
    st.warnings.push_back({"identity_doubleket", tail});
  }
  return st;
}

RegularizedState displaced_doubleket(std::size_t cutoff, double lambda, Complex z) {
  RegularizedState st = identity_doubleket(cutoff, lambda, TruncationPolicy::warn);
  const FockOperator d = displacement(cutoff, z);
  const std::size_t levels = cutoff + 1;
  // (D (x) I)|Lambda>> = |D Lambda>>.
  const ComplexMatrix shifted = matmul(d.matrix(), ComplexMatrix(levels, levels, st.amplitudes));
  st.amplitudes = column_vector(shifted);
  st.warnings.insert(st.warnings.end(), d.warnings().begin(), d.warnings().end());
  return st;
}

ResidualReport heterodyne_eigen_residual(std::size_t cutoff, double lambda, Complex z) {
  const RegularizedState st = displaced_doubleket(cutoff, lambda, z);
  const std::size_t levels = cutoff + 1;
  const ComplexMatrix m(levels, levels, st.amplitudes);
  const ComplexMatrix a = annihilation(cutoff);
  // (a (x) I)|M>> = |a M>>, (I (x) b^dag)|M>> = |M (a^dag)^T>> = |M a>>.
  ComplexMatrix r = matmul(a, m) - matmul(m, a);
  r -= z * m;
  return {frobenius_norm(r), st.warnings};
}

RegularizedState quad_eigenstate_approx(std::size_t cutoff, double x, double phi, double s) {
  require_cutoff(cutoff);
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("quad_eigenstate_approx: s must lie in (0, 1]");
  const FockOperator sq = squeezer(cutoff, s);
  const FockOperator d = displacement(cutoff, x);
  const FockOperator rot = phase_shift(cutoff, -phi);
  const ComplexMatrix v =
      matmul(rot.matrix(), matmul(d.matrix(), sq.matrix().column(0)));

  RegularizedState st{cutoff, 1, column_vector(v), "squeezing", s, {}};
  normalize(st.amplitudes);
  const double top = top_population(st.amplitudes, cutoff, 1);
  if (top > kTruncationThreshold) st.warnings.push_back({"quad_eigenstate_approx", top});
  return st;
}

double matched_lambda(double s) { return (1.0 - s * s) / (1.0 + s * s); }

namespace {

struct EntbsImage {
  std::vector<Complex> state;
  std::vector<TruncationWarning> warnings;
};

EntbsImage entbs_image(std::size_t cutoff, double x, double y, double s) {
  const double scale = 1.0 / std::sqrt(2.0);
  const RegularizedState in_a = quad_eigenstate_approx(cutoff, x * scale, 0.0, s);
  const RegularizedState in_b = quad_eigenstate_approx(cutoff, y * scale, std::numbers::pi / 2, s);
  const std::size_t levels = cutoff + 1;
  std::vector<Complex> product(levels * levels);
  for (std::size_t i = 0; i < levels; ++i)
    for (std::size_t j = 0; j < levels; ++j)
      product[two_mode_index(cutoff, i, j)] = in_a.amplitudes[i] * in_b.amplitudes[j];

  EntbsImage img{beam_splitter_blocks(cutoff, std::numbers::pi / 4).apply(product), {}};
  img.warnings = in_a.warnings;
  img.warnings.insert(img.warnings.end(), in_b.warnings.begin(), in_b.warnings.end());
  return img;
}

double fidelity(const std::vector<Complex>& target, const std::vector<Complex>& state) {
  Complex overlap = 0.0;
  double nt = 0.0, ns = 0.0;
  for (std::size_t k = 0; k < target.size(); ++k) {
    overlap += std::conj(target[k]) * state[k];
    nt += std::norm(target[k]);
    ns += std::norm(state[k]);
  }
  return std::norm(overlap) / (nt * ns);
}

}  // namespace

double entbs_fidelity_at(std::size_t cutoff, double x, double y, double s, double lambda) {
  const EntbsImage img = entbs_image(cutoff, x, y, s);
  return fidelity(displaced_doubleket(cutoff, lambda, Complex(x, y)).amplitudes, img.state);
}

EntbsReport verify_entbs(std::size_t cutoff, double x, double y, double s) {
  const EntbsImage img = entbs_image(cutoff, x, y, s);
  const double lambda = matched_lambda(s);
  const Complex z(x, y);

  const RegularizedState target = displaced_doubleket(cutoff, lambda, z);

  // Symmetric split D(z/2) Lambda D(z/2): the same Dirac limit, displacement
  // shared between the two modes.
  const std::size_t levels = cutoff + 1;
  const RegularizedState base = identity_doubleket(cutoff, lambda, TruncationPolicy::warn);
  const ComplexMatrix half = displacement(cutoff, 0.5 * z).matrix();
  const ComplexMatrix sym =
      matmul(matmul(half, ComplexMatrix(levels, levels, base.amplitudes)), half);

  EntbsReport rep{fidelity(target.amplitudes, img.state), fidelity(column_vector(sym), img.state),
                  lambda, img.warnings};
  rep.warnings.insert(rep.warnings.end(), target.warnings.begin(), target.warnings.end());
  return rep;
}

}  // namespace bellobs::fock
