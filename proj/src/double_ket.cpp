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

#include "bellobs/double_ket.hpp"

#include <cmath>
#include <string>

namespace bellobs {

DoubleKet::DoubleKet(std::size_t dim_a, std::size_t dim_b, std::vector<Complex> amplitudes)
    : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amplitudes)) {
  if (dim_a == 0 || dim_b == 0 || amplitudes_.size() != dim_a * dim_b) {
    throw DimensionError("DoubleKet: " + std::to_string(amplitudes_.size()) +
                         " amplitudes for dims " + std::to_string(dim_a) + "x" +
                         std::to_string(dim_b));
  }
}

double DoubleKet::norm() const {
  double s = 0.0;
  for (const auto& z : amplitudes_) s += std::norm(z);
  return std::sqrt(s);
}

Complex DoubleKet::inner(const DoubleKet& other) const {
  if (dim_a_ != other.dim_a_ || dim_b_ != other.dim_b_) {
    throw DimensionError("DoubleKet::inner: dimension mismatch");
  }
  Complex s = 0.0;
  for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
    s += std::conj(amplitudes_[k]) * other.amplitudes_[k];
  }
  return s;
}

DoubleKet DoubleKet::scaled(Complex s) const {
  DoubleKet out = *this;
  for (auto& z : out.amplitudes_) z *= s;
  return out;
}

ComplexMatrix DoubleKet::as_column() const {
  return ComplexMatrix(amplitudes_.size(), 1, amplitudes_);
}

DoubleKet vec(const ComplexMatrix& a) {
  const auto d = a.data();
  return DoubleKet(a.rows(), a.cols(), std::vector<Complex>(d.begin(), d.end()));
}

ComplexMatrix unvec(const DoubleKet& v) {
  const auto d = v.amplitudes();
  return ComplexMatrix(v.dim_a(), v.dim_b(), std::vector<Complex>(d.begin(), d.end()));
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: shape mismatch");
  }
  // Tr[a^dagger b] = sum_{ij} conj(a_ij) b_ij, without forming the product.
  Complex s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a.data()[k]) * b.data()[k];
  return s;
}

DoubleKet apply_sandwich(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  if (a.cols() != c.rows() || b.cols() != c.cols()) {
    throw DimensionError("apply_sandwich: nonconformable operands");
  }
  return vec(matmul(matmul(a, c), b.transpose()));
}

ComplexMatrix ptrace_first(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("ptrace_first: shape mismatch");
  }
  return matmul(a.transpose(), b.conjugate());
}

ComplexMatrix ptrace_second(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("ptrace_second: shape mismatch");
  }
  return matmul(a, b.adjoint());
}

bool is_maximally_entangled(const DoubleKet& v, double tol) {
  if (v.dim_a() != v.dim_b()) {
    throw DimensionError("is_maximally_entangled: subsystems must have equal dimension");
  }
  if (std::abs(v.norm() - 1.0) > tol) {
    throw std::invalid_argument("is_maximally_entangled: state not normalized (norm " +
                                std::to_string(v.norm()) + ")");
  }
  const std::size_t d = v.dim_a();
  const ComplexMatrix a = unvec(v);
  ComplexMatrix target = ComplexMatrix::identity(d);
  target *= 1.0 / static_cast<double>(d);
  const double e1 = frobenius_norm(ptrace_first(a, a) - target);
  const double e2 = frobenius_norm(ptrace_second(a, a) - target);
  return e1 <= tol && e2 <= tol;
}

}  // namespace bellobs
