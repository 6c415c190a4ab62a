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

// Operator <-> vector correspondence |A>> = sum_mn A_mn |m>|n>.
//
// Transposition and conjugation are always taken in the computational basis.

#pragma once

#include <cstddef>
#include <vector>

#include "bellobs/matrix.hpp"

namespace bellobs {

/// Vector in H_a (x) H_b, amplitudes ordered |m>|n> with m the slow index.
class DoubleKet {
 public:
  DoubleKet(std::size_t dim_a, std::size_t dim_b, std::vector<Complex> amplitudes);

  std::size_t dim_a() const noexcept { return dim_a_; }
  std::size_t dim_b() const noexcept { return dim_b_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }

  double norm() const;
  /// Euclidean inner product <this|other>, antilinear in the first slot.
  Complex inner(const DoubleKet& other) const;
  DoubleKet scaled(Complex s) const;
  /// Column-vector view as a (dim_a * dim_b) x 1 matrix.
  ComplexMatrix as_column() const;

  friend bool operator==(const DoubleKet&, const DoubleKet&) = default;

 private:
  std::size_t dim_a_;
  std::size_t dim_b_;
  std::vector<Complex> amplitudes_;
};

DoubleKet vec(const ComplexMatrix& a);
ComplexMatrix unvec(const DoubleKet& v);

/// Hilbert-Schmidt product Tr[a^dagger b].
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// (a (x) b)|c>> evaluated as |a c b^T>>.
DoubleKet apply_sandwich(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c);

/// Tr_1[|a>><<b|] = a^T b^*.
ComplexMatrix ptrace_first(const ComplexMatrix& a, const ComplexMatrix& b);
/// Tr_2[|a>><<b|] = a b^dagger.
ComplexMatrix ptrace_second(const ComplexMatrix& a, const ComplexMatrix& b);

/// True iff both reduced states of |v> are within `tol` (Frobenius) of I/d.
/// Throws std::invalid_argument for non-square dims or if |v| deviates from 1
/// by more than `tol`.
bool is_maximally_entangled(const DoubleKet& v, double tol);

}  // namespace bellobs
