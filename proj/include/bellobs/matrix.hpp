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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellobs {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Raised when operand shapes do not conform.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense complex matrix with row-major logical indexing.
///
/// Entry (i, j) lives at data()[i * cols() + j]. This ordering is part of the
/// interface: vectorization of operators into double-kets reads rows in order.
class ComplexMatrix {
 public:
  ComplexMatrix() : ComplexMatrix(1, 1) {}
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const Complex> entries);
  /// Column vector with a single unit entry.
  static ComplexMatrix basis_column(std::size_t dim, std::size_t index);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  /// Copy of rows [r0, r0+nr) and columns [c0, c0+nc).
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Submatrix picking the listed rows and columns, in the listed order.
  ComplexMatrix select(std::span<const std::size_t> row_idx,
                       std::span<const std::size_t> col_idx) const;
  ComplexMatrix column(std::size_t j) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Kernels. Each is OpenMP-parallel over output rows; results are bitwise
// identical for any thread count because every output entry is accumulated by
// one thread in a fixed order.

/// Standard matrix product. Zero entries of `a` are skipped, so sparse left
/// operands (ladder operators, block-diagonal unitaries) are cheap.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; block (i, j) of the result is a(i, j) * b, matching the
/// |m>|n> ordering with m the slow index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// kron(a, b) * m without forming the Kronecker product. Each column of `m`
/// is read as vec(X) and mapped to vec(a X b^T).
ComplexMatrix kron_apply(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& m);

/// Matrix exponential by scaling and squaring with Pade approximants.
ComplexMatrix expm(const ComplexMatrix& a);

/// Solves a * x = b for square `a` (LU with partial pivoting).
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);
double one_norm(const ComplexMatrix& a);
/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |(a^dagger a - I)_ij|.
double unitarity_defect(const ComplexMatrix& a);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigen-decomposition of a real symmetric tridiagonal matrix. Eigenvalues
/// ascend; eigenvectors are the columns of `vectors` (row-major, n x n).
struct TridiagonalEigen {
  std::vector<double> values;
  std::vector<double> vectors;
};
TridiagonalEigen eigh_tridiagonal(std::span<const double> diagonal,
                                  std::span<const double> off_diagonal);

/// Serial, textbook implementations kept as test oracles and benchmark
/// baselines. Never called from library code.
namespace reference {
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
}  // namespace reference

std::string to_string(const ComplexMatrix& m, int precision = 4);

}  // namespace bellobs
