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

#include "bellobs/matrix.hpp"

#include <lapacke.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace bellobs {

namespace {

std::string shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + shape(a) + " vs " + shape(b));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("ComplexMatrix: dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("ComplexMatrix: dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw DimensionError("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("ComplexMatrix: dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ComplexMatrix: ragged initializer");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::basis_column(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw std::out_of_range("basis_column: index " + std::to_string(index) + " >= " +
                            std::to_string(dim));
  }
  ComplexMatrix v(dim, 1);
  v(index, 0) = 1.0;
  return v;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace: non-square " + shape(*this));
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw DimensionError("block: window exceeds " + shape(*this));
  }
  ComplexMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

ComplexMatrix ComplexMatrix::select(std::span<const std::size_t> row_idx,
                                    std::span<const std::size_t> col_idx) const {
  ComplexMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      if (row_idx[i] >= rows_ || col_idx[j] >= cols_) {
        throw std::out_of_range("select: index outside " + shape(*this));
      }
      out(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::column(std::size_t j) const { return block(0, j, rows_, 1); }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + shape(a) + " * " + shape(b));
  }
  const std::size_t n = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t m = b.cols();
  ComplexMatrix c(n, m);
  const Complex* pa = a.data().data();
  const Complex* pb = b.data().data();
  Complex* pc = c.data().data();

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    Complex* crow = pc + i * m;
    const Complex* arow = pa + i * inner;
    for (std::size_t k = 0; k < inner; ++k) {
      const Complex aik = arow[k];
      if (aik == Complex{}) continue;
      const Complex* brow = pb + k * m;
      // Spelled-out product: std::complex operator* goes through the
      // NaN-recovering libgcc helper, which blocks vectorization.
      const double ar = aik.real(), ai = aik.imag();
      for (std::size_t j = 0; j < m; ++j) {
        const double br = brow[j].real(), bi = brow[j].imag();
        crow[j] += Complex(ar * br - ai * bi, ar * bi + ai * br);
      }
    }
  }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  ComplexMatrix out(ar * br, ac * bc);
  const std::size_t out_cols = ac * bc;
  Complex* po = out.data().data();

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t row = 0; row < static_cast<std::ptrdiff_t>(ar * br); ++row) {
    const std::size_t i = static_cast<std::size_t>(row) / br;
    const std::size_t k = static_cast<std::size_t>(row) % br;
    Complex* orow = po + row * out_cols;
    for (std::size_t j = 0; j < ac; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t l = 0; l < bc; ++l) orow[j * bc + l] = aij * b(k, l);
    }
  }
  return out;
}

ComplexMatrix kron_apply(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& m) {
  if (a.cols() * b.cols() != m.rows()) {
    throw DimensionError("kron_apply: (" + shape(a) + " (x) " + shape(b) + ") * " + shape(m));
  }
  const std::size_t ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  const std::size_t ncols = m.cols();
  ComplexMatrix out(ar * br, ncols);
  const ComplexMatrix bt = b.transpose();

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t col = 0; col < static_cast<std::ptrdiff_t>(ncols); ++col) {
    // X is ac x bc with X(j, l) = m(j*bc + l, col); compute a * X * b^T.
    std::vector<Complex> x(ac * bc);
    for (std::size_t r = 0; r < ac * bc; ++r) x[r] = m(r, col);
    std::vector<Complex> ax(ar * bc);
    for (std::size_t i = 0; i < ar; ++i) {
      for (std::size_t j = 0; j < ac; ++j) {
        const Complex aij = a(i, j);
        if (aij == Complex{}) continue;
        for (std::size_t l = 0; l < bc; ++l) ax[i * bc + l] += aij * x[j * bc + l];
      }
    }
    for (std::size_t i = 0; i < ar; ++i) {
      for (std::size_t k = 0; k < br; ++k) {
        Complex s = 0.0;
        for (std::size_t l = 0; l < bc; ++l) s += ax[i * bc + l] * bt(l, k);
        out(i * br + k, col) = s;
      }
    }
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

double one_norm(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) best = std::max(best, std::abs(a.data()[k] - b.data()[k]));
  return best;
}

double unitarity_defect(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("unitarity_defect: non-square " + shape(a));
  return max_abs_diff(matmul(a.adjoint(), a), ComplexMatrix::identity(a.rows()));
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b) - matmul(b, a);
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows()) {
    throw DimensionError("solve: " + shape(a) + " \\ " + shape(b));
  }
  const auto n = static_cast<lapack_int>(a.rows());
  const auto nrhs = static_cast<lapack_int>(b.cols());
  ComplexMatrix lu = a;
  ComplexMatrix x = b;
  std::vector<lapack_int> pivots(a.rows());
  const lapack_int info = LAPACKE_zgesv(
      LAPACK_ROW_MAJOR, n, nrhs, reinterpret_cast<lapack_complex_double*>(lu.data().data()), n,
      pivots.data(), reinterpret_cast<lapack_complex_double*>(x.data().data()), nrhs);
  if (info != 0) {
    throw std::runtime_error("solve: zgesv failed with info=" + std::to_string(info));
  }
  return x;
}

namespace {

// Pade coefficients b_0..b_m for degrees 3, 5, 7, 9, 13 (Higham 2005).
constexpr std::array<double, 4> kPade3 = {120., 60., 12., 1.};
constexpr std::array<double, 6> kPade5 = {30240., 15120., 3360., 420., 30., 1.};
constexpr std::array<double, 8> kPade7 = {17297280., 8648640., 1995840., 277200.,
                                          25200.,    1512.,    56.,      1.};
constexpr std::array<double, 10> kPade9 = {17643225600., 8821612800., 2075673600., 302702400.,
                                           30270240.,    2162160.,    110880.,     3960.,
                                           90.,          1.};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000., 32382376266240000., 7771770303897600., 1187353796428800.,
    129060195264000.,   10559470521600.,    670442572800.,     33522128640.,
    1323241920.,        40840800.,          960960.,           16380.,
    182.,               1.};

// theta_m: largest 1-norm for which the degree-m approximant is accurate to
// unit roundoff in double precision.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

void axpy(ComplexMatrix& y, double s, const ComplexMatrix& x) {
  auto yd = y.data();
  auto xd = x.data();
  for (std::size_t k = 0; k < yd.size(); ++k) yd[k] += s * xd[k];
}

template <std::size_t N>
ComplexMatrix pade_small(const ComplexMatrix& a, const std::array<double, N>& b) {
  // Degrees 3..9: U = A * sum_{odd} b_k A^{k-1}, V = sum_{even} b_k A^k.
  const std::size_t n = a.rows();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix a2 = matmul(a, a);
  std::vector<ComplexMatrix> even_powers{id, a2};
  while (even_powers.size() * 2 < N) even_powers.push_back(matmul(even_powers.back(), a2));

  ComplexMatrix u_inner = ComplexMatrix::zeros(n, n);
  ComplexMatrix v = ComplexMatrix::zeros(n, n);
  for (std::size_t k = 0; k < N; ++k) {
    if (k % 2 == 0) {
      axpy(v, b[k], even_powers[k / 2]);
    } else {
      axpy(u_inner, b[k], even_powers[k / 2]);
    }
  }
  const ComplexMatrix u = matmul(a, u_inner);
  return solve(v - u, v + u);
}

ComplexMatrix pade13(const ComplexMatrix& a) {
  const auto& b = kPade13;
  const std::size_t n = a.rows();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix a2 = matmul(a, a);
  const ComplexMatrix a4 = matmul(a2, a2);
  const ComplexMatrix a6 = matmul(a4, a2);

  ComplexMatrix tmp = ComplexMatrix::zeros(n, n);
  axpy(tmp, b[13], a6);
  axpy(tmp, b[11], a4);
  axpy(tmp, b[9], a2);
  ComplexMatrix u = matmul(a6, tmp);
  axpy(u, b[7], a6);
  axpy(u, b[5], a4);
  axpy(u, b[3], a2);
  axpy(u, b[1], id);
  u = matmul(a, u);

  tmp = ComplexMatrix::zeros(n, n);
  axpy(tmp, b[12], a6);
  axpy(tmp, b[10], a4);
  axpy(tmp, b[8], a2);
  ComplexMatrix v = matmul(a6, tmp);
  axpy(v, b[6], a6);
  axpy(v, b[4], a4);
  axpy(v, b[2], a2);
  axpy(v, b[0], id);
  return solve(v - u, v + u);
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("expm: non-square " + shape(a));
  const double norm = one_norm(a);
  if (norm == 0.0) return ComplexMatrix::identity(a.rows());
  if (norm <= kTheta3) return pade_small(a, kPade3);
  if (norm <= kTheta5) return pade_small(a, kPade5);
  if (norm <= kTheta7) return pade_small(a, kPade7);
  if (norm <= kTheta9) return pade_small(a, kPade9);

  int squarings = 0;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  }
  ComplexMatrix scaled = std::ldexp(1.0, -squarings) * a;
  ComplexMatrix result = pade13(scaled);
  for (int k = 0; k < squarings; ++k) result = matmul(result, result);
  return result;
}

TridiagonalEigen eigh_tridiagonal(std::span<const double> diagonal,
                                  std::span<const double> off_diagonal) {
  const std::size_t n = diagonal.size();
  if (n == 0 || off_diagonal.size() + 1 != n) {
    throw DimensionError("eigh_tridiagonal: need n diagonal and n-1 off-diagonal entries");
  }
  TridiagonalEigen out;
  out.values.assign(diagonal.begin(), diagonal.end());
  std::vector<double> e(off_diagonal.begin(), off_diagonal.end());
  e.push_back(0.0);
  out.vectors.assign(n * n, 0.0);
  const auto ln = static_cast<lapack_int>(n);
  const lapack_int info = LAPACKE_dstev(LAPACK_ROW_MAJOR, 'V', ln, out.values.data(), e.data(),
                                        out.vectors.data(), ln);
  if (info != 0) {
    throw std::runtime_error("eigh_tridiagonal: dstev failed with info=" + std::to_string(info));
  }
  return out;
}

namespace reference {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("reference::matmul: " + shape(a) + " * " + shape(b));
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace reference

std::string to_string(const ComplexMatrix& m, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[[" : " [");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).real() << (m(i, j).imag() < 0 ? "-" : "+") << std::abs(m(i, j).imag()) << "i";
    }
    os << (i + 1 == m.rows() ? "]]" : "]\n");
  }
  return os.str();
}

}  // namespace bellobs
