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

#include "bellobs/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bellobs::qudit {

namespace {

using nlohmann::json;

Complex root_of_unity(std::size_t d, std::size_t k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % d) / static_cast<double>(d);
  return std::polar(1.0, angle);
}

ComplexMatrix power(const ComplexMatrix& m, std::size_t k) {
  ComplexMatrix out = ComplexMatrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) out = matmul(out, m);
  return out;
}

void check_index(const GateSet& gs, std::size_t m, std::size_t n) {
  if (m >= gs.d || n >= gs.d) {
    throw std::out_of_range("qudit: index (" + std::to_string(m) + ", " + std::to_string(n) +
                            ") outside [0, " + std::to_string(gs.d) + ")");
  }
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& rows) {
  const std::size_t r = rows.size();
  if (r == 0) throw std::invalid_argument("matrix json: no rows");
  const std::size_t c = rows.at(0).size();
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows.at(i).size() != c) throw std::invalid_argument("matrix json: ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      const auto& e = rows[i][j];
      m(i, j) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

void write_matrix_csv(const ComplexMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "row,col,re,im\n";
  char buf[128];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%.17g\n", i, j, m(i, j).real(), m(i, j).imag());
      out << buf;
    }
  }
}

}  // namespace

GateSet make_gateset(std::size_t d) {
  if (d < 2) throw std::invalid_argument("make_gateset: d must be >= 2, got " + std::to_string(d));
  GateSet gs{d, ComplexMatrix(d, d), ComplexMatrix(d, d), ComplexMatrix(d, d),
             ComplexMatrix(d * d, d * d)};
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) {
    gs.z(j, j) = root_of_unity(d, j);
    gs.w((j + 1) % d, j) = 1.0;
    for (std::size_t n = 0; n < d; ++n) gs.f(n, j) = scale * root_of_unity(d, n * j);
  }
  ComplexMatrix w_power = ComplexMatrix::identity(d);
  for (std::size_t i = 0; i < d; ++i) {
    ComplexMatrix projector(d, d);
    projector(i, i) = 1.0;
    gs.v += kron(projector, w_power);
    w_power = matmul(gs.w, w_power);
  }
  return gs;
}

ComplexMatrix u_mn(const GateSet& gs, std::size_t m, std::size_t n) {
  check_index(gs, m, n);
  return matmul(power(gs.z, m), power(gs.w.adjoint(), n));
}

ComplexMatrix u_mn_closed_form(std::size_t d, std::size_t m, std::size_t n) {
  ComplexMatrix u(d, d);
  for (std::size_t i = 0; i < d; ++i) u(i, (i + n) % d) = root_of_unity(d, i * m);
  return u;
}

DoubleKet bell_vector(const GateSet& gs, std::size_t m, std::size_t n) {
  return vec(u_mn(gs, m, n)).scaled(1.0 / std::sqrt(static_cast<double>(gs.d)));
}

ComplexMatrix formal_v_oracle(const GateSet& gs) {
  const std::size_t d = gs.d;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix v(d * d, d * d);
  for (std::size_t m = 0; m < d; ++m) {
    // |e_m> = F|m>; the local basis vector |e_m, n> has amplitude F(k, m) at k*d + n.
    for (std::size_t n = 0; n < d; ++n) {
      const DoubleKet target = vec(u_mn(gs, m, n));
      for (std::size_t row = 0; row < d * d; ++row) {
        const Complex t = target[row];
        if (t == Complex{}) continue;
        for (std::size_t k = 0; k < d; ++k) v(row, k * d + n) += scale * t * std::conj(gs.f(k, m));
      }
    }
  }
  return v;
}

double verify_bell_map(const GateSet& gs) {
  const std::size_t d = gs.d;
  const ComplexMatrix local = kron(gs.f, ComplexMatrix::identity(d));
  const ComplexMatrix image = matmul(gs.v, local);
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(d * d); ++idx) {
    const std::size_t m = static_cast<std::size_t>(idx) / d;
    const std::size_t n = static_cast<std::size_t>(idx) % d;
    const DoubleKet expected = bell_vector(gs, m, n);
    double s = 0.0;
    for (std::size_t row = 0; row < d * d; ++row) {
      s += std::norm(image(row, static_cast<std::size_t>(idx)) - expected[row]);
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

double verify_basis_orthonormality(const GateSet& gs) {
  const std::size_t d = gs.d;
  std::vector<ComplexMatrix> basis;
  basis.reserve(d * d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) basis.push_back(u_mn(gs, m, n));
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(basis.size()); ++p) {
    for (std::size_t q = 0; q < basis.size(); ++q) {
      const double expected = static_cast<std::size_t>(p) == q ? static_cast<double>(d) : 0.0;
      worst = std::max(worst, std::abs(hs_inner(basis[p], basis[q]) - expected));
    }
  }
  return worst;
}

double bell_gram_error(const GateSet& gs) {
  const std::size_t d = gs.d;
  std::vector<DoubleKet> vectors;
  vectors.reserve(d * d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) vectors.push_back(bell_vector(gs, m, n));
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(vectors.size()); ++p) {
    for (std::size_t q = 0; q < vectors.size(); ++q) {
      const double expected = static_cast<std::size_t>(p) == q ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(vectors[p].inner(vectors[q]) - expected));
    }
  }
  return worst;
}

Complex group_law_phase(const GateSet& gs, std::size_t m, std::size_t n, std::size_t m2,
                        std::size_t n2) {
  const ComplexMatrix product = matmul(u_mn(gs, m, n), u_mn(gs, m2, n2));
  const ComplexMatrix combined = u_mn(gs, (m + m2) % gs.d, (n + n2) % gs.d);
  // Both are monomial; the ratio of any nonzero entry of `combined` fixes the phase.
  for (std::size_t k = 0; k < combined.size(); ++k) {
    if (std::abs(combined.data()[k]) > 0.5) return product.data()[k] / combined.data()[k];
  }
  throw std::logic_error("group_law_phase: empty monomial");
}

std::string gateset_to_json(const GateSet& gs) {
  json doc;
  doc["d"] = gs.d;
  doc["matrices"] = {{"Z", matrix_to_json(gs.z)},
                     {"W", matrix_to_json(gs.w)},
                     {"F", matrix_to_json(gs.f)},
                     {"V", matrix_to_json(gs.v)}};
  json bells = json::array();
  for (std::size_t m = 0; m < gs.d; ++m) {
    for (std::size_t n = 0; n < gs.d; ++n) {
      const DoubleKet b = bell_vector(gs, m, n);
      json amps = json::array();
      for (const auto& z : b.amplitudes()) amps.push_back({z.real(), z.imag()});
      bells.push_back({{"m", m}, {"n", n}, {"amplitudes", std::move(amps)}});
    }
  }
  doc["bell_vectors"] = std::move(bells);
  return doc.dump();
}

GateSet gateset_from_json(const std::string& text) {
  const json doc = json::parse(text);
  const auto d = doc.at("d").get<std::size_t>();
  const auto& mats = doc.at("matrices");
  GateSet gs{d, matrix_from_json(mats.at("Z")), matrix_from_json(mats.at("W")),
             matrix_from_json(mats.at("F")), matrix_from_json(mats.at("V"))};
  if (gs.z.rows() != d || gs.w.rows() != d || gs.f.rows() != d || gs.v.rows() != d * d) {
    throw std::invalid_argument("gateset json: matrix sizes inconsistent with d");
  }
  return gs;
}

void write_gateset_json(const GateSet& gs, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << gateset_to_json(gs) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

GateSet read_gateset_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return gateset_from_json(ss.str());
}

void write_gateset_csv(const GateSet& gs, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  write_matrix_csv(gs.z, dir / "Z.csv");
  write_matrix_csv(gs.w, dir / "W.csv");
  write_matrix_csv(gs.f, dir / "F.csv");
  write_matrix_csv(gs.v, dir / "V.csv");

  std::ofstream out(dir / "bell.csv");
  if (!out) throw std::runtime_error("cannot write " + (dir / "bell.csv").string());
  out << "m,n,index,re,im\n";
  char buf[160];
  for (std::size_t m = 0; m < gs.d; ++m) {
    for (std::size_t n = 0; n < gs.d; ++n) {
      const DoubleKet b = bell_vector(gs, m, n);
      for (std::size_t k = 0; k < b.amplitudes().size(); ++k) {
        std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.17g,%.17g\n", m, n, k, b[k].real(),
                      b[k].imag());
        out << buf;
      }
    }
  }
}

}  // namespace bellobs::qudit
