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

// Shift-and-multiply Bell basis for a qudit of dimension d and the
// controlled-shift unitary that maps the local basis F|m> (x) |n> onto it.

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "bellobs/double_ket.hpp"
#include "bellobs/matrix.hpp"

namespace bellobs::qudit {

struct GateSet {
  std::size_t d;
  ComplexMatrix z;  // clock: sum_j w^j |j><j|, w = exp(2 pi i / d)
  ComplexMatrix w;  // shift: sum_j |j+1 mod d><j|
  ComplexMatrix f;  // Fourier: (1/sqrt d) sum_nj w^{nj} |n><j|
  ComplexMatrix v;  // controlled shift: sum_i |i><i| (x) W^i
};

/// Throws std::invalid_argument for d < 2.
GateSet make_gateset(std::size_t d);

/// Shift-and-multiply operator with entries w^{im} delta_{i+n mod d, j}.
/// With W|j> = |j+1> this is Z^m W^{-n}; the shift direction is the one for
/// which V = sum_i |i><i| (x) W^i maps |e_m, n>> onto the Bell vectors. For
/// d = 2 it coincides with Z^m W^n. Throws std::out_of_range unless
/// 0 <= m, n < d.
ComplexMatrix u_mn(const GateSet& gs, std::size_t m, std::size_t n);

/// Closed-form entries U(m,n)_ij = w^{im} delta_{i+n mod d, j}.
ComplexMatrix u_mn_closed_form(std::size_t d, std::size_t m, std::size_t n);

/// d^{-1/2} |U(m, n)>>.
DoubleKet bell_vector(const GateSet& gs, std::size_t m, std::size_t n);

/// Builds V from its action on the complete local basis,
/// V = d^{-1/2} sum_mn |U(m,n)>><<e_m, n|. Independent of GateSet::v.
ComplexMatrix formal_v_oracle(const GateSet& gs);

/// max over (m, n) of || V (F|m> (x) |n>) - bell_vector(m, n) ||.
double verify_bell_map(const GateSet& gs);

/// max over pairs of |<<U(m,n)|U(m',n')>> - d delta delta|.
double verify_basis_orthonormality(const GateSet& gs);

/// max |G - I| for the Gram matrix of the d^2 Bell vectors.
double bell_gram_error(const GateSet& gs);

/// Product U(m,n) U(m',n') = phase * U(m+m', n+n'). Returns the phase.
Complex group_law_phase(const GateSet& gs, std::size_t m, std::size_t n, std::size_t m2,
                        std::size_t n2);

/// JSON document {"d": ..., "matrices": {"Z": [[[re, im], ...]], ...},
/// "bell_vectors": [{"m":..,"n":..,"amplitudes": [[re, im], ...]}]}.
std::string gateset_to_json(const GateSet& gs);
GateSet gateset_from_json(const std::string& text);
void write_gateset_json(const GateSet& gs, const std::filesystem::path& path);
GateSet read_gateset_json(const std::filesystem::path& path);

/// One CSV file per object in `dir` (Z.csv, W.csv, F.csv, V.csv, bell.csv).
/// Matrix files hold one `row,col,re,im` line per entry after a header.
void write_gateset_csv(const GateSet& gs, const std::filesystem::path& dir);

}  // namespace bellobs::qudit
