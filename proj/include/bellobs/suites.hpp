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

// Verification suites driven by the command-line tool.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bellobs/report.hpp"

namespace bellobs::suites {

struct QuditOptions {
  std::size_t d_min = 2;
  std::size_t d_max = 16;
  double tol = 1e-11;
};

/// One report per dimension, ordered by d. Dimensions are evaluated in
/// parallel; the output does not depend on the thread count.
std::vector<VerificationReport> qudit_verify(const QuditOptions& opts);
VerificationReport qudit_verify_one(std::size_t d, double tol);

struct CvOptions {
  std::vector<std::size_t> cutoffs{20, 30, 40};
  double tol_exact = 1e-12;
  double tol_su11 = 1e-14;
};

/// Cutoff-free checks first, then one Fock report per cutoff, then a sweep
/// report comparing cutoffs.
std::vector<VerificationReport> cv_verify(const CvOptions& opts);

/// Constants of the optical chain as a JSON object.
nlohmann::json params_json();
/// Human-readable dump of the same values plus consistency notes.
std::string params_text();

/// "A..B" or "A" -> [A, B]. Throws std::invalid_argument on malformed input
/// or A < 2 or A > B.
std::pair<std::size_t, std::size_t> parse_d_range(const std::string& text);
/// "n1,n2,..." -> cutoffs. Throws std::invalid_argument when empty or any
/// entry is not an integer >= 4 (the smallest cutoff holding the test block).
std::vector<std::size_t> parse_cutoffs(const std::string& text);

}  // namespace bellobs::suites
