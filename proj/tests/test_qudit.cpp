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


#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

#include "bellobs/qudit.hpp"
#include "json.hpp"

namespace bellobs::qudit {
namespace {

Complex omega_power(std::size_t d, std::size_t k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * double(k % d) / double(d));
}

// d^{-1/2} sum_i w^{im} |i>|n+i>, written out from the controlled-shift form.
std::vector<Complex> oracle_bell_image(std::size_t d, std::size_t m, std::size_t n) {
  std::vector<Complex> out(d * d);
  for (std::size_t i = 0; i < d; ++i) out[i * d + (n + i) % d] = omega_power(d, i * m) / std::sqrt(double(d));
  return out;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("bellobs_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::size_t count_lines(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

TEST(GateSetTest, RejectsDimensionBelowTwo) {
  EXPECT_THROW(make_gateset(0), std::invalid_argument);
  EXPECT_THROW(make_gateset(1), std::invalid_argument);
}

TEST(GateSetTest, ShiftIsCyclicForQutrit) {
  const auto gs = make_gateset(3);
  const ComplexMatrix expected{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  EXPECT_EQ(gs.w, expected);
  EXPECT_LE(std::abs(gs.z(1, 1) - omega_power(3, 1)), 1e-15);
}

TEST(GateSetTest, QubitVIsCnot) {
  const auto gs = make_gateset(2);
  const ComplexMatrix cnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  EXPECT_LE(max_abs_diff(gs.v, cnot), 1e-14);
}

TEST(GateSetTest, QubitBasisIsPauli) {
  const auto gs = make_gateset(2);
  const ComplexMatrix sx{{0, 1}, {1, 0}}, sz{{1, 0}, {0, -1}}, isy{{0, 1}, {-1, 0}};
  EXPECT_LE(max_abs_diff(u_mn(gs, 0, 0), ComplexMatrix::identity(2)), 1e-15);
  EXPECT_LE(max_abs_diff(u_mn(gs, 0, 1), sx), 1e-15);
  EXPECT_LE(max_abs_diff(u_mn(gs, 1, 0), sz), 1e-15);
  EXPECT_LE(max_abs_diff(u_mn(gs, 1, 1), isy), 1e-15);
}

TEST(GateSetTest, FourierIsUnitary) {
  for (std::size_t d = 2; d <= 9; ++d) EXPECT_LE(unitarity_defect(make_gateset(d).f), 1e-13);
}

TEST(UmnTest, IndexOutOfRangeThrows) {
  const auto gs = make_gateset(4);
  EXPECT_THROW(u_mn(gs, 4, 0), std::out_of_range);
  EXPECT_THROW(u_mn(gs, 0, 7), std::out_of_range);
}

class QuditDimTest : public ::testing::TestWithParam<std::size_t> {};

TEST_P(QuditDimTest, ProductMatchesMatrixElements) {
  const std::size_t d = GetParam();
  const auto gs = make_gateset(d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) {
      const auto u = u_mn(gs, m, n);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          const Complex expected = (i + n) % d == j ? omega_power(d, i * m) : Complex{};
          ASSERT_LE(std::abs(u(i, j) - expected), 1e-13) << m << n << i << j;
        }
      ASSERT_LE(max_abs_diff(u, u_mn_closed_form(d, m, n)), 1e-13);
    }
}

TEST_P(QuditDimTest, BellMapAgainstIndexSum) {
  const std::size_t d = GetParam();
  const auto gs = make_gateset(d);
  const auto image = matmul(gs.v, kron(gs.f, ComplexMatrix::identity(d)));
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) {
      const auto expected = oracle_bell_image(d, m, n);
      for (std::size_t k = 0; k < d * d; ++k) ASSERT_LE(std::abs(image(k, m * d + n) - expected[k]), 1e-12);
    }
  EXPECT_LE(verify_bell_map(gs), 1e-11);
}

TEST_P(QuditDimTest, FormalAndControlledVAgree) {
  const auto gs = make_gateset(GetParam());
  EXPECT_LE(max_abs_diff(formal_v_oracle(gs), gs.v), 1e-12);
  EXPECT_LE(unitarity_defect(gs.v), 1e-13);
}

TEST_P(QuditDimTest, BellBasisOrthonormal) {
  const auto gs = make_gateset(GetParam());
  EXPECT_LE(verify_basis_orthonormality(gs), 1e-11);
  EXPECT_LE(bell_gram_error(gs), 1e-12);
  for (std::size_t m = 0; m < gs.d; ++m) {
    EXPECT_TRUE(is_maximally_entangled(bell_vector(gs, m, gs.d - 1 - m), 1e-12));
  }
}

TEST_P(QuditDimTest, ProjectiveGroupLaw) {
  // W^{-n} Z^{m'} = w^{n m'} Z^{m'} W^{-n}, so U(m,n)U(m',n') = w^{n m'} U(m+m', n+n').
  const std::size_t d = GetParam();
  const auto gs = make_gateset(d);
  std::mt19937_64 rng(d);
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = pick(rng), n = pick(rng), m2 = pick(rng), n2 = pick(rng);
    const Complex phase = group_law_phase(gs, m, n, m2, n2);
    EXPECT_LE(std::abs(phase - omega_power(d, n * m2)), 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, QuditDimTest, ::testing::Range<std::size_t>(2, 17));

TEST(SerializationTest, JsonRoundTripIsExact) {
  const auto gs = make_gateset(5);
  const auto back = gateset_from_json(gateset_to_json(gs));
  EXPECT_EQ(back.d, 5u);
  EXPECT_EQ(back.z, gs.z);
  EXPECT_EQ(back.f, gs.f);
  EXPECT_EQ(back.v, gs.v);
}

TEST(SerializationTest, QubitJsonVRowsMatchCnot) {
  const auto doc = nlohmann::json::parse(gateset_to_json(make_gateset(2)));
  const auto& v = doc["matrices"]["V"];
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[2][3][0].get<double>(), 1.0);
  EXPECT_EQ(v[3][2][0].get<double>(), 1.0);
  EXPECT_EQ(v[2][2][0].get<double>(), 0.0);
  EXPECT_EQ(doc["bell_vectors"].size(), 4u);
}

TEST(SerializationTest, RejectsInconsistentSizes) {
  auto doc = nlohmann::json::parse(gateset_to_json(make_gateset(3)));
  doc["d"] = 4;
  EXPECT_THROW(gateset_from_json(doc.dump()), std::invalid_argument);
}

TEST(SerializationTest, SynthReloadVerify) {
  const auto dir = scratch_dir("reload");
  for (std::size_t d : {2, 3, 6}) {
    const auto path = dir / ("gates_" + std::to_string(d) + ".json");
    write_gateset_json(make_gateset(d), path);
    const auto reloaded = read_gateset_json(path);
    EXPECT_LE(verify_bell_map(reloaded), 1e-11);
    EXPECT_LE(max_abs_diff(formal_v_oracle(reloaded), reloaded.v), 1e-12);
  }
}

TEST(SerializationTest, CsvRowCounts) {
  for (std::size_t d : {2, 4}) {
    const auto dir = scratch_dir("csv" + std::to_string(d));
    write_gateset_csv(make_gateset(d), dir);
    for (const char* name : {"Z.csv", "W.csv", "F.csv"}) {
      EXPECT_EQ(count_lines(dir / name), d * d + 1) << name;
    }
    EXPECT_EQ(count_lines(dir / "V.csv"), d * d * d * d + 1);
    EXPECT_EQ(count_lines(dir / "bell.csv"), d * d * d * d + 1);
  }
}

TEST(SerializationTest, UnwritablePathThrows) {
  EXPECT_THROW(write_gateset_json(make_gateset(2), "/nonexistent_dir/x/gates.json"),
               std::runtime_error);
}

}  // namespace
}  // namespace bellobs::qudit
