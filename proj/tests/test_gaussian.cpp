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
#include <numbers>

#include "bellobs/gaussian.hpp"

namespace bellobs::gaussian {
namespace {

// Hand-written actions on (x_a, p_a, x_b, p_b), rows = output quadratures.
SymplecticMatrix rows(std::array<double, 16> e) { return SymplecticMatrix(e); }

TEST(SymplecticTest, ElementsPreserveCommutationForm) {
  const Circuit elements{Squeezer{Mode::a, 0.37},    Squeezer{Mode::b, 2.5}, BeamSplitter{0.81},
                         PhaseShift{Mode::a, -1.2},  PhaseShift{Mode::b, 2.9},
                         TwoModeSqueezer{0.6},       ControlledShift{1.0},   ControlledShift{-0.4}};
  for (const auto& e : elements) EXPECT_LE(symplectic_defect(symplectic_of(e)), 1e-14) << element_name(e);
}

TEST(SymplecticTest, ClosedFormActions) {
  const double c = std::cos(0.3), s = std::sin(0.3);
  EXPECT_LE(max_abs_diff(symplectic_of(Squeezer{Mode::b, 2.0}),
                         rows({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0.5})),
            1e-15);
  EXPECT_LE(max_abs_diff(symplectic_of(BeamSplitter{0.3}),
                         rows({c, 0, s, 0, 0, c, 0, s, -s, 0, c, 0, 0, -s, 0, c})),
            1e-15);
  EXPECT_LE(max_abs_diff(symplectic_of(PhaseShift{Mode::a, 0.3}),
                         rows({c, s, 0, 0, -s, c, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1})),
            1e-15);
  const double ch = std::cosh(0.3), sh = std::sinh(0.3);
  EXPECT_LE(max_abs_diff(symplectic_of(TwoModeSqueezer{0.3}),
                         rows({ch, 0, sh, 0, 0, ch, 0, -sh, sh, 0, ch, 0, 0, -sh, 0, ch})),
            1e-15);
}

TEST(SymplecticTest, TargetIsControlledShift) {
  // x_a -> x_a + x_b, p_b -> p_b - p_a, others fixed.
  const auto expected = rows({1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, -1, 0, 1});
  EXPECT_EQ(max_abs_diff(target_C_symplectic(), expected), 0.0);
  EXPECT_EQ(max_abs_diff(symplectic_of(ControlledShift{}), expected), 0.0);
}

TEST(SymplecticTest, CircuitComposesInOperatorOrder) {
  // Heisenberg pictures compose as U1 U2 -> M1 M2.
  const Element u1 = Squeezer{Mode::a, 1.7}, u2 = BeamSplitter{0.4};
  EXPECT_LE(max_abs_diff(symplectic_of(Circuit{u1, u2}), symplectic_of(u1) * symplectic_of(u2)), 1e-15);
  EXPECT_EQ(max_abs_diff(symplectic_of(Circuit{}), SymplecticMatrix::identity()), 0.0);
}

TEST(SymplecticTest, PhaseConjugationInvertsSqueezing) {
  // R S(r) R^dagger = S(1/r) for a quarter-turn R.
  const Circuit conj{PhaseShift{Mode::a, std::numbers::pi / 2}, Squeezer{Mode::a, 1.8},
                     PhaseShift{Mode::a, -std::numbers::pi / 2}};
  EXPECT_LE(max_abs_diff(symplectic_of(conj), symplectic_of(Squeezer{Mode::a, 1 / 1.8})), 1e-15);
}

TEST(ElementNameTest, RoundTripAndUnknown) {
  for (const char* kind : {"squeezer_a", "squeezer_b", "beam_splitter", "phase_a", "phase_b", "opa",
                           "controlled_shift"}) {
    EXPECT_EQ(element_name(element_from_name(kind, 0.5)), kind);
  }
  EXPECT_THROW(element_from_name("mirror", 1.0), std::invalid_argument);
}

TEST(DecompositionTest, ParameterValues) {
  const auto p = decomposition_params();
  EXPECT_NEAR(p.beta, -std::numbers::pi / 6, 1e-15);
  EXPECT_NEAR(p.alpha, -0.5493061443340551, 1e-15);
  EXPECT_NEAR(p.gamma, -0.14384103622589053, 1e-15);
  EXPECT_NEAR(p.r1, 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(p.r2, std::pow(0.75, -0.25), 1e-15);
  EXPECT_NEAR(p.tau1, std::pow(std::cos(p.beta / 2), 2), 1e-14);
  EXPECT_LT(p.g, 0.0);
  EXPECT_NEAR(p.g, -std::pow(std::cosh(p.alpha / 2), 2), 1e-14);
}

TEST(DecompositionTest, Su11TwoByTwo) {
  const auto p = decomposition_params();
  const auto sides = su11_2x2_sides(p);
  const ComplexMatrix expected{{1, 0}, {0.5, 1}};
  EXPECT_LE(max_abs_diff(sides.lhs, expected), 1e-15);
  EXPECT_LE(verify_su11_2x2(p), 1e-14);
}

TEST(DecompositionTest, ChainMatchesTarget) {
  const auto p = decomposition_params();
  EXPECT_EQ(optical_chain_factors(p).size(), 5u);
  EXPECT_LE(verify_decomposition_symplectic(p), 1e-12);
}

TEST(DecompositionTest, EveryFactorMatters) {
  const auto p = decomposition_params();
  const double expected[] = {1.0, 0.35355339059327, 0.30969410526102, 0.26478431701175,
                             0.07456993182354};
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_NEAR(ablated_decomposition_error(p, k), expected[k], 1e-12) << "factor " << k;
  }
  EXPECT_THROW(ablated_decomposition_error(p, 5), std::out_of_range);
}

TEST(DecompositionTest, SwappedSqueezingFails) {
  auto p = decomposition_params();
  std::swap(p.r1, p.r2);
  EXPECT_GT(verify_decomposition_symplectic(p), 0.1);
}

TEST(HardwareTest, ConsistencyNotes) {
  const auto hw = hardware_params(decomposition_params());
  EXPECT_TRUE(hw.tau_consistent);
  EXPECT_FALSE(hw.g_consistent);
  EXPECT_NEAR(hw.field_gain_from_alpha, 1.0379548493021, 1e-12);
  EXPECT_NEAR(std::abs(hw.g), hw.power_gain_from_alpha, 1e-13);
  bool warned = false;
  for (const auto& note : hw.consistency_notes) warned = warned || note.find("WARNING") != std::string::npos;
  EXPECT_TRUE(warned);
}

}  // namespace
}  // namespace bellobs::gaussian
