// Copyright 2026 The linopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linopt/algebra.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "linopt/lift.hpp"
#include "test_util.hpp"

using namespace linopt;
using namespace linopt::testing;

namespace {

const double kRoot2 = std::sqrt(2.0);
const double kRoot5 = std::sqrt(5.0);

}  // namespace

TEST(build_basis, two_modes) {
  const AlgebraBasis b = build_basis(2);
  ASSERT_EQ(b.size(), 4u);
  const ComplexMatrix e11 = from_rows({{kI, 0.0}, {0.0, 0.0}});
  const ComplexMatrix e12 = 0.5 * from_rows({{0.0, kI}, {kI, 0.0}});
  const ComplexMatrix e22 = from_rows({{0.0, 0.0}, {0.0, kI}});
  const ComplexMatrix f12 = 0.5 * from_rows({{0.0, 1.0}, {-1.0, 0.0}});
  EXPECT_EQ(b.generators[0], e11);
  EXPECT_EQ(b.generators[1], e12);
  EXPECT_EQ(b.generators[2], e22);
  EXPECT_EQ(b.generators[3], f12);
  EXPECT_EQ(b.labels[0].str(), "e_11");
  EXPECT_EQ(b.labels[3].str(), "f_12");
}

TEST(build_basis, one_mode) {
  const AlgebraBasis b = build_basis(1);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.generators[0](0, 0), kI);
}

TEST(build_basis, three_modes_ordering) {
  const AlgebraBasis b = build_basis(3);
  const std::vector<std::string> expected = {"e_11", "e_12", "e_22", "e_13", "e_23",
                                             "e_33", "f_12", "f_13", "f_23"};
  ASSERT_EQ(b.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(b.labels[i].str(), expected[i]);
}

TEST(build_basis, independent_and_antihermitian) {
  for (int m = 1; m <= 5; ++m) {
    const AlgebraBasis b = build_basis(m);
    ASSERT_EQ(b.size(), static_cast<std::size_t>(m * m));
    for (const auto& a : b.generators) EXPECT_EQ(antihermiticity_defect(a), 0.0);
    EXPECT_GT(std::abs(gram_matrix(b.generators).determinant()), 1e-12);
  }
}

TEST(build_basis, derived_accessors_and_indices) {
  const AlgebraBasis b = build_basis(4);
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      EXPECT_EQ(b.e(j, k), b.e(k, j));
      EXPECT_EQ(b.f(j, k), -b.f(k, j));
      EXPECT_EQ(b.generators[b.symmetric_index(j, k)], b.e(j, k));
      const auto f = b.antisymmetric_index(j, k);
      if (j == k) {
        EXPECT_FALSE(f.has_value());
        EXPECT_EQ(b.f(j, k).norm(), 0.0);
      } else {
        ASSERT_TRUE(f.has_value());
        EXPECT_EQ(f->second * b.generators[f->first], b.f(j, k));
      }
    }
  }
}

TEST(lift_basis, two_modes_five_photons) {
  const AlgebraBasis b = lifted_basis(2, 5);
  ASSERT_EQ(b.lifted.size(), 4u);
  EXPECT_LE((b.lifted[0] - lifted_e11_five_photons()).norm(), 1e-14);
  EXPECT_LE((b.lifted[1] - lifted_e12_five_photons()).norm(), 1e-14);
  EXPECT_LE((b.lifted[2] - lifted_e22_five_photons()).norm(), 1e-14);
  EXPECT_LE((b.lifted[3] - lifted_f12_five_photons()).norm(), 1e-14);
  EXPECT_EQ(b.photons, 5);
}

TEST(lift_basis, nonzero_and_independent) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 1}, {3, 3}, {4, 2}}) {
    const AlgebraBasis b = lifted_basis(m, n);
    for (const auto& x : b.lifted) EXPECT_GT(x.norm(), 0.0);
    EXPECT_GT(gram_matrix(b.lifted).determinant(), 1e-12);
  }
}

TEST(adjoint_action, identity) {
  Rng rng(1);
  const ComplexMatrix v = random_antihermitian(6, rng);
  EXPECT_EQ(adjoint_action(ComplexMatrix::Identity(6, 6), v), v);
}

TEST(adjoint_action, swap_moves_hopping_two_photons) {
  const ComplexMatrix img = adjoint_action(swap_five_photons(), lifted_e12_five_photons());
  // row |4,1>, column |2,3>
  EXPECT_LE(std::abs(img(1, 3) - Complex(0.0, kRoot5 / 2)), 1e-15);
}

TEST(adjoint_action, balanced_splitter_on_number_operator) {
  const ComplexMatrix img = adjoint_action(balanced_splitter_five_photons(), lifted_e11_five_photons());
  ComplexMatrix expected = ComplexMatrix::Zero(6, 6);
  const double off[5] = {kRoot5 / 2, kRoot2, 1.5, kRoot2, kRoot5 / 2};
  for (int k = 0; k < 6; ++k) expected(k, k) = Complex(0.0, 2.5);
  for (int k = 0; k < 5; ++k) expected(k, k + 1) = expected(k + 1, k) = Complex(0.0, off[k]);
  EXPECT_LE((img - expected).norm(), 1e-14);
}

TEST(adjoint_action, preserves_norm) {
  Rng rng(2);
  for (int d : {2, 6, 10}) {
    const ComplexMatrix u = random_unitary(d, rng);
    const ComplexMatrix v = random_antihermitian(d, rng, 3.0);
    const ComplexMatrix img = adjoint_action(u, v);
    EXPECT_NEAR(img.norm(), v.norm(), 1e-10);
    EXPECT_LE(antihermiticity_defect(img), 1e-12);
  }
}

TEST(adjoint_action, dimension_mismatch) {
  EXPECT_THROW(adjoint_action(ComplexMatrix::Identity(3, 3), ComplexMatrix::Zero(2, 2)), DimensionMismatch);
}

TEST(decompose_in_span, basis_member) {
  const AlgebraBasis b = lifted_basis(2, 5);
  const auto dec = decompose_in_span(b.lifted[1], b.lifted);
  const RealVector expected = (RealVector(4) << 0, 1, 0, 0).finished();
  EXPECT_LE((dec.coefficients - expected).norm(), 1e-14);
  EXPECT_LE(dec.residual, 1e-13);
}

TEST(decompose_in_span, scalar_multiple_of_identity) {
  const AlgebraBasis b = lifted_basis(2, 5);
  const ComplexMatrix v = Complex(0.0, 5.0) * ComplexMatrix::Identity(6, 6);
  const auto dec = decompose_in_span(v, b.lifted);
  const RealVector expected = (RealVector(4) << 1, 0, 1, 0).finished();
  EXPECT_LE((dec.coefficients - expected).norm(), 1e-13);
  EXPECT_LE(dec.residual, 1e-12);
}

TEST(decompose_in_span, two_transfer_pair_is_orthogonal) {
  const AlgebraBasis b = lifted_basis(2, 5);
  ComplexMatrix v = ComplexMatrix::Zero(6, 6);
  v(0, 2) = Complex(0.0, 1.3);
  v(2, 0) = Complex(0.0, 1.3);
  // Oracle: project explicitly on every lifted element.
  for (const auto& x : b.lifted) EXPECT_EQ(real_inner(x, v), 0.0);
  const auto dec = decompose_in_span(v, b.lifted);
  EXPECT_LE(dec.coefficients.norm(), 1e-15);
  EXPECT_NEAR(dec.residual, v.norm(), 1e-15);
}

TEST(decompose_in_span, random_combinations_are_exact) {
  Rng rng(3);
  std::uniform_real_distribution<double> coeff(-10.0, 10.0);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}, {4, 2}}) {
    const AlgebraBasis b = lifted_basis(m, n);
    for (int trial = 0; trial < 10; ++trial) {
      RealVector c(static_cast<Eigen::Index>(b.size()));
      ComplexMatrix v = ComplexMatrix::Zero(b.lifted[0].rows(), b.lifted[0].cols());
      for (std::size_t i = 0; i < b.size(); ++i) {
        c(static_cast<Eigen::Index>(i)) = coeff(rng);
        v += c(static_cast<Eigen::Index>(i)) * b.lifted[i];
      }
      const auto dec = decompose_in_span(v, b.lifted);
      EXPECT_LE(dec.residual, 1e-12);
      EXPECT_LE((dec.coefficients - c).norm(), 1e-12);
    }
  }
}

TEST(decompose_in_span, shape_mismatch) {
  const AlgebraBasis b = lifted_basis(2, 5);
  EXPECT_THROW(decompose_in_span(ComplexMatrix::Zero(3, 3), b.lifted), DimensionMismatch);
}

TEST(solve_adjoint_system, identity) {
  const AlgebraBasis b = lifted_basis(2, 5);
  const auto sol = solve_adjoint_system(ComplexMatrix::Identity(6, 6), b);
  EXPECT_TRUE(sol.feasible);
  EXPECT_LE((sol.x - RealMatrix::Identity(4, 4)).norm(), 1e-13);
  EXPECT_LE(sol.residual, 1e-12);
  EXPECT_FALSE(sol.witness.has_value());
}

TEST(solve_adjoint_system, balanced_splitter) {
  const AlgebraBasis b = lifted_basis(2, 5);
  const auto sol = solve_adjoint_system(balanced_splitter_five_photons(), b);
  RealMatrix expected(4, 4);
  expected << 0.5, 1, 0.5, 0,
              0.5, 0, -0.5, 0,
              0.5, -1, 0.5, 0,
              0, 0, 0, -1;
  EXPECT_TRUE(sol.feasible);
  EXPECT_LE((sol.x - expected).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LE(sol.residual, 1e-10);
}

TEST(solve_adjoint_system, swap_is_inconsistent) {
  const AlgebraBasis b = lifted_basis(2, 5);
  const auto sol = solve_adjoint_system(swap_five_photons(), b);
  EXPECT_FALSE(sol.feasible);
  EXPECT_GT(sol.residual, 0.1);
  ASSERT_TRUE(sol.witness.has_value());
  // First two-transfer violation: conjugated e_12 hopping, row |5,0>, column |3,2>.
  EXPECT_EQ(sol.witness->basis_index, 1u);
  EXPECT_EQ(sol.witness->row, 0);
  EXPECT_EQ(sol.witness->col, 2);
  EXPECT_EQ(sol.witness->transfer_distance, 2);
  EXPECT_LE(std::abs(sol.witness->value - Complex(0.0, 1.5)), 1e-14);
}

TEST(solve_adjoint_system, preconditions) {
  const AlgebraBasis lifted = lifted_basis(2, 5);
  EXPECT_THROW(solve_adjoint_system(ComplexMatrix::Identity(5, 5), lifted), DimensionMismatch);
  EXPECT_THROW(solve_adjoint_system(2.0 * ComplexMatrix::Identity(6, 6), lifted), NonUnitaryInput);
  EXPECT_THROW(solve_adjoint_system(ComplexMatrix::Identity(6, 6), build_basis(2)), Error);
}

TEST(solve_adjoint_system, lifted_unitaries_are_feasible_and_isometric) {
  Rng rng(4);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}, {2, 2}, {3, 4}}) {
    const AlgebraBasis b = lifted_basis(m, n);
    const RealMatrix g = gram_matrix(b.lifted);
    for (int trial = 0; trial < 5; ++trial) {
      const auto sol = solve_adjoint_system(lift_unitary(random_unitary(m, rng), n), b);
      EXPECT_TRUE(sol.feasible);
      // Conjugation preserves Re tr(x^dagger y) on the span.
      EXPECT_LE((sol.x * g * sol.x.transpose() - g).norm(), 1e-8 * g.norm());
    }
  }
}

TEST(solve_adjoint_system, compatible_with_scattering_adjoint) {
  // Conjugating a lifted v by the lifted S and mapping back equals S v S^dagger.
  Rng rng(5);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}, {4, 2}}) {
    const AlgebraBasis b = lifted_basis(m, n);
    const SpanProjector group_side(b.generators), lifted_side(b.lifted);
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix s = random_unitary(m, rng);
      const ComplexMatrix v = random_antihermitian(m, rng, 2.0);
      const ComplexMatrix u = lift_unitary(s, n);
      const auto via_lift = lifted_side.project(adjoint_action(u, lift_hamiltonian(v, n)));
      const auto direct = group_side.project(adjoint_action(s, v));
      EXPECT_LE(via_lift.residual, 1e-9);
      EXPECT_LE((via_lift.coefficients - direct.coefficients).norm(), 1e-8);
    }
  }
}
