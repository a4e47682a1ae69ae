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

// Dense complex matrices and the numerical predicates shared by all modules.
//
// Scattering matrices (m x m), evolution matrices (M x M) and algebra
// elements (antihermitian) are all plain `ComplexMatrix` values; the role is
// carried by the operation, not the type.

#ifndef LINOPT_MATRIX_HPP
#define LINOPT_MATRIX_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "linopt/errors.hpp"

namespace linopt {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Default tolerance on ||A^dagger A - I||_F for inputs declared unitary.
inline constexpr double kDefaultUnitaryTol = 1e-8;

/// Default tolerance on ||A + A^dagger||_F for inputs declared antihermitian.
inline constexpr double kDefaultAntihermitianTol = 1e-8;

inline double frobenius(const ComplexMatrix& a) { return a.norm(); }

/// ||A^dagger A - I||_F, or +inf for non-square input.
inline double unitarity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  const auto n = a.rows();
  return (a.adjoint() * a - ComplexMatrix::Identity(n, n)).norm();
}

/// ||A + A^dagger||_F, or +inf for non-square input.
inline double antihermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return (a + a.adjoint()).norm();
}

inline bool is_unitary(const ComplexMatrix& a, double tol = kDefaultUnitaryTol) {
  return unitarity_defect(a) <= tol;
}

inline bool is_antihermitian(const ComplexMatrix& a, double tol = kDefaultAntihermitianTol) {
  return antihermiticity_defect(a) <= tol;
}

inline std::string shape_string(const ComplexMatrix& a) {
  std::ostringstream os;
  os << a.rows() << "x" << a.cols();
  return os.str();
}

inline void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DimensionMismatch(std::string(what) + ": expected a non-empty square matrix, got " +
                            shape_string(a));
  }
}

inline void require_unitary(const ComplexMatrix& a, double tol, const char* what) {
  require_square(a, what);
  const double defect = unitarity_defect(a);
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << what << ": matrix is not unitary (||A^dagger A - I||_F = " << defect
       << ", tolerance " << tol << ")";
    throw NonUnitaryInput(os.str());
  }
}

inline void require_antihermitian(const ComplexMatrix& a, double tol, const char* what) {
  require_square(a, what);
  const double defect = antihermiticity_defect(a);
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << what << ": matrix is not antihermitian (||A + A^dagger||_F = " << defect
       << ", tolerance " << tol << ")";
    throw NotAntihermitian(os.str());
  }
}

/// Real inner product Re tr(a^dagger b) on complex matrices of equal shape.
inline double real_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.conjugate().cwiseProduct(b)).sum().real();
}

}  // namespace linopt

#endif  // LINOPT_MATRIX_HPP
