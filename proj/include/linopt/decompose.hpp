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

// Triangular factorization of a scattering matrix into beam splitters and
// phase shifters.
//
// A beam splitter on modes (p, q) with mixing angle theta in [0, pi/2] and
// phase phi in (-pi, pi] acts on that pair as the 2x2 block
//
//   [ e^{i phi} cos(theta)   -sin(theta) ]
//   [ e^{i phi} sin(theta)    cos(theta) ]
//
// and as the identity elsewhere. A phase shifter multiplies mode p by
// e^{i phi}. An element list is applied in order, so the list [E1, E2, ...]
// realizes the matrix ... E2 * E1. Mode indices are zero-based.

#ifndef LINOPT_DECOMPOSE_HPP
#define LINOPT_DECOMPOSE_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "linopt/errors.hpp"
#include "linopt/matrix.hpp"

namespace linopt {

struct BeamSplitter {
  int mode_p;
  int mode_q;
  double theta;
  double phi;
  friend bool operator==(const BeamSplitter&, const BeamSplitter&) = default;
};

struct PhaseShifter {
  int mode;
  double phi;
  friend bool operator==(const PhaseShifter&, const PhaseShifter&) = default;
};

using OpticalElement = std::variant<BeamSplitter, PhaseShifter>;

/// Wraps an angle into (-pi, pi].
inline double wrap_phase(double phi) {
  double w = std::atan2(std::sin(phi), std::cos(phi));
  if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
  return w;
}

inline ComplexMatrix embed(const OpticalElement& element, int m) {
  ComplexMatrix t = ComplexMatrix::Identity(m, m);
  auto check = [m](int mode) {
    if (mode < 0 || mode >= m) {
      throw IndexOutOfRange("optical element mode " + std::to_string(mode) + " out of range for " +
                            std::to_string(m) + " modes");
    }
  };
  if (const auto* bs = std::get_if<BeamSplitter>(&element)) {
    check(bs->mode_p);
    check(bs->mode_q);
    if (bs->mode_p == bs->mode_q) throw IndexOutOfRange("beam splitter needs two distinct modes");
    const Complex ph = std::polar(1.0, bs->phi);
    const double c = std::cos(bs->theta), s = std::sin(bs->theta);
    t(bs->mode_p, bs->mode_p) = ph * c;
    t(bs->mode_p, bs->mode_q) = -s;
    t(bs->mode_q, bs->mode_p) = ph * s;
    t(bs->mode_q, bs->mode_q) = c;
  } else {
    const auto& ps = std::get<PhaseShifter>(element);
    check(ps.mode);
    t(ps.mode, ps.mode) = std::polar(1.0, ps.phi);
  }
  return t;
}

inline ComplexMatrix elements_to_matrix(const std::vector<OpticalElement>& elements, int m) {
  if (m < 1) throw DimensionMismatch("elements_to_matrix: need m >= 1");
  ComplexMatrix out = ComplexMatrix::Identity(m, m);
  for (const auto& e : elements) out = embed(e, m) * out;
  return out;
}

/// Emits m(m-1)/2 beam splitters followed by m phase shifters.
///
/// Rows are cleared from the bottom up; within row r the entries left of the
/// diagonal are zeroed left to right by mixing adjacent columns (c, c+1), so
/// S T_1^{-1} ... T_K^{-1} = D ends diagonal and S = D T_K ... T_1.
inline std::vector<OpticalElement> reck_decompose(const ComplexMatrix& s,
                                                  double unitary_tol = kDefaultUnitaryTol) {
  require_unitary(s, unitary_tol, "reck_decompose");
  const int m = static_cast<int>(s.rows());
  ComplexMatrix w = s;
  std::vector<OpticalElement> elements;
  elements.reserve(static_cast<std::size_t>(m * (m - 1) / 2 + m));

  for (int r = m - 1; r >= 1; --r) {
    for (int c = 0; c < r; ++c) {
      const Complex a = w(r, c);
      const Complex b = w(r, c + 1);
      double theta = 0.0, phi = 0.0;
      if (std::abs(a) > 0.0) {
        theta = std::atan2(std::abs(a), std::abs(b));
        phi = std::abs(b) > 0.0 ? wrap_phase(std::arg(a) - std::arg(b)) : 0.0;
      }
      const BeamSplitter bs{c, c + 1, theta, phi};
      w = w * embed(bs, m).adjoint();
      w(r, c) = 0.0;
      elements.emplace_back(bs);
    }
  }
  for (int p = 0; p < m; ++p) elements.emplace_back(PhaseShifter{p, wrap_phase(std::arg(w(p, p)))});
  return elements;
}

}  // namespace linopt

#endif  // LINOPT_DECOMPOSE_HPP
