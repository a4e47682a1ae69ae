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

// Real bases of u(m) and of its image under the lifted differential, and the
// linear system that tests whether conjugation by U preserves that image.

#ifndef LINOPT_ALGEBRA_HPP
#define LINOPT_ALGEBRA_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linopt/errors.hpp"
#include "linopt/fock.hpp"
#include "linopt/lift.hpp"
#include "linopt/matrix.hpp"

namespace linopt {

/// Default feasibility threshold, relative to max(1, ||rhs||_F).
inline constexpr double kDefaultFeasibilityTol = 1e-7;

/// Names one generator of u(m). Indices are zero-based with low <= high:
///   kSymmetric:     e_{low,high} = (i/2)(|low><high| + |high><low|)
///   kAntisymmetric: f_{low,high} = (1/2)(|low><high| - |high><low|), low < high
struct GeneratorLabel {
  enum class Kind { kSymmetric, kAntisymmetric };
  Kind kind;
  int low;
  int high;

  std::string str() const {
    return std::string(kind == Kind::kSymmetric ? "e" : "f") + "_" + std::to_string(low + 1) +
           std::to_string(high + 1);
  }
  friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
};

inline ComplexMatrix symmetric_generator(int m, int j, int k) {
  ComplexMatrix e = ComplexMatrix::Zero(m, m);
  e(j, k) += 0.5 * kI;
  e(k, j) += 0.5 * kI;
  return e;
}

inline ComplexMatrix antisymmetric_generator(int m, int j, int k) {
  ComplexMatrix f = ComplexMatrix::Zero(m, m);
  f(j, k) += 0.5;
  f(k, j) -= 0.5;
  return f;
}

/// Ordered generators {a_i} of u(m) and, once lifted to n photons, their
/// images {b_i}. Ordering: e_{jk} for j = 1..m, k = 1..j, then f_{kj} for
/// j = 2..m, k = 1..j-1 (one-based); for m = 2 this is e11, e12, e22, f12.
struct AlgebraBasis {
  int modes = 0;
  int photons = 0;  // 0 until lifted
  std::vector<GeneratorLabel> labels;
  std::vector<ComplexMatrix> generators;
  std::vector<ComplexMatrix> lifted;

  std::size_t size() const { return generators.size(); }
  bool is_lifted() const { return !lifted.empty(); }

  /// Position of e_{jk} (either index order) in the basis.
  std::size_t symmetric_index(int j, int k) const {
    const int lo = std::min(j, k), hi = std::max(j, k);
    return static_cast<std::size_t>(hi * (hi + 1) / 2 + lo);
  }

  /// Position of f_{jk} and the sign relating it to the stored f_{lo,hi};
  /// nullopt for j == k, where f vanishes.
  std::optional<std::pair<std::size_t, double>> antisymmetric_index(int j, int k) const {
    if (j == k) return std::nullopt;
    const int lo = std::min(j, k), hi = std::max(j, k);
    const auto sym_count = static_cast<std::size_t>(modes * (modes + 1) / 2);
    const auto pos = sym_count + static_cast<std::size_t>(hi * (hi - 1) / 2 + lo);
    return std::make_pair(pos, j < k ? 1.0 : -1.0);
  }

  ComplexMatrix e(int j, int k) const { return symmetric_generator(modes, j, k); }
  ComplexMatrix f(int j, int k) const {
    if (j == k) return ComplexMatrix::Zero(modes, modes);
    return antisymmetric_generator(modes, j, k);
  }
};

inline AlgebraBasis build_basis(int m) {
  if (m < 1) throw DimensionMismatch("build_basis: need m >= 1");
  AlgebraBasis basis;
  basis.modes = m;
  for (int hi = 0; hi < m; ++hi) {
    for (int lo = 0; lo <= hi; ++lo) {
      basis.labels.push_back({GeneratorLabel::Kind::kSymmetric, lo, hi});
      basis.generators.push_back(symmetric_generator(m, lo, hi));
    }
  }
  for (int hi = 1; hi < m; ++hi) {
    for (int lo = 0; lo < hi; ++lo) {
      basis.labels.push_back({GeneratorLabel::Kind::kAntisymmetric, lo, hi});
      basis.generators.push_back(antisymmetric_generator(m, lo, hi));
    }
  }
  return basis;
}

/// Gram matrix G_ij = Re tr(x_i^dagger x_j).
inline RealMatrix gram_matrix(const std::vector<ComplexMatrix>& xs) {
  const auto k = static_cast<Eigen::Index>(xs.size());
  RealMatrix g(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i; j < k; ++j) {
      g(i, j) = g(j, i) = real_inner(xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)]);
    }
  }
  return g;
}

inline AlgebraBasis lift_basis(AlgebraBasis basis, int n) {
  basis.photons = n;
  basis.lifted.clear();
  basis.lifted.reserve(basis.size());
  for (const auto& a : basis.generators) {
    basis.lifted.push_back(lift_hamiltonian(a, n));
    if (basis.lifted.back().norm() == 0.0) throw Error("lift_basis: lifted generator vanished");
  }
  const double det = gram_matrix(basis.lifted).determinant();
  if (!(det > 1e-12)) {
    throw Error("lift_basis: lifted generators are not linearly independent (Gram determinant " +
                std::to_string(det) + ")");
  }
  return basis;
}

inline AlgebraBasis lifted_basis(int m, int n) { return lift_basis(build_basis(m), n); }

/// Ad_U(v) = U v U^dagger.
inline ComplexMatrix adjoint_action(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows()) {
    throw DimensionMismatch("adjoint_action: shapes " + shape_string(u) + " and " + shape_string(v) +
                            " are incompatible");
  }
  return u * v * u.adjoint();
}

struct SpanDecomposition {
  RealVector coefficients;
  ComplexMatrix remainder;  // v - sum_i c_i x_i
  double residual = 0.0;    // ||remainder||_F
};

/// Real least squares onto span_R{x_i} through the Gram normal equations.
class SpanProjector {
 public:
  explicit SpanProjector(const std::vector<ComplexMatrix>& xs) : xs_(&xs), gram_(gram_matrix(xs)) {
    llt_.compute(gram_);
    if (llt_.info() != Eigen::Success) throw Error("SpanProjector: Gram matrix is singular");
  }

  const RealMatrix& gram() const { return gram_; }

  SpanDecomposition project(const ComplexMatrix& v) const {
    const auto& xs = *xs_;
    const auto k = static_cast<Eigen::Index>(xs.size());
    RealVector rhs(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      const auto& x = xs[static_cast<std::size_t>(i)];
      if (x.rows() != v.rows() || x.cols() != v.cols()) {
        throw DimensionMismatch("decompose_in_span: matrix is " + shape_string(v) +
                                ", basis elements are " + shape_string(x));
      }
      rhs(i) = real_inner(x, v);
    }
    SpanDecomposition out;
    out.coefficients = llt_.solve(rhs);
    out.remainder = v;
    for (Eigen::Index i = 0; i < k; ++i) out.remainder -= out.coefficients(i) * xs[static_cast<std::size_t>(i)];
    out.residual = out.remainder.norm();
    return out;
  }

 private:
  const std::vector<ComplexMatrix>* xs_;
  RealMatrix gram_;
  Eigen::LLT<RealMatrix> llt_;
};

inline SpanDecomposition decompose_in_span(const ComplexMatrix& v, const std::vector<ComplexMatrix>& xs) {
  return SpanProjector(xs).project(v);
}

/// A concrete entry that cannot be matched by any element of the span.
struct Witness {
  std::size_t basis_index;  // i in U b_i U^dagger
  Eigen::Index row;
  Eigen::Index col;
  Complex value;            // residual entry
  int transfer_distance;    // photon transfers between the row and column states
};

struct AdjointSolution {
  RealMatrix x;                      // row i: coefficients of U b_i U^dagger in {b_j}
  std::vector<double> row_residuals;
  double residual = 0.0;             // root-sum-square of row residuals
  double rhs_scale = 0.0;            // root-sum-square of ||U b_i U^dagger||_F
  double threshold = 0.0;            // eps * max(1, rhs_scale)
  bool feasible = false;
  std::optional<Witness> witness;
};

struct SolveOptions {
  double feasibility_tol = kDefaultFeasibilityTol;
  double unitary_tol = kDefaultUnitaryTol;
};

namespace detail {

// Entries at transfer distance > 1 are zero for every element of the image,
// so they are preferred as witnesses; then any entry over the threshold; then
// the largest entry overall. Scans are row-major within each basis index.
inline Witness find_witness(const std::vector<ComplexMatrix>& remainders, const FockBasis& fock,
                            double threshold) {
  auto make = [&](std::size_t i, Eigen::Index p, Eigen::Index q) {
    return Witness{i, p, q, remainders[i](p, q),
                   transfer_distance(fock[static_cast<std::size_t>(p)], fock[static_cast<std::size_t>(q)])};
  };
  for (std::size_t i = 0; i < remainders.size(); ++i) {
    const auto& r = remainders[i];
    for (Eigen::Index p = 0; p < r.rows(); ++p)
      for (Eigen::Index q = 0; q < r.cols(); ++q)
        if (std::abs(r(p, q)) > threshold &&
            transfer_distance(fock[static_cast<std::size_t>(p)], fock[static_cast<std::size_t>(q)]) > 1)
          return make(i, p, q);
  }
  for (std::size_t i = 0; i < remainders.size(); ++i) {
    const auto& r = remainders[i];
    for (Eigen::Index p = 0; p < r.rows(); ++p)
      for (Eigen::Index q = 0; q < r.cols(); ++q)
        if (std::abs(r(p, q)) > threshold) return make(i, p, q);
  }
  std::size_t best_i = 0;
  Eigen::Index best_p = 0, best_q = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < remainders.size(); ++i) {
    Eigen::Index p, q;
    const double v = remainders[i].cwiseAbs().maxCoeff(&p, &q);
    if (v > best) best = v, best_i = i, best_p = p, best_q = q;
  }
  return make(best_i, best_p, best_q);
}

}  // namespace detail

/// Solves U b_i U^dagger = sum_j X_ij b_j in the least-squares sense, one row
/// per basis element, and reports whether the system is consistent.
inline AdjointSolution solve_adjoint_system(const ComplexMatrix& u, const AlgebraBasis& basis,
                                            const SolveOptions& opts = {}) {
  if (!basis.is_lifted()) throw Error("solve_adjoint_system: basis has not been lifted");
  const auto big_m = basis.lifted.front().rows();
  if (u.rows() != big_m || u.cols() != big_m) {
    throw DimensionMismatch("solve_adjoint_system: U is " + shape_string(u) + ", expected " +
                            std::to_string(big_m) + "x" + std::to_string(big_m));
  }
  require_unitary(u, opts.unitary_tol, "solve_adjoint_system");

  const SpanProjector projector(basis.lifted);
  const auto k = static_cast<Eigen::Index>(basis.size());
  AdjointSolution sol;
  sol.x.resize(k, k);
  std::vector<ComplexMatrix> remainders;
  remainders.reserve(basis.size());
  double residual_sq = 0.0, scale_sq = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    const ComplexMatrix image = adjoint_action(u, basis.lifted[static_cast<std::size_t>(i)]);
    scale_sq += image.squaredNorm();
    auto dec = projector.project(image);
    sol.x.row(i) = dec.coefficients.transpose();
    sol.row_residuals.push_back(dec.residual);
    residual_sq += dec.residual * dec.residual;
    remainders.push_back(std::move(dec.remainder));
  }
  sol.residual = std::sqrt(residual_sq);
  sol.rhs_scale = std::sqrt(scale_sq);
  sol.threshold = opts.feasibility_tol * std::max(1.0, sol.rhs_scale);
  sol.feasible = sol.residual <= sol.threshold;
  if (!sol.feasible) {
    const FockBasis fock(basis.modes, basis.photons);
    sol.witness = detail::find_witness(remainders, fock, sol.threshold);
  }
  return sol;
}

}  // namespace linopt

#endif  // LINOPT_ALGEBRA_HPP
