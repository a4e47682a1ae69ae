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

// Deciding whether an n-photon evolution is realizable by a linear
// interferometer, and recovering the interferometer when it is.
//
// The decision never takes a matrix logarithm: U is realizable exactly when
// conjugation by U maps the lifted algebra onto itself, which is a linear
// system in the coefficients X. When it is, X also fixes Ad_S on u(m), and
// the entries of S are read off Ad_S(|j><j0|) against a pivot entry.

#ifndef LINOPT_SYNTH_HPP
#define LINOPT_SYNTH_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linopt/algebra.hpp"
#include "linopt/errors.hpp"
#include "linopt/fock.hpp"
#include "linopt/lift.hpp"
#include "linopt/matrix.hpp"

namespace linopt {

/// Pivot candidates within this of the largest |S_lj|^2 count as tied.
inline constexpr double kPivotTieTol = 1e-9;

struct SynthOptions {
  double feasibility_tol = kDefaultFeasibilityTol;
  double unitary_tol = kDefaultUnitaryTol;
  double antihermitian_tol = kDefaultAntihermitianTol;
  /// Re-lift check passes when ||lift(S) - e^{i gamma} U||_F <= verify_tol * M.
  double verify_tol = 1e-7;
};

enum class Verdict { kFeasible, kInfeasible };

inline const char* to_string(Verdict v) { return v == Verdict::kFeasible ? "feasible" : "infeasible"; }

enum class WitnessSource { kAdjointSystem, kVerification };

struct Decision {
  Verdict verdict = Verdict::kInfeasible;
  int modes = 0;
  int photons = 0;
  double residual = 0.0;   // adjoint-system residual
  double threshold = 0.0;  // feasibility threshold it was compared against
  RealMatrix x;            // adjoint-system coefficients
  std::optional<Witness> witness;
  WitnessSource witness_source = WitnessSource::kAdjointSystem;

  // Filled by reconstruct_S on success.
  std::optional<ComplexMatrix> scattering;
  std::string phase_convention;
  int pivot_row = -1;
  int pivot_col = -1;
  std::optional<double> global_phase;           // gamma with lift(S) ~ e^{i gamma} U
  std::optional<double> verification_residual;

  bool feasible() const { return verdict == Verdict::kFeasible; }
};

namespace detail {

inline void require_evolution_shape(const ComplexMatrix& u, int m, int n, const char* what) {
  require_square(u, what);
  if (m < 1 || n < 1) throw DimensionMismatch(std::string(what) + ": need m >= 1 and n >= 1");
  const std::uint64_t big_m = dim(m, n);
  if (static_cast<std::uint64_t>(u.rows()) != big_m) {
    throw DimensionMismatch(std::string(what) + ": matrix is " + shape_string(u) + " but (m, n) = (" +
                            std::to_string(m) + ", " + std::to_string(n) + ") needs " +
                            std::to_string(big_m) + "x" + std::to_string(big_m));
  }
}

}  // namespace detail

/// Realizability verdict from the adjoint system; S is not computed.
inline Decision check_realizable(const ComplexMatrix& u, int m, int n, const SynthOptions& opts = {}) {
  detail::require_evolution_shape(u, m, n, "check_realizable");
  require_unitary(u, opts.unitary_tol, "check_realizable");

  const AlgebraBasis basis = lifted_basis(m, n);
  const AdjointSolution sol = solve_adjoint_system(u, basis, {opts.feasibility_tol, opts.unitary_tol});
  Decision d;
  d.modes = m;
  d.photons = n;
  d.verdict = sol.feasible ? Verdict::kFeasible : Verdict::kInfeasible;
  d.residual = sol.residual;
  d.threshold = sol.threshold;
  d.x = sol.x;
  d.witness = sol.witness;
  return d;
}

/// Ad_S on u(m) reconstructed from the adjoint-system coefficients:
/// Ad_S(a_i) = sum_j X_ij a_j.
class ScatteringAdjoint {
 public:
  ScatteringAdjoint(const AlgebraBasis& basis, const RealMatrix& x) : basis_(&basis) {
    const auto k = static_cast<Eigen::Index>(basis.size());
    images_.reserve(basis.size());
    for (Eigen::Index i = 0; i < k; ++i) {
      ComplexMatrix img = ComplexMatrix::Zero(basis.modes, basis.modes);
      for (Eigen::Index j = 0; j < k; ++j) img += x(i, j) * basis.generators[static_cast<std::size_t>(j)];
      images_.push_back(std::move(img));
    }
  }

  const ComplexMatrix& of_basis(std::size_t i) const { return images_[i]; }

  ComplexMatrix of_e(int j, int k) const { return images_[basis_->symmetric_index(j, k)]; }

  ComplexMatrix of_f(int j, int k) const {
    const auto idx = basis_->antisymmetric_index(j, k);
    if (!idx) return ComplexMatrix::Zero(basis_->modes, basis_->modes);
    return idx->second * images_[idx->first];
  }

  /// |S_lj|^2 = -i <l| Ad_S(e_jj) |l>
  double modulus_squared(int l, int j) const { return (-kI * of_e(j, j)(l, l)).real(); }

 private:
  const AlgebraBasis* basis_;
  std::vector<ComplexMatrix> images_;
};

/// Full pipeline: decide, rebuild S up to global phase, and verify by re-lifting.
inline Decision reconstruct_S(const ComplexMatrix& u, int m, int n, const SynthOptions& opts = {}) {
  detail::require_evolution_shape(u, m, n, "reconstruct_S");
  require_unitary(u, opts.unitary_tol, "reconstruct_S");

  const AlgebraBasis basis = lifted_basis(m, n);
  const AdjointSolution sol = solve_adjoint_system(u, basis, {opts.feasibility_tol, opts.unitary_tol});
  Decision d;
  d.modes = m;
  d.photons = n;
  d.residual = sol.residual;
  d.threshold = sol.threshold;
  d.x = sol.x;
  d.witness = sol.witness;
  if (!sol.feasible) {
    d.verdict = Verdict::kInfeasible;
    return d;
  }

  const ScatteringAdjoint ad(basis, sol.x);
  RealMatrix moduli(m, m);
  for (int l = 0; l < m; ++l) {
    for (int j = 0; j < m; ++j) moduli(l, j) = ad.modulus_squared(l, j);
  }
  // Near-ties go to the first entry in row-major order.
  const double top = moduli.maxCoeff();
  int l0 = 0, j0 = 0;
  double best = top;
  for (int l = 0, found = 0; l < m && !found; ++l) {
    for (int j = 0; j < m; ++j) {
      if (moduli(l, j) >= top - kPivotTieTol) {
        best = moduli(l, j), l0 = l, j0 = j, found = 1;
        break;
      }
    }
  }
  d.pivot_row = l0;
  d.pivot_col = j0;

  ComplexMatrix s(m, m);
  const double denom = best > 0.0 ? std::sqrt(best) : 0.0;
  for (int j = 0; j < m; ++j) {
    // Ad_S(|j><j0|) = Ad_S(f_{j j0}) - i Ad_S(e_{j j0}); its column l0 is S_{.j} conj(S_{l0 j0}).
    const ComplexMatrix column_op = ad.of_f(j, j0) - kI * ad.of_e(j, j0);
    for (int l = 0; l < m; ++l) s(l, j) = denom > 0.0 ? column_op(l, l0) / denom : Complex{0.0, 0.0};
  }

  std::ostringstream conv;
  conv << "global phase fixed so that S[" << l0 << "][" << j0 << "] is real and positive";
  d.phase_convention = conv.str();

  const ComplexMatrix v = lift_unitary(s, n, std::numeric_limits<double>::infinity());
  const double gamma = std::arg((v * u.adjoint()).trace());
  const ComplexMatrix diff = v - std::polar(1.0, gamma) * u;
  const double verify = diff.norm();
  d.global_phase = gamma;
  d.verification_residual = verify;
  const double verify_limit = opts.verify_tol * static_cast<double>(u.rows());

  if (denom > 0.0 && verify <= verify_limit && is_unitary(s, opts.unitary_tol)) {
    d.verdict = Verdict::kFeasible;
    d.scattering = std::move(s);
    return d;
  }
  d.verdict = Verdict::kInfeasible;
  d.witness_source = WitnessSource::kVerification;
  Eigen::Index p = 0, q = 0;
  diff.cwiseAbs().maxCoeff(&p, &q);
  const FockBasis fock(m, n);
  d.witness = Witness{0, p, q, diff(p, q),
                      transfer_distance(fock[static_cast<std::size_t>(p)], fock[static_cast<std::size_t>(q)])};
  return d;
}

struct HamiltonianCheck {
  bool feasible = false;
  RealVector coefficients;  // X_i in iH_U = sum_i X_i b_i
  double residual = 0.0;
  double threshold = 0.0;
  std::optional<ComplexMatrix> hamiltonian_s;  // iH_S = sum_i X_i a_i when feasible
  std::optional<Witness> witness;
};

/// Decomposes a lifted generator iH_U in the lifted basis and maps the
/// coefficients back to u(m).
inline HamiltonianCheck check_hamiltonian(const ComplexMatrix& ih_u, int m, int n,
                                          const SynthOptions& opts = {}) {
  detail::require_evolution_shape(ih_u, m, n, "check_hamiltonian");
  require_antihermitian(ih_u, opts.antihermitian_tol, "check_hamiltonian");

  const AlgebraBasis basis = lifted_basis(m, n);
  auto dec = decompose_in_span(ih_u, basis.lifted);
  HamiltonianCheck out;
  out.coefficients = dec.coefficients;
  out.residual = dec.residual;
  out.threshold = opts.feasibility_tol * std::max(1.0, ih_u.norm());
  out.feasible = out.residual <= out.threshold;
  if (out.feasible) {
    ComplexMatrix hs = ComplexMatrix::Zero(m, m);
    for (std::size_t i = 0; i < basis.size(); ++i)
      hs += dec.coefficients(static_cast<Eigen::Index>(i)) * basis.generators[i];
    out.hamiltonian_s = std::move(hs);
  } else {
    const FockBasis fock(m, n);
    out.witness = detail::find_witness({dec.remainder}, fock, out.threshold);
  }
  return out;
}

}  // namespace linopt

#endif  // LINOPT_SYNTH_HPP
