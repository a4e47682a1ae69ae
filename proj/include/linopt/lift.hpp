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

// The photonic homomorphism and its differential.
//
// lift_unitary(S, n) maps an m x m scattering matrix to the M x M matrix that
// evolves n-photon Fock states; lift_hamiltonian(iH, n) maps an element of
// u(m) to the corresponding second-quantized generator a_j^dagger iH_jl a_l.
// Both use the column convention U[p][q] = <p| U |q>, input state q.

#ifndef LINOPT_LIFT_HPP
#define LINOPT_LIFT_HPP

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "linopt/errors.hpp"
#include "linopt/fock.hpp"
#include "linopt/matrix.hpp"

namespace linopt {

namespace detail {

/// log(k!) for the normalization of permanent amplitudes. Exact integer
/// factorials up to 20 keep small cases bit-exact; log-gamma above that.
inline double log_factorial(int k) {
  if (k <= 20) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return std::log(static_cast<double>(f));
  }
  return std::lgamma(static_cast<double>(k) + 1.0);
}

inline double factorial_product(const OccupationVector& s) {
  bool small = s.total() <= 20;
  if (small) {
    std::uint64_t f = 1;
    for (int c : s.counts)
      for (int i = 2; i <= c; ++i) f *= static_cast<std::uint64_t>(i);
    return static_cast<double>(f);
  }
  double lf = 0.0;
  for (int c : s.counts) lf += log_factorial(c);
  return std::exp(lf);
}

/// Creation-operator transitions from the t-photon basis into the
/// (t+1)-photon basis: entry [idx * m + j] is a_j^dagger applied to state idx.
struct CreationTable {
  std::vector<std::size_t> target;
  std::vector<double> coefficient;
};

inline CreationTable creation_table(const FockBasis& from, const FockBasis& to) {
  const auto m = static_cast<std::size_t>(from.modes());
  CreationTable t;
  t.target.resize(from.size() * m);
  t.coefficient.resize(from.size() * m);
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto r = apply_creation(j, from[i]);
      t.target[i * m + j] = to.index_of(r.state);
      t.coefficient[i * m + j] = r.coefficient;
    }
  }
  return t;
}

inline void require_photons(int n, const char* what) {
  if (n < 1) throw DimensionMismatch(std::string(what) + ": photon count must be >= 1");
}

}  // namespace detail

/// Permanent of a square matrix by Ryser's formula with Gray-code subset
/// updates, O(2^k k).
inline Complex permanent(const ComplexMatrix& a) {
  require_square(a, "permanent");
  const auto k = static_cast<int>(a.rows());
  if (k > 62) throw DimensionMismatch("permanent: matrix too large for Ryser enumeration");

  // Row sums over the current column subset.
  std::vector<Complex> row_sums(static_cast<std::size_t>(k), Complex{0.0, 0.0});
  Complex total{0.0, 0.0};
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < subsets; ++step) {
    const int col = std::countr_zero(step);
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    const double sign = (gray & bit) ? 1.0 : -1.0;
    Complex prod{1.0, 0.0};
    for (int r = 0; r < k; ++r) {
      row_sums[static_cast<std::size_t>(r)] += sign * a(r, col);
      prod *= row_sums[static_cast<std::size_t>(r)];
    }
    const bool odd = (std::popcount(gray) & 1) != 0;
    total += odd ? -prod : prod;
  }
  return (k % 2 == 0) ? total : -total;
}

/// Permanent of the n x n matrix obtained from `a` by repeating row j
/// rows[j] times and column c cols[c] times, without forming it.
///
/// Rows are consumed one copy at a time; the state is the number of copies
/// of each column already assigned, and choosing column c contributes the
/// number of its still-free copies times a(j, c). Cost is
/// O(n * cols.size() * prod(cols[c] + 1)).
inline Complex permanent_repeated(const ComplexMatrix& a, std::span<const int> rows,
                                  std::span<const int> cols) {
  if (static_cast<Eigen::Index>(rows.size()) != a.rows() ||
      static_cast<Eigen::Index>(cols.size()) != a.cols()) {
    throw DimensionMismatch("permanent_repeated: multiplicity vectors do not match matrix shape");
  }
  int n_rows = 0, n_cols = 0;
  for (int r : rows) n_rows += r;
  for (int c : cols) n_cols += c;
  if (n_rows != n_cols) throw DimensionMismatch("permanent_repeated: repeated matrix is not square");

  const std::size_t groups = cols.size();
  std::vector<std::size_t> stride(groups);
  std::size_t states = 1;
  for (std::size_t c = 0; c < groups; ++c) {
    stride[c] = states;
    states *= static_cast<std::size_t>(cols[c]) + 1;
  }

  std::vector<Complex> cur(states, Complex{0.0, 0.0}), next(states);
  cur[0] = 1.0;
  std::vector<int> used(groups);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (int copy = 0; copy < rows[j]; ++copy) {
      std::fill(next.begin(), next.end(), Complex{0.0, 0.0});
      for (std::size_t s = 0; s < states; ++s) {
        if (cur[s] == Complex{0.0, 0.0}) continue;
        std::size_t rest = s;
        for (std::size_t c = groups; c-- > 0;) {
          used[c] = static_cast<int>(rest / stride[c]);
          rest %= stride[c];
        }
        for (std::size_t c = 0; c < groups; ++c) {
          const int free = cols[c] - used[c];
          if (free == 0) continue;
          next[s + stride[c]] += cur[s] * (static_cast<double>(free) * a(static_cast<Eigen::Index>(j),
                                                                         static_cast<Eigen::Index>(c)));
        }
      }
      std::swap(cur, next);
    }
  }
  return cur[states - 1];
}

/// Multiphoton evolution matrix of the interferometer S on n photons.
///
/// Column q is built by applying prod_k (sum_j S_jk a_j^dagger)^{q_k} / sqrt(q_k!)
/// to the vacuum one creation operator at a time, so the ladder coefficients
/// carry the sqrt(n!) normalization.
inline ComplexMatrix lift_unitary(const ComplexMatrix& s, int n,
                                  double unitary_tol = kDefaultUnitaryTol) {
  require_square(s, "lift_unitary");
  detail::require_photons(n, "lift_unitary");
  require_unitary(s, unitary_tol, "lift_unitary");

  const int m = static_cast<int>(s.rows());
  const auto mm = static_cast<std::size_t>(m);
  std::vector<FockBasis> bases;
  bases.reserve(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) bases.emplace_back(m, t);
  std::vector<detail::CreationTable> tables;
  tables.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) tables.push_back(detail::creation_table(bases[t], bases[t + 1]));

  const FockBasis& top = bases.back();
  const auto big_m = static_cast<Eigen::Index>(top.size());
  ComplexMatrix u = ComplexMatrix::Zero(big_m, big_m);

  std::vector<Complex> amp, next;
  for (Eigen::Index col = 0; col < big_m; ++col) {
    const OccupationVector& input = top[static_cast<std::size_t>(col)];
    amp.assign(1, Complex{1.0, 0.0});
    int photons = 0;
    double norm = 1.0;
    for (std::size_t k = 0; k < mm; ++k) {
      for (int rep = 0; rep < input[k]; ++rep) {
        const auto& table = tables[static_cast<std::size_t>(photons)];
        next.assign(bases[static_cast<std::size_t>(photons) + 1].size(), Complex{0.0, 0.0});
        for (std::size_t i = 0; i < amp.size(); ++i) {
          if (amp[i] == Complex{0.0, 0.0}) continue;
          for (std::size_t j = 0; j < mm; ++j) {
            const std::size_t e = i * mm + j;
            next[table.target[e]] += amp[i] * s(static_cast<Eigen::Index>(j),
                                                 static_cast<Eigen::Index>(k)) * table.coefficient[e];
          }
        }
        std::swap(amp, next);
        ++photons;
        norm /= std::sqrt(static_cast<double>(rep + 1));
      }
    }
    for (Eigen::Index row = 0; row < big_m; ++row) u(row, col) = amp[static_cast<std::size_t>(row)] * norm;
  }
  return u;
}

/// Same matrix as lift_unitary, entry by entry from permanents:
/// U[p][q] = per(S[p|q]) / sqrt(prod p_k! prod q_k!).
inline ComplexMatrix lift_unitary_permanent(const ComplexMatrix& s, int n,
                                            double unitary_tol = kDefaultUnitaryTol) {
  require_square(s, "lift_unitary_permanent");
  detail::require_photons(n, "lift_unitary_permanent");
  require_unitary(s, unitary_tol, "lift_unitary_permanent");

  const FockBasis basis(static_cast<int>(s.rows()), n);
  const auto big_m = static_cast<Eigen::Index>(basis.size());
  std::vector<double> norms(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) norms[i] = detail::factorial_product(basis[i]);

  ComplexMatrix u(big_m, big_m);
  for (Eigen::Index p = 0; p < big_m; ++p) {
    const auto& out = basis[static_cast<std::size_t>(p)];
    for (Eigen::Index q = 0; q < big_m; ++q) {
      const auto& in = basis[static_cast<std::size_t>(q)];
      const Complex per = permanent_repeated(s, out.counts, in.counts);
      u(p, q) = per / std::sqrt(norms[static_cast<std::size_t>(p)] * norms[static_cast<std::size_t>(q)]);
    }
  }
  return u;
}

/// Second-quantized lift of iH in u(m): <p| sum_jl iH_jl a_j^dagger a_l |q>.
///
/// Entries are only ever written for pairs of states at most one photon
/// transfer apart; everything else is an exact zero.
inline ComplexMatrix lift_hamiltonian(const ComplexMatrix& ih, int n,
                                      double antihermitian_tol = kDefaultAntihermitianTol) {
  require_square(ih, "lift_hamiltonian");
  detail::require_photons(n, "lift_hamiltonian");
  require_antihermitian(ih, antihermitian_tol, "lift_hamiltonian");

  const auto m = static_cast<std::size_t>(ih.rows());
  const FockBasis basis(static_cast<int>(m), n);
  const auto big_m = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix out = ComplexMatrix::Zero(big_m, big_m);
  for (std::size_t q = 0; q < basis.size(); ++q) {
    for (std::size_t l = 0; l < m; ++l) {
      const auto lowered = apply_annihilation(l, basis[q]);
      if (!lowered) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const Complex h = ih(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l));
        if (h == Complex{0.0, 0.0}) continue;
        const auto raised = apply_creation(j, lowered->state);
        const auto p = static_cast<Eigen::Index>(basis.index_of(raised.state));
        out(p, static_cast<Eigen::Index>(q)) += h * (lowered->coefficient * raised.coefficient);
      }
    }
  }
  return out;
}

/// e^A by scaling and squaring with a [6/6] Pade kernel on ||A||_1 <= 1/2.
inline ComplexMatrix matrix_exp(const ComplexMatrix& a) {
  require_square(a, "matrix_exp");
  const auto d = a.rows();
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const ComplexMatrix x = a / std::ldexp(1.0, squarings);

  // c_k = (2q-k)! q! / ((2q)! k! (q-k)!), q = 6
  constexpr int q = 6;
  double c[q + 1];
  c[0] = 1.0;
  for (int k = 1; k <= q; ++k) c[k] = c[k - 1] * (q - k + 1) / (k * (2.0 * q - k + 1));

  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  ComplexMatrix power = id;
  ComplexMatrix num = c[0] * id;
  ComplexMatrix den = c[0] * id;
  for (int k = 1; k <= q; ++k) {
    power = power * x;
    num += c[k] * power;
    den += ((k % 2) ? -c[k] : c[k]) * power;
  }
  ComplexMatrix result = den.partialPivLu().solve(num);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace linopt

#endif  // LINOPT_LIFT_HPP
