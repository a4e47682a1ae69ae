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

// Fock basis of n photons in m modes.
//
// States are ordered descending-lexicographically on the occupation vector,
// so for (m, n) = (2, 5) the basis reads |5,0>, |4,1>, ..., |0,5>. All mode
// and state indices in the API are zero-based.

#ifndef LINOPT_FOCK_HPP
#define LINOPT_FOCK_HPP

#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linopt/errors.hpp"

namespace linopt {

/// Photons per mode, |n_1 ... n_m>.
struct OccupationVector {
  std::vector<int> counts;

  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> c) : counts(std::move(c)) {}
  OccupationVector(std::initializer_list<int> c) : counts(c) {}

  std::size_t modes() const { return counts.size(); }
  int operator[](std::size_t k) const { return counts[k]; }

  int total() const {
    int t = 0;
    for (int c : counts) t += c;
    return t;
  }

  std::string str() const {
    std::string out = "|";
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(counts[k]);
    }
    return out + ">";
  }

  friend bool operator==(const OccupationVector&, const OccupationVector&) = default;
  friend auto operator<=>(const OccupationVector&, const OccupationVector&) = default;
};

struct OccupationVectorHash {
  std::size_t operator()(const OccupationVector& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int c : s.counts) {
      h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Number of photons that must move between modes to turn `a` into `b`.
/// Both vectors must have the same mode count and photon total.
inline int transfer_distance(const OccupationVector& a, const OccupationVector& b) {
  int diff = 0;
  for (std::size_t k = 0; k < a.modes(); ++k) diff += std::abs(a[k] - b[k]);
  return diff / 2;
}

/// C(m + n - 1, n): the number of ways to place n photons in m modes.
/// Throws OverflowError if the result does not fit in 64 bits.
inline std::uint64_t dim(int m, int n) {
  if (m < 1 || n < 0) {
    throw DimensionMismatch("dim: need m >= 1 and n >= 0, got m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
  }
  // C(m-1+i, i) is nondecreasing in i, so an intermediate overflow implies a final one.
  unsigned __int128 result = 1;
  for (int i = 1; i <= n; ++i) {
    result = result * static_cast<unsigned __int128>(m - 1 + i) / static_cast<unsigned>(i);
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw OverflowError("dim: C(" + std::to_string(m + n - 1) + ", " + std::to_string(n) +
                          ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

/// Result of applying a ladder operator to a basis state: coefficient * |state>.
struct LadderResult {
  double coefficient;
  OccupationVector state;
};

inline void check_mode(std::size_t k, const OccupationVector& s) {
  if (k >= s.modes()) {
    throw IndexOutOfRange("mode index " + std::to_string(k) + " out of range for " +
                          std::to_string(s.modes()) + " modes");
  }
}

/// a_k^dagger |..n_k..> = sqrt(n_k + 1) |..n_k + 1..>
inline LadderResult apply_creation(std::size_t k, const OccupationVector& s) {
  check_mode(k, s);
  LadderResult r{std::sqrt(static_cast<double>(s[k]) + 1.0), s};
  ++r.state.counts[k];
  return r;
}

/// a_k |..n_k..> = sqrt(n_k) |..n_k - 1..>; an empty mode gives the zero
/// vector, reported as std::nullopt (it is not the vacuum).
inline std::optional<LadderResult> apply_annihilation(std::size_t k, const OccupationVector& s) {
  check_mode(k, s);
  if (s[k] == 0) return std::nullopt;
  LadderResult r{std::sqrt(static_cast<double>(s[k])), s};
  --r.state.counts[k];
  return r;
}

/// Ordered n-photon, m-mode basis with a reverse index.
class FockBasis {
 public:
  /// Upper bound on enumerated basis size; larger spaces are outside desk scale.
  static constexpr std::uint64_t kMaxStates = std::uint64_t{1} << 26;

  FockBasis(int m, int n) : m_(m), n_(n) {
    const std::uint64_t size = dim(m, n);
    if (size > kMaxStates) {
      throw OverflowError("FockBasis: " + std::to_string(size) + " states is too many to enumerate");
    }
    states_.reserve(size);
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    enumerate(0, n, counts);
    index_.reserve(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
  }

  int modes() const { return m_; }
  int photons() const { return n_; }
  std::size_t size() const { return states_.size(); }

  const OccupationVector& operator[](std::size_t i) const { return states_[i]; }
  std::span<const OccupationVector> states() const { return states_; }
  auto begin() const { return states_.begin(); }
  auto end() const { return states_.end(); }

  std::optional<std::size_t> find(const OccupationVector& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const OccupationVector& s) const {
    if (auto i = find(s)) return *i;
    throw IndexOutOfRange("state " + s.str() + " is not in the " + std::to_string(m_) + "-mode, " +
                          std::to_string(n_) + "-photon basis");
  }

 private:
  // Highest occupation of the leading mode first gives descending lex order.
  void enumerate(std::size_t mode, int remaining, std::vector<int>& counts) {
    if (mode + 1 == counts.size()) {
      counts[mode] = remaining;
      states_.emplace_back(counts);
      return;
    }
    for (int c = remaining; c >= 0; --c) {
      counts[mode] = c;
      enumerate(mode + 1, remaining - c, counts);
    }
    counts[mode] = 0;
  }

  int m_;
  int n_;
  std::vector<OccupationVector> states_;
  std::unordered_map<OccupationVector, std::size_t, OccupationVectorHash> index_;
};

inline FockBasis enumerate_basis(int m, int n) { return FockBasis(m, n); }

}  // namespace linopt

#endif  // LINOPT_FOCK_HPP
