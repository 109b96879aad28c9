// Copyright 2026 The amekit Authors
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

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "amekit/core/index.hpp"
#include "amekit/core/state.hpp"

namespace amekit {

/// (1/sqrt d) sum_i |i>^(x)n.
inline PureState build_ghz(std::size_t n, int d) {
  if (n < 2) throw DomainError("build_ghz: need at least two parties");
  const std::size_t dim = state_dimension(n, d);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  // |i...i> sits at i * (1 + d + ... + d^(n-1)).
  const std::size_t repunit = (dim - 1) / static_cast<std::size_t>(d - 1);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) {
    v[static_cast<Eigen::Index>(static_cast<std::size_t>(i) * repunit)] = amp;
  }
  return PureState(n, d, std::move(v));
}

inline PureState build_epr(int d) { return build_ghz(2, d); }

namespace detail {

struct SignedKet {
  std::string_view bits;
  int sign;
};

inline PureState qubit_superposition(std::span<const SignedKet> terms, double scale) {
  const std::size_t n = terms.front().bits.size();
  Vector v = Vector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
  for (const auto& t : terms) {
    std::size_t idx = 0;
    for (char c : t.bits) idx = 2 * idx + static_cast<std::size_t>(c - '0');
    v[static_cast<Eigen::Index>(idx)] += scale * t.sign;
  }
  return PureState(n, 2, std::move(v));
}

// Logical states of the five-qubit code, 16 terms of weight 1/4 each.
inline constexpr std::array<SignedKet, 16> kLogicalZero{{
    {"00000", +1}, {"10010", +1}, {"01001", +1}, {"10100", +1},
    {"01010", +1}, {"11011", -1}, {"00110", -1}, {"11000", -1},
    {"11101", -1}, {"00011", -1}, {"11110", -1}, {"01111", -1},
    {"10001", -1}, {"01100", -1}, {"10111", -1}, {"00101", +1},
}};

inline constexpr std::array<SignedKet, 16> kLogicalOne{{
    {"11111", +1}, {"01101", +1}, {"10110", +1}, {"01011", +1},
    {"10101", +1}, {"00100", -1}, {"11001", -1}, {"00111", -1},
    {"00010", -1}, {"11100", -1}, {"00001", -1}, {"10000", -1},
    {"01110", -1}, {"10011", -1}, {"01000", -1}, {"11010", +1},
}};

}  // namespace detail

/// The five-qubit code's |0_L> and |1_L>, both AME(5,2).
inline std::pair<PureState, PureState> fixture_ame52() {
  return {detail::qubit_superposition(detail::kLogicalZero, 0.25),
          detail::qubit_superposition(detail::kLogicalOne, 0.25)};
}

/// (1/sqrt 2)(|0>|0_L> + |1>|1_L>), an AME(6,2) state.
inline PureState fixture_ame62() {
  const auto [zero, one] = fixture_ame52();
  Vector v(64);
  const double s = 1.0 / std::sqrt(2.0);
  v.head(32) = s * zero.amplitudes();
  v.tail(32) = s * one.amplitudes();
  return PureState(6, 2, std::move(v));
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

/// Determinant of a square matrix over the prime field Z_p.
inline int det_mod_p(std::vector<std::vector<int>> a, int p) {
  const std::size_t k = a.size();
  auto pow_mod = [p](long long base, int e) {
    long long r = 1;
    base %= p;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
    }
    return r;
  };
  long long det = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col] % p == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = (p - det) % p;
    }
    det = det * a[col][col] % p;
    const long long inv = pow_mod(a[col][col], p - 2);
    for (std::size_t r = col + 1; r < k; ++r) {
      const long long f = a[r][col] * inv % p;
      if (f == 0) continue;
      for (std::size_t c = col; c < k; ++c) {
        a[r][c] = static_cast<int>(((a[r][c] - f * a[col][c]) % p + p) % p);
      }
    }
  }
  return static_cast<int>(det);
}

/// Generator of a length-n, dimension-k linear code over Z_d, d prime.
///
/// The constructor checks shape and field; the MDS property (every k x k
/// submatrix invertible) is checked by singular_minor().
class MdsCode {
 public:
  MdsCode(int d, std::size_t n, std::size_t k, std::vector<std::vector<int>> generator)
      : d_(d), n_(n), k_(k), g_(std::move(generator)) {
    if (!is_prime(d)) {
      throw DomainError("MdsCode: d = " + std::to_string(d) + " is not prime");
    }
    if (k == 0 || k > n) throw DomainError("MdsCode: need 1 <= k <= n");
    if (g_.size() != k) {
      throw DomainError("MdsCode: generator must have k = " + std::to_string(k) + " rows");
    }
    for (const auto& row : g_) {
      if (row.size() != n) {
        throw DomainError("MdsCode: every generator row must have n = " +
                          std::to_string(n) + " entries");
      }
      for (int x : row) {
        if (x < 0 || x >= d) {
          throw DomainError("MdsCode: entry " + std::to_string(x) + " outside Z_" +
                            std::to_string(d));
        }
      }
    }
  }

  int local_dim() const noexcept { return d_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return k_; }
  const std::vector<std::vector<int>>& generator() const noexcept { return g_; }

  /// Columns of the first singular k x k submatrix, if any.
  std::optional<Parties> singular_minor() const {
    for (const Parties& cols : subsets_of_size(n_, k_)) {
      std::vector<std::vector<int>> sub(k_, std::vector<int>(k_));
      for (std::size_t r = 0; r < k_; ++r) {
        for (std::size_t c = 0; c < k_; ++c) sub[r][c] = g_[r][cols[c]];
      }
      if (det_mod_p(std::move(sub), d_) == 0) return cols;
    }
    return std::nullopt;
  }

  /// x G mod d for a message x in Z_d^k.
  Labels encode(std::span<const Dit> message) const {
    Labels word(n_, 0);
    for (std::size_t c = 0; c < n_; ++c) {
      long long acc = 0;
      for (std::size_t r = 0; r < k_; ++r) acc += static_cast<long long>(message[r]) * g_[r][c];
      word[c] = static_cast<Dit>(acc % d_);
    }
    return word;
  }

 private:
  int d_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::vector<int>> g_;
};

/// Uniform superposition of codewords, d^(-k/2) sum_x |x G>.
///
/// Requires k = floor(n/2) and an MDS generator: then every floor(n/2)
/// columns determine the message, which makes each such cut maximally
/// entangled.
inline PureState ame_from_mds(const MdsCode& code) {
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  const int d = code.local_dim();
  if (k != n / 2) {
    throw DomainError("ame_from_mds: need k = floor(n/2), got n = " +
                      std::to_string(n) + ", k = " + std::to_string(k));
  }
  if (auto cols = code.singular_minor()) throw NonMdsGenerator(*cols);
  const std::size_t dim = state_dimension(n, d);
  const std::size_t messages = state_dimension(k, d);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  const double amp = 1.0 / std::sqrt(static_cast<double>(messages));
  for (std::size_t x = 0; x < messages; ++x) {
    const Labels word = code.encode(basis_labels(x, k, d));
    v[static_cast<Eigen::Index>(basis_index(word, d))] = amp;
  }
  return PureState(n, d, std::move(v));
}

}  // namespace amekit
