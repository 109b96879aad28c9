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

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>

#include "amekit/core/index.hpp"
#include "amekit/errors.hpp"
#include "amekit/tolerances.hpp"

namespace amekit {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Pure state of n qudits of uniform local dimension d.
///
/// Amplitudes are stored densely in big-endian order: labels (k_1, ..., k_n)
/// live at index sum_j k_j d^(n-j). The squared norm is 1 within kTolNorm.
class PureState {
 public:
  PureState(std::size_t parties, int d, Vector amplitudes)
      : parties_(parties), d_(d), amplitudes_(std::move(amplitudes)) {
    if (parties == 0) throw DomainError("PureState: need at least one party");
    const std::size_t dim = state_dimension(parties, d);
    if (static_cast<std::size_t>(amplitudes_.size()) != dim) {
      throw DomainError("PureState: expected " + std::to_string(dim) +
                        " amplitudes, got " +
                        std::to_string(amplitudes_.size()));
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (!(std::abs(norm2 - 1.0) <= kTolNorm)) {
      throw DomainError("PureState: squared norm " + std::to_string(norm2) +
                        " differs from 1");
    }
  }

  /// Rescales `amplitudes` to unit norm; rejects the zero vector.
  static PureState normalized(std::size_t parties, int d, Vector amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > kTolEig)) throw DomainError("PureState: zero vector");
    amplitudes /= norm;
    return PureState(parties, d, std::move(amplitudes));
  }

  /// Computational basis state |labels>.
  static PureState basis(int d, std::span<const Dit> labels) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(
        state_dimension(labels.size(), d)));
    v[static_cast<Eigen::Index>(basis_index(labels, d))] = 1.0;
    return PureState(labels.size(), d, std::move(v));
  }

  static PureState basis(int d, std::initializer_list<Dit> labels) {
    return basis(d, std::span<const Dit>(labels.begin(), labels.size()));
  }

  std::size_t parties() const noexcept { return parties_; }
  int local_dim() const noexcept { return d_; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(amplitudes_.size());
  }
  const Vector& amplitudes() const noexcept { return amplitudes_; }

  Complex amplitude(std::span<const Dit> labels) const {
    if (labels.size() != parties_) {
      throw DomainError("PureState::amplitude: wrong label count");
    }
    return amplitudes_[static_cast<Eigen::Index>(basis_index(labels, d_))];
  }
  Complex amplitude(std::initializer_list<Dit> labels) const {
    return amplitude(std::span<const Dit>(labels.begin(), labels.size()));
  }

 private:
  std::size_t parties_;
  int d_;
  Vector amplitudes_;
};

/// |a> (x) |b>; a's parties come first.
inline PureState tensor(const PureState& a, const PureState& b) {
  if (a.local_dim() != b.local_dim()) {
    throw DomainError("tensor: local dimensions differ");
  }
  const std::size_t parties = a.parties() + b.parties();
  state_dimension(parties, a.local_dim());
  const auto na = static_cast<Eigen::Index>(a.size());
  const auto nb = static_cast<Eigen::Index>(b.size());
  Vector v(na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    v.segment(i * nb, nb) = a.amplitudes()[i] * b.amplitudes();
  }
  return PureState::normalized(parties, a.local_dim(), std::move(v));
}

/// Reduced state: Hermitian, unit trace, positive semidefinite.
///
/// Construction checks the first two within kTolNorm; positivity is checked
/// where eigenvalues are computed anyway (entropy_bits).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
      throw DomainError("DensityMatrix: matrix must be square and nonempty");
    }
    const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm <= kTolNorm)) {
      throw DomainError("DensityMatrix: not Hermitian (deviation " +
                        std::to_string(herm) + ")");
    }
    const Complex tr = matrix_.trace();
    if (!(std::abs(tr - Complex(1.0)) <= kTolNorm)) {
      throw DomainError("DensityMatrix: trace " + std::to_string(tr.real()) +
                        " differs from 1");
    }
  }

  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(matrix_.rows());
  }
  const Matrix& matrix() const noexcept { return matrix_; }

 private:
  Matrix matrix_;
};

/// Split of the parties {0..n-1} into B and A with |B| <= |A|.
class Bipartition {
 public:
  /// A is the complement of B in ascending order.
  Bipartition(std::size_t n, Parties b) : Bipartition(n, b, complement(b, n)) {}

  Bipartition(std::size_t n, Parties b, Parties a)
      : n_(n), b_(std::move(b)), a_(std::move(a)) {
    if (b_.empty()) throw DomainError("Bipartition: B must be nonempty");
    Parties all = b_;
    all.insert(all.end(), a_.begin(), a_.end());
    check_parties(all, n_, "Bipartition");
    if (all.size() != n_) {
      throw DomainError("Bipartition: B and A must cover all " +
                        std::to_string(n_) + " parties");
    }
    if (b_.size() > a_.size()) {
      throw DomainError("Bipartition: requires m = |B| <= |A| = n - m (got |B| = " +
                        std::to_string(b_.size()) + ", |A| = " +
                        std::to_string(a_.size()) + ")");
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return b_.size(); }
  const Parties& b() const noexcept { return b_; }
  const Parties& a() const noexcept { return a_; }

  std::string to_string() const { return join(b_) + "|" + join(a_); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::size_t n_;
  Parties b_;
  Parties a_;
};

}  // namespace amekit
