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

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "amekit/core/state.hpp"

namespace amekit {

inline int mod(int x, int d) {
  const int r = x % d;
  return r < 0 ? r + d : r;
}

/// exp(2 pi i p / d), with p reduced mod d first.
inline Complex omega(int d, int power) {
  const double angle = 2.0 * std::numbers::pi * mod(power, d) / d;
  return {std::cos(angle), std::sin(angle)};
}

/// The Weyl-Heisenberg operator X^a Z^b on one qudit, with
/// X|k> = |k+1 mod d> and Z|k> = omega^k |k>.
class GeneralizedPauli {
 public:
  GeneralizedPauli(int d, int a, int b) : d_(d), a_(0), b_(0) {
    if (d < 2) throw DomainError("GeneralizedPauli: d must be >= 2");
    a_ = mod(a, d);
    b_ = mod(b, d);
  }

  int local_dim() const noexcept { return d_; }
  int shift() const noexcept { return a_; }
  int phase() const noexcept { return b_; }

  /// (X^a Z^b)|k> = omega^(b k) |k + a>.
  Matrix matrix() const {
    Matrix m = Matrix::Zero(d_, d_);
    for (int k = 0; k < d_; ++k) m(mod(k + a_, d_), k) = omega(d_, b_ * k);
    return m;
  }

  std::string to_string() const {
    return "X^" + std::to_string(a_) + " Z^" + std::to_string(b_);
  }

  friend bool operator==(const GeneralizedPauli&, const GeneralizedPauli&) = default;

 private:
  int d_;
  int a_;
  int b_;
};

/// Two classical dits reported by a generalized Bell measurement.
struct BellOutcome {
  int a = 0;
  int b = 0;

  friend bool operator==(const BellOutcome&, const BellOutcome&) = default;
};

inline void check_outcome(const BellOutcome& o, int d) {
  if (o.a < 0 || o.a >= d || o.b < 0 || o.b >= d) {
    throw DomainError("BellOutcome (" + std::to_string(o.a) + "," +
                      std::to_string(o.b) + ") outside Z_" + std::to_string(d));
  }
}

/// |Psi_ab> = (1/sqrt d) sum_k omega^(k b) |k>|k + a>.
inline PureState bell_state(int d, int a, int b) {
  Vector v = Vector::Zero(d * d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) v[k * d + mod(k + a, d)] = s * omega(d, k * b);
  return PureState(2, d, std::move(v));
}

/// All d^2 Bell states, element a*d + b holding |Psi_ab>.
inline std::vector<PureState> bell_basis(int d) {
  std::vector<PureState> out;
  out.reserve(static_cast<std::size_t>(d * d));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) out.push_back(bell_state(d, a, b));
  }
  return out;
}

/// Unitary whose column a*d + b is |Psi_ab>. Its adjoint rotates the Bell
/// basis onto the computational basis, so a Bell measurement is this
/// adjoint followed by reading out |a>|b>.
inline Matrix bell_frame(int d) {
  Matrix v(d * d, d * d);
  const auto basis = bell_basis(d);
  for (int c = 0; c < d * d; ++c) v.col(c) = basis[static_cast<std::size_t>(c)].amplitudes();
  return v;
}

/// Receiver-side fix for Bell outcome (a, b).
///
/// Measuring (payload, sender half) in |Psi_ab> leaves the receiver holding
/// X^a Z^-b |s>; X^-a Z^b undoes that up to the phase omega^(ab).
inline GeneralizedPauli bell_correction(const BellOutcome& o, int d) {
  check_outcome(o, d);
  return GeneralizedPauli(d, -o.a, o.b);
}

}  // namespace amekit
