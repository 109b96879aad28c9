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

// Brute-force reference computations for the test suites. Everything here
// works label by label from the definitions and shares no index machinery
// with the library beyond PureState storage.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "amekit/core/state.hpp"

namespace oracle {

using amekit::Complex;
using amekit::Matrix;
using amekit::PureState;
using Labels = std::vector<int>;

inline Labels decode(std::size_t index, std::size_t n, int d) {
  Labels l(n);
  for (std::size_t j = 0; j < n; ++j) {
    l[n - 1 - j] = static_cast<int>(index % d);
    index /= d;
  }
  return l;
}

inline std::size_t encode(const Labels& l, int d) {
  std::size_t x = 0;
  for (int k : l) x = x * d + k;
  return x;
}

inline Labels pick(const Labels& l, const std::vector<std::size_t>& parties) {
  Labels out;
  for (auto p : parties) out.push_back(l[p]);
  return out;
}

/// rho_{ij} = sum over full labels agreeing off `keep`.
inline Matrix partial_trace(const PureState& s, const std::vector<std::size_t>& keep) {
  const std::size_t n = s.parties();
  const int d = s.local_dim();
  std::vector<std::size_t> rest;
  for (std::size_t p = 0; p < n; ++p) {
    if (std::find(keep.begin(), keep.end(), p) == keep.end()) rest.push_back(p);
  }
  std::size_t dk = 1;
  for (std::size_t i = 0; i < keep.size(); ++i) dk *= d;
  Matrix rho = Matrix::Zero(dk, dk);
  const auto& amp = s.amplitudes();
  for (std::size_t x = 0; x < s.size(); ++x) {
    const Labels lx = decode(x, n, d);
    for (std::size_t y = 0; y < s.size(); ++y) {
      const Labels ly = decode(y, n, d);
      if (pick(lx, rest) != pick(ly, rest)) continue;
      rho(encode(pick(lx, keep), d), encode(pick(ly, keep), d)) +=
          amp[x] * std::conj(amp[y]);
    }
  }
  return rho;
}

/// The operator as a full d^n x d^n matrix, built entry by entry.
inline Matrix embed(const Matrix& op, const std::vector<std::size_t>& parties,
                    std::size_t n, int d) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) dim *= d;
  std::vector<std::size_t> rest;
  for (std::size_t p = 0; p < n; ++p) {
    if (std::find(parties.begin(), parties.end(), p) == parties.end()) rest.push_back(p);
  }
  Matrix full = Matrix::Zero(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const Labels lx = decode(x, n, d);
    for (std::size_t y = 0; y < dim; ++y) {
      const Labels ly = decode(y, n, d);
      if (pick(lx, rest) != pick(ly, rest)) continue;
      full(x, y) = op(encode(pick(lx, parties), d), encode(pick(ly, parties), d));
    }
  }
  return full;
}

/// Von Neumann entropy in bits by brute force on a Hermitian matrix.
inline double entropy_bits(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  double s = 0.0;
  for (double l : es.eigenvalues()) {
    if (l > 1e-14) s -= l * std::log2(l);
  }
  return s;
}

/// Moves party perm[j] of `s` to position j.
inline PureState relabel(const PureState& s, const std::vector<std::size_t>& perm) {
  const std::size_t n = s.parties();
  const int d = s.local_dim();
  amekit::Vector v(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    const Labels l = decode(x, n, d);
    v[encode(pick(l, perm), d)] = s.amplitudes()[x];
  }
  return PureState(n, d, v);
}

}  // namespace oracle
