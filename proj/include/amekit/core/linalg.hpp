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

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "amekit/core/index.hpp"
#include "amekit/core/state.hpp"

namespace amekit {

/// Amplitudes reshaped into a (d^|rows| x d^|cols|) matrix.
///
/// Row and column indices are big-endian over `rows` and `cols` in the listed
/// order; together they must cover every party exactly once.
inline Matrix cut_matrix(const PureState& state, std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols) {
  const std::size_t n = state.parties();
  Parties all(rows.begin(), rows.end());
  all.insert(all.end(), cols.begin(), cols.end());
  check_parties(all, n, "cut_matrix");
  if (all.size() != n) throw DomainError("cut_matrix: parties not covered");
  const auto row_off = party_offsets(rows, n, state.local_dim());
  const auto col_off = party_offsets(cols, n, state.local_dim());
  const auto& amp = state.amplitudes();
  Matrix m(static_cast<Eigen::Index>(row_off.size()),
           static_cast<Eigen::Index>(col_off.size()));
  for (std::size_t c = 0; c < col_off.size(); ++c) {
    for (std::size_t r = 0; r < row_off.size(); ++r) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          amp[static_cast<Eigen::Index>(row_off[r] + col_off[c])];
    }
  }
  return m;
}

/// rho_keep = Tr_rest |psi><psi|, indexed in the order of `keep`.
inline DensityMatrix partial_trace(const PureState& state,
                                   std::span<const std::size_t> keep) {
  const std::size_t n = state.parties();
  if (keep.empty() || keep.size() >= n) {
    throw DomainError("partial_trace: keep-set must be a nonempty strict subset");
  }
  check_parties(keep, n, "partial_trace");
  const Matrix m = cut_matrix(state, keep, complement(keep, n));
  Matrix rho = m * m.adjoint();
  // Exact Hermitian symmetrization; rounding can leave 1e-17 asymmetry.
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(std::move(rho));
}

inline DensityMatrix partial_trace(const PureState& state,
                                   std::initializer_list<std::size_t> keep) {
  return partial_trace(state, std::span<const std::size_t>(keep.begin(), keep.size()));
}

/// |psi><psi| as a density matrix.
inline DensityMatrix projector(const PureState& state) {
  return DensityMatrix(state.amplitudes() * state.amplitudes().adjoint());
}

/// Eigenvalues of rho, ascending; rejects negatives beyond kTolNorm.
inline Eigen::VectorXd spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix(),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw DomainError("spectrum: eigen decomposition failed");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  if (ev.size() > 0 && ev.minCoeff() < -kTolNorm) {
    throw DomainError("density matrix has negative eigenvalue " +
                      std::to_string(ev.minCoeff()));
  }
  return ev;
}

/// Shannon entropy in bits of a probability list, dropping p <= kTolEig.
inline double shannon_bits(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p > kTolEig) s -= p * std::log2(p);
  }
  return s;
}

/// Von Neumann entropy in bits, clamped to [0, log2 dim].
inline double entropy_bits(const DensityMatrix& rho) {
  const Eigen::VectorXd ev = spectrum(rho);
  const double s = shannon_bits(std::span<const double>(ev.data(), ev.size()));
  return std::clamp(s, 0.0, std::log2(static_cast<double>(rho.dim())));
}

/// Singular values of the B x A amplitude matrix, descending (length d^|B|).
inline std::vector<double> schmidt_coefficients(const PureState& state,
                                                const Bipartition& cut) {
  if (cut.n() != state.parties()) {
    throw DomainError("schmidt_coefficients: cut is for " +
                      std::to_string(cut.n()) + " parties, state has " +
                      std::to_string(state.parties()));
  }
  const Matrix m = cut_matrix(state, cut.b(), cut.a());
  Eigen::JacobiSVD<Matrix> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  std::vector<double> out(sv.data(), sv.data() + sv.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Entanglement entropy in bits from Schmidt coefficients.
inline double schmidt_entropy_bits(std::span<const double> coefficients) {
  std::vector<double> p;
  p.reserve(coefficients.size());
  for (double c : coefficients) p.push_back(c * c);
  return std::max(0.0, shannon_bits(p));
}

/// Kronecker product; a's index is the more significant.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

/// max |U^dagger U - I|.
inline double unitarity_deviation(const Matrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

/// Applies a d^s x d^s unitary to the listed parties (of which the first is
/// the most significant index of the operator).
inline PureState apply_on_parties(const PureState& state, const Matrix& op,
                                  std::span<const std::size_t> parties) {
  const std::size_t n = state.parties();
  const int d = state.local_dim();
  if (parties.empty()) throw DomainError("apply_on_parties: no parties given");
  check_parties(parties, n, "apply_on_parties");
  const std::size_t sub_dim = state_dimension(parties.size(), d);
  if (static_cast<std::size_t>(op.rows()) != sub_dim ||
      static_cast<std::size_t>(op.cols()) != sub_dim) {
    throw DomainError("apply_on_parties: operator must be " +
                      std::to_string(sub_dim) + "x" + std::to_string(sub_dim));
  }
  const double dev = unitarity_deviation(op);
  if (!(dev <= kTolNorm)) {
    throw DomainError("apply_on_parties: operator is not unitary (deviation " +
                      std::to_string(dev) + ")");
  }
  const auto sub = party_offsets(parties, n, d);
  const auto base = party_offsets(complement(parties, n), n, d);
  const Vector& in = state.amplitudes();
  Vector out(in.size());
  Vector gathered(static_cast<Eigen::Index>(sub_dim));
  for (std::size_t b : base) {
    for (std::size_t j = 0; j < sub_dim; ++j) {
      gathered[static_cast<Eigen::Index>(j)] =
          in[static_cast<Eigen::Index>(b + sub[j])];
    }
    const Vector mapped = op * gathered;
    for (std::size_t i = 0; i < sub_dim; ++i) {
      out[static_cast<Eigen::Index>(b + sub[i])] =
          mapped[static_cast<Eigen::Index>(i)];
    }
  }
  return PureState(n, d, std::move(out));
}

inline PureState apply_on_parties(const PureState& state, const Matrix& op,
                                  std::initializer_list<std::size_t> parties) {
  return apply_on_parties(
      state, op, std::span<const std::size_t>(parties.begin(), parties.size()));
}

/// |<x|y>|^2.
inline double fidelity(const PureState& x, const PureState& y) {
  if (x.parties() != y.parties() || x.local_dim() != y.local_dim()) {
    throw DomainError("fidelity: states have different shapes");
  }
  return std::clamp(std::norm(x.amplitudes().dot(y.amplitudes())), 0.0, 1.0);
}

/// <x|rho|x>.
inline double fidelity(const PureState& x, const DensityMatrix& rho) {
  if (x.size() != rho.dim()) {
    throw DomainError("fidelity: dimension mismatch between state and density matrix");
  }
  const Complex v = x.amplitudes().dot(rho.matrix() * x.amplitudes());
  return std::clamp(v.real(), 0.0, 1.0);
}

/// (1/2) sum |eig(rho - sigma)|.
inline double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DomainError("trace_distance: dimension mismatch");
  }
  const Matrix diff = rho.matrix() - sigma.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(diff, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

/// max |rho - I/dim|.
inline double mixedness_deviation(const DensityMatrix& rho) {
  const auto dim = static_cast<Eigen::Index>(rho.dim());
  return (rho.matrix() - Matrix::Identity(dim, dim) / static_cast<double>(dim))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace amekit
