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
#include <optional>
#include <vector>

#include "amekit/core/index.hpp"
#include "amekit/core/linalg.hpp"
#include "amekit/core/state.hpp"

namespace amekit {

struct CutEntropy {
  Bipartition cut;
  double entropy;  // bits
  double deficit;  // m log2 d - entropy
};

/// Outcome of an AME certification.
///
/// `is_ame` holds iff the largest deficit over the examined floor(n/2)-cuts
/// is at most kTolEnt.
struct AmeReport {
  bool is_ame;
  Bipartition worst_bipartition;
  double worst_entropy_deficit;
  std::vector<CutEntropy> per_cut_entropies;
};

struct CertifyOptions {
  /// Also report cuts with |B| < floor(n/2). They never affect the verdict.
  bool include_smaller_cuts = false;
};

inline CutEntropy cut_entropy(const PureState& state, const Bipartition& cut) {
  const double s = entropy_bits(partial_trace(state, cut.b()));
  const double max_s =
      static_cast<double>(cut.m()) * std::log2(static_cast<double>(state.local_dim()));
  return {cut, s, max_s - s};
}

/// Checks maximal entanglement on every size-floor(n/2) subset B.
///
/// Smaller cuts follow: tracing a maximally mixed marginal further leaves a
/// maximally mixed marginal.
inline AmeReport certify_ame(const PureState& state, CertifyOptions options = {}) {
  const std::size_t n = state.parties();
  if (n < 2) throw DomainError("certify_ame: need at least two parties");
  const std::size_t half = n / 2;

  std::vector<CutEntropy> cuts;
  std::optional<CutEntropy> worst;
  for (const Parties& b : subsets_of_size(n, half)) {
    CutEntropy c = cut_entropy(state, Bipartition(n, b));
    if (!worst || c.deficit > worst->deficit) worst = c;
    cuts.push_back(std::move(c));
  }
  if (options.include_smaller_cuts) {
    for (std::size_t m = 1; m < half; ++m) {
      for (const Parties& b : subsets_of_size(n, m)) {
        cuts.push_back(cut_entropy(state, Bipartition(n, b)));
      }
    }
  }
  return {worst->deficit <= kTolEnt, worst->cut, worst->deficit, std::move(cuts)};
}

/// Expansion (1/sqrt(d^m)) sum_k |k>_B |phi(k)>_A across one cut.
struct CanonicalForm {
  Bipartition cut;
  /// phi_states[k] for k the big-endian index of labels on B.
  std::vector<PureState> phi_states;

  /// Rebuilds the n-party state from the expansion.
  PureState reassemble() const {
    const std::size_t n = cut.n();
    const int d = phi_states.front().local_dim();
    const auto row_off = party_offsets(cut.b(), n, d);
    const auto col_off = party_offsets(cut.a(), n, d);
    Vector v = Vector::Zero(static_cast<Eigen::Index>(state_dimension(n, d)));
    const double scale = 1.0 / std::sqrt(static_cast<double>(phi_states.size()));
    for (std::size_t k = 0; k < phi_states.size(); ++k) {
      const Vector& phi = phi_states[k].amplitudes();
      for (std::size_t c = 0; c < col_off.size(); ++c) {
        v[static_cast<Eigen::Index>(row_off[k] + col_off[c])] =
            scale * phi[static_cast<Eigen::Index>(c)];
      }
    }
    return PureState::normalized(n, d, std::move(v));
  }
};

namespace detail {

/// Columns sqrt(d^m) <k|_B |psi>, one per B-label k.
inline Matrix phi_columns(const PureState& state, const Bipartition& cut) {
  const Matrix m = cut_matrix(state, cut.b(), cut.a());
  return std::sqrt(static_cast<double>(m.rows())) * m.transpose();
}

inline double gram_deviation(const Matrix& columns) {
  const Matrix gram = columns.adjoint() * columns;
  return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

}  // namespace detail

/// max |<phi(k)|phi(k')> - delta_kk'| across the cut; zero iff the state is
/// maximally entangled there.
inline double canonical_gram_deviation(const PureState& state, const Bipartition& cut) {
  if (cut.n() != state.parties()) {
    throw DomainError("canonical_gram_deviation: cut does not match state");
  }
  return detail::gram_deviation(detail::phi_columns(state, cut));
}

/// Projects B onto each |k> and rescales by sqrt(d^m).
///
/// Throws NotMaximallyEntangled when the phi(k) fail to be orthonormal within
/// kTolNorm.
inline CanonicalForm canonical_phi(const PureState& state, const Bipartition& cut) {
  if (cut.n() != state.parties()) {
    throw DomainError("canonical_phi: cut does not match state");
  }
  const Matrix cols = detail::phi_columns(state, cut);
  const double dev = detail::gram_deviation(cols);
  if (!(dev <= kTolNorm)) throw NotMaximallyEntangled(cut.to_string(), dev);
  CanonicalForm form{cut, {}};
  form.phi_states.reserve(static_cast<std::size_t>(cols.cols()));
  for (Eigen::Index k = 0; k < cols.cols(); ++k) {
    form.phi_states.push_back(
        PureState::normalized(cut.a().size(), state.local_dim(), cols.col(k)));
  }
  return form;
}

}  // namespace amekit
