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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amekit/ame/certify.hpp"
#include "amekit/core/index.hpp"
#include "amekit/core/linalg.hpp"
#include "amekit/core/measure.hpp"
#include "amekit/core/pauli.hpp"
#include "amekit/core/state.hpp"

namespace amekit::teleport {

/// A -> B runs the joint-sender protocol, B -> A the local-sender one.
enum class Direction { JointToLocal, LocalToJoint };

inline std::string to_string(Direction d) {
  return d == Direction::JointToLocal ? "A->B" : "B->A";
}

/// How the columns outside the phi(k) block are filled.
enum class Completion { GramSchmidt, Householder };

/// U_A with U_A |phi(k)>_A = |k_1 ... k_m>|0...0>_{A'}.
///
/// A' is the tail A_{m+1}, ..., A_{n-m} of the cut's A list.
struct JointReductionUnitary {
  Bipartition cut;
  Matrix matrix;
};

namespace detail {

inline Matrix complete_gram_schmidt(const std::vector<bool>& fixed, Matrix w) {
  const Eigen::Index dim = w.rows();
  std::vector<Eigen::Index> filled;
  for (Eigen::Index c = 0; c < dim; ++c) {
    if (fixed[static_cast<std::size_t>(c)]) filled.push_back(c);
  }
  Eigen::Index candidate = 0;
  for (Eigen::Index c = 0; c < dim; ++c) {
    if (fixed[static_cast<std::size_t>(c)]) continue;
    while (true) {
      if (candidate >= dim) throw DomainError("unitary completion ran out of candidates");
      Vector v = Vector::Unit(dim, candidate++);
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index f : filled) v -= w.col(f).dot(v) * w.col(f);
      }
      const double norm = v.norm();
      if (norm > 1e-6) {
        w.col(c) = v / norm;
        filled.push_back(c);
        break;
      }
    }
  }
  return w;
}

inline Matrix complete_householder(const Matrix& block, const std::vector<bool>& fixed,
                                   Matrix w) {
  Eigen::HouseholderQR<Matrix> qr(block);
  const Matrix q = qr.householderQ();
  Eigen::Index next = block.cols();
  for (Eigen::Index c = 0; c < w.rows(); ++c) {
    if (!fixed[static_cast<std::size_t>(c)]) w.col(c) = q.col(next++);
  }
  return w;
}

}  // namespace detail

/// Builds U_A from the canonical form across `cut`.
///
/// The adjoint's column for |k>|0>_{A'} is phi(k); all other columns are an
/// orthonormal completion chosen by `completion`.
inline JointReductionUnitary build_reduction_unitary(
    const PureState& state, const Bipartition& cut,
    Completion completion = Completion::GramSchmidt) {
  const CanonicalForm form = canonical_phi(state, cut);
  const int d = state.local_dim();
  const auto dim_a = static_cast<Eigen::Index>(state_dimension(cut.a().size(), d));
  const auto ancilla = static_cast<Eigen::Index>(
      state_dimension(cut.a().size() - cut.m(), d));
  const auto block_size = static_cast<Eigen::Index>(form.phi_states.size());

  Matrix block(dim_a, block_size);
  Matrix w = Matrix::Zero(dim_a, dim_a);
  std::vector<bool> fixed(static_cast<std::size_t>(dim_a), false);
  for (Eigen::Index k = 0; k < block_size; ++k) {
    block.col(k) = form.phi_states[static_cast<std::size_t>(k)].amplitudes();
    w.col(k * ancilla) = block.col(k);
    fixed[static_cast<std::size_t>(k * ancilla)] = true;
  }
  w = completion == Completion::GramSchmidt
          ? detail::complete_gram_schmidt(fixed, std::move(w))
          : detail::complete_householder(block, fixed, std::move(w));
  return {cut, w.adjoint()};
}

/// prod_i |Psi>_{B_i A_i} (x) |0...0>_{A'}, built directly from amplitudes.
inline PureState epr_product_state(const Bipartition& cut, int d) {
  const std::size_t n = cut.n();
  const std::size_t m = cut.m();
  Vector v = Vector::Zero(static_cast<Eigen::Index>(state_dimension(n, d)));
  const std::size_t blocks = state_dimension(m, d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(blocks));
  for (std::size_t k = 0; k < blocks; ++k) {
    const Labels kl = basis_labels(k, m, d);
    Labels full(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
      full[cut.b()[i]] = kl[i];
      full[cut.a()[i]] = kl[i];
    }
    v[static_cast<Eigen::Index>(basis_index(full, d))] = amp;
  }
  return PureState(n, d, std::move(v));
}

/// Applies U_A: an AME state becomes m EPR pairs B_i-A_i plus |0> on A'.
inline PureState reduce_to_eprs(const PureState& state, const Bipartition& cut) {
  const auto u = build_reduction_unitary(state, cut);
  return apply_on_parties(state, u.matrix, cut.a());
}

/// Classical record of one protocol run.
struct TeleportTranscript {
  Direction direction;
  Bipartition cut;
  /// outcomes[i] is the Bell result for teleported qudit i (pair B_i-A_i).
  std::vector<BellOutcome> outcomes;
  std::vector<GeneralizedPauli> corrections;
  double probability;
  double final_fidelity;

  /// Classical communication cost in dits.
  std::size_t dits() const noexcept { return 2 * outcomes.size(); }
};

namespace detail {

inline void check_resource(const PureState& state, const Bipartition& cut) {
  if (cut.n() != state.parties()) {
    throw DomainError("teleport: cut is for " + std::to_string(cut.n()) +
                      " parties, state has " + std::to_string(state.parties()));
  }
}

/// Bell-measures each (payload_i, sender_i) pair of `system`.
///
/// With `forced` the outcomes are projected; otherwise they are sampled
/// jointly under `seed`.
inline MeasurementResult bell_measure_pairs(PureState system,
                                            const Parties& payload_parties,
                                            const Parties& sender_parties,
                                            const std::optional<std::vector<BellOutcome>>& forced,
                                            std::uint64_t seed, int d) {
  const Matrix frame_adj = bell_frame(d).adjoint();
  Parties measured;
  for (std::size_t i = 0; i < payload_parties.size(); ++i) {
    system = apply_on_parties(system, frame_adj, {payload_parties[i], sender_parties[i]});
    measured.push_back(payload_parties[i]);
    measured.push_back(sender_parties[i]);
  }
  if (forced) {
    if (forced->size() != payload_parties.size()) {
      throw DomainError("teleport: expected " + std::to_string(payload_parties.size()) +
                        " forced outcomes, got " + std::to_string(forced->size()));
    }
    Labels labels;
    for (const BellOutcome& o : *forced) {
      check_outcome(o, d);
      labels.push_back(o.a);
      labels.push_back(o.b);
    }
    return measure_outcome(system, measured, labels);
  }
  return projective_measure(system, measured, seed);
}

inline std::vector<BellOutcome> pair_outcomes(const Labels& labels) {
  std::vector<BellOutcome> out;
  for (std::size_t i = 0; i + 1 < labels.size(); i += 2) {
    out.push_back({labels[i], labels[i + 1]});
  }
  return out;
}

inline Parties range(std::size_t first, std::size_t count) {
  Parties p(count);
  for (std::size_t i = 0; i < count; ++i) p[i] = first + i;
  return p;
}

}  // namespace detail

/// Joint senders A teleport an m-qudit payload, one qudit to each B_i.
///
/// A applies U_A, Bell-measures payload qudit i with A_i and sends two dits
/// to B_i, who applies a local Pauli correction. The fidelity compares B's
/// final reduced state with the payload.
inline TeleportTranscript teleport_joint_to_local(
    const PureState& state, const JointReductionUnitary& reduction,
    const PureState& payload,
    const std::optional<std::vector<BellOutcome>>& forced_outcomes = std::nullopt,
    std::uint64_t seed = 0) {
  const Bipartition& cut = reduction.cut;
  detail::check_resource(state, cut);
  const int d = state.local_dim();
  if (payload.local_dim() != d || payload.parties() != cut.m()) {
    throw DomainError("teleport: payload must be " + std::to_string(cut.m()) +
                      " qudits of dimension " + std::to_string(d));
  }
  const std::size_t n = state.parties();
  const std::size_t m = cut.m();
  const Parties payload_parties = detail::range(n, m);
  const Parties senders(cut.a().begin(), cut.a().begin() + static_cast<long>(m));

  PureState system = apply_on_parties(tensor(state, payload), reduction.matrix, cut.a());
  MeasurementResult measured = detail::bell_measure_pairs(
      std::move(system), payload_parties, senders, forced_outcomes, seed, d);

  const auto outcomes = detail::pair_outcomes(measured.outcome);
  std::vector<GeneralizedPauli> corrections;
  PureState out = std::move(measured.post_state);
  for (std::size_t i = 0; i < m; ++i) {
    corrections.push_back(bell_correction(outcomes[i], d));
    out = apply_on_parties(out, corrections.back().matrix(), {cut.b()[i]});
  }
  const double f = fidelity(payload, partial_trace(out, cut.b()));
  return {Direction::JointToLocal, cut, outcomes, corrections, measured.probability, f};
}

inline TeleportTranscript teleport_joint_to_local(
    const PureState& state, const Bipartition& cut, const PureState& payload,
    const std::optional<std::vector<BellOutcome>>& forced_outcomes = std::nullopt,
    std::uint64_t seed = 0) {
  detail::check_resource(state, cut);
  return teleport_joint_to_local(state, build_reduction_unitary(state, cut), payload,
                                 forced_outcomes, seed);
}

/// The joint recovery applied by A: (C_1 (x) ... (x) C_m (x) I_{A'}) U_A.
inline Matrix joint_recovery(const JointReductionUnitary& reduction,
                             const std::vector<GeneralizedPauli>& corrections, int d) {
  Matrix c = Matrix::Identity(1, 1);
  for (const auto& p : corrections) c = kron(c, p.matrix());
  const auto ancilla = static_cast<Eigen::Index>(
      state_dimension(reduction.cut.a().size() - reduction.cut.m(), d));
  return kron(c, Matrix::Identity(ancilla, ancilla)) * reduction.matrix;
}

/// Each B_i teleports one qudit to A using only local operations.
///
/// B_i Bell-measures its payload against its share and broadcasts two dits;
/// A then applies U_A and the outcome-dependent corrections as one joint
/// unitary and holds the payloads on A_1..A_m.
inline TeleportTranscript teleport_local_to_joint(
    const PureState& state, const JointReductionUnitary& reduction,
    const std::vector<PureState>& payloads,
    const std::optional<std::vector<BellOutcome>>& forced_outcomes = std::nullopt,
    std::uint64_t seed = 0) {
  const Bipartition& cut = reduction.cut;
  detail::check_resource(state, cut);
  const int d = state.local_dim();
  const std::size_t n = state.parties();
  const std::size_t m = cut.m();
  if (payloads.size() != m) {
    throw DomainError("teleport: expected " + std::to_string(m) + " payload qudits, got " +
                      std::to_string(payloads.size()));
  }
  PureState system = state;
  std::optional<PureState> product;
  for (const PureState& p : payloads) {
    if (p.parties() != 1 || p.local_dim() != d) {
      throw DomainError("teleport: each payload must be one qudit of dimension " +
                        std::to_string(d));
    }
    system = tensor(system, p);
    product = product ? tensor(*product, p) : p;
  }
  MeasurementResult measured = detail::bell_measure_pairs(
      std::move(system), detail::range(n, m), cut.b(), forced_outcomes, seed, d);

  const auto outcomes = detail::pair_outcomes(measured.outcome);
  std::vector<GeneralizedPauli> corrections;
  for (const auto& o : outcomes) corrections.push_back(bell_correction(o, d));
  const PureState out = apply_on_parties(measured.post_state,
                                         joint_recovery(reduction, corrections, d), cut.a());
  const Parties receivers(cut.a().begin(), cut.a().begin() + static_cast<long>(m));
  const double f = fidelity(*product, partial_trace(out, receivers));
  return {Direction::LocalToJoint, cut, outcomes, corrections, measured.probability, f};
}

inline TeleportTranscript teleport_local_to_joint(
    const PureState& state, const Bipartition& cut, const std::vector<PureState>& payloads,
    const std::optional<std::vector<BellOutcome>>& forced_outcomes = std::nullopt,
    std::uint64_t seed = 0) {
  detail::check_resource(state, cut);
  return teleport_local_to_joint(state, build_reduction_unitary(state, cut), payloads,
                                 forced_outcomes, seed);
}

/// Every sequence of m Bell outcomes, d^(2m) in total.
inline std::vector<std::vector<BellOutcome>> all_outcome_sequences(std::size_t m, int d) {
  const std::size_t count = state_dimension(2 * m, d);
  std::vector<std::vector<BellOutcome>> out;
  out.reserve(count);
  for (std::size_t x = 0; x < count; ++x) {
    out.push_back(detail::pair_outcomes(basis_labels(x, 2 * m, d)));
  }
  return out;
}

/// One transcript per Bell outcome sequence.
struct Audit {
  std::vector<TeleportTranscript> transcripts;
  double min_fidelity = 1.0;
  /// max |p - d^(-2m)| over outcomes.
  double max_probability_deviation = 0.0;
};

namespace detail {

inline void absorb(Audit& audit, TeleportTranscript t, std::size_t m, int d) {
  const double uniform = 1.0 / static_cast<double>(state_dimension(2 * m, d));
  audit.min_fidelity = std::min(audit.min_fidelity, t.final_fidelity);
  audit.max_probability_deviation =
      std::max(audit.max_probability_deviation, std::abs(t.probability - uniform));
  audit.transcripts.push_back(std::move(t));
}

}  // namespace detail

inline Audit audit_joint_to_local(const PureState& state, const Bipartition& cut,
                                  const PureState& payload) {
  detail::check_resource(state, cut);
  const auto u = build_reduction_unitary(state, cut);
  Audit audit;
  for (const auto& seq : all_outcome_sequences(cut.m(), state.local_dim())) {
    detail::absorb(audit, teleport_joint_to_local(state, u, payload, seq), cut.m(),
                   state.local_dim());
  }
  return audit;
}

inline Audit audit_local_to_joint(const PureState& state, const Bipartition& cut,
                                  const std::vector<PureState>& payloads) {
  detail::check_resource(state, cut);
  const auto u = build_reduction_unitary(state, cut);
  Audit audit;
  for (const auto& seq : all_outcome_sequences(cut.m(), state.local_dim())) {
    detail::absorb(audit, teleport_local_to_joint(state, u, payloads, seq), cut.m(),
                   state.local_dim());
  }
  return audit;
}

}  // namespace amekit::teleport
