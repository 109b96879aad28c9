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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "amekit/core/index.hpp"
#include "amekit/core/linalg.hpp"
#include "amekit/core/random.hpp"
#include "amekit/core/state.hpp"

namespace amekit {

struct MeasurementResult {
  Labels outcome;
  /// Full register after collapse; measured parties sit in |outcome>.
  PureState post_state;
  double probability;
};

/// Residual state of the unmeasured parties given an outcome.
struct ConditionalState {
  PureState residual;
  double probability;
};

namespace detail {

inline void check_measured(const PureState& state,
                           std::span<const std::size_t> parties) {
  if (parties.empty() || parties.size() >= state.parties()) {
    throw DomainError("measurement: parties must be a nonempty strict subset");
  }
  check_parties(parties, state.parties(), "measurement");
}

}  // namespace detail

/// Born probabilities of all d^|parties| computational outcomes, indexed
/// big-endian in the listed party order.
inline std::vector<double> outcome_distribution(const PureState& state,
                                                std::span<const std::size_t> parties) {
  detail::check_measured(state, parties);
  const Matrix m = cut_matrix(state, parties, complement(parties, state.parties()));
  std::vector<double> p(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    p[static_cast<std::size_t>(r)] = m.row(r).squaredNorm();
  }
  return p;
}

/// Deterministic variant: projects onto a given outcome.
inline MeasurementResult measure_outcome(const PureState& state,
                                         std::span<const std::size_t> parties,
                                         std::span<const Dit> outcome) {
  detail::check_measured(state, parties);
  if (outcome.size() != parties.size()) {
    throw DomainError("measure_outcome: one label per measured party required");
  }
  const std::size_t n = state.parties();
  const int d = state.local_dim();
  const std::size_t row = basis_index(outcome, d);
  const auto sub = party_offsets(parties, n, d);
  const auto base = party_offsets(complement(parties, n), n, d);
  Vector post = Vector::Zero(state.amplitudes().size());
  double prob = 0.0;
  for (std::size_t b : base) {
    const auto idx = static_cast<Eigen::Index>(b + sub[row]);
    post[idx] = state.amplitudes()[idx];
    prob += std::norm(post[idx]);
  }
  if (!(prob > kTolEig)) {
    throw DomainError("measure_outcome: outcome has zero probability");
  }
  post /= std::sqrt(prob);
  return {Labels(outcome.begin(), outcome.end()), PureState(n, d, std::move(post)),
          prob};
}

/// Samples an outcome from the Born distribution under `seed`.
inline MeasurementResult projective_measure(const PureState& state,
                                            std::span<const std::size_t> parties,
                                            std::uint64_t seed) {
  const auto p = outcome_distribution(state, parties);
  Rng rng(seed);
  const double u = rng.uniform();
  double acc = 0.0;
  std::size_t pick = p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    if (u < acc) {
      pick = i;
      break;
    }
  }
  // Rounding can leave the cumulative sum just under 1; take the last
  // outcome with nonzero weight.
  if (pick == p.size()) {
    for (std::size_t i = p.size(); i-- > 0;) {
      if (p[i] > kTolEig) {
        pick = i;
        break;
      }
    }
  }
  const Labels outcome = basis_labels(pick, parties.size(), state.local_dim());
  return measure_outcome(state, parties, outcome);
}

/// <outcome|_parties |psi>, renormalized, on the remaining parties in
/// ascending order.
inline ConditionalState condition_on(const PureState& state,
                                     std::span<const std::size_t> parties,
                                     std::span<const Dit> outcome) {
  detail::check_measured(state, parties);
  if (outcome.size() != parties.size()) {
    throw DomainError("condition_on: one label per measured party required");
  }
  const Parties rest = complement(parties, state.parties());
  const Matrix m = cut_matrix(state, parties, rest);
  const auto row = static_cast<Eigen::Index>(basis_index(outcome, state.local_dim()));
  Vector v = m.row(row).transpose();
  const double prob = v.squaredNorm();
  if (!(prob > kTolEig)) {
    throw DomainError("condition_on: outcome has zero probability");
  }
  return {PureState::normalized(rest.size(), state.local_dim(), std::move(v)), prob};
}

}  // namespace amekit
