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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amekit/ame/certify.hpp"
#include "amekit/core/index.hpp"
#include "amekit/core/linalg.hpp"
#include "amekit/core/measure.hpp"
#include "amekit/core/pauli.hpp"
#include "amekit/core/random.hpp"
#include "amekit/core/state.hpp"

namespace amekit::qss {

/// A d-dimensional secret sum_i a_i |i>.
class SecretState {
 public:
  SecretState(int d, Vector amplitudes) : state_(1, d, std::move(amplitudes)) {}
  explicit SecretState(PureState single) : state_(std::move(single)) {
    if (state_.parties() != 1) throw DomainError("SecretState: expected one qudit");
  }

  static SecretState basis(int d, int i) { return SecretState(PureState::basis(d, {i})); }
  static SecretState uniform(int d) {
    return SecretState(d, Vector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d))));
  }
  static SecretState random(int d, Rng& rng) { return SecretState(random_state(1, d, rng)); }

  int local_dim() const noexcept { return state_.local_dim(); }
  const Vector& amplitudes() const noexcept { return state_.amplitudes(); }
  const PureState& as_state() const noexcept { return state_; }

 private:
  PureState state_;
};

/// Where a scheme derived from an AME state came from.
struct DealerOrigin {
  PureState ame;
  std::size_t dealer;
};

/// Pure ((m, 2m-1)) threshold scheme with share and secret dimension d.
///
/// basis_states[i] is |Phi_i> on the 2m-1 shares. Shares are addressed by
/// position 0..2m-2; `players` records which original parties they were.
struct QssScheme {
  std::size_t m;
  int d;
  Parties players;
  std::vector<PureState> basis_states;
  std::optional<DealerOrigin> dealer_origin;

  std::size_t shares() const noexcept { return 2 * m - 1; }
};

/// Quantified scheme conditions, each exhaustively enumerated.
struct SchemeCheck {
  /// max |<Phi_i|Phi_j> - delta_ij|.
  double orthonormality_deviation = 0.0;
  /// Worst Gram deviation of phi(k,i) over every m-subset.
  double recovery_deviation = 0.0;
  /// Worst |Tr_rest |Phi_i><Phi_j| - delta_ij rho| over every (m-1)-subset.
  double security_deviation = 0.0;

  bool valid() const noexcept {
    return orthonormality_deviation <= kTolNorm && recovery_deviation <= kTolNorm &&
           security_deviation <= kTolNorm;
  }
};

enum class Validation { Eager, Deferred };

namespace detail {

inline void check_positions(const QssScheme& s, std::span<const std::size_t> positions,
                            const char* who) {
  check_parties(positions, s.shares(), who);
}

/// Reduced state on `keep`, or the full projector when keep is everything.
inline DensityMatrix marginal(const PureState& state, std::span<const std::size_t> keep) {
  if (keep.size() == state.parties()) {
    const Parties identity_order = complement({}, state.parties());
    if (std::equal(keep.begin(), keep.end(), identity_order.begin())) return projector(state);
  }
  return partial_trace(state, keep);
}

/// Columns phi(k, i) for authorized set A, flat column index k*d + i.
inline Matrix phi_ki_columns(const QssScheme& s, std::span<const std::size_t> authorized) {
  const Parties rest = complement(authorized, s.shares());
  const double scale = std::sqrt(static_cast<double>(state_dimension(rest.size(), s.d)));
  const auto dim_a = static_cast<Eigen::Index>(state_dimension(authorized.size(), s.d));
  Matrix w(dim_a, dim_a);
  for (int i = 0; i < s.d; ++i) {
    const Matrix mi = cut_matrix(s.basis_states[static_cast<std::size_t>(i)], rest, authorized);
    for (Eigen::Index k = 0; k < mi.rows(); ++k) {
      w.col(k * s.d + i) = scale * mi.row(k).transpose();
    }
  }
  return w;
}

inline double gram_deviation(const Matrix& w) {
  return (w.adjoint() * w - Matrix::Identity(w.cols(), w.cols())).cwiseAbs().maxCoeff();
}

inline double security_deviation(const QssScheme& s, std::span<const std::size_t> unauthorized) {
  if (unauthorized.empty()) return 0.0;
  const Parties rest = complement(unauthorized, s.shares());
  std::vector<Matrix> cuts;
  for (const auto& phi : s.basis_states) cuts.push_back(cut_matrix(phi, unauthorized, rest));
  const Matrix rho0 = cuts[0] * cuts[0].adjoint();
  double worst = 0.0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = 0; j < cuts.size(); ++j) {
      Matrix cross = cuts[i] * cuts[j].adjoint();
      if (i == j) cross -= rho0;
      worst = std::max(worst, cross.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace detail

/// Exhaustive check of orthonormality, recoverability by every m-subset and
/// secrecy against every (m-1)-subset.
inline SchemeCheck check_scheme(const QssScheme& s) {
  SchemeCheck c;
  const auto dim = static_cast<Eigen::Index>(s.basis_states.size());
  Matrix basis(s.basis_states.front().amplitudes().size(), dim);
  for (Eigen::Index i = 0; i < dim; ++i) basis.col(i) = s.basis_states[static_cast<std::size_t>(i)].amplitudes();
  c.orthonormality_deviation = detail::gram_deviation(basis);
  for (const Parties& a : subsets_of_size(s.shares(), s.m)) {
    c.recovery_deviation =
        std::max(c.recovery_deviation, detail::gram_deviation(detail::phi_ki_columns(s, a)));
  }
  for (const Parties& u : subsets_of_size(s.shares(), s.m - 1)) {
    c.security_deviation = std::max(c.security_deviation, detail::security_deviation(s, u));
  }
  return c;
}

inline void validate_scheme(const QssScheme& s) {
  const SchemeCheck c = check_scheme(s);
  if (c.valid()) return;
  throw InvalidScheme("scheme check failed: orthonormality " +
                      std::to_string(c.orthonormality_deviation) + ", recovery " +
                      std::to_string(c.recovery_deviation) + ", security " +
                      std::to_string(c.security_deviation));
}

/// Wraps externally supplied basis states into a scheme.
inline QssScheme make_scheme(std::size_t m, int d, std::vector<PureState> basis_states,
                             Validation validation = Validation::Eager) {
  if (m == 0) throw DomainError("make_scheme: threshold must be >= 1");
  if (basis_states.size() != static_cast<std::size_t>(d)) {
    throw DomainError("make_scheme: need exactly d = " + std::to_string(d) + " basis states");
  }
  for (const auto& b : basis_states) {
    if (b.local_dim() != d || b.parties() != 2 * m - 1) {
      throw DomainError("make_scheme: basis states must be 2m-1 = " + std::to_string(2 * m - 1) +
                        " qudits of dimension " + std::to_string(d));
    }
  }
  QssScheme s{m, d, complement({}, 2 * m - 1), std::move(basis_states), std::nullopt};
  if (validation == Validation::Eager) validate_scheme(s);
  return s;
}

/// |Phi_i> = sqrt(d) <i|_D |Phi> for an AME(2m, d) state and dealer D.
inline QssScheme qss_from_ame(const PureState& ame, std::size_t dealer,
                              Validation validation = Validation::Eager) {
  const std::size_t n = ame.parties();
  if (n < 2 || n % 2 != 0) {
    throw DomainError("qss_from_ame: need an even number of parties, got " + std::to_string(n));
  }
  if (dealer >= n) throw DomainError("qss_from_ame: dealer index out of range");
  const AmeReport report = certify_ame(ame);
  if (!report.is_ame) {
    throw InvalidScheme("qss_from_ame: input is not AME (deficit " +
                        std::to_string(report.worst_entropy_deficit) + " bits across " +
                        report.worst_bipartition.to_string() + ")");
  }
  const int d = ame.local_dim();
  const Parties dealer_list{dealer};
  const Parties players = complement(dealer_list, n);
  const Matrix rows = cut_matrix(ame, dealer_list, players);
  std::vector<PureState> basis;
  for (int i = 0; i < d; ++i) {
    Vector phi = std::sqrt(static_cast<double>(d)) * rows.row(i).transpose();
    if (!(std::abs(phi.squaredNorm() - 1.0) <= kTolNorm)) {
      throw InvalidScheme("qss_from_ame: projection onto dealer label " + std::to_string(i) +
                          " has squared norm " + std::to_string(phi.squaredNorm()) +
                          "; inconsistent with certification");
    }
    basis.emplace_back(players.size(), d, std::move(phi));
  }
  QssScheme s{n / 2, d, players, std::move(basis), DealerOrigin{ame, dealer}};
  if (validation == Validation::Eager) validate_scheme(s);
  return s;
}

/// sum_i a_i |Phi_i>.
inline PureState encode_secret(const QssScheme& s, const SecretState& secret) {
  if (secret.local_dim() != s.d) throw DomainError("encode_secret: secret dimension mismatch");
  Vector v = Vector::Zero(s.basis_states.front().amplitudes().size());
  for (int i = 0; i < s.d; ++i) {
    v += secret.amplitudes()[i] * s.basis_states[static_cast<std::size_t>(i)].amplitudes();
  }
  return PureState::normalized(s.shares(), s.d, std::move(v));
}

/// U_A |phi(k,i)>_A = |k_1 ... k_{m-1}>|i>, acting on the authorized shares.
struct RecoveryUnitary {
  Parties authorized;
  Matrix matrix;

  /// Share that holds the secret afterwards.
  std::size_t output() const { return authorized.back(); }
};

inline RecoveryUnitary build_recovery_unitary(const QssScheme& s, const Parties& authorized) {
  if (authorized.size() != s.m) {
    throw DomainError("build_recovery_unitary: need exactly m = " + std::to_string(s.m) +
                      " authorized shares");
  }
  detail::check_positions(s, authorized, "build_recovery_unitary");
  const Matrix w = detail::phi_ki_columns(s, authorized);
  const double dev = detail::gram_deviation(w);
  if (!(dev <= kTolNorm)) {
    throw InvalidScheme("recovery for shares {" + join(authorized) +
                        "}: <phi(k,i)|phi(k',j)> deviates from delta_kk' delta_ij by " +
                        std::to_string(dev));
  }
  return {authorized, w.adjoint()};
}

/// State of the output share after recovery (and an optional Pauli fix on it).
inline DensityMatrix recover_secret(const RecoveryUnitary& u, const PureState& shares,
                                    const std::optional<GeneralizedPauli>& correction = std::nullopt) {
  PureState out = apply_on_parties(shares, u.matrix, u.authorized);
  const Parties output{u.output()};
  if (correction) out = apply_on_parties(out, correction->matrix(), output);
  return detail::marginal(out, output);
}

struct SecurityResult {
  /// Largest trace distance between marginals of two probe encodings.
  double max_trace_distance = 0.0;
  /// Largest |rho - I/d^|U|| entry; set for AME-derived schemes only.
  std::optional<double> max_mixedness_deviation;

  bool passed() const noexcept {
    return max_trace_distance <= kTolEnt &&
           (!max_mixedness_deviation || *max_mixedness_deviation <= kTolEnt);
  }
};

/// The d basis secrets, the uniform superposition and one seeded random
/// secret. Their span is the whole secret space.
inline std::vector<SecretState> default_probes(int d, std::uint64_t seed) {
  std::vector<SecretState> probes;
  for (int i = 0; i < d; ++i) probes.push_back(SecretState::basis(d, i));
  probes.push_back(SecretState::uniform(d));
  Rng rng(seed);
  probes.push_back(SecretState::random(d, rng));
  return probes;
}

inline SecurityResult security_check(const QssScheme& s, const Parties& unauthorized,
                                     const std::vector<SecretState>& probes) {
  if (unauthorized.size() >= s.m) {
    throw DomainError("security_check: " + std::to_string(unauthorized.size()) +
                      " shares reach the threshold m = " + std::to_string(s.m));
  }
  detail::check_positions(s, unauthorized, "security_check");
  SecurityResult r;
  if (s.dealer_origin) r.max_mixedness_deviation = 0.0;
  if (unauthorized.empty()) return r;
  std::vector<DensityMatrix> marginals;
  for (const auto& p : probes) marginals.push_back(partial_trace(encode_secret(s, p), unauthorized));
  for (std::size_t i = 0; i < marginals.size(); ++i) {
    for (std::size_t j = i + 1; j < marginals.size(); ++j) {
      r.max_trace_distance = std::max(r.max_trace_distance, trace_distance(marginals[i], marginals[j]));
    }
    if (r.max_mixedness_deviation) {
      r.max_mixedness_deviation = std::max(*r.max_mixedness_deviation, mixedness_deviation(marginals[i]));
    }
  }
  return r;
}

/// Result of the dealer Bell-measuring her secret against her AME share.
struct DealerShare {
  BellOutcome outcome;
  double probability;
  /// State of the 2m-1 remaining shares, in ascending party order.
  PureState residual;
  /// Pauli to apply on the recovered output share.
  GeneralizedPauli correction;
};

inline DealerShare share_via_dealer_measurement(const PureState& ame, std::size_t dealer,
                                                const SecretState& secret,
                                                const std::optional<BellOutcome>& forced = std::nullopt,
                                                std::uint64_t seed = 0) {
  const std::size_t n = ame.parties();
  const int d = ame.local_dim();
  if (secret.local_dim() != d) throw DomainError("share_via_dealer_measurement: secret dimension mismatch");
  if (dealer >= n) throw DomainError("share_via_dealer_measurement: dealer index out of range");
  const PureState system =
      apply_on_parties(tensor(ame, secret.as_state()), bell_frame(d).adjoint(), {n, dealer});
  const Parties measured{n, dealer};
  BellOutcome outcome;
  if (forced) {
    check_outcome(*forced, d);
    outcome = *forced;
  } else {
    const auto m = projective_measure(system, measured, seed);
    outcome = {m.outcome[0], m.outcome[1]};
  }
  const Labels labels{outcome.a, outcome.b};
  auto cond = condition_on(system, measured, labels);
  return {outcome, cond.probability, std::move(cond.residual), bell_correction(outcome, d)};
}

/// |Phi> = (1/sqrt d) sum_i |i>_D |Phi_i>, with D inserted at
/// `dealer_position` (default: the original dealer index, else 0).
inline PureState ame_from_qss(const QssScheme& s,
                              std::optional<std::size_t> dealer_position = std::nullopt) {
  validate_scheme(s);
  const std::size_t n = 2 * s.m;
  const std::size_t dealer =
      dealer_position.value_or(s.dealer_origin ? s.dealer_origin->dealer : 0);
  if (dealer >= n) throw DomainError("ame_from_qss: dealer position out of range");
  const Parties dealer_list{dealer};
  const Parties players = complement(dealer_list, n);
  const auto row_off = party_offsets(dealer_list, n, s.d);
  const auto col_off = party_offsets(players, n, s.d);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(state_dimension(n, s.d)));
  const double scale = 1.0 / std::sqrt(static_cast<double>(s.d));
  for (int i = 0; i < s.d; ++i) {
    const Vector& phi = s.basis_states[static_cast<std::size_t>(i)].amplitudes();
    for (std::size_t c = 0; c < col_off.size(); ++c) {
      v[static_cast<Eigen::Index>(row_off[static_cast<std::size_t>(i)] + col_off[c])] =
          scale * phi[static_cast<Eigen::Index>(c)];
    }
  }
  PureState out(n, s.d, std::move(v));
  const AmeReport report = certify_ame(out);
  if (!report.is_ame) {
    throw InvalidScheme("ame_from_qss: rebuilt state is not AME (deficit " +
                        std::to_string(report.worst_entropy_deficit) + " bits across " +
                        report.worst_bipartition.to_string() + ")");
  }
  return out;
}

}  // namespace amekit::qss
