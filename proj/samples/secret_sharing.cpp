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

// A ((2,3)) qutrit secret-sharing scheme carved out of AME(4,3): the dealer
// encodes, any two players recover, any single player sees white noise.

#include <cstdio>

#include "amekit/amekit.hpp"

using namespace amekit;

int main() {
  const PureState ame = ame_from_mds(MdsCode(3, 4, 2, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
  const qss::QssScheme scheme = qss::qss_from_ame(ame, 0);
  Rng rng(11);
  const qss::SecretState secret = qss::SecretState::random(3, rng);
  const PureState shares = qss::encode_secret(scheme, secret);

  double worst = 1.0;
  for (const auto& authorized : subsets_of_size(scheme.shares(), scheme.m)) {
    const auto u = qss::build_recovery_unitary(scheme, authorized);
    const double f = fidelity(secret.as_state(), qss::recover_secret(u, shares));
    std::printf("shares {%s} recover with fidelity %.15f\n", join(authorized).c_str(), f);
    worst = std::min(worst, f);
  }
  for (const auto& unauthorized : subsets_of_size(scheme.shares(), scheme.m - 1)) {
    const auto r = qss::security_check(scheme, unauthorized, qss::default_probes(3, 5));
    std::printf("share {%s} alone: max trace distance %.3g\n", join(unauthorized).c_str(),
                r.max_trace_distance);
  }

  // Teleport-style sharing: the dealer Bell-measures its AME qutrit with the secret.
  const auto dealt = qss::share_via_dealer_measurement(ame, 0, secret, std::nullopt, 3);
  const auto u = qss::build_recovery_unitary(scheme, Parties{1, 2});
  const double f = fidelity(secret.as_state(), qss::recover_secret(u, dealt.residual, dealt.correction));
  std::printf("dealer outcome (%d,%d), correction %s, recovered fidelity %.15f\n", dealt.outcome.a,
              dealt.outcome.b, dealt.correction.to_string().c_str(), f);
  return worst > 1 - kTolEnt && f > 1 - kTolEnt ? 0 : 1;
}
