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

// Teleports three qubits at once through the six-qubit AME state, first as a
// joint payload held by A and then as three separate qubits held by B.

#include <cstdio>

#include "amekit/amekit.hpp"

using namespace amekit;

int main() {
  const PureState ame = fixture_ame62();
  const Bipartition cut(6, {0, 2, 4});
  Rng rng(2026);

  const PureState joint = random_state(3, 2, rng);
  const auto forward = teleport::audit_joint_to_local(ame, cut, joint);
  std::printf("A->B over %s: %zu outcomes, min fidelity %.15f\n", cut.to_string().c_str(),
              forward.transcripts.size(), forward.min_fidelity);

  std::vector<PureState> singles;
  for (int i = 0; i < 3; ++i) singles.push_back(random_state(1, 2, rng));
  const auto backward = teleport::audit_local_to_joint(ame, cut, singles);
  std::printf("B->A over %s: %zu outcomes, min fidelity %.15f\n", cut.to_string().c_str(),
              backward.transcripts.size(), backward.min_fidelity);

  const auto& t = forward.transcripts[37];
  std::printf("outcome #37 sends %zu dits:", t.dits());
  for (const auto& o : t.outcomes) std::printf(" (%d,%d)", o.a, o.b);
  std::printf("\n");
  return forward.min_fidelity > 1 - kTolEnt && backward.min_fidelity > 1 - kTolEnt ? 0 : 1;
}
