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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "amekit/amekit.hpp"

using namespace amekit;
using namespace amekit::qss;
using Catch::Approx;

namespace {

PureState ame43() { return ame_from_mds(MdsCode(3, 4, 2, {{1, 0, 1, 1}, {0, 1, 1, 2}})); }

/// X^a Z^-b |s>, the secret the residual encodes after outcome (a, b).
SecretState byproduct(const SecretState& s, BellOutcome o) {
  const int d = s.local_dim();
  const Matrix p = GeneralizedPauli(d, o.a, 0).matrix() * GeneralizedPauli(d, 0, -o.b).matrix();
  return SecretState(d, p * s.amplitudes());
}

}  // namespace

TEST_CASE("qss_from_ame on the six-qubit state recovers the five-qubit code", "[qss]") {
  const QssScheme s = qss_from_ame(fixture_ame62(), 0);
  const auto [zero, one] = fixture_ame52();
  CHECK(s.m == 3);
  CHECK(s.d == 2);
  CHECK(s.players == Parties{1, 2, 3, 4, 5});
  REQUIRE(s.basis_states.size() == 2);
  CHECK(fidelity(s.basis_states[0], zero) >= 1.0 - kTolEnt);
  CHECK(fidelity(s.basis_states[1], one) >= 1.0 - kTolEnt);
  CHECK(s.dealer_origin.has_value());
  CHECK(check_scheme(s).valid());
}

TEST_CASE("qss_from_ame gives a valid scheme for every dealer", "[qss]") {
  for (const PureState& ame : {fixture_ame62(), ame43()}) {
    for (std::size_t dealer = 0; dealer < ame.parties(); ++dealer) {
      const QssScheme s = qss_from_ame(ame, dealer);
      const SchemeCheck c = check_scheme(s);
      CHECK(c.valid());
      CHECK(s.shares() == ame.parties() - 1);
      CHECK(s.m == ame.parties() / 2);
    }
  }
  const QssScheme q = qss_from_ame(ame43(), 0);
  CHECK(q.m == 2);
  CHECK(q.d == 3);
}

TEST_CASE("qss_from_ame rejects non-AME and odd inputs", "[qss]") {
  CHECK_THROWS_AS(qss_from_ame(build_ghz(4, 2), 0), InvalidScheme);
  CHECK_THROWS_AS(qss_from_ame(fixture_ame52().first, 0), DomainError);
  CHECK_THROWS_AS(qss_from_ame(fixture_ame62(), 6), DomainError);
}

TEST_CASE("encode_secret is the linear map |i> -> |Phi_i>", "[qss]") {
  const QssScheme s = qss_from_ame(fixture_ame62(), 0);
  const auto [zero, one] = fixture_ame52();
  CHECK(fidelity(encode_secret(s, SecretState::basis(2, 0)), zero) >= 1.0 - kTolEnt);
  const PureState plus_l =
      PureState::normalized(5, 2, zero.amplitudes() + one.amplitudes());
  CHECK(fidelity(encode_secret(s, SecretState::uniform(2)), plus_l) >= 1.0 - kTolEnt);
  Vector minus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  CHECK(fidelity(encode_secret(s, SecretState::uniform(2)), encode_secret(s, SecretState(2, minus))) <=
        kTolEnt);
  CHECK_THROWS_AS(encode_secret(s, SecretState::basis(3, 0)), DomainError);
}

TEST_CASE("recovery by authorized sets", "[qss][recovery]") {
  SECTION("first three players read out |1>") {
    const QssScheme s = qss_from_ame(fixture_ame62(), 0);
    const auto u = build_recovery_unitary(s, {0, 1, 2});
    CHECK(u.output() == 2);
    const auto rho = recover_secret(u, encode_secret(s, SecretState::basis(2, 1)));
    CHECK(fidelity(PureState::basis(2, {1}), rho) >= 1.0 - kTolEnt);
  }
  SECTION("every 3-subset of the five players recovers a random secret") {
    const QssScheme s = qss_from_ame(fixture_ame62(), 0);
    Rng rng(50);
    const SecretState secret = SecretState::random(2, rng);
    const PureState shares = encode_secret(s, secret);
    const auto subsets = subsets_of_size(5, 3);
    CHECK(subsets.size() == 10);
    for (const auto& a : subsets) {
      const auto rho = recover_secret(build_recovery_unitary(s, a), shares);
      CHECK(fidelity(secret.as_state(), rho) >= 1.0 - kTolEnt);
      // Pure output: the other authorized shares carry no trace of the secret.
      CHECK((rho.matrix() * rho.matrix()).trace().real() == Approx(1.0).margin(kTolEnt));
    }
  }
  SECTION("qutrit ((2,3)) scheme: any two players recover, every basis secret too") {
    const QssScheme s = qss_from_ame(ame43(), 0);
    Rng rng(51);
    for (const auto& a : subsets_of_size(3, 2)) {
      const auto u = build_recovery_unitary(s, a);
      for (int i = 0; i < 3; ++i) {
        CHECK(fidelity(PureState::basis(3, {i}),
                       recover_secret(u, encode_secret(s, SecretState::basis(3, i)))) >= 1 - kTolEnt);
      }
      const SecretState r = SecretState::random(3, rng);
      CHECK(fidelity(r.as_state(), recover_secret(u, encode_secret(s, r))) >= 1.0 - kTolEnt);
    }
  }
  SECTION("the output position follows the listed order") {
    const QssScheme s = qss_from_ame(ame43(), 1);
    const auto u = build_recovery_unitary(s, {2, 0});
    CHECK(u.output() == 0);
    CHECK(fidelity(PureState::basis(3, {2}),
                   recover_secret(u, encode_secret(s, SecretState::basis(3, 2)))) >= 1.0 - kTolEnt);
  }
  SECTION("wrong set size and invalid schemes are rejected") {
    const QssScheme s = qss_from_ame(fixture_ame62(), 0);
    CHECK_THROWS_AS(build_recovery_unitary(s, {0, 1}), DomainError);
    CHECK_THROWS_AS(build_recovery_unitary(s, {0, 1, 1}), DomainError);
    // Orthonormal but without secrecy: |000> and |111>.
    const QssScheme bad = make_scheme(
        2, 2, {PureState::basis(2, {0, 0, 0}), PureState::basis(2, {1, 1, 1})}, Validation::Deferred);
    CHECK_THROWS_AS(build_recovery_unitary(bad, {0, 1}), InvalidScheme);
    CHECK_FALSE(check_scheme(bad).valid());
    CHECK_THROWS_AS(make_scheme(2, 2, {PureState::basis(2, {0, 0, 0}), PureState::basis(2, {1, 1, 1})}),
                    InvalidScheme);
  }
}

TEST_CASE("security of unauthorized sets", "[qss][security]") {
  const QssScheme s = qss_from_ame(fixture_ame62(), 0);
  SECTION("any two players, probes |0>, |1>, |+>") {
    const std::vector<SecretState> probes{SecretState::basis(2, 0), SecretState::basis(2, 1),
                                          SecretState::uniform(2)};
    for (const auto& u : subsets_of_size(5, 2)) {
      const auto r = security_check(s, u, probes);
      CHECK(r.max_trace_distance <= kTolEnt);
      REQUIRE(r.max_mixedness_deviation.has_value());
      CHECK(*r.max_mixedness_deviation <= kTolEnt);
      CHECK(r.passed());
    }
  }
  SECTION("default probes span the secret space") {
    const auto probes = default_probes(2, 9);
    CHECK(probes.size() == 4);
    for (const auto& u : subsets_of_size(5, 1)) CHECK(security_check(s, u, probes).passed());
  }
  SECTION("empty set and threshold-size set") {
    CHECK(security_check(s, {}, default_probes(2, 1)).max_trace_distance == 0.0);
    CHECK_THROWS_AS(security_check(s, {0, 1, 2}, default_probes(2, 1)), DomainError);
  }
  SECTION("a leaky scheme is caught") {
    const QssScheme leaky = make_scheme(
        2, 2, {PureState::basis(2, {0, 0, 0}), PureState::basis(2, {1, 1, 1})}, Validation::Deferred);
    CHECK(security_check(leaky, {0}, default_probes(2, 1)).max_trace_distance > 0.5);
  }
}

TEST_CASE("dealer measures first", "[qss][dealer]") {
  SECTION("outcome (0,0) leaves exactly the encoded secret") {
    Rng rng(60);
    const SecretState secret = SecretState::random(2, rng);
    const QssScheme s = qss_from_ame(fixture_ame62(), 0);
    const DealerShare share = share_via_dealer_measurement(fixture_ame62(), 0, secret, BellOutcome{0, 0});
    CHECK(fidelity(share.residual, encode_secret(s, secret)) >= 1.0 - kTolEnt);
    CHECK(share.correction == GeneralizedPauli(2, 0, 0));
  }
  for (const PureState& ame : {fixture_ame62(), ame43()}) {
    const int d = ame.local_dim();
    const std::size_t n = ame.parties();
    for (std::size_t dealer : {std::size_t{0}, n - 1}) {
      DYNAMIC_SECTION("all outcomes, n=" << n << " d=" << d << " dealer=" << dealer) {
        Rng rng(61 + dealer);
        const SecretState secret = SecretState::random(d, rng);
        const QssScheme s = qss_from_ame(ame, dealer);
        for (int a = 0; a < d; ++a) {
          for (int b = 0; b < d; ++b) {
            const DealerShare share = share_via_dealer_measurement(ame, dealer, secret, BellOutcome{a, b});
            CHECK(share.probability == Approx(1.0 / (d * d)).margin(kTolEnt));
            CHECK(fidelity(share.residual, encode_secret(s, byproduct(secret, {a, b}))) >= 1 - kTolEnt);
            for (const auto& auth : subsets_of_size(s.shares(), s.m)) {
              const auto rho = recover_secret(build_recovery_unitary(s, auth), share.residual,
                                              share.correction);
              CHECK(fidelity(secret.as_state(), rho) >= 1.0 - kTolEnt);
            }
          }
        }
      }
    }
  }
  SECTION("sampled outcome is reproducible") {
    const SecretState secret = SecretState::uniform(3);
    const auto x = share_via_dealer_measurement(ame43(), 2, secret, std::nullopt, 77);
    const auto y = share_via_dealer_measurement(ame43(), 2, secret, std::nullopt, 77);
    CHECK(x.outcome == y.outcome);
  }
  SECTION("contract violations") {
    CHECK_THROWS_AS(share_via_dealer_measurement(ame43(), 0, SecretState::basis(2, 0)), DomainError);
    CHECK_THROWS_AS(share_via_dealer_measurement(ame43(), 4, SecretState::basis(3, 0)), DomainError);
    CHECK_THROWS_AS(share_via_dealer_measurement(ame43(), 0, SecretState::basis(3, 0), BellOutcome{3, 0}),
                    DomainError);
  }
}

TEST_CASE("ame_from_qss inverts qss_from_ame", "[qss][roundtrip]") {
  SECTION("five-qubit code scheme rebuilds the six-qubit fixture") {
    const QssScheme s = qss_from_ame(fixture_ame62(), 0);
    CHECK(fidelity(ame_from_qss(s), fixture_ame62()) >= 1.0 - kTolEnt);
    // Without provenance the dealer is adjoined in front.
    const auto [zero, one] = fixture_ame52();
    const QssScheme bare = make_scheme(3, 2, {zero, one});
    CHECK(fidelity(ame_from_qss(bare), fixture_ame62()) >= 1.0 - kTolEnt);
  }
  SECTION("round trip for every dealer position") {
    for (const PureState& ame : {fixture_ame62(), ame43()}) {
      for (std::size_t dealer = 0; dealer < ame.parties(); ++dealer) {
        CHECK(fidelity(ame_from_qss(qss_from_ame(ame, dealer)), ame) >= 1.0 - kTolEnt);
      }
    }
  }
  SECTION("qutrit scheme rebuilds an AME(4,3) state") {
    const PureState rebuilt = ame_from_qss(qss_from_ame(ame43(), 0));
    CHECK(certify_ame(rebuilt).is_ame);
  }
  SECTION("scheme -> AME -> scheme reproduces each basis state") {
    const QssScheme s = qss_from_ame(ame43(), 0);
    const QssScheme bare = make_scheme(2, 3, s.basis_states);
    for (std::size_t pos = 0; pos < 4; ++pos) {
      const QssScheme again = qss_from_ame(ame_from_qss(bare, pos), pos);
      for (int i = 0; i < 3; ++i) {
        CHECK(fidelity(again.basis_states[i], bare.basis_states[i]) >= 1.0 - kTolEnt);
      }
    }
  }
  SECTION("invalid schemes are rejected before construction") {
    Rng rng(70);
    const QssScheme random_basis =
        make_scheme(2, 2, {random_state(3, 2, rng), random_state(3, 2, rng)}, Validation::Deferred);
    CHECK_THROWS_AS(ame_from_qss(random_basis), InvalidScheme);
    CHECK_THROWS_AS(make_scheme(2, 2, {PureState::basis(2, {0, 0, 0})}), DomainError);
    CHECK_THROWS_AS(make_scheme(2, 2, {PureState::basis(2, {0, 0}), PureState::basis(2, {1, 1})}),
                    DomainError);
  }
}

TEST_CASE("threshold is sharp on the derived schemes", "[qss][property]") {
  for (const PureState& ame : {fixture_ame62(), ame43()}) {
    const QssScheme s = qss_from_ame(ame, 0);
    const auto probes = default_probes(s.d, 5);
    Rng rng(80);
    const SecretState secret = SecretState::random(s.d, rng);
    const PureState shares = encode_secret(s, secret);
    for (const auto& a : subsets_of_size(s.shares(), s.m)) {
      CHECK(fidelity(secret.as_state(), recover_secret(build_recovery_unitary(s, a), shares)) >=
            1.0 - kTolEnt);
    }
    for (const auto& u : subsets_of_size(s.shares(), s.m - 1)) {
      CHECK(security_check(s, u, probes).passed());
    }
  }
}
