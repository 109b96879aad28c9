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
#include <numbers>

#include "amekit/amekit.hpp"
#include "oracles.hpp"

using namespace amekit;
using Catch::Approx;

namespace {

bool states_close(const PureState& x, const PureState& y, double tol = kTolNorm) {
  return (x.amplitudes() - y.amplitudes()).cwiseAbs().maxCoeff() <= tol;
}

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("basis_index uses big-endian positional encoding", "[index]") {
  CHECK(basis_index(Labels{0, 0, 0}, 2) == 0);
  CHECK(basis_index(Labels{1, 0, 1}, 2) == 5);
  CHECK(basis_index(Labels{2, 1}, 3) == 7);
  CHECK_THROWS_AS(basis_index(Labels{0, 2}, 2), DomainError);
  CHECK_THROWS_AS(basis_index(Labels{-1}, 3), DomainError);
  CHECK_THROWS_AS(basis_index(Labels{}, 3), DomainError);
}

TEST_CASE("basis_labels inverts basis_index on every label", "[index]") {
  for (auto [n, d] : {std::pair<std::size_t, int>{20, 2}, {12, 3}, {10, 4}, {8, 5}}) {
    const std::size_t dim = state_dimension(n, d);
    bool ok = true;
    for (std::size_t x = 0; x < dim && ok; ++x) {
      ok = basis_index(basis_labels(x, n, d), d) == x;
    }
    CHECK(ok);
  }
  CHECK_THROWS_AS(basis_labels(8, 3, 2), DomainError);
}

TEST_CASE("desk-scale guard rejects more than 2^22 amplitudes", "[state]") {
  CHECK(state_dimension(22, 2) == (std::size_t{1} << 22));
  CHECK(state_dimension(11, 4) == (std::size_t{1} << 22));
  CHECK_THROWS_AS(state_dimension(23, 2), DomainError);
  CHECK_THROWS_AS(state_dimension(14, 3), DomainError);
  CHECK_THROWS_AS(state_dimension(2, 1), DomainError);
}

TEST_CASE("PureState enforces length and norm", "[state]") {
  CHECK_THROWS_AS(PureState(2, 2, Vector::Zero(3)), DomainError);
  CHECK_THROWS_AS(PureState(2, 2, Vector::Ones(4)), DomainError);
  CHECK_THROWS_AS(PureState::normalized(1, 2, Vector::Zero(2)), DomainError);
  const PureState s = PureState::normalized(2, 2, Vector::Ones(4));
  CHECK(s.amplitude({1, 1}).real() == Approx(0.5));
  CHECK_THROWS_AS(s.amplitude({1}), DomainError);
}

TEST_CASE("subsets_of_size enumerates combinations in lexicographic order", "[index]") {
  const auto s = subsets_of_size(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front() == Parties{0, 1});
  CHECK(s[2] == Parties{0, 3});
  CHECK(s.back() == Parties{2, 3});
  CHECK(subsets_of_size(6, 3).size() == 20);
  CHECK(subsets_of_size(3, 0).size() == 1);
}

TEST_CASE("partial_trace examples", "[partial_trace]") {
  SECTION("EPR marginal is maximally mixed") {
    const auto rho = partial_trace(build_epr(2), {0});
    CHECK(max_abs(rho.matrix() - identity(2) / 2.0) <= kTolNorm);
  }
  SECTION("GHZ two-party marginal is classically correlated") {
    const auto rho = partial_trace(build_ghz(3, 2), {0, 1});
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = 0.5;
    expected(3, 3) = 0.5;
    CHECK(max_abs(rho.matrix() - expected) <= kTolNorm);
  }
  SECTION("|0_L> marginals on any two parties are I/4") {
    const auto zero = fixture_ame52().first;
    for (const auto& keep : subsets_of_size(5, 2)) {
      CHECK(max_abs(partial_trace(zero, keep).matrix() - identity(4) / 4.0) <= kTolEnt);
    }
  }
  SECTION("empty or full keep-set is rejected") {
    const PureState s = build_ghz(3, 2);
    CHECK_THROWS_AS(partial_trace(s, Parties{}), DomainError);
    CHECK_THROWS_AS(partial_trace(s, {0, 1, 2}), DomainError);
    CHECK_THROWS_AS(partial_trace(s, {0, 0}), DomainError);
    CHECK_THROWS_AS(partial_trace(s, {3}), DomainError);
  }
}

TEST_CASE("partial_trace matches label-by-label oracle in the requested order", "[partial_trace]") {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const PureState s = random_state(4, 3, rng);
    for (const Parties& keep : {Parties{2}, Parties{3, 0}, Parties{1, 3, 2}, Parties{0, 2}}) {
      const auto rho = partial_trace(s, keep);
      CHECK(max_abs(rho.matrix() - oracle::partial_trace(s, keep)) <= 1e-12);
    }
  }
}

TEST_CASE("entropy_bits examples", "[entropy]") {
  CHECK(entropy_bits(DensityMatrix(identity(2) / 2.0)) == Approx(1.0).margin(kTolEnt));
  CHECK(entropy_bits(projector(PureState::basis(3, {1, 2}))) == Approx(0.0).margin(kTolEnt));
  // log2 9 = 2 log2 3
  CHECK(entropy_bits(DensityMatrix(identity(9) / 9.0)) ==
        Approx(3.169925001442312).margin(kTolEnt));
  CHECK(entropy_bits(DensityMatrix(identity(9) / 9.0)) ==
        Approx(2.0 * std::log2(3.0)).margin(1e-14));
}

TEST_CASE("DensityMatrix rejects non-Hermitian, unnormalized and negative inputs", "[entropy]") {
  Matrix m = identity(2) / 2.0;
  m(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix(m), DomainError);
  CHECK_THROWS_AS(DensityMatrix(identity(2)), DomainError);
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(entropy_bits(DensityMatrix(neg)), DomainError);
}

TEST_CASE("schmidt_coefficients examples", "[schmidt]") {
  const auto epr = schmidt_coefficients(build_epr(2), Bipartition(2, {0}));
  REQUIRE(epr.size() == 2);
  CHECK(epr[0] == Approx(1.0 / std::sqrt(2.0)));
  CHECK(epr[1] == Approx(1.0 / std::sqrt(2.0)));

  const auto prod = schmidt_coefficients(PureState::basis(2, {0, 0}), Bipartition(2, {0}));
  REQUIRE(prod.size() == 2);
  CHECK(prod[0] == Approx(1.0));
  CHECK(prod[1] == Approx(0.0).margin(1e-14));

  const PureState ame = fixture_ame62();
  for (const auto& b : subsets_of_size(6, 3)) {
    const auto c = schmidt_coefficients(ame, Bipartition(6, b));
    REQUIRE(c.size() == 8);
    for (double x : c) CHECK(x == Approx(1.0 / std::sqrt(8.0)).margin(kTolEnt));
  }
  CHECK_THROWS_AS(schmidt_coefficients(ame, Bipartition(5, {0, 1})), DomainError);
}

TEST_CASE("apply_on_parties examples", "[apply]") {
  const Matrix x = GeneralizedPauli(2, 1, 0).matrix();
  CHECK(states_close(apply_on_parties(PureState::basis(2, {0, 0}), x, {0}),
                     PureState::basis(2, {1, 0})));

  Rng rng(5);
  const PureState s = random_state(3, 3, rng);
  CHECK(states_close(apply_on_parties(s, identity(9), {2, 0}), s));

  const PureState epr = build_epr(2);
  const Matrix xz = GeneralizedPauli(2, 1, 1).matrix();
  const PureState moved = apply_on_parties(epr, xz, {0});
  CHECK(fidelity(moved, epr) < 0.5);
  CHECK(states_close(apply_on_parties(moved, xz.adjoint(), {0}), epr));

  CHECK_THROWS_AS(apply_on_parties(epr, 2.0 * identity(2), {0}), DomainError);
  CHECK_THROWS_AS(apply_on_parties(epr, identity(4), {0, 0}), DomainError);
  CHECK_THROWS_AS(apply_on_parties(epr, identity(4), {0}), DomainError);
}

TEST_CASE("apply_on_parties agrees with the embedded full operator", "[apply]") {
  Rng rng(17);
  for (const Parties& parties : {Parties{1}, Parties{2, 0}, Parties{3, 1}, Parties{0, 3, 2}}) {
    const PureState s = random_state(4, 2, rng);
    const auto dim = static_cast<Eigen::Index>(state_dimension(parties.size(), 2));
    const Matrix u = random_unitary(dim, rng);
    const PureState out = apply_on_parties(s, u, parties);
    const Vector expected = oracle::embed(u, parties, 4, 2) * s.amplitudes();
    CHECK((out.amplitudes() - expected).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(out.amplitudes().squaredNorm() - 1.0) <= kTolNorm);
    CHECK(states_close(apply_on_parties(out, u.adjoint(), parties), s));
  }
}

TEST_CASE("projective measurement", "[measure]") {
  SECTION("party 0 of |00> gives 0 with certainty") {
    const auto r = projective_measure(PureState::basis(2, {0, 0}), Parties{0}, 1);
    CHECK(r.outcome == Labels{0});
    CHECK(r.probability == Approx(1.0));
  }
  SECTION("party 0 of EPR: each outcome has probability 1/2, post-state collapses") {
    const PureState epr = build_epr(2);
    for (int k = 0; k < 2; ++k) {
      const auto r = measure_outcome(epr, Parties{0}, Labels{k});
      CHECK(r.probability == Approx(0.5));
      CHECK(fidelity(r.post_state, PureState::basis(2, {k, k})) == Approx(1.0));
    }
    int ones = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
      ones += projective_measure(epr, Parties{0}, seed).outcome[0];
    }
    CHECK(ones > 150);
    CHECK(ones < 250);
  }
  SECTION("AME marginal outcomes are uniform") {
    const PureState ame = fixture_ame62();
    const auto p = outcome_distribution(ame, Parties{4, 1, 2});
    REQUIRE(p.size() == 8);
    for (double x : p) CHECK(x == Approx(1.0 / 8.0).margin(kTolEnt));
  }
  SECTION("distribution sums to one; seeds are reproducible") {
    Rng rng(3);
    const PureState s = random_state(4, 3, rng);
    const auto p = outcome_distribution(s, Parties{3, 1});
    double total = 0.0;
    for (double x : p) total += x;
    CHECK(std::abs(total - 1.0) <= kTolNorm);
    const auto a = projective_measure(s, Parties{3, 1}, 99);
    const auto b = projective_measure(s, Parties{3, 1}, 99);
    CHECK(a.outcome == b.outcome);
    CHECK(a.probability == Approx(p[basis_index(a.outcome, 3)]));
  }
  SECTION("zero-probability forced outcome is an error") {
    CHECK_THROWS_AS(measure_outcome(PureState::basis(2, {0, 0}), Parties{1}, Labels{1}),
                    DomainError);
    CHECK_THROWS_AS(condition_on(PureState::basis(2, {0, 0}), Parties{1}, Labels{1}),
                    DomainError);
    CHECK_THROWS_AS(measure_outcome(build_epr(2), Parties{0, 1}, Labels{0, 0}), DomainError);
  }
  SECTION("condition_on returns the residual in ascending order") {
    const PureState ghz = build_ghz(3, 3);
    const auto c = condition_on(ghz, Parties{1}, Labels{2});
    CHECK(c.probability == Approx(1.0 / 3.0));
    CHECK(fidelity(c.residual, PureState::basis(3, {2, 2})) == Approx(1.0));
  }
}

TEST_CASE("generalized Pauli operators", "[pauli]") {
  for (int d = 2; d <= 5; ++d) {
    const Matrix x = GeneralizedPauli(d, 1, 0).matrix();
    const Matrix z = GeneralizedPauli(d, 0, 1).matrix();
    CHECK(unitarity_deviation(GeneralizedPauli(d, 2, 3).matrix()) <= kTolNorm);
    Matrix xd = identity(d);
    for (int i = 0; i < d; ++i) xd = xd * x;
    CHECK(max_abs(xd - identity(d)) <= kTolNorm);
    CHECK(max_abs(z * x - omega(d, 1) * x * z) <= kTolNorm);
    CHECK(max_abs(GeneralizedPauli(d, 1, 1).matrix() - x * z) <= kTolNorm);
  }
  CHECK(GeneralizedPauli(3, -1, 4) == GeneralizedPauli(3, 2, 1));
  CHECK_THROWS_AS(GeneralizedPauli(1, 0, 0), DomainError);
}

TEST_CASE("bell_basis", "[bell]") {
  const double s = 1.0 / std::sqrt(2.0);
  const auto b2 = bell_basis(2);
  REQUIRE(b2.size() == 4);
  auto qubits = [&](double a00, double a01, double a10, double a11) {
    Vector v(4);
    v << a00, a01, a10, a11;
    return PureState(2, 2, v);
  };
  CHECK(fidelity(b2[0], qubits(s, 0, 0, s)) == Approx(1.0));
  CHECK(fidelity(b2[1], qubits(s, 0, 0, -s)) == Approx(1.0));
  CHECK(fidelity(b2[2], qubits(0, s, s, 0)) == Approx(1.0));
  CHECK(fidelity(b2[3], qubits(0, s, -s, 0)) == Approx(1.0));

  const double t = 1.0 / std::sqrt(3.0);
  const PureState psi00 = bell_state(3, 0, 0);
  for (int k = 0; k < 3; ++k) CHECK(psi00.amplitude({k, k}).real() == Approx(t));
  CHECK(fidelity(psi00, build_epr(3)) == Approx(1.0));

  for (int d = 2; d <= 5; ++d) {
    const Matrix frame = bell_frame(d);
    CHECK(max_abs(frame.adjoint() * frame - identity(d * d)) <= kTolNorm);
    CHECK(max_abs(frame * frame.adjoint() - identity(d * d)) <= kTolNorm);
  }
}

TEST_CASE("bell_correction undoes the teleportation byproduct", "[bell]") {
  Rng rng(23);
  for (int d = 2; d <= 5; ++d) {
    const PureState s = random_state(1, d, rng);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        // Byproduct X^a Z^-b as left by a Bell outcome (a, b).
        const Matrix byproduct =
            GeneralizedPauli(d, a, 0).matrix() * GeneralizedPauli(d, 0, -b).matrix();
        const Vector fixed =
            bell_correction({a, b}, d).matrix() * byproduct * s.amplitudes();
        CHECK(std::norm(s.amplitudes().dot(fixed)) == Approx(1.0).margin(kTolNorm));
      }
    }
  }
  CHECK_THROWS_AS(bell_correction({2, 0}, 2), DomainError);
}

TEST_CASE("fidelity", "[fidelity]") {
  Rng rng(2);
  const PureState x = random_state(2, 3, rng);
  const PureState y = random_state(2, 3, rng);
  CHECK(fidelity(x, x) == Approx(1.0));
  CHECK(fidelity(x, y) == Approx(fidelity(y, x)));
  CHECK(fidelity(PureState::basis(2, {0}), PureState::basis(2, {1})) == 0.0);
  for (double theta : {0.3, 1.7, -2.9}) {
    const PureState phased(2, 3, std::polar(1.0, theta) * x.amplitudes());
    CHECK(fidelity(x, phased) == Approx(1.0));
  }
  CHECK_THROWS_AS(fidelity(x, PureState::basis(3, {0})), DomainError);
  CHECK(fidelity(x, projector(x)) == Approx(1.0));
}

TEST_CASE("tensor product orders the first factor's parties first", "[state]") {
  const PureState t = tensor(PureState::basis(3, {2}), PureState::basis(3, {0, 1}));
  CHECK(t.parties() == 3);
  CHECK(t.amplitude({2, 0, 1}).real() == Approx(1.0));
  CHECK_THROWS_AS(tensor(PureState::basis(2, {0}), PureState::basis(3, {0})), DomainError);
}

TEST_CASE("Bipartition contract", "[state]") {
  const Bipartition c(5, {3, 1});
  CHECK(c.a() == Parties{0, 2, 4});
  CHECK(c.m() == 2);
  CHECK(c.to_string() == "3,1|0,2,4");
  CHECK_THROWS_AS(Bipartition(4, {0, 1, 2}), DomainError);
  CHECK_THROWS_AS(Bipartition(4, Parties{}), DomainError);
  CHECK_THROWS_AS(Bipartition(4, {0, 1}, {2}), DomainError);
  CHECK_THROWS_AS(Bipartition(4, {0, 1}, {1, 2, 3}), DomainError);
  CHECK(Bipartition(4, {0, 1}, {3, 2}).a() == Parties{3, 2});
}
