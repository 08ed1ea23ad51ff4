// Copyright 2026 The qudit-ib Authors
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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "quditib/errors.hpp"
#include "quditib/qudit_core.hpp"

using namespace quditib;

namespace {

const double kPi = std::acos(-1.0);

CMatrix diag_matrix(const std::vector<Residue>& e, int n) {
  CMatrix m = CMatrix::Zero(e.size(), e.size());
  for (std::size_t i = 0; i < e.size(); ++i) m(i, i) = std::polar(1.0, 2 * kPi * e[i] / n);
  return m;
}

Permutation random_perm(std::size_t d, std::mt19937_64& rng) {
  std::vector<int> image(d);
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(image);
}

}  // namespace

TEST_CASE("dimensions") {
  CHECK(QuditDimension::of(3).root_order == 9);
  CHECK(QuditDimension::of(4).root_order == 8);
  CHECK_THROWS_AS(QuditDimension::of(2), UnsupportedDimension);
  CHECK_THROWS_AS(QuditDimension::of(5), UnsupportedDimension);
  CHECK_THROWS_AS(t_gate(6), UnsupportedDimension);
  CHECK_THROWS_AS(pauli_group_generators(5), UnsupportedDimension);
}

TEST_CASE("perm_matrix") {
  CHECK((perm_matrix(Permutation::identity(3)) - CMatrix::Identity(3, 3)).norm() == 0.0);

  const CMatrix s = perm_matrix(Permutation::swap(3, 0, 1));
  CMatrix expected = CMatrix::Zero(3, 3);
  expected(1, 0) = expected(0, 1) = expected(2, 2) = 1.0;
  CHECK((s - expected).norm() == 0.0);

  const CMatrix c = perm_matrix(Permutation::cycle(3));
  CHECK((c * c * c - CMatrix::Identity(3, 3)).norm() == 0.0);
  CHECK((c * c - CMatrix::Identity(3, 3)).norm() > 1.0);
}

TEST_CASE("perm_matrix is a homomorphism") {
  for (const auto& a : all_permutations(3))
    for (const auto& b : all_permutations(3))
      CHECK((perm_matrix(a * b) - perm_matrix(a) * perm_matrix(b)).norm() < 1e-12);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_perm(4, rng), b = random_perm(4, rng);
    CHECK((perm_matrix(a * b) - perm_matrix(a) * perm_matrix(b)).norm() < 1e-12);
    CHECK((a * a.inverse()).is_identity());
  }
  CHECK(all_permutations(3).size() == 6);
  CHECK(all_permutations(4).size() == 24);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), ShapeError);
}

TEST_CASE("T gates") {
  CHECK(t_gate(3) == PhaseExponents({0, 1, 8}, 9));
  CHECK(t_gate(4) == PhaseExponents({0, 5, 0, 7}, 8));
  CHECK((t_gate(3).materialize() - diag_matrix({0, 1, 8}, 9)).norm() < 1e-14);

  const auto cubed = t_gate(3).scaled(3);
  CHECK(cubed == PhaseExponents({0, 3, 6}, 9));
  CHECK(is_pauli_up_to_phase(cubed.materialize(), 3));
  CHECK_FALSE(is_pauli_up_to_phase(t_gate(3).materialize(), 3));
  CHECK_FALSE(is_pauli_up_to_phase(t_gate(4).materialize(), 4));
}

TEST_CASE("Pauli generators") {
  CHECK(clock_exponents(3) == PhaseExponents({0, 3, 6}, 9));
  CHECK(clock_exponents(4) == PhaseExponents({0, 2, 4, 6}, 8));
  for (int d : {3, 4}) {
    const auto gens = pauli_group_generators(d);
    REQUIRE(gens.size() == 2);
    const CMatrix& x = gens[0];
    const CMatrix& z = gens[1];
    CHECK((z - clock_exponents(d).materialize()).norm() < 1e-14);
    for (int j = 0; j < d; ++j) CHECK(std::abs(x((j + 1) % d, j) - 1.0) < 1e-15);
    // Z X = omega_d X Z.
    CHECK((z * x - std::polar(1.0, 2 * kPi / d) * x * z).norm() < 1e-12);
  }
  const CMatrix x3 = pauli_group_generators(3)[0];
  CVector ket2 = CVector::Zero(3);
  ket2(2) = 1.0;
  CHECK(std::abs((x3 * ket2)(0) - 1.0) < 1e-15);
}

TEST_CASE("is_pauli_up_to_phase") {
  CHECK(is_pauli_up_to_phase(pauli_group_generators(3)[1], 3));
  const CMatrix z4 = pauli_group_generators(4)[1];
  CHECK(is_pauli_up_to_phase(std::polar(1.0, 2 * kPi * 6 / 8) * z4 * z4, 4));
  CHECK(is_pauli_up_to_phase(diag_matrix({6, 2, 6, 2}, 8), 4));
  CHECK_FALSE(is_pauli_up_to_phase(2.0 * z4, 4));
  CHECK_FALSE(is_pauli_up_to_phase(CMatrix::Identity(3, 3), 4));

  // Exhaustive oracle over every diagonal with phases in omega_9.
  int count = 0;
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      for (int c = 0; c < 9; ++c) {
        const bool pauli = is_pauli_up_to_phase(diag_matrix({a, b, c}, 9), 3);
        // Diagonal Paulis are c * Z^k: exponents c + 3*k*j.
        bool expected = false;
        for (int k = 0; k < 3; ++k)
          expected |= (b - a + 900) % 9 == (3 * k) % 9 && (c - a + 900) % 9 == (6 * k) % 9;
        CHECK(pauli == expected);
        count += pauli;
      }
  CHECK(count == 27);
}

TEST_CASE("phase exponent arithmetic matches matrix products") {
  std::mt19937_64 rng(3);
  for (int n : {8, 9}) {
    const std::size_t d = n == 9 ? 3 : 4;
    for (int i = 0; i < 50; ++i) {
      std::vector<Residue> a(d), b(d);
      for (auto& x : a) x = rng() % n;
      for (auto& x : b) x = rng() % n;
      const PhaseExponents pa(a, n), pb(b, n);
      CHECK(((pa + pb).materialize() - pa.materialize() * pb.materialize()).norm() < 1e-12);
      CHECK(((-pa).materialize() - pa.materialize().adjoint()).norm() < 1e-12);
      CHECK((pa + (-pa)).is_zero());
    }
  }
  CHECK(PhaseExponents({-1, 10, 3}, 9) == PhaseExponents({8, 1, 3}, 9));
  CHECK_THROWS_AS(PhaseExponents({1, 2}, 9) + PhaseExponents({1, 2, 3}, 9), ShapeError);
}

TEST_CASE("conjugate_diag_by_perm") {
  const PhaseExponents t({0, 1, 8}, 9);
  CHECK(conjugate_diag_by_perm(t, Permutation::identity(3)) == t);
  const PhaseExponents t0({2, 5, 2}, 9);
  const auto swap = Permutation::swap(3, 0, 1);
  CHECK(conjugate_diag_by_perm(t0, swap) == PhaseExponents({5, 2, 2}, 9));

  std::mt19937_64 rng(5);
  for (int n : {8, 9}) {
    const std::size_t d = n == 9 ? 3 : 4;
    for (int i = 0; i < 50; ++i) {
      std::vector<Residue> e(d);
      for (auto& x : e) x = rng() % n;
      const PhaseExponents diag(e, n);
      const auto sigma = random_perm(d, rng);
      const CMatrix xs = perm_matrix(sigma);
      const CMatrix expected = xs * diag.materialize() * xs.adjoint();
      CHECK((conjugate_diag_by_perm(diag, sigma).materialize() - expected).norm() < 1e-12);
      CHECK(conjugate_diag_by_perm(conjugate_diag_by_perm(diag, sigma), sigma.inverse()) == diag);
    }
  }
}

TEST_CASE("distance_up_to_phase") {
  const CMatrix a = t_gate(3).materialize();
  CHECK(distance_up_to_phase(a, std::polar(1.0, 0.7) * a) < 1e-14);
  CHECK(distance_up_to_phase(a, perm_matrix(Permutation::cycle(3))) == std::numeric_limits<double>::infinity());
  CHECK(distance_up_to_phase(a, CMatrix::Identity(3, 3)) > 0.1);
}
