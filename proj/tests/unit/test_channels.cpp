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

#include <Eigen/Eigenvalues>

#include "quditib/channels.hpp"
#include "quditib/clifford_like.hpp"
#include "quditib/errors.hpp"

using namespace quditib;

namespace {

// AGF through the Kraus traces, (sum |tr A|^2 + d) / (d (d + 1)).
double agf_kraus_oracle(const KrausSet& k) {
  const double d = k.dimension();
  double s = 0;
  for (const auto& a : k.operators()) s += std::norm(a.trace());
  return (s + d) / (d * (d + 1));
}

CMatrix apply_kraus(const KrausSet& k, const CMatrix& rho) {
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& a : k.operators()) out += a * rho * a.adjoint();
  return out;
}

CMatrix random_density(int d, Rng& rng) {
  std::normal_distribution<double> g;
  CMatrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = Complex(g(rng), g(rng));
  CMatrix rho = a * a.adjoint();
  return rho / rho.trace();
}

}  // namespace

TEST_CASE("vectorization") {
  CMatrix zero = CMatrix::Zero(3, 3);
  zero(0, 0) = 1.0;
  const CVector v0 = vectorize(DensityMatrix(zero));
  CHECK(v0.size() == 9);
  CHECK(std::abs(v0(0) - 1.0) < 1e-15);
  CHECK(v0.tail(8).norm() == 0.0);

  const CVector vm = vectorize(DensityMatrix(CMatrix::Identity(3, 3) / 3.0));
  for (int i = 0; i < 9; ++i) CHECK(std::abs(vm(i) - ((i % 4 == 0) ? 1.0 / 3 : 0.0)) < 1e-15);

  CMatrix m(2, 2);
  m << 1.0, 2.0, 3.0, 4.0;
  const CVector vr = vectorize(m);
  CHECK(vr(1) == Complex(2.0));
  CHECK(vr(2) == Complex(3.0));

  Rng rng(1);
  const CMatrix rho = random_density(4, rng);
  CHECK((devectorize(vectorize(DensityMatrix(rho)), 4) - rho).norm() < 1e-15);
}

TEST_CASE("density matrix and Kraus validation") {
  CMatrix bad = CMatrix::Identity(3, 3);
  CHECK_THROWS_AS(DensityMatrix{bad}, RangeError);
  CMatrix nonherm = CMatrix::Identity(2, 2) / 2.0;
  nonherm(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix{nonherm}, RangeError);
  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{negative}, RangeError);
  CHECK_THROWS_AS(KrausSet({0.9 * CMatrix::Identity(3, 3)}), CptpViolation);
  CHECK_THROWS_AS(KrausSet(std::vector<CMatrix>{}), CptpViolation);
  CHECK_NOTHROW(KrausSet({CMatrix::Identity(3, 3)}));
}

TEST_CASE("superoperators from Kraus sets") {
  CHECK((superop_from_kraus(identity_channel(3)).matrix() - CMatrix::Identity(9, 9)).norm() == 0.0);

  const CMatrix t = t_gate(3).materialize();
  CMatrix expected(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) expected(i * 3 + k, j * 3 + l) = t(i, j) * std::conj(t(k, l));
  CHECK((unitary_superop(t).matrix() - expected).norm() < 1e-14);
  CHECK((superop_from_kraus(KrausSet({t})).matrix() - expected).norm() < 1e-14);

  Rng rng(8);
  for (int d : {3, 4}) {
    for (int i = 0; i < 20; ++i) {
      const auto k = random_cptp(d, 1 + static_cast<int>(rng() % (d * d)), rng);
      const CMatrix rho = random_density(d, rng);
      const CVector lhs = superop_from_kraus(k).apply(vectorize(rho));
      CHECK((lhs - vectorize(apply_kraus(k, rho))).norm() < 1e-12);
    }
  }
}

TEST_CASE("depolarizing spectrum") {
  for (double lambda : {0.0, 0.5, 0.9}) {
    const auto s = superop_from_kraus(depolarizing(3, lambda)).matrix();
    Eigen::ComplexEigenSolver<CMatrix> es(s);
    std::vector<double> ev;
    for (int i = 0; i < 9; ++i) ev.push_back(es.eigenvalues()(i).real());
    std::sort(ev.begin(), ev.end());
    for (int i = 0; i < 8; ++i) CHECK(std::abs(ev[i] - lambda) < 1e-10);
    CHECK(std::abs(ev[8] - 1.0) < 1e-10);
  }
  CHECK_THROWS_AS(depolarizing(3, 1.1), RangeError);
  CHECK_THROWS_AS(depolarizing(3, -0.2), RangeError);
}

TEST_CASE("average gate fidelity") {
  CHECK(average_gate_fidelity(superop_from_kraus(identity_channel(3))) == doctest::Approx(1.0).epsilon(1e-15));
  for (int d : {3, 4})
    for (double lambda : {0.0, 0.5, 0.9, 0.99}) {
      const auto k = depolarizing(d, lambda);
      CHECK(std::abs(average_gate_fidelity(superop_from_kraus(k)) - (1 + (d - 1) * lambda) / d) < 1e-12);
      CHECK(std::abs(average_gate_fidelity(k) - agf_kraus_oracle(k)) < 1e-12);
    }
  CHECK(std::abs(average_gate_fidelity(depolarizing(3, 0.0)) - 1.0 / 3) < 1e-14);
}

TEST_CASE("chi00") {
  CHECK(std::abs(chi00(identity_channel(4)) - 1.0) < 1e-15);
  const CMatrix t = t_gate(3).materialize();
  CHECK(std::abs(chi00(KrausSet({t})) - std::norm(t.trace()) / 9) < 1e-15);
  CHECK(chi00(KrausSet({t})) < 1.0);
  const auto dep = depolarizing(3, 0.7);
  const double f = (1 + 2 * 0.7) / 3;
  CHECK(std::abs(agf_from_chi00(chi00(dep), 3) - f) < 1e-12);
  CHECK(std::abs(chi00(superop_from_kraus(dep)) - chi00(dep)) < 1e-12);
  CHECK(std::abs(chi00_from_agf(agf_from_chi00(0.3, 4), 4) - 0.3) < 1e-15);
}

TEST_CASE("random channels") {
  Rng rng(42);
  for (int d : {3, 4}) {
    for (int rank = 1; rank <= d * d; ++rank) {
      const auto k = random_cptp(d, rank, rng);
      CHECK(k.rank() == static_cast<std::size_t>(rank));
      CMatrix sum = CMatrix::Zero(d, d);
      for (const auto& a : k.operators()) sum += a.adjoint() * a;
      CHECK((sum - CMatrix::Identity(d, d)).norm() < 1e-10);
    }
    const auto u = random_cptp(d, 1, rng).operators().front();
    CHECK((u.adjoint() * u - CMatrix::Identity(d, d)).norm() < 1e-12);
  }
  CHECK_THROWS_AS(random_cptp(3, 0, rng), RangeError);
  CHECK_THROWS_AS(random_cptp(3, 10, rng), RangeError);

  Rng a(5), b(5);
  CHECK((random_cptp(3, 9, a).operators()[3] - random_cptp(3, 9, b).operators()[3]).norm() == 0.0);
}

TEST_CASE("mean fidelity of full-rank random channels") {
  // Sample mean over 1000 channels. Full-rank Stinespring channels have
  // E sum |tr A|^2 = 1, giving a mean of (1 + d) / (d (d + 1)) = 1 / d.
  Rng rng(77);
  const int n = 1000;
  double sum = 0, sum2 = 0;
  for (int i = 0; i < n; ++i) {
    const double f = average_gate_fidelity(random_cptp(3, 9, rng));
    sum += f;
    sum2 += f * f;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum2 / n - mean * mean) / n);
  MESSAGE("empirical mean AGF, d=3, rank 9: " << mean << " +- " << se);
  CHECK(std::abs(mean - 1.0 / 3) < 4 * se);
}

TEST_CASE("mixing to a target fidelity") {
  Rng rng(6);
  for (int d : {3, 4}) {
    const auto k = random_cptp(d, d * d, rng);
    const double f = average_gate_fidelity(k);
    const auto id = mix_to_target_fidelity(k, 1.0);
    CHECK((superop_from_kraus(id).matrix() - CMatrix::Identity(d * d, d * d)).norm() < 1e-12);
    CHECK(mix_to_target_fidelity(k, f).rank() == k.rank());
    for (double target : {0.95, 0.9996, 0.5}) {
      CHECK(std::abs(average_gate_fidelity(mix_to_target_fidelity(k, target)) - target) < 1e-10);
    }
    // Below the current value the mixture goes toward complete depolarization.
    const auto high = mix_to_target_fidelity(k, 0.9);
    const double low = 1.0 / d + 0.01;
    CHECK(std::abs(average_gate_fidelity(mix_to_target_fidelity(high, low)) - low) < 1e-10);
    CHECK_THROWS_AS(mix_to_target_fidelity(high, 1.0 / d - 0.01), RangeError);
    CHECK_THROWS_AS(mix_to_target_fidelity(k, 1.01), RangeError);
  }
}

TEST_CASE("composition and trace preservation") {
  Rng rng(10);
  for (int d : {3, 4}) {
    CVector trace_functional = vectorize(CMatrix(CMatrix::Identity(d, d)));
    for (int i = 0; i < 30; ++i) {
      const auto a = random_cptp(d, 1 + static_cast<int>(rng() % (d * d)), rng);
      const auto b = random_cptp(d, 1 + static_cast<int>(rng() % (d * d)), rng);
      const auto sa = superop_from_kraus(a), sb = superop_from_kraus(b);
      CHECK((superop_from_kraus(compose(a, b)).matrix() - (sa * sb).matrix()).norm() < 1e-12);
      CHECK((trace_functional.adjoint() * sa.matrix() - trace_functional.adjoint()).norm() < 1e-10);
    }
  }
}

TEST_CASE("cross-formula consistency") {
  Rng rng(314);
  for (int d : {3, 4}) {
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      auto k = random_cptp(d, 1 + static_cast<int>(rng() % (d * d)), rng);
      if (i % 2) k = mix_to_target_fidelity(k, 0.9 + 0.1 * (i / 100.0));
      const double f = average_gate_fidelity(superop_from_kraus(k));
      worst = std::max(worst, std::abs(f - agf_from_chi00(chi00(k), d)));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("chi00 multiplicativity for near-identity channels") {
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    const auto a = mix_to_target_fidelity(random_cptp(3, 9, rng), 0.99);
    const auto b = mix_to_target_fidelity(random_cptp(3, 9, rng), 0.999);
    const double gap = std::abs(chi00(compose(a, b)) - chi00(a) * chi00(b));
    CHECK(gap < 1e-3);
  }
  Rng far(13);
  const auto a = random_cptp(3, 9, far), b = random_cptp(3, 9, far);
  MESSAGE("chi00 product gap for low-fidelity channels: "
          << std::abs(chi00(compose(a, b)) - chi00(a) * chi00(b)));
}
