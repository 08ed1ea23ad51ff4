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

#include <cmath>

#include "quditib/channels.hpp"
#include "quditib/clifford_like.hpp"
#include "quditib/errors.hpp"
#include "quditib/protocol.hpp"
#include "quditib/twirl.hpp"

using namespace quditib;

namespace {

const CliffordLikeGroup& group(int d) {
  static const auto g3 = CliffordLikeGroup::build(3);
  static const auto g4 = CliffordLikeGroup::build(4);
  return d == 3 ? g3 : g4;
}

// Survival computed from materialized unitaries, independent of the
// library's monomial fast path.
double dense_survival(const CliffordLikeGroup& g, const SequenceRecord& rec, const NoiseAssignment& noise,
                      Fiducial f) {
  const int d = g.dimension();
  const CMatrix tp = unitary_superop(t_gate(d).scaled(g.interleaving_power()).materialize()).matrix();
  const CVector rho = vectorize(fiducial_state(f, d));
  CVector v = rho;
  for (const auto& e : rec.elements)
    v = tp * noise.lambda_t.matrix() * noise.lambda_c.matrix() * unitary_superop(e.materialize()).matrix() * v;
  v = noise.lambda_c.matrix() * unitary_superop(rec.inversion.materialize()).matrix() * v;
  return rho.dot(v).real();
}

NoiseAssignment random_noise(int d, double ft, double fc, Rng& rng) {
  return NoiseAssignment::from_kraus(mix_to_target_fidelity(random_cptp(d, d * d, rng), ft),
                                     mix_to_target_fidelity(random_cptp(d, d * d, rng), fc));
}

}  // namespace

TEST_CASE("fiducial states") {
  const CMatrix zero = fiducial_state(Fiducial::kZero, 3).matrix();
  CMatrix expected = CMatrix::Zero(3, 3);
  expected(0, 0) = 1.0;
  CHECK((zero - expected).norm() == 0.0);
  for (int d : {3, 4}) {
    const CMatrix plus = fiducial_state(Fiducial::kPlus, d).matrix();
    CHECK((plus - CMatrix::Constant(d, d, Complex(1.0 / d))).norm() < 1e-15);
  }
}

TEST_CASE("inversion of a bare T power") {
  const auto& g = group(3);
  const auto inv = g.inverse(g.compose(g.t_power_element(), g.identity()));
  CHECK(inv.perm.is_identity());
  CHECK(inv.diag == PhaseExponents({0, 6, 3}, 9));
  CHECK(distance_up_to_phase(inv.materialize() * t_gate(3).scaled(3).materialize(), CMatrix::Identity(3, 3)) <
        1e-12);
}

TEST_CASE("ideal sequences compose to the identity") {
  Rng rng(1);
  for (int d : {3, 4}) {
    const auto& g = group(d);
    const CMatrix tp = t_gate(d).scaled(g.interleaving_power()).materialize();
    for (int trial = 0; trial < 40; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 20);
      const auto rec = build_sequence(g, m, rng);
      CHECK(rec.elements.size() == static_cast<std::size_t>(m));
      CHECK(g.contains(rec.inversion));
      CMatrix u = CMatrix::Identity(d, d);
      for (const auto& e : rec.elements) u = tp * e.materialize() * u;
      u = rec.inversion.materialize() * u;
      CHECK(distance_up_to_phase(u, CMatrix::Identity(d, d)) < 1e-10);
    }
  }
  CHECK_THROWS_AS(build_sequence(group(3), 0, rng), RangeError);
}

TEST_CASE("noiseless sequences survive") {
  Rng rng(2);
  for (int d : {3, 4}) {
    const auto noise = NoiseAssignment::noiseless(d);
    for (int trial = 0; trial < 50; ++trial) {
      const auto rec = build_sequence(group(d), 1 + static_cast<int>(rng() % 20), rng);
      for (auto f : {Fiducial::kZero, Fiducial::kPlus})
        CHECK(std::abs(simulate_sequence(group(d), rec, noise, f, std::nullopt, rng) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("simulation matches a dense oracle") {
  Rng rng(3);
  for (int d : {3, 4}) {
    const auto noise = random_noise(d, 0.9, 0.98, rng);
    for (int trial = 0; trial < 10; ++trial) {
      const auto rec = build_sequence(group(d), 1 + static_cast<int>(rng() % 8), rng);
      for (auto f : {Fiducial::kZero, Fiducial::kPlus}) {
        const double p = simulate_sequence(group(d), rec, noise, f, std::nullopt, rng);
        CHECK(std::abs(p - dense_survival(group(d), rec, noise, f)) < 1e-12);
      }
    }
  }
}

TEST_CASE("depolarizing noise closed form") {
  Rng rng(4);
  for (int d : {3, 4}) {
    for (auto [lt, lc] : {std::pair{0.9, 0.9}, std::pair{0.8, 0.99}, std::pair{0.5, 0.95}}) {
      const auto noise = NoiseAssignment::from_kraus(depolarizing(d, lt), depolarizing(d, lc));
      for (int m = 1; m <= 20; ++m) {
        const auto rec = build_sequence(group(d), m, rng);
        const double decay = std::pow(lt, m) * std::pow(lc, m + 1);
        const double expected = decay + (1 - decay) / d;
        for (auto f : {Fiducial::kZero, Fiducial::kPlus})
          CHECK(std::abs(simulate_sequence(group(d), rec, noise, f, std::nullopt, rng) - expected) < 1e-10);
      }
    }
  }
}

TEST_CASE("length-one average over the whole group equals the twirl") {
  Rng rng(5);
  for (int d : {3, 4}) {
    const auto& g = group(d);
    const auto noise = random_noise(d, 0.93, 0.99, rng);
    const auto twirl = exact_twirl(noise.lambda_t * noise.lambda_c, g);
    const auto tp = g.t_power_element();
    for (auto f : {Fiducial::kZero, Fiducial::kPlus}) {
      double sum = 0;
      for (const auto& e : g.enumerate()) {
        SequenceRecord rec{1, 0, {e}, g.inverse(g.compose(tp, e))};
        sum += simulate_sequence(g, rec, noise, f, std::nullopt, rng);
      }
      const double average = sum / static_cast<double>(g.order());
      const CVector rho = vectorize(fiducial_state(f, d));
      const double predicted = rho.dot(noise.lambda_c.matrix() * twirl.matrix() * rho).real();
      CHECK(std::abs(average - predicted) < 1e-10);
    }
  }
}

TEST_CASE("shot estimates are unbiased") {
  Rng rng(6);
  const auto noise = random_noise(3, 0.95, 0.9996, rng);
  const auto rec = build_sequence(group(3), 5, rng);
  const double exact = simulate_sequence(group(3), rec, noise, Fiducial::kZero, std::nullopt, rng);
  const int reps = 2000;
  const std::uint64_t shots = 100;
  double sum = 0;
  for (int i = 0; i < reps; ++i) {
    const double s = simulate_sequence(group(3), rec, noise, Fiducial::kZero, shots, rng);
    CHECK(s * shots == doctest::Approx(std::round(s * shots)));
    sum += s;
  }
  const double sigma = std::sqrt(exact * (1 - exact) / (shots * reps));
  CHECK(std::abs(sum / reps - exact) < 3 * sigma);
}

TEST_CASE("integrity errors") {
  Rng rng(7);
  const NoiseAssignment amplifying{SuperOperator(2.0 * CMatrix::Identity(9, 9)), SuperOperator::identity(3),
                                   std::nullopt, std::nullopt};
  const auto rec = build_sequence(group(3), 3, rng);
  CHECK_THROWS_AS(simulate_sequence(group(3), rec, amplifying, Fiducial::kZero, std::nullopt, rng),
                  NumericalIntegrityError);
  CHECK_THROWS_AS(simulate_sequence(group(3), rec, NoiseAssignment::noiseless(4), Fiducial::kZero, std::nullopt, rng),
                  ShapeError);
}

TEST_CASE("config validation names the field") {
  auto expect_field = [](ExperimentConfig c, const std::string& field) {
    try {
      c.validate();
      FAIL("expected a schema error for " << field);
    } catch (const SchemaError& e) {
      CHECK(std::string(e.what()).find(field) != std::string::npos);
    }
  };
  ExperimentConfig c;
  CHECK_NOTHROW(c.validate());
  auto bad = c;
  bad.dimension = 5;
  expect_field(bad, "dimension");
  bad = c;
  bad.t_fidelity = 1.5;
  expect_field(bad, "t_fidelity");
  bad = c;
  bad.reference_fidelity = 0.0;
  expect_field(bad, "reference_fidelity");
  bad = c;
  bad.lengths = {1, 3, 2};
  expect_field(bad, "lengths");
  bad = c;
  bad.lengths = {0, 1};
  expect_field(bad, "lengths");
  bad = c;
  bad.sequences_per_length = 0;
  expect_field(bad, "sequences_per_length");
  bad = c;
  bad.shots = 0;
  expect_field(bad, "shots");
  bad = c;
  bad.fiducials = {};
  expect_field(bad, "fiducials");
  bad = c;
  bad.noise = NoiseMode::kFixture;
  expect_field(bad, "noise_fixture");
  CHECK(parse_noise_mode("depolarizing") == NoiseMode::kDepolarizing);
  CHECK_THROWS_AS(parse_noise_mode("pink"), SchemaError);
}

TEST_CASE("generated noise hits the configured fidelities") {
  ExperimentConfig c;
  const auto n = generate_noise(c);
  CHECK(std::abs(average_gate_fidelity(n.lambda_t) - 0.95) < 1e-10);
  CHECK(std::abs(average_gate_fidelity(n.lambda_c) - 0.9996) < 1e-10);
  CHECK((generate_noise(c).lambda_t.matrix() - n.lambda_t.matrix()).norm() == 0.0);
  c.seed = 2;
  CHECK((generate_noise(c).lambda_t.matrix() - n.lambda_t.matrix()).norm() > 1e-3);

  c.noise = NoiseMode::kDepolarizing;
  c.dimension = 4;
  const auto dep = generate_noise(c);
  CHECK(std::abs(average_gate_fidelity(dep.lambda_t) - 0.95) < 1e-12);
  CHECK(std::abs(average_gate_fidelity(dep.lambda_c) - 0.9996) < 1e-12);
}

TEST_CASE("experiments") {
  ExperimentConfig c;
  c.lengths = {1, 2, 5, 10};
  c.sequences_per_length = 4;

  SUBCASE("identity noise gives unit survival") {
    const auto r = run_experiment(c, group(3), NoiseAssignment::noiseless(3));
    CHECK(r.sequences.size() == 2 * 4 * 4);
    for (const auto& s : r.sequences) CHECK(std::abs(s.survival - 1.0) < 1e-10);
    REQUIRE(r.decays.size() == 2);
    CHECK(r.decays[0].fiducial == Fiducial::kZero);
    CHECK(r.decays[1].fiducial == Fiducial::kPlus);
    CHECK(r.decays[0].points.size() == 4);
  }

  SUBCASE("fixed seeds reproduce bit for bit") {
    for (std::optional<std::uint64_t> shots : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{500}}) {
      c.shots = shots;
      const auto a = run_experiment(c);
      const auto b = run_experiment(c);
      REQUIRE(a.sequences.size() == b.sequences.size());
      for (std::size_t i = 0; i < a.sequences.size(); ++i) {
        CHECK(a.sequences[i].survival == b.sequences[i].survival);
        CHECK(a.sequences[i].elements == b.sequences[i].elements);
      }
    }
  }

  SUBCASE("depolarizing decays are strictly monotone") {
    c.noise = NoiseMode::kDepolarizing;
    c.lengths = ExperimentConfig::default_lengths();
    const auto r = run_experiment(c);
    for (const auto& rec : r.decays)
      for (std::size_t i = 1; i < rec.points.size(); ++i) CHECK(rec.points[i].survival < rec.points[i - 1].survival);
  }

  SUBCASE("group and config dimensions must agree") {
    CHECK_THROWS_AS(run_experiment(c, group(4), NoiseAssignment::noiseless(4)), SchemaError);
  }
}
