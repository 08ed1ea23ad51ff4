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

#include "quditib/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "quditib/errors.hpp"
#include "quditib/serialization.hpp"
#include "quditib/twirl.hpp"

namespace quditib {

std::string to_string(NoiseMode mode) {
  switch (mode) {
    case NoiseMode::kRandom:
      return "random";
    case NoiseMode::kDepolarizing:
      return "depolarizing";
    case NoiseMode::kFixture:
      return "fixture";
  }
  return "random";
}

NoiseMode parse_noise_mode(const std::string& text) {
  if (text == "random") return NoiseMode::kRandom;
  if (text == "depolarizing") return NoiseMode::kDepolarizing;
  if (text == "fixture") return NoiseMode::kFixture;
  throw SchemaError("field 'noise': unknown mode '" + text +
                    "' (expected random, depolarizing or fixture)");
}

std::vector<int> ExperimentConfig::default_lengths() {
  std::vector<int> m(20);
  for (int i = 0; i < 20; ++i) m[static_cast<std::size_t>(i)] = i + 1;
  return m;
}

void ExperimentConfig::validate() const {
  if (dimension != 3 && dimension != 4) {
    throw SchemaError("field 'dimension': " + std::to_string(dimension) +
                      " is not supported (expected 3 or 4)");
  }
  for (const auto& [name, f] : {std::pair{"reference_fidelity", reference_fidelity},
                                std::pair{"t_fidelity", t_fidelity}}) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw SchemaError(std::string("field '") + name + "': " + std::to_string(f) +
                        " outside (0, 1]");
    }
  }
  if (lengths.empty()) throw SchemaError("field 'lengths': empty");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 1) throw SchemaError("field 'lengths': lengths must be >= 1");
    if (i > 0 && lengths[i] <= lengths[i - 1]) {
      throw SchemaError("field 'lengths': must be strictly increasing");
    }
  }
  if (sequences_per_length < 1) throw SchemaError("field 'sequences_per_length': must be >= 1");
  if (shots && *shots == 0) throw SchemaError("field 'shots': must be positive or \"exact\"");
  if (kraus_rank < 0 || kraus_rank > dimension * dimension) {
    throw SchemaError("field 'kraus_rank': must lie in [1, d^2] (0 selects d^2)");
  }
  if (fiducials.empty()) throw SchemaError("field 'fiducials': empty");
  if (std::set<Fiducial>(fiducials.begin(), fiducials.end()).size() != fiducials.size()) {
    throw SchemaError("field 'fiducials': duplicate entries");
  }
  if (noise == NoiseMode::kFixture && noise_fixture.empty()) {
    throw SchemaError("field 'noise_fixture': required when noise is \"fixture\"");
  }
}

NoiseAssignment NoiseAssignment::from_kraus(const KrausSet& t, const KrausSet& c) {
  return {superop_from_kraus(t), superop_from_kraus(c), t, c};
}

NoiseAssignment NoiseAssignment::noiseless(int d) {
  return from_kraus(identity_channel(d), identity_channel(d));
}

DensityMatrix fiducial_state(Fiducial f, int d) {
  CVector psi = CVector::Zero(d);
  if (f == Fiducial::kZero) {
    psi(0) = 1.0;
  } else {
    // First column of the normalized DFT matrix.
    psi.setConstant(1.0 / std::sqrt(static_cast<double>(d)));
  }
  return DensityMatrix(psi * psi.adjoint());
}

SequenceRecord build_sequence(const CliffordLikeGroup& group, int m, Rng& rng) {
  if (m < 1) throw RangeError("sequence length must be >= 1");
  const auto tp = group.t_power_element();
  SequenceRecord rec{m, 0, {}, group.identity()};
  rec.elements.reserve(static_cast<std::size_t>(m));
  auto word = group.identity();
  for (int i = 0; i < m; ++i) {
    rec.elements.push_back(group.sample_uniform(rng));
    word = group.compose(group.compose(tp, rec.elements.back()), word);
  }
  rec.inversion = group.inverse(word);
  return rec;
}

double simulate_sequence(const CliffordLikeGroup& group, const SequenceRecord& rec,
                         const NoiseAssignment& noise, Fiducial fiducial,
                         std::optional<std::uint64_t> shots, Rng& rng) {
  const int d = group.dimension();
  if (noise.lambda_c.dimension() != d || noise.lambda_t.dimension() != d) {
    throw ShapeError("noise dimension does not match the group");
  }
  const CVector rho = vectorize(fiducial_state(fiducial, d));
  const CMatrix tp = element_superop(group.t_power_element()).matrix();
  const CMatrix& lc = noise.lambda_c.matrix();
  const CMatrix& lt = noise.lambda_t.matrix();

  CVector v = rho;
  for (const auto& g : rec.elements) {
    v = element_superop(g).matrix() * v;
    v = lc * v;
    v = lt * v;
    v = tp * v;
  }
  v = element_superop(rec.inversion).matrix() * v;
  v = lc * v;
  const double p = rho.dot(v).real();  // <<E|v>> with E = rho

  if (!(p >= -1e-9 && p <= 1.0 + 1e-9)) {
    throw NumericalIntegrityError("survival probability " + std::to_string(p) +
                                  " outside [0, 1]");
  }
  if (!shots) return p;
  std::binomial_distribution<std::uint64_t> draw(*shots, std::clamp(p, 0.0, 1.0));
  return static_cast<double>(draw(rng)) / static_cast<double>(*shots);
}

NoiseAssignment generate_noise(const ExperimentConfig& config) {
  const int d = config.dimension;
  switch (config.noise) {
    case NoiseMode::kDepolarizing: {
      const auto lambda = [d](double f) { return (d * f - 1.0) / (d - 1.0); };
      return NoiseAssignment::from_kraus(depolarizing(d, lambda(config.t_fidelity)),
                                         depolarizing(d, lambda(config.reference_fidelity)));
    }
    case NoiseMode::kFixture: {
      auto fixture = read_noise_fixture(config.noise_fixture);
      if (fixture.lambda_t.dimension() != d) {
        throw SchemaError("noise fixture dimension differs from field 'dimension'");
      }
      return fixture;
    }
    case NoiseMode::kRandom:
      break;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32), 0x6e6f6973u};
  Rng rng(seq);
  const int rank = config.kraus_rank > 0 ? config.kraus_rank : d * d;
  const auto c = mix_to_target_fidelity(random_cptp(d, rank, rng), config.reference_fidelity);
  const auto t = mix_to_target_fidelity(random_cptp(d, rank, rng), config.t_fidelity);
  return NoiseAssignment::from_kraus(t, c);
}

Rng sequence_stream(std::uint64_t seed, Fiducial f, int m, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(f == Fiducial::kZero ? 0 : 1),
                    static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(index)};
  return Rng(seq);
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto group = CliffordLikeGroup::build(config.dimension);
  return run_experiment(config, group, generate_noise(config));
}

ExperimentResult run_experiment(const ExperimentConfig& config, const CliffordLikeGroup& group,
                                const NoiseAssignment& noise) {
  config.validate();
  if (group.dimension() != config.dimension) {
    throw SchemaError("field 'dimension' differs from the group dimension");
  }
  ExperimentResult result{config, noise, {}, {}};
  for (const auto f : config.fiducials) {
    std::vector<int> ms;
    std::vector<double> survivals;
    for (const int m : config.lengths) {
      for (int idx = 0; idx < config.sequences_per_length; ++idx) {
        Rng rng = sequence_stream(config.seed, f, m, idx);
        auto rec = build_sequence(group, m, rng);
        rec.fiducial = f;
        rec.sequence_index = idx;
        rec.survival = simulate_sequence(group, rec, noise, f, config.shots, rng);
        rec.shots = config.shots.value_or(0);
        ms.push_back(m);
        survivals.push_back(rec.survival);
        result.sequences.push_back(std::move(rec));
      }
    }
    result.decays.push_back(aggregate_decay(f, ms, survivals, config.shots.value_or(0)));
  }
  return result;
}

}  // namespace quditib
