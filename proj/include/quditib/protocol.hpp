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

#pragma once

// Simulation of the interleaved benchmarking experiment.
//
// One step of a length-m circuit applies a random g in C, the reference
// noise, the T noise and then T^p. After m steps the inversion gate (itself
// followed by reference noise) undoes the ideal word, and the survival
// probability of the fiducial state is recorded.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quditib/analysis.hpp"
#include "quditib/channels.hpp"
#include "quditib/clifford_like.hpp"

namespace quditib {

enum class NoiseMode { kRandom, kDepolarizing, kFixture };

std::string to_string(NoiseMode mode);
NoiseMode parse_noise_mode(const std::string& text);

struct ExperimentConfig {
  int dimension = 3;
  double reference_fidelity = 0.9996;
  double t_fidelity = 0.95;
  NoiseMode noise = NoiseMode::kRandom;
  /// Path of a noise fixture (NoiseMode::kFixture only).
  std::string noise_fixture;
  /// Kraus rank of random channels; 0 means d^2.
  int kraus_rank = 0;
  std::vector<int> lengths = default_lengths();
  int sequences_per_length = 30;
  /// Shots per sequence; nullopt is exact expectation.
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 1;
  std::vector<Fiducial> fiducials{Fiducial::kZero, Fiducial::kPlus};

  static std::vector<int> default_lengths();
  /// Throws SchemaError naming the offending field.
  void validate() const;
};

/// Gate-independent noise: Lambda_T for T^p, Lambda_C for every element of C.
struct NoiseAssignment {
  SuperOperator lambda_t;
  SuperOperator lambda_c;
  std::optional<KrausSet> kraus_t;
  std::optional<KrausSet> kraus_c;

  static NoiseAssignment from_kraus(const KrausSet& t, const KrausSet& c);
  static NoiseAssignment noiseless(int d);
};

struct SequenceRecord {
  int m = 0;
  int sequence_index = 0;
  /// g_1 ... g_m in application order (g_1 acts first).
  std::vector<MonomialElement> elements;
  MonomialElement inversion;
  Fiducial fiducial = Fiducial::kZero;
  double survival = 0.0;
  std::uint64_t shots = 0;  // 0: exact expectation
};

/// |0><0|, or H|0><0|H^dagger with H the normalized discrete Fourier transform.
DensityMatrix fiducial_state(Fiducial f, int d);

/// Samples g_1..g_m uniformly and sets the inversion to (prod_i T^p g_i)^-1.
SequenceRecord build_sequence(const CliffordLikeGroup& group, int m, Rng& rng);

/// Survival <<E|Lambda_C S(inv) prod_i [S(T^p) Lambda_T Lambda_C S(g_i)]|rho>>
/// with E = rho the fiducial projector. With `shots` set the exact value is
/// replaced by a binomial sample mean drawn from `rng`. Throws
/// NumericalIntegrityError when the exact value leaves [-1e-9, 1 + 1e-9].
double simulate_sequence(const CliffordLikeGroup& group, const SequenceRecord& rec,
                         const NoiseAssignment& noise, Fiducial fiducial,
                         std::optional<std::uint64_t> shots, Rng& rng);

/// Noise channels for a configuration, drawn from a stream derived from the seed.
NoiseAssignment generate_noise(const ExperimentConfig& config);

/// Independent RNG stream for one sequence.
Rng sequence_stream(std::uint64_t seed, Fiducial f, int m, int index);

struct ExperimentResult {
  ExperimentConfig config;
  NoiseAssignment noise;
  std::vector<SequenceRecord> sequences;
  std::vector<DecayRecord> decays;  // one per fiducial, in config order
};

ExperimentResult run_experiment(const ExperimentConfig& config);
/// Same, with an already built group and noise.
ExperimentResult run_experiment(const ExperimentConfig& config, const CliffordLikeGroup& group,
                                const NoiseAssignment& noise);

}  // namespace quditib
