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

// Decay fitting and fidelity recovery.
//
// Survival data for each fiducial is fitted to a + b * eta^m. The two decay
// rates give the composite fidelity of the T and reference noise, and the
// reference fidelity is divided out in the chi_00 picture.

#include <cstdint>
#include <string>
#include <vector>

namespace quditib {

enum class Fiducial { kZero, kPlus };

/// "0" or "+".
std::string to_string(Fiducial f);
/// Throws SchemaError for anything but "0" or "+".
Fiducial parse_fiducial(const std::string& text);

struct DecayPoint {
  int m = 0;
  double survival = 0.0;  // mean over sequences
  std::uint64_t samples = 0;
  double std_error = 0.0;  // 0 when unknown
};

struct DecayRecord {
  Fiducial fiducial = Fiducial::kZero;
  std::vector<DecayPoint> points;

  /// Throws SchemaError unless m is strictly increasing and survivals lie in [0, 1].
  void validate() const;
};

/// Groups per-sequence survivals by m. `shots` of 0 means exact values; it
/// only matters when a length has a single sequence.
DecayRecord aggregate_decay(Fiducial f, const std::vector<int>& lengths,
                            const std::vector<double>& survivals, std::uint64_t shots = 0);

enum class Weighting { kEqual, kInverseVariance };

struct FitOptions {
  Weighting weighting = Weighting::kEqual;
  int grid_nodes = 1001;
  double eta_tolerance = 1e-10;
};

struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double eta = 1.0;
  /// sqrt of the (weighted) residual sum of squares.
  double residual = 0.0;
  /// Linearized standard error of eta; NaN with fewer than four points.
  double eta_stderr = 0.0;
  int grid_nodes = 0;
  int iterations = 0;
  bool degenerate = false;
};

/// Separable least squares: for fixed eta the optimal (a, b) is a closed-form
/// linear fit, so only eta is searched: a uniform grid on [0, 1] picks the
/// bracket and golden-section search narrows it to `eta_tolerance`.
/// Needs at least three distinct m. Constant data gives eta = 1, b = 0 and
/// the degenerate flag.
FitResult fit_decay(const DecayRecord& record, const FitOptions& options = {});

/// Composite fidelity from the eta of the |0> fit and the |+> fit.
double composite_agf(const FitResult& fit0, const FitResult& fit_plus, int d);

/// F_T from chi_00(composite) / chi_00(reference). Throws RangeError when
/// chi_00(reference) <= 0.
double t_gate_fidelity(double composite_fidelity, double reference_fidelity, int d);

/// F_T as the plain ratio composite / reference of average gate fidelities.
double t_gate_fidelity_direct(double composite_fidelity, double reference_fidelity);

double relative_error(double estimate, double truth);

}  // namespace quditib
