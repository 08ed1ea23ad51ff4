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

// States, channels and their d^2 x d^2 superoperators.
//
// Vectorization is row-major: |i><j| maps to basis index i*d + j, under which
// the Kraus map rho -> A rho A^dagger becomes A (x) conj(A).

#include <vector>

#include "quditib/clifford_like.hpp"
#include "quditib/qudit_core.hpp"

namespace quditib {

class DensityMatrix {
 public:
  /// Validates Hermiticity and unit trace (1e-12) and eigenvalues >= -1e-10.
  explicit DensityMatrix(CMatrix rho);

  int dimension() const { return static_cast<int>(rho_.rows()); }
  const CMatrix& matrix() const { return rho_; }

 private:
  CMatrix rho_;
};

class KrausSet {
 public:
  /// Throws CptpViolation unless sum A^dagger A == I to 1e-10.
  explicit KrausSet(std::vector<CMatrix> operators);

  int dimension() const { return static_cast<int>(ops_.front().rows()); }
  const std::vector<CMatrix>& operators() const { return ops_; }
  std::size_t rank() const { return ops_.size(); }

 private:
  std::vector<CMatrix> ops_;
};

class SuperOperator {
 public:
  explicit SuperOperator(CMatrix matrix);
  static SuperOperator identity(int d);

  int dimension() const { return dim_; }
  const CMatrix& matrix() const { return m_; }

  /// Composition: (a * b) applies b first.
  SuperOperator operator*(const SuperOperator& other) const;
  CVector apply(const CVector& v) const { return m_ * v; }

 private:
  CMatrix m_;
  int dim_;
};

CVector vectorize(const DensityMatrix& rho);
CVector vectorize(const CMatrix& m);
CMatrix devectorize(const CVector& v, int d);

SuperOperator superop_from_kraus(const KrausSet& kraus);
/// U (x) conj(U).
SuperOperator unitary_superop(const CMatrix& u);

/// (d tr S + d^2) / (d^2 (d + 1)).
double average_gate_fidelity(const SuperOperator& s);
double average_gate_fidelity(const KrausSet& kraus);

/// chi_00 from the Kraus operators: sum |tr A|^2 / d^2.
double chi00(const KrausSet& kraus);
/// chi_00 from the average gate fidelity; agrees with the Kraus route.
double chi00(const SuperOperator& s);

double chi00_from_agf(double fidelity, int d);
/// F = (d chi_00 + 1) / (d + 1).
double agf_from_chi00(double chi, int d);

KrausSet identity_channel(int d);
/// lambda * Id + (1 - lambda) * completely depolarizing; needs
/// lambda >= -1 / (d^2 - 1).
KrausSet depolarizing(int d, double lambda);
/// Kraus set of outer o inner.
KrausSet compose(const KrausSet& outer, const KrausSet& inner);

/// Random channel from a Haar-like isometry: a (d*rank) x d complex Gaussian
/// matrix is orthonormalized by QR (diagonal of R made positive) and sliced
/// into `rank` Kraus blocks.
KrausSet random_cptp(int d, int rank, Rng& rng);

/// Convex mixture hitting `target` average gate fidelity exactly.
///
/// Upward targets mix with the identity channel; downward targets mix with
/// the completely depolarizing channel. Throws RangeError for targets
/// outside what the two mixtures can reach.
KrausSet mix_to_target_fidelity(const KrausSet& kraus, double target);

}  // namespace quditib
