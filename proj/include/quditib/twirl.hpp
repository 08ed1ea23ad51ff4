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

// Group twirl of a noise superoperator over C and its block spectrum.
//
// In the basis (normalized identity | orthonormal diagonal-traceless |
// off-diagonal matrix units) a C-twirled channel is diagonal with pattern
// 1 (+) eta0^(d-1) (+) eta_plus^(d^2-d).

#include <array>
#include <cstdint>

#include "quditib/channels.hpp"
#include "quditib/clifford_like.hpp"

namespace quditib {

struct TwirlSpectrum {
  double eta0 = 0.0;
  double eta_plus = 0.0;
  /// Max deviation from the block value: [trivial block vs 1, eta0 block, eta_plus block].
  std::array<double, 3> block_residuals{};
  /// Frobenius norm of every entry off the diagonal pattern.
  double offblock_residual = 0.0;

  double max_residual() const;
};

/// (1/|C|) sum_g S(g)^dagger * noise * S(g), summed pairwise in a fixed tree.
SuperOperator exact_twirl(const SuperOperator& noise, const CliffordLikeGroup& group,
                          std::uint64_t cap = 1'000'000);

/// Unitary superoperator of a group element.
SuperOperator element_superop(const MonomialElement& g);

/// Orthonormal columns: identity/sqrt(d), Gram-Schmidt of
/// {|i><i| - |i+1><i+1|}, then |i><j| for i != j in row-major order.
CMatrix twirl_basis(int d);

/// Block means and residuals, without judging them.
TwirlSpectrum measure_block_spectrum(const SuperOperator& t);

/// As measure_block_spectrum, but throws StructureViolation when
/// max_residual() exceeds `tolerance`.
TwirlSpectrum block_spectrum(const SuperOperator& t, double tolerance = 1e-8);

/// (d (1 + (d-1) eta0 + (d^2-d) eta_plus) + d^2) / (d^2 (d+1)).
double agf_from_etas(double eta0, double eta_plus, int d);
inline double agf_from_etas(const TwirlSpectrum& s, int d) {
  return agf_from_etas(s.eta0, s.eta_plus, d);
}

}  // namespace quditib
