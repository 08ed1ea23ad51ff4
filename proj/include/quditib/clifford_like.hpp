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

// The Clifford-like reference group C = <N, X, X_01>.
//
// Every element is a monomial unitary X_sigma * Diag(omega_n^e) with sigma in
// S_d and e in a DiagonalLattice. The diagonal lattice is built in three
// steps: span the permuted T exponents (C'), keep the Pauli-normalizing
// elements (N), then close under entry permutations, which <N, X, X_01>
// forces since X_sigma N X_sigma^dagger lies in the generated group.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "quditib/qudit_core.hpp"
#include "quditib/ring_linalg.hpp"

namespace quditib {

using Rng = std::mt19937_64;

/// Subgroup of Z_n^d stored by its Howell basis.
class DiagonalLattice {
 public:
  /// Howell-canonicalizes the row span of `generators`.
  static DiagonalLattice from_generators(const RingMatrix& generators);
  static DiagonalLattice from_elements(std::span<const PhaseExponents> elements,
                                       std::size_t d, Residue modulus);

  Residue modulus() const { return basis_.modulus(); }
  std::size_t dimension() const { return basis_.cols(); }
  const RingMatrix& basis() const { return basis_; }
  /// exponent_rings()[i] is the order of basis row i modulo the later rows.
  const std::vector<Residue>& exponent_rings() const { return rings_; }
  std::uint64_t order() const;

  bool contains(const PhaseExponents& e) const;
  /// Canonical coordinates, each in [0, exponent_rings()[i]).
  std::optional<std::vector<Residue>> coordinates(const PhaseExponents& e) const;
  PhaseExponents element(std::span<const Residue> coordinates) const;
  /// Mixed-radix indexing over the canonical coordinates, index < order().
  PhaseExponents element_at(std::uint64_t index) const;
  std::vector<PhaseExponents> elements() const;

  bool operator==(const DiagonalLattice& other) const { return basis_ == other.basis_; }

 private:
  explicit DiagonalLattice(RingMatrix howell);

  RingMatrix basis_;
  std::vector<Residue> rings_;
};

/// X_sigma * Diag(omega_n^diag).
struct MonomialElement {
  Permutation perm;
  PhaseExponents diag;

  CMatrix materialize() const { return perm_matrix(perm) * diag.materialize(); }
  bool operator==(const MonomialElement&) const = default;
  auto operator<=>(const MonomialElement&) const = default;
};

/// Lattice spanned by all entry permutations of the T exponents.
DiagonalLattice build_cprime_lattice(int d);

/// Elements of `cprime` whose diagonal conjugates X and Z into the Pauli
/// group up to phase.
DiagonalLattice normalizing_sublattice(const DiagonalLattice& cprime, int d);

/// Smallest lattice containing `lattice` that is stable under entry permutations.
DiagonalLattice close_under_permutation(const DiagonalLattice& lattice, int d);

/// Diagonal generators of C as commonly tabulated, with their stated exponent
/// ring sizes. The build report checks them against the computed lattice.
struct TabulatedGenerator {
  PhaseExponents exponents;
  Residue stated_ring;
};
std::vector<TabulatedGenerator> tabulated_generators(int d);

struct GeneratorCheck {
  PhaseExponents exponents;
  Residue stated_ring = 0;
  Residue additive_order = 0;
  bool in_lattice = false;
  bool normalizes_pauli = false;
};

/// Everything the construction computed and validated.
struct BuildReport {
  int dimension = 0;
  int root_order = 0;
  std::uint64_t cprime_order = 0;
  RingMatrix cprime_basis = RingMatrix(0, 0, 2);
  std::uint64_t normalizing_order = 0;
  RingMatrix normalizing_basis = RingMatrix(0, 0, 2);
  RingMatrix lattice_basis = RingMatrix(0, 0, 2);
  std::vector<Residue> exponent_rings;
  std::uint64_t lattice_order = 0;
  std::uint64_t group_order = 0;
  int interleaving_power = 0;
  bool t_in_group = false;

  std::size_t closure_trials = 0;
  bool closure_ok = false;
  /// Lattice elements D with D X D^dagger a Pauli up to phase.
  std::uint64_t lattice_normalizing_count = 0;
  /// Permutations sigma with X_sigma normalizing the Pauli group.
  std::size_t normalizing_permutations = 0;

  std::vector<GeneratorCheck> tabulated;
  std::uint64_t tabulated_span_order = 0;
  std::vector<std::string> notes;
};

class CliffordLikeGroup {
 public:
  /// Runs the full construction for d in {3, 4} and validates closure on
  /// `closure_trials` random pairs. Throws ConstructionError on failure.
  static CliffordLikeGroup build(int d, std::size_t closure_trials = 1000);

  int dimension() const { return dim_.d; }
  int root_order() const { return dim_.root_order; }
  const DiagonalLattice& lattice() const { return lattice_; }
  const std::vector<Permutation>& permutations() const { return perms_; }
  std::uint64_t order() const { return perms_.size() * lattice_.order(); }

  MonomialElement identity() const;
  bool contains(const MonomialElement& g) const;
  /// (X_s D)(X_t E) = X_{st} (X_t^dagger D X_t) E. Throws ConstructionError if
  /// the product leaves the group.
  MonomialElement compose(const MonomialElement& a, const MonomialElement& b) const;
  MonomialElement inverse(const MonomialElement& g) const;

  /// Element number `index` in the order (permutation index, lattice index).
  MonomialElement element_at(std::uint64_t index) const;
  /// Every element exactly once. Throws EnumerationCapExceeded above `cap`.
  std::vector<MonomialElement> enumerate(std::uint64_t cap = 1'000'000) const;
  MonomialElement sample_uniform(Rng& rng) const;

  /// Smallest p >= 1 with T^p in C.
  int interleaving_power() const { return p_; }
  /// T^p as a group element.
  MonomialElement t_power_element() const;

  const BuildReport& report() const { return report_; }

 private:
  CliffordLikeGroup(QuditDimension dim, DiagonalLattice lattice);

  QuditDimension dim_;
  DiagonalLattice lattice_;
  std::vector<Permutation> perms_;
  int p_ = 0;
  BuildReport report_;
};

/// Free-function form of CliffordLikeGroup::build.
inline CliffordLikeGroup build_group(int d) { return CliffordLikeGroup::build(d); }

}  // namespace quditib
