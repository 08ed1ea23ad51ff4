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

// Dimension-indexed building blocks for single-qudit monomial gates.
//
// All phases are integer exponents of one fixed root of unity omega_n, with
// n = 9 for qutrits and n = 8 for ququarts. Floating point appears only when
// an object is materialized as a complex matrix.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quditib/ring_linalg.hpp"

namespace quditib {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Supported qudit dimension with the root order used for its phases.
struct QuditDimension {
  int d;
  int root_order;

  /// Throws UnsupportedDimension unless d is 3 or 4.
  static QuditDimension of(int d);
};

/// exp(2 pi i k / n).
Complex root_of_unity(int n, Residue k);

/// Diagonal unitary Diag(omega_n^e_0, ..., omega_n^e_{d-1}) stored by exponents.
class PhaseExponents {
 public:
  PhaseExponents(std::vector<Residue> exponents, Residue modulus);
  static PhaseExponents zero(std::size_t d, Residue modulus);
  static PhaseExponents from(const RingVector& v);

  std::size_t dimension() const { return exps_.size(); }
  Residue modulus() const { return modulus_; }
  Residue operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Residue>& exponents() const { return exps_; }

  /// Exponent addition, i.e. the product of the diagonal matrices.
  PhaseExponents operator+(const PhaseExponents& other) const;
  PhaseExponents operator-() const;
  PhaseExponents scaled(Residue factor) const;
  bool is_zero() const;

  RingVector to_ring_vector() const { return RingVector(exps_, modulus_); }
  CMatrix materialize() const;
  std::string to_string() const;

  bool operator==(const PhaseExponents&) const = default;
  auto operator<=>(const PhaseExponents&) const = default;

 private:
  std::vector<Residue> exps_;
  Residue modulus_;
};

/// A bijection of {0, ..., d-1}; image[i] = sigma(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(std::size_t d);
  /// The transposition exchanging a and b.
  static Permutation swap(std::size_t d, int a, int b);
  /// i -> i + 1 mod d.
  static Permutation cycle(std::size_t d);

  std::size_t size() const { return image_.size(); }
  int operator()(std::size_t i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  /// (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

/// All d! permutations in lexicographic order of their images.
std::vector<Permutation> all_permutations(std::size_t d);

/// X_sigma with (X_sigma)_{sigma(i), i} = 1.
CMatrix perm_matrix(const Permutation& sigma);

/// Exponent vector of the non-Clifford T gate used for dimension d.
PhaseExponents t_gate(int d);

/// phase * X^x_power * Z^z_power, phase = omega_n^phase_exponent.
struct PauliElement {
  Residue x_power = 0;
  Residue z_power = 0;
  Residue phase_exponent = 0;

  CMatrix materialize(int d, int phase_order) const;
};

/// Shift X (X|j> = |j+1 mod d>) followed by clock Z = Diag(omega_d^j).
std::vector<CMatrix> pauli_group_generators(int d);

/// Clock matrix exponents written over the dimension's root order.
PhaseExponents clock_exponents(int d);

/// True iff u == c * X^a Z^b for some a, b and unimodular c (entrywise 1e-10).
bool is_pauli_up_to_phase(const CMatrix& u, int d);

/// Exponents of X_sigma D X_sigma^dagger: e'_{sigma(i)} = e_i.
PhaseExponents conjugate_diag_by_perm(const PhaseExponents& diag, const Permutation& sigma);

/// Max-norm distance between a and a global-phase-adjusted b; infinity when
/// the supports differ.
double distance_up_to_phase(const CMatrix& a, const CMatrix& b);

}  // namespace quditib
