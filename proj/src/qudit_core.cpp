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

#include "quditib/qudit_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "quditib/errors.hpp"

namespace quditib {

QuditDimension QuditDimension::of(int d) {
  switch (d) {
    case 3:
      return {3, 9};
    case 4:
      return {4, 8};
    default:
      throw UnsupportedDimension("dimension " + std::to_string(d) +
                                 " is not supported (expected 3 or 4)");
  }
}

Complex root_of_unity(int n, Residue k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduce_mod(k, n)) / n;
  return {std::cos(angle), std::sin(angle)};
}

// --- PhaseExponents ---------------------------------------------------------

PhaseExponents::PhaseExponents(std::vector<Residue> exponents, Residue modulus)
    : exps_(std::move(exponents)), modulus_(modulus) {
  if (modulus < 1) throw InvalidRing("phase modulus must be positive");
  for (auto& e : exps_) e = reduce_mod(e, modulus);
}

PhaseExponents PhaseExponents::zero(std::size_t d, Residue modulus) {
  return PhaseExponents(std::vector<Residue>(d, 0), modulus);
}

PhaseExponents PhaseExponents::from(const RingVector& v) {
  return PhaseExponents(std::vector<Residue>(v.values().begin(), v.values().end()),
                        v.modulus());
}

PhaseExponents PhaseExponents::operator+(const PhaseExponents& other) const {
  if (other.modulus_ != modulus_ || other.exps_.size() != exps_.size()) {
    throw ShapeError("phase exponent vectors differ in shape");
  }
  std::vector<Residue> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = exps_[i] + other.exps_[i];
  return PhaseExponents(std::move(out), modulus_);
}

PhaseExponents PhaseExponents::operator-() const { return scaled(-1); }

PhaseExponents PhaseExponents::scaled(Residue factor) const {
  std::vector<Residue> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = exps_[i] * factor;
  return PhaseExponents(std::move(out), modulus_);
}

bool PhaseExponents::is_zero() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Residue e) { return e == 0; });
}

CMatrix PhaseExponents::materialize() const {
  const auto d = static_cast<Eigen::Index>(exps_.size());
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    m(i, i) = root_of_unity(static_cast<int>(modulus_), exps_[static_cast<std::size_t>(i)]);
  }
  return m;
}

std::string PhaseExponents::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < exps_.size(); ++i) os << (i ? "," : "") << exps_[i];
  os << ')';
  return os.str();
}

// --- Permutation ------------------------------------------------------------

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[v]) {
      throw ShapeError("permutation image is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t d) {
  std::vector<int> image(d);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::swap(std::size_t d, int a, int b) {
  auto p = identity(d).image_;
  std::swap(p.at(a), p.at(b));
  return Permutation(std::move(p));
}

Permutation Permutation::cycle(std::size_t d) {
  std::vector<int> image(d);
  for (std::size_t i = 0; i < d; ++i) image[i] = static_cast<int>((i + 1) % d);
  return Permutation(std::move(image));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.size() != size()) throw ShapeError("composing permutations of different degree");
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = image_[other.image_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[image_[i]] = static_cast<int>(i);
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (image_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(std::size_t d) {
  std::vector<int> image(d);
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

CMatrix perm_matrix(const Permutation& sigma) {
  const auto d = static_cast<Eigen::Index>(sigma.size());
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(sigma(static_cast<std::size_t>(i)), i) = 1.0;
  return m;
}

// --- Gates ------------------------------------------------------------------

PhaseExponents t_gate(int d) {
  const auto dim = QuditDimension::of(d);
  if (d == 3) return PhaseExponents({0, 1, 8}, dim.root_order);
  return PhaseExponents({0, 5, 0, 7}, dim.root_order);
}

CMatrix PauliElement::materialize(int d, int phase_order) const {
  CMatrix x = perm_matrix(Permutation::cycle(static_cast<std::size_t>(d)));
  CMatrix z = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) z(j, j) = root_of_unity(d, j);
  CMatrix out = CMatrix::Identity(d, d);
  for (Residue i = 0; i < reduce_mod(x_power, d); ++i) out = out * x;
  for (Residue i = 0; i < reduce_mod(z_power, d); ++i) out = out * z;
  return root_of_unity(phase_order, phase_exponent) * out;
}

std::vector<CMatrix> pauli_group_generators(int d) {
  QuditDimension::of(d);
  return {PauliElement{1, 0, 0}.materialize(d, 1), PauliElement{0, 1, 0}.materialize(d, 1)};
}

PhaseExponents clock_exponents(int d) {
  const auto dim = QuditDimension::of(d);
  const int step = dim.root_order / d;
  std::vector<Residue> e(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) e[static_cast<std::size_t>(j)] = step * j;
  return PhaseExponents(std::move(e), dim.root_order);
}

bool is_pauli_up_to_phase(const CMatrix& u, int d) {
  if (u.rows() != d || u.cols() != d) return false;
  constexpr double kTol = 1e-10;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const CMatrix p = PauliElement{a, b, 0}.materialize(d, 1);
      // X^a Z^b has exactly one nonzero per column; column 0 carries row a.
      const Complex c = u(a, 0) / p(a, 0);
      if (std::abs(std::abs(c) - 1.0) > kTol) continue;
      if ((u - c * p).cwiseAbs().maxCoeff() < kTol) return true;
    }
  }
  return false;
}

PhaseExponents conjugate_diag_by_perm(const PhaseExponents& diag, const Permutation& sigma) {
  if (diag.dimension() != sigma.size()) throw ShapeError("permutation degree mismatch");
  std::vector<Residue> out(diag.dimension());
  for (std::size_t i = 0; i < diag.dimension(); ++i) out[sigma(i)] = diag[i];
  return PhaseExponents(std::move(out), diag.modulus());
}

double distance_up_to_phase(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) return a.cwiseAbs().maxCoeff();
  Complex phase = a(r, c) / b(r, c);
  if (std::abs(phase) == 0.0) return std::numeric_limits<double>::infinity();
  phase /= std::abs(phase);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace quditib
