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

// Exact linear algebra over the residue rings Z_k.
//
// The central routine is the Howell normal form: a canonical row basis of a
// Z_k-module that, unlike Gaussian elimination, stays correct in the presence
// of zero divisors. Every span of row vectors has exactly one Howell form, so
// it doubles as a canonical key for subgroups of Z_k^n.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace quditib {

using Residue = std::int64_t;

/// Least non-negative representative of `value` modulo `modulus`.
constexpr Residue reduce_mod(Residue value, Residue modulus) {
  Residue r = value % modulus;
  return r < 0 ? r + modulus : r;
}

class RingScalar {
 public:
  RingScalar(Residue value, Residue modulus);

  Residue value() const { return value_; }
  Residue modulus() const { return modulus_; }

  RingScalar operator+(const RingScalar& other) const;
  RingScalar operator*(const RingScalar& other) const;
  RingScalar operator-() const;
  bool operator==(const RingScalar&) const = default;

 private:
  Residue value_;
  Residue modulus_;
};

class RingVector {
 public:
  RingVector(std::vector<Residue> values, Residue modulus);
  RingVector(std::initializer_list<Residue> values, Residue modulus)
      : RingVector(std::vector<Residue>(values), modulus) {}

  Residue modulus() const { return modulus_; }
  std::size_t size() const { return values_.size(); }
  Residue operator[](std::size_t i) const { return values_[i]; }
  std::span<const Residue> values() const { return values_; }
  bool is_zero() const;

  bool operator==(const RingVector&) const = default;
  auto operator<=>(const RingVector&) const = default;

 private:
  std::vector<Residue> values_;
  Residue modulus_;
};

/// Dense row-major matrix over Z_k. Entries are always kept in [0, k).
class RingMatrix {
 public:
  RingMatrix(std::size_t rows, std::size_t cols, Residue modulus);
  RingMatrix(std::initializer_list<std::initializer_list<Residue>> rows,
             Residue modulus);
  static RingMatrix from_rows(std::span<const RingVector> rows,
                              std::size_t cols, Residue modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue modulus() const { return modulus_; }

  Residue at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue value);
  std::span<const Residue> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  RingVector row_vector(std::size_t r) const;

  bool operator==(const RingMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Residue modulus_;
  std::vector<Residue> entries_;
};

/// Howell normal form of the row span of `m`.
///
/// Zero rows are dropped, so the result has one row per pivot column. Each
/// pivot is the canonical divisor of k generating its ideal, entries above a
/// pivot p lie in [0, p), and the rows with leading index >= j span every
/// vector of the module whose leading index is >= j.
///
/// Throws InvalidRing for k < 2 and ShapeError for a matrix with no columns.
/// A zero span gives a matrix with no rows.
RingMatrix howell_form(const RingMatrix& m);

/// Howell form together with the transform rows: row i of `transform`
/// holds coefficients c with c * input == form.row(i) (mod k).
struct HowellDecomposition {
  RingMatrix form;
  RingMatrix transform;
};
HowellDecomposition howell_decomposition(const RingMatrix& m);

/// Leading (pivot) column of each row of a Howell form.
std::vector<std::size_t> pivot_columns(const RingMatrix& howell);

bool span_contains(const RingMatrix& basis, const RingVector& v);

/// Coefficients c with c * basis == v (mod k), or nullopt when v is not in
/// the row span. Solutions differ by elements of the left kernel, so the
/// one returned is reduced against the kernel's Howell form and is unique.
std::optional<RingVector> solve_combination(const RingMatrix& basis,
                                            const RingVector& v);

/// Reduction of v against a matrix already in Howell form. On success the
/// i-th coefficient lies in [0, k / pivot_i).
std::optional<RingVector> howell_coordinates(const RingMatrix& howell,
                                             const RingVector& v);

/// Canonical representative of v modulo the span of a Howell form: the
/// entry at each pivot column ends up in [0, pivot).
RingVector howell_remainder(const RingMatrix& howell, const RingVector& v);

/// Howell form of {c : c * m == 0 (mod k)}. May have zero rows.
RingMatrix left_kernel(const RingMatrix& m);

// Number-theoretic helpers.
Residue gcd_residue(Residue a, Residue b);
/// A unit u of Z_k with a * u == gcd(a, k) (mod k). Requires a != 0 mod k.
Residue normalizing_unit(Residue a, Residue k);

}  // namespace quditib
