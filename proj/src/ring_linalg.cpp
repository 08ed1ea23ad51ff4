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

#include "quditib/ring_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "quditib/errors.hpp"

namespace quditib {

namespace {

void require_modulus(Residue modulus) {
  if (modulus < 1) {
    throw InvalidRing("modulus must be positive, got " + std::to_string(modulus));
  }
}

// Extended Euclid on non-negative integers: returns g and s, t with s*a + t*b == g.
struct Bezout {
  Residue g, s, t;
};

Bezout extended_gcd(Residue a, Residue b) {
  Residue old_r = a, r = b;
  Residue old_s = 1, s = 0;
  Residue old_t = 0, t = 1;
  while (r != 0) {
    const Residue q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

// A row of the working set: its value plus the coefficients expressing it in
// terms of the input rows.
struct WorkRow {
  std::vector<Residue> value;
  std::vector<Residue> coeffs;
};

// out = x * a + y * b (mod k), applied to both value and transform.
WorkRow combine(Residue x, const WorkRow& a, Residue y, const WorkRow& b, Residue k) {
  WorkRow out{std::vector<Residue>(a.value.size()), std::vector<Residue>(a.coeffs.size())};
  for (std::size_t i = 0; i < a.value.size(); ++i) {
    out.value[i] = reduce_mod(reduce_mod(x, k) * a.value[i] + reduce_mod(y, k) * b.value[i], k);
  }
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    out.coeffs[i] = reduce_mod(reduce_mod(x, k) * a.coeffs[i] + reduce_mod(y, k) * b.coeffs[i], k);
  }
  return out;
}

void scale(WorkRow& row, Residue factor, Residue k) {
  for (auto& e : row.value) e = reduce_mod(e * factor, k);
  for (auto& e : row.coeffs) e = reduce_mod(e * factor, k);
}

bool all_zero(const std::vector<Residue>& v) {
  return std::all_of(v.begin(), v.end(), [](Residue e) { return e == 0; });
}

}  // namespace

RingScalar::RingScalar(Residue value, Residue modulus) : modulus_(modulus) {
  require_modulus(modulus);
  value_ = reduce_mod(value, modulus);
}

RingScalar RingScalar::operator+(const RingScalar& other) const {
  if (other.modulus_ != modulus_) throw ShapeError("mixed moduli in scalar addition");
  return {value_ + other.value_, modulus_};
}

RingScalar RingScalar::operator*(const RingScalar& other) const {
  if (other.modulus_ != modulus_) throw ShapeError("mixed moduli in scalar product");
  return {value_ * other.value_, modulus_};
}

RingScalar RingScalar::operator-() const { return {-value_, modulus_}; }

RingVector::RingVector(std::vector<Residue> values, Residue modulus)
    : values_(std::move(values)), modulus_(modulus) {
  require_modulus(modulus);
  for (auto& e : values_) e = reduce_mod(e, modulus);
}

bool RingVector::is_zero() const { return all_zero(values_); }

RingMatrix::RingMatrix(std::size_t rows, std::size_t cols, Residue modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), entries_(rows * cols, 0) {
  require_modulus(modulus);
}

RingMatrix::RingMatrix(std::initializer_list<std::initializer_list<Residue>> rows,
                       Residue modulus)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), modulus_(modulus) {
  require_modulus(modulus);
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    for (Residue e : r) entries_.push_back(reduce_mod(e, modulus));
  }
}

RingMatrix RingMatrix::from_rows(std::span<const RingVector> rows, std::size_t cols,
                                 Residue modulus) {
  RingMatrix m(rows.size(), cols, modulus);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols || rows[r].modulus() != modulus) {
      throw ShapeError("row " + std::to_string(r) + " does not match matrix shape");
    }
    for (std::size_t c = 0; c < cols; ++c) m.entries_[r * cols + c] = rows[r][c];
  }
  return m;
}

void RingMatrix::set(std::size_t r, std::size_t c, Residue value) {
  entries_.at(r * cols_ + c) = reduce_mod(value, modulus_);
}

RingVector RingMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return RingVector(std::vector<Residue>(s.begin(), s.end()), modulus_);
}

Residue gcd_residue(Residue a, Residue b) { return std::gcd(a, b); }

Residue normalizing_unit(Residue a, Residue k) {
  a = reduce_mod(a, k);
  if (a == 0) throw InvalidRing("zero has no normalizing unit");
  const Residue g = std::gcd(a, k);
  const Residue quotient = k / g;
  // a/g is invertible modulo k/g; lift that inverse to a unit of Z_k.
  Residue inv = reduce_mod(extended_gcd(reduce_mod(a / g, quotient), quotient).s, quotient);
  for (Residue u = inv; u < k + quotient; u += quotient) {
    if (std::gcd(u, k) == 1) return reduce_mod(u, k);
  }
  throw InvalidRing("no normalizing unit found");  // unreachable for k >= 2
}

HowellDecomposition howell_decomposition(const RingMatrix& m) {
  const Residue k = m.modulus();
  if (k < 2) throw InvalidRing("Howell form needs modulus >= 2, got " + std::to_string(k));
  if (m.cols() == 0) throw ShapeError("Howell form of a matrix without columns");

  const std::size_t n_in = m.rows();
  std::vector<WorkRow> work;
  work.reserve(n_in);
  for (std::size_t r = 0; r < n_in; ++r) {
    auto s = m.row(r);
    WorkRow row{std::vector<Residue>(s.begin(), s.end()), std::vector<Residue>(n_in, 0)};
    row.coeffs[r] = 1;
    if (!all_zero(row.value)) work.push_back(std::move(row));
  }

  std::vector<WorkRow> pivots;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < m.cols() && !work.empty(); ++col) {
    std::optional<WorkRow> pivot;
    std::vector<WorkRow> rest;
    for (auto& row : work) {
      if (row.value[col] == 0) {
        rest.push_back(std::move(row));
        continue;
      }
      if (!pivot) {
        pivot = std::move(row);
        continue;
      }
      // Unimodular 2x2 step leaving gcd in the pivot and zero in `row`.
      const Residue a = pivot->value[col];
      const Residue b = row.value[col];
      const auto [g, s, t] = extended_gcd(a, b);
      WorkRow new_pivot = combine(s, *pivot, t, row, k);
      WorkRow cleared = combine(-(b / g), *pivot, a / g, row, k);
      pivot = std::move(new_pivot);
      if (!all_zero(cleared.value)) rest.push_back(std::move(cleared));
    }
    work = std::move(rest);
    if (!pivot) continue;

    scale(*pivot, normalizing_unit(pivot->value[col], k), k);
    const Residue annihilator = k / pivot->value[col];
    WorkRow ann = *pivot;
    scale(ann, annihilator, k);
    if (!all_zero(ann.value)) work.push_back(std::move(ann));
    pivots.push_back(std::move(*pivot));
    pivot_cols.push_back(col);
  }

  // Reduce the entries above each pivot into [0, pivot).
  for (std::size_t i = 1; i < pivots.size(); ++i) {
    const std::size_t col = pivot_cols[i];
    const Residue p = pivots[i].value[col];
    for (std::size_t j = 0; j < i; ++j) {
      const Residue q = pivots[j].value[col] / p;
      if (q != 0) pivots[j] = combine(1, pivots[j], -q, pivots[i], k);
    }
  }

  HowellDecomposition out{RingMatrix(pivots.size(), m.cols(), k),
                          RingMatrix(pivots.size(), n_in, k)};
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.form.set(i, c, pivots[i].value[c]);
    for (std::size_t c = 0; c < n_in; ++c) out.transform.set(i, c, pivots[i].coeffs[c]);
  }
  return out;
}

RingMatrix howell_form(const RingMatrix& m) { return howell_decomposition(m).form; }

std::vector<std::size_t> pivot_columns(const RingMatrix& howell) {
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < howell.rows(); ++r) {
    auto row = howell.row(r);
    auto it = std::find_if(row.begin(), row.end(), [](Residue e) { return e != 0; });
    cols.push_back(static_cast<std::size_t>(it - row.begin()));
  }
  return cols;
}

std::optional<RingVector> howell_coordinates(const RingMatrix& howell, const RingVector& v) {
  if (v.size() != howell.cols() || v.modulus() != howell.modulus()) {
    throw ShapeError("vector of length " + std::to_string(v.size()) + " mod " +
                     std::to_string(v.modulus()) + " against basis with " +
                     std::to_string(howell.cols()) + " columns mod " +
                     std::to_string(howell.modulus()));
  }
  const Residue k = howell.modulus();
  std::vector<Residue> rest(v.values().begin(), v.values().end());
  std::vector<Residue> coords(howell.rows(), 0);
  const auto cols = pivot_columns(howell);
  std::size_t next = 0;
  for (std::size_t c = 0; c < rest.size(); ++c) {
    if (rest[c] == 0) continue;
    while (next < cols.size() && cols[next] < c) ++next;
    if (next == cols.size() || cols[next] != c) return std::nullopt;
    const Residue p = howell.at(next, c);
    if (rest[c] % p != 0) return std::nullopt;
    const Residue q = rest[c] / p;
    coords[next] = q;
    for (std::size_t j = c; j < rest.size(); ++j) {
      rest[j] = reduce_mod(rest[j] - q * howell.at(next, j), k);
    }
  }
  return RingVector(std::move(coords), k);
}

bool span_contains(const RingMatrix& basis, const RingVector& v) {
  if (v.size() != basis.cols() || v.modulus() != basis.modulus()) {
    throw ShapeError("span_contains: dimension or modulus mismatch");
  }
  if (v.is_zero()) return true;
  return howell_coordinates(howell_form(basis), v).has_value();
}

RingVector howell_remainder(const RingMatrix& howell, const RingVector& v) {
  if (v.size() != howell.cols() || v.modulus() != howell.modulus()) {
    throw ShapeError("howell_remainder: dimension or modulus mismatch");
  }
  const Residue k = howell.modulus();
  std::vector<Residue> rest(v.values().begin(), v.values().end());
  const auto cols = pivot_columns(howell);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const Residue q = rest[cols[i]] / howell.at(i, cols[i]);
    if (q == 0) continue;
    for (std::size_t j = cols[i]; j < rest.size(); ++j) {
      rest[j] = reduce_mod(rest[j] - q * howell.at(i, j), k);
    }
  }
  return RingVector(std::move(rest), k);
}

RingMatrix left_kernel(const RingMatrix& m) {
  const Residue k = m.modulus();
  const std::size_t r = m.rows(), c = m.cols();
  RingMatrix aug(r, c + r, k);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, c + i, 1);
  }
  const auto h = howell_form(aug);
  const auto cols = pivot_columns(h);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (cols[i] >= c) keep.push_back(i);
  }
  RingMatrix out(keep.size(), r, k);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < r; ++j) out.set(i, j, h.at(keep[i], c + j));
  }
  return out;
}

std::optional<RingVector> solve_combination(const RingMatrix& basis, const RingVector& v) {
  if (v.size() != basis.cols() || v.modulus() != basis.modulus()) {
    throw ShapeError("solve_combination: dimension or modulus mismatch");
  }
  const Residue k = basis.modulus();
  const auto dec = howell_decomposition(basis);
  auto coords = howell_coordinates(dec.form, v);
  if (!coords) return std::nullopt;
  std::vector<Residue> c(basis.rows(), 0);
  for (std::size_t i = 0; i < dec.form.rows(); ++i) {
    for (std::size_t j = 0; j < basis.rows(); ++j) {
      c[j] = reduce_mod(c[j] + (*coords)[i] * dec.transform.at(i, j), k);
    }
  }
  return howell_remainder(left_kernel(basis), RingVector(std::move(c), k));
}

}  // namespace quditib
