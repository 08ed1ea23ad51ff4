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

#include "quditib/twirl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quditib/errors.hpp"

namespace quditib {

double TwirlSpectrum::max_residual() const {
  return std::max(offblock_residual,
                  *std::max_element(block_residuals.begin(), block_residuals.end()));
}

namespace {

// S(g) sends basis index a = i*d + j to target[a] with phase[a].
struct MonomialAction {
  std::vector<Eigen::Index> target;
  std::vector<Complex> phase;
};

MonomialAction monomial_action(const MonomialElement& g, const std::vector<Complex>& roots) {
  const auto d = static_cast<Eigen::Index>(g.perm.size());
  const Residue n = g.diag.modulus();
  MonomialAction act{std::vector<Eigen::Index>(d * d), std::vector<Complex>(d * d)};
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const auto a = i * d + j;
      act.target[a] = g.perm(i) * d + g.perm(j);
      act.phase[a] = roots[reduce_mod(g.diag[i] - g.diag[j], n)];
    }
  }
  return act;
}

class PairwiseTwirl {
 public:
  PairwiseTwirl(const CMatrix& noise, const CliffordLikeGroup& group)
      : noise_(noise), group_(group) {
    for (int k = 0; k < group.root_order(); ++k) roots_.push_back(root_of_unity(group.root_order(), k));
  }

  CMatrix sum(std::uint64_t lo, std::uint64_t hi) const {
    if (hi - lo == 1) return term(lo);
    const std::uint64_t mid = lo + (hi - lo) / 2;
    CMatrix left = sum(lo, mid);
    left += sum(mid, hi);
    return left;
  }

 private:
  // (S^dagger N S)_{ab} = conj(phase_a) N_{t(a), t(b)} phase_b.
  CMatrix term(std::uint64_t index) const {
    const auto act = monomial_action(group_.element_at(index), roots_);
    const auto n = noise_.rows();
    CMatrix out(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
      const Complex left = std::conj(act.phase[a]);
      for (Eigen::Index b = 0; b < n; ++b) {
        out(a, b) = left * noise_(act.target[a], act.target[b]) * act.phase[b];
      }
    }
    return out;
  }

  const CMatrix& noise_;
  const CliffordLikeGroup& group_;
  std::vector<Complex> roots_;
};

}  // namespace

SuperOperator element_superop(const MonomialElement& g) {
  return unitary_superop(g.materialize());
}

SuperOperator exact_twirl(const SuperOperator& noise, const CliffordLikeGroup& group,
                          std::uint64_t cap) {
  if (noise.dimension() != group.dimension()) {
    throw ShapeError("noise dimension does not match the group");
  }
  if (group.order() > cap) {
    throw EnumerationCapExceeded("group order " + std::to_string(group.order()) +
                                 " exceeds twirl cap " + std::to_string(cap));
  }
  PairwiseTwirl twirl(noise.matrix(), group);
  CMatrix total = twirl.sum(0, group.order());
  total /= static_cast<double>(group.order());
  return SuperOperator(std::move(total));
}

CMatrix twirl_basis(int d) {
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  CMatrix basis = CMatrix::Zero(n, n);
  Eigen::Index col = 0;
  for (int i = 0; i < d; ++i) basis(i * d + i, col) = 1.0 / std::sqrt(static_cast<double>(d));
  ++col;
  for (int i = 0; i + 1 < d; ++i, ++col) {
    CVector v = CVector::Zero(n);
    v(i * d + i) = 1.0;
    v((i + 1) * d + (i + 1)) = -1.0;
    for (Eigen::Index k = 1; k < col; ++k) v -= basis.col(k).dot(v) * basis.col(k);
    basis.col(col) = v / v.norm();
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i != j) basis(i * d + j, col++) = 1.0;
    }
  }
  return basis;
}

TwirlSpectrum measure_block_spectrum(const SuperOperator& t) {
  const int d = t.dimension();
  const CMatrix basis = twirl_basis(d);
  const CMatrix r = basis.adjoint() * t.matrix() * basis;
  const Eigen::Index n = r.rows();

  TwirlSpectrum s;
  double sum0 = 0.0, sum_plus = 0.0;
  for (Eigen::Index k = 1; k < d; ++k) sum0 += r(k, k).real();
  for (Eigen::Index k = d; k < n; ++k) sum_plus += r(k, k).real();
  s.eta0 = sum0 / (d - 1);
  s.eta_plus = sum_plus / static_cast<double>(n - d);

  s.block_residuals[0] = std::abs(r(0, 0) - Complex(1.0));
  for (Eigen::Index k = 1; k < d; ++k) {
    s.block_residuals[1] = std::max(s.block_residuals[1], std::abs(r(k, k) - Complex(s.eta0)));
  }
  for (Eigen::Index k = d; k < n; ++k) {
    s.block_residuals[2] =
        std::max(s.block_residuals[2], std::abs(r(k, k) - Complex(s.eta_plus)));
  }
  CMatrix off = r;
  off.diagonal().setZero();
  s.offblock_residual = off.norm();
  return s;
}

TwirlSpectrum block_spectrum(const SuperOperator& t, double tolerance) {
  auto s = measure_block_spectrum(t);
  if (s.max_residual() > tolerance) {
    std::ostringstream os;
    os << "superoperator does not have the 1 + eta0 + eta_plus block pattern (residual "
       << s.max_residual() << " > " << tolerance << ")";
    throw StructureViolation(os.str());
  }
  return s;
}

double agf_from_etas(double eta0, double eta_plus, int d) {
  const double dd = d;
  return (dd * (1.0 + (dd - 1.0) * eta0 + (dd * dd - dd) * eta_plus) + dd * dd) /
         (dd * dd * (dd + 1.0));
}

}  // namespace quditib
