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

#include "quditib/channels.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "quditib/errors.hpp"

namespace quditib {

namespace {

// X^a Z^b over omega_d; the d^2 of them form an orthogonal operator basis.
CMatrix weyl(int d, int a, int b) {
  CMatrix x = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) x((j + a) % d, j) = root_of_unity(d, static_cast<Residue>(b) * j);
  return x;
}

CMatrix kron_conj(const CMatrix& a) {
  const auto d = a.rows();
  CMatrix out(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) out.block(i * d, j * d, d, d) = a(i, j) * a.conjugate();
  }
  return out;
}

void require_dim(int d) {
  if (d < 2) throw ShapeError("qudit dimension must be at least 2");
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
    throw ShapeError("density matrix must be square and nonempty");
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw RangeError("density matrix is not Hermitian");
  }
  if (std::abs(rho_.trace() - Complex(1.0)) > 1e-12) {
    throw RangeError("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10) {
    throw RangeError("density matrix has a negative eigenvalue");
  }
}

KrausSet::KrausSet(std::vector<CMatrix> operators) : ops_(std::move(operators)) {
  if (ops_.empty()) throw CptpViolation("empty Kraus set");
  const auto d = ops_.front().rows();
  CMatrix sum = CMatrix::Zero(d, d);
  for (const auto& a : ops_) {
    if (a.rows() != d || a.cols() != d) throw ShapeError("Kraus operators differ in shape");
    sum += a.adjoint() * a;
  }
  const double err = (sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (err > 1e-10) {
    throw CptpViolation("Kraus set is not trace preserving (deviation " + std::to_string(err) +
                        ")");
  }
}

SuperOperator::SuperOperator(CMatrix matrix) : m_(std::move(matrix)) {
  if (m_.rows() != m_.cols()) throw ShapeError("superoperator must be square");
  dim_ = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m_.rows()))));
  if (dim_ * dim_ != m_.rows() || dim_ < 1) {
    throw ShapeError("superoperator size is not a perfect square");
  }
}

SuperOperator SuperOperator::identity(int d) {
  return SuperOperator(CMatrix::Identity(d * d, d * d));
}

SuperOperator SuperOperator::operator*(const SuperOperator& other) const {
  if (other.dim_ != dim_) throw ShapeError("composing superoperators of different dimension");
  return SuperOperator(m_ * other.m_);
}

CVector vectorize(const CMatrix& m) {
  const auto d = m.rows();
  CVector v(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) v(i * d + j) = m(i, j);
  }
  return v;
}

CVector vectorize(const DensityMatrix& rho) { return vectorize(rho.matrix()); }

CMatrix devectorize(const CVector& v, int d) {
  if (v.size() != static_cast<Eigen::Index>(d) * d) throw ShapeError("vector length is not d^2");
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = v(i * d + j);
  }
  return m;
}

SuperOperator superop_from_kraus(const KrausSet& kraus) {
  const int d = kraus.dimension();
  CMatrix s = CMatrix::Zero(d * d, d * d);
  for (const auto& a : kraus.operators()) s += kron_conj(a);
  return SuperOperator(std::move(s));
}

SuperOperator unitary_superop(const CMatrix& u) {
  return SuperOperator(kron_conj(u));
}

double average_gate_fidelity(const SuperOperator& s) {
  const double d = s.dimension();
  return (d * s.matrix().trace().real() + d * d) / (d * d * (d + 1.0));
}

double average_gate_fidelity(const KrausSet& kraus) {
  return agf_from_chi00(chi00(kraus), kraus.dimension());
}

double chi00(const KrausSet& kraus) {
  const double d = kraus.dimension();
  double sum = 0.0;
  for (const auto& a : kraus.operators()) sum += std::norm(a.trace());
  return sum / (d * d);
}

double chi00(const SuperOperator& s) {
  return chi00_from_agf(average_gate_fidelity(s), s.dimension());
}

double chi00_from_agf(double fidelity, int d) { return ((d + 1.0) * fidelity - 1.0) / d; }

double agf_from_chi00(double chi, int d) { return (d * chi + 1.0) / (d + 1.0); }

KrausSet identity_channel(int d) {
  require_dim(d);
  return KrausSet({CMatrix::Identity(d, d)});
}

KrausSet depolarizing(int d, double lambda) {
  require_dim(d);
  const double d2 = static_cast<double>(d) * d;
  if (lambda > 1.0 || lambda < -1.0 / (d2 - 1.0)) {
    throw RangeError("depolarizing parameter " + std::to_string(lambda) + " is not CPTP");
  }
  std::vector<CMatrix> ops;
  ops.push_back(std::sqrt(lambda + (1.0 - lambda) / d2) * CMatrix::Identity(d, d));
  if (lambda < 1.0) {
    const double w = std::sqrt((1.0 - lambda) / d2);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        if (a != 0 || b != 0) ops.push_back(w * weyl(d, a, b));
      }
    }
  }
  return KrausSet(std::move(ops));
}

KrausSet compose(const KrausSet& outer, const KrausSet& inner) {
  if (outer.dimension() != inner.dimension()) throw ShapeError("channel dimension mismatch");
  std::vector<CMatrix> ops;
  ops.reserve(outer.rank() * inner.rank());
  for (const auto& a : outer.operators()) {
    for (const auto& b : inner.operators()) ops.push_back(a * b);
  }
  return KrausSet(std::move(ops));
}

KrausSet random_cptp(int d, int rank, Rng& rng) {
  require_dim(d);
  if (rank < 1 || rank > d * d) {
    throw RangeError("Kraus rank " + std::to_string(rank) + " outside [1, d^2]");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(d) * rank;
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(rows, d);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(rows, d);
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    if (std::abs(rjj) > 0.0) q.col(j) *= rjj / std::abs(rjj);
  }
  std::vector<CMatrix> ops;
  ops.reserve(static_cast<std::size_t>(rank));
  for (int k = 0; k < rank; ++k) ops.push_back(q.middleRows(static_cast<Eigen::Index>(k) * d, d));
  return KrausSet(std::move(ops));
}

KrausSet mix_to_target_fidelity(const KrausSet& kraus, double target) {
  const int d = kraus.dimension();
  const double current = average_gate_fidelity(kraus);
  constexpr double kEps = 1e-14;
  if (target > 1.0 + kEps || !std::isfinite(target)) {
    throw RangeError("target fidelity " + std::to_string(target) + " above 1");
  }
  if (std::abs(target - current) <= kEps) return kraus;

  std::vector<CMatrix> ops;
  if (target > current) {
    // F(lambda Id + (1-lambda) E) = lambda + (1-lambda) F(E).
    const double lambda = std::min(1.0, (target - current) / (1.0 - current));
    if (lambda >= 1.0) return identity_channel(d);
    ops.push_back(std::sqrt(lambda) * CMatrix::Identity(d, d));
    for (const auto& a : kraus.operators()) ops.push_back(std::sqrt(1.0 - lambda) * a);
    return KrausSet(std::move(ops));
  }

  const double floor = 1.0 / d;  // completely depolarizing channel
  if (current - floor <= kEps || target < floor - kEps) {
    throw RangeError("target fidelity " + std::to_string(target) +
                     " is below what depolarizing mixtures can reach from " +
                     std::to_string(current));
  }
  const double mu = std::min(1.0, (current - target) / (current - floor));
  for (const auto& a : kraus.operators()) ops.push_back(std::sqrt(1.0 - mu) * a);
  const double w = std::sqrt(mu) / d;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) ops.push_back(w * weyl(d, a, b));
  }
  return KrausSet(std::move(ops));
}

}  // namespace quditib
