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

#include "quditib/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include <Eigen/Dense>

#include "quditib/channels.hpp"
#include "quditib/errors.hpp"
#include "quditib/twirl.hpp"

namespace quditib {

std::string to_string(Fiducial f) { return f == Fiducial::kZero ? "0" : "+"; }

Fiducial parse_fiducial(const std::string& text) {
  if (text == "0") return Fiducial::kZero;
  if (text == "+") return Fiducial::kPlus;
  throw SchemaError("unknown fiducial '" + text + "' (expected 0 or +)");
}

void DecayRecord::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0 && points[i].m <= points[i - 1].m) {
      throw SchemaError("decay lengths must be strictly increasing");
    }
    const double s = points[i].survival;
    if (!(s >= -1e-9 && s <= 1.0 + 1e-9)) {
      throw SchemaError("survival " + std::to_string(s) + " at m=" +
                        std::to_string(points[i].m) + " outside [0, 1]");
    }
  }
}

DecayRecord aggregate_decay(Fiducial f, const std::vector<int>& lengths,
                            const std::vector<double>& survivals, std::uint64_t shots) {
  if (lengths.size() != survivals.size()) throw ShapeError("lengths and survivals differ in size");
  std::map<int, std::vector<double>> by_m;
  for (std::size_t i = 0; i < lengths.size(); ++i) by_m[lengths[i]].push_back(survivals[i]);

  DecayRecord rec{f, {}};
  for (const auto& [m, values] : by_m) {
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double se = 0.0;
    if (values.size() > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - mean) * (v - mean);
      se = std::sqrt(ss / (n - 1.0) / n);
    } else if (shots > 0) {
      se = std::sqrt(std::max(mean * (1.0 - mean), 0.0) / static_cast<double>(shots));
    }
    rec.points.push_back({m, mean, values.size(), se});
  }
  return rec;
}

namespace {

struct LinearFit {
  double a, b, rss;
};

// Weighted least squares of y against (1, eta^m).
LinearFit profile(double eta, const std::vector<double>& ms, const std::vector<double>& ys,
                  const std::vector<double>& ws) {
  double sw = 0.0, sx = 0.0, sy = 0.0;
  std::vector<double> xs(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    xs[i] = std::pow(eta, ms[i]);
    sw += ws[i];
    sx += ws[i] * xs[i];
    sy += ws[i] * ys[i];
  }
  const double xbar = sx / sw, ybar = sy / sw;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    sxx += ws[i] * (xs[i] - xbar) * (xs[i] - xbar);
    sxy += ws[i] * (xs[i] - xbar) * (ys[i] - ybar);
  }
  const double b = sxx > 1e-300 ? sxy / sxx : 0.0;
  const double a = ybar - b * xbar;
  double rss = 0.0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const double r = ys[i] - a - b * xs[i];
    rss += ws[i] * r * r;
  }
  return {a, b, rss};
}

double eta_standard_error(const FitResult& fit, const std::vector<double>& ms,
                          const std::vector<double>& ws) {
  const auto n = static_cast<Eigen::Index>(ms.size());
  if (n <= 3) return std::numeric_limits<double>::quiet_NaN();
  Eigen::MatrixXd j(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double m = ms[static_cast<std::size_t>(i)];
    j(i, 0) = 1.0;
    j(i, 1) = std::pow(fit.eta, m);
    j(i, 2) = fit.eta > 0.0 ? fit.b * m * std::pow(fit.eta, m - 1.0) : (m == 1.0 ? fit.b : 0.0);
  }
  const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(ws.data(), n);
  const Eigen::Matrix3d normal = j.transpose() * w.asDiagonal() * j;
  const double sigma2 = fit.residual * fit.residual / static_cast<double>(n - 3);
  Eigen::FullPivLU<Eigen::Matrix3d> lu(normal);
  if (!lu.isInvertible()) return std::numeric_limits<double>::infinity();
  return std::sqrt(std::max(sigma2 * lu.inverse()(2, 2), 0.0));
}

}  // namespace

FitResult fit_decay(const DecayRecord& record, const FitOptions& options) {
  record.validate();
  if (record.points.size() < 3) {
    throw SchemaError("decay fit needs at least three distinct lengths, got " +
                      std::to_string(record.points.size()));
  }
  std::vector<double> ms, ys, ws;
  bool use_variance = options.weighting == Weighting::kInverseVariance;
  for (const auto& p : record.points) use_variance = use_variance && p.std_error > 0.0;
  for (const auto& p : record.points) {
    ms.push_back(p.m);
    ys.push_back(p.survival);
    ws.push_back(use_variance ? 1.0 / (p.std_error * p.std_error) : 1.0);
  }

  FitResult out;
  const auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
  if (*hi - *lo <= 1e-14) {
    out.a = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
    out.b = 0.0;
    out.eta = 1.0;
    out.degenerate = true;
    out.eta_stderr = 0.0;
    return out;
  }

  const int nodes = std::max(options.grid_nodes, 3);
  out.grid_nodes = nodes;
  int best = 0;
  double best_rss = std::numeric_limits<double>::infinity();
  for (int k = 0; k < nodes; ++k) {
    const double rss = profile(static_cast<double>(k) / (nodes - 1), ms, ys, ws).rss;
    if (rss < best_rss) {
      best_rss = rss;
      best = k;
    }
  }

  double left = static_cast<double>(std::max(best - 1, 0)) / (nodes - 1);
  double right = static_cast<double>(std::min(best + 1, nodes - 1)) / (nodes - 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = right - inv_phi * (right - left);
  double x2 = left + inv_phi * (right - left);
  double f1 = profile(x1, ms, ys, ws).rss;
  double f2 = profile(x2, ms, ys, ws).rss;
  int iterations = 0;
  while (right - left > options.eta_tolerance && iterations < 200) {
    ++iterations;
    if (f1 <= f2) {
      right = x2;
      x2 = x1;
      f2 = f1;
      x1 = right - inv_phi * (right - left);
      f1 = profile(x1, ms, ys, ws).rss;
    } else {
      left = x1;
      x1 = x2;
      f1 = f2;
      x2 = left + inv_phi * (right - left);
      f2 = profile(x2, ms, ys, ws).rss;
    }
  }
  double eta = 0.5 * (left + right);
  // The bracket can miss a grid endpoint optimum by up to the tolerance.
  const double grid_eta = static_cast<double>(best) / (nodes - 1);
  if (best_rss < profile(eta, ms, ys, ws).rss) eta = grid_eta;

  const auto fit = profile(eta, ms, ys, ws);
  out.a = fit.a;
  out.b = fit.b;
  out.eta = eta;
  out.residual = std::sqrt(fit.rss);
  out.iterations = iterations;
  out.eta_stderr = eta_standard_error(out, ms, ws);
  return out;
}

double composite_agf(const FitResult& fit0, const FitResult& fit_plus, int d) {
  return agf_from_etas(fit0.eta, fit_plus.eta, d);
}

double t_gate_fidelity(double composite_fidelity, double reference_fidelity, int d) {
  const double chi_ref = chi00_from_agf(reference_fidelity, d);
  if (!(chi_ref > 0.0)) {
    throw RangeError("reference fidelity " + std::to_string(reference_fidelity) +
                     " gives a non-positive chi_00");
  }
  const double chi_comp = chi00_from_agf(composite_fidelity, d);
  return agf_from_chi00(chi_comp / chi_ref, d);
}

double t_gate_fidelity_direct(double composite_fidelity, double reference_fidelity) {
  if (!(reference_fidelity > 0.0)) throw RangeError("reference fidelity must be positive");
  return composite_fidelity / reference_fidelity;
}

double relative_error(double estimate, double truth) {
  return std::abs(estimate - truth) / std::abs(truth);
}

}  // namespace quditib
