// Copyright 2026 The lieplateau authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lieplateau/mixing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lieplateau {

namespace {

// ad_k^{(t)} = sum_r I^{(r-1)} x ad_k x I^{(t-r)}, dimension d^t.
Eigen::MatrixXd tensor_power_action(const Eigen::MatrixXd& ad, int t) {
  const std::int64_t d = ad.rows();
  std::int64_t dim = 1;
  for (int r = 0; r < t; ++r) dim *= d;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  // Index i = sum_r i_r d^{t-1-r}; the slot-r action couples indices that
  // agree everywhere except position r.
  std::vector<std::int64_t> stride(t);
  stride[t - 1] = 1;
  for (int r = t - 2; r >= 0; --r) stride[r] = stride[r + 1] * d;
  for (std::int64_t i = 0; i < dim; ++i) {
    std::int64_t rem = i;
    for (int r = 0; r < t; ++r) {
      std::int64_t ir = (rem / stride[r]) % d;
      std::int64_t base = i - ir * stride[r];
      for (std::int64_t j = 0; j < d; ++j) {
        double v = ad(j, ir);
        if (v != 0.0) out(base + j * stride[r], i) += v;
      }
    }
    (void)rem;
  }
  return out;
}

// Orthogonal projector onto the kernel of an antisymmetric matrix, via the
// PSD form a^T a and an eigenvalue cutoff relative to the top eigenvalue.
Eigen::MatrixXd kernel_projector(const Eigen::MatrixXd& a, double tol) {
  Eigen::MatrixXd q = a.transpose() * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
  double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(a.rows(), a.cols());
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) < tol * scale)
      proj += es.eigenvectors().col(i) * es.eigenvectors().col(i).transpose();
  return proj;
}

// For symmetric arguments (T - T*, T^L - T*).
double operator_norm(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// Largest singular value, valid for any matrix (used on antisymmetric ad).
double spectral_norm(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.transpose() * m);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace

MomentWalk moment_walk(const StructureData& s, int t, const MomentWalkOptions& opts) {
  if (t < 1) throw std::invalid_argument("moment_walk: t must be >= 1");
  std::int64_t dim = 1;
  for (int r = 0; r < t; ++r) {
    dim *= s.dim;
    if (dim * dim > opts.max_entries)
      throw std::invalid_argument("moment_walk: d_g^t over the entry budget");
  }

  MomentWalk walk;
  walk.t = t;
  walk.T = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd joint = Eigen::MatrixXd::Zero(dim, dim);  // sum a^T a over generators
  for (int k = 0; k < s.dim; ++k) {
    Eigen::MatrixXd a = tensor_power_action(s.ad[k], t);
    walk.T += kernel_projector(a, opts.kernel_tol);
    joint += a.transpose() * a;
  }
  walk.T /= static_cast<double>(s.dim);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(joint);
  double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  walk.T_star = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    if (es.eigenvalues()(i) < opts.kernel_tol * scale) {
      walk.T_star += es.eigenvectors().col(i) * es.eigenvectors().col(i).transpose();
      ++walk.invariant_dim;
    }
  walk.gap = 1.0 - operator_norm(walk.T - walk.T_star);
  return walk;
}

StableRankReport stable_rank(const StructureData& s) {
  StableRankReport rep;
  rep.per_generator.reserve(s.dim);
  double min_r = std::numeric_limits<double>::infinity();
  for (const auto& ad : s.ad) {
    double f2 = ad.squaredNorm();
    double op = spectral_norm(ad);
    double r = f2 / (op * op);
    rep.per_generator.push_back(r);
    min_r = std::min(min_r, r);
  }
  rep.r_k = min_r;
  return rep;
}

std::vector<double> epsilon_decay(const MomentWalk& walk, int l_max) {
  std::vector<double> eps;
  eps.reserve(l_max);
  Eigen::MatrixXd m = walk.T;
  for (int l = 1; l <= l_max; ++l) {
    eps.push_back(operator_norm(m - walk.T_star));
    if (l < l_max) m = m * walk.T;
  }
  return eps;
}

double fitted_log_rate(const std::vector<double>& eps, double floor) {
  // Least squares of log eps vs L over entries above the floor.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] < floor) break;
    double x = static_cast<double>(i + 1), y = std::log(eps[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw std::invalid_argument("fitted_log_rate: too few usable points");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace lieplateau
