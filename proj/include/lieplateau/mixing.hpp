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

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lieplateau/dla.hpp"

namespace lieplateau {

/// Averaged moment operator of the generator random walk on the t-fold
/// adjoint tensor power: T = (1/d_g) sum_k KerProj(ad_k^{(t)}) with
/// ad_k^{(t)} = sum_r I x .. x ad_k x .. x I, and T* the projector onto the
/// joint invariant subspace. gap = 1 - ||T - T*||_op.
struct MomentWalk {
  int t = 0;
  Eigen::MatrixXd T;
  Eigen::MatrixXd T_star;
  double gap = 0.0;
  int invariant_dim = 0;
};

struct MomentWalkOptions {
  // Budget on (d_g^t)^2, the entry count of the walk matrices.
  std::int64_t max_entries = 250000;
  double kernel_tol = 1e-10;
};

MomentWalk moment_walk(const StructureData& s, int t, const MomentWalkOptions& opts = {});

struct StableRankReport {
  std::vector<double> per_generator;  // ||ad_k||_F^2 / ||ad_k||_op^2
  double r_k = 0.0;                   // minimum
};

StableRankReport stable_rank(const StructureData& s);

/// ||T^L - T*||_op for L = 1..L_max; monotone nonincreasing.
std::vector<double> epsilon_decay(const MomentWalk& walk, int l_max);

/// Least-squares slope of log eps(L) vs L, skipping entries below floor.
double fitted_log_rate(const std::vector<double>& eps, double floor = 1e-14);

}  // namespace lieplateau
