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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieplateau/dla.hpp"

namespace lieplateau {

/// Thrown when a decomposition fails validation after the retry budget.
struct DecompositionError : std::runtime_error {
  explicit DecompositionError(const std::string& invariant)
      : std::runtime_error("ideal decomposition failed invariant: " + invariant),
        failed_invariant(invariant) {}
  std::string failed_invariant;
};

/// Partition of the DLA into center and simple ideals, in DlaBasis
/// coordinates. Columns of each block are orthonormal coefficient vectors.
struct IdealDecomposition {
  Eigen::MatrixXd center;            // d x c (possibly 0 columns)
  std::vector<Eigen::MatrixXd> ideals;  // each d x d_alpha
  std::vector<double> kappa;         // Killing/Frobenius index ratio per ideal

  int dla_dim() const { return static_cast<int>(center.rows()); }
  int ideal_count() const { return static_cast<int>(ideals.size()); }
};

/// Kernel of the Killing Gram matrix: orthonormal basis of the center.
Eigen::MatrixXd find_center(const StructureData& s, double tol = 1e-8);

/// Orthonormal basis (as symmetric matrices) of
/// {S = S^T : [ad_k, S] = 0 for all k}, computed by eigendecomposition of
/// the PSD operator sum_k L_k^T L_k on the symmetric subspace, where
/// L_k(S) = [ad_k, S].
std::vector<Eigen::MatrixXd> sym_commutant_basis(const std::vector<Eigen::MatrixXd>& ads,
                                                 double tol = 1e-9);

struct IdealOptions {
  int max_retries = 8;
  double cluster_tol = 1e-8;       // eigenvalue gap merging
  double cross_comm_tol = 1e-8;    // cross-ideal commutator norms
  double kappa_rel_std_tol = 1e-6; // Schur constancy of the index ratio
  double center_ad_tol = 1e-8;
};

/// Decomposes the DLA into center plus simple ideals: a random symmetric
/// element of the adjoint commutant is drawn with `seed`, and its eigenspaces
/// (clustered) are the ideals. All invariants are validated; degenerate draws
/// are retried with a fresh seed.
IdealDecomposition simple_ideals(const StructureData& s, std::uint64_t seed,
                                 const IdealOptions& opts = {});

/// Split of an operator's DLA coordinates across the decomposition.
struct ComponentSplit {
  std::vector<Eigen::VectorXd> ideal_coords;  // coordinates within each ideal basis
  Eigen::VectorXd center_coords;
  double residual_norm2 = 0.0;  // ||X_perp||^2 outside the DLA

  double ideal_norm2(int a) const { return ideal_coords[a].squaredNorm(); }
  double center_norm2() const { return center_coords.squaredNorm(); }
};

/// Splits DLA coordinates (plus the squared residual outside the DLA) into
/// mutually orthogonal per-ideal, center and residual parts.
ComponentSplit split_components(const IdealDecomposition& dec, const Eigen::VectorXd& coords,
                                double residual_norm2);

template <class Elem>
ComponentSplit project_components(const DlaBasis<Elem>& basis, const IdealDecomposition& dec,
                                  const Elem& x) {
  Eigen::VectorXd c = coordinates(basis, x);
  return split_components(dec, c, residual_norm2(basis, x, c));
}

}  // namespace lieplateau
