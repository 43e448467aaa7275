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
#include <vector>

#include "lieplateau/dla.hpp"
#include "lieplateau/ideals.hpp"

namespace lieplateau {

/// Initial state of the circuit: a computational basis state, the uniform
/// superposition, an explicit statevector, or a density matrix.
struct InitialState {
  enum class Kind { kBitstring, kUniform, kStatevector, kDensity };
  Kind kind = Kind::kBitstring;
  std::uint32_t n_qubits = 0;  // set for the qubit kinds
  std::uint64_t bits = 0;
  Eigen::VectorXcd psi;  // statevector; arbitrary dimension for dense backends
  Eigen::MatrixXcd rho;

  static InitialState bitstring(std::uint32_t n, std::uint64_t bits);
  static InitialState uniform(std::uint32_t n);
  static InitialState statevector(Eigen::VectorXcd psi);
  static InitialState density(Eigen::MatrixXcd rho);

  /// Expands the state to an explicit statevector (qubit kinds only).
  Eigen::VectorXcd to_statevector() const;
};

/// <psi|P|psi> resp. Tr(rho P) for a single Pauli string.
double pauli_expectation(const InitialState& state, const PauliTerm& p);

struct LasaResult {
  double residual = 0.0;  // ||iO - P_g(iO)||_F
  bool in_dla = false;
  bool conclusive = true;  // false when the basis was truncated
};

/// Checks whether iO lies in the DLA span.
LasaResult lasa_check(const HermitianOp& o, const PauliDlaBasis& basis, double tol = 1e-8);
LasaResult lasa_check(const DenseOp& o_herm, const DenseDlaBasis& basis, double tol = 1e-8);

struct IdealTerm {
  int dim = 0;
  double killing_h = 0.0;  // ||H_alpha||_K^2
  double frob_o = 0.0;     // ||O_alpha||_F^2
  double frob_rho = 0.0;   // ||rho_alpha||_F^2
  double term = 0.0;       // killing_h * frob_o * frob_rho / dim^2
};

struct VarianceReport {
  std::vector<IdealTerm> ideals;
  double total = 0.0;
  double lasa_residual_o = 0.0;
  bool truncated = false;
};

/// Coordinate-level inputs shared by the Pauli and dense backends: h, o, r
/// are the DLA coordinates of the generator, of iO, and of i*rho.
struct GradVarInputs {
  Eigen::VectorXd h;
  Eigen::VectorXd o;
  Eigen::VectorXd r;
  double o_residual2 = 0.0;
  double h_residual2 = 0.0;
  double o_norm2 = 0.0;  // full ||O||_F^2, for the relative LASA test
  bool truncated = false;
};

/// Exact gradient variance from the per-ideal Killing/Frobenius factors.
/// Throws std::invalid_argument for non-LASA observables or a truncated basis.
VarianceReport gradvar_predict(const StructureData& s, const IdealDecomposition& dec,
                               const GradVarInputs& in, double lasa_tol = 1e-8);

/// Frobenius-only upper bound: sum_a 2 ||H_a||_F^2 ||O_a||_F^2 ||rho_a||_F^2 / d_a.
double gradvar_upper_bound(const StructureData& s, const IdealDecomposition& dec,
                           const GradVarInputs& in, double lasa_tol = 1e-8);

/// Exact adjoint-space oracle: contracts (r (x) r)^T P* (adH (x) adH) P* (o (x) o)
/// where P* is the orthogonal projector onto the joint kernel of
/// {ad_k (x) I + I (x) ad_k}, computed by eigendecomposition on the symmetric
/// subspace. Independent of the ideal decomposition and of the closed-form
/// Killing factorization.
double exact_adjoint_oracle(const StructureData& s, const GradVarInputs& in,
                            int dim_cap = 60, double lasa_tol = 1e-8);

/// Gathers coordinate-level inputs for the Pauli backend.
GradVarInputs make_gradvar_inputs(const PauliDlaBasis& basis, const SkewOp& h,
                                  const HermitianOp& o, const InitialState& rho);
/// Dense backend: o_herm is the Hermitian observable as a dense matrix.
GradVarInputs make_gradvar_inputs(const DenseDlaBasis& basis, const DenseOp& h,
                                  const DenseOp& o_herm, const InitialState& rho);

}  // namespace lieplateau
