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
#include <optional>
#include <vector>

#include "lieplateau/compound.hpp"
#include "lieplateau/pauli.hpp"
#include "lieplateau/variance.hpp"

namespace lieplateau {

using StateVec = Eigen::VectorXcd;

/// Measurement operator: a real Pauli combination, a rank-one basis-state
/// projector, or a dense Hermitian matrix.
struct Observable {
  enum class Kind { kPauli, kProjector, kDense };
  Kind kind = Kind::kPauli;
  HermitianOp pauli;
  std::uint64_t proj_bits = 0;
  Eigen::MatrixXcd dense;

  static Observable from_pauli(HermitianOp o);
  static Observable projector(std::uint64_t bits);
  static Observable from_dense(Eigen::MatrixXcd m);
};

/// Tags a generator as one of the compound Givens families so the
/// Hamming-sector simulator can apply it as a 2x2 block rotation.
struct GivensTag {
  enum class Kind { kX, kY, kZ } kind;
  int i = 0, j = 0;  // 1-based qubit pair, i < j
};

/// Periodic ansatz: a pool of skew-Hermitian generators and layers of gates
/// referencing them. Each gate owns one parameter slot; the parameter
/// distribution is uniform over [lo, hi) per slot.
struct AnsatzSpec {
  std::uint32_t n_qubits = 0;
  std::vector<SkewOp> generators;
  std::vector<std::optional<GivensTag>> tags;        // parallel to generators
  std::vector<Eigen::MatrixXcd> dense_generators;    // dense backend pool
  bool dense_backend = false;
  std::vector<std::vector<int>> layers;
  double lo = 0.0;
  double hi = 4.0 * 3.14159265358979323846;

  std::vector<int> gate_gen;  // flattened layer order; built by finalize()

  /// Validates generators (commuting Pauli terms resp. skew-Hermitian dense
  /// matrices) and flattens the gate list. Must be called before simulation.
  void finalize();
  int slot_count() const { return static_cast<int>(gate_gen.size()); }
  int middle_slot() const { return slot_count() / 2; }
  std::int64_t state_dim() const;
};

/// Builds the paper-style compound ansatz: L brick layers, each 2-qubit gate
/// composed of an h_y rotation followed by an h_x rotation (SU) or a single
/// h_y rotation (SO), independently parameterized.
AnsatzSpec compound_ansatz(std::uint32_t n, int layers, CompoundVariant variant);

/// Dense-backend ansatz cycling through the given skew-Hermitian generators.
AnsatzSpec dense_ansatz(std::vector<Eigen::MatrixXcd> generators, int layers);

/// state <- exp(-theta A) state for A with mutually commuting Pauli terms,
/// applied as a product of exact cos/sin Pauli rotations.
void apply_rotation(StateVec& state, const SkewOp& a, double theta);
/// out = A state.
StateVec apply_skew(const SkewOp& a, const StateVec& state);
/// out = O state.
StateVec apply_observable(const Observable& o, const StateVec& state);
double expectation(const StateVec& state, const Observable& o);

/// Exact d<O>/d theta_slot via two statevector passes and a commutator
/// insertion at the slot.
double exact_gradient(const AnsatzSpec& spec, const std::vector<double>& thetas, int slot,
                      const Observable& o, const InitialState& rho0, bool sector_sim = false);

struct McEstimate {
  int slot = 0;
  int samples = 0;
  double mean = 0.0;
  double variance = 0.0;
  double stderr_variance = 0.0;  // fourth-moment formula sqrt((mu4 - var^2)/S)
  double stderr_mean = 0.0;
  std::uint64_t seed = 0;
  double wall_time_s = 0.0;
};

/// Monte-Carlo gradient statistics under i.i.d. uniform parameter draws.
/// Per-sample counter-based seeding makes the result independent of the
/// thread count; samples must be >= 100.
McEstimate estimate_gradvar(const AnsatzSpec& spec, const Observable& o, const InitialState& rho0,
                            int slot, int samples, std::uint64_t seed, bool sector_sim = false);

}  // namespace lieplateau
