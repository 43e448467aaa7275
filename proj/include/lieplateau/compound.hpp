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

#include <cstdint>
#include <vector>

#include "lieplateau/pauli.hpp"

namespace lieplateau {

enum class CompoundTopology { kBrick, kStaircase, kPyramid };
enum class CompoundVariant { kSU, kSO };

/// Hamming-weight-preserving Givens/FBS rotation generators on qubit pairs.
/// For a pair (i, j), i < j (1-based):
///   h_x = -(1/4) i (X_i Z... X_j + Y_i Z... Y_j)
///   h_y = -(1/4) i (Y_i Z... X_j - X_i Z... Y_j)
///   h_z = -(1/4) i (Z_i - Z_j)
/// with a Z string on the qubits strictly between i and j. The SU variant
/// carries all three families, the SO variant only h_y.
struct CompoundGenerators {
  std::uint32_t n = 0;
  CompoundVariant variant = CompoundVariant::kSU;
  std::vector<std::pair<int, int>> pairs;  // 1-based, i < j
  std::vector<SkewOp> hx, hy, hz;          // per pair; hx/hz empty for SO

  /// All generators in one list (hy, hx[, hz] per pair) for closure input.
  std::vector<SkewOp> all() const;
};

SkewOp compound_hx(std::uint32_t n, int i, int j);
SkewOp compound_hy(std::uint32_t n, int i, int j);
SkewOp compound_hz(std::uint32_t n, int i, int j);

/// Pair list per topology: brick = alternating even/odd nearest-neighbor
/// pairs, staircase = sequential adjacent pairs, pyramid = triangle schedule
/// over adjacent pairs (same pair set, different gate ordering).
std::vector<std::pair<int, int>> compound_pairs(std::uint32_t n, CompoundTopology topology);

CompoundGenerators build_generators(std::uint32_t n, CompoundTopology topology,
                                    CompoundVariant variant);

/// Theorem-level closed forms for the SU compound ansatz with O = -i h_z^{12}.
/// Computational basis state of Hamming weight k: k(n-k) / (2 (n^2-1)^2).
double predict_basis_state(std::uint32_t n, std::uint32_t k);
/// Uniform superposition: n(n-1) / (16 (n^2-1)^2).
double predict_uniform(std::uint32_t n);
/// Reference curve for the single-qubit sigma_z/4 observable: half the
/// LASA value, exact in the vanishing-covariance limit.
double predict_single_z(std::uint32_t n, std::uint32_t k);

/// dim V_{lambda_0} = C(n, n/2)^2 (n+1) / (n/2+1)^2, exact integers; n even.
std::uint64_t dim_v_lambda0(std::uint32_t n);

/// Variance bound for rank-one basis-state projector observables on the
/// Hamming-n/2 subspace: 2 ||H|_sector||_op^2 / dim V_{lambda_0}.
double projector_bound(std::uint32_t n, const SkewOp& h);

/// Basis states of Hamming weight k in increasing numeric order.
std::vector<std::uint64_t> hamming_sector(std::uint32_t n, std::uint32_t k);

/// Canonical Hamming-weight-k bitstring: ones on qubits 2, 4, ..., 2k when
/// 2k <= n (the |0101...> pattern), otherwise the lowest k qubits.
std::uint64_t canonical_hamming_bits(std::uint32_t n, std::uint32_t k);

}  // namespace lieplateau
