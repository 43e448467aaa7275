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
#include <complex>

#include "lieplateau/pauli.hpp"

namespace lieplateau {

/// Largest dimension the dense backend will materialize.
inline constexpr int kDenseDimCap = 512;

/// A dense operator on a kDenseDimCap-bounded space. Used for non-qubit
/// representations (spin matrices) and as the oracle backend for the Pauli
/// algebra.
class DenseOp {
 public:
  DenseOp() = default;
  explicit DenseOp(Eigen::MatrixXcd m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Eigen::MatrixXcd& matrix() { return m_; }

  bool is_hermitian(double tol = 1e-10) const;
  bool is_skew_hermitian(double tol = 1e-10) const;

  static DenseOp zero(int dim) { return DenseOp(Eigen::MatrixXcd::Zero(dim, dim)); }

  // Element-trait surface shared with SkewOp so the closure templates apply.
  bool is_zero() const { return m_.size() == 0 || m_.isZero(1e-300); }
  DenseOp& operator*=(double s) {
    m_ *= s;
    return *this;
  }
  void axpy(double c, const DenseOp& other);

 private:
  Eigen::MatrixXcd m_;
};

DenseOp commutator(const DenseOp& a, const DenseOp& b);
/// <a,b> = Re Tr(a^dag b); equals -Tr(ab) for skew-Hermitian arguments.
double inner(const DenseOp& a, const DenseOp& b);
double frob_norm(const DenseOp& a);

/// Dense matrix of a Pauli string (dim 2^n, n within the dense cap).
Eigen::MatrixXcd pauli_matrix(const PauliTerm& p);
/// Dense matrix of A = sum c_P (iP).
Eigen::MatrixXcd to_dense(const SkewOp& a);
/// Dense matrix of O = sum c_P P.
Eigen::MatrixXcd to_dense(const HermitianOp& o);

/// Spin operators S_x, S_y, S_z for total spin j (dim = 2j+1), standard
/// ladder-operator construction. two_j = 2j must be a nonnegative integer.
struct SpinOps {
  Eigen::MatrixXcd sx, sy, sz;
};
SpinOps spin_operators(int two_j);

/// exp(A) for skew-Hermitian A via eigendecomposition of iA.
Eigen::MatrixXcd expm_skew(const Eigen::MatrixXcd& a);

}  // namespace lieplateau
