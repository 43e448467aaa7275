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

#include "lieplateau/dense.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace lieplateau {

namespace {
const std::complex<double> kI{0.0, 1.0};
}

DenseOp::DenseOp(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("DenseOp must be square");
  if (m_.rows() > kDenseDimCap) throw std::invalid_argument("DenseOp over dense cap");
}

bool DenseOp::is_hermitian(double tol) const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, m_.cwiseAbs().maxCoeff());
}

bool DenseOp::is_skew_hermitian(double tol) const {
  return (m_ + m_.adjoint()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, m_.cwiseAbs().maxCoeff());
}

void DenseOp::axpy(double c, const DenseOp& other) {
  if (other.m_.size() == 0 || c == 0.0) return;
  if (m_.size() == 0)
    m_ = c * other.m_;
  else
    m_ += c * other.m_;
}

DenseOp commutator(const DenseOp& a, const DenseOp& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("commutator: mismatched dimensions");
  return DenseOp(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

double inner(const DenseOp& a, const DenseOp& b) {
  if (a.is_zero() || b.is_zero()) return 0.0;
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: mismatched dimensions");
  return (a.matrix().adjoint() * b.matrix()).trace().real();
}

double frob_norm(const DenseOp& a) { return std::sqrt(std::max(0.0, inner(a, a))); }

Eigen::MatrixXcd pauli_matrix(const PauliTerm& p) {
  if (p.n_qubits > 9) throw std::invalid_argument("pauli_matrix: dimension over dense cap");
  const std::int64_t dim = std::int64_t{1} << p.n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  // P|s> = i^{|x&z|} (-1)^{|s&z|} |s^x>.
  const int y_count = std::popcount(p.x_mask & p.z_mask);
  std::complex<double> base = 1.0;
  for (int k = 0; k < (y_count & 3); ++k) base *= kI;
  for (std::int64_t s = 0; s < dim; ++s) {
    double sign = (std::popcount(static_cast<std::uint64_t>(s) & p.z_mask) & 1) ? -1.0 : 1.0;
    m(static_cast<std::int64_t>(s ^ static_cast<std::int64_t>(p.x_mask)), s) = base * sign;
  }
  return m;
}

Eigen::MatrixXcd to_dense(const SkewOp& a) {
  if (a.is_zero()) throw std::invalid_argument("to_dense: zero operator has no size");
  const std::int64_t dim = std::int64_t{1} << a.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : a.terms()) m += (kI * c) * pauli_matrix(p);
  return m;
}

Eigen::MatrixXcd to_dense(const HermitianOp& o) {
  if (o.terms().empty()) throw std::invalid_argument("to_dense: zero operator has no size");
  const std::int64_t dim = std::int64_t{1} << o.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : o.terms()) m += c * pauli_matrix(p);
  return m;
}

SpinOps spin_operators(int two_j) {
  if (two_j < 0) throw std::invalid_argument("spin_operators: negative spin");
  const int dim = two_j + 1;
  if (dim > kDenseDimCap) throw std::invalid_argument("spin_operators: dimension over dense cap");
  const double j = two_j / 2.0;
  Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(dim, dim);
  // Basis index a corresponds to m = j - a, so index 0 is the highest weight.
  for (int a = 0; a < dim; ++a) {
    double m = j - a;
    sz(a, a) = m;
    if (a > 0) {
      double mlow = j - a;  // S+|j,m> = sqrt(j(j+1)-m(m+1)) |j,m+1>
      sp(a - 1, a) = std::sqrt(j * (j + 1) - mlow * (mlow + 1));
    }
  }
  Eigen::MatrixXcd sm = sp.adjoint();
  SpinOps out;
  out.sx = 0.5 * (sp + sm);
  out.sy = -0.5 * kI * (sp - sm);
  out.sz = sz;
  return out;
}

Eigen::MatrixXcd expm_skew(const Eigen::MatrixXcd& a) {
  // a = -i h with h Hermitian; exp(a) = V exp(-i diag) V^dag.
  Eigen::MatrixXcd h = kI * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("expm_skew: eigensolve failed");
  Eigen::VectorXcd phases = (-kI * es.eigenvalues().array()).exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace lieplateau
