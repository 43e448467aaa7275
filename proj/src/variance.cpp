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

#include "lieplateau/variance.hpp"

#include <bit>
#include <cmath>

namespace lieplateau {

InitialState InitialState::bitstring(std::uint32_t n, std::uint64_t bits) {
  if (n == 0 || n > 64) throw std::invalid_argument("bitstring: bad qubit count");
  if (n < 64 && (bits >> n) != 0) throw std::invalid_argument("bitstring: bits above qubit count");
  InitialState s;
  s.kind = Kind::kBitstring;
  s.n_qubits = n;
  s.bits = bits;
  return s;
}

InitialState InitialState::uniform(std::uint32_t n) {
  if (n == 0 || n > 64) throw std::invalid_argument("uniform: bad qubit count");
  InitialState s;
  s.kind = Kind::kUniform;
  s.n_qubits = n;
  return s;
}

InitialState InitialState::statevector(Eigen::VectorXcd psi) {
  double nrm = psi.norm();
  if (std::abs(nrm - 1.0) > 1e-8) throw std::invalid_argument("statevector: not unit norm");
  InitialState s;
  s.kind = Kind::kStatevector;
  s.psi = std::move(psi);
  // Record the qubit count when the dimension is a power of two.
  auto dim = static_cast<std::uint64_t>(s.psi.size());
  if (dim > 1 && (dim & (dim - 1)) == 0) s.n_qubits = static_cast<std::uint32_t>(std::countr_zero(dim));
  return s;
}

InitialState InitialState::density(Eigen::MatrixXcd rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("density: not square");
  if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-10)
    throw std::invalid_argument("density: trace must be 1");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("density: not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  if (es.eigenvalues().minCoeff() < -1e-8) throw std::invalid_argument("density: not PSD");
  InitialState s;
  s.kind = Kind::kDensity;
  s.rho = std::move(rho);
  auto dim = static_cast<std::uint64_t>(s.rho.rows());
  if (dim > 1 && (dim & (dim - 1)) == 0) s.n_qubits = static_cast<std::uint32_t>(std::countr_zero(dim));
  return s;
}

Eigen::VectorXcd InitialState::to_statevector() const {
  switch (kind) {
    case Kind::kBitstring: {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(std::int64_t{1} << n_qubits);
      v(static_cast<std::int64_t>(bits)) = 1.0;
      return v;
    }
    case Kind::kUniform: {
      const std::int64_t dim = std::int64_t{1} << n_qubits;
      return Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    }
    case Kind::kStatevector:
      return psi;
    case Kind::kDensity:
      throw std::invalid_argument("to_statevector: state is a density matrix");
  }
  throw std::logic_error("unreachable");
}

double pauli_expectation(const InitialState& state, const PauliTerm& p) {
  switch (state.kind) {
    case InitialState::Kind::kBitstring: {
      if (p.x_mask != 0) return 0.0;
      return (std::popcount(state.bits & p.z_mask) & 1) ? -1.0 : 1.0;
    }
    case InitialState::Kind::kUniform:
      return p.z_mask == 0 ? 1.0 : 0.0;
    case InitialState::Kind::kStatevector: {
      // <psi|P|psi> = sum_s conj(psi[s^x]) i^{|x&z|} (-1)^{|s&z|} psi[s].
      const auto& v = state.psi;
      const std::int64_t dim = v.size();
      std::complex<double> phase = 1.0;
      for (int k = 0; k < (std::popcount(p.x_mask & p.z_mask) & 3); ++k)
        phase *= std::complex<double>(0.0, 1.0);
      std::complex<double> acc = 0.0;
      for (std::int64_t s = 0; s < dim; ++s) {
        double sign = (std::popcount(static_cast<std::uint64_t>(s) & p.z_mask) & 1) ? -1.0 : 1.0;
        acc += std::conj(v(s ^ static_cast<std::int64_t>(p.x_mask))) * (sign * v(s));
      }
      return (phase * acc).real();
    }
    case InitialState::Kind::kDensity: {
      const auto& m = state.rho;
      const std::int64_t dim = m.rows();
      std::complex<double> phase = 1.0;
      for (int k = 0; k < (std::popcount(p.x_mask & p.z_mask) & 3); ++k)
        phase *= std::complex<double>(0.0, 1.0);
      std::complex<double> acc = 0.0;
      for (std::int64_t t = 0; t < dim; ++t) {
        double sign = (std::popcount(static_cast<std::uint64_t>(t) & p.z_mask) & 1) ? -1.0 : 1.0;
        acc += m(t, t ^ static_cast<std::int64_t>(p.x_mask)) * sign;
      }
      return (phase * acc).real();
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// r_k = -Tr(i rho F_k) = sum_P c_P <P>_rho for F_k = sum_P c_P (iP).
Eigen::VectorXd state_coords(const PauliDlaBasis& basis, const InitialState& rho) {
  Eigen::VectorXd r(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) {
    double acc = 0.0;
    for (const auto& [p, c] : basis.elements[k].terms()) acc += c * pauli_expectation(rho, p);
    r(k) = acc;
  }
  return r;
}

Eigen::VectorXd state_coords(const DenseDlaBasis& basis, const InitialState& rho) {
  Eigen::VectorXd r(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) {
    const Eigen::MatrixXcd& f = basis.elements[k].matrix();
    std::complex<double> t;
    if (rho.kind == InitialState::Kind::kDensity)
      t = (rho.rho * f).trace();
    else {
      Eigen::VectorXcd psi = rho.kind == InitialState::Kind::kStatevector ? rho.psi
                                                                          : rho.to_statevector();
      if (psi.size() != f.rows()) throw std::invalid_argument("state dimension mismatch");
      t = psi.adjoint() * (f * psi);
    }
    r(k) = t.imag();  // -Tr(i rho F) with Tr(rho F) purely imaginary
  }
  return r;
}

}  // namespace

LasaResult lasa_check(const HermitianOp& o, const PauliDlaBasis& basis, double tol) {
  SkewOp io = o.times_i();
  Eigen::VectorXd c = coordinates(basis, io);
  LasaResult res;
  res.residual = std::sqrt(residual_norm2(basis, io, c));
  res.conclusive = !basis.truncated;
  res.in_dla = res.residual < tol * std::max(1e-300, frob_norm(io));
  return res;
}

LasaResult lasa_check(const DenseOp& o_herm, const DenseDlaBasis& basis, double tol) {
  DenseOp io(std::complex<double>(0.0, 1.0) * o_herm.matrix());
  Eigen::VectorXd c = coordinates(basis, io);
  LasaResult res;
  res.residual = std::sqrt(residual_norm2(basis, io, c));
  res.conclusive = !basis.truncated;
  res.in_dla = res.residual < tol * std::max(1e-300, frob_norm(io));
  return res;
}

namespace {

void check_lasa_inputs(const GradVarInputs& in, double lasa_tol) {
  if (in.truncated)
    throw std::invalid_argument("gradvar: truncated DLA basis, prediction refused");
  double o_norm = std::sqrt(std::max(in.o_norm2, in.o.squaredNorm()));
  if (std::sqrt(in.o_residual2) > lasa_tol * std::max(1e-300, o_norm))
    throw std::invalid_argument("gradvar: observable is not in the DLA (non-LASA)");
  double h_norm = std::sqrt(in.h.squaredNorm() + in.h_residual2);
  if (std::sqrt(in.h_residual2) > lasa_tol * std::max(1e-300, h_norm))
    throw std::invalid_argument("gradvar: generator is not in the DLA");
}

}  // namespace

VarianceReport gradvar_predict(const StructureData& s, const IdealDecomposition& dec,
                               const GradVarInputs& in, double lasa_tol) {
  check_lasa_inputs(in, lasa_tol);
  VarianceReport rep;
  rep.lasa_residual_o = std::sqrt(in.o_residual2);
  rep.truncated = in.truncated;
  for (const auto& block : dec.ideals) {
    IdealTerm t;
    t.dim = static_cast<int>(block.cols());
    Eigen::VectorXd h_a = block * (block.transpose() * in.h);
    t.killing_h = h_a.dot(s.gram * h_a);
    t.frob_o = (block.transpose() * in.o).squaredNorm();
    t.frob_rho = (block.transpose() * in.r).squaredNorm();
    t.term = t.killing_h * t.frob_o * t.frob_rho / (static_cast<double>(t.dim) * t.dim);
    rep.total += t.term;
    rep.ideals.push_back(t);
  }
  return rep;
}

double gradvar_upper_bound(const StructureData& s, const IdealDecomposition& dec,
                           const GradVarInputs& in, double lasa_tol) {
  (void)s;
  check_lasa_inputs(in, lasa_tol);
  double total = 0.0;
  for (const auto& block : dec.ideals) {
    double frob_h = (block.transpose() * in.h).squaredNorm();
    double frob_o = (block.transpose() * in.o).squaredNorm();
    double frob_rho = (block.transpose() * in.r).squaredNorm();
    total += 2.0 * frob_h * frob_o * frob_rho / static_cast<double>(block.cols());
  }
  return total;
}

double exact_adjoint_oracle(const StructureData& s, const GradVarInputs& in, int dim_cap,
                            double lasa_tol) {
  check_lasa_inputs(in, lasa_tol);
  if (s.dim > dim_cap) throw std::invalid_argument("exact_adjoint_oracle: DLA dimension over cap");

  std::vector<Eigen::MatrixXd> invariants = sym_commutant_basis(s.ad);
  auto project = [&](const Eigen::MatrixXd& w) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(s.dim, s.dim);
    for (const auto& b : invariants) out += b.cwiseProduct(w).sum() * b;
    return out;
  };

  Eigen::MatrixXd ad_h = s.ad_of(in.h);
  Eigen::MatrixXd s1 = project(in.o * in.o.transpose());
  Eigen::MatrixXd s2 = ad_h * s1 * ad_h.transpose();
  Eigen::MatrixXd s3 = project(s2);
  return in.r.dot(s3 * in.r);
}

GradVarInputs make_gradvar_inputs(const PauliDlaBasis& basis, const SkewOp& h,
                                  const HermitianOp& o, const InitialState& rho) {
  GradVarInputs in;
  in.truncated = basis.truncated;
  in.h = coordinates(basis, h);
  in.h_residual2 = residual_norm2(basis, h, in.h);
  SkewOp io = o.times_i();
  in.o = coordinates(basis, io);
  in.o_residual2 = residual_norm2(basis, io, in.o);
  in.o_norm2 = inner(io, io);
  in.r = state_coords(basis, rho);
  return in;
}

GradVarInputs make_gradvar_inputs(const DenseDlaBasis& basis, const DenseOp& h,
                                  const DenseOp& o_herm, const InitialState& rho) {
  GradVarInputs in;
  in.truncated = basis.truncated;
  in.h = coordinates(basis, h);
  in.h_residual2 = residual_norm2(basis, h, in.h);
  DenseOp io(std::complex<double>(0.0, 1.0) * o_herm.matrix());
  in.o = coordinates(basis, io);
  in.o_residual2 = residual_norm2(basis, io, in.o);
  in.o_norm2 = inner(io, io);
  in.r = state_coords(basis, rho);
  return in;
}

}  // namespace lieplateau
