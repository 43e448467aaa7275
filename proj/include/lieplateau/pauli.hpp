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
#include <map>
#include <string>
#include <vector>

namespace lieplateau {

/// Default pruning threshold for operator coefficients.
inline constexpr double kCoeffPruneTol = 1e-12;

/// An n-qubit Pauli string in symplectic (x_mask, z_mask) form.
///
/// The represented matrix is P = i^{|x&z|} X^x Z^z, which is Hermitian and
/// unitary. Qubit q corresponds to bit q of the masks, so "XYZ" has X on
/// qubit 0. Masks support up to 64 qubits.
struct PauliTerm {
  std::uint32_t n_qubits = 0;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;

  PauliTerm() = default;
  PauliTerm(std::uint32_t n, std::uint64_t x, std::uint64_t z);

  /// Parses a string over {I,X,Y,Z}; character 0 acts on qubit 0.
  static PauliTerm from_string(const std::string& s);
  std::string to_string() const;

  bool is_identity() const { return x_mask == 0 && z_mask == 0; }
  std::uint32_t weight() const;

  bool operator==(const PauliTerm& o) const {
    return n_qubits == o.n_qubits && x_mask == o.x_mask && z_mask == o.z_mask;
  }
};

/// Strict ordering so operator maps iterate deterministically.
struct PauliLess {
  bool operator()(const PauliTerm& a, const PauliTerm& b) const {
    if (a.x_mask != b.x_mask) return a.x_mask < b.x_mask;
    return a.z_mask < b.z_mask;
  }
};

struct PauliProduct {
  int phase_exponent;  // P*Q = i^phase_exponent * term, exponent mod 4
  PauliTerm term;
};

/// Exact product of two Pauli strings. Throws on mismatched qubit counts.
PauliProduct pauli_product(const PauliTerm& p, const PauliTerm& q);

/// True iff the strings commute (symplectic form is even).
bool pauli_commute(const PauliTerm& p, const PauliTerm& q);

using PauliCoeffs = std::map<PauliTerm, double, PauliLess>;

/// A skew-Hermitian operator A = sum_P c_P * (iP), c_P real.
///
/// Closed under commutators and real linear combinations. Coefficients with
/// magnitude below kCoeffPruneTol are dropped after every arithmetic op.
class SkewOp {
 public:
  SkewOp() = default;
  explicit SkewOp(std::uint32_t n_qubits) : n_qubits_(n_qubits) {}

  std::uint32_t n_qubits() const { return n_qubits_; }
  const PauliCoeffs& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * (iP) to the operator.
  void add_term(const PauliTerm& p, double c);
  double coeff(const PauliTerm& p) const;

  SkewOp& operator*=(double s);
  /// this += c * other.
  void axpy(double c, const SkewOp& other);
  void prune(double tol = kCoeffPruneTol);

  friend SkewOp operator*(double s, SkewOp a) {
    a *= s;
    return a;
  }

 private:
  std::uint32_t n_qubits_ = 0;
  PauliCoeffs terms_;
};

/// A Hermitian operator O = sum_P c_P * P, c_P real.
class HermitianOp {
 public:
  HermitianOp() = default;
  explicit HermitianOp(std::uint32_t n_qubits) : n_qubits_(n_qubits) {}

  std::uint32_t n_qubits() const { return n_qubits_; }
  const PauliCoeffs& terms() const { return terms_; }

  void add_term(const PauliTerm& p, double c);
  void prune(double tol = kCoeffPruneTol);

  /// Multiplication by i: coefficient-preserving relabeling into a SkewOp.
  SkewOp times_i() const;

 private:
  std::uint32_t n_qubits_ = 0;
  PauliCoeffs terms_;
};

/// [a, b] = ab - ba, exact in the real span of {iP}.
SkewOp commutator(const SkewOp& a, const SkewOp& b);

/// Trace inner product <a,b> = -Tr(AB) = 2^n * sum_P c_P(a) c_P(b).
/// Carries the full 2^n factor so norms match representation-level
/// Frobenius norms.
double inner(const SkewOp& a, const SkewOp& b);
double frob_norm(const SkewOp& a);

/// True iff all pairs of terms commute (product-form rotations are exact).
bool terms_mutually_commute(const SkewOp& a);

}  // namespace lieplateau
