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

#include "lieplateau/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace lieplateau {

namespace {
std::uint64_t mask_for(std::uint32_t n) {
  if (n >= 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << n) - 1;
}
}  // namespace

PauliTerm::PauliTerm(std::uint32_t n, std::uint64_t x, std::uint64_t z)
    : n_qubits(n), x_mask(x), z_mask(z) {
  if (n == 0 || n > 64) throw std::invalid_argument("qubit count must be in [1, 64]");
  if ((x & ~mask_for(n)) != 0 || (z & ~mask_for(n)) != 0)
    throw std::invalid_argument("mask bits above qubit count");
}

PauliTerm PauliTerm::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty pauli string");
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < s.size(); ++q) {
    switch (s[q]) {
      case 'I':
        break;
      case 'X':
        x |= std::uint64_t{1} << q;
        break;
      case 'Y':
        x |= std::uint64_t{1} << q;
        z |= std::uint64_t{1} << q;
        break;
      case 'Z':
        z |= std::uint64_t{1} << q;
        break;
      default:
        throw std::invalid_argument("invalid pauli character: " + std::string(1, s[q]));
    }
  }
  return PauliTerm(static_cast<std::uint32_t>(s.size()), x, z);
}

std::string PauliTerm::to_string() const {
  std::string s(n_qubits, 'I');
  for (std::uint32_t q = 0; q < n_qubits; ++q) {
    bool x = (x_mask >> q) & 1;
    bool z = (z_mask >> q) & 1;
    if (x && z)
      s[q] = 'Y';
    else if (x)
      s[q] = 'X';
    else if (z)
      s[q] = 'Z';
  }
  return s;
}

std::uint32_t PauliTerm::weight() const {
  return static_cast<std::uint32_t>(std::popcount(x_mask | z_mask));
}

PauliProduct pauli_product(const PauliTerm& p, const PauliTerm& q) {
  if (p.n_qubits != q.n_qubits)
    throw std::invalid_argument("pauli_product: mismatched qubit counts");
  // With P = i^{|x&z|} X^x Z^z:
  //   P*Q = i^{|x1&z1| + |x2&z2| + 2|z1&x2| - |x3&z3|} * R,  x3=x1^x2, z3=z1^z2.
  std::uint64_t x3 = p.x_mask ^ q.x_mask;
  std::uint64_t z3 = p.z_mask ^ q.z_mask;
  int e = std::popcount(p.x_mask & p.z_mask) + std::popcount(q.x_mask & q.z_mask) +
          2 * std::popcount(p.z_mask & q.x_mask) - std::popcount(x3 & z3);
  return {((e % 4) + 4) % 4, PauliTerm(p.n_qubits, x3, z3)};
}

bool pauli_commute(const PauliTerm& p, const PauliTerm& q) {
  int sym = std::popcount(p.x_mask & q.z_mask) + std::popcount(p.z_mask & q.x_mask);
  return (sym & 1) == 0;
}

void SkewOp::add_term(const PauliTerm& p, double c) {
  if (n_qubits_ == 0) n_qubits_ = p.n_qubits;
  if (p.n_qubits != n_qubits_) throw std::invalid_argument("add_term: mismatched qubit counts");
  double& v = terms_[p];
  v += c;
  if (std::abs(v) < kCoeffPruneTol) terms_.erase(p);
}

double SkewOp::coeff(const PauliTerm& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0.0 : it->second;
}

SkewOp& SkewOp::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  prune();
  return *this;
}

void SkewOp::axpy(double c, const SkewOp& other) {
  if (other.is_zero() || c == 0.0) return;
  if (n_qubits_ == 0) n_qubits_ = other.n_qubits_;
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("axpy: mismatched qubit counts");
  for (const auto& [p, v] : other.terms_) {
    double& dst = terms_[p];
    dst += c * v;
    if (std::abs(dst) < kCoeffPruneTol) terms_.erase(p);
  }
}

void SkewOp::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol)
      it = terms_.erase(it);
    else
      ++it;
  }
}

void HermitianOp::add_term(const PauliTerm& p, double c) {
  if (n_qubits_ == 0) n_qubits_ = p.n_qubits;
  if (p.n_qubits != n_qubits_) throw std::invalid_argument("add_term: mismatched qubit counts");
  double& v = terms_[p];
  v += c;
  if (std::abs(v) < kCoeffPruneTol) terms_.erase(p);
}

void HermitianOp::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol)
      it = terms_.erase(it);
    else
      ++it;
  }
}

SkewOp HermitianOp::times_i() const {
  SkewOp out(n_qubits_);
  for (const auto& [p, c] : terms_) out.add_term(p, c);
  return out;
}

SkewOp commutator(const SkewOp& a, const SkewOp& b) {
  if (a.n_qubits() != b.n_qubits() && !a.is_zero() && !b.is_zero())
    throw std::invalid_argument("commutator: mismatched qubit counts");
  SkewOp out(a.n_qubits() ? a.n_qubits() : b.n_qubits());
  // [iP, iQ] = -(PQ - QP). Commuting pairs cancel; anticommuting pairs give
  // -2 PQ = -2 i^e R with e odd, i.e. a real coefficient on iR.
  for (const auto& [p, ca] : a.terms()) {
    for (const auto& [q, cb] : b.terms()) {
      if (pauli_commute(p, q)) continue;
      PauliProduct pq = pauli_product(p, q);
      // i^e with e odd: contribution to the iR coefficient is -2*ca*cb*i^{e-1}.
      double sign = (pq.phase_exponent == 1) ? 1.0 : -1.0;  // i^{e-1} = +/-1
      out.add_term(pq.term, -2.0 * ca * cb * sign);
    }
  }
  out.prune();
  return out;
}

double inner(const SkewOp& a, const SkewOp& b) {
  if (a.is_zero() || b.is_zero()) return 0.0;
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("inner: mismatched qubit counts");
  const PauliCoeffs& small = a.term_count() <= b.term_count() ? a.terms() : b.terms();
  const SkewOp& big = a.term_count() <= b.term_count() ? b : a;
  double dot = 0.0;
  for (const auto& [p, c] : small) dot += c * big.coeff(p);
  return std::ldexp(dot, static_cast<int>(a.n_qubits()));  // 2^n * dot
}

double frob_norm(const SkewOp& a) { return std::sqrt(inner(a, a)); }

bool terms_mutually_commute(const SkewOp& a) {
  const auto& t = a.terms();
  for (auto it = t.begin(); it != t.end(); ++it) {
    auto jt = it;
    for (++jt; jt != t.end(); ++jt)
      if (!pauli_commute(it->first, jt->first)) return false;
  }
  return true;
}

}  // namespace lieplateau
