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
#include <optional>
#include <stdexcept>
#include <vector>

#include "lieplateau/dense.hpp"
#include "lieplateau/pauli.hpp"

namespace lieplateau {

/// Structure constants and derived data of a Frobenius-orthonormal DLA basis.
///
/// f(q,k,j) = <[F_q, F_k], F_j>. The adjoint matrix of F_k has entries
/// ad_k(j,q) = f(k,q,j), so [H, X] in coordinates is (sum_k h_k ad_k) x.
/// The Killing Gram matrix is G(q,r) = sum_{jk} f(q,k,j) f(r,k,j)
/// = Tr(ad_q^T ad_r); the Killing norm of H = sum h_q F_q is h^T G h.
struct StructureData {
  int dim = 0;
  std::vector<Eigen::MatrixXd> ad;  // one antisymmetric dim x dim matrix per basis element
  Eigen::MatrixXd gram;             // Killing Gram, PSD

  Eigen::MatrixXd ad_of(const Eigen::VectorXd& h) const;
};

struct ClosureOptions {
  int max_dim = 4096;
  double tol = 1e-10;  // residual admitting a new direction (unit-norm candidates)
};

/// Orthonormal basis of the dynamical Lie algebra, with provenance.
template <class Elem>
struct DlaBasis {
  std::vector<Elem> elements;  // Frobenius-orthonormal
  std::vector<int> depth;      // closure round that produced each element (generators: 0)
  bool truncated = false;
  double tol = 0.0;

  int dim() const { return static_cast<int>(elements.size()); }
};

using PauliDlaBasis = DlaBasis<SkewOp>;
using DenseDlaBasis = DlaBasis<DenseOp>;

namespace detail {

/// Subtracts the projection of x onto basis (twice, for stability) and
/// returns the residual norm. Coordinates, when requested, are the
/// pre-subtraction projections.
template <class Elem>
double orthogonal_residual(const std::vector<Elem>& basis, Elem& x,
                           Eigen::VectorXd* coords = nullptr) {
  if (coords) coords->setZero(static_cast<Eigen::Index>(basis.size()));
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      double c = inner(basis[i], x);
      if (coords && pass == 0) (*coords)(static_cast<Eigen::Index>(i)) = c;
      else if (coords) (*coords)(static_cast<Eigen::Index>(i)) += c;
      x.axpy(-c, basis[i]);
    }
  }
  return frob_norm(x);
}

}  // namespace detail

/// Modified Gram-Schmidt under the trace inner product. Dependent vectors
/// (residual below tol relative to their own norm) are dropped.
template <class Elem>
std::vector<Elem> orthonormalize(const std::vector<Elem>& vectors, double tol = 1e-10) {
  std::vector<Elem> basis;
  for (const Elem& v : vectors) {
    double n0 = frob_norm(v);
    if (n0 <= 0.0) continue;
    Elem x = v;
    x *= 1.0 / n0;
    double res = detail::orthogonal_residual(basis, x);
    if (res > tol) {
      x *= 1.0 / res;
      basis.push_back(std::move(x));
    }
  }
  return basis;
}

/// Breadth-first Lie closure: each round commutes the newest elements with
/// the whole current basis and admits directions whose orthogonal residual
/// exceeds tol (candidates are normalized first). Stops when a round adds
/// nothing, or flags truncated when max_dim would be exceeded.
template <class Elem>
DlaBasis<Elem> lie_closure(const std::vector<Elem>& generators,
                           const ClosureOptions& opts = {}) {
  if (generators.empty()) throw std::invalid_argument("lie_closure: no generators");
  if (opts.max_dim < 1) throw std::invalid_argument("lie_closure: max_dim must be >= 1");

  DlaBasis<Elem> out;
  out.tol = opts.tol;
  for (const Elem& g : generators) {
    double n0 = frob_norm(g);
    if (n0 <= 0.0) continue;
    Elem x = g;
    x *= 1.0 / n0;
    double res = detail::orthogonal_residual(out.elements, x);
    if (res > opts.tol) {
      if (out.dim() >= opts.max_dim) {
        out.truncated = true;
        return out;
      }
      x *= 1.0 / res;
      out.elements.push_back(std::move(x));
      out.depth.push_back(0);
    }
  }
  if (out.elements.empty()) throw std::invalid_argument("lie_closure: all generators are zero");

  std::size_t frontier_begin = 0;
  for (int round = 1;; ++round) {
    std::size_t frontier_end = out.elements.size();
    if (frontier_begin == frontier_end) break;
    for (std::size_t a = frontier_begin; a < frontier_end; ++a) {
      // Pairing the frontier against everything admitted so far (including
      // this round's additions) keeps the BFS exhaustive.
      for (std::size_t b = 0; b < out.elements.size(); ++b) {
        if (b == a) continue;
        Elem c = commutator(out.elements[a], out.elements[b]);
        double n0 = frob_norm(c);
        if (n0 < 100 * kCoeffPruneTol) continue;
        c *= 1.0 / n0;
        double res = detail::orthogonal_residual(out.elements, c);
        if (res > opts.tol) {
          if (out.dim() >= opts.max_dim) {
            out.truncated = true;
            return out;
          }
          c *= 1.0 / res;
          out.elements.push_back(std::move(c));
          out.depth.push_back(round);
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

/// Structure constants, adjoint matrices and Killing Gram of a basis.
template <class Elem>
StructureData compute_structure(const DlaBasis<Elem>& basis) {
  const int d = basis.dim();
  StructureData s;
  s.dim = d;
  s.ad.assign(d, Eigen::MatrixXd::Zero(d, d));
  for (int q = 0; q < d; ++q) {
    for (int k = q + 1; k < d; ++k) {
      Elem c = commutator(basis.elements[q], basis.elements[k]);
      if (c.is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        double f = inner(c, basis.elements[j]);
        if (f == 0.0) continue;
        s.ad[q](j, k) = f;   // f(q,k,j)
        s.ad[k](j, q) = -f;  // antisymmetry of the bracket
      }
    }
  }
  s.gram.setZero(d, d);
  for (int q = 0; q < d; ++q)
    for (int r = q; r < d; ++r) {
      double g = (s.ad[q].transpose() * s.ad[r]).trace();
      s.gram(q, r) = g;
      s.gram(r, q) = g;
    }
  return s;
}

/// Coordinates of x in the basis: c_k = <x, F_k>.
template <class Elem>
Eigen::VectorXd coordinates(const DlaBasis<Elem>& basis, const Elem& x) {
  Eigen::VectorXd c(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) c(k) = inner(x, basis.elements[k]);
  return c;
}

/// Squared norm of the component of x orthogonal to the basis span.
template <class Elem>
double residual_norm2(const DlaBasis<Elem>& basis, const Elem& x,
                      const Eigen::VectorXd& coords) {
  double total = inner(x, x);
  return std::max(0.0, total - coords.squaredNorm());
}

}  // namespace lieplateau
