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

#include "lieplateau/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace lieplateau {

Eigen::MatrixXd find_center(const StructureData& s, double tol) {
  if (s.dim == 0) return Eigen::MatrixXd(0, 0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.gram);
  double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  int c = 0;
  while (c < s.dim && es.eigenvalues()(c) < tol * scale) ++c;
  return es.eigenvectors().leftCols(c);
}

namespace {

// Index map for the orthonormal symmetric basis {U_pp = e_p e_p^T,
// U_pq = (e_p e_q^T + e_q e_p^T)/sqrt(2), p < q}.
struct SymIndex {
  int d;
  std::vector<std::pair<int, int>> pairs;
  explicit SymIndex(int dim) : d(dim) {
    pairs.reserve(dim * (dim + 1) / 2);
    for (int p = 0; p < dim; ++p)
      for (int q = p; q < dim; ++q) pairs.emplace_back(p, q);
  }
  int size() const { return static_cast<int>(pairs.size()); }

  Eigen::VectorXd to_coords(const Eigen::MatrixXd& m) const {
    Eigen::VectorXd v(size());
    const double rt2 = std::sqrt(2.0);
    for (int a = 0; a < size(); ++a) {
      auto [p, q] = pairs[a];
      v(a) = (p == q) ? m(p, p) : (m(p, q) + m(q, p)) / rt2;
    }
    return v;
  }

  Eigen::MatrixXd to_matrix(const Eigen::VectorXd& v) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    const double inv_rt2 = 1.0 / std::sqrt(2.0);
    for (int a = 0; a < size(); ++a) {
      auto [p, q] = pairs[a];
      if (p == q)
        m(p, p) = v(a);
      else {
        m(p, q) = v(a) * inv_rt2;
        m(q, p) = v(a) * inv_rt2;
      }
    }
    return m;
  }
};

}  // namespace

std::vector<Eigen::MatrixXd> sym_commutant_basis(const std::vector<Eigen::MatrixXd>& ads,
                                                 double tol) {
  const int d = ads.empty() ? 0 : static_cast<int>(ads[0].rows());
  SymIndex sym(d);
  const int D = sym.size();
  if (D == 0) return {};

  std::vector<Eigen::MatrixXd> b2(ads.size());
  for (std::size_t k = 0; k < ads.size(); ++k) b2[k] = ads[k] * ads[k];

  // E(U) = sum_k L_k^T L_k (U) = -sum_k [ad_k, [ad_k, U]]. For a sparse
  // U = e_p e_q^T + e_q e_p^T the double commutator expands into outer
  // products of ad columns, so each E column costs O(d_g * d^2).
  Eigen::MatrixXd E(D, D);
  Eigen::MatrixXd v(d, d);
  for (int a = 0; a < D; ++a) {
    auto [p, q] = sym.pairs[a];
    const double w = (p == q) ? 1.0 : 1.0 / std::sqrt(2.0);
    v.setZero();
    for (std::size_t k = 0; k < ads.size(); ++k) {
      const auto& A = ads[k];
      const auto& B = b2[k];
      // [A,[A, e_p e_q^T]] = B e_p e_q^T + e_p (B e_q)^T + 2 (A e_p)(A e_q)^T
      v.col(q) -= w * B.col(p);
      v.row(p) -= w * B.col(q).transpose();
      v.noalias() -= (2.0 * w) * (A.col(p) * A.col(q).transpose());
      if (p != q) {
        v.col(p) -= w * B.col(q);
        v.row(q) -= w * B.col(p).transpose();
        v.noalias() -= (2.0 * w) * (A.col(q) * A.col(p).transpose());
      }
    }
    E.col(a) = sym.to_coords(v);  // v accumulated -sum_k [A,[A,U]] = E(U_a)
  }
  E = 0.5 * (E + E.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(E);
  double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<Eigen::MatrixXd> kernel;
  for (int i = 0; i < D; ++i)
    if (es.eigenvalues()(i) < tol * scale) kernel.push_back(sym.to_matrix(es.eigenvectors().col(i)));
  return kernel;
}

namespace {

std::vector<Eigen::MatrixXd> restricted_ads(const StructureData& s,
                                            const Eigen::MatrixXd& complement) {
  std::vector<Eigen::MatrixXd> out;
  out.reserve(s.dim);
  for (int k = 0; k < s.dim; ++k)
    out.push_back(complement.transpose() * s.ad[k] * complement);
  return out;
}

// Groups sorted eigenvalues whose consecutive gaps are below tol.
std::vector<std::pair<int, int>> cluster_ranges(const Eigen::VectorXd& evals, double tol) {
  std::vector<std::pair<int, int>> ranges;
  int start = 0;
  for (int i = 1; i <= evals.size(); ++i) {
    if (i == evals.size() || std::abs(evals(i) - evals(i - 1)) > tol) {
      ranges.emplace_back(start, i);
      start = i;
    }
  }
  return ranges;
}

}  // namespace

IdealDecomposition simple_ideals(const StructureData& s, std::uint64_t seed,
                                 const IdealOptions& opts) {
  IdealDecomposition dec;
  dec.center = find_center(s);
  const int d = s.dim;
  const int c = static_cast<int>(dec.center.cols());

  // Orthonormal complement of the center (spans the semisimple part).
  Eigen::MatrixXd complement(d, d - c);
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.gram);
    complement = es.eigenvectors().rightCols(d - c);
  }
  if (d == c) return dec;  // abelian DLA

  std::vector<Eigen::MatrixXd> ads = restricted_ads(s, complement);
  std::vector<Eigen::MatrixXd> commutant = sym_commutant_basis(ads);
  if (commutant.empty()) throw DecompositionError("empty adjoint commutant");

  std::string last_failure = "degenerate random spectrum";
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d - c, d - c);
    for (const auto& basis_elem : commutant) m += gauss(rng) * basis_elem;
    m = 0.5 * (m + m.transpose());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    auto ranges = cluster_ranges(es.eigenvalues(), opts.cluster_tol * scale);

    IdealDecomposition trial;
    trial.center = dec.center;
    for (auto [lo, hi] : ranges)
      trial.ideals.push_back(complement * es.eigenvectors().middleCols(lo, hi - lo));

    // Validation: dimensions, cross-ideal commutators, ad-invariance via
    // kappa constancy, center adjoint norms.
    int total = c;
    for (const auto& block : trial.ideals) total += static_cast<int>(block.cols());
    if (total != d) {
      last_failure = "dimension sum";
      continue;
    }

    bool ok = true;
    for (std::size_t a = 0; a + 1 < trial.ideals.size() && ok; ++a)
      for (std::size_t b = a + 1; b < trial.ideals.size() && ok; ++b)
        for (int i = 0; i < trial.ideals[a].cols() && ok; ++i) {
          Eigen::MatrixXd ad_u = s.ad_of(trial.ideals[a].col(i));
          if ((ad_u * trial.ideals[b]).norm() > opts.cross_comm_tol) {
            ok = false;
            last_failure = "cross-ideal commutators";
          }
        }
    if (!ok) continue;

    for (int i = 0; i < c && ok; ++i) {
      if (s.ad_of(dec.center.col(i)).norm() > opts.center_ad_tol) {
        ok = false;
        last_failure = "center adjoint norm";
      }
    }
    if (!ok) break;  // center failure will not improve with a new seed

    trial.kappa.resize(trial.ideals.size());
    for (std::size_t a = 0; a < trial.ideals.size() && ok; ++a) {
      const Eigen::MatrixXd& block = trial.ideals[a];
      Eigen::VectorXd ks(block.cols());
      for (int i = 0; i < block.cols(); ++i)
        ks(i) = block.col(i).dot(s.gram * block.col(i));
      double mean = ks.mean();
      double var = (ks.array() - mean).square().sum() / ks.size();
      if (mean <= 0.0 || std::sqrt(var) > opts.kappa_rel_std_tol * mean) {
        ok = false;
        last_failure = "kappa constancy";
      }
      trial.kappa[a] = mean;
    }
    if (!ok) continue;

    return trial;
  }
  throw DecompositionError(last_failure);
}

ComponentSplit split_components(const IdealDecomposition& dec, const Eigen::VectorXd& coords,
                                double residual_norm2) {
  ComponentSplit out;
  out.residual_norm2 = residual_norm2;
  out.center_coords = dec.center.transpose() * coords;
  out.ideal_coords.reserve(dec.ideals.size());
  for (const auto& block : dec.ideals) out.ideal_coords.push_back(block.transpose() * coords);
  return out;
}

}  // namespace lieplateau
