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

#include "lieplateau/compound.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace lieplateau {

namespace {

void check_pair(std::uint32_t n, int i, int j) {
  if (i < 1 || j < 1 || i >= j || static_cast<std::uint32_t>(j) > n)
    throw std::invalid_argument("compound generator: need 1 <= i < j <= n");
}

std::uint64_t bit(int q_1based) { return std::uint64_t{1} << (q_1based - 1); }

std::uint64_t z_string_between(int i, int j) {
  std::uint64_t z = 0;
  for (int q = i + 1; q < j; ++q) z |= bit(q);
  return z;
}

}  // namespace

SkewOp compound_hx(std::uint32_t n, int i, int j) {
  check_pair(n, i, j);
  std::uint64_t zs = z_string_between(i, j);
  SkewOp h(n);
  h.add_term(PauliTerm(n, bit(i) | bit(j), zs), -0.25);             // X_i ... X_j
  h.add_term(PauliTerm(n, bit(i) | bit(j), zs | bit(i) | bit(j)), -0.25);  // Y_i ... Y_j
  return h;
}

SkewOp compound_hy(std::uint32_t n, int i, int j) {
  check_pair(n, i, j);
  std::uint64_t zs = z_string_between(i, j);
  SkewOp h(n);
  h.add_term(PauliTerm(n, bit(i) | bit(j), zs | bit(i)), -0.25);  // Y_i ... X_j
  h.add_term(PauliTerm(n, bit(i) | bit(j), zs | bit(j)), 0.25);   // X_i ... Y_j
  return h;
}

SkewOp compound_hz(std::uint32_t n, int i, int j) {
  check_pair(n, i, j);
  SkewOp h(n);
  h.add_term(PauliTerm(n, 0, bit(i)), -0.25);
  h.add_term(PauliTerm(n, 0, bit(j)), 0.25);
  return h;
}

std::vector<std::pair<int, int>> compound_pairs(std::uint32_t n, CompoundTopology topology) {
  if (n < 2) throw std::invalid_argument("compound: need n >= 2");
  std::vector<std::pair<int, int>> pairs;
  switch (topology) {
    case CompoundTopology::kBrick:
      for (int i = 1; i + 1 <= static_cast<int>(n); i += 2) pairs.emplace_back(i, i + 1);
      for (int i = 2; i + 1 <= static_cast<int>(n); i += 2) pairs.emplace_back(i, i + 1);
      break;
    case CompoundTopology::kStaircase:
    case CompoundTopology::kPyramid:
      for (int i = 1; i + 1 <= static_cast<int>(n); ++i) pairs.emplace_back(i, i + 1);
      break;
  }
  return pairs;
}

CompoundGenerators build_generators(std::uint32_t n, CompoundTopology topology,
                                    CompoundVariant variant) {
  CompoundGenerators g;
  g.n = n;
  g.variant = variant;
  g.pairs = compound_pairs(n, topology);
  for (auto [i, j] : g.pairs) {
    g.hy.push_back(compound_hy(n, i, j));
    if (variant == CompoundVariant::kSU) {
      g.hx.push_back(compound_hx(n, i, j));
      g.hz.push_back(compound_hz(n, i, j));
    }
  }
  return g;
}

std::vector<SkewOp> CompoundGenerators::all() const {
  std::vector<SkewOp> out;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    out.push_back(hy[p]);
    if (variant == CompoundVariant::kSU) {
      out.push_back(hx[p]);
      out.push_back(hz[p]);
    }
  }
  return out;
}

double predict_basis_state(std::uint32_t n, std::uint32_t k) {
  if (n < 2 || k > n) throw std::invalid_argument("predict_basis_state: need n >= 2, 0 <= k <= n");
  double d = static_cast<double>(n) * n - 1.0;
  return static_cast<double>(k) * (n - k) / (2.0 * d * d);
}

double predict_uniform(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("predict_uniform: need n >= 2");
  double d = static_cast<double>(n) * n - 1.0;
  return static_cast<double>(n) * (n - 1) / (16.0 * d * d);
}

double predict_single_z(std::uint32_t n, std::uint32_t k) {
  return 0.5 * predict_basis_state(n, k);
}

std::uint64_t dim_v_lambda0(std::uint32_t n) {
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("dim_v_lambda0: n must be even");
  if (n > 32) throw std::invalid_argument("dim_v_lambda0: n too large for exact arithmetic");
  // C(n, n/2)^2 (n+1) / (n/2+1)^2 with exact integer arithmetic.
  unsigned __int128 binom = 1;
  for (std::uint32_t i = 1; i <= n / 2; ++i) binom = binom * (n - n / 2 + i) / i;
  unsigned __int128 num = binom * binom * (n + 1);
  unsigned __int128 den = static_cast<unsigned __int128>(n / 2 + 1) * (n / 2 + 1);
  if (num % den != 0) throw std::logic_error("dim_v_lambda0: non-integer result");
  return static_cast<std::uint64_t>(num / den);
}

std::vector<std::uint64_t> hamming_sector(std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint64_t> basis;
  const std::uint64_t lim = (n >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  for (std::uint64_t s = 0; s < lim; ++s)
    if (static_cast<std::uint32_t>(std::popcount(s)) == k) basis.push_back(s);
  return basis;
}

double projector_bound(std::uint32_t n, const SkewOp& h) {
  if (n % 2 != 0) throw std::invalid_argument("projector_bound: n must be even");
  std::vector<std::uint64_t> basis = hamming_sector(n, n / 2);
  const int dim = static_cast<int>(basis.size());
  std::vector<int> rank(std::size_t{1} << n, -1);
  for (int a = 0; a < dim; ++a) rank[basis[a]] = a;

  // Dense restriction of H to the Hamming-n/2 sector; generators preserve it.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const std::complex<double> kI{0.0, 1.0};
  for (const auto& [p, c] : h.terms()) {
    std::complex<double> phase = kI * c;  // coefficient of P inside A = sum c (iP)
    for (int k2 = 0; k2 < (std::popcount(p.x_mask & p.z_mask) & 3); ++k2) phase *= kI;
    for (int a = 0; a < dim; ++a) {
      std::uint64_t t = basis[a] ^ p.x_mask;
      if (rank[t] < 0) continue;
      double sign = (std::popcount(basis[a] & p.z_mask) & 1) ? -1.0 : 1.0;
      m(rank[t], a) += phase * sign;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(kI * m);  // iH is Hermitian
  double op_norm = es.eigenvalues().cwiseAbs().maxCoeff();
  return 2.0 * op_norm * op_norm / static_cast<double>(dim_v_lambda0(n));
}

std::uint64_t canonical_hamming_bits(std::uint32_t n, std::uint32_t k) {
  if (k > n) throw std::invalid_argument("canonical_hamming_bits: k > n");
  std::uint64_t bits = 0;
  if (2 * k <= n) {
    for (std::uint32_t i = 0; i < k; ++i) bits |= std::uint64_t{1} << (2 * i + 1);
  } else {
    for (std::uint32_t i = 0; i < k; ++i) bits |= std::uint64_t{1} << i;
  }
  return bits;
}

}  // namespace lieplateau
