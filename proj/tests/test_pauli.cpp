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

#include <random>

#include "doctest.h"
#include "lieplateau/dense.hpp"

using namespace lieplateau;

namespace {

std::complex<double> ipow(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

PauliTerm random_term(std::mt19937_64& rng, std::uint32_t n) {
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
  return PauliTerm(n, bits(rng), bits(rng));
}

SkewOp random_skew(std::mt19937_64& rng, std::uint32_t n, int max_terms) {
  std::uniform_int_distribution<int> cnt(1, max_terms);
  std::normal_distribution<double> coeff(0.0, 1.0);
  SkewOp a(n);
  int m = cnt(rng);
  for (int t = 0; t < m; ++t) a.add_term(random_term(rng, n), coeff(rng));
  return a;
}

}  // namespace

TEST_CASE("pauli string round trip") {
  PauliTerm p = PauliTerm::from_string("XIZY");
  CHECK(p.n_qubits == 4);
  CHECK(p.to_string() == "XIZY");
  CHECK(p.weight() == 3);
  CHECK_THROWS_AS(PauliTerm::from_string("XQ"), std::invalid_argument);
}

TEST_CASE("single qubit product table") {
  auto x = PauliTerm::from_string("X");
  auto y = PauliTerm::from_string("Y");
  auto z = PauliTerm::from_string("Z");

  auto xx = pauli_product(x, x);
  CHECK(xx.phase_exponent == 0);
  CHECK(xx.term.is_identity());

  auto xy = pauli_product(x, y);
  CHECK(xy.phase_exponent == 1);  // XY = iZ
  CHECK(xy.term == z);
}

TEST_CASE("product phases match dense multiplication") {
  // All 16 single-qubit pairs, then random multi-qubit pairs.
  std::vector<PauliTerm> singles;
  for (const char* s : {"I", "X", "Y", "Z"}) singles.push_back(PauliTerm::from_string(s));
  auto check_pair = [](const PauliTerm& p, const PauliTerm& q) {
    auto prod = pauli_product(p, q);
    Eigen::MatrixXcd lhs = pauli_matrix(p) * pauli_matrix(q);
    Eigen::MatrixXcd rhs = ipow(prod.phase_exponent) * pauli_matrix(prod.term);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
  };
  for (const auto& p : singles)
    for (const auto& q : singles) check_pair(p, q);

  std::mt19937_64 rng(7);
  for (int it = 0; it < 100; ++it) {
    std::uint32_t n = 1 + (rng() % 4);
    check_pair(random_term(rng, n), random_term(rng, n));
  }
  check_pair(PauliTerm::from_string("XZ"), PauliTerm::from_string("ZX"));
}

TEST_CASE("commutator basics") {
  SkewOp izz(2);
  izz.add_term(PauliTerm::from_string("ZZ"), 1.0);
  CHECK(commutator(izz, izz).is_zero());

  SkewOp ix(2), iz(2);
  ix.add_term(PauliTerm::from_string("XI"), 1.0);
  iz.add_term(PauliTerm::from_string("ZI"), 1.0);
  SkewOp c = commutator(ix, iz);
  CHECK(c.term_count() == 1);
  CHECK(c.coeff(PauliTerm::from_string("YI")) == doctest::Approx(2.0).epsilon(1e-14));

  CHECK_THROWS_AS(commutator(ix, SkewOp(3)), std::invalid_argument);
}

TEST_CASE("commutator matches dense oracle") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 30; ++it) {
    std::uint32_t n = 2 + (rng() % 2);
    SkewOp a = random_skew(rng, n, 4);
    SkewOp b = random_skew(rng, n, 4);
    SkewOp c = commutator(a, b);
    Eigen::MatrixXcd ad = to_dense(a), bd = to_dense(b);
    Eigen::MatrixXcd want = ad * bd - bd * ad;
    Eigen::MatrixXcd got = c.is_zero() ? Eigen::MatrixXcd::Zero(ad.rows(), ad.cols()).eval()
                                       : to_dense(c);
    CHECK((want - got).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("commutator is bilinear and antisymmetric") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 20; ++it) {
    std::uint32_t n = 2 + (rng() % 3);
    SkewOp a = random_skew(rng, n, 4), b = random_skew(rng, n, 4), c = random_skew(rng, n, 4);
    double alpha = 1.5, beta = -0.75;

    SkewOp lhs(n);  // [alpha a + beta b, c]
    {
      SkewOp combo(n);
      combo.axpy(alpha, a);
      combo.axpy(beta, b);
      lhs = commutator(combo, c);
    }
    SkewOp rhs(n);
    rhs.axpy(alpha, commutator(a, c));
    rhs.axpy(beta, commutator(b, c));
    rhs.axpy(-1.0, lhs);
    CHECK(frob_norm(rhs) < 1e-10);

    SkewOp anti = commutator(a, b);
    anti.axpy(1.0, commutator(b, a));
    CHECK(frob_norm(anti) < 1e-12);
  }
}

TEST_CASE("jacobi identity on random triples") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 20; ++it) {
    std::uint32_t n = 2 + (rng() % 3);  // up to 4 qubits
    SkewOp a = random_skew(rng, n, 3), b = random_skew(rng, n, 3), c = random_skew(rng, n, 3);
    SkewOp sum(n);
    sum.axpy(1.0, commutator(a, commutator(b, c)));
    sum.axpy(1.0, commutator(b, commutator(c, a)));
    sum.axpy(1.0, commutator(c, commutator(a, b)));
    double scale = std::max({1.0, frob_norm(a), frob_norm(b), frob_norm(c)});
    CHECK(frob_norm(sum) / scale < 1e-12 * scale * scale);
  }
}

TEST_CASE("inner products") {
  SkewOp iz(1);
  iz.add_term(PauliTerm::from_string("Z"), 1.0);
  CHECK(inner(iz, iz) == doctest::Approx(2.0));

  SkewOp ix(1);
  ix.add_term(PauliTerm::from_string("X"), 1.0);
  CHECK(inner(ix, iz) == 0.0);
}

TEST_CASE("inner matches dense -Tr(AB)") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 20; ++it) {
    std::uint32_t n = 2 + (rng() % 5);  // up to 6 qubits
    SkewOp a = random_skew(rng, n, 5), b = random_skew(rng, n, 5);
    double got = inner(a, b);
    if (n <= 4) {
      double want = -(to_dense(a) * to_dense(b)).trace().real();
      CHECK(got == doctest::Approx(want).epsilon(1e-10));
    }
    CHECK(inner(a, a) >= 0.0);
  }
}

TEST_CASE("skew-hermiticity of dense materialization") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 10; ++it) {
    SkewOp a = random_skew(rng, 3, 6);
    DenseOp d(to_dense(a));
    CHECK(d.is_skew_hermitian());
  }
}

TEST_CASE("hermitian observable relabeling") {
  HermitianOp o(2);
  o.add_term(PauliTerm::from_string("ZI"), 0.25);
  o.add_term(PauliTerm::from_string("IZ"), -0.25);
  SkewOp io = o.times_i();
  CHECK(io.coeff(PauliTerm::from_string("ZI")) == 0.25);
  Eigen::MatrixXcd lhs = to_dense(io);
  Eigen::MatrixXcd rhs = std::complex<double>(0, 1) * to_dense(o);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("coefficient pruning") {
  SkewOp a(2);
  a.add_term(PauliTerm::from_string("XX"), 1.0);
  a.add_term(PauliTerm::from_string("YY"), 0.5e-12);  // below tolerance
  CHECK(a.term_count() == 1);
  a.add_term(PauliTerm::from_string("XX"), -1.0);  // cancels to zero
  CHECK(a.is_zero());
}
