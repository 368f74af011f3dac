// Copyright 2026 The etcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "etcs/lattice.h"

#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "etcs/error.h"

namespace etcs {
namespace {

// Floating-point inertia via a symmetric eigensolver; independent of the
// exact congruence elimination under test.
LatticeSignature EigenSignature(const GramMatrix& g) {
  const int n = static_cast<int>(g.rank());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = ToDouble(g(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  LatticeSignature s;
  for (int i = 0; i < n; ++i) {
    double e = solver.eigenvalues()(i);
    if (e > 1e-8) ++s.n_pos;
    else if (e < -1e-8) ++s.n_neg;
    else ++s.n_zero;
  }
  return s;
}

// Random unimodular integer matrix built from elementary row operations.
std::vector<std::vector<Integer>> RandomUnimodular(std::mt19937& rng, std::size_t n) {
  std::vector<std::vector<Integer>> s(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) s[i][i] = 1;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    int c = coef(rng);
    for (std::size_t j = 0; j < n; ++j) s[a][j] += c * s[b][j];
  }
  return s;
}

TEST(GramMatrixTest, RejectsAsymmetricInput) {
  EXPECT_THROW(GramMatrix({{1, 2}, {3, 1}}), ValidationError);
}

TEST(LatticeTest, HyperbolicPlane) {
  GramMatrix u = StandardLattice(StandardLatticeName::kU);
  EXPECT_EQ(Signature(u), (LatticeSignature{1, 1, 0}));
  EXPECT_EQ(Determinant(u), -1);
  EXPECT_TRUE(IsEven(u));
  EXPECT_TRUE(IsUnimodular(u));
}

TEST(LatticeTest, E8IsEvenUnimodularPositiveDefinite) {
  GramMatrix e8 = StandardLattice("E8");
  EXPECT_EQ(e8.rank(), 8u);
  EXPECT_EQ(Signature(e8), (LatticeSignature{8, 0, 0}));
  EXPECT_EQ(Determinant(e8), 1);
  EXPECT_TRUE(IsEven(e8));
  EXPECT_EQ(Signature(StandardLattice("E8_neg")), (LatticeSignature{0, 8, 0}));
}

TEST(LatticeTest, K3LatticeHasSignatureThreeNineteen) {
  GramMatrix k3 = StandardLattice("K3");
  EXPECT_EQ(k3.rank(), 22u);
  EXPECT_EQ(Signature(k3), (LatticeSignature{3, 19, 0}));
  EXPECT_EQ(Signature(k3), EigenSignature(k3));
  EXPECT_TRUE(IsUnimodular(k3));
  EXPECT_TRUE(IsEven(k3));
}

TEST(LatticeTest, UnknownNameThrows) {
  EXPECT_THROW(StandardLattice("D4"), ValidationError);
}

TEST(LatticeTest, ZeroDiagonalFormStillDiagonalizes) {
  GramMatrix g{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
  EXPECT_EQ(Signature(g), (LatticeSignature{1, 1, 1}));
  EXPECT_EQ(Determinant(g), 0);
}

TEST(LatticePropertyTest, SignatureMatchesEigenOracle) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 7;
    std::vector<std::vector<Integer>> e(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) e[i][j] = e[j][i] = (trial % 3 == 0 ? 0 : d(rng)) * (i == j) + (i != j) * d(rng);
    GramMatrix g(e);
    EXPECT_EQ(Signature(g), EigenSignature(g)) << "trial " << trial;
  }
}

TEST(LatticePropertyTest, UnimodularBasisChangePreservesInvariants) {
  std::mt19937 rng(4242);
  GramMatrix k3 = StandardLattice(StandardLatticeName::kK3);
  for (int trial = 0; trial < 20; ++trial) {
    GramMatrix h = ChangeBasis(k3, RandomUnimodular(rng, k3.rank()));
    EXPECT_EQ(Signature(h), (LatticeSignature{3, 19, 0}));
    EXPECT_EQ(Determinant(h), Determinant(k3));
    EXPECT_TRUE(IsEven(h));
  }
}

TEST(LatticeTest, DirectSumAndNegate) {
  GramMatrix a{{2}};
  GramMatrix b{{0, 1}, {1, 0}};
  GramMatrix s = DirectSum(a, Negate(b));
  EXPECT_EQ(s, (GramMatrix{{2, 0, 0}, {0, 0, -1}, {0, -1, 0}}));
  EXPECT_EQ(s.Principal(1, 2), Negate(b));
  EXPECT_EQ(Determinant(s), -2);
}

}  // namespace
}  // namespace etcs
