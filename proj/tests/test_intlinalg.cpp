#include "doctest.h"

#include <random>

#include "wt/intlinalg.hpp"

using namespace wt;

namespace {

IMat fromRows(std::initializer_list<std::initializer_list<long>> rows) {
  Eigen::Index m = static_cast<Eigen::Index>(rows.size());
  Eigen::Index n = static_cast<Eigen::Index>(rows.begin()->size());
  IMat A(m, n);
  Eigen::Index i = 0;
  for (auto& r : rows) {
    Eigen::Index j = 0;
    for (long x : r) A(i, j++) = Int(x);
    ++i;
  }
  return A;
}

}  // namespace

TEST_CASE("hermite: U*A = H, rank, pivots") {
  IMat A = fromRows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  HermiteResult h = hermite(A);
  CHECK(h.U * A == h.H);
  CHECK(abs(determinant(h.U)) == 1);
  CHECK(h.rank == rankOf(A));
}

TEST_CASE("smith: U*A*V = D with divisibility chain") {
  IMat A = fromRows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  SmithResult s = smith(A);
  CHECK(s.U * A * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  auto f = s.invariantFactors();
  for (size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
}

TEST_CASE("smith on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int trial = 0; trial < 25; ++trial) {
    Eigen::Index m = 2 + trial % 4, n = 2 + (trial / 2) % 4;
    IMat A(m, n);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < n; ++j) A(i, j) = Int(dist(rng));
    SmithResult s = smith(A);
    CHECK(s.U * A * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    for (Eigen::Index i = 0; i < std::min(m, n); ++i)
      for (Eigen::Index j = 0; j < std::min(m, n); ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    auto f = s.invariantFactors();
    for (size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
  }
}

TEST_CASE("kernel basis is exact and saturated") {
  IMat A = fromRows({{1, 1, 1}, {0, 0, 0}});
  IMat K = kernelBasis(A);
  CHECK(K.cols() == 2);
  IMat prod = A * K;
  for (Eigen::Index i = 0; i < prod.rows(); ++i)
    for (Eigen::Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
  // (1,-1,0) must be an integral combination of the kernel basis
  IVec v = makeIVec({1, -1, 0});
  CHECK(inColumnSpanZ(K, v));
}

TEST_CASE("saturation of 2Z inside Z^2") {
  IMat B = fromRows({{2}, {0}});
  IMat S = saturation(B);
  CHECK(S.cols() == 1);
  CHECK(abs(S(0, 0)) == 1);
  CHECK(S(1, 0) == 0);
}

TEST_CASE("integral and rational solving") {
  IMat A = fromRows({{2, 0}, {0, 3}});
  IVec b = makeIVec({4, 6});
  auto x = solveIntegral(A, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 2);
  CHECK(!solveIntegral(A, makeIVec({1, 0})).has_value());
  auto y = solveRational(toQ(A), toQ(makeIVec({1, 0})));
  REQUIRE(y.has_value());
  CHECK((*y)[0] == Rat(1, 2));
}

TEST_CASE("determinant via Bareiss") {
  IMat A = fromRows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  CHECK(determinant(A) == -3);
  CHECK(determinant(IMat(IMat::Identity(4, 4))) == 1);
}

TEST_CASE("primitive vectors") {
  CHECK(primitive(makeIVec({4, -6, 2})) == makeIVec({-2, 3, -1}) * Int(-1));
  QVec q = makeQVec({Rat(1, 2), Rat(1, 3)});
  CHECK(primitive(q) == makeIVec({3, 2}));
}
