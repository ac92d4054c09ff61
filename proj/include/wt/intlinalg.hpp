#pragma once

#include <optional>

#include "wt/numeric.hpp"

// Exact integer and rational linear algebra: Hermite and Smith normal
// forms, kernels, saturation, integral and rational solving. Everything
// returns plain Eigen matrices over mpz/mpq.

namespace wt {

struct HermiteResult {
  IMat H;  // row Hermite normal form of A (same shape)
  IMat U;  // unimodular, U * A = H
  int rank = 0;
};

struct SmithResult {
  IMat D;  // diagonal (shape of A), d_1 | d_2 | ...
  IMat U;  // unimodular rows x rows
  IMat V;  // unimodular cols x cols, U * A * V = D
  std::vector<Int> invariantFactors() const {
    std::vector<Int> f;
    Eigen::Index k = std::min(D.rows(), D.cols());
    for (Eigen::Index i = 0; i < k; ++i)
      if (D(i, i) != 0) f.push_back(D(i, i));
    return f;
  }
};

// Row-style Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot).
HermiteResult hermite(const IMat& A);

SmithResult smith(const IMat& A);

// Columns form a basis of { x : A x = 0 }; the basis spans a saturated
// sublattice (kernels always are).
IMat kernelBasis(const IMat& A);

// Saturation of the column span of B inside Z^n: the smallest direct
// summand containing it. Columns of the result are a basis.
IMat saturation(const IMat& B);

int rankOf(const IMat& A);
int rankOf(const QMat& A);

Int determinant(const IMat& A);

// Solve A x = b over the integers. Returns std::nullopt if no integral
// solution exists.
std::optional<IVec> solveIntegral(const IMat& A, const IVec& b);

// Solve A x = b over the rationals (any solution). nullopt if inconsistent.
std::optional<QVec> solveRational(const QMat& A, const QVec& b);

QMat inverseQ(const QMat& A);  // requires square nonsingular

// Does the column span of B contain v?
bool inColumnSpanZ(const IMat& B, const IVec& v);
bool inColumnSpanQ(const IMat& B, const IVec& v);

}  // namespace wt
