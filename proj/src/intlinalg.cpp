#include "wt/intlinalg.hpp"

#include <stdexcept>

namespace wt {

namespace {

void swapRows(IMat& M, Eigen::Index i, Eigen::Index j) {
  if (i != j) M.row(i).swap(M.row(j));
}

// Extended gcd: returns g and x, y with a*x + b*y = g.
Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

HermiteResult hermite(const IMat& A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  IMat H = A;
  IMat U = IMat::Identity(m, m);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    // find a pivot in this column at or below `row`
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < m; ++i) {
      if (H(i, col) != 0) { piv = i; break; }
    }
    if (piv < 0) continue;
    swapRows(H, row, piv);
    swapRows(U, row, piv);
    // clear below with gcd combinations
    for (Eigen::Index i = row + 1; i < m; ++i) {
      if (H(i, col) == 0) continue;
      Int x, y;
      Int g = xgcd(H(row, col), H(i, col), x, y);
      Int a = H(row, col) / g, b = H(i, col) / g;
      IMat Hr = x * H.row(row) + y * H.row(i);
      IMat Hi = Int(-b) * H.row(row) + a * H.row(i);
      H.row(row) = Hr;
      H.row(i) = Hi;
      IMat Ur = x * U.row(row) + y * U.row(i);
      IMat Ui = Int(-b) * U.row(row) + a * U.row(i);
      U.row(row) = Ur;
      U.row(i) = Ui;
    }
    if (H(row, col) < 0) {
      H.row(row) = -H.row(row);
      U.row(row) = -U.row(row);
    }
    // reduce entries above the pivot into [0, pivot)
    for (Eigen::Index i = 0; i < row; ++i) {
      Int q = fdivq(H(i, col), H(row, col));
      if (q != 0) {
        H.row(i) -= (q * H.row(row)).eval();
        U.row(i) -= (q * U.row(row)).eval();
      }
    }
    ++row;
  }
  HermiteResult r;
  r.H = std::move(H);
  r.U = std::move(U);
  r.rank = static_cast<int>(row);
  return r;
}

SmithResult smith(const IMat& A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  IMat D = A;
  IMat U = IMat::Identity(m, m);
  IMat V = IMat::Identity(n, n);

  auto rowOp = [&](Eigen::Index i, Eigen::Index j, Eigen::Index t) {
    // clear D(j,t) against the pivot D(i,t); plain elimination when the
    // pivot divides, gcd combination (which shrinks the pivot) otherwise
    if (D(j, t) % D(i, t) == 0) {
      Int q = D(j, t) / D(i, t);
      D.row(j) -= (q * D.row(i)).eval();
      U.row(j) -= (q * U.row(i)).eval();
      return;
    }
    Int x, y;
    Int g = xgcd(D(i, t), D(j, t), x, y);
    Int a = D(i, t) / g, b = D(j, t) / g;
    IMat Di = x * D.row(i) + y * D.row(j);
    IMat Dj = Int(-b) * D.row(i) + a * D.row(j);
    D.row(i) = Di;
    D.row(j) = Dj;
    IMat Ui = x * U.row(i) + y * U.row(j);
    IMat Uj = Int(-b) * U.row(i) + a * U.row(j);
    U.row(i) = Ui;
    U.row(j) = Uj;
  };
  auto colOp = [&](Eigen::Index i, Eigen::Index j, Eigen::Index t) {
    if (D(t, j) % D(t, i) == 0) {
      Int q = D(t, j) / D(t, i);
      D.col(j) -= (q * D.col(i)).eval();
      V.col(j) -= (q * V.col(i)).eval();
      return;
    }
    Int x, y;
    Int g = xgcd(D(t, i), D(t, j), x, y);
    Int a = D(t, i) / g, b = D(t, j) / g;
    IMat Di = x * D.col(i) + y * D.col(j);
    IMat Dj = Int(-b) * D.col(i) + a * D.col(j);
    D.col(i) = Di;
    D.col(j) = Dj;
    IMat Vi = x * V.col(i) + y * V.col(j);
    IMat Vj = Int(-b) * V.col(i) + a * V.col(j);
    V.col(i) = Vi;
    V.col(j) = Vj;
  };

  Eigen::Index k = std::min(m, n);
  for (Eigen::Index t = 0; t < k; ++t) {
    // move a nonzero entry to (t,t)
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < m && pi < 0; ++i)
      for (Eigen::Index j = t; j < n; ++j)
        if (D(i, j) != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;
    if (pi != t) { D.row(t).swap(D.row(pi)); U.row(t).swap(U.row(pi)); }
    if (pj != t) { D.col(t).swap(D.col(pj)); V.col(t).swap(V.col(pj)); }
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (Eigen::Index i = t + 1; i < m; ++i)
        if (D(i, t) != 0) { rowOp(t, i, t); dirty = true; }
      for (Eigen::Index j = t + 1; j < n; ++j)
        if (D(t, j) != 0) { colOp(t, j, t); dirty = true; }
    }
    if (D(t, t) < 0) { D.row(t) = -D.row(t); U.row(t) = -U.row(t); }
  }
  // enforce divisibility chain d_t | d_{t+1}
  for (Eigen::Index t = 0; t + 1 < k; ++t) {
    if (D(t, t) == 0) continue;
    for (Eigen::Index s = t + 1; s < k; ++s) {
      if (D(s, s) % D(t, t) != 0) {
        // fold d_s into position t and rediagonalize the 2x2 block
        D.col(t) += D.col(s);
        V.col(t) += V.col(s);
        bool dirty = true;
        while (dirty) {
          dirty = false;
          if (D(s, t) != 0) { rowOp(t, s, t); dirty = true; }
          if (D(t, s) != 0) { colOp(t, s, t); dirty = true; }
        }
        if (D(t, t) < 0) { D.row(t) = -D.row(t); U.row(t) = -U.row(t); }
        if (D(s, s) < 0) { D.row(s) = -D.row(s); U.row(s) = -U.row(s); }
        s = t;  // restart the divisibility scan from t
      }
    }
  }
  SmithResult r;
  r.D = std::move(D);
  r.U = std::move(U);
  r.V = std::move(V);
  return r;
}

IMat kernelBasis(const IMat& A) {
  SmithResult s = smith(A);
  Eigen::Index n = A.cols();
  Eigen::Index k = std::min(A.rows(), A.cols());
  std::vector<Eigen::Index> zeroCols;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j >= k || s.D(j, j) == 0) zeroCols.push_back(j);
  }
  IMat K(n, static_cast<Eigen::Index>(zeroCols.size()));
  for (size_t t = 0; t < zeroCols.size(); ++t) K.col(static_cast<Eigen::Index>(t)) = s.V.col(zeroCols[t]);
  return K;
}

IMat saturation(const IMat& B) {
  if (B.cols() == 0) return B;
  // saturation = kernel of (kernel of B^T)^T
  IMat K = kernelBasis(IMat(B.transpose()));
  if (K.cols() == 0) {
    // column span has full rank n, saturation is Z^n
    return IMat::Identity(B.rows(), B.rows());
  }
  return kernelBasis(IMat(K.transpose()));
}

int rankOf(const IMat& A) { return hermite(A).rank; }

int rankOf(const QMat& A) {
  QMat M = A;
  const Eigen::Index m = M.rows(), n = M.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < m; ++i)
      if (M(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row) M.row(row).swap(M.row(piv));
    for (Eigen::Index i = row + 1; i < m; ++i) {
      if (M(i, col) != 0) {
        Rat f = M(i, col) / M(row, col);
        M.row(i) -= (f * M.row(row)).eval();
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

Int determinant(const IMat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: square matrix required");
  // fraction-free Bareiss
  IMat M = A;
  const Eigen::Index n = M.rows();
  Int sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (M(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      M.row(k).swap(M.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
      }
      M(i, k) = 0;
    }
    prev = M(k, k);
  }
  return n == 0 ? Int(1) : Int(sign * M(n - 1, n - 1));
}

std::optional<IVec> solveIntegral(const IMat& A, const IVec& b) {
  SmithResult s = smith(A);
  IVec c = s.U * b;
  Eigen::Index n = A.cols();
  Eigen::Index k = std::min(A.rows(), A.cols());
  IVec y = IVec::Zero(n);
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    Int d = (i < k) ? s.D(i, i) : Int(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    }
  }
  return IVec(s.V * y);
}

std::optional<QVec> solveRational(const QMat& A, const QVec& b) {
  QMat M(A.rows(), A.cols() + 1);
  M.leftCols(A.cols()) = A;
  M.col(A.cols()) = b;
  const Eigen::Index m = M.rows(), n = A.cols();
  std::vector<Eigen::Index> pivotCol;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < m; ++i)
      if (M(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row) M.row(row).swap(M.row(piv));
    Rat d = M(row, col);
    M.row(row) /= d;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i != row && M(i, col) != 0) M.row(i) -= (M(i, col) * M.row(row)).eval();
    }
    pivotCol.push_back(col);
    ++row;
  }
  for (Eigen::Index i = row; i < m; ++i)
    if (M(i, n) != 0) return std::nullopt;
  QVec x = QVec::Zero(n);
  for (size_t r = 0; r < pivotCol.size(); ++r) x[pivotCol[r]] = M(static_cast<Eigen::Index>(r), n);
  return x;
}

QMat inverseQ(const QMat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("inverseQ: square matrix required");
  const Eigen::Index n = A.rows();
  QMat M(n, 2 * n);
  M.leftCols(n) = A;
  M.rightCols(n) = QMat::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = col; i < n; ++i)
      if (M(i, col) != 0) { piv = i; break; }
    if (piv < 0) throw std::invalid_argument("inverseQ: singular matrix");
    if (piv != col) M.row(col).swap(M.row(piv));
    Rat d = M(col, col);
    M.row(col) /= d;
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != col && M(i, col) != 0) M.row(i) -= (M(i, col) * M.row(col)).eval();
  }
  return M.rightCols(n);
}

bool inColumnSpanZ(const IMat& B, const IVec& v) {
  return solveIntegral(B, v).has_value();
}

bool inColumnSpanQ(const IMat& B, const IVec& v) {
  QVec b = toQ(v);
  return solveRational(toQ(B), b).has_value();
}

}  // namespace wt
