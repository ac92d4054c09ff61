#include "wt/galois_lattice.hpp"

#include <stdexcept>

namespace wt {

namespace {

long matrixOrder(const IMat& A, long cap = 4096) {
  const Eigen::Index n = A.rows();
  IMat id = IMat::Identity(n, n);
  IMat P = A;
  for (long k = 1; k <= cap; ++k) {
    if (P == id) return k;
    P = P * A;
  }
  throw std::invalid_argument("matrix is not of finite order (cap exceeded)");
}

}  // namespace

GaloisLattice GaloisLattice::make(const IMat& gamma, const IMat& sigma,
                                  std::optional<long> tamePrime) {
  if (gamma.rows() != gamma.cols() || sigma.rows() != sigma.cols() ||
      gamma.rows() != sigma.rows()) {
    throw std::invalid_argument("GaloisLattice: square matrices of equal size required");
  }
  GaloisLattice M;
  M.rank = gamma.rows();
  M.inertiaGen = gamma;
  M.frobenius = sigma;
  Int dg = determinant(gamma), ds = determinant(sigma);
  if ((dg != 1 && dg != -1) || (ds != 1 && ds != -1)) {
    throw std::invalid_argument("GaloisLattice: actions must have determinant +-1");
  }
  M.inertiaOrder = matrixOrder(gamma);
  long so = matrixOrder(sigma);
  // order of sigma modulo <gamma>: smallest d with sigma^d in <gamma>
  {
    IMat P = sigma;
    long d = 1;
    for (; d <= so; ++d) {
      IMat G = IMat::Identity(M.rank, M.rank);
      bool found = false;
      for (long k = 0; k < M.inertiaOrder; ++k) {
        if (P == G) { found = true; break; }
        G = G * gamma;
      }
      if (found) break;
      P = P * sigma;
    }
    M.frobeniusOrderModInertia = d;
  }
  if (tamePrime) {
    // tameness: sigma gamma sigma^{-1} = gamma^p
    IMat lhs = sigma * gamma;
    IMat gp = IMat::Identity(M.rank, M.rank);
    long e = *tamePrime % M.inertiaOrder;
    for (long k = 0; k < e; ++k) gp = gp * gamma;
    IMat rhs = gp * sigma;
    if (lhs != rhs) throw std::invalid_argument("GaloisLattice: tameness relation fails");
  }
  return M;
}

GaloisLattice GaloisLattice::trivial(Eigen::Index rank) {
  GaloisLattice M;
  M.rank = rank;
  M.inertiaGen = IMat::Identity(rank, rank);
  M.frobenius = IMat::Identity(rank, rank);
  return M;
}

std::vector<IVec> GaloisLattice::inertiaOrbit(const IVec& lambda) const {
  std::vector<IVec> orbit;
  IVec x = lambda;
  for (long k = 0; k < inertiaOrder; ++k) {
    bool seen = false;
    for (auto& v : orbit)
      if (v == x) { seen = true; break; }
    if (!seen) orbit.push_back(x);
    x = inertiaGen * x;
  }
  return orbit;
}

Sublattice invariantsSublattice(const GaloisLattice& M, ActionSelect which) {
  const Eigen::Index n = M.rank;
  IMat id = IMat::Identity(n, n);
  std::vector<IMat> blocks;
  if (which == ActionSelect::Inertia || which == ActionSelect::Both)
    blocks.push_back(M.inertiaGen - id);
  if (which == ActionSelect::Frobenius || which == ActionSelect::Both)
    blocks.push_back(M.frobenius - id);
  IMat stacked(static_cast<Eigen::Index>(blocks.size()) * n, n);
  for (size_t b = 0; b < blocks.size(); ++b)
    stacked.middleRows(static_cast<Eigen::Index>(b) * n, n) = blocks[b];
  Sublattice s;
  s.ambientRank = n;
  s.basis = kernelBasis(stacked);
  s.saturated = true;  // kernels are saturated
  return s;
}

Coinvariants coinvariants(const GaloisLattice& M) {
  IMat A = M.inertiaGen - IMat::Identity(M.rank, M.rank);
  SmithResult s = smith(A);
  Coinvariants c;
  Eigen::Index k = std::min(A.rows(), A.cols());
  std::vector<Eigen::Index> freeRows;
  for (Eigen::Index i = 0; i < M.rank; ++i) {
    Int d = (i < k) ? s.D(i, i) : Int(0);
    if (d == 0) {
      freeRows.push_back(i);
    } else if (d != 1 && d != -1) {
      c.torsionOrders.push_back(abs(d));
    }
  }
  c.freeRank = static_cast<int>(freeRows.size());
  // coker(A) = Z^rank / A Z^rank; in U-coordinates the free part is the
  // rows of U with zero diagonal entry
  c.freeProjection = IMat(c.freeRank, M.rank);
  for (size_t t = 0; t < freeRows.size(); ++t)
    c.freeProjection.row(static_cast<Eigen::Index>(t)) = s.U.row(freeRows[t]);
  return c;
}

QVec average(const GaloisLattice& M, const IVec& lambda) {
  auto orbit = M.inertiaOrbit(lambda);
  IVec sum = IVec::Zero(M.rank);
  for (auto& v : orbit) sum += v;
  QVec out(M.rank);
  Rat inv(1, static_cast<unsigned long>(orbit.size()));
  for (Eigen::Index i = 0; i < M.rank; ++i) out[i] = Rat(sum[i]) * inv;
  return out;
}

}  // namespace wt
