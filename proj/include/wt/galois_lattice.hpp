#pragma once

#include <optional>
#include <vector>

#include "wt/intlinalg.hpp"

namespace wt {

// A finitely generated free abelian group Z^rank with commuting
// finite-order inertia and Frobenius actions.
struct GaloisLattice {
  Eigen::Index rank = 0;
  IMat inertiaGen;   // gamma
  IMat frobenius;    // sigma
  long inertiaOrder = 1;
  long frobeniusOrderModInertia = 1;

  static GaloisLattice make(const IMat& gamma, const IMat& sigma,
                            std::optional<long> tamePrime = std::nullopt);
  static GaloisLattice trivial(Eigen::Index rank);

  // orbit of lambda under <gamma>, deduplicated
  std::vector<IVec> inertiaOrbit(const IVec& lambda) const;
};

struct Sublattice {
  Eigen::Index ambientRank = 0;
  IMat basis;  // columns span the sublattice
  bool saturated = false;

  int rank() const { return static_cast<int>(basis.cols()); }
  bool containsZ(const IVec& v) const { return inColumnSpanZ(basis, v); }
};

enum class ActionSelect { Inertia, Frobenius, Both };

// Kernel of the stacked (action - identity) maps: X^I, X^sigma, or both.
Sublattice invariantsSublattice(const GaloisLattice& M, ActionSelect which);

struct Coinvariants {
  int freeRank = 0;
  std::vector<Int> torsionOrders;  // nontrivial cyclic orders
  IMat freeProjection;             // freeRank x rank, the map to the free quotient
};

// Smith decomposition of M / (gamma - 1) M.
Coinvariants coinvariants(const GaloisLattice& M);

// The averaging map: lambda -> (1/[I:I_lambda]) sum of the inertia orbit.
QVec average(const GaloisLattice& M, const IVec& lambda);

}  // namespace wt
