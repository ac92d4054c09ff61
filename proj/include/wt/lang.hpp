#pragma once

#include "wt/semigroup.hpp"

namespace wt {

// The Lang isogeny of a torus over Z_p at the cocharacter level:
// L_* = p*sigma - 1 on N = X_*(T), L^* its transpose on X^*(T).
struct LangMap {
  Eigen::Index rank = 0;
  IMat sigma;      // Frobenius action on N
  long p = 0;
  IMat Lstar;      // p*sigma - I
  IMat LstarDual;  // transpose, acting on X^*

  static LangMap make(const IMat& frobenius, long p);
  static LangMap split(Eigen::Index rank, long p);

  Int groupOrder() const;  // |T(F_p)| = |det(p sigma - 1)|

  // L_*^{-1}(tau): generators are the primitive points on the preimages
  // of the ray generators.
  RationalCone pullbackCone(const RationalCone& tau) const;

  // S~ = (L_*^{-1} tau)^vee cap X^*; equals saturate(L^*(S)).
  AffineSemigroup normalizationSemigroup(const AffineSemigroup& S) const;
};

struct RayRamification {
  IVec lambdaTilde;  // primitive generator upstairs
  IVec lambda;       // primitive generator downstairs
  Int degree;        // L_*(lambdaTilde) = degree * lambda
};

struct RamificationReport {
  std::vector<RayRamification> rays;
  bool totallyRamified(const Int& order) const {
    for (auto& r : rays)
      if (r.degree != order) return false;
    return !rays.empty();
  }
};

RamificationReport ramificationDegrees(const LangMap& lm, const RationalCone& tau);

// Number of lattice points of S~ outside every translate L^*(h) + S~ for
// h in the Hilbert basis of S; the rank of the fiber algebra of the Lang
// cover over the closed orbit.
Int fiberLengthOverClosedOrbit(const LangMap& lm, const AffineSemigroup& S);

// Y_S smooth <=> after splitting the torus factor the ray generators form
// a basis of the lattice.
bool isSmoothToric(const AffineSemigroup& S);

// flat <=> fiber length equals the generic degree |T(F_p)|.
bool isFlatLangCover(const LangMap& lm, const AffineSemigroup& S);

}  // namespace wt
