#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wt/cone.hpp"

namespace wt {

struct NonPointedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An affine semigroup inside a lattice: cone intersected with the lattice
// when saturated, or the N-span of explicit generators otherwise.
class AffineSemigroup {
 public:
  // cone cap lattice (saturated). latticeBasis columns span the lattice;
  // identity means the full ambient Z^n.
  static AffineSemigroup fromCone(const RationalCone& cone, IMat latticeBasis = IMat());

  // saturation of the N-span of the given generators: cone(gens) cap
  // saturation(Z-span(gens)).
  static AffineSemigroup saturate(const IMat& generators);

  // explicit, possibly non-saturated semigroup given by generators; the
  // declared lattice defaults to the ambient Z^n.
  static AffineSemigroup fromGenerators(const IMat& generators, IMat declaredLattice = IMat());

  Eigen::Index ambientRank() const { return cone_.ambientRank(); }
  const RationalCone& cone() const { return cone_; }
  const IMat& latticeBasis() const { return lattice_; }
  bool isSaturated() const { return saturated_; }

  // Unique minimal generating set, lex-sorted columns. Throws
  // NonPointedError when the cone has lineality.
  const IMat& hilbertBasis() const;

  bool contains(const IVec& x) const;

  // |Hilbert basis| == rank of the generated group and the basis
  // generates the declared lattice.
  bool isFree() const;

  // Z-span of the Hilbert basis equals the declared lattice.
  bool generatesDeclaredLattice() const;

  // Is this semigroup unimodularly isomorphic to the k-th Veronese
  // semigroup { v in Z^n_{>=0} : k | sum v_i }?
  bool veroneseRecognize(int n, int k) const;

 private:
  RationalCone cone_{RationalCone::positiveHull(IMat(0, 0))};
  IMat lattice_;              // ambient x m
  bool saturated_ = true;
  IMat explicitGens_;         // nonempty only for non-saturated semigroups
  mutable std::optional<IMat> hilbert_;
};

// Hilbert basis of cone cap Z^n (the cone must be strictly convex).
IMat hilbertBasisOfCone(const RationalCone& cone);

}  // namespace wt
