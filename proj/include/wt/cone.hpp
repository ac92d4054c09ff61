#pragma once

#include <stdexcept>
#include <vector>

#include "wt/intlinalg.hpp"

namespace wt {

// Extremal rays plus a lineality basis describing a polyhedral cone
// span(lineality) + cone(rays).
struct GeneratorDescription {
  IMat rays;       // n x r, primitive columns
  IMat lineality;  // n x l, columns a lattice basis of the lineality space
};

// Extremal rays / lineality of { x : ineqs * x >= 0, eqs * x = 0 } by the
// double description method, exact over the rationals. Rows of `ineqs`
// and `eqs` are the constraints.
GeneratorDescription dualDescription(const IMat& ineqs, const IMat& eqs);

struct Face;

// A rational polyhedral cone, stored with both descriptions:
// generators (extremal rays + lineality) and facet inequalities +
// span equations. Immutable after construction.
class RationalCone {
 public:
  // Positive hull of the given vectors (columns). Denominators are
  // cleared; redundant generators removed.
  static RationalCone positiveHull(const QMat& vectors);
  static RationalCone positiveHull(const IMat& vectors);

  // Cone from an inequality description { x : ineqs*x >= 0 }.
  static RationalCone fromInequalities(const IMat& ineqs);

  Eigen::Index ambientRank() const { return n_; }
  const IMat& rays() const { return rays_; }           // extremal rays (primitive, lex-sorted)
  const IMat& lineality() const { return lineality_; }
  const IMat& facets() const { return facets_; }       // primitive inward normals
  const IMat& equations() const { return equations_; } // span cut out by these

  // rays plus +-lineality basis: a generating set for serialization.
  IMat generators() const;

  RationalCone dual() const;

  bool contains(const QVec& x) const;
  bool contains(const IVec& x) const { return contains(toQ(x)); }

  int dim() const;               // dimension of the linear span
  int linealityRank() const { return static_cast<int>(lineality_.cols()); }
  bool isStrictlyConvex() const { return linealityRank() == 0; }
  bool isFullDimensional() const { return dim() == static_cast<int>(n_); }
  bool isSimplicial() const;     // pointed with #rays == dim
  bool isZero() const { return rays_.cols() == 0 && lineality_.cols() == 0; }

  // All faces, ordered by (dim, tight set). The full cone is a face of
  // itself; the minimal face is the lineality space.
  std::vector<Face> facePoset() const;

  // Smallest face containing all given points; throws if a point is
  // outside the cone.
  Face smallestFaceContaining(const std::vector<QVec>& pts) const;

  // Pairings <z, ray_j> over the extremal rays of *this* cone (used with
  // the dual cone and a central cocharacter z). Second member: all == 1.
  std::pair<std::vector<Int>, bool> pairingValuesOnRays(const IVec& z) const;

  bool operator==(const RationalCone& o) const {
    return n_ == o.n_ && rays_ == o.rays_ && lineality_ == o.lineality_;
  }

 private:
  RationalCone() = default;
  static RationalCone build(const IMat& gens);

  Eigen::Index n_ = 0;
  IMat rays_, lineality_, facets_, equations_;
};

// A face of a cone, identified by the set of facets it is tight on.
struct Face {
  const RationalCone* parent = nullptr;
  std::vector<int> tightFacets;  // sorted indices into parent->facets()
  std::vector<int> rayIndices;   // sorted indices into parent->rays()
  int dim = 0;

  bool operator==(const Face& o) const { return tightFacets == o.tightFacets; }
  // face order: f <= g iff f is a face of g iff tight(f) contains tight(g)
  bool isFaceOf(const Face& o) const;
};

// Does the convex hull of the given points contain the origin in its
// relative interior (relative to the affine hull)?
bool hullContainsOriginInterior(const QMat& points);

}  // namespace wt
