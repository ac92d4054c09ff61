#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wt/numeric.hpp"

namespace wt {

// Weyl groups as explicit matrix groups over int64 coordinates. Group
// elements never leave the finite set of Weyl matrices, so fixed-width
// arithmetic is exact here.
using LMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using LVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

struct WeylGroupElement {
  LMat matrix;
  std::vector<int> word;  // optional reduced-ish word over simple reflections
};

// A root system realized in an ambient lattice: simple roots are
// functionals (rows of `simpleRoots`), simple coroots are vectors
// (columns of `simpleCoroots`), and the reflection s_i acts by
// v -> v - <alpha_i, v> alpha_i^vee.
class RootSystem {
 public:
  // Cartan-matrix realization in weight coordinates (rank = ambient).
  static RootSystem fromLabel(const std::string& cartanType, int rank);
  // Paper coordinates: A_{n-1} acting on Z^n.
  static RootSystem gl(int n);
  // C_g acting on Z^{g+1} = {(r_1..r_g, c)}.
  static RootSystem gsp(int g);
  // B_g acting on Z^{g+1} (GSpin_{2g+1} with the similitude twist).
  static RootSystem gspin(int g);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }                  // number of simple roots
  Eigen::Index ambientRank() const { return simpleCoroots_.rows(); }
  const LMat& simpleRoots() const { return simpleRoots_; }      // rank x ambient
  const LMat& simpleCoroots() const { return simpleCoroots_; }  // ambient x rank
  LMat cartanMatrix() const;
  LMat simpleReflection(int i) const;

  std::vector<LVec> weylOrbit(const LVec& v) const;
  std::vector<QVec> weylOrbitQ(const QVec& v) const;

  // Full group, enumerated breadth-first from the simple reflections.
  std::vector<WeylGroupElement> elements() const;
  long groupOrder() const;

  // |W / W_J| for J a subset of simple-reflection indices, plus the flag
  // |W/W_J| == dim V + 1.
  std::pair<long, bool> parabolicQuotientSize(const std::vector<int>& J) const;

 private:
  std::string label_;
  int rank_ = 0;
  LMat simpleRoots_;    // rows: functionals on the ambient lattice
  LMat simpleCoroots_;  // columns: vectors in the ambient lattice
};

}  // namespace wt
