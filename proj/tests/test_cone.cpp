#include "doctest.h"

#include "wt/cone.hpp"

using namespace wt;

namespace {

IMat fromCols(std::initializer_list<std::initializer_list<long>> cols) {
  Eigen::Index n = static_cast<Eigen::Index>(cols.begin()->size());
  IMat A(n, static_cast<Eigen::Index>(cols.size()));
  Eigen::Index j = 0;
  for (auto& c : cols) {
    Eigen::Index i = 0;
    for (long x : c) A(i++, j) = Int(x);
    ++j;
  }
  return A;
}

// GSp_2g orbit vectors (a_1..a_g, 1), a_i in {0,1}
IMat gspOrbit(int g) {
  IMat M(g + 1, 1 << g);
  for (int mask = 0; mask < (1 << g); ++mask) {
    for (int i = 0; i < g; ++i) M(i, mask) = Int((mask >> i) & 1);
    M(g, mask) = 1;
  }
  return M;
}

}  // namespace

TEST_CASE("first octant: three facets, self-dual") {
  RationalCone c = RationalCone::positiveHull(IMat(IMat::Identity(3, 3)));
  CHECK(c.rays().cols() == 3);
  CHECK(c.facets().cols() == 3);
  CHECK(c.equations().cols() == 0);
  CHECK(c.isStrictlyConvex());
  CHECK(c.isFullDimensional());
  RationalCone d = c.dual();
  CHECK(d.rays() == c.rays());
}

TEST_CASE("GSp_4 orbit cone: full-dimensional in R^3 with 4 extremal rays") {
  RationalCone c = RationalCone::positiveHull(gspOrbit(2));
  CHECK(c.ambientRank() == 3);
  CHECK(c.dim() == 3);
  CHECK(c.rays().cols() == 4);
  CHECK(c.facets().cols() == 4);
  CHECK_FALSE(c.isSimplicial());
}

TEST_CASE("lineality: {(1,0),(-1,0)}") {
  RationalCone c = RationalCone::positiveHull(fromCols({{1, 0}, {-1, 0}}));
  CHECK(c.linealityRank() == 1);
  CHECK_FALSE(c.isStrictlyConvex());
  CHECK(c.rays().cols() == 0);
}

TEST_CASE("dual of GSp_2g cone is cut out by subset-sum inequalities") {
  // dual cone generators are exactly the facet normals; for sigma_{GSp}
  // dual description says: chi in sigma^vee iff <mu', chi> >= 0 for all
  // 2^g orbit vectors. So dual().facets() == orbit vectors (as rays).
  for (int g = 1; g <= 3; ++g) {
    RationalCone sigma = RationalCone::positiveHull(gspOrbit(g));
    RationalCone dual = sigma.dual();
    // dual dual involution
    RationalCone dd = dual.dual();
    CHECK(dd.rays() == sigma.rays());
    CHECK(dd.lineality() == sigma.lineality());
    // every orbit vector is a facet normal of the dual
    CHECK(dual.facets().cols() == sigma.rays().cols());
  }
}

TEST_CASE("GL_n anti-Drinfeld dual: rays are permutations of (1,..,1,2-n)") {
  // sigma = positive hull of the W-orbit of (1,...,1,0); its dual has n
  // extremal rays obtained by permuting (1,...,1,2-n).
  for (int n = 3; n <= 4; ++n) {
    IMat orbit(n, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) orbit(i, j) = Int(i == j ? 0 : 1);
    }
    RationalCone sigma = RationalCone::positiveHull(orbit);
    RationalCone dual = sigma.dual();
    CHECK(dual.rays().cols() == n);
    for (Eigen::Index j = 0; j < dual.rays().cols(); ++j) {
      IVec r = dual.rays().col(j);
      int low = 0, one = 0;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (r[i] == Int(2 - n)) ++low;
        if (r[i] == 1) ++one;
      }
      CHECK(low == 1);
      CHECK(one == n - 1);
    }
  }
}

TEST_CASE("face poset of the first quadrant") {
  RationalCone c = RationalCone::positiveHull(IMat(IMat::Identity(2, 2)));
  auto faces = c.facePoset();
  REQUIRE(faces.size() == 4);
  CHECK(faces[0].dim == 0);
  CHECK(faces[1].dim == 1);
  CHECK(faces[2].dim == 1);
  CHECK(faces[3].dim == 2);
}

TEST_CASE("face poset of the GSp_4 cone has f-vector (1,4,4,1)") {
  RationalCone c = RationalCone::positiveHull(gspOrbit(2));
  auto faces = c.facePoset();
  int byDim[4] = {0, 0, 0, 0};
  for (auto& f : faces) byDim[f.dim]++;
  CHECK(byDim[0] == 1);
  CHECK(byDim[1] == 4);
  CHECK(byDim[2] == 4);
  CHECK(byDim[3] == 1);
}

TEST_CASE("simplicial cone gives a Boolean face lattice") {
  RationalCone c = RationalCone::positiveHull(IMat(IMat::Identity(3, 3)));
  CHECK(c.isSimplicial());
  CHECK(c.facePoset().size() == 8);
}

TEST_CASE("smallest face containing points") {
  RationalCone c = RationalCone::positiveHull(gspOrbit(2));
  // one extremal ray generator -> that ray
  QVec r0 = toQ(IVec(c.rays().col(0)));
  Face f = c.smallestFaceContaining({r0});
  CHECK(f.dim == 1);
  CHECK(f.rayIndices == std::vector<int>{0});
  // all generators -> full cone
  std::vector<QVec> all;
  for (Eigen::Index j = 0; j < c.rays().cols(); ++j) all.push_back(toQ(IVec(c.rays().col(j))));
  CHECK(c.smallestFaceContaining(all).dim == 3);
  // two adjacent rays -> the 2-face they span
  auto faces = c.facePoset();
  for (auto& face : faces) {
    if (face.dim == 2) {
      REQUIRE(face.rayIndices.size() == 2);
      QVec a = toQ(IVec(c.rays().col(face.rayIndices[0])));
      QVec b = toQ(IVec(c.rays().col(face.rayIndices[1])));
      Face got = c.smallestFaceContaining({a, b});
      CHECK(got.tightFacets == face.tightFacets);
      break;
    }
  }
  // point outside
  CHECK_THROWS(c.smallestFaceContaining({toQ(makeIVec({0, 0, -1}))}));
}

TEST_CASE("every face is the smallest face containing its ray generators") {
  RationalCone c = RationalCone::positiveHull(gspOrbit(2));
  for (auto& face : c.facePoset()) {
    if (face.rayIndices.empty()) continue;
    std::vector<QVec> pts;
    for (int r : face.rayIndices) pts.push_back(toQ(IVec(c.rays().col(r))));
    CHECK(c.smallestFaceContaining(pts).tightFacets == face.tightFacets);
  }
}

TEST_CASE("hull interior test") {
  // orbit {0} -> false
  QMat z = toQ(IMat(IMat::Zero(2, 1)));
  CHECK_FALSE(hullContainsOriginInterior(z));
  // {(1,0),(0,1)} -> false
  CHECK_FALSE(hullContainsOriginInterior(toQ(fromCols({{1, 0}, {0, 1}}))));
  // A_2-style hexagon orbit -> true
  CHECK(hullContainsOriginInterior(
      toQ(fromCols({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}))));
}

TEST_CASE("double description consistency by point sampling") {
  RationalCone c = RationalCone::positiveHull(gspOrbit(2));
  // every integer point of a small box is in the cone iff it satisfies
  // all facet inequalities (generator side checked by membership in the
  // hull of rays via rational solve: use dual-dual instead)
  for (long x = -2; x <= 2; ++x)
    for (long y = -2; y <= 2; ++y)
      for (long z2 = 0; z2 <= 2; ++z2) {
        IVec v = makeIVec({x, y, z2});
        bool inFacets = true;
        for (Eigen::Index f = 0; f < c.facets().cols(); ++f)
          if (dot(IVec(c.facets().col(f)), v) < 0) inFacets = false;
        CHECK(inFacets == c.contains(v));
      }
}

TEST_CASE("zero cone and total degenerate input") {
  RationalCone c = RationalCone::positiveHull(IMat(IMat::Zero(3, 2)));
  CHECK(c.isZero());
  CHECK(c.dim() == 0);
  CHECK(c.contains(makeIVec({0, 0, 0})));
  CHECK_FALSE(c.contains(makeIVec({1, 0, 0})));
}
