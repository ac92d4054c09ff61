#include "wt/lang.hpp"

#include <set>

namespace wt {

namespace {

struct IVecLess {
  bool operator()(const IVec& a, const IVec& b) const { return lexLess(a, b); }
};

// Quotient data for splitting a torus factor: projection onto the
// quotient lattice modulo the lineality space, a section of it, and the
// image cone.
struct SplitData {
  IMat proj;
  IMat lift;  // proj * lift = identity on the quotient
  RationalCone cone;
};

SplitData splitTorusFactor(const RationalCone& cone) {
  SplitData out;
  const Eigen::Index n = cone.ambientRank();
  if (cone.linealityRank() == 0) {
    out.proj = IMat::Identity(n, n);
    out.lift = out.proj;
    out.cone = cone;
    return out;
  }
  // Z^n modulo the saturation of the lineality lattice: rows of U past
  // the rank in the Smith form give a projection with free image
  SmithResult s = smith(cone.lineality());
  int r = 0;
  Eigen::Index k = std::min(s.D.rows(), s.D.cols());
  for (Eigen::Index i = 0; i < k; ++i)
    if (s.D(i, i) != 0) ++r;
  out.proj = IMat(n - r, n);
  for (Eigen::Index i = r; i < n; ++i) out.proj.row(i - r) = s.U.row(i);
  QMat Uinv = inverseQ(toQ(s.U));
  out.lift = IMat(n, n - r);
  for (Eigen::Index j = r; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      Rat x = Uinv(i, j);
      x.canonicalize();
      if (x.get_den() != 1) throw std::logic_error("splitTorusFactor: non-integral section");
      out.lift(i, j - r) = x.get_num();
    }
  }
  IMat gens = out.proj * cone.generators();
  out.cone = RationalCone::positiveHull(gens);
  return out;
}

}  // namespace

LangMap LangMap::make(const IMat& frobenius, long p) {
  LangMap lm;
  lm.rank = frobenius.rows();
  lm.sigma = frobenius;
  lm.p = p;
  lm.Lstar = Int(p) * frobenius - IMat::Identity(lm.rank, lm.rank);
  lm.LstarDual = lm.Lstar.transpose();
  if (determinant(lm.Lstar) == 0) throw std::invalid_argument("LangMap: p*sigma - 1 singular");
  if (lm.sigma * lm.Lstar != lm.Lstar * lm.sigma)
    throw std::logic_error("LangMap: sigma does not commute with L_*");
  return lm;
}

LangMap LangMap::split(Eigen::Index rank, long p) {
  return make(IMat(IMat::Identity(rank, rank)), p);
}

Int LangMap::groupOrder() const { return abs(determinant(Lstar)); }

RationalCone LangMap::pullbackCone(const RationalCone& tau) const {
  QMat Linv = inverseQ(toQ(Lstar));
  IMat gens = tau.generators();
  QMat pre(rank, gens.cols());
  for (Eigen::Index j = 0; j < gens.cols(); ++j) pre.col(j) = Linv * toQ(IVec(gens.col(j)));
  return RationalCone::positiveHull(pre);
}

AffineSemigroup LangMap::normalizationSemigroup(const AffineSemigroup& S) const {
  RationalCone pulled = pullbackCone(S.cone().dual());
  return AffineSemigroup::fromCone(pulled.dual());
}

RamificationReport ramificationDegrees(const LangMap& lm, const RationalCone& tau) {
  RationalCone up = lm.pullbackCone(tau);
  RamificationReport report;
  for (Eigen::Index j = 0; j < up.rays().cols(); ++j) {
    RayRamification r;
    r.lambdaTilde = up.rays().col(j);
    IVec image = lm.Lstar * r.lambdaTilde;
    r.lambda = primitive(image);
    r.degree = content(image);
    report.rays.push_back(std::move(r));
  }
  return report;
}

Int fiberLengthOverClosedOrbit(const LangMap& lm, const AffineSemigroup& S) {
  // split off the torus factor first, mirroring the passage to Z_S; the
  // relevant lineality is that of the cone spanned by S itself
  SplitData split = splitTorusFactor(S.cone());
  const IMat& proj = split.proj;

  // Hilbert basis of the projected semigroup S-bar (equals S when there
  // is no torus factor)
  IMat hb = hilbertBasisOfCone(split.cone);

  AffineSemigroup Stilde = lm.normalizationSemigroup(S);

  // induced Lang pullback on the quotient: proj o L^* o lift
  std::vector<IVec> shifts;
  for (Eigen::Index j = 0; j < hb.cols(); ++j) {
    IVec s = lm.LstarDual * IVec(split.lift * IVec(hb.col(j)));
    shifts.push_back(proj * s);
  }
  // S~ projected: its image is the saturated semigroup of the projected
  // cone (S~ is saturated and contains the full lineality lattice)
  RationalCone coneTproj = RationalCone::positiveHull(IMat(proj * Stilde.cone().generators()));
  if (coneTproj.linealityRank() != 0)
    throw NonPointedError("fiberLength: S~ keeps a lineality after splitting the torus factor");
  auto inStilde = [&](const IVec& x) { return coneTproj.contains(x); };

  // Standard monomials (points of S~ in no translate L^*(h) + S~) form a
  // downward-closed set for divisibility in S~, so growing from 0 along
  // the Hilbert generators of S~ enumerates exactly that set.
  std::vector<IVec> gens;
  {
    std::set<IVec, IVecLess> dedup;
    IMat hbTproj = hilbertBasisOfCone(coneTproj);
    for (Eigen::Index j = 0; j < hbTproj.cols(); ++j) {
      IVec g = hbTproj.col(j);
      if (content(g) != 0) dedup.insert(g);
    }
    gens.assign(dedup.begin(), dedup.end());
  }
  auto isStandard = [&](const IVec& x) {
    for (auto& s : shifts) {
      IVec d = x - s;
      if (inStilde(d)) return false;
    }
    return true;
  };
  std::set<IVec, IVecLess> seen;
  std::vector<IVec> queue;
  IVec zero = IVec::Zero(proj.rows());
  if (isStandard(zero)) {
    seen.insert(zero);
    queue.push_back(zero);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    IVec cur = queue[qi];
    for (auto& g : gens) {
      IVec nxt = cur + g;
      if (seen.count(nxt)) continue;
      if (!isStandard(nxt)) continue;
      seen.insert(nxt);
      queue.push_back(nxt);
    }
    if (seen.size() > 5'000'000)
      throw std::runtime_error("fiberLength: enumeration exceeds sanity bound");
  }
  return Int(static_cast<long>(seen.size()));
}

bool isSmoothToric(const AffineSemigroup& S) {
  SplitData split = splitTorusFactor(S.cone());
  const RationalCone& c = split.cone;
  if (c.rays().cols() != c.dim()) return false;
  if (c.rays().cols() == 0) return true;  // pure torus
  if (!c.isFullDimensional()) {
    // rays must generate the saturated span lattice
    IMat sat = saturation(c.rays());
    for (Eigen::Index j = 0; j < sat.cols(); ++j) {
      if (!inColumnSpanZ(c.rays(), IVec(sat.col(j)))) return false;
    }
    return true;
  }
  Int d = determinant(IMat(c.rays()));
  return d == 1 || d == -1;
}

// Generic degree of the cover after splitting the torus factor: the
// order of the group acting on the strictly convex part.
Int effectiveGroupOrder(const LangMap& lm, const AffineSemigroup& S) {
  SplitData split = splitTorusFactor(S.cone());
  if (split.proj.rows() == split.proj.cols()) return lm.groupOrder();
  for (Eigen::Index j = 0; j < S.cone().lineality().cols(); ++j) {
    IVec w = lm.LstarDual * IVec(S.cone().lineality().col(j));
    if (content(IVec(split.proj * w)) != 0)
      throw std::logic_error("Lang map does not preserve the torus factor");
  }
  IMat induced = split.proj * lm.LstarDual * split.lift;
  return abs(determinant(induced));
}

bool isFlatLangCover(const LangMap& lm, const AffineSemigroup& S) {
  return fiberLengthOverClosedOrbit(lm, S) == effectiveGroupOrder(lm, S);
}

}  // namespace wt
