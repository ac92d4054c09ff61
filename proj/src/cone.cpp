#include "wt/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wt {

namespace {

struct DDRay {
  IVec v;
  std::vector<int> tight;  // indices of processed inequalities this ray satisfies with equality
};

bool tightSubset(const std::vector<int>& a, const std::vector<int>& b) {
  // a subseteq b, both sorted
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> tightIntersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IMat columnsToMat(Eigen::Index n, const std::vector<IVec>& cols) {
  IMat M(n, static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) M.col(static_cast<Eigen::Index>(j)) = cols[j];
  return M;
}

std::vector<IVec> sortedUniqueColumns(std::vector<IVec> cols) {
  std::sort(cols.begin(), cols.end(), [](const IVec& a, const IVec& b) { return lexLess(a, b); });
  cols.erase(std::unique(cols.begin(), cols.end(),
                         [](const IVec& a, const IVec& b) { return a == b; }),
             cols.end());
  return cols;
}

}  // namespace

GeneratorDescription dualDescription(const IMat& ineqs, const IMat& eqs) {
  const Eigen::Index n = ineqs.cols() > 0 ? ineqs.cols() : eqs.cols();
  std::vector<IVec> lin;
  for (Eigen::Index i = 0; i < n; ++i) {
    IVec e = IVec::Zero(n);
    e[i] = 1;
    lin.push_back(e);
  }
  std::vector<DDRay> rays;
  std::vector<IVec> seenIneqs;  // processed inequalities, for tight sets

  // tight sets are recomputed by evaluation, immune to degeneracies
  auto computeTight = [&](const IVec& v) {
    std::vector<int> t;
    for (size_t i = 0; i < seenIneqs.size(); ++i)
      if (dot(seenIneqs[i], v) == 0) t.push_back(static_cast<int>(i));
    return t;
  };
  auto refreshTights = [&]() {
    for (auto& r : rays) r.tight = computeTight(r.v);
  };

  auto applyEquality = [&](const IVec& a) {
    // restrict current cone to a-perp
    int pivot = -1;
    for (size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) { pivot = static_cast<int>(i); break; }
    if (pivot >= 0) {
      IVec l = lin[static_cast<size_t>(pivot)];
      Int al = dot(a, l);
      std::vector<IVec> nl;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<int>(i) == pivot) continue;
        Int ai = dot(a, lin[i]);
        nl.push_back(primitive(IVec(al * lin[i] - ai * l)));
      }
      lin = std::move(nl);
      for (auto& r : rays) {
        Int ar = dot(a, r.v);
        r.v = primitive(IVec(al * r.v - ar * l));
      }
      refreshTights();
      return;
    }
    std::vector<DDRay> zero, plus, minus;
    for (auto& r : rays) {
      int s = sgn(dot(a, r.v));
      if (s == 0) zero.push_back(r);
      else if (s > 0) plus.push_back(r);
      else minus.push_back(r);
    }
    std::vector<DDRay> result = zero;
    for (auto& rp : plus)
      for (auto& rm : minus) {
        auto t = tightIntersect(rp.tight, rm.tight);
        bool adjacent = true;
        for (auto& r3 : rays) {
          if (r3.v != rp.v && r3.v != rm.v && tightSubset(t, r3.tight)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        IVec w = primitive(IVec(dot(a, rp.v) * rm.v - dot(a, rm.v) * rp.v));
        if (content(w) == 0) continue;
        result.push_back(DDRay{w, {}});
      }
    std::vector<DDRay> dedup;
    for (auto& r : result) {
      bool seen = false;
      for (auto& d : dedup)
        if (d.v == r.v) { seen = true; break; }
      if (!seen) dedup.push_back(r);
    }
    rays = std::move(dedup);
    refreshTights();
  };

  auto applyInequality = [&](const IVec& a) {
    int pivot = -1;
    for (size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) { pivot = static_cast<int>(i); break; }
    if (pivot >= 0) {
      IVec l = lin[static_cast<size_t>(pivot)];
      if (dot(a, l) < 0) l = -l;
      Int al = dot(a, l);
      std::vector<IVec> nl;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<int>(i) == pivot) continue;
        Int ai = dot(a, lin[i]);
        nl.push_back(primitive(IVec(al * lin[i] - ai * l)));
      }
      lin = std::move(nl);
      for (auto& r : rays) {
        Int ar = dot(a, r.v);
        r.v = primitive(IVec(al * r.v - ar * l));
      }
      rays.push_back(DDRay{primitive(l), {}});
      seenIneqs.push_back(a);
      refreshTights();
      return;
    }
    std::vector<DDRay*> zero, plus, minus;
    for (auto& r : rays) {
      int s = sgn(dot(a, r.v));
      if (s == 0) zero.push_back(&r);
      else if (s > 0) plus.push_back(&r);
      else minus.push_back(&r);
    }
    if (minus.empty()) {
      seenIneqs.push_back(a);
      refreshTights();
      return;
    }
    std::vector<DDRay> result;
    for (auto* r : plus) result.push_back(*r);
    for (auto* r : zero) result.push_back(*r);
    for (auto* rp : plus)
      for (auto* rm : minus) {
        auto t = tightIntersect(rp->tight, rm->tight);
        bool adjacent = true;
        for (auto& r3 : rays) {
          if (r3.v != rp->v && r3.v != rm->v && tightSubset(t, r3.tight)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        IVec w = primitive(IVec(dot(a, rp->v) * rm->v - dot(a, rm->v) * rp->v));
        if (content(w) == 0) continue;
        result.push_back(DDRay{w, {}});
      }
    std::vector<DDRay> dedup;
    for (auto& r : result) {
      bool seen = false;
      for (auto& d : dedup)
        if (d.v == r.v) { seen = true; break; }
      if (!seen) dedup.push_back(r);
    }
    rays = std::move(dedup);
    seenIneqs.push_back(a);
    refreshTights();
  };

  for (Eigen::Index i = 0; i < eqs.rows(); ++i) {
    IVec a = eqs.row(i).transpose();
    if (content(a) != 0) applyEquality(a);
  }
  for (Eigen::Index i = 0; i < ineqs.rows(); ++i) {
    IVec a = ineqs.row(i).transpose();
    if (content(a) != 0) applyInequality(a);
  }

  GeneratorDescription out;
  std::vector<IVec> rvs;
  for (auto& r : rays) rvs.push_back(r.v);
  out.rays = columnsToMat(n, sortedUniqueColumns(std::move(rvs)));
  // canonical lineality basis: HNF of the row span, rows back as columns
  if (!lin.empty()) {
    IMat L(static_cast<Eigen::Index>(lin.size()), n);
    for (size_t i = 0; i < lin.size(); ++i) L.row(static_cast<Eigen::Index>(i)) = lin[i].transpose();
    HermiteResult h = hermite(L);
    IMat B(n, h.rank);
    for (int i = 0; i < h.rank; ++i) B.col(i) = h.H.row(i).transpose();
    out.lineality = B;
  } else {
    out.lineality = IMat(n, 0);
  }
  return out;
}

RationalCone RationalCone::build(const IMat& gens) {
  RationalCone c;
  c.n_ = gens.rows();
  // facet normals and span equations: the dual description of
  // { y : <g_j, y> >= 0 } has rays = facets of cone(gens) and
  // lineality = (span gens)^perp.
  IMat ineq = gens.transpose();
  GeneratorDescription dualSide = dualDescription(ineq, IMat(0, c.n_));
  c.facets_ = dualSide.rays;
  c.equations_ = dualSide.lineality;
  // extremal rays and lineality of the cone itself
  GeneratorDescription primal =
      dualDescription(c.facets_.transpose(), c.equations_.transpose());
  c.rays_ = primal.rays;
  c.lineality_ = primal.lineality;
  return c;
}

RationalCone RationalCone::positiveHull(const IMat& vectors) {
  std::vector<IVec> cols;
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    IVec v = primitive(IVec(vectors.col(j)));
    if (content(v) != 0) cols.push_back(v);
  }
  return build(columnsToMat(vectors.rows(), sortedUniqueColumns(std::move(cols))));
}

RationalCone RationalCone::positiveHull(const QMat& vectors) {
  std::vector<IVec> cols;
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    IVec v = primitive(QVec(vectors.col(j)));
    if (content(v) != 0) cols.push_back(v);
  }
  return build(columnsToMat(vectors.rows(), sortedUniqueColumns(std::move(cols))));
}

RationalCone RationalCone::fromInequalities(const IMat& ineqs) {
  GeneratorDescription g = dualDescription(ineqs, IMat(0, ineqs.cols()));
  RationalCone c;
  c.n_ = ineqs.cols();
  IMat gens(c.n_, g.rays.cols() + 2 * g.lineality.cols());
  gens.leftCols(g.rays.cols()) = g.rays;
  gens.middleCols(g.rays.cols(), g.lineality.cols()) = g.lineality;
  gens.rightCols(g.lineality.cols()) = -g.lineality;
  return build(gens);
}

IMat RationalCone::generators() const {
  IMat g(n_, rays_.cols() + 2 * lineality_.cols());
  g.leftCols(rays_.cols()) = rays_;
  g.middleCols(rays_.cols(), lineality_.cols()) = lineality_;
  g.rightCols(lineality_.cols()) = -lineality_;
  return g;
}

RationalCone RationalCone::dual() const {
  return build(IMat(facets_));
}

bool RationalCone::contains(const QVec& x) const {
  for (Eigen::Index j = 0; j < equations_.cols(); ++j) {
    if (dot(IVec(equations_.col(j)), x) != 0) return false;
  }
  for (Eigen::Index j = 0; j < facets_.cols(); ++j) {
    if (dot(IVec(facets_.col(j)), x) < 0) return false;
  }
  return true;
}

int RationalCone::dim() const { return static_cast<int>(n_) - static_cast<int>(equations_.cols()); }

bool RationalCone::isSimplicial() const {
  return linealityRank() == 0 && static_cast<int>(rays_.cols()) == dim();
}

bool Face::isFaceOf(const Face& o) const {
  return std::includes(tightFacets.begin(), tightFacets.end(),
                       o.tightFacets.begin(), o.tightFacets.end());
}

std::vector<Face> RationalCone::facePoset() const {
  const int nf = static_cast<int>(facets_.cols());
  const int nr = static_cast<int>(rays_.cols());

  // tight facet set of each ray
  std::vector<std::vector<int>> rayTight(nr);
  for (int r = 0; r < nr; ++r)
    for (int f = 0; f < nf; ++f)
      if (dot(IVec(facets_.col(f)), IVec(rays_.col(r))) == 0) rayTight[r].push_back(f);

  auto raysOf = [&](const std::vector<int>& T) {
    std::vector<int> rs;
    for (int r = 0; r < nr; ++r)
      if (tightSubset(T, rayTight[r])) rs.push_back(r);
    return rs;
  };
  auto closure = [&](const std::vector<int>& T) {
    std::vector<int> rs = raysOf(T);
    std::vector<int> out;
    for (int f = 0; f < nf; ++f) {
      bool all = true;
      for (int r : rs)
        if (!std::binary_search(rayTight[r].begin(), rayTight[r].end(), f)) { all = false; break; }
      if (all) out.push_back(f);
    }
    return out;
  };

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  std::vector<int> top = closure({});
  seen.insert(top);
  queue.push_back(top);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> T = queue[qi];
    for (int f = 0; f < nf; ++f) {
      if (std::binary_search(T.begin(), T.end(), f)) continue;
      std::vector<int> T2 = T;
      T2.push_back(f);
      std::sort(T2.begin(), T2.end());
      T2 = closure(T2);
      if (seen.insert(T2).second) queue.push_back(T2);
    }
  }

  std::vector<Face> faces;
  for (const auto& T : seen) {
    Face face;
    face.parent = this;
    face.tightFacets = T;
    face.rayIndices = raysOf(T);
    IMat span(n_, static_cast<Eigen::Index>(face.rayIndices.size()) + lineality_.cols());
    for (size_t i = 0; i < face.rayIndices.size(); ++i)
      span.col(static_cast<Eigen::Index>(i)) = rays_.col(face.rayIndices[i]);
    span.rightCols(lineality_.cols()) = lineality_;
    face.dim = rankOf(span);
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.tightFacets < b.tightFacets;
  });
  return faces;
}

Face RationalCone::smallestFaceContaining(const std::vector<QVec>& pts) const {
  for (const auto& p : pts) {
    if (!contains(p)) throw std::invalid_argument("smallestFaceContaining: point outside cone");
  }
  // facets tight on every point; the face they cut out is the answer
  std::vector<int> T;
  for (Eigen::Index f = 0; f < facets_.cols(); ++f) {
    bool tight = true;
    for (const auto& p : pts)
      if (dot(IVec(facets_.col(f)), p) != 0) { tight = false; break; }
    if (tight) T.push_back(static_cast<int>(f));
  }
  for (auto& face : facePoset()) {
    if (face.tightFacets == T) return face;
  }
  throw std::logic_error("smallestFaceContaining: tight set is not closed");
}

std::pair<std::vector<Int>, bool> RationalCone::pairingValuesOnRays(const IVec& z) const {
  std::vector<Int> vals;
  bool allOnes = true;
  for (Eigen::Index j = 0; j < rays_.cols(); ++j) {
    Int v = dot(z, IVec(rays_.col(j)));
    if (v != 1) allOnes = false;
    vals.push_back(v);
  }
  return {vals, allOnes};
}

bool hullContainsOriginInterior(const QMat& points) {
  if (points.cols() == 0) return false;
  const Eigen::Index n = points.rows();
  bool allZero = true;
  for (Eigen::Index j = 0; j < points.cols() && allZero; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      if (points(i, j) != 0) { allZero = false; break; }
  if (allZero) return false;
  // homogenize: 0 in relint conv(p_i) iff (0,...,0,1) in relint cone((p_i,1))
  QMat h(n + 1, points.cols());
  h.topRows(n) = points;
  for (Eigen::Index j = 0; j < points.cols(); ++j) h(n, j) = 1;
  RationalCone c = RationalCone::positiveHull(h);
  QVec target = QVec::Zero(n + 1);
  target[n] = 1;
  for (Eigen::Index j = 0; j < c.equations().cols(); ++j)
    if (dot(IVec(c.equations().col(j)), target) != 0) return false;
  for (Eigen::Index j = 0; j < c.facets().cols(); ++j)
    if (dot(IVec(c.facets().col(j)), target) <= 0) return false;
  return true;
}

}  // namespace wt
