#include "wt/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace wt {

namespace {

struct IVecLess {
  bool operator()(const IVec& a, const IVec& b) const { return lexLess(a, b); }
};

// pulling triangulation of a pointed cone given by its extremal rays
// (columns); returns index subsets forming simplicial subcones
std::vector<std::vector<int>> triangulate(const IMat& rays) {
  const int m = static_cast<int>(rays.cols());
  int d = rankOf(rays);
  if (m == d) {
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    return {all};
  }
  RationalCone c = RationalCone::positiveHull(rays);
  // map canonical rays back to input columns
  std::vector<int> where(c.rays().cols(), -1);
  for (Eigen::Index j = 0; j < c.rays().cols(); ++j) {
    for (int i = 0; i < m; ++i) {
      if (IVec(rays.col(i)) == IVec(c.rays().col(j))) { where[j] = i; break; }
    }
  }
  int apex = 0;  // first input column is the pulled ray
  std::vector<std::vector<int>> cells;
  for (Eigen::Index f = 0; f < c.facets().cols(); ++f) {
    IVec normal = c.facets().col(f);
    if (dot(normal, IVec(rays.col(apex))) == 0) continue;  // facet contains apex
    std::vector<int> facetRays;
    for (int i = 0; i < m; ++i) {
      if (i != apex && dot(normal, IVec(rays.col(i))) == 0) facetRays.push_back(i);
    }
    IMat sub(rays.rows(), static_cast<Eigen::Index>(facetRays.size()));
    for (size_t t = 0; t < facetRays.size(); ++t)
      sub.col(static_cast<Eigen::Index>(t)) = rays.col(facetRays[t]);
    for (auto& cell : triangulate(sub)) {
      std::vector<int> mapped{apex};
      for (int idx : cell) mapped.push_back(facetRays[static_cast<size_t>(idx)]);
      std::sort(mapped.begin(), mapped.end());
      cells.push_back(std::move(mapped));
    }
  }
  return cells;
}

// lattice points of { V t : t in [0,1)^k } for V with independent columns
std::vector<IVec> parallelepipedPoints(const IMat& V) {
  const Eigen::Index n = V.rows(), k = V.cols();
  // work inside the saturation of span(V)
  IMat B = saturation(V);  // n x k basis of span cap Z^n
  // V = B * Vp with Vp integral k x k
  IMat Vp(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    auto x = solveIntegral(B, IVec(V.col(j)));
    if (!x) throw std::logic_error("parallelepipedPoints: ray outside saturated span");
    Vp.col(j) = *x;
  }
  SmithResult s = smith(Vp);
  std::vector<Int> d(k);
  for (Eigen::Index i = 0; i < k; ++i) d[i] = abs(s.D(i, i));
  QMat VpInv = inverseQ(toQ(Vp));
  QMat Uinv = inverseQ(toQ(s.U));
  std::vector<IVec> points;
  // enumerate cosets c in prod Z/d_i, representative x = U^{-1} c
  std::vector<Int> c(k, Int(0));
  while (true) {
    QVec cq(k);
    for (Eigen::Index i = 0; i < k; ++i) cq[i] = Rat(c[i]);
    QVec xq = Uinv * cq;
    // reduce into the half-open parallelepiped: t = Vp^{-1} x, subtract floors
    QVec t = VpInv * xq;
    IVec x(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      Rat xi = xq[i];
      xi.canonicalize();
      if (xi.get_den() != 1) throw std::logic_error("parallelepipedPoints: non-integral rep");
      x[i] = xi.get_num();
    }
    IVec fl(k);
    for (Eigen::Index i = 0; i < k; ++i) fl[i] = floorRat(t[i]);
    IVec red = x - Vp * fl;
    points.push_back(B * red);
    // increment mixed-radix counter
    Eigen::Index pos = 0;
    while (pos < k) {
      c[pos] += 1;
      if (c[pos] < d[pos]) break;
      c[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return points;
}

}  // namespace

IMat hilbertBasisOfCone(const RationalCone& cone) {
  if (cone.linealityRank() != 0)
    throw NonPointedError("hilbertBasis: cone has a nonzero lineality space");
  const Eigen::Index n = cone.ambientRank();
  if (cone.rays().cols() == 0) return IMat(n, 0);

  std::set<IVec, IVecLess> candidates;
  for (Eigen::Index j = 0; j < cone.rays().cols(); ++j) candidates.insert(IVec(cone.rays().col(j)));
  for (auto& cell : triangulate(cone.rays())) {
    IMat V(n, static_cast<Eigen::Index>(cell.size()));
    for (size_t t = 0; t < cell.size(); ++t) V.col(static_cast<Eigen::Index>(t)) = cone.rays().col(cell[t]);
    for (auto& p : parallelepipedPoints(V)) {
      if (content(p) != 0) candidates.insert(p);
    }
  }

  // positive grading: sum of facet normals is strictly positive on the
  // pointed cone minus the origin (relative to its span)
  IVec w = IVec::Zero(n);
  for (Eigen::Index f = 0; f < cone.facets().cols(); ++f) w += cone.facets().col(f);
  auto wdeg = [&](const IVec& v) { return dot(w, v); };

  std::vector<IVec> sorted(candidates.begin(), candidates.end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](const IVec& a, const IVec& b) {
    Int da = wdeg(a), db = wdeg(b);
    if (da != db) return da < db;
    return lexLess(a, b);
  });

  std::vector<IVec> kept;
  for (auto& h : sorted) {
    bool reducible = false;
    for (auto& m : kept) {
      IVec r = h - m;
      if (content(r) == 0) continue;
      if (cone.contains(r)) { reducible = true; break; }
    }
    if (!reducible) kept.push_back(h);
  }
  std::sort(kept.begin(), kept.end(), [](const IVec& a, const IVec& b) { return lexLess(a, b); });
  IMat out(n, static_cast<Eigen::Index>(kept.size()));
  for (size_t j = 0; j < kept.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = kept[j];
  return out;
}

AffineSemigroup AffineSemigroup::fromCone(const RationalCone& cone, IMat latticeBasis) {
  AffineSemigroup s;
  s.cone_ = cone;
  s.lattice_ = latticeBasis.size() == 0
                   ? IMat(IMat::Identity(cone.ambientRank(), cone.ambientRank()))
                   : latticeBasis;
  s.saturated_ = true;
  return s;
}

AffineSemigroup AffineSemigroup::saturate(const IMat& generators) {
  AffineSemigroup s;
  s.cone_ = RationalCone::positiveHull(generators);
  s.lattice_ = saturation(generators);
  s.saturated_ = true;
  return s;
}

AffineSemigroup AffineSemigroup::fromGenerators(const IMat& generators, IMat declaredLattice) {
  AffineSemigroup s;
  s.cone_ = RationalCone::positiveHull(generators);
  s.lattice_ = declaredLattice.size() == 0
                   ? IMat(IMat::Identity(generators.rows(), generators.rows()))
                   : declaredLattice;
  s.saturated_ = false;
  s.explicitGens_ = generators;
  return s;
}

const IMat& AffineSemigroup::hilbertBasis() const {
  if (hilbert_) return *hilbert_;
  if (!saturated_) {
    // minimal generators of the explicit N-span: drop generators that are
    // N-combinations of the others
    std::vector<IVec> gens;
    for (Eigen::Index j = 0; j < explicitGens_.cols(); ++j) {
      IVec v = explicitGens_.col(j);
      if (content(v) != 0) gens.push_back(v);
    }
    std::sort(gens.begin(), gens.end(), IVecLess{});
    gens.erase(std::unique(gens.begin(), gens.end(), [](const IVec& a, const IVec& b) { return a == b; }),
               gens.end());
    std::vector<IVec> kept;
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<IVec> others;
      for (size_t j = 0; j < gens.size(); ++j)
        if (j != i) others.push_back(gens[j]);
      IMat om(explicitGens_.rows(), static_cast<Eigen::Index>(others.size()));
      for (size_t j = 0; j < others.size(); ++j) om.col(static_cast<Eigen::Index>(j)) = others[j];
      AffineSemigroup rest = AffineSemigroup::fromGenerators(om, lattice_);
      if (!rest.contains(gens[i])) kept.push_back(gens[i]);
    }
    IMat out(explicitGens_.rows(), static_cast<Eigen::Index>(kept.size()));
    for (size_t j = 0; j < kept.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = kept[j];
    hilbert_ = out;
    return *hilbert_;
  }
  bool fullLattice = lattice_.cols() == lattice_.rows() && lattice_ == IMat::Identity(lattice_.rows(), lattice_.cols());
  if (fullLattice) {
    hilbert_ = hilbertBasisOfCone(cone_);
    return *hilbert_;
  }
  // compute in lattice coordinates, then map back
  const Eigen::Index m = lattice_.cols();
  IMat raysLat(m, cone_.rays().cols());
  for (Eigen::Index j = 0; j < cone_.rays().cols(); ++j) {
    auto x = solveIntegral(lattice_, IVec(cone_.rays().col(j)));
    if (!x) {
      // ray direction need not be in the lattice; scale until it is
      // (the primitive point of the ray in the sublattice)
      auto xq = solveRational(toQ(lattice_), toQ(IVec(cone_.rays().col(j))));
      if (!xq) throw std::logic_error("hilbertBasis: cone ray outside lattice span");
      raysLat.col(j) = primitive(*xq);
    } else {
      raysLat.col(j) = primitive(*x);
    }
  }
  RationalCone cLat = RationalCone::positiveHull(raysLat);
  IMat hbLat = hilbertBasisOfCone(cLat);
  IMat out = lattice_ * hbLat;
  // canonical order in ambient coordinates
  std::vector<IVec> cols;
  for (Eigen::Index j = 0; j < out.cols(); ++j) cols.push_back(IVec(out.col(j)));
  std::sort(cols.begin(), cols.end(), IVecLess{});
  for (size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = cols[j];
  hilbert_ = out;
  return *hilbert_;
}

bool AffineSemigroup::contains(const IVec& x) const {
  if (!saturated_) {
    if (!cone_.contains(x)) return false;
    // membership in the N-span of the explicit generators: bounded search
    // (desk scale; generators are few)
    std::vector<IVec> gens;
    for (Eigen::Index j = 0; j < explicitGens_.cols(); ++j) gens.push_back(IVec(explicitGens_.col(j)));
    std::set<IVec, IVecLess> seen;
    std::vector<IVec> queue{IVec(IVec::Zero(x.size()))};
    seen.insert(queue[0]);
    // grade by any strictly positive functional on the cone
    IVec w = IVec::Zero(x.size());
    for (Eigen::Index f = 0; f < cone_.facets().cols(); ++f) w += cone_.facets().col(f);
    Int target = dot(w, x);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      IVec cur = queue[qi];
      if (cur == x) return true;
      if (seen.size() > 200000)
        throw std::runtime_error("AffineSemigroup::contains: membership search too large");
      for (auto& g : gens) {
        IVec nxt = cur + g;
        if (dot(w, nxt) > target) continue;
        if (seen.insert(nxt).second) queue.push_back(nxt);
      }
    }
    return false;
  }
  if (!cone_.contains(x)) return false;
  return solveIntegral(lattice_, x).has_value();
}

bool AffineSemigroup::isFree() const {
  const IMat& hb = hilbertBasis();
  return rankOf(hb) == static_cast<int>(hb.cols()) && generatesDeclaredLattice();
}

bool AffineSemigroup::generatesDeclaredLattice() const {
  const IMat& hb = hilbertBasis();
  if (rankOf(hb) != static_cast<int>(lattice_.cols())) return false;
  // every lattice basis vector must be an integral combination of hb
  for (Eigen::Index j = 0; j < lattice_.cols(); ++j) {
    if (!solveIntegral(hb, IVec(lattice_.col(j))).has_value()) return false;
  }
  return true;
}

bool AffineSemigroup::veroneseRecognize(int n, int k) const {
  const IMat& hb = hilbertBasis();
  if (ambientRank() != n) return false;
  // Hilbert basis of the Veronese semigroup: compositions of k into n parts
  std::vector<IVec> vb;
  std::vector<Int> comp(static_cast<size_t>(n), Int(0));
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      comp[static_cast<size_t>(pos)] = left;
      IVec v(n);
      for (int i = 0; i < n; ++i) v[i] = comp[static_cast<size_t>(i)];
      vb.push_back(v);
      return;
    }
    for (int t = 0; t <= left; ++t) {
      comp[static_cast<size_t>(pos)] = t;
      rec(pos + 1, left - t);
    }
  };
  rec(0, k);
  if (static_cast<Eigen::Index>(vb.size()) != hb.cols()) return false;

  // a unimodular isomorphism maps Hilbert basis onto Hilbert basis; pin a
  // lattice basis inside hb and search over image tuples
  std::vector<int> basisIdx;
  {
    IMat acc(n, 0);
    for (Eigen::Index j = 0; j < hb.cols() && static_cast<int>(basisIdx.size()) < n; ++j) {
      IMat test(n, acc.cols() + 1);
      test.leftCols(acc.cols()) = acc;
      test.col(acc.cols()) = hb.col(j);
      if (rankOf(test) == static_cast<int>(test.cols())) {
        acc = test;
        basisIdx.push_back(static_cast<int>(j));
      }
    }
    if (static_cast<int>(basisIdx.size()) != n) return false;
  }
  IMat H(n, n);
  for (int t = 0; t < n; ++t) H.col(t) = hb.col(basisIdx[static_cast<size_t>(t)]);
  QMat Hinv = inverseQ(toQ(H));

  std::set<IVec, IVecLess> hbSet;
  for (Eigen::Index j = 0; j < hb.cols(); ++j) hbSet.insert(IVec(hb.col(j)));

  std::vector<int> pick(static_cast<size_t>(n), -1);
  std::vector<bool> used(vb.size(), false);
  std::function<bool(int)> search = [&](int pos) -> bool {
    if (pos == n) {
      QMat img(n, n);
      for (int t = 0; t < n; ++t) img.col(t) = toQ(vb[static_cast<size_t>(pick[static_cast<size_t>(t)])]);
      QMat Uq = img * Hinv;
      IMat U(n, n);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
          Rat x = Uq(i, j);
          x.canonicalize();
          if (x.get_den() != 1) return false;
          U(i, j) = x.get_num();
        }
      Int det = determinant(U);
      if (det != 1 && det != -1) return false;
      // U must map hb bijectively onto vb
      std::set<IVec, IVecLess> image;
      for (auto& h : hbSet) image.insert(IVec(U * h));
      std::set<IVec, IVecLess> vbSet(vb.begin(), vb.end());
      return image == vbSet;
    }
    for (size_t c = 0; c < vb.size(); ++c) {
      if (used[c]) continue;
      used[c] = true;
      pick[static_cast<size_t>(pos)] = static_cast<int>(c);
      if (search(pos + 1)) { used[c] = false; return true; }
      used[c] = false;
    }
    return false;
  };
  return search(0);
}

}  // namespace wt
