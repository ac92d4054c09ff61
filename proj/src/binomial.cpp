#include "wt/binomial.hpp"

#include <algorithm>
#include <map>

#include "wt/cone.hpp"

namespace wt {

namespace {

std::int64_t wdeg(const std::vector<std::int64_t>& w, const Expo& e) {
  std::int64_t s = 0;
  for (size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
  return s;
}

std::uint64_t supportMask(const Expo& e) {
  std::uint64_t m = 0;
  for (size_t i = 0; i < e.size() && i < 64; ++i)
    if (e[i] > 0) m |= (1ull << i);
  return m;
}

bool divides(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo sub(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Expo add(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Expo lcmExpo(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

struct Entry {
  Binomial b;
  std::uint64_t leadMask = 0;
  std::int64_t leadDeg = 0;
  bool removed = false;
};

// Buchberger engine for binomial ideals.
class Engine {
 public:
  Engine(MonomialOrder ord, std::int64_t* budget) : ord_(std::move(ord)), budget_(budget) {}

  const MonomialOrder& order() const { return ord_; }

  // orient so that plus is the lead; returns false for zero binomials
  bool orient(Binomial& b) const {
    int c = ord_.compare(b.plus, b.minus);
    if (c == 0) return false;
    if (c < 0) std::swap(b.plus, b.minus);
    return true;
  }

  // normal form of a monomial
  Expo normalFormMono(Expo m) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::uint64_t mask = supportMask(m);
      for (const auto& e : entries_) {
        if (e.removed) continue;
        if ((e.leadMask & ~mask) != 0) continue;
        if (!divides(e.b.plus, m)) continue;
        m = add(sub(m, e.b.plus), e.b.minus);
        changed = true;
        break;
      }
    }
    return m;
  }

  // full reduction; false when the binomial reduces to zero
  bool normalForm(Binomial& b) const {
    b.plus = normalFormMono(b.plus);
    b.minus = normalFormMono(b.minus);
    if (b.plus == b.minus) return false;
    if (ord_.compare(b.plus, b.minus) < 0) std::swap(b.plus, b.minus);
    return true;
  }

  void add(Binomial b) {
    if (!orient(b)) return;
    int idx = static_cast<int>(entries_.size());
    Entry e;
    e.b = std::move(b);
    e.leadMask = supportMask(e.b.plus);
    e.leadDeg = wdeg(ord_.weights, e.b.plus);
    entries_.push_back(std::move(e));
    for (int j = 0; j < idx; ++j) {
      if (entries_[j].removed) continue;
      pairs_.emplace_back(j, idx);
    }
  }

  void run() {
    while (!pairs_.empty()) {
      auto [i, j] = pairs_.back();
      pairs_.pop_back();
      if (entries_[i].removed || entries_[j].removed) continue;
      const Binomial& f = entries_[i].b;
      const Binomial& g = entries_[j].b;
      if (coprime(f.plus, g.plus)) continue;  // product criterion
      if (budget_ && --(*budget_) < 0)
        throw BudgetExceeded("binomial Buchberger: S-pair budget exceeded");
      Expo l = lcmExpo(f.plus, g.plus);
      Binomial s;
      s.plus = add(sub(l, f.plus), f.minus);
      s.minus = add(sub(l, g.plus), g.minus);
      if (s.plus == s.minus) continue;
      if (ord_.compare(s.plus, s.minus) < 0) std::swap(s.plus, s.minus);
      if (!normalForm(s)) continue;
      add(std::move(s));
    }
    interReduce();
  }

  // reduced GB: minimal leads, tails fully reduced
  void interReduce() {
    for (size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].removed) continue;
      for (size_t j = 0; j < entries_.size(); ++j) {
        if (i == j || entries_[j].removed) continue;
        if (divides(entries_[j].b.plus, entries_[i].b.plus)) {
          if (entries_[j].b.plus == entries_[i].b.plus && j > i) continue;
          entries_[i].removed = true;
          break;
        }
      }
    }
    for (auto& e : entries_) {
      if (e.removed) continue;
      e.removed = true;  // avoid self-reduction
      e.b.minus = normalFormMono(e.b.minus);
      e.removed = false;
    }
  }

  std::vector<Binomial> basis() const {
    std::vector<Binomial> out;
    for (const auto& e : entries_)
      if (!e.removed) out.push_back(e.b);
    std::sort(out.begin(), out.end(), [&](const Binomial& a, const Binomial& b) {
      std::int64_t da = wdeg(ord_.weights, a.plus), db = wdeg(ord_.weights, b.plus);
      if (da != db) return da < db;
      if (a.plus != b.plus) return a.plus < b.plus;
      return a.minus < b.minus;
    });
    return out;
  }

 private:
  MonomialOrder ord_;
  std::vector<Entry> entries_;
  std::vector<std::pair<int, int>> pairs_;
  std::int64_t* budget_;
};

std::vector<std::int64_t> positiveGrading(const IMat& columns) {
  // a strictly positive integral functional on all columns: sum of the
  // extremal rays of the dual of the column cone (pointed cone required)
  RationalCone c = RationalCone::positiveHull(columns);
  if (!c.isStrictlyConvex())
    throw std::invalid_argument("toricIdeal: column cone must be pointed for a positive grading");
  RationalCone d = c.dual();
  IVec w = IVec::Zero(columns.rows());
  for (Eigen::Index j = 0; j < d.rays().cols(); ++j) w += d.rays().col(j);
  std::vector<std::int64_t> weights(static_cast<size_t>(columns.cols()));
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    Int v = dot(w, IVec(columns.col(j)));
    if (v <= 0) throw std::logic_error("toricIdeal: grading not positive on a generator");
    if (!v.fits_slong_p()) throw std::invalid_argument("toricIdeal: grading overflow");
    weights[static_cast<size_t>(j)] = v.get_si();
  }
  return weights;
}

}  // namespace

int MonomialOrder::compare(const Expo& a, const Expo& b) const {
  std::int64_t da = wdeg(weights, a), db = wdeg(weights, b);
  if (da != db) return da < db ? -1 : 1;
  // reverse lexicographic: scanning variables from cheapest to dearest,
  // the first difference decides; the larger exponent loses
  for (size_t t = perm.size(); t-- > 0;) {
    int v = perm[t];
    if (a[static_cast<size_t>(v)] != b[static_cast<size_t>(v)])
      return a[static_cast<size_t>(v)] > b[static_cast<size_t>(v)] ? -1 : 1;
  }
  return 0;
}

bool reducesToZero(const Binomial& b, const std::vector<Binomial>& basis,
                   const MonomialOrder& ord) {
  Engine eng(ord, nullptr);
  for (const auto& g : basis) eng.add(g);
  Binomial c = b;
  return !eng.normalForm(c);
}

bool inExponentKernel(const IMat& columns, const Binomial& b) {
  IVec lhs = IVec::Zero(columns.rows());
  IVec rhs = IVec::Zero(columns.rows());
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    lhs += Int(b.plus[static_cast<size_t>(j)]) * columns.col(j);
    rhs += Int(b.minus[static_cast<size_t>(j)]) * columns.col(j);
  }
  return lhs == rhs;
}

ToricIdealResult toricIdeal(const IMat& columns, std::int64_t budget) {
  const size_t k = static_cast<size_t>(columns.cols());
  std::vector<std::int64_t> weights = positiveGrading(columns);
  std::vector<int> identity(k);
  for (size_t i = 0; i < k; ++i) identity[i] = static_cast<int>(i);

  // generators of the kernel-lattice ideal
  IMat K = kernelBasis(columns);
  std::vector<Binomial> gens;
  for (Eigen::Index j = 0; j < K.cols(); ++j) {
    Binomial b;
    b.plus.assign(k, 0);
    b.minus.assign(k, 0);
    for (size_t i = 0; i < k; ++i) {
      Int v = K(static_cast<Eigen::Index>(i), j);
      if (!v.fits_sint_p()) throw std::invalid_argument("toricIdeal: kernel entry overflow");
      int x = static_cast<int>(v.get_si());
      if (x > 0) b.plus[i] = x;
      else b.minus[i] = static_cast<std::int32_t>(-x);
    }
    gens.push_back(std::move(b));
  }

  // saturate with respect to each variable: GB with that variable
  // cheapest, then divide out its powers
  for (size_t v = 0; v < k; ++v) {
    MonomialOrder ord;
    ord.weights = weights;
    ord.perm = identity;
    std::swap(ord.perm[v], ord.perm[k - 1]);  // variable v last = cheapest
    Engine eng(ord, &budget);
    for (auto& g : gens) eng.add(g);
    eng.run();
    gens.clear();
    for (auto b : eng.basis()) {
      int m = std::min(b.plus[v], b.minus[v]);
      if (m > 0) {
        b.plus[v] -= m;
        b.minus[v] -= m;
      }
      gens.push_back(std::move(b));
    }
  }

  // final reduced GB in the canonical order
  MonomialOrder canonical{weights, identity};
  Engine eng(canonical, &budget);
  for (auto& g : gens) eng.add(g);
  eng.run();
  ToricIdealResult result;
  result.groebner = eng.basis();

  // minimal generators: greedy by degree against the ideal generated by
  // what is already kept (graded Nakayama makes the count well-defined)
  std::vector<Binomial> candidates = result.groebner;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const Binomial& a, const Binomial& b) {
                     return wdeg(weights, a.plus) < wdeg(weights, b.plus);
                   });
  Engine kept(canonical, &budget);
  std::vector<Binomial> mins;
  for (auto& c : candidates) {
    Binomial probe = c;
    if (!kept.normalForm(probe)) continue;  // already in the ideal
    mins.push_back(c);
    kept.add(c);
    kept.run();
  }
  result.minimalGenerators = std::move(mins);
  result.minimalGeneratorCount = static_cast<long>(result.minimalGenerators.size());
  return result;
}

}  // namespace wt
