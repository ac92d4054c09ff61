#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

// Exact scalars for the whole library: arbitrary-precision integers and
// rationals from GMP, plugged into Eigen dense types. All linear algebra
// below is exact; nothing here ever touches floating point.

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace wt {

using Int = mpz_class;
using Rat = mpq_class;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IMat = Mat<Int>;
using IVec = Vec<Int>;
using QMat = Mat<Rat>;
using QVec = Vec<Rat>;

inline Int gcdz(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcmz(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// floor(a/b), exact for any signs, b != 0.
inline Int fdivq(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floorRat(const Rat& r) {
  return fdivq(r.get_num(), r.get_den());
}

// gcd of all entries, >= 0; zero vector gives 0.
inline Int content(const IVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcdz(g, v[i]);
  return g;
}

// v / content(v). Direction is preserved: rays and facet normals carry
// meaning in their sign. The zero vector is returned unchanged.
inline IVec primitive(const IVec& v) {
  Int g = content(v);
  if (g == 0) return v;
  IVec w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) w[i] = v[i] / g;
  return w;
}

// Clear denominators, then reduce to a primitive integer vector on the
// same ray.
inline IVec primitive(const QVec& v) {
  Int den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) den = lcmz(den, v[i].get_den());
  IVec w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(den);
    s.canonicalize();
    w[i] = s.get_num();
  }
  return primitive(w);
}

// Primitive with the first nonzero coordinate positive, for vectors whose
// sign is arbitrary (lineality bases, kernel generators).
inline IVec primitiveSigned(const IVec& v) {
  IVec w = primitive(v);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w[i] != 0) {
      if (w[i] < 0) w = -w;
      break;
    }
  }
  return w;
}

inline QVec toQ(const IVec& v) {
  QVec q(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

inline QMat toQ(const IMat& m) {
  QMat q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
  return q;
}

inline Rat dot(const IVec& a, const QVec& b) {
  Rat s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Lexicographic comparison of integer vectors, used as the canonical
// tie-break order everywhere so results are byte-for-byte reproducible.
inline bool lexLess(const IVec& a, const IVec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline bool lexLess(const QVec& a, const QVec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline IVec makeIVec(const std::vector<long>& xs) {
  IVec v(static_cast<Eigen::Index>(xs.size()));
  for (size_t i = 0; i < xs.size(); ++i) v[static_cast<Eigen::Index>(i)] = Int(xs[i]);
  return v;
}

inline QVec makeQVec(const std::vector<Rat>& xs) {
  QVec v(static_cast<Eigen::Index>(xs.size()));
  for (size_t i = 0; i < xs.size(); ++i) v[static_cast<Eigen::Index>(i)] = xs[i];
  return v;
}

inline std::string toString(const Int& x) { return x.get_str(); }
inline std::string toString(const Rat& x) { return x.get_str(); }

}  // namespace wt
