#include "wt/root_system.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace wt {

namespace {

// Cartan matrices, rows indexed by simple roots (Bourbaki numbering).
LMat cartan(const std::string& type, int n) {
  auto A = [&](int m) {
    LMat C = LMat::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      C(i, i) = 2;
      if (i + 1 < m) { C(i, i + 1) = -1; C(i + 1, i) = -1; }
    }
    return C;
  };
  if (type == "A") return A(n);
  if (type == "B") {
    if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
    LMat C = A(n);
    C(n - 2, n - 1) = -2;  // short last root
    return C;
  }
  if (type == "C") {
    if (n < 2) throw std::invalid_argument("C_n needs n >= 2");
    LMat C = A(n);
    C(n - 1, n - 2) = -2;  // long last root
    return C;
  }
  if (type == "D") {
    if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
    LMat C = A(n);
    C(n - 2, n - 1) = 0;
    C(n - 1, n - 2) = 0;
    C(n - 3, n - 1) = -1;
    C(n - 1, n - 3) = -1;
    return C;
  }
  if (type == "E") {
    if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
    // Bourbaki: node 2 attaches to node 4
    LMat C = LMat::Zero(n, n);
    for (int i = 0; i < n; ++i) C(i, i) = 2;
    auto link = [&](int i, int j) { C(i - 1, j - 1) = -1; C(j - 1, i - 1) = -1; };
    link(1, 3);
    link(3, 4);
    link(2, 4);
    link(4, 5);
    if (n >= 6) link(5, 6);
    if (n >= 7) link(6, 7);
    if (n >= 8) link(7, 8);
    return C;
  }
  if (type == "F") {
    if (n != 4) throw std::invalid_argument("F needs rank 4");
    LMat C = A(4);
    C(1, 2) = -2;
    C(2, 1) = -1;
    return C;
  }
  if (type == "G") {
    if (n != 2) throw std::invalid_argument("G needs rank 2");
    LMat C(2, 2);
    C << 2, -1, -3, 2;
    return C;
  }
  throw std::invalid_argument("unknown Cartan type " + type);
}

struct LVecLess {
  bool operator()(const LVec& a, const LVec& b) const {
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

struct LMatLess {
  bool operator()(const LMat& a, const LMat& b) const {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    return false;
  }
};

}  // namespace

RootSystem RootSystem::fromLabel(const std::string& type, int rank) {
  RootSystem rs;
  rs.label_ = type + "_" + std::to_string(rank);
  rs.rank_ = rank;
  LMat C = cartan(type, rank);
  // Weight-coordinate realization: v_i = <alpha_i^vee, v>, so the root
  // functional alpha_i is e_i^T and the coroot alpha_i^vee is the i-th
  // row of C viewed as a vector. Then <alpha_i^vee, alpha_j> = C(i,j).
  rs.simpleRoots_ = LMat::Identity(rank, rank);
  rs.simpleCoroots_ = C.transpose();
  return rs;
}

RootSystem RootSystem::gl(int n) {
  RootSystem rs;
  rs.label_ = "gl_" + std::to_string(n);
  rs.rank_ = n - 1;
  rs.simpleRoots_ = LMat::Zero(n - 1, n);
  rs.simpleCoroots_ = LMat::Zero(n, n - 1);
  for (int i = 0; i < n - 1; ++i) {
    rs.simpleRoots_(i, i) = 1;
    rs.simpleRoots_(i, i + 1) = -1;
    rs.simpleCoroots_(i, i) = 1;
    rs.simpleCoroots_(i + 1, i) = -1;
  }
  return rs;
}

RootSystem RootSystem::gsp(int g) {
  // X = Z^{g+1} with coordinates (a_1..a_g, b); roots of type C_g:
  // short a_i - a_{i+1}, long 2a_g - b.
  RootSystem rs;
  rs.label_ = "gsp_" + std::to_string(g);
  rs.rank_ = g;
  rs.simpleRoots_ = LMat::Zero(g, g + 1);
  rs.simpleCoroots_ = LMat::Zero(g + 1, g);
  for (int i = 0; i + 1 < g; ++i) {
    rs.simpleRoots_(i, i) = 1;
    rs.simpleRoots_(i, i + 1) = -1;
    rs.simpleCoroots_(i, i) = 1;
    rs.simpleCoroots_(i + 1, i) = -1;
  }
  rs.simpleRoots_(g - 1, g - 1) = 2;
  rs.simpleRoots_(g - 1, g) = -1;
  rs.simpleCoroots_(g - 1, g - 1) = 1;
  return rs;
}

RootSystem RootSystem::gspin(int g) {
  // X = Z^{g+1} with coordinates (x_1..x_g, y); roots of type B_g:
  // long x_i - x_{i+1}, short x_g (coroot 2e_g - e_{g+1}).
  RootSystem rs;
  rs.label_ = "gspin_" + std::to_string(g);
  rs.rank_ = g;
  rs.simpleRoots_ = LMat::Zero(g, g + 1);
  rs.simpleCoroots_ = LMat::Zero(g + 1, g);
  for (int i = 0; i + 1 < g; ++i) {
    rs.simpleRoots_(i, i) = 1;
    rs.simpleRoots_(i, i + 1) = -1;
    rs.simpleCoroots_(i, i) = 1;
    rs.simpleCoroots_(i + 1, i) = -1;
  }
  rs.simpleRoots_(g - 1, g - 1) = 1;
  rs.simpleCoroots_(g - 1, g - 1) = 2;
  rs.simpleCoroots_(g, g - 1) = -1;
  return rs;
}

LMat RootSystem::cartanMatrix() const {
  // C(i,j) = <alpha_i^vee, alpha_j>
  return (simpleRoots_ * simpleCoroots_).transpose();
}

LMat RootSystem::simpleReflection(int i) const {
  const Eigen::Index n = ambientRank();
  LMat s = LMat::Identity(n, n);
  // s_i(v) = v - <alpha_i, v> alpha_i^vee
  s -= simpleCoroots_.col(i) * simpleRoots_.row(i);
  return s;
}

std::vector<LVec> RootSystem::weylOrbit(const LVec& v) const {
  std::vector<LMat> gens;
  for (int i = 0; i < rank_; ++i) gens.push_back(simpleReflection(i));
  std::set<LVec, LVecLess> seen;
  std::vector<LVec> queue{v};
  seen.insert(v);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    LVec x = queue[qi];
    for (auto& s : gens) {
      LVec y = s * x;
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  std::vector<LVec> out(seen.begin(), seen.end());
  return out;
}

std::vector<QVec> RootSystem::weylOrbitQ(const QVec& v) const {
  std::vector<LMat> gens;
  for (int i = 0; i < rank_; ++i) gens.push_back(simpleReflection(i));
  std::vector<QVec> queue{v};
  std::vector<QVec> seen{v};
  auto lookup = [&](const QVec& x) {
    for (auto& s : seen)
      if (s == x) return true;
    return false;
  };
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    QVec x = queue[qi];
    for (auto& s : gens) {
      QVec y(x.size());
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        Rat acc = 0;
        for (Eigen::Index j = 0; j < x.size(); ++j) acc += Rat(Int(s(i, j))) * x[j];
        y[i] = acc;
      }
      if (!lookup(y)) {
        seen.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(seen.begin(), seen.end(), [](const QVec& a, const QVec& b) { return lexLess(a, b); });
  return seen;
}

std::vector<WeylGroupElement> RootSystem::elements() const {
  std::vector<LMat> gens;
  for (int i = 0; i < rank_; ++i) gens.push_back(simpleReflection(i));
  const Eigen::Index n = ambientRank();
  std::map<LMat, std::vector<int>, LMatLess> seen;
  std::vector<LMat> queue;
  LMat id = LMat::Identity(n, n);
  seen.emplace(id, std::vector<int>{});
  queue.push_back(id);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    LMat x = queue[qi];
    auto wordIt = seen.find(x);
    for (int i = 0; i < rank_; ++i) {
      LMat y = x * gens[i];
      if (seen.find(y) == seen.end()) {
        std::vector<int> w = wordIt->second;
        w.push_back(i);
        seen.emplace(y, std::move(w));
        queue.push_back(y);
      }
    }
  }
  std::vector<WeylGroupElement> out;
  out.reserve(seen.size());
  for (auto& [m, w] : seen) out.push_back(WeylGroupElement{m, w});
  return out;
}

long RootSystem::groupOrder() const {
  // orbit-stabilizer-free: breadth-first enumeration of matrices
  return static_cast<long>(elements().size());
}

std::pair<long, bool> RootSystem::parabolicQuotientSize(const std::vector<int>& J) const {
  // |W_J| by enumerating the subgroup generated by J
  std::vector<LMat> gens;
  for (int i : J) gens.push_back(simpleReflection(i));
  const Eigen::Index n = ambientRank();
  std::set<LMat, LMatLess> sub;
  std::vector<LMat> queue;
  LMat id = LMat::Identity(n, n);
  sub.insert(id);
  queue.push_back(id);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    LMat x = queue[qi];
    for (auto& g : gens) {
      LMat y = x * g;
      if (sub.insert(y).second) queue.push_back(y);
    }
  }
  long order = groupOrder();
  long quotient = order / static_cast<long>(sub.size());
  return {quotient, quotient == rank_ + 1};
}

}  // namespace wt
