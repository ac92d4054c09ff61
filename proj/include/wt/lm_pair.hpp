#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wt/galois_lattice.hpp"
#include "wt/lang.hpp"
#include "wt/root_system.hpp"
#include "wt/semigroup.hpp"

namespace wt {

// A local-model pair at the lattice level: N = X_*(T_G) with Frobenius,
// the ramification index e of the reflex field, the Weyl orbit of mu
// pushed through averaging and the parahoric projection, and the extra
// characters the classification machinery consumes.
struct LMPair {
  std::string name;
  Eigen::Index rank = 0;           // rank of N
  IMat frobenius;                  // sigma acting on N
  long e = 1;                      // ramification index of E/Q_p
  long p = 3;
  QMat orbit;                      // columns phi(lambda^diamond), lambda in Lambda_mu
  std::optional<IMat> phi;         // parahoric projection X_*(T)^I -> N
  std::optional<IVec> abCharacter; // abelianization pairing vector
  std::optional<IVec> centralVector;
  std::vector<IMat> relWeylGens;   // relative Weyl group action on N
  bool iwahori = true;
  bool splitGroup = false;         // splits over breve Q_p with full translation lattice
  long expectedDimIwahori = 0;     // 1 + sum of split ranks (0 = unknown)
  std::vector<std::string> hilbertNames;  // optional canonical names, set lazily

  RationalCone sigmaCone() const;      // positive hull of the orbit
  AffineSemigroup semigroupMax() const;   // sigma^vee cap X^*
  AffineSemigroup semigroupFree() const;  // a free sub-semigroup choice
  LangMap lang() const;

  // e * (every orbit vector) integral, orbit stable under sigma and the
  // relative Weyl generators. Throws on violation.
  void validate() const;

  // names for the Hilbert basis of semigroupMax(), parallel to columns
  std::vector<std::string> hilbertBasisNames() const;
};

// <phi(lambda^diamond), chi> as an exact rational.
Rat pairing(const LMPair& pair, const QVec& lambdaImage, const IVec& chi);

// Averaged pairing from a coinvariant class of an explicit Galois lattice
// through a projection phi (Iwahori: identity).
Rat pairing(const GaloisLattice& M, const IMat& phi, const IVec& lambda, const IVec& chi);

// m_{mu'} = e * <mu', chi> per orbit column; throws if a value is not an
// integer (corrupted pair data).
std::vector<Int> divisorMultiplicities(const LMPair& pair, const IVec& chi);

bool abNondegenerate(const LMPair& pair);
bool strictlyConvex(const LMPair& pair);

struct DimReport {
  long dim = 0;
  bool matchesIwahoriFormula = false;
};
DimReport dimTmu(const LMPair& pair);

struct R1Verdict {
  QVec orbitVector;
  IVec scaled;      // e * phi(mu')
  bool divisible = false;
};
struct R1Report {
  std::vector<R1Verdict> verdicts;
  bool pass = false;  // no orbit vector divisible
};
R1Report r1Criterion(const LMPair& pair);

struct Classification {
  bool simplicial = false;
  bool free_ = false;
  bool drinfeldCase = false;
};
Classification classify(const LMPair& pair);

// Catalog constructors (paper coordinates).
LMPair makeGL(int n, int j, long p = 3);
LMPair makeGSp(int g, long p = 3);
LMPair makeGSpin(int g, long p = 3);
LMPair makeDivisionAlgebra(int d, long p = 3);
LMPair makeResRamifiedGL(int n, const std::vector<long>& s, long p = 3);
LMPair makeGURamified(int n, int r, int s, long p = 3);
LMPair makeGLTwoStepParahoric(int n, int r, long p = 3);
LMPair makeHilbertSiegel(int g, int d, long p = 3);
LMPair makeResGLRamifiedOrder4(int n, long p = 3);

// "gl:4:2", "gsp:3", "res-gl:3:5,2,1", "gu:3:2,1", "div:3",
// "gl-2step:4:2", "hs:2:2", "res-gl-ram4:2".
LMPair catalogPair(const std::string& grammar, long p = 3);

// All catalog entries exercised by the test/acceptance sweeps.
std::vector<LMPair> catalogSweep(long p = 3);

}  // namespace wt
