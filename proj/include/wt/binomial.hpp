#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wt/intlinalg.hpp"

namespace wt {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Monomials are exponent vectors; all ideals here are generated by pure
// differences of monomials, and every operation below stays inside that
// class (S-pairs and reductions of binomials are binomials).
using Expo = std::vector<std::int32_t>;

struct Binomial {
  Expo plus;   // leading monomial w.r.t. the current order
  Expo minus;  // trailing monomial
};

// Graded reverse lexicographic order: compare weighted degree first, then
// revlex with a configurable variable permutation (perm.back() is the
// cheapest variable, which is what the saturation steps need).
struct MonomialOrder {
  std::vector<std::int64_t> weights;  // strictly positive on every variable
  std::vector<int> perm;              // variable order; default identity

  int compare(const Expo& a, const Expo& b) const;  // -1, 0, 1
};

struct ToricIdealResult {
  std::vector<Binomial> groebner;          // reduced GB, canonical order
  std::vector<Binomial> minimalGenerators; // canonical minimal generating set
  long minimalGeneratorCount = 0;
};

// Saturated lattice ideal (= toric ideal) of the matrix whose columns are
// the monoid generators. `budget` caps the number of S-pair reductions
// across the whole computation; exceeding it throws BudgetExceeded.
ToricIdealResult toricIdeal(const IMat& columns, std::int64_t budget = 50'000'000);

// Ideal membership of a binomial, given a Groebner basis under `ord`.
bool reducesToZero(const Binomial& b, const std::vector<Binomial>& basis,
                   const MonomialOrder& ord);

// Exponent-kernel membership: columns * plus == columns * minus.
bool inExponentKernel(const IMat& columns, const Binomial& b);

}  // namespace wt
