// Morphism complexes between D-sided structures, and the duality functor
// realized as the Mor complex out of the diagonal DD bimodule, carrying its
// residual algebra action.
#pragma once

#include "bhf/bimodule.hpp"
#include "bhf/chain.hpp"
#include "bhf/gradedcheck.hpp"
#include "bhf/simplify.hpp"

namespace bhf {

// Basis morphism of Mor(X, Y) between two left-D structures over the same
// algebra: a single component src |-> coef (x) dst.
struct MorBasisElt {
  int src;   // generator of X
  int coef;  // algebra basis element
  int dst;   // generator of Y
  auto operator<=>(const MorBasisElt&) const = default;
};

struct MorComplex {
  std::vector<MorBasisElt> basis;
  ChainComplex cx;  // differential over the basis above
  int index_of(const MorBasisElt& m) const;
};

// Mor over the shared left-D side of X and Y (their other sides must be
// empty). Entries follow the type D morphism-complex differential.
MorComplex mor_left_D(const Bimodule& x, const Bimodule& y);

// Mor between two DD structures over both actions: components carry a
// coefficient pair.
struct MorDDBasisElt {
  int src;
  int lcoef;
  int rcoef;
  int dst;
  auto operator<=>(const MorDDBasisElt&) const = default;
};

struct MorDDComplex {
  std::vector<MorDDBasisElt> basis;
  ChainComplex cx;
};

MorDDComplex mor_DD(const Bimodule& x, const Bimodule& y);

// rank of the degree-0 part of H(mor_DD(x,x)) under the assignment
int mor_DD_degree0_homology_rank(const Bimodule& x, const DDGradingAssignment& grading);

// The dualizing Mor module: for N a left type D structure over A = A(Z),
// computes Mor over the A-side from the B-expanded diagonal DD bimodule to N,
// with the residual right B = A(-Z) action. Output tags: (None, A) over B.
struct DualBasisElt {
  int b;  // basis element of A(-Z), the expansion coefficient
  int d;  // generator of the diagonal DD bimodule
  int a;  // coefficient in A(Z)
  int n;  // generator of N
  auto operator<=>(const DualBasisElt&) const = default;
};

struct DualizeResult {
  Bimodule module;  // right A-infinity module over A(-Z)
  std::vector<DualBasisElt> basis;
  int raw_dim = 0;
  int homology_rank = 0;
  int index_of(const DualBasisElt& e) const;
};

DualizeResult dualize(const Bimodule& n, const AlgebraRef& az, const AlgebraRef& aminusz);

}  // namespace bhf
