// Massey products on the homology of a strands algebra via the explicit
// defining-system recursion.
#pragma once

#include "bhf/strands.hpp"

namespace bhf {

struct NotAdmissible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// F2 chain as a sorted generator list.
using Chain = std::vector<int>;

Chain chain_product(const Algebra& a, const Chain& x, const Chain& y);
Chain chain_differential(const Algebra& a, const Chain& x);

// Homology class of a homogeneous cycle: the block index in hom, or -1 when
// the cycle is a boundary. Throws when the element is not a cycle.
int class_of(const Algebra& a, const AlgebraHomology& hom, const Chain& x);

// Massey product of the given homology classes (block indices). Verifies
// Massey admissibility and returns the block index of the product class
// (-1 for the zero class). With reversed_pivots the defining-system solves
// pick complementary solutions; the class must not change.
int massey_product(const Algebra& a, const AlgebraHomology& hom, const std::vector<int>& classes,
                   bool reversed_pivots = false);

}  // namespace bhf
