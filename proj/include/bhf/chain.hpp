// Finite chain complexes over F2 with exact homology.
#pragma once

#include <string>
#include <vector>

#include "bhf/f2.hpp"

namespace bhf {

struct ChainComplex {
  std::vector<std::string> basis;
  // differential[i] = sorted indices hit by basis element i
  std::vector<std::vector<int>> differential;

  int dim() const { return static_cast<int>(basis.size()); }
  bool d_squared_zero() const;
  int homology_rank() const;
  // representatives of a homology basis, as index lists (fixed pivot rule)
  std::vector<std::vector<int>> homology_representatives() const;
};

}  // namespace bhf
