// Lambda-degree verification: every structure entry must change the grading
// by exactly one power of lambda after the algebra-coefficient contributions,
// up to words in the declared periodic subgroup.
#pragma once

#include <functional>

#include "bhf/bimodule.hpp"
#include "bhf/grading.hpp"

namespace bhf {

struct GradingViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gradings for a DA structure presented on a single group slot (the twisted
// G_f picture for mapping-class bimodules): entry (x; b_1..b_j) -> a (x) y
// must satisfy gr(y) = lambda^{j-1} gr(a)^{-1} gr(x) f(gr(b_1))...f(gr(b_j))
// modulo the periodic words.
struct DAGradedAssignment {
  std::vector<GradingElement> gen_grading;
  std::function<GradingElement(const GradingElement&)> twist;  // identity if null
  const RefinementData* refinement = nullptr;                  // refine coefficients when set
  std::vector<GradingElement> periodic;
};

void check_lambda_degree_DA(const Bimodule& b, const DAGradedAssignment& assignment, int bfs_depth = 6);

// Gradings for a DD structure: pairs in G'(Z_L) x_lambda G'(Z_R); entry
// x -> a (x) y (x) b must satisfy
// gr(y) = lambda^{-1} L(gr'(a))^{-1} gr(x) R(gr'(b))^{-1} modulo periodic
// words.
struct DDGradingAssignment {
  std::vector<BiGrading> gen_grading;
  std::vector<BiGrading> periodic;
};

void check_lambda_degree_DD(const Bimodule& b, const DDGradingAssignment& assignment, int bfs_depth = 6);

// Derives a DD assignment from the structure itself: fixes the base
// generator's grading at the identity, propagates along one spanning tree of
// differential components, and returns the defects of the remaining
// components as the periodic words.
DDGradingAssignment dd_assignment_from_periodic_data(const Bimodule& b, int base_gen = 0);

}  // namespace bhf
