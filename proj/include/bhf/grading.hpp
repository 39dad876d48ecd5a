// The unrefined grading group G'(Z) (half-integer Maslov component over the
// interval-multiplicity lattice, with the twisted multiplication), grading
// refinement data, and the paired grading group for two-sided structures.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bhf/strands.hpp"

namespace bhf {

struct NotInSmallGroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// m(alpha, d beta) doubled: the correction term of the G' multiplication.
long long twist2(const std::vector<int>& alpha_first, const std::vector<int>& alpha_second);

GradingElement gp_identity(int num_points);
GradingElement gp_lambda(int num_points, long long power = 1);
GradingElement gp_mul(const GradingElement& a, const GradingElement& b);
GradingElement gp_inv(const GradingElement& a);
GradingElement gp_pow(const GradingElement& a, long long n);

// Index-two-subgroup parity constraint of G'(Z).
bool gp_parity_ok(const GradingElement& g);

// Membership in G(Z) < G'(Z): the spin-c part must be annihilated by M_* d.
bool in_small_group(const PointedMatchedCircle& z, const GradingElement& g);

// R: G'(Z) -> G'(-Z), (j, alpha) -> (j, r_* alpha); a group anti-homomorphism.
GradingElement gp_reverse(const GradingElement& g);

// Grading refinement data: one correction element per idempotent subset.
struct RefinementData {
  std::map<std::vector<int>, GradingElement> psi;

  const GradingElement& at(const std::vector<int>& idem) const;
  // gr_psi(a) = psi(s) gr'(a) psi(t)^{-1}
  GradingElement refine(const Algebra& a, int gen) const;
  // throws NotInSmallGroup when some refined generator grading leaves G(Z)
  void validate(const Algebra& a) const;
};

// The standard refinement data for the torus algebra.
RefinementData torus_refinement();

// Element of G'(Z_L) x_lambda G'(Z_R): one glued Maslov component with two
// spin-c parts.
struct BiGrading {
  long long maslov2 = 0;
  std::vector<int> left_alpha;
  std::vector<int> right_alpha;
  bool operator==(const BiGrading&) const = default;
  bool operator<(const BiGrading& o) const;
};

BiGrading bi_identity(int left_points, int right_points);
BiGrading bi_mul(const BiGrading& a, const BiGrading& b);
BiGrading bi_inv(const BiGrading& a);
BiGrading bi_from_left(const GradingElement& g, int right_points);
BiGrading bi_from_right(const GradingElement& g, int left_points);

// Bounded-depth membership of g in the subgroup generated by `words`
// (products of generators and inverses up to the given length).
bool in_subgroup_bfs(const BiGrading& g, const std::vector<BiGrading>& words, int depth = 6);

}  // namespace bhf
