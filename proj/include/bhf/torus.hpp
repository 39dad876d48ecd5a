// Hardcoded genus-one data: the torus algebra, the AA and DD bimodules of the
// identity, the four Dehn-twist DA bimodules with their gradings, the solid
// torus modules, the mapping-class-word pipeline, and the duality example.
#pragma once

#include "bhf/bimodule.hpp"
#include "bhf/gradedcheck.hpp"
#include "bhf/morcx.hpp"
#include "bhf/simplify.hpp"

namespace bhf {

// The i = 0 summand of the strands algebra of the unique genus-one circle,
// with named generators iota0, iota1, rho1, rho2, rho3, rho12, rho23, rho123.
struct TorusAlgebra {
  AlgebraRef alg;          // A(Z, 0)
  AlgebraRef alg_rev;      // A(-Z, 0): the sigma-labelled copy
  int iota[2];             // idempotent generators
  int rho1, rho2, rho3, rho12, rho23, rho123;
  int idem[2];             // idempotent ids

  int rho(const std::string& word) const;  // "1", "12", "123", ...
};

const TorusAlgebra& torus_algebra();

Bimodule cfaa_id();
Bimodule cfdd_id_big();
Bimodule cfdd_id_small();

enum class DehnTwist { M, MInv, L, LInv };
DehnTwist twist_from_letter(char c);  // m, M, l, L
DehnTwist twist_inverse(DehnTwist t);

Bimodule dehn_twist_DA(DehnTwist t);
DAGradedAssignment dehn_twist_grading(DehnTwist t, const Bimodule& b);

enum class SolidTorusFraming { Zero, MinusOneM, MinusOneN };
Bimodule solid_torus_D(SolidTorusFraming f);
Bimodule solid_torus_A();

// left-to-right box of the Dehn-twist factors with a simplify after each step
Bimodule mcg_word_bimodule(const std::vector<DehnTwist>& word, bool simplify_steps = true);

struct DualityExampleReport {
  bool ok = true;
  int raw_basis = 0;
  int homology_rank = 0;
  bool relations_ok = false;
  bool pattern_ok = false;  // simplified module matches the solid torus rule
  std::string detail;
};

DualityExampleReport duality_example_check();

}  // namespace bhf
