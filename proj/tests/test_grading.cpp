#include "bhf/grading.hpp"
#include "bhf/torus.hpp"
#include "doctest.h"

using namespace bhf;

TEST_CASE("gr-prime of the torus chords") {
  const TorusAlgebra& t = torus_algebra();
  const Algebra& a = *t.alg;
  CHECK(a.gr_prime(t.rho1) == GradingElement{-1, {1, 0, 0}});
  CHECK(a.gr_prime(t.rho2) == GradingElement{-1, {0, 1, 0}});
  CHECK(a.gr_prime(t.rho3) == GradingElement{-1, {0, 0, 1}});
  CHECK(a.gr_prime(t.iota[0]) == GradingElement{0, {0, 0, 0}});
  CHECK(a.gr_prime(t.rho12) == GradingElement{-1, {1, 1, 0}});
}

TEST_CASE("group laws and the product grading identity") {
  const TorusAlgebra& t = torus_algebra();
  const Algebra& a = *t.alg;
  GradingElement g12 = gp_mul(a.gr_prime(t.rho1), a.gr_prime(t.rho2));
  CHECK(g12 == GradingElement{-1, {1, 1, 0}});
  // lambda is central; inverses work
  GradingElement lam = gp_lambda(4);
  for (int g : {t.rho1, t.rho23, t.rho123}) {
    CHECK(gp_mul(lam, a.gr_prime(g)) == gp_mul(a.gr_prime(g), lam));
    CHECK(gp_mul(a.gr_prime(g), gp_inv(a.gr_prime(g))) == gp_identity(4));
  }
  // associativity on a sample triple
  GradingElement x = a.gr_prime(t.rho1), y = a.gr_prime(t.rho23), z = a.gr_prime(t.rho3);
  CHECK(gp_mul(gp_mul(x, y), z) == gp_mul(x, gp_mul(y, z)));
}

TEST_CASE("gradings are multiplicative and drop by lambda under d") {
  std::vector<Algebra> algebras;
  algebras.emplace_back(standard_pmc(StandardKind::Torus, 1), 0);
  algebras.emplace_back(standard_pmc(StandardKind::Antipodal, 2), 0);
  for (const Algebra& a : algebras) {
    for (int g = 0; g < a.dim(); ++g) {
      CHECK(gp_parity_ok(a.gr_prime(g)));
      for (int d : a.differential(g))
        CHECK(a.gr_prime(d) == gp_mul(gp_lambda(a.circle().num_points(), -1), a.gr_prime(g)));
      // Maslov non-positivity with equality only for idempotents
      if (a.is_idempotent(g))
        CHECK(a.gr_prime(g).maslov2 == 0);
      else
        CHECK(a.gr_prime(g).maslov2 < 0);
    }
    int step = a.dim() > 40 ? 5 : 1;
    for (int x = 0; x < a.dim(); x += step)
      for (int y = 0; y < a.dim(); y += step)
        for (int p : a.product(x, y))
          CHECK(a.gr_prime(p) == gp_mul(a.gr_prime(x), a.gr_prime(y)));
  }
}

TEST_CASE("torus refinement data reproduces the refined gradings") {
  const TorusAlgebra& t = torus_algebra();
  RefinementData psi = torus_refinement();
  psi.validate(*t.alg);
  CHECK(psi.refine(*t.alg, t.rho1) == GradingElement{0, {0, 0, 0}});
  CHECK(psi.refine(*t.alg, t.rho2) == GradingElement{-1, {1, 1, 0}});
  CHECK(psi.refine(*t.alg, t.rho3) == GradingElement{0, {-1, 0, 1}});
  CHECK(psi.refine(*t.alg, t.rho23) == GradingElement{1, {0, 1, 1}});
  CHECK(psi.refine(*t.alg, t.rho12) == GradingElement{-1, {1, 1, 0}});
}

TEST_CASE("refinement failures are detected") {
  const TorusAlgebra& t = torus_algebra();
  RefinementData bad = torus_refinement();
  bad.psi[{1}] = GradingElement{0, {0, 1, 0}};  // not compatible
  CHECK_THROWS_AS(bad.validate(*t.alg), NotInSmallGroup);
}

TEST_CASE("refined gradings land in the small group") {
  const TorusAlgebra& t = torus_algebra();
  RefinementData psi = torus_refinement();
  for (int g = 0; g < t.alg->dim(); ++g) CHECK(in_small_group(t.alg->circle(), psi.refine(*t.alg, g)));
  // gr' of rho2 is not in G (its class is not in the kernel)
  CHECK(!in_small_group(t.alg->circle(), t.alg->gr_prime(t.rho2)));
}

TEST_CASE("bounded subgroup search") {
  BiGrading id = bi_identity(4, 4);
  BiGrading w = id;
  w.maslov2 = 4;
  w.left_alpha = {1, 0, 0};
  CHECK(in_subgroup_bfs(bi_mul(w, w), {w}, 6));
  BiGrading other = id;
  other.right_alpha = {0, 0, 1};
  CHECK(!in_subgroup_bfs(other, {w}, 4));
}
