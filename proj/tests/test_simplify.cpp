#include "bhf/simplify.hpp"
#include "bhf/torus.hpp"
#include "doctest.h"

using namespace bhf;

TEST_CASE("structures without cancellable arrows are unchanged") {
  Bimodule small = cfdd_id_small();
  Simplified s = simplify(small);
  CHECK(s.reduced.num_gens() == 2);
  CHECK(s.reduced.table() == small.table());
  CHECK(s.verify());
}

TEST_CASE("cancellation data verifies on the big DD model") {
  Simplified s = simplify(cfdd_id_big());
  CHECK(s.reduced.num_gens() == 2);
  CHECK(check_structure(s.reduced).ok);
  CHECK(s.verify());
}

TEST_CASE("cancellation on a DA box product verifies") {
  Bimodule prod = box(dehn_twist_DA(DehnTwist::M), dehn_twist_DA(DehnTwist::MInv));
  CHECK(check_structure(prod).ok);
  Simplified s = simplify(prod);
  CHECK(s.reduced.num_gens() == 2);
  CHECK(check_structure(s.reduced).ok);
  CHECK(s.verify());
}

TEST_CASE("morphism complexes detect the explicit solid torus isomorphism") {
  // f: N -> M, f(c) = a, f(d) = b + rho2 (x) a is a cycle
  const TorusAlgebra& t = torus_algebra();
  Bimodule m = solid_torus_D(SolidTorusFraming::MinusOneM);
  Bimodule n = solid_torus_D(SolidTorusFraming::MinusOneN);
  MorphismTable f;
  int c = n.gen_by_name("c"), d = n.gen_by_name("d");
  int a = m.gen_by_name("a"), b = m.gen_by_name("b");
  f.toggle(EntryKey{c, {}, {}}, Term{t.iota[0], a, -1});
  f.toggle(EntryKey{d, {}, {}}, Term{t.iota[1], b, -1});
  f.toggle(EntryKey{d, {}, {}}, Term{t.rho2, a, -1});
  MorphismTable df = morphism_differential(n, m, f);
  CHECK(df.is_zero());
}
