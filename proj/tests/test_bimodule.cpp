#include "bhf/bimodule.hpp"
#include "bhf/torus.hpp"
#include "doctest.h"

using namespace bhf;

TEST_CASE("identity DA bimodule") {
  const TorusAlgebra& t = torus_algebra();
  Bimodule id = identity_DA(t.alg);
  CHECK(id.num_gens() == 2);
  CHECK(check_structure(id).ok);
  CHECK(is_bounded(id, BoundFlavor::Left) == Bounded::Yes);
  CHECK(is_bounded(id, BoundFlavor::Right) == Bounded::Yes);
  CHECK(is_bounded(id, BoundFlavor::Operational) == Bounded::No);
}

TEST_CASE("algebra as AA bimodule") {
  const TorusAlgebra& t = torus_algebra();
  Bimodule aa = algebra_AA(t.alg);
  CHECK(check_structure(aa).ok);
  // m(iota0, rho1) on the right gives rho1
  EntryKey key{t.iota[0], {}, {t.rho1}};
  CHECK(aa.lookup(key) == std::vector<Term>{Term{-1, t.rho1, -1}});
  Bimodule aa2 = algebra_AA(std::make_shared<Algebra>(standard_pmc(StandardKind::Split, 2), 0, true));
  CHECK(check_structure(aa2, 2, 2).ok);
}

TEST_CASE("bar resolution is a bounded DD structure") {
  const TorusAlgebra& t = torus_algebra();
  Bimodule bar = bar_DD(t.alg, 4);
  CHECK(check_structure(bar).ok);
  CHECK(is_bounded(bar, BoundFlavor::Operational) == Bounded::Yes);
  // delta[rho1|rho2] contains 1 (x) [rho12] (x) 1
  int w12 = bar.gen_by_name("[" + t.alg->gen_name(t.rho1) + "|" + t.alg->gen_name(t.rho2) + "]");
  int m12 = bar.gen_by_name("[" + t.alg->gen_name(t.rho12) + "]");
  REQUIRE(w12 >= 0);
  REQUIRE(m12 >= 0);
  bool found = false;
  for (const Term& term : bar.lookup(EntryKey{w12, {}, {}}))
    if (term.dst == m12 && t.alg->is_idempotent(term.lout) && t.alg->is_idempotent(term.rout)) found = true;
  CHECK(found);
}

TEST_CASE("identity DA is a box identity on both sides") {
  const TorusAlgebra& t = torus_algebra();
  Bimodule id = identity_DA(t.alg);
  Bimodule n = solid_torus_D(SolidTorusFraming::MinusOneM);
  // [Id] box N = N for a left type D structure
  Bimodule prod = box(id, n);
  REQUIRE(prod.num_gens() == n.num_gens());
  for (const auto& [key, terms] : n.table()) {
    EntryKey k2 = key;
    k2.src = key.src;  // generator order is preserved by pairing
    CHECK(prod.lookup(k2) == terms);
  }
  // M box [Id] = M for a right A module
  Bimodule a = solid_torus_A();
  Bimodule id_rev = identity_DA(t.alg_rev);
  Bimodule prod2 = box(a, id_rev);
  CHECK(prod2.num_gens() == 1);
  EntryKey probe{0, {}, {}};
  auto s = [&](int x, int y2) { return t.alg_rev->a_of_chords({{x, y2}}).front(); };
  probe.right_in = {s(3, 4), s(2, 4), s(2, 3)};
  CHECK(prod2.lookup(probe) == std::vector<Term>{Term{-1, 0, -1}});
}

TEST_CASE("cfdd identity of the torus matches the two generator model") {
  const TorusAlgebra& t = torus_algebra();
  Bimodule dd = cfdd_identity(t.alg, t.alg_rev);
  Bimodule small = cfdd_id_small();
  CHECK(dd.num_gens() == 2);
  CHECK(check_structure(dd).ok);
  // literal comparison under the canonical generator ordering
  REQUIRE(dd.num_gens() == small.num_gens());
  for (int g = 0; g < dd.num_gens(); ++g) {
    CHECK(dd.gen(g).left_idem == small.gen(g).left_idem);
    CHECK(dd.gen(g).right_idem == small.gen(g).right_idem);
  }
  CHECK(dd.table() == small.table());
}

TEST_CASE("cfdd identity at genus two satisfies the structure equation") {
  PointedMatchedCircle z = standard_pmc(StandardKind::Split, 2);
  auto az = std::make_shared<Algebra>(z, 0);
  auto bz = std::make_shared<Algebra>(z.reversed(), 0);
  Bimodule dd = cfdd_identity(az, bz);
  CHECK(dd.num_gens() == 6);  // C(4,2) complementary idempotent pairs
  CHECK(check_structure(dd).ok);
}

TEST_CASE("opposite is an involution and flips solid torus differentials") {
  Bimodule n = solid_torus_D(SolidTorusFraming::Zero);
  Bimodule opp = opposite(n);
  CHECK(opp.left_tag() == Tag::None);
  CHECK(opp.right_tag() == Tag::D);
  // delta(x*) = x* (x) rho12-reversed; on the symmetric torus circle the
  // reversal of rho12 is again the [1,3] chord
  const auto& ra = opp.right_alg();
  int r12 = ra->a_of_chords({{1, 3}}).front();
  REQUIRE(opp.num_gens() == 1);
  CHECK(opp.lookup(EntryKey{0, {}, {}}) == std::vector<Term>{Term{-1, 0, r12}});
  Bimodule back = opposite(opp);
  CHECK(back.num_gens() == n.num_gens());
  CHECK(back.table() == n.table());
  // structure holds on a DD example
  Bimodule odd = opposite(cfdd_id_small());
  CHECK(check_structure(odd).ok);
}

TEST_CASE("boundedness flavors on the solid torus models") {
  CHECK(is_bounded(solid_torus_D(SolidTorusFraming::MinusOneM), BoundFlavor::Operational) == Bounded::No);
  CHECK(is_bounded(solid_torus_D(SolidTorusFraming::MinusOneN), BoundFlavor::Operational) == Bounded::Yes);
  Bimodule a = solid_torus_A();
  CHECK(is_bounded(a, BoundFlavor::Operational) == Bounded::No);
  Bimodule small = cfdd_id_small();
  CHECK(is_bounded(small, BoundFlavor::Operational) == Bounded::No);
  CHECK(is_bounded(small, BoundFlavor::Left) == Bounded::Yes);
  CHECK(is_bounded(small, BoundFlavor::Right) == Bounded::Yes);
  Bimodule big = cfdd_id_big();
  CHECK(is_bounded(big, BoundFlavor::Operational) == Bounded::Yes);
}

TEST_CASE("negative control: a dropped entry breaks the structure equation") {
  Bimodule aa = cfaa_id();
  CHECK(check_structure(aa).ok);
  const TorusAlgebra& t = torus_algebra();
  int y = aa.gen_by_name("y");
  int x = aa.gen_by_name("x");
  auto s2 = t.alg_rev->a_of_chords({{2, 3}}).front();
  aa.add_entry(EntryKey{y, {t.rho2}, {s2}}, Term{-1, x, -1});  // toggles it off
  CHECK(!check_structure(aa).ok);
}

TEST_CASE("bimodule serialization round trip") {
  Bimodule small = cfdd_id_small();
  std::string j = small.to_json();
  Bimodule back = Bimodule::from_json(j, nullptr, nullptr);
  CHECK(back.num_gens() == small.num_gens());
  CHECK(back.table() == small.table());
  Bimodule a = solid_torus_A();
  Bimodule aback = Bimodule::from_json(a.to_json(), nullptr, nullptr);
  CHECK(aback.rules().size() == 1);
  EntryKey probe{0, {}, {}};
  const TorusAlgebra& t = torus_algebra();
  auto s = [&](int x, int y2) { return t.alg_rev->a_of_chords({{x, y2}}).front(); };
  probe.right_in = {s(3, 4), s(2, 3)};
  CHECK(aback.lookup(probe).size() == 1);
}
