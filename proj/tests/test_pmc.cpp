#include "bhf/pmc.hpp"
#include "doctest.h"

using namespace bhf;

TEST_CASE("torus circle is valid") {
  PointedMatchedCircle z(4, {{1, 3}, {2, 4}});
  CHECK(z.genus() == 1);
  CHECK(z.pair_of(0) == z.pair_of(2));
  CHECK(z.pair_of(1) == z.pair_of(3));
}

TEST_CASE("nested matching disconnects under surgery") {
  CHECK_THROWS_AS(PointedMatchedCircle(4, {{1, 2}, {3, 4}}), SurgeryDisconnects);
}

TEST_CASE("empty circle is valid") {
  PointedMatchedCircle z(0, {});
  CHECK(z.genus() == 0);
}

TEST_CASE("involution failures are rejected") {
  CHECK_THROWS_AS(PointedMatchedCircle(4, {{1, 1}, {2, 4}}), NotAnInvolution);
  CHECK_THROWS_AS(PointedMatchedCircle(4, {{1, 2}, {1, 4}}), NotAnInvolution);
  CHECK_THROWS_AS(PointedMatchedCircle(6, {{1, 3}, {2, 4}}), BadGenus);
}

TEST_CASE("reverse is an involution and fixes the torus") {
  PointedMatchedCircle z = standard_pmc(StandardKind::Torus, 1);
  CHECK(z.reversed() == z);
  PointedMatchedCircle split = standard_pmc(StandardKind::Split, 2);
  CHECK(split.reversed().reversed() == split);
  CHECK(split.reversed() == split);  // split is symmetric under reversal
}

TEST_CASE("connect sums") {
  PointedMatchedCircle t = standard_pmc(StandardKind::Torus, 1);
  PointedMatchedCircle split2 = standard_pmc(StandardKind::Split, 2);
  CHECK(connect_sum(t, t) == split2);
  PointedMatchedCircle e(0, {});
  CHECK(connect_sum(t, e) == t);
  CHECK(connect_sum(t, split2).genus() == 3);
}

TEST_CASE("standard families") {
  CHECK(standard_pmc(StandardKind::Torus, 1).canonical_matching() ==
        std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  PointedMatchedCircle a2 = standard_pmc(StandardKind::Antipodal, 2);
  for (int i = 1; i <= 4; ++i) CHECK(a2.partner(i - 1) == i - 1 + 4);
  CHECK(standard_pmc(StandardKind::Split, 1) == standard_pmc(StandardKind::Antipodal, 1));
  CHECK(standard_pmc(StandardKind::Split, 1) == standard_pmc(StandardKind::Torus, 1));
  CHECK_THROWS_AS(standard_pmc(StandardKind::Torus, 2), BadGenus);
  CHECK(standard_pmc(StandardKind::Split, 2) != standard_pmc(StandardKind::Antipodal, 2));
}

TEST_CASE("json round trip") {
  PointedMatchedCircle z = standard_pmc(StandardKind::Antipodal, 2);
  CHECK(PointedMatchedCircle::from_json(z.to_json()) == z);
  CHECK(parse_pmc_spec("torus") == standard_pmc(StandardKind::Torus, 1));
  CHECK(parse_pmc_spec("split:2") == standard_pmc(StandardKind::Split, 2));
  CHECK(parse_pmc_spec("antipodal:3") == standard_pmc(StandardKind::Antipodal, 3));
}
