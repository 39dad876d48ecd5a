#include <set>

#include "bhf/strands.hpp"
#include "bhf/torus.hpp"
#include "doctest.h"

using namespace bhf;

namespace {

std::vector<int> prod(const Algebra& a, int x, int y) { return a.product(x, y); }

}  // namespace

TEST_CASE("torus algebra basis and named generators") {
  const TorusAlgebra& t = torus_algebra();
  CHECK(t.alg->dim() == 8);
  // one-dimensional extreme summand
  Algebra low(standard_pmc(StandardKind::Torus, 1), -1);
  CHECK(low.dim() == 1);
  CHECK(low.is_idempotent(0));
}

TEST_CASE("torus products match the multiplication table") {
  const TorusAlgebra& t = torus_algebra();
  const Algebra& a = *t.alg;
  CHECK(prod(a, t.rho1, t.rho2) == std::vector<int>{t.rho12});
  CHECK(prod(a, t.rho2, t.rho3) == std::vector<int>{t.rho23});
  CHECK(prod(a, t.rho1, t.rho23) == std::vector<int>{t.rho123});
  CHECK(prod(a, t.rho12, t.rho3) == std::vector<int>{t.rho123});
  CHECK(prod(a, t.rho2, t.rho1).empty());
  CHECK(prod(a, t.rho3, t.rho2).empty());
  CHECK(prod(a, t.rho3, t.rho1).empty());
  // iota_0 rho_1 iota_1 = rho_1
  auto step1 = prod(a, t.iota[0], t.rho1);
  REQUIRE(step1 == std::vector<int>{t.rho1});
  CHECK(prod(a, t.rho1, t.iota[1]) == std::vector<int>{t.rho1});
  CHECK(prod(a, t.rho1, t.iota[0]).empty());
  // all torus differentials vanish
  for (int g = 0; g < a.dim(); ++g) CHECK(a.differential(g).empty());
}

TEST_CASE("a_of_chords names the torus generators") {
  const TorusAlgebra& t = torus_algebra();
  CHECK(t.alg->a_of_chords({{1, 2}}) == std::vector<int>{t.rho1});
  CHECK(t.alg->a_of_chords({{1, 4}}) == std::vector<int>{t.rho123});
  CHECK(t.alg->a_of_chords({{1, 2}, {2, 3}}).empty());  // shared endpoint
}

TEST_CASE("homology classes of torus generators") {
  const TorusAlgebra& t = torus_algebra();
  CHECK(t.alg->homology_class(t.rho2) == std::vector<int>{0, 1, 0});
  CHECK(t.alg->homology_class(t.iota[0]) == std::vector<int>{0, 0, 0});
  CHECK(t.alg->homology_class(t.rho123) == std::vector<int>{1, 1, 1});
}

TEST_CASE("d squared, Leibniz and associativity at genus <= 2") {
  std::vector<Algebra> algebras;
  algebras.emplace_back(standard_pmc(StandardKind::Torus, 1), 0);
  algebras.emplace_back(standard_pmc(StandardKind::Torus, 1), 1);
  algebras.emplace_back(standard_pmc(StandardKind::Split, 2), -1);
  algebras.emplace_back(standard_pmc(StandardKind::Antipodal, 2), 0);
  for (const Algebra& a : algebras) {
    for (int g = 0; g < a.dim(); ++g) {
      // d(dg) = 0
      std::set<int> acc;
      for (int d1 : a.differential(g))
        for (int d2 : a.differential(d1)) {
          auto it = acc.find(d2);
          if (it == acc.end())
            acc.insert(d2);
          else
            acc.erase(it);
        }
      CHECK(acc.empty());
    }
    // Leibniz on a sample of pairs
    int step = a.dim() > 40 ? 7 : 1;
    for (int x = 0; x < a.dim(); x += step)
      for (int y = 0; y < a.dim(); y += step) {
        std::set<int> lhs, rhs;
        auto tog = [](std::set<int>& s, int v) {
          auto it = s.find(v);
          if (it == s.end())
            s.insert(v);
          else
            s.erase(it);
        };
        for (int p : a.product(x, y))
          for (int d : a.differential(p)) tog(lhs, d);
        for (int d : a.differential(x))
          for (int p : a.product(d, y)) tog(rhs, p);
        for (int d : a.differential(y))
          for (int p : a.product(x, d)) tog(rhs, p);
        CHECK(lhs == rhs);
      }
    // associativity on a sample of triples
    int tstep = a.dim() > 40 ? 11 : 1;
    for (int x = 0; x < a.dim(); x += tstep)
      for (int y = 0; y < a.dim(); y += tstep)
        for (int z = 0; z < a.dim(); z += tstep) {
          std::set<int> lhs, rhs;
          auto tog = [](std::set<int>& s, int v) {
            auto it = s.find(v);
            if (it == s.end())
              s.insert(v);
            else
              s.erase(it);
          };
          for (int p : a.product(x, y))
            for (int q : a.product(p, z)) tog(lhs, q);
          for (int p : a.product(y, z))
            for (int q : a.product(x, p)) tog(rhs, q);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("direct product rule agrees with the E-expansion") {
  std::vector<Algebra> algebras;
  algebras.emplace_back(standard_pmc(StandardKind::Torus, 1), 0);
  algebras.emplace_back(standard_pmc(StandardKind::Split, 2), 0);
  for (const Algebra& a : algebras) {
    for (int x = 0; x < a.dim(); ++x)
      for (int y = 0; y < a.dim(); ++y) {
        auto direct = a.direct_product(a.gen(x), a.gen(y));
        const auto& table = a.product(x, y);
        if (!direct) {
          CHECK(table.empty());
        } else {
          int id = a.index_of(*direct);
          CHECK(table == std::vector<int>{id});
        }
      }
  }
}

TEST_CASE("torus homology is the whole algebra") {
  const TorusAlgebra& t = torus_algebra();
  AlgebraHomology h = algebra_homology(*t.alg);
  CHECK(h.total_rank() == 8);
  Algebra top(standard_pmc(StandardKind::Torus, 1), 1);
  AlgebraHomology htop = algebra_homology(top);
  CHECK(htop.total_rank() == 1);
}

TEST_CASE("A-prime quotient of the torus is the whole algebra") {
  Algebra aprime(standard_pmc(StandardKind::Torus, 1), 0, true);
  CHECK(aprime.dim() == 8);
}

TEST_CASE("A-prime quotient at genus two is smaller with equal homology") {
  Algebra full(standard_pmc(StandardKind::Split, 2), 0);
  Algebra quot(standard_pmc(StandardKind::Split, 2), 0, true);
  CHECK(quot.dim() < full.dim());
  // d^2 = 0 in the quotient
  for (int g = 0; g < quot.dim(); ++g) {
    std::set<int> acc;
    for (int d1 : quot.differential(g))
      for (int d2 : quot.differential(d1)) {
        auto it = acc.find(d2);
        if (it == acc.end())
          acc.insert(d2);
        else
          acc.erase(it);
      }
    CHECK(acc.empty());
  }
  CHECK(algebra_homology(full).total_rank() == algebra_homology(quot).total_rank());
}

TEST_CASE("orientation reversal is an anti-isomorphism") {
  PointedMatchedCircle z = standard_pmc(StandardKind::Split, 2);
  Algebra a(z, 0);
  Algebra ar(z.reversed(), 0);
  for (int x = 0; x < a.dim(); x += 3)
    for (int y = 0; y < a.dim(); y += 5) {
      std::set<int> lhs;
      for (int p : a.product(x, y)) lhs.insert(ar.index_of(reverse_generator(z, a.gen(p))));
      std::set<int> rhs;
      int rx = ar.index_of(reverse_generator(z, a.gen(x)));
      int ry = ar.index_of(reverse_generator(z, a.gen(y)));
      REQUIRE(rx >= 0);
      REQUIRE(ry >= 0);
      for (int p : ar.product(ry, rx)) rhs.insert(p);
      CHECK(lhs == rhs);
    }
}
