#include "bhf/massey.hpp"
#include "bhf/torus.hpp"
#include "doctest.h"

using namespace bhf;

namespace {

int block_of(const Algebra& a, const AlgebraHomology& hom, int gen) {
  for (size_t b = 0; b < hom.blocks.size(); ++b)
    if (hom.blocks[b].representative == gen) return static_cast<int>(b);
  return -1;
}

}  // namespace

TEST_CASE("length two Massey products are ordinary products") {
  const TorusAlgebra& t = torus_algebra();
  AlgebraHomology hom = algebra_homology(*t.alg);
  int c1 = block_of(*t.alg, hom, t.rho1);
  int c2 = block_of(*t.alg, hom, t.rho2);
  REQUIRE(c1 >= 0);
  REQUIRE(c2 >= 0);
  int prod = massey_product(*t.alg, hom, {c1, c2});
  REQUIRE(prod >= 0);
  CHECK(hom.blocks[prod].representative == t.rho12);
  // rho2 . rho1 = 0
  CHECK(massey_product(*t.alg, hom, {c2, c1}) == -1);
}

TEST_CASE("a genus two homology class is a Massey product of short chords") {
  // antipodal circle: the class of the length-two chord starting at point 1
  // factors as a Massey product of single-interval chord classes
  PointedMatchedCircle z = standard_pmc(StandardKind::Antipodal, 2);
  Algebra a(z, 0);
  AlgebraHomology hom = algebra_homology(a);
  // search short-chord classes whose Massey products hit a longer class
  std::vector<int> chord_class(8, -1);
  for (size_t b = 0; b < hom.blocks.size(); ++b) {
    const auto& blk = hom.blocks[b];
    int len = 0, sum = 0;
    for (int x : blk.one_chain) {
      len += x != 0;
      sum += x;
    }
    (void)sum;
  }
  bool found = false;
  for (size_t target = 0; target < hom.blocks.size() && !found; ++target) {
    int support = 0;
    for (int x : hom.blocks[target].one_chain) support += x != 0;
    if (support <= 1) continue;
    // try all pairs/triples of length-one classes
    std::vector<int> shorts;
    for (size_t b = 0; b < hom.blocks.size(); ++b) {
      int s = 0;
      for (int x : hom.blocks[b].one_chain) s += x != 0;
      if (s == 1) shorts.push_back(static_cast<int>(b));
    }
    for (size_t i = 0; i < shorts.size() && !found; ++i)
      for (size_t j = 0; j < shorts.size() && !found; ++j) {
        for (size_t k = 0; k < shorts.size() && !found; ++k) {
          try {
            int m = massey_product(a, hom, {shorts[i], shorts[j], shorts[k]});
            if (m == static_cast<int>(target)) {
              // pivot independence
              int m2 = massey_product(a, hom, {shorts[i], shorts[j], shorts[k]}, true);
              CHECK(m2 == m);
              found = true;
            }
          } catch (const NotAdmissible&) {
          } catch (const NoSolution&) {
          }
        }
      }
  }
  CHECK(found);
}
