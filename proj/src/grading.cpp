#include "bhf/grading.hpp"

#include <algorithm>
#include <set>

namespace bhf {

long long twist2(const std::vector<int>& a1, const std::vector<int>& a2) {
  // 2 m(alpha2, d alpha1): the boundary of an interval is its endpoint minus
  // its start point, so d alpha1 at point p is a1[p-1] - a1[p] (0-extended);
  // m(alpha2, p) doubled is a2[p-1] + a2[p].
  int n1 = static_cast<int>(a1.size()) + 1;  // number of points
  long long s = 0;
  for (int p = 0; p < n1; ++p) {
    int below1 = p > 0 ? a1[p - 1] : 0;
    int above1 = p < n1 - 1 ? a1[p] : 0;
    int d = below1 - above1;
    if (d == 0) continue;
    int below2 = p > 0 ? a2[p - 1] : 0;
    int above2 = p < n1 - 1 ? a2[p] : 0;
    s += static_cast<long long>(d) * (below2 + above2);
  }
  return s;
}

GradingElement gp_identity(int num_points) {
  return GradingElement{0, std::vector<int>(std::max(0, num_points - 1), 0)};
}

GradingElement gp_lambda(int num_points, long long power) {
  GradingElement g = gp_identity(num_points);
  g.maslov2 = 2 * power;
  return g;
}

GradingElement gp_mul(const GradingElement& a, const GradingElement& b) {
  GradingElement c;
  c.maslov2 = a.maslov2 + b.maslov2 + twist2(a.alpha, b.alpha);
  c.alpha.resize(a.alpha.size());
  for (size_t i = 0; i < a.alpha.size(); ++i) c.alpha[i] = a.alpha[i] + b.alpha[i];
  return c;
}

GradingElement gp_inv(const GradingElement& a) {
  GradingElement c;
  c.alpha.resize(a.alpha.size());
  for (size_t i = 0; i < a.alpha.size(); ++i) c.alpha[i] = -a.alpha[i];
  c.maslov2 = -a.maslov2 - twist2(a.alpha, c.alpha);
  return c;
}

GradingElement gp_pow(const GradingElement& a, long long n) {
  GradingElement r = gp_identity(static_cast<int>(a.alpha.size()) + 1);
  GradingElement base = n >= 0 ? a : gp_inv(a);
  long long m = n >= 0 ? n : -n;
  for (long long i = 0; i < m; ++i) r = gp_mul(r, base);
  return r;
}

bool gp_parity_ok(const GradingElement& g) {
  // maslov = maslov2/2 must be congruent mod 1 to (parity changes)/4
  int changes = 0;
  int prev = 0;
  for (int x : g.alpha) {
    if (((x % 2) + 2) % 2 != prev) {
      ++changes;
      prev = ((x % 2) + 2) % 2;
    }
  }
  if (prev != 0) ++changes;
  // maslov2 mod 2 == changes/2 mod 2 (changes is always even)
  return ((g.maslov2 % 2) + 2) % 2 == ((changes / 2) % 2);
}

bool in_small_group(const PointedMatchedCircle& z, const GradingElement& g) {
  int n = z.num_points();
  if (!gp_parity_ok(g)) return false;
  for (int pr = 0; pr < z.num_pairs(); ++pr) {
    auto [a, b] = z.pair_points(pr);
    auto d_at = [&](int p) {
      int below = p > 0 ? g.alpha[p - 1] : 0;
      int above = p < n - 1 ? g.alpha[p] : 0;
      return below - above;
    };
    if (d_at(a) + d_at(b) != 0) return false;
  }
  return true;
}

GradingElement gp_reverse(const GradingElement& g) {
  GradingElement r;
  r.maslov2 = g.maslov2;
  r.alpha.assign(g.alpha.rbegin(), g.alpha.rend());
  return r;
}

const GradingElement& RefinementData::at(const std::vector<int>& idem) const {
  auto it = psi.find(idem);
  if (it == psi.end()) throw NotInSmallGroup("refinement data missing idempotent");
  return it->second;
}

GradingElement RefinementData::refine(const Algebra& a, int gen) const {
  const GradingElement& s = at(a.idempotent_subset(a.init_idem(gen)));
  const GradingElement& t = at(a.idempotent_subset(a.term_idem(gen)));
  return gp_mul(gp_mul(s, a.gr_prime(gen)), gp_inv(t));
}

void RefinementData::validate(const Algebra& a) const {
  for (int g = 0; g < a.dim(); ++g)
    if (!in_small_group(a.circle(), refine(a, g)))
      throw NotInSmallGroup("refined grading of " + a.gen_name(g) + " is not in G(Z)");
}

RefinementData torus_refinement() {
  RefinementData r;
  r.psi[{0}] = GradingElement{0, {0, 0, 0}};
  r.psi[{1}] = GradingElement{-1, {1, 0, 0}};
  return r;
}

bool BiGrading::operator<(const BiGrading& o) const {
  if (maslov2 != o.maslov2) return maslov2 < o.maslov2;
  if (left_alpha != o.left_alpha) return left_alpha < o.left_alpha;
  return right_alpha < o.right_alpha;
}

BiGrading bi_identity(int left_points, int right_points) {
  BiGrading b;
  b.left_alpha.assign(std::max(0, left_points - 1), 0);
  b.right_alpha.assign(std::max(0, right_points - 1), 0);
  return b;
}

BiGrading bi_mul(const BiGrading& a, const BiGrading& b) {
  BiGrading c;
  c.maslov2 = a.maslov2 + b.maslov2 + twist2(a.left_alpha, b.left_alpha) + twist2(a.right_alpha, b.right_alpha);
  c.left_alpha.resize(a.left_alpha.size());
  for (size_t i = 0; i < a.left_alpha.size(); ++i) c.left_alpha[i] = a.left_alpha[i] + b.left_alpha[i];
  c.right_alpha.resize(a.right_alpha.size());
  for (size_t i = 0; i < a.right_alpha.size(); ++i) c.right_alpha[i] = a.right_alpha[i] + b.right_alpha[i];
  return c;
}

BiGrading bi_inv(const BiGrading& a) {
  BiGrading c;
  c.left_alpha.resize(a.left_alpha.size());
  for (size_t i = 0; i < a.left_alpha.size(); ++i) c.left_alpha[i] = -a.left_alpha[i];
  c.right_alpha.resize(a.right_alpha.size());
  for (size_t i = 0; i < a.right_alpha.size(); ++i) c.right_alpha[i] = -a.right_alpha[i];
  c.maslov2 = -a.maslov2 - twist2(a.left_alpha, c.left_alpha) - twist2(a.right_alpha, c.right_alpha);
  return c;
}

BiGrading bi_from_left(const GradingElement& g, int right_points) {
  BiGrading b;
  b.maslov2 = g.maslov2;
  b.left_alpha = g.alpha;
  b.right_alpha.assign(std::max(0, right_points - 1), 0);
  return b;
}

BiGrading bi_from_right(const GradingElement& g, int left_points) {
  BiGrading b;
  b.maslov2 = g.maslov2;
  b.right_alpha = g.alpha;
  b.left_alpha.assign(std::max(0, left_points - 1), 0);
  return b;
}

bool in_subgroup_bfs(const BiGrading& g, const std::vector<BiGrading>& words, int depth) {
  BiGrading id = g;
  id.maslov2 = 0;
  for (auto& x : id.left_alpha) x = 0;
  for (auto& x : id.right_alpha) x = 0;
  if (g == id) return true;
  std::set<BiGrading> seen{id};
  std::vector<BiGrading> frontier{id};
  for (int d = 0; d < depth; ++d) {
    std::vector<BiGrading> next;
    for (const BiGrading& cur : frontier)
      for (const BiGrading& w : words)
        for (const BiGrading& step : {bi_mul(cur, w), bi_mul(cur, bi_inv(w))}) {
          if (step == g) return true;
          if (seen.insert(step).second) next.push_back(step);
        }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace bhf
