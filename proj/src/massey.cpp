#include "bhf/massey.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bhf/f2.hpp"
#include "bhf/grading.hpp"

namespace bhf {

namespace {

void toggle(std::set<int>& acc, int g) {
  auto it = acc.find(g);
  if (it == acc.end())
    acc.insert(g);
  else
    acc.erase(it);
}

Chain from_set(const std::set<int>& s) { return Chain(s.begin(), s.end()); }

// all basis generators with the same idempotents/one-chain as the chain's
// terms and the given Maslov degree
std::vector<int> block_gens(const Algebra& a, int sgen, long long maslov2) {
  std::vector<int> out;
  for (int g = 0; g < a.dim(); ++g)
    if (a.init_idem(g) == a.init_idem(sgen) && a.term_idem(g) == a.term_idem(sgen) &&
        a.gr_prime(g).alpha == a.gr_prime(sgen).alpha && a.gr_prime(g).maslov2 == maslov2)
      out.push_back(g);
  return out;
}

}  // namespace

Chain chain_product(const Algebra& a, const Chain& x, const Chain& y) {
  std::set<int> acc;
  for (int g : x)
    for (int h : y)
      if (a.term_idem(g) == a.init_idem(h))
        for (int p : a.product(g, h)) toggle(acc, p);
  return from_set(acc);
}

Chain chain_differential(const Algebra& a, const Chain& x) {
  std::set<int> acc;
  for (int g : x)
    for (int d : a.differential(g)) toggle(acc, d);
  return from_set(acc);
}

namespace {

// solve d xi = rhs inside the homogeneous block one Maslov degree above;
// empty optional when unsolvable
std::optional<Chain> solve_boundary(const Algebra& a, const Chain& rhs, bool reversed) {
  if (rhs.empty()) return Chain{};
  long long deg = a.gr_prime(rhs.front()).maslov2;
  std::vector<int> cols = block_gens(a, rhs.front(), deg + 2);
  if (reversed) std::reverse(cols.begin(), cols.end());
  std::vector<int> rows = block_gens(a, rhs.front(), deg);
  std::map<int, int> row_pos;
  for (size_t i = 0; i < rows.size(); ++i) row_pos[rows[i]] = static_cast<int>(i);
  F2Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int d : a.differential(cols[c])) {
      auto it = row_pos.find(d);
      if (it != row_pos.end()) m.set(it->second, static_cast<int>(c), !m.get(it->second, static_cast<int>(c)));
    }
  std::vector<bool> b(rows.size(), false);
  for (int g : rhs) {
    auto it = row_pos.find(g);
    if (it == row_pos.end()) return std::nullopt;
    b[it->second] = true;
  }
  auto x = m.solve(b);
  if (!x) return std::nullopt;
  Chain out;
  for (size_t c = 0; c < cols.size(); ++c)
    if ((*x)[c]) out.push_back(cols[c]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int class_of(const Algebra& a, const AlgebraHomology& hom, const Chain& x) {
  if (!chain_differential(a, x).empty()) throw std::logic_error("class_of: not a cycle");
  if (x.empty()) return -1;
  if (solve_boundary(a, x, false)) return -1;
  for (size_t b = 0; b < hom.blocks.size(); ++b) {
    const HomologyBlock& blk = hom.blocks[b];
    int g = x.front();
    if (a.idempotent_subset(a.init_idem(g)) == blk.init_idem &&
        a.idempotent_subset(a.term_idem(g)) == blk.term_idem && a.gr_prime(g).alpha == blk.one_chain &&
        a.gr_prime(g).maslov2 == blk.maslov2)
      return static_cast<int>(b);
  }
  throw std::logic_error("class_of: nonzero cycle matches no homology block");
}

int massey_product(const Algebra& a, const AlgebraHomology& hom, const std::vector<int>& classes,
                   bool reversed_pivots) {
  int m = static_cast<int>(classes.size());
  if (m < 2) throw NotAdmissible("need at least two classes");
  // xi[i][j] for 0 <= i < j <= m
  std::map<std::pair<int, int>, Chain> xi;
  for (int i = 1; i <= m; ++i) xi[{i - 1, i}] = Chain{hom.blocks[classes[i - 1]].representative};
  for (int span = 2; span <= m; ++span)
    for (int i = 0; i + span <= m; ++i) {
      int j = i + span;
      std::set<int> rhs_acc;
      for (int k = i + 1; k < j; ++k)
        for (int g : chain_product(a, xi[{i, k}], xi[{k, j}])) toggle(rhs_acc, g);
      Chain rhs = from_set(rhs_acc);
      if (i == 0 && j == m) {
        // the Massey product itself
        if (!chain_differential(a, rhs).empty()) throw std::logic_error("massey: product is not a cycle");
        return class_of(a, hom, rhs);
      }
      // admissibility: the sub-product must vanish in homology ...
      auto sol = solve_boundary(a, rhs, reversed_pivots);
      if (!sol) {
        if (chain_differential(a, rhs).empty() && class_of(a, hom, rhs) >= 0)
          throw NotAdmissible("intermediate Massey product is nonzero in homology");
        throw NoSolution("defining system unsolvable");
      }
      // ... and the homology one Maslov degree above the product must vanish
      if (!rhs.empty()) {
        int g = rhs.front();
        for (const HomologyBlock& blk : hom.blocks)
          if (a.idempotent_subset(a.init_idem(g)) == blk.init_idem &&
              a.idempotent_subset(a.term_idem(g)) == blk.term_idem && a.gr_prime(g).alpha == blk.one_chain &&
              a.gr_prime(g).maslov2 == blk.maslov2 + 2)
            throw NotAdmissible("homology nonzero one degree above an intermediate product");
      } else {
        // grading determined by the factors even when the chain vanishes
        GradingElement g = a.gr_prime(xi[{i, i + 1}].front());
        for (int k = i + 1; k < j; ++k) g = gp_mul(g, a.gr_prime(xi[{k, k + 1}].front()));
        g.maslov2 += 2 * (span - 2);
        int si = a.init_idem(xi[{i, i + 1}].front());
        int ti = a.term_idem(xi[{j - 1, j}].front());
        for (const HomologyBlock& blk : hom.blocks)
          if (a.idempotent_subset(si) == blk.init_idem && a.idempotent_subset(ti) == blk.term_idem &&
              g.alpha == blk.one_chain && g.maslov2 + 2 == blk.maslov2)
            throw NotAdmissible("homology nonzero one degree above an intermediate product");
      }
      xi[{i, j}] = *sol;
    }
  throw std::logic_error("massey: unreachable");
}

}  // namespace bhf
