#include "bhf/morcx.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bhf {

namespace {

void toggle_idx(std::set<int>& acc, int v) {
  auto it = acc.find(v);
  if (it == acc.end())
    acc.insert(v);
  else
    acc.erase(it);
}

}  // namespace

int MorComplex::index_of(const MorBasisElt& m) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), m);
  if (it == basis.end() || !(*it == m)) return -1;
  return static_cast<int>(it - basis.begin());
}

MorComplex mor_left_D(const Bimodule& x, const Bimodule& y) {
  if (x.left_tag() != Tag::D || y.left_tag() != Tag::D || x.right_tag() != Tag::None ||
      y.right_tag() != Tag::None)
    throw TagMismatch("mor_left_D expects plain left type D structures");
  const Algebra& alg = *x.left_alg();
  MorComplex mc;
  for (int s = 0; s < x.num_gens(); ++s)
    for (int t = 0; t < y.num_gens(); ++t)
      for (int a = 0; a < alg.dim(); ++a)
        if (alg.init_idem(a) == x.gen(s).left_idem && alg.term_idem(a) == y.gen(t).left_idem)
          mc.basis.push_back(MorBasisElt{s, a, t});
  std::sort(mc.basis.begin(), mc.basis.end());
  mc.cx.basis.resize(mc.basis.size());
  mc.cx.differential.resize(mc.basis.size());
  for (size_t i = 0; i < mc.basis.size(); ++i) {
    const MorBasisElt& m = mc.basis[i];
    std::ostringstream os;
    os << x.gen(m.src).name << "->" << alg.gen_name(m.coef) << "." << y.gen(m.dst).name;
    mc.cx.basis[i] = os.str();
    std::set<int> acc;
    for (int da : alg.differential(m.coef)) toggle_idx(acc, mc.index_of(MorBasisElt{m.src, da, m.dst}));
    for (const auto& [key, terms] : x.table()) {
      for (const Term& t : terms) {
        if (t.dst != m.src) continue;
        for (int p : alg.product(t.lout, m.coef))
          toggle_idx(acc, mc.index_of(MorBasisElt{key.src, p, m.dst}));
      }
    }
    for (const auto& [key, terms] : y.table()) {
      if (key.src != m.dst) continue;
      for (const Term& t : terms)
        for (int p : alg.product(m.coef, t.lout)) toggle_idx(acc, mc.index_of(MorBasisElt{m.src, p, t.dst}));
    }
    acc.erase(-1);
    mc.cx.differential[i].assign(acc.begin(), acc.end());
  }
  return mc;
}

MorDDComplex mor_DD(const Bimodule& x, const Bimodule& y) {
  if (x.left_tag() != Tag::D || x.right_tag() != Tag::D || y.left_tag() != Tag::D || y.right_tag() != Tag::D)
    throw TagMismatch("mor_DD expects DD structures");
  if (x.right_op() != y.right_op()) throw TagMismatch("mor_DD: mixed right-side conventions");
  const Algebra& la = *x.left_alg();
  const Algebra& ra = *x.right_alg();
  MorDDComplex mc;
  std::map<MorDDBasisElt, int> index;
  for (int s = 0; s < x.num_gens(); ++s)
    for (int t = 0; t < y.num_gens(); ++t)
      for (int a = 0; a < la.dim(); ++a) {
        if (la.init_idem(a) != x.gen(s).left_idem || la.term_idem(a) != y.gen(t).left_idem) continue;
        for (int b = 0; b < ra.dim(); ++b) {
          if (ra.init_idem(b) != x.gen(s).right_idem || ra.term_idem(b) != y.gen(t).right_idem) continue;
          index[MorDDBasisElt{s, a, b, t}] = static_cast<int>(mc.basis.size());
          mc.basis.push_back(MorDDBasisElt{s, a, b, t});
        }
      }
  auto idx = [&](const MorDDBasisElt& m) {
    auto it = index.find(m);
    return it == index.end() ? -1 : it->second;
  };
  mc.cx.basis.resize(mc.basis.size());
  mc.cx.differential.resize(mc.basis.size());
  bool rop = x.right_op();
  for (size_t i = 0; i < mc.basis.size(); ++i) {
    const MorDDBasisElt& m = mc.basis[i];
    std::ostringstream os;
    os << x.gen(m.src).name << "->" << la.gen_name(m.lcoef) << "|" << ra.gen_name(m.rcoef) << "."
       << y.gen(m.dst).name;
    mc.cx.basis[i] = os.str();
    std::set<int> acc;
    for (int da : la.differential(m.lcoef)) toggle_idx(acc, idx(MorDDBasisElt{m.src, da, m.rcoef, m.dst}));
    for (int db : ra.differential(m.rcoef)) toggle_idx(acc, idx(MorDDBasisElt{m.src, m.lcoef, db, m.dst}));
    for (const auto& [key, terms] : x.table())
      for (const Term& t : terms) {
        if (t.dst != m.src) continue;
        for (int p : la.product(t.lout, m.lcoef))
          for (int q : rop ? ra.product(m.rcoef, t.rout) : ra.product(t.rout, m.rcoef))
            toggle_idx(acc, idx(MorDDBasisElt{key.src, p, q, m.dst}));
      }
    for (const auto& [key, terms] : y.table()) {
      if (key.src != m.dst) continue;
      for (const Term& t : terms)
        for (int p : la.product(m.lcoef, t.lout))
          for (int q : rop ? ra.product(t.rout, m.rcoef) : ra.product(m.rcoef, t.rout))
            toggle_idx(acc, idx(MorDDBasisElt{m.src, p, q, t.dst}));
    }
    acc.erase(-1);
    mc.cx.differential[i].assign(acc.begin(), acc.end());
  }
  return mc;
}

int mor_DD_degree0_homology_rank(const Bimodule& x, const DDGradingAssignment& grading) {
  MorDDComplex mc = mor_DD(x, x);
  const Algebra& la = *x.left_alg();
  const Algebra& ra = *x.right_alg();
  int lp = la.circle().num_points();
  int rp = ra.circle().num_points();
  // lambda-degree of a basis morphism: the defect of the entry rule without
  // the lambda^{-1} drop, reduced against the periodic words.
  auto degree_of = [&](const MorDDBasisElt& m) -> std::optional<long long> {
    BiGrading val = bi_mul(bi_mul(bi_inv(bi_from_left(la.gr_prime(m.lcoef), rp)), grading.gen_grading[m.src]),
                           bi_inv(bi_from_right(ra.gr_prime(m.rcoef), lp)));
    BiGrading defect = bi_mul(bi_inv(grading.gen_grading[m.dst]), val);
    // reduce the spin-c part against the periodic subgroup
    for (int d = 0; d <= 6; ++d) {
      // search for a P-word making the alpha parts vanish
      // (bounded BFS over products of the periodic generators)
      std::vector<BiGrading> frontier{bi_identity(lp, rp)};
      std::set<BiGrading> seen(frontier.begin(), frontier.end());
      for (int step = 0; step < d; ++step) {
        std::vector<BiGrading> next;
        for (const auto& cur : frontier)
          for (const auto& w : grading.periodic)
            for (const auto& s : {bi_mul(cur, w), bi_mul(cur, bi_inv(w))})
              if (seen.insert(s).second) next.push_back(s);
        frontier = std::move(next);
      }
      for (const auto& s : seen) {
        BiGrading red = bi_mul(defect, bi_inv(s));
        bool zero = true;
        for (int v : red.left_alpha) zero &= v == 0;
        for (int v : red.right_alpha) zero &= v == 0;
        if (zero && red.maslov2 % 2 == 0) return red.maslov2 / 2;
      }
    }
    return std::nullopt;
  };
  std::vector<std::optional<long long>> deg(mc.basis.size());
  for (size_t i = 0; i < mc.basis.size(); ++i) deg[i] = degree_of(mc.basis[i]);
  // homology at degree 0: ker(d restricted to deg 0) / im(d from deg 1)
  std::map<long long, std::vector<int>> by_deg;
  for (size_t i = 0; i < mc.basis.size(); ++i)
    if (deg[i]) by_deg[*deg[i]].push_back(static_cast<int>(i));
  auto rank_from = [&](long long from) {
    auto it = by_deg.find(from);
    if (it == by_deg.end()) return 0;
    std::map<int, int> pos;
    auto lower = by_deg.find(from - 1);
    int nrows = 0;
    if (lower != by_deg.end())
      for (int g : lower->second) pos[g] = nrows++;
    std::vector<std::vector<int>> cols;
    for (int g : it->second) {
      std::vector<int> col;
      for (int d2 : mc.cx.differential[g]) {
        auto p = pos.find(d2);
        if (p != pos.end()) col.push_back(p->second);
      }
      cols.push_back(col);
    }
    return f2_rank_of_columns(cols, nrows);
  };
  int dim0 = by_deg.count(0) ? static_cast<int>(by_deg[0].size()) : 0;
  return dim0 - rank_from(0) - rank_from(1);
}

// ---- dualize ----

int DualizeResult::index_of(const DualBasisElt& e) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == e) return static_cast<int>(i);
  return -1;
}

DualizeResult dualize(const Bimodule& n, const AlgebraRef& az, const AlgebraRef& aminusz) {
  if (n.left_tag() != Tag::D || n.right_tag() != Tag::None) throw TagMismatch("dualize expects a left type D module");
  Bimodule dd = cfdd_identity(az, aminusz);
  const Algebra& A = *az;
  const Algebra& B = *aminusz;

  // expanded source generators (b, d) with term(b) = d.right_idem
  struct BDGen {
    int b, d;
  };
  std::vector<BDGen> bd;
  std::map<std::pair<int, int>, int> bd_index;
  for (int b = 0; b < B.dim(); ++b)
    for (int d = 0; d < dd.num_gens(); ++d)
      if (B.term_idem(b) == dd.gen(d).right_idem) {
        bd_index[{b, d}] = static_cast<int>(bd.size());
        bd.push_back({b, d});
      }
  // delta on BD: (b,d) -> sum (b.b'', d') with A-coefficient a, plus the
  // differential of b with an idempotent A-coefficient
  struct BDArrow {
    int src, dst, acoef;
  };
  std::vector<BDArrow> arrows;
  for (const auto& [key, terms] : dd.table())
    for (const Term& t : terms)
      for (const auto& [b, src] : bd_index) {
        if (b.second != key.src) continue;
        for (int prod : B.product(b.first, t.rout)) {
          auto it = bd_index.find({prod, t.dst});
          if (it != bd_index.end()) arrows.push_back({src, it->second, t.lout});
        }
      }
  for (const auto& [b, src] : bd_index)
    for (int db : B.differential(b.first)) {
      auto it = bd_index.find({db, b.second});
      if (it != bd_index.end())
        arrows.push_back({src, it->second, A.idempotent_gen(dd.gen(b.second).left_idem)});
    }

  // Mor basis: single-component maps (b,d) -> a (x) n-gen
  DualizeResult out{Bimodule(Tag::None, Tag::A, nullptr, aminusz), {}, 0, 0};
  std::map<DualBasisElt, int> index;
  for (const auto& [bdpair, src] : bd_index) {
    int d = bdpair.second;
    for (int a = 0; a < A.dim(); ++a) {
      if (A.init_idem(a) != dd.gen(d).left_idem) continue;
      for (int g = 0; g < n.num_gens(); ++g) {
        if (A.term_idem(a) != n.gen(g).left_idem) continue;
        DualBasisElt e{bdpair.first, d, a, g};
        index[e] = static_cast<int>(out.basis.size());
        out.basis.push_back(e);
      }
    }
  }
  out.raw_dim = static_cast<int>(out.basis.size());
  for (const auto& e : out.basis) {
    std::ostringstream os;
    os << B.gen_name(e.b) << "." << dd.gen(e.d).name << "->" << A.gen_name(e.a) << "." << n.gen(e.n).name;
    out.module.add_gen(os.str(), -1, B.init_idem(e.b));
  }
  // differential entries
  for (size_t i = 0; i < out.basis.size(); ++i) {
    const DualBasisElt& m = out.basis[i];
    std::set<int> acc;
    // precompose with delta_BD: components landing on m's source (b,d)
    int msrc = bd_index.at({m.b, m.d});
    for (const BDArrow& ar : arrows) {
      if (ar.dst != msrc) continue;
      const BDGen& src = bd[ar.src];
      for (int p : A.product(ar.acoef, m.a)) {
        auto it = index.find(DualBasisElt{src.b, src.d, p, m.n});
        if (it != index.end()) toggle_idx(acc, it->second);
      }
    }
    // postcompose with delta_N
    for (const auto& [key, terms] : n.table()) {
      if (key.src != m.n) continue;
      for (const Term& t : terms)
        for (int p : A.product(m.a, t.lout)) {
          auto it = index.find(DualBasisElt{m.b, m.d, p, t.dst});
          if (it != index.end()) toggle_idx(acc, it->second);
        }
    }
    // differential of the coefficient
    for (int da : A.differential(m.a)) {
      auto it = index.find(DualBasisElt{m.b, m.d, da, m.n});
      if (it != index.end()) toggle_idx(acc, it->second);
    }
    for (int t : acc) out.module.add_entry(EntryKey{static_cast<int>(i), {}, {}}, Term{-1, t, -1});
  }
  // residual right action: (f . c)(b', d) = f(c b', d)
  for (size_t i = 0; i < out.basis.size(); ++i) {
    const DualBasisElt& m = out.basis[i];
    for (int c = 0; c < B.dim(); ++c) {
      if (B.is_idempotent(c)) continue;
      for (int bp = 0; bp < B.dim(); ++bp) {
        if (B.term_idem(bp) != dd.gen(m.d).right_idem) continue;
        for (int p : B.product(c, bp)) {
          if (p != m.b) continue;
          auto it = index.find(DualBasisElt{bp, m.d, m.a, m.n});
          if (it != index.end())
            out.module.add_entry(EntryKey{static_cast<int>(i), {}, {c}}, Term{-1, it->second, -1});
        }
      }
    }
  }
  // homology of the differential part
  ChainComplex cx;
  cx.basis.resize(out.basis.size());
  cx.differential.assign(out.basis.size(), {});
  for (const auto& [key, terms] : out.module.table()) {
    if (!key.right_in.empty()) continue;
    for (const Term& t : terms) cx.differential[key.src].push_back(t.dst);
  }
  for (auto& v : cx.differential) std::sort(v.begin(), v.end());
  out.homology_rank = cx.homology_rank();
  return out;
}

}  // namespace bhf
