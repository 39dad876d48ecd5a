#include "bhf/torus.hpp"

#include <algorithm>
#include <sstream>

namespace bhf {

namespace {

int chord_gen(const Algebra& a, int from, int to) {
  std::vector<int> els = a.a_of_chords({{from, to}});
  if (els.size() != 1) throw std::logic_error("torus chord is not a single generator");
  return els.front();
}

}  // namespace

int TorusAlgebra::rho(const std::string& word) const {
  if (word == "1") return rho1;
  if (word == "2") return rho2;
  if (word == "3") return rho3;
  if (word == "12") return rho12;
  if (word == "23") return rho23;
  if (word == "123") return rho123;
  throw std::runtime_error("unknown torus chord name: " + word);
}

const TorusAlgebra& torus_algebra() {
  static const TorusAlgebra t = [] {
    TorusAlgebra t;
    PointedMatchedCircle z = standard_pmc(StandardKind::Torus, 1);
    t.alg = std::make_shared<Algebra>(z, 0);
    t.alg_rev = std::make_shared<Algebra>(z.reversed(), 0);
    t.idem[0] = t.alg->idempotent_id({0});
    t.idem[1] = t.alg->idempotent_id({1});
    t.iota[0] = t.alg->idempotent_gen(t.idem[0]);
    t.iota[1] = t.alg->idempotent_gen(t.idem[1]);
    t.rho1 = chord_gen(*t.alg, 1, 2);
    t.rho2 = chord_gen(*t.alg, 2, 3);
    t.rho3 = chord_gen(*t.alg, 3, 4);
    t.rho12 = chord_gen(*t.alg, 1, 3);
    t.rho23 = chord_gen(*t.alg, 2, 4);
    t.rho123 = chord_gen(*t.alg, 1, 4);
    return t;
  }();
  return t;
}

Bimodule cfaa_id() {
  const TorusAlgebra& t = torus_algebra();
  const Algebra& B = *t.alg_rev;
  auto sigma = [&](const std::string& w) {
    if (w == "1") return chord_gen(B, 1, 2);
    if (w == "2") return chord_gen(B, 2, 3);
    if (w == "3") return chord_gen(B, 3, 4);
    if (w == "12") return chord_gen(B, 1, 3);
    if (w == "23") return chord_gen(B, 2, 4);
    return chord_gen(B, 1, 4);  // "123"
  };
  int j0 = B.idempotent_id({0});
  int j1 = B.idempotent_id({1});

  Bimodule m(Tag::A, Tag::A, t.alg, t.alg_rev);
  m.set_left_init_matched(true);
  int w1 = m.add_gen("w1", t.idem[1], j0);
  int z1 = m.add_gen("z1", t.idem[0], j1);
  int y = m.add_gen("y", t.idem[1], j1);
  int x = m.add_gen("x", t.idem[0], j0);
  int w2 = m.add_gen("w2", t.idem[1], j0);
  int z2 = m.add_gen("z2", t.idem[0], j1);

  auto add = [&](int src, std::vector<std::string> rhos, std::vector<std::string> sigmas, int dst) {
    EntryKey key;
    key.src = src;
    for (const auto& r : rhos) key.left_in.push_back(t.rho(r));
    for (const auto& s : sigmas) key.right_in.push_back(sigma(s));
    m.add_entry(key, Term{-1, dst, -1});
  };
  add(w1, {}, {"1"}, y);
  add(z1, {"1"}, {}, y);
  add(y, {"2"}, {"2"}, x);
  add(x, {"3"}, {}, w2);
  add(x, {}, {"3"}, z2);
  add(w1, {}, {}, w2);
  add(z1, {}, {}, z2);
  add(w1, {"2"}, {"12"}, x);
  add(z1, {"12"}, {"2"}, x);
  add(y, {"23"}, {"2"}, w2);
  add(y, {"2"}, {"23"}, z2);
  add(w1, {"23"}, {"12"}, w2);
  add(z1, {"12"}, {"23"}, z2);
  add(z1, {"123"}, {"2"}, w2);
  add(w1, {"2"}, {"123"}, z2);
  add(w1, {"2"}, {"3", "2", "1"}, z2);
  return m;
}

Bimodule cfdd_id_big() {
  const TorusAlgebra& t = torus_algebra();
  const Algebra& B = *t.alg_rev;
  auto sigma = [&](int from, int to) { return chord_gen(B, from, to); };
  int j0 = B.idempotent_id({0});
  int j1 = B.idempotent_id({1});
  int jg0 = B.idempotent_gen(j0);
  int jg1 = B.idempotent_gen(j1);

  Bimodule m(Tag::D, Tag::D, t.alg, t.alg_rev);
  // idempotents opposite to the ones printed on the AA picture
  int w1 = m.add_gen("w1", t.idem[1], j0);
  int z1 = m.add_gen("z1", t.idem[0], j1);
  int y = m.add_gen("y", t.idem[1], j1);
  int x = m.add_gen("x", t.idem[0], j0);
  int w2 = m.add_gen("w2", t.idem[1], j0);
  int z2 = m.add_gen("z2", t.idem[0], j1);

  auto add = [&](int src, int lout, int rout, int dst) {
    m.add_entry(EntryKey{src, {}, {}}, Term{lout, dst, rout});
  };
  add(w1, t.iota[1], sigma(3, 4), y);  // sigma_3 (x) y
  add(z1, t.rho3, jg1, y);             // rho_3 (x) y
  add(y, t.rho2, sigma(2, 3), x);      // rho_2 sigma_2 (x) x
  add(x, t.rho1, jg0, w2);             // rho_1 (x) w2
  add(x, t.iota[0], sigma(1, 2), z2);  // sigma_1 (x) z2
  add(w1, t.iota[1], jg0, w2);         // 1
  add(z1, t.iota[0], jg1, z2);         // 1
  add(z1, t.rho123, sigma(2, 3), w2);  // sigma_2 rho_123 (x) w2
  return m;
}

Bimodule cfdd_id_small() {
  const TorusAlgebra& t = torus_algebra();
  const Algebra& B = *t.alg_rev;
  auto sigma = [&](int from, int to) { return chord_gen(B, from, to); };
  int j0 = B.idempotent_id({0});
  int j1 = B.idempotent_id({1});

  Bimodule m(Tag::D, Tag::D, t.alg, t.alg_rev);
  int p = m.add_gen("p", t.idem[0], j0);
  int q = m.add_gen("q", t.idem[1], j1);
  m.add_entry(EntryKey{p, {}, {}}, Term{t.rho1, q, sigma(3, 4)});
  m.add_entry(EntryKey{p, {}, {}}, Term{t.rho3, q, sigma(1, 2)});
  m.add_entry(EntryKey{p, {}, {}}, Term{t.rho123, q, sigma(1, 4)});
  m.add_entry(EntryKey{q, {}, {}}, Term{t.rho2, p, sigma(2, 3)});
  return m;
}

DehnTwist twist_from_letter(char c) {
  switch (c) {
    case 'm':
      return DehnTwist::M;
    case 'M':
      return DehnTwist::MInv;
    case 'l':
      return DehnTwist::L;
    case 'L':
      return DehnTwist::LInv;
  }
  throw std::runtime_error("unknown mapping class letter");
}

DehnTwist twist_inverse(DehnTwist t) {
  switch (t) {
    case DehnTwist::M:
      return DehnTwist::MInv;
    case DehnTwist::MInv:
      return DehnTwist::M;
    case DehnTwist::L:
      return DehnTwist::LInv;
    case DehnTwist::LInv:
      return DehnTwist::L;
  }
  throw std::runtime_error("unreachable");
}

Bimodule dehn_twist_DA(DehnTwist tw) {
  const TorusAlgebra& t = torus_algebra();
  Bimodule m(Tag::D, Tag::A, t.alg, t.alg);
  auto R = [&](const std::string& w) { return t.rho(w); };
  auto I = [&](int i) { return t.iota[i]; };

  // generator layout: p (iota0,iota0), q (iota1,iota1), r (iota1,iota0) or
  // s (iota0,iota1)
  int p, q, rs;
  auto add = [&](int src, const char* lout, std::vector<const char*> win, int dst) {
    EntryKey key;
    key.src = src;
    for (const char* w : win) key.right_in.push_back(R(w));
    int l = lout[0] == 'i' ? I(lout[1] - '0') : R(lout);
    m.add_entry(key, Term{l, dst, -1});
  };
  switch (tw) {
    case DehnTwist::M:
      p = m.add_gen("p", t.idem[0], t.idem[0]);
      q = m.add_gen("q", t.idem[1], t.idem[1]);
      rs = m.add_gen("r", t.idem[1], t.idem[0]);
      add(p, "1", {"1"}, q);
      add(p, "123", {"123"}, q);
      add(p, "3", {"3", "23"}, q);
      add(p, "123", {"12"}, rs);
      add(p, "3", {"3", "2"}, rs);
      add(q, "23", {"2"}, rs);
      add(q, "23", {"23"}, q);
      add(rs, "2", {}, p);
      add(rs, "i1", {"3"}, q);
      break;
    case DehnTwist::MInv:
      p = m.add_gen("p", t.idem[0], t.idem[0]);
      q = m.add_gen("q", t.idem[1], t.idem[1]);
      rs = m.add_gen("r", t.idem[1], t.idem[0]);
      add(p, "1", {"1"}, q);
      add(p, "123", {"123"}, q);
      add(p, "12", {"123", "2"}, p);
      add(p, "3", {}, rs);
      add(p, "1", {"12"}, rs);
      add(q, "2", {"23", "2"}, p);
      add(q, "i1", {"2"}, rs);
      add(q, "23", {"23"}, q);
      add(rs, "2", {"3", "2"}, p);
      add(rs, "23", {"3"}, q);
      break;
    case DehnTwist::L:
      q = m.add_gen("q", t.idem[1], t.idem[1]);
      p = m.add_gen("p", t.idem[0], t.idem[0]);
      rs = m.add_gen("s", t.idem[0], t.idem[1]);
      add(q, "2", {"2", "12"}, p);
      add(q, "2", {"2", "1"}, rs);
      add(q, "23", {"2", "123"}, q);
      add(p, "12", {"1"}, rs);
      add(p, "12", {"12"}, p);
      add(p, "3", {"3"}, q);
      add(p, "123", {"123"}, q);
      add(rs, "1", {}, q);
      add(rs, "3", {"23"}, q);
      add(rs, "i0", {"2"}, p);
      break;
    case DehnTwist::LInv:
      q = m.add_gen("q", t.idem[1], t.idem[1]);
      p = m.add_gen("p", t.idem[0], t.idem[0]);
      rs = m.add_gen("s", t.idem[0], t.idem[1]);
      add(q, "2", {}, rs);
      add(p, "12", {"12"}, p);
      add(p, "i0", {"1"}, rs);
      add(p, "3", {"3"}, q);
      add(p, "123", {"123"}, q);
      add(p, "1", {"12", "1"}, q);
      add(rs, "1", {"2", "1"}, q);
      add(rs, "123", {"23"}, q);
      add(rs, "12", {"2"}, p);
      break;
  }
  return m;
}

DAGradedAssignment dehn_twist_grading(DehnTwist tw, const Bimodule& b) {
  const TorusAlgebra& t = torus_algebra();
  static const RefinementData refinement = torus_refinement();
  DAGradedAssignment a;
  a.refinement = &refinement;
  a.gen_grading.assign(b.num_gens(), gp_identity(4));
  // gradings from the twist lemma: p and q sit at the identity, the third
  // generator at +-(1/2; 1,1,0)
  GradingElement plus{1, {1, 1, 0}};
  GradingElement minus = gp_inv(plus);
  int third = b.gen_by_name("r") >= 0 ? b.gen_by_name("r") : b.gen_by_name("s");
  a.gen_grading[third] = (tw == DehnTwist::M || tw == DehnTwist::L) ? plus : minus;

  // the induced automorphism of G on the generators lifted from homology
  GradingElement Lmu = refinement.refine(*t.alg, t.rho23);
  GradingElement Llambda = refinement.refine(*t.alg, t.rho12);
  GradingElement lambda = gp_lambda(4);
  GradingElement fmu, flambda;
  switch (tw) {
    case DehnTwist::M:
      fmu = Lmu;
      flambda = gp_mul(gp_mul(lambda, Lmu), Llambda);
      break;
    case DehnTwist::MInv:
      fmu = Lmu;
      flambda = gp_mul(gp_mul(gp_inv(lambda), gp_inv(Lmu)), Llambda);
      break;
    case DehnTwist::L:
      fmu = gp_mul(gp_mul(gp_inv(lambda), Lmu), gp_inv(Llambda));
      flambda = Llambda;
      break;
    case DehnTwist::LInv:
      fmu = gp_mul(gp_mul(lambda, Lmu), Llambda);
      flambda = Llambda;
      break;
  }
  a.twist = [=](const GradingElement& g) {
    // decompose g = lambda^a Lmu^b Llambda^c via the spin-c lattice
    // Lmu has class (0,1,1); Llambda has class (1,1,0)
    int c = g.alpha[0];
    int bpow = g.alpha[2];
    if (g.alpha[1] != bpow + c) throw GradingViolation("grading not in the small group lattice");
    GradingElement word = gp_mul(gp_pow(Lmu, bpow), gp_pow(Llambda, c));
    long long apow2 = g.maslov2 - word.maslov2;
    if (apow2 % 2 != 0) throw GradingViolation("odd lambda power in decomposition");
    GradingElement out = gp_mul(gp_pow(fmu, bpow), gp_pow(flambda, c));
    out.maslov2 += apow2;
    return out;
  };
  return a;
}

Bimodule solid_torus_D(SolidTorusFraming f) {
  const TorusAlgebra& t = torus_algebra();
  Bimodule m(Tag::D, Tag::None, t.alg, nullptr);
  switch (f) {
    case SolidTorusFraming::Zero: {
      int x = m.add_gen("x", t.idem[0], -1);
      m.add_entry(EntryKey{x, {}, {}}, Term{t.rho12, x, -1});
      break;
    }
    case SolidTorusFraming::MinusOneM: {
      int a = m.add_gen("a", t.idem[0], -1);
      int b = m.add_gen("b", t.idem[1], -1);
      m.add_entry(EntryKey{a, {}, {}}, Term{t.rho12, a, -1});
      m.add_entry(EntryKey{a, {}, {}}, Term{t.rho1, b, -1});
      m.add_entry(EntryKey{a, {}, {}}, Term{t.rho3, b, -1});
      m.add_entry(EntryKey{b, {}, {}}, Term{t.rho23, b, -1});
      break;
    }
    case SolidTorusFraming::MinusOneN: {
      int c = m.add_gen("c", t.idem[0], -1);
      int d = m.add_gen("d", t.idem[1], -1);
      m.add_entry(EntryKey{c, {}, {}}, Term{t.rho1, d, -1});
      m.add_entry(EntryKey{c, {}, {}}, Term{t.rho3, d, -1});
      break;
    }
  }
  return m;
}

Bimodule solid_torus_A() {
  const TorusAlgebra& t = torus_algebra();
  const Algebra& B = *t.alg_rev;
  Bimodule m(Tag::None, Tag::A, nullptr, t.alg_rev);
  int j0 = B.idempotent_id({0});
  int y = m.add_gen("y", -1, j0);
  RulePattern r;
  r.src = y;
  r.prefix = {chord_gen(B, 3, 4)};
  r.repeated = {chord_gen(B, 2, 4)};
  r.suffix = {chord_gen(B, 2, 3)};
  r.term = Term{-1, y, -1};
  m.add_rule(r);
  return m;
}

Bimodule mcg_word_bimodule(const std::vector<DehnTwist>& word, bool simplify_steps) {
  if (word.empty()) throw std::runtime_error("mcg word must be nonempty");
  Bimodule acc = dehn_twist_DA(word[0]);
  for (size_t i = 1; i < word.size(); ++i) {
    Bimodule next = box(acc, dehn_twist_DA(word[i]));
    acc = simplify_steps ? simplify(next).reduced : next;
  }
  if (simplify_steps) acc = simplify(acc).reduced;
  return acc;
}

DualityExampleReport duality_example_check() {
  const TorusAlgebra& t = torus_algebra();
  const Algebra& B = *t.alg_rev;
  DualityExampleReport rep;
  Bimodule n = solid_torus_D(SolidTorusFraming::Zero);
  DualizeResult dual = dualize(n, t.alg, t.alg_rev);
  rep.raw_basis = dual.raw_dim;
  rep.homology_rank = dual.homology_rank;

  // named basis elements of the complex (figure labels)
  Bimodule dd = cfdd_identity(t.alg, t.alg_rev);
  int p = dd.gen_by_name("d{1}");
  int q = dd.gen_by_name("d{2}");
  int xg = 0;  // the single generator of the solid torus module
  int j0g = B.idempotent_gen(B.idempotent_id({0}));
  int j1g = B.idempotent_gen(B.idempotent_id({1}));
  auto s = [&](int a, int b2) { return chord_gen(B, a, b2); };
  auto elt = [&](int b, int d, int a) { return dual.index_of(DualBasisElt{b, d, a, xg}); };
  int X = elt(j0g, p, t.iota[0]);
  int T1 = elt(s(2, 3), p, t.iota[0]);
  int T2 = elt(s(1, 3), p, t.iota[0]);
  int T3 = elt(s(3, 4), q, t.rho2);
  int T4 = elt(s(2, 4), q, t.rho2);
  int T5 = elt(s(1, 4), q, t.rho2);
  int H1 = elt(j1g, q, t.rho2);
  int H2 = elt(s(1, 2), q, t.rho2);
  int H3 = elt(j0g, p, t.rho12);
  int H4 = elt(s(2, 3), p, t.rho12);
  int H5 = elt(s(1, 3), p, t.rho12);
  for (int v : {X, T1, T2, T3, T4, T5, H1, H2, H3, H4, H5})
    if (v < 0) {
      rep.ok = false;
      rep.detail = "missing expected basis element";
      return rep;
    }

  auto diff_of = [&](int g) {
    std::set<int> out;
    for (const Term& term : dual.module.lookup(EntryKey{g, {}, {}})) out.insert(term.dst);
    return out;
  };
  auto act = [&](std::set<int> els, int c) {
    std::set<int> out;
    for (int e : els)
      for (const Term& term : dual.module.lookup(EntryKey{e, {}, {c}})) {
        auto it = out.find(term.dst);
        if (it == out.end())
          out.insert(term.dst);
        else
          out.erase(it);
      }
    return out;
  };
  std::set<int> XT3{X, T3}, T14{T1, T4};
  bool rel1 = act(XT3, s(3, 4)) == std::set<int>{H1};
  std::set<int> dT14;
  for (int g : T14)
    for (int d : diff_of(g)) {
      auto it = dT14.find(d);
      if (it == dT14.end())
        dT14.insert(d);
      else
        dT14.erase(it);
    }
  bool rel2 = dT14 == std::set<int>{H1};
  bool rel3 = act(T14, s(2, 3)) == std::set<int>{X, T3};
  bool rel4 = act(T14, s(2, 4)) == std::set<int>{H1};
  rep.relations_ok = rel1 && rel2 && rel3 && rel4;

  // simplify and compare with the rule-generated solid torus module
  Simplified simp = simplify(dual.module, 8);
  rep.pattern_ok = simp.reduced.num_gens() == 1;
  if (rep.pattern_ok) {
    Bimodule expected = solid_torus_A();
    // every operation of total length <= 6 must match the rule family
    for (int i = 0; i <= 4 && rep.pattern_ok; ++i) {
      EntryKey key;
      key.src = 0;
      key.right_in.push_back(s(3, 4));
      for (int r = 0; r < i; ++r) key.right_in.push_back(s(2, 4));
      key.right_in.push_back(s(2, 3));
      if (static_cast<int>(key.right_in.size()) > 6) break;
      rep.pattern_ok = simp.reduced.lookup(key) == std::vector<Term>{Term{-1, 0, -1}};
    }
    // and no spurious entries of short length
    for (const auto& [key, terms] : simp.reduced.table()) {
      if (static_cast<int>(key.right_in.size()) > 6) continue;
      EntryKey probe;
      probe.src = 0;
      probe.right_in = key.right_in;
      bool expected_entry = !expected.lookup(probe).empty();
      if (!expected_entry) rep.pattern_ok = false;
    }
  }
  rep.ok = rep.homology_rank == 1 && rep.raw_basis == 11 && rep.relations_ok && rep.pattern_ok;
  if (!rep.ok && rep.detail.empty()) {
    std::ostringstream os;
    os << "raw=" << rep.raw_basis << " H=" << rep.homology_rank << " rel=" << rep.relations_ok
       << " pattern=" << rep.pattern_ok;
    rep.detail = os.str();
  }
  return rep;
}

}  // namespace bhf
