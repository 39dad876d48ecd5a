#include "bhf/simplify.hpp"

#include <algorithm>
#include <sstream>

namespace bhf {

namespace {

void toggle_term(EntryTable& table, const EntryKey& key, const Term& term) {
  auto& terms = table[key];
  auto it = std::find(terms.begin(), terms.end(), term);
  if (it != terms.end()) {
    terms.erase(it);
    if (terms.empty()) table.erase(key);
  } else {
    terms.push_back(term);
    std::sort(terms.begin(), terms.end());
  }
}

// Stacks e1 (applied first) with e2; expands coefficient products over F2.
// Shared by morphism composition and the morphism differential.
void stack_into(EntryTable& acc, const Bimodule& shape, const EntryKey& k1, const Term& t1,
                const EntryKey& k2, const Term& t2) {
  EntryKey key;
  key.src = k1.src;
  key.left_in = k2.left_in;
  key.left_in.insert(key.left_in.end(), k1.left_in.begin(), k1.left_in.end());
  key.right_in = k1.right_in;
  key.right_in.insert(key.right_in.end(), k2.right_in.begin(), k2.right_in.end());
  std::vector<int> louts{-1}, routs{-1};
  if (shape.left_tag() == Tag::D) louts = shape.left_alg()->product(t1.lout, t2.lout);
  if (shape.right_tag() == Tag::D)
    routs = shape.right_op() ? shape.right_alg()->product(t2.rout, t1.rout)
                             : shape.right_alg()->product(t1.rout, t2.rout);
  for (int l : louts)
    for (int r : routs)
      toggle_term(acc, key, Term{shape.left_tag() == Tag::D ? l : -1, t2.dst, shape.right_tag() == Tag::D ? r : -1});
}

// input-differential and input-product terms of a table, toggled into acc
void input_perturbations(EntryTable& acc, const Bimodule& shape, const EntryTable& table) {
  const Algebra* la = shape.left_alg().get();
  const Algebra* ra = shape.right_alg().get();
  for (const auto& [key, terms] : table) {
    auto emit_modified = [&](bool left_side, size_t pos, bool product) {
      const std::vector<int>& word = left_side ? key.left_in : key.right_in;
      const Algebra* alg = left_side ? la : ra;
      std::vector<std::vector<int>> replacements;
      if (product) {
        for (int pg : alg->product(word[pos], word[pos + 1])) replacements.push_back({pg});
      } else {
        for (int dg : alg->differential(word[pos])) replacements.push_back({dg});
      }
      for (const auto& rep : replacements) {
        std::vector<int> nw(word.begin(), word.begin() + pos);
        nw.insert(nw.end(), rep.begin(), rep.end());
        nw.insert(nw.end(), word.begin() + pos + (product ? 2 : 1), word.end());
        EntryKey nk = key;
        (left_side ? nk.left_in : nk.right_in) = nw;
        for (const Term& t : terms) toggle_term(acc, nk, t);
      }
    };
    for (size_t p = 0; p < key.left_in.size(); ++p) emit_modified(true, p, false);
    for (size_t p = 0; p + 1 < key.left_in.size(); ++p) emit_modified(true, p, true);
    for (size_t p = 0; p < key.right_in.size(); ++p) emit_modified(false, p, false);
    for (size_t p = 0; p + 1 < key.right_in.size(); ++p) emit_modified(false, p, true);
  }
}

EntryTable structure_table(const Bimodule& b) {
  EntryTable t = b.table();
  // expand rule families up to the probe cap used by the callers
  for (const RulePattern& r : b.rules()) {
    int cap = b.max_right_len();
    for (int reps = 0;; ++reps) {
      std::vector<int> w = r.prefix;
      for (int i = 0; i < reps; ++i) w.insert(w.end(), r.repeated.begin(), r.repeated.end());
      w.insert(w.end(), r.suffix.begin(), r.suffix.end());
      if (static_cast<int>(w.size()) > cap) break;
      toggle_term(t, EntryKey{r.src, {}, w}, r.term);
      if (r.repeated.empty()) break;
    }
  }
  return t;
}

}  // namespace

void MorphismTable::toggle(const EntryKey& key, const Term& term) { toggle_term(entries, key, term); }

MorphismTable identity_morphism(const Bimodule& b) {
  MorphismTable m;
  for (int g = 0; g < b.num_gens(); ++g) {
    int l = b.left_tag() == Tag::D ? b.left_alg()->idempotent_gen(b.gen(g).left_idem) : -1;
    int r = b.right_tag() == Tag::D ? b.right_alg()->idempotent_gen(b.gen(g).right_idem) : -1;
    m.toggle(EntryKey{g, {}, {}}, Term{l, g, r});
  }
  return m;
}

MorphismTable compose_morphisms(const Bimodule& src, const Bimodule& mid, const Bimodule& dst,
                                const MorphismTable& first, const MorphismTable& second) {
  (void)mid;
  (void)dst;
  MorphismTable out;
  for (const auto& [k1, ts1] : first.entries)
    for (const Term& t1 : ts1)
      for (const auto& [k2, ts2] : second.entries) {
        if (k2.src != t1.dst) continue;
        for (const Term& t2 : ts2) stack_into(out.entries, src, k1, t1, k2, t2);
      }
  return out;
}

MorphismTable morphism_differential(const Bimodule& x, const Bimodule& y, const MorphismTable& f) {
  MorphismTable out;
  EntryTable dx = structure_table(x);
  EntryTable dy = structure_table(y);
  // delta_x then f
  for (const auto& [k1, ts1] : dx)
    for (const Term& t1 : ts1)
      for (const auto& [k2, ts2] : f.entries) {
        if (k2.src != t1.dst) continue;
        for (const Term& t2 : ts2) stack_into(out.entries, x, k1, t1, k2, t2);
      }
  // f then delta_y
  for (const auto& [k1, ts1] : f.entries)
    for (const Term& t1 : ts1)
      for (const auto& [k2, ts2] : dy) {
        if (k2.src != t1.dst) continue;
        for (const Term& t2 : ts2) stack_into(out.entries, x, k1, t1, k2, t2);
      }
  // differentials of the morphism's D outputs
  for (const auto& [key, terms] : f.entries)
    for (const Term& t : terms) {
      if (x.left_tag() == Tag::D)
        for (int l : x.left_alg()->differential(t.lout)) toggle_term(out.entries, key, Term{l, t.dst, t.rout});
      if (x.right_tag() == Tag::D)
        for (int r : x.right_alg()->differential(t.rout)) toggle_term(out.entries, key, Term{t.lout, t.dst, r});
    }
  // input perturbations of f
  input_perturbations(out.entries, x, f.entries);
  return out;
}

namespace {

// remaps generator indices in a morphism table
MorphismTable remap(const MorphismTable& m, const std::vector<int>& src_map, const std::vector<int>& dst_map) {
  MorphismTable out;
  for (const auto& [key, terms] : m.entries) {
    if (src_map[key.src] < 0) continue;
    EntryKey nk = key;
    nk.src = src_map[key.src];
    for (const Term& t : terms) {
      if (dst_map[t.dst] < 0) continue;
      Term nt = t;
      nt.dst = dst_map[t.dst];
      out.toggle(nk, nt);
    }
  }
  return out;
}

}  // namespace

Simplified simplify(const Bimodule& b, int input_cap) {
  Bimodule cur = b;
  MorphismTable F = identity_morphism(b);
  MorphismTable G = identity_morphism(b);
  MorphismTable H;  // zero

  for (int iter = 0; iter <= b.num_gens() + 1; ++iter) {
    // find least eligible arrow: a no-input entry with idempotent coefficients
    int cx = -1, cy = -1;
    for (const auto& [key, terms] : cur.table()) {
      if (!key.left_in.empty() || !key.right_in.empty()) continue;
      for (const Term& t : terms) {
        if (t.dst == key.src) continue;
        bool lid = t.lout < 0 || cur.left_alg()->is_idempotent(t.lout);
        bool rid = t.rout < 0 || cur.right_alg()->is_idempotent(t.rout);
        if (!lid || !rid) continue;
        if (cx < 0 || std::make_pair(key.src, t.dst) < std::make_pair(cx, cy)) {
          cx = key.src;
          cy = t.dst;
        }
      }
    }
    if (cx < 0) {
      Simplified s{cur, F, G, H, b};
      return s;
    }
    if (iter > b.num_gens()) throw NonTerminating("cancellation iteration bound exceeded");

    // build the reduced module
    std::vector<int> gmap(cur.num_gens(), -1);
    Bimodule next(cur.left_tag(), cur.right_tag(), cur.left_alg(), cur.right_alg());
    next.set_right_op(cur.right_op());
    for (int g = 0; g < cur.num_gens(); ++g) {
      if (g == cx || g == cy) continue;
      gmap[g] = next.add_gen(cur.gen(g).name, cur.gen(g).left_idem, cur.gen(g).right_idem);
    }
    auto within_cap = [&](const EntryKey& k) {
      return static_cast<int>(k.left_in.size()) <= input_cap && static_cast<int>(k.right_in.size()) <= input_cap;
    };
    // surviving entries
    for (const auto& [key, terms] : cur.table()) {
      if (gmap[key.src] < 0) continue;
      for (const Term& t : terms) {
        if (gmap[t.dst] < 0) continue;
        EntryKey nk = key;
        nk.src = gmap[key.src];
        Term nt = t;
        nt.dst = gmap[t.dst];
        if (within_cap(nk)) next.add_entry(nk, nt);
      }
    }
    // zig-zag composites P (into cy) then Q (out of cx)
    EntryTable zig;
    for (const auto& [kp, tps] : cur.table()) {
      if (gmap[kp.src] < 0) continue;
      for (const Term& tp : tps) {
        if (tp.dst != cy) continue;
        for (const auto& [kq, tqs] : cur.table()) {
          if (kq.src != cx) continue;
          for (const Term& tq : tqs) {
            if (gmap[tq.dst] < 0) continue;
            stack_into(zig, cur, kp, tp, kq, tq);
          }
        }
      }
    }
    for (const auto& [key, terms] : zig) {
      if (!within_cap(key)) continue;
      EntryKey nk = key;
      nk.src = gmap[key.src];
      for (const Term& t : terms) {
        Term nt = t;
        nt.dst = gmap[t.dst];
        next.add_entry(nk, nt);
      }
    }
    // rules survive untouched provided their generators do
    for (const RulePattern& r : cur.rules()) {
      if (gmap[r.src] < 0 || gmap[r.term.dst] < 0)
        throw NonTerminating("cancellation would clobber a rule family");
      RulePattern nr = r;
      nr.src = gmap[r.src];
      nr.term.dst = gmap[r.term.dst];
      next.add_rule(nr);
    }

    // elementary maps for this step
    std::vector<int> id_cur(cur.num_gens());
    for (int g = 0; g < cur.num_gens(); ++g) id_cur[g] = g;
    MorphismTable fk;  // cur -> next: projection + (cy -> targets of cx)
    for (int g = 0; g < cur.num_gens(); ++g) {
      if (gmap[g] < 0) continue;
      int l = cur.left_tag() == Tag::D ? cur.left_alg()->idempotent_gen(cur.gen(g).left_idem) : -1;
      int r = cur.right_tag() == Tag::D ? cur.right_alg()->idempotent_gen(cur.gen(g).right_idem) : -1;
      fk.toggle(EntryKey{g, {}, {}}, Term{l, gmap[g], r});
    }
    for (const auto& [kq, tqs] : cur.table()) {
      if (kq.src != cx) continue;
      for (const Term& tq : tqs) {
        if (gmap[tq.dst] < 0) continue;
        EntryKey nk = kq;
        nk.src = cy;
        Term nt = tq;
        nt.dst = gmap[tq.dst];
        if (within_cap(nk)) fk.toggle(nk, nt);
      }
    }
    MorphismTable gk;  // next -> cur: inclusion + (sources of cy -> cx)
    for (int g = 0; g < cur.num_gens(); ++g) {
      if (gmap[g] < 0) continue;
      int l = cur.left_tag() == Tag::D ? cur.left_alg()->idempotent_gen(cur.gen(g).left_idem) : -1;
      int r = cur.right_tag() == Tag::D ? cur.right_alg()->idempotent_gen(cur.gen(g).right_idem) : -1;
      gk.toggle(EntryKey{gmap[g], {}, {}}, Term{l, g, r});
    }
    for (const auto& [kp, tps] : cur.table()) {
      if (gmap[kp.src] < 0) continue;
      for (const Term& tp : tps) {
        if (tp.dst != cy) continue;
        EntryKey nk = kp;
        nk.src = gmap[kp.src];
        Term nt = tp;
        nt.dst = cx;
        if (within_cap(nk)) gk.toggle(nk, nt);
      }
    }
    MorphismTable hk;  // on cur: cy -> cx with idempotent coefficients
    {
      int l = cur.left_tag() == Tag::D ? cur.left_alg()->idempotent_gen(cur.gen(cy).left_idem) : -1;
      int r = cur.right_tag() == Tag::D ? cur.right_alg()->idempotent_gen(cur.gen(cy).right_idem) : -1;
      hk.toggle(EntryKey{cy, {}, {}}, Term{l, cx, r});
    }

    // H += G o hk o F (maps on the original module)
    MorphismTable hf = compose_morphisms(b, cur, cur, F, hk);
    MorphismTable ghf = compose_morphisms(b, cur, b, hf, G);
    for (const auto& [key, terms] : ghf.entries)
      for (const Term& t : terms) H.toggle(key, t);
    F = compose_morphisms(b, cur, next, F, fk);
    G = compose_morphisms(next, cur, b, gk, G);
    cur = std::move(next);
  }
  throw NonTerminating("unreachable");
}

bool Simplified::verify(int left_len, int right_len) const {
  // Length windows: composites may exceed the stored caps; compare within a
  // conservative window so truncation cannot fake a mismatch.
  int lw = left_len >= 0 ? left_len : std::max(original.max_left_len(), reduced.max_left_len());
  int rw = right_len >= 0 ? right_len : std::max(original.max_right_len(), reduced.max_right_len());
  auto truncate = [&](const MorphismTable& m) {
    MorphismTable out;
    for (const auto& [key, terms] : m.entries) {
      if (static_cast<int>(key.left_in.size()) > lw || static_cast<int>(key.right_in.size()) > rw) continue;
      for (const Term& t : terms) out.toggle(key, t);
    }
    return out;
  };
  // d f = 0
  MorphismTable df = truncate(morphism_differential(original, reduced, f));
  if (!df.is_zero()) return false;
  // d g = 0
  MorphismTable dg = truncate(morphism_differential(reduced, original, g));
  if (!dg.is_zero()) return false;
  // f o g = id on reduced (g first, then f)
  MorphismTable fg = compose_morphisms(reduced, original, reduced, g, f);
  for (const auto& [key, terms] : identity_morphism(reduced).entries)
    for (const Term& t : terms) fg.toggle(key, t);
  if (!truncate(fg).is_zero()) return false;
  // g o f = id + d h on the original
  MorphismTable gf = compose_morphisms(original, reduced, original, f, g);
  for (const auto& [key, terms] : identity_morphism(original).entries)
    for (const Term& t : terms) gf.toggle(key, t);
  MorphismTable dh = morphism_differential(original, original, h);
  for (const auto& [key, terms] : dh.entries)
    for (const Term& t : terms) gf.toggle(key, t);
  if (!truncate(gf).is_zero()) return false;
  return true;
}

}  // namespace bhf
