#include "bhf/bimodule.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace bhf {

namespace {

bool same_algebra(const Algebra& a, const Algebra& b) {
  return a.circle() == b.circle() && a.strands_grading() == b.strands_grading() &&
         a.is_quotient() == b.is_quotient();
}

void toggle(std::set<Term>& acc, const Term& t) {
  auto it = acc.find(t);
  if (it == acc.end())
    acc.insert(t);
  else
    acc.erase(it);
}

}  // namespace

int Bimodule::add_gen(std::string name, int left_idem, int right_idem) {
  if ((left_tag_ == Tag::None) != (left_idem < 0)) throw TagMismatch("left idempotent vs tag");
  if ((right_tag_ == Tag::None) != (right_idem < 0)) throw TagMismatch("right idempotent vs tag");
  gens_.push_back(ModGen{std::move(name), left_idem, right_idem});
  return static_cast<int>(gens_.size()) - 1;
}

int Bimodule::gen_by_name(const std::string& name) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  return -1;
}

void Bimodule::check_term_typing(const EntryKey& key, const Term& term) const {
  const ModGen& src = gens_[key.src];
  const ModGen& dst = gens_[term.dst];
  if (left_tag_ == Tag::A) {
    for (size_t i = 0; i + 1 < key.left_in.size(); ++i)
      if (left_alg_->term_idem(key.left_in[i]) != left_alg_->init_idem(key.left_in[i + 1]))
        throw TagMismatch("left word chain");
    for (int u : key.left_in)
      if (left_alg_->is_idempotent(u)) throw TagMismatch("idempotent input");
    if (!key.left_in.empty()) {
      int first = key.left_in.front(), last = key.left_in.back();
      if (left_init_matched_) {
        if (left_alg_->init_idem(first) != src.left_idem || left_alg_->term_idem(last) != dst.left_idem)
          throw TagMismatch("left word typing");
      } else {
        if (left_alg_->term_idem(last) != src.left_idem || left_alg_->init_idem(first) != dst.left_idem)
          throw TagMismatch("left word typing");
      }
    } else if (dst.left_idem != src.left_idem) {
      throw TagMismatch("left idempotent must persist");
    }
    if (term.lout != -1) throw TagMismatch("left output on A side");
  } else if (left_tag_ == Tag::D) {
    if (term.lout < 0) throw TagMismatch("missing left output");
    if (left_alg_->init_idem(term.lout) != src.left_idem || left_alg_->term_idem(term.lout) != dst.left_idem)
      throw TagMismatch("left output typing");
    if (!key.left_in.empty()) throw TagMismatch("left inputs on D side");
  } else {
    if (term.lout != -1 || !key.left_in.empty()) throw TagMismatch("left data on empty side");
  }
  if (right_tag_ == Tag::A) {
    int cur = src.right_idem;
    for (int w : key.right_in) {
      if (right_alg_->is_idempotent(w)) throw TagMismatch("idempotent input");
      if (right_alg_->init_idem(w) != cur) throw TagMismatch("right word chain");
      cur = right_alg_->term_idem(w);
    }
    if (dst.right_idem != cur) throw TagMismatch("right word vs target idem");
    if (term.rout != -1) throw TagMismatch("right output on A side");
  } else if (right_tag_ == Tag::D) {
    if (term.rout < 0) throw TagMismatch("missing right output");
    if (right_alg_->init_idem(term.rout) != src.right_idem || right_alg_->term_idem(term.rout) != dst.right_idem)
      throw TagMismatch("right output typing");
    if (!key.right_in.empty()) throw TagMismatch("right inputs on D side");
  } else {
    if (term.rout != -1 || !key.right_in.empty()) throw TagMismatch("right data on empty side");
  }
}

void Bimodule::add_entry(const EntryKey& key, const Term& term) {
  check_term_typing(key, term);
  auto& terms = table_[key];
  auto it = std::find(terms.begin(), terms.end(), term);
  if (it != terms.end()) {
    terms.erase(it);
    if (terms.empty()) table_.erase(key);
  } else {
    terms.push_back(term);
    std::sort(terms.begin(), terms.end());
  }
}

void Bimodule::add_rule(RulePattern rule) {
  if (right_tag_ != Tag::A) throw TagMismatch("rules act on a right A side");
  rules_.push_back(std::move(rule));
}

std::vector<Term> Bimodule::lookup(const EntryKey& key) const {
  std::vector<Term> out;
  auto it = table_.find(key);
  if (it != table_.end()) out = it->second;
  for (const RulePattern& r : rules_) {
    if (r.src != key.src || !key.left_in.empty()) continue;
    const auto& w = key.right_in;
    size_t base = r.prefix.size() + r.suffix.size();
    if (w.size() < base) continue;
    size_t mid = w.size() - base;
    if (!r.repeated.empty() && mid % r.repeated.size() != 0) continue;
    if (r.repeated.empty() && mid != 0) continue;
    bool ok = std::equal(r.prefix.begin(), r.prefix.end(), w.begin()) &&
              std::equal(r.suffix.begin(), r.suffix.end(), w.end() - r.suffix.size());
    for (size_t p = 0; ok && p < mid; ++p)
      ok = w[r.prefix.size() + p] == r.repeated[p % r.repeated.size()];
    if (ok) out.push_back(r.term);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Bimodule::right_prefix_exists(int src, const std::vector<int>& w) const {
  for (const auto& [key, terms] : table_) {
    if (key.src != src || key.right_in.size() < w.size()) continue;
    if (std::equal(w.begin(), w.end(), key.right_in.begin())) return true;
  }
  for (const RulePattern& r : rules_) {
    if (r.src != src) continue;
    // prefix of prefix ++ repeated^i ++ suffix for some i >= 0
    for (int reps = 0; reps <= static_cast<int>(w.size()) + 1; ++reps) {
      std::vector<int> full = r.prefix;
      for (int t = 0; t < reps; ++t) full.insert(full.end(), r.repeated.begin(), r.repeated.end());
      full.insert(full.end(), r.suffix.begin(), r.suffix.end());
      if (full.size() >= w.size() && std::equal(w.begin(), w.end(), full.begin())) return true;
      if (r.repeated.empty()) break;
    }
  }
  return false;
}

int Bimodule::max_left_len() const {
  size_t m = 0;
  for (const auto& [key, terms] : table_) m = std::max(m, key.left_in.size());
  return static_cast<int>(m);
}

int Bimodule::max_right_len() const {
  size_t m = 0;
  for (const auto& [key, terms] : table_) m = std::max(m, key.right_in.size());
  for (const RulePattern& r : rules_)
    m = std::max(m, r.prefix.size() + 2 * r.repeated.size() + r.suffix.size());
  return static_cast<int>(m);
}

std::string Bimodule::describe() const {
  std::ostringstream os;
  auto tag = [](Tag t) { return t == Tag::D ? "D" : t == Tag::A ? "A" : "-"; };
  os << "tags (" << tag(left_tag_) << "," << tag(right_tag_) << "), " << gens_.size() << " generators, "
     << table_.size() << " table keys";
  if (!rules_.empty()) os << ", " << rules_.size() << " rule families";
  return os.str();
}

bool Bimodule::same_tables(const Bimodule& o) const {
  return gens_ == o.gens_ && table_ == o.table_;
}

// ---- structure equation ----

namespace {

// enumerate typed input words over the augmentation ideal
void enumerate_words(const Algebra& alg, int from_idem, bool fixed_is_init, int maxlen,
                     std::vector<std::vector<int>>& out) {
  // words chained init->term; when fixed_is_init the given idem is the init
  // of the first letter, otherwise the term of the last letter.
  std::vector<std::vector<int>> frontier{{}};
  out.push_back({});
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      for (int g = 0; g < alg.dim(); ++g) {
        if (alg.is_idempotent(g)) continue;
        std::vector<int> nw;
        if (fixed_is_init) {
          int cur = w.empty() ? from_idem : alg.term_idem(w.back());
          if (alg.init_idem(g) != cur) continue;
          nw = w;
          nw.push_back(g);
        } else {
          int cur = w.empty() ? from_idem : alg.init_idem(w.front());
          if (alg.term_idem(g) != cur) continue;
          nw.push_back(g);
          nw.insert(nw.end(), w.begin(), w.end());
        }
        out.push_back(nw);
        next.push_back(std::move(nw));
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

// Evaluates the full structure equation for one generator and input pair,
// toggling surviving terms into acc.
static void structure_terms(const Bimodule& b, int x, const std::vector<int>& u, const std::vector<int>& w,
                            std::set<Term>& acc) {
  const Algebra* la = b.left_alg().get();
  const Algebra* ra = b.right_alg().get();
  // two-operation compositions; the inner operation consumes the letters
  // adjacent to the module (the suffix of an honest left action, the prefix
  // of an init-matched stream)
  for (size_t p = 0; p <= u.size(); ++p) {
    std::vector<int> u_out, u_in;
    if (b.left_init_matched()) {
      u_in.assign(u.begin(), u.begin() + p);
      u_out.assign(u.begin() + p, u.end());
    } else {
      u_out.assign(u.begin(), u.begin() + p);
      u_in.assign(u.begin() + p, u.end());
    }
    for (size_t q = 0; q <= w.size(); ++q) {
      std::vector<int> w_in(w.begin(), w.begin() + q);
      std::vector<int> w_out(w.begin() + q, w.end());
      for (const Term& t1 : b.lookup(EntryKey{x, u_in, w_in})) {
        for (const Term& t2 : b.lookup(EntryKey{t1.dst, u_out, w_out})) {
          std::vector<int> louts{-1}, routs{-1};
          if (b.left_tag() == Tag::D) louts = la->product(t1.lout, t2.lout);
          if (b.right_tag() == Tag::D)
            routs = b.right_op() ? ra->product(t2.rout, t1.rout) : ra->product(t1.rout, t2.rout);
          for (int l : louts)
            for (int r : routs) toggle(acc, Term{b.left_tag() == Tag::D ? l : -1, t2.dst, b.right_tag() == Tag::D ? r : -1});
        }
      }
    }
  }
  // differentials of D outputs
  for (const Term& t : b.lookup(EntryKey{x, u, w})) {
    if (b.left_tag() == Tag::D)
      for (int l : la->differential(t.lout)) toggle(acc, Term{l, t.dst, t.rout});
    if (b.right_tag() == Tag::D)
      for (int r : ra->differential(t.rout)) toggle(acc, Term{t.lout, t.dst, r});
  }
  // differentials and products of inputs
  auto input_terms = [&](bool left_side) {
    const std::vector<int>& word = left_side ? u : w;
    const Algebra* alg = left_side ? la : ra;
    for (size_t r = 0; r < word.size(); ++r)
      for (int dg : alg->differential(word[r])) {
        std::vector<int> nu = word;
        nu[r] = dg;
        for (const Term& t : b.lookup(EntryKey{x, left_side ? nu : u, left_side ? w : nu})) toggle(acc, t);
      }
    for (size_t r = 0; r + 1 < word.size(); ++r)
      for (int pg : alg->product(word[r], word[r + 1])) {
        std::vector<int> nu;
        nu.insert(nu.end(), word.begin(), word.begin() + r);
        nu.push_back(pg);
        nu.insert(nu.end(), word.begin() + r + 2, word.end());
        for (const Term& t : b.lookup(EntryKey{x, left_side ? nu : u, left_side ? w : nu})) toggle(acc, t);
      }
  };
  if (b.left_tag() == Tag::A) input_terms(true);
  if (b.right_tag() == Tag::A) input_terms(false);
}

StructureReport check_structure(const Bimodule& b, int left_len, int right_len) {
  if (left_len < 0) left_len = b.left_tag() == Tag::A ? std::min(b.max_left_len() + 2, 6) : 0;
  if (right_len < 0) right_len = b.right_tag() == Tag::A ? std::min(b.max_right_len() + 2, 8) : 0;
  for (int x = 0; x < b.num_gens(); ++x) {
    std::vector<std::vector<int>> lwords{{}}, rwords{{}};
    if (b.left_tag() == Tag::A) {
      lwords.clear();
      enumerate_words(*b.left_alg(), b.gen(x).left_idem, b.left_init_matched(), left_len, lwords);
    }
    if (b.right_tag() == Tag::A) {
      rwords.clear();
      enumerate_words(*b.right_alg(), b.gen(x).right_idem, true, right_len, rwords);
    }
    for (const auto& u : lwords)
      for (const auto& w : rwords) {
        std::set<Term> acc;
        structure_terms(b, x, u, w, acc);
        if (!acc.empty()) {
          std::ostringstream os;
          os << "structure equation fails at generator " << b.gen(x).name << " with |u|=" << u.size()
             << " |w|=" << w.size();
          return StructureReport{false, os.str()};
        }
      }
  }
  return StructureReport{true, ""};
}

// ---- boundedness ----

Bounded is_bounded(const Bimodule& b, BoundFlavor flavor) {
  // Edge x -> y for every entry/rule, filtered by flavor:
  //  Operational: all entries.
  //  Left:  entries with no right inputs and idempotent (or absent) right
  //         output; a cycle of these emits left data for free.
  //  Right: symmetric.
  int n = b.num_gens();
  std::vector<std::vector<int>> adj(n);
  auto edge_ok = [&](const EntryKey& key, const Term& t, bool is_rule) {
    switch (flavor) {
      case BoundFlavor::Operational:
        return true;
      case BoundFlavor::Left: {
        bool right_quiet = key.right_in.empty() && !is_rule &&
                           (t.rout < 0 || b.right_alg()->is_idempotent(t.rout));
        return right_quiet;
      }
      case BoundFlavor::Right: {
        bool left_quiet = key.left_in.empty() && (t.lout < 0 || b.left_alg()->is_idempotent(t.lout));
        return left_quiet;
      }
    }
    return true;
  };
  for (const auto& [key, terms] : b.table())
    for (const Term& t : terms)
      if (edge_ok(key, t, false)) adj[key.src].push_back(t.dst);
  for (const RulePattern& r : b.rules()) {
    EntryKey k{r.src, {}, r.prefix};
    if (edge_ok(k, r.term, true)) adj[r.src].push_back(r.term.dst);
  }
  // cycle detection
  std::vector<int> state(n, 0);
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : adj[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && dfs(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && dfs(v)) return Bounded::No;
  return Bounded::Yes;
}

// ---- box tensor product ----

namespace {

struct PairedGens {
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> index;
};

PairedGens pair_generators(const Bimodule& x, const Bimodule& y, Bimodule& out) {
  PairedGens pg;
  for (int i = 0; i < x.num_gens(); ++i)
    for (int j = 0; j < y.num_gens(); ++j) {
      if (x.right_alg()->idempotent_subset(x.gen(i).right_idem) !=
          y.left_alg()->idempotent_subset(y.gen(j).left_idem))
        continue;
      int id = out.add_gen(x.gen(i).name + "*" + y.gen(j).name, x.gen(i).left_idem, y.gen(j).right_idem);
      pg.index[{i, j}] = id;
      pg.pairs.emplace_back(i, j);
    }
  return pg;
}

}  // namespace

Bimodule box(const Bimodule& x, const Bimodule& y, int path_cap, int input_cap) {
  if (!same_algebra(*x.right_alg(), *y.left_alg())) throw TagMismatch("box: middle algebras differ");
  bool forward = x.right_tag() == Tag::A && y.left_tag() == Tag::D;
  bool mirror = x.right_tag() == Tag::D && y.left_tag() == Tag::A;
  if (!forward && !mirror) throw TagMismatch("box: need an A side against a D side");

  Bimodule out(x.left_tag(), y.right_tag(), x.left_alg(), y.right_alg());
  out.set_right_op(y.right_op());
  PairedGens pg = pair_generators(x, y, out);
  const Algebra& mid = *y.left_alg();

  if (forward) {
    // group X entries by source and right word
    std::map<std::pair<int, std::vector<int>>, std::vector<std::pair<EntryKey, Term>>> by_word;
    for (const auto& [key, terms] : x.table())
      for (const Term& t : terms) by_word[{key.src, key.right_in}].push_back({key, t});

    for (auto [xi, yj] : pg.pairs) {
      // DFS over Y delta-iterates from yj, recording produced middle word,
      // consumed right inputs, and right-D outputs (in application order).
      struct State {
        int y;
        std::vector<int> bword, win, routs;
        int steps = 0;
      };
      std::deque<State> queue{{yj, {}, {}, {}, 0}};
      int explored = 0;
      while (!queue.empty()) {
        State st = queue.front();
        queue.pop_front();
        if (++explored > path_cap) throw UnboundedPair("box: path enumeration exceeded cap");
        // emit entries matching X entries with this middle word
        auto needed = by_word.find({xi, st.bword});
        if (needed != by_word.end()) {
          for (const auto& [xkey, xterm] : needed->second) {
            std::vector<int> routs{-1};
            if (y.right_tag() == Tag::D) {
              // fold products over st.routs in application (or reversed) order
              const Algebra& ralg = *y.right_alg();
              std::vector<int> order = st.routs;
              if (y.right_op()) std::reverse(order.begin(), order.end());
              std::vector<int> acc;
              if (order.empty()) {
                // an idempotent coefficient on the output side
                acc = {ralg.idempotent_gen(out.gen(pg.index.at({xi, yj})).right_idem)};
              } else {
                acc = {order[0]};
                for (size_t t = 1; t < order.size(); ++t) {
                  std::vector<int> next;
                  std::set<int> tog;
                  for (int a : acc)
                    for (int pr : ralg.product(a, order[t])) {
                      auto it = tog.find(pr);
                      if (it == tog.end())
                        tog.insert(pr);
                      else
                        tog.erase(it);
                    }
                  acc.assign(tog.begin(), tog.end());
                }
              }
              routs = acc;
            }
            auto dstit = pg.index.find({xterm.dst, st.y});
            if (dstit == pg.index.end()) continue;  // idempotent mismatch kills the term
            for (int r : routs)
              out.add_entry(EntryKey{pg.index.at({xi, yj}), xkey.left_in, st.win},
                            Term{xterm.lout, dstit->second, y.right_tag() == Tag::D ? r : -1});
          }
        }
        if (st.steps >= path_cap) continue;
        // extend
        for (const auto& [ykey, yterms] : y.table()) {
          if (ykey.src != st.y) continue;
          for (const Term& t : yterms) {
            if (mid.is_idempotent(t.lout)) {
              // strict unitality: only a standalone length-one iterate acts
              if (st.bword.empty() && st.win.empty() && st.routs.empty()) {
                if (mid.init_idem(t.lout) == x.gen(xi).right_idem) {
                  auto dstit = pg.index.find({xi, t.dst});
                  if (dstit != pg.index.end()) {
                    int lcoef = -1;
                    if (x.left_tag() == Tag::D)
                      lcoef = x.left_alg()->idempotent_gen(x.gen(xi).left_idem);
                    out.add_entry(EntryKey{pg.index.at({xi, yj}), {}, ykey.right_in},
                                  Term{lcoef, dstit->second, t.rout});
                  }
                }
              }
              continue;
            }
            State ns = st;
            ns.y = t.dst;
            ns.bword.push_back(t.lout);
            ns.win.insert(ns.win.end(), ykey.right_in.begin(), ykey.right_in.end());
            if (t.rout >= 0) ns.routs.push_back(t.rout);
            ns.steps++;
            if (static_cast<int>(ns.win.size()) > input_cap) continue;  // table truncation
            if (static_cast<int>(ns.bword.size()) > 4 * input_cap)
              throw UnboundedPair("box: middle words grow without bound");
            if (!x.right_prefix_exists(xi, ns.bword)) continue;
            queue.push_back(std::move(ns));
          }
        }
      }
    }
    return out;
  }

  // mirror: X right-D outputs feed Y left-A inputs (reversed into the word)
  if (x.left_tag() == Tag::A) throw TagMismatch("box: left-A with right-D factor unsupported");
  // collect prefix set of reversed Y left words
  std::set<std::vector<int>> rev_prefixes;
  for (const auto& [ykey, terms] : y.table()) {
    std::vector<int> rev(ykey.left_in.rbegin(), ykey.left_in.rend());
    for (size_t l = 0; l <= rev.size(); ++l) rev_prefixes.insert(std::vector<int>(rev.begin(), rev.begin() + l));
  }
  std::map<std::pair<int, std::vector<int>>, std::vector<std::pair<EntryKey, Term>>> y_by_word;
  for (const auto& [ykey, terms] : y.table())
    for (const Term& t : terms) y_by_word[{ykey.src, ykey.left_in}].push_back({ykey, t});

  const Algebra& lalg = *x.left_alg();
  for (auto [xi, yj] : pg.pairs) {
    struct State {
      int xg;
      std::vector<int> louts, bword;
      int steps = 0;
    };
    std::deque<State> queue{{xi, {}, {}, 0}};
    int explored = 0;
    while (!queue.empty()) {
      State st = queue.front();
      queue.pop_front();
      if (++explored > path_cap) throw UnboundedPair("box: path enumeration exceeded cap");
      std::vector<int> uword(st.bword.rbegin(), st.bword.rend());
      auto needed = y_by_word.find({yj, uword});
      if (needed != y_by_word.end()) {
        for (const auto& [ykey, yterm] : needed->second) {
          auto dstit = pg.index.find({st.xg, yterm.dst});
          if (dstit == pg.index.end()) continue;
          // product of louts in application order
          std::vector<int> acc;
          if (x.left_tag() == Tag::D) {
            if (st.louts.empty()) {
              acc = {lalg.idempotent_gen(x.gen(xi).left_idem)};
            } else {
              acc = {st.louts[0]};
              for (size_t t = 1; t < st.louts.size(); ++t) {
                std::set<int> tog;
                for (int a : acc)
                  for (int pr : lalg.product(a, st.louts[t])) {
                    auto it = tog.find(pr);
                    if (it == tog.end())
                      tog.insert(pr);
                    else
                      tog.erase(it);
                  }
                acc.assign(tog.begin(), tog.end());
              }
            }
          } else {
            acc = {-1};
          }
          for (int l : acc)
            out.add_entry(EntryKey{pg.index.at({xi, yj}), {}, ykey.right_in},
                          Term{x.left_tag() == Tag::D ? l : -1, dstit->second, yterm.rout});
        }
      }
      if (st.steps >= path_cap) continue;
      for (const auto& [xkey, xterms] : x.table()) {
        if (xkey.src != st.xg) continue;
        for (const Term& t : xterms) {
          if (mid.is_idempotent(t.rout)) {
            if (st.bword.empty() && st.louts.empty()) {
              if (mid.init_idem(t.rout) == y.gen(yj).left_idem) {
                auto dstit = pg.index.find({t.dst, yj});
                if (dstit != pg.index.end()) {
                  int rcoef = -1;
                  if (y.right_tag() == Tag::D)
                    rcoef = y.right_alg()->idempotent_gen(y.gen(yj).right_idem);
                  out.add_entry(EntryKey{pg.index.at({xi, yj}), {}, {}},
                                Term{t.lout, dstit->second, rcoef});
                }
              }
            }
            continue;
          }
          State ns = st;
          ns.xg = t.dst;
          if (t.lout >= 0) ns.louts.push_back(t.lout);
          ns.bword.push_back(t.rout);
          ns.steps++;
          std::vector<int> probe(ns.bword.begin(), ns.bword.end());
          if (!rev_prefixes.count(probe)) continue;
          queue.push_back(std::move(ns));
        }
      }
    }
  }
  return out;
}

// ---- constructors ----

Bimodule identity_DA(const AlgebraRef& a) {
  Bimodule b(Tag::D, Tag::A, a, a);
  std::vector<int> gen_of_idem(a->num_idempotents());
  for (int id = 0; id < a->num_idempotents(); ++id)
    gen_of_idem[id] = b.add_gen("i" + std::to_string(id), id, id);
  for (int g = 0; g < a->dim(); ++g) {
    if (a->is_idempotent(g)) continue;
    b.add_entry(EntryKey{gen_of_idem[a->init_idem(g)], {}, {g}},
                Term{g, gen_of_idem[a->term_idem(g)], -1});
  }
  return b;
}

Bimodule algebra_AA(const AlgebraRef& a) {
  Bimodule b(Tag::A, Tag::A, a, a);
  for (int g = 0; g < a->dim(); ++g) b.add_gen(a->gen_name(g), a->init_idem(g), a->term_idem(g));
  for (int g = 0; g < a->dim(); ++g) {
    for (int d : a->differential(g)) b.add_entry(EntryKey{g, {}, {}}, Term{-1, d, -1});
    for (int u = 0; u < a->dim(); ++u) {
      if (a->is_idempotent(u)) continue;
      if (a->term_idem(u) == a->init_idem(g))
        for (int p : a->product(u, g)) b.add_entry(EntryKey{g, {u}, {}}, Term{-1, p, -1});
      if (a->init_idem(u) == a->term_idem(g))
        for (int p : a->product(g, u)) b.add_entry(EntryKey{g, {}, {u}}, Term{-1, p, -1});
    }
  }
  return b;
}

Bimodule bar_DD(const AlgebraRef& a, int max_len) {
  Bimodule b(Tag::D, Tag::D, a, a);
  b.set_right_op(true);
  // enumerate chained words of augmentation-ideal basis elements
  std::map<std::vector<int>, int> word_gen;
  std::vector<std::vector<int>> words;
  for (int id = 0; id < a->num_idempotents(); ++id) {
    std::vector<int> w{-1 - id};  // sentinel empty word carrying idempotent id
    word_gen[w] = b.add_gen("[]" + std::to_string(id), id, id);
    words.push_back(w);
  }
  std::vector<std::vector<int>> frontier;
  for (int g = 0; g < a->dim(); ++g)
    if (!a->is_idempotent(g)) frontier.push_back({g});
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      std::ostringstream os;
      os << "[";
      for (size_t i = 0; i < w.size(); ++i) os << (i ? "|" : "") << a->gen_name(w[i]);
      os << "]";
      word_gen[w] = b.add_gen(os.str(), a->init_idem(w.front()), a->term_idem(w.back()));
      words.push_back(w);
      if (len < max_len)
        for (int g = 0; g < a->dim(); ++g)
          if (!a->is_idempotent(g) && a->init_idem(g) == a->term_idem(w.back())) {
            std::vector<int> nw = w;
            nw.push_back(g);
            next.push_back(std::move(nw));
          }
    }
    frontier = std::move(next);
  }
  auto empty_word = [&](int idem) { return std::vector<int>{-1 - idem}; };
  auto find_word = [&](const std::vector<int>& w) -> int {
    auto it = word_gen.find(w);
    return it == word_gen.end() ? -1 : it->second;
  };
  for (const auto& w : words) {
    if (w.front() < 0) continue;  // empty words have zero differential
    int src = word_gen[w];
    // pop left
    {
      std::vector<int> rest(w.begin() + 1, w.end());
      if (rest.empty()) rest = empty_word(a->term_idem(w.front()));
      int dst = find_word(rest);
      if (dst >= 0)
        b.add_entry(EntryKey{src, {}, {}}, Term{w.front(), dst, a->idempotent_gen(a->term_idem(w.back()))});
    }
    // pop right
    {
      std::vector<int> rest(w.begin(), w.end() - 1);
      if (rest.empty()) rest = empty_word(a->init_idem(w.back()));
      int dst = find_word(rest);
      if (dst >= 0)
        b.add_entry(EntryKey{src, {}, {}}, Term{a->idempotent_gen(a->init_idem(w.front())), dst, w.back()});
    }
    // interior differential and products
    for (size_t i = 0; i < w.size(); ++i)
      for (int dg : a->differential(w[i])) {
        std::vector<int> nw = w;
        nw[i] = dg;
        int dst = find_word(nw);
        if (dst >= 0)
          b.add_entry(EntryKey{src, {}, {}},
                      Term{a->idempotent_gen(a->init_idem(w.front())), dst,
                           a->idempotent_gen(a->term_idem(w.back()))});
      }
    for (size_t i = 0; i + 1 < w.size(); ++i)
      for (int pg : a->product(w[i], w[i + 1])) {
        std::vector<int> nw;
        nw.insert(nw.end(), w.begin(), w.begin() + i);
        nw.push_back(pg);
        nw.insert(nw.end(), w.begin() + i + 2, w.end());
        int dst = find_word(nw);
        if (dst >= 0)
          b.add_entry(EntryKey{src, {}, {}},
                      Term{a->idempotent_gen(a->init_idem(w.front())), dst,
                           a->idempotent_gen(a->term_idem(w.back()))});
      }
  }
  return b;
}

Bimodule opposite(const Bimodule& b) {
  if (b.left_tag() == Tag::A || b.right_tag() == Tag::A)
    throw TagMismatch("opposite: only D/None sides supported");
  // new sides live over the reversed circles, with R applied to coefficients
  AlgebraRef new_left, new_right;
  if (b.right_tag() == Tag::D)
    new_left = std::make_shared<Algebra>(b.right_alg()->circle().reversed(), b.right_alg()->strands_grading(),
                                         b.right_alg()->is_quotient());
  if (b.left_tag() == Tag::D)
    new_right = std::make_shared<Algebra>(b.left_alg()->circle().reversed(), b.left_alg()->strands_grading(),
                                          b.left_alg()->is_quotient());
  Bimodule out(b.right_tag(), b.left_tag(), new_left, new_right);
  auto rev_idem = [](const Algebra& from, const Algebra& to, int idem) {
    std::vector<int> subset;
    for (int h : from.idempotent_subset(idem)) subset.push_back(from.circle().reversed_pair(h));
    std::sort(subset.begin(), subset.end());
    return to.idempotent_id(subset);
  };
  for (int g = 0; g < b.num_gens(); ++g) {
    int li = b.right_tag() == Tag::D ? rev_idem(*b.right_alg(), *new_left, b.gen(g).right_idem) : -1;
    int ri = b.left_tag() == Tag::D ? rev_idem(*b.left_alg(), *new_right, b.gen(g).left_idem) : -1;
    out.add_gen(b.gen(g).name + "*", li, ri);
  }
  auto rev_gen = [](const Algebra& from, const Algebra& to, int g) {
    return to.index_of(reverse_generator(from.circle(), from.gen(g)));
  };
  for (const auto& [key, terms] : b.table())
    for (const Term& t : terms) {
      int lout = b.right_tag() == Tag::D ? rev_gen(*b.right_alg(), *new_left, t.rout) : -1;
      int rout = b.left_tag() == Tag::D ? rev_gen(*b.left_alg(), *new_right, t.lout) : -1;
      out.add_entry(EntryKey{t.dst, {}, {}}, Term{lout, key.src, rout});
    }
  return out;
}

Bimodule cfdd_identity(const AlgebraRef& az, const AlgebraRef& aminusz) {
  const PointedMatchedCircle& z = az->circle();
  if (!(aminusz->circle() == z.reversed())) throw TagMismatch("cfdd_identity: algebras not mirror circles");
  if (aminusz->strands_grading() != -az->strands_grading())
    throw TagMismatch("cfdd_identity: strands gradings must be opposite");
  Bimodule b(Tag::D, Tag::D, az, aminusz);
  int npairs = z.num_pairs();
  int size = z.genus() + az->strands_grading();
  // generators: one per (k+i)-subset r, with the complementary reversed subset
  std::vector<std::vector<int>> subsets;
  std::vector<int> idx(size);
  for (int t = 0; t < size; ++t) idx[t] = t;
  if (size == 0) subsets.push_back({});
  while (size > 0) {
    std::vector<int> s(idx.begin(), idx.end());
    subsets.push_back(s);
    int t = size - 1;
    while (t >= 0 && idx[t] == npairs - size + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int u = t + 1; u < size; ++u) idx[u] = idx[u - 1] + 1;
  }
  std::map<std::vector<int>, int> gen_of;
  for (const auto& r : subsets) {
    std::vector<int> s;
    for (int h = 0; h < npairs; ++h)
      if (!std::count(r.begin(), r.end(), h)) s.push_back(z.reversed_pair(h));
    std::sort(s.begin(), s.end());
    int li = az->idempotent_id(r);
    int ri = aminusz->idempotent_id(s);
    if (li < 0 || ri < 0) throw std::logic_error("cfdd_identity: missing idempotent");
    std::ostringstream os;
    os << "d{";
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i] + 1;
    os << "}";
    gen_of[r] = b.add_gen(os.str(), li, ri);
  }
  int n = z.num_points();
  for (const auto& r : subsets) {
    for (int a = 0; a < n; ++a)
      for (int bb = a + 1; bb < n; ++bb) {
        // left factor: the generator with moving strand (a,bb), horizontals
        // r minus the pair of a
        if (!std::count(r.begin(), r.end(), z.pair_of(a))) continue;
        std::vector<int> horiz;
        for (int h : r)
          if (h != z.pair_of(a)) horiz.push_back(h);
        if (std::count(horiz.begin(), horiz.end(), z.pair_of(bb))) continue;
        AlgGenerator lg;
        lg.moving = {{a, bb}};
        lg.horizontals = horiz;
        std::sort(lg.horizontals.begin(), lg.horizontals.end());
        int lid = az->index_of(lg);
        if (lid < 0) continue;
        // target subset r'
        std::vector<int> rp = horiz;
        rp.push_back(z.pair_of(bb));
        std::sort(rp.begin(), rp.end());
        auto tgt = gen_of.find(rp);
        if (tgt == gen_of.end()) continue;
        // right factor: the reversed chord with horizontals s minus its pair
        AlgGenerator rb;
        rb.moving = {{n - 1 - bb, n - 1 - a}};
        const auto& s = aminusz->idempotent_subset(b.gen(gen_of[r]).right_idem);
        int start_pair = aminusz->circle().pair_of(n - 1 - bb);
        if (!std::count(s.begin(), s.end(), start_pair)) continue;
        for (int h : s)
          if (h != start_pair) rb.horizontals.push_back(h);
        int end_pair = aminusz->circle().pair_of(n - 1 - a);
        if (std::count(rb.horizontals.begin(), rb.horizontals.end(), end_pair)) continue;
        std::sort(rb.horizontals.begin(), rb.horizontals.end());
        int rid = aminusz->index_of(rb);
        if (rid < 0) continue;
        b.add_entry(EntryKey{gen_of[r], {}, {}}, Term{lid, tgt->second, rid});
      }
  }
  return b;
}

// ---- serialization ----

std::string Bimodule::to_json() const {
  nlohmann::json j;
  auto tag_name = [](Tag t) { return t == Tag::D ? "D" : t == Tag::A ? "A" : "none"; };
  j["left_tag"] = tag_name(left_tag_);
  j["right_tag"] = tag_name(right_tag_);
  auto alg_json = [](const AlgebraRef& a) {
    nlohmann::json ja;
    if (!a) return ja;
    ja["pmc"] = nlohmann::json::parse(a->circle().to_json());
    ja["i"] = a->strands_grading();
    ja["quotient"] = a->is_quotient();
    return ja;
  };
  j["left_algebra"] = alg_json(left_alg_);
  j["right_algebra"] = alg_json(right_alg_);
  j["right_op"] = right_op_;
  j["generators"] = nlohmann::json::array();
  for (const ModGen& g : gens_) {
    nlohmann::json jg;
    jg["name"] = g.name;
    if (g.left_idem >= 0) jg["left_idem"] = left_alg_->idempotent_subset(g.left_idem);
    if (g.right_idem >= 0) jg["right_idem"] = right_alg_->idempotent_subset(g.right_idem);
    j["generators"].push_back(jg);
  }
  j["entries"] = nlohmann::json::array();
  for (const auto& [key, terms] : table_)
    for (const Term& t : terms) {
      nlohmann::json je;
      je["src"] = gens_[key.src].name;
      je["dst"] = gens_[t.dst].name;
      if (left_tag_ == Tag::A) {
        je["left_in"] = nlohmann::json::array();
        for (int u : key.left_in) je["left_in"].push_back(nlohmann::json::parse(left_alg_->element_json({u})));
      }
      if (right_tag_ == Tag::A) {
        je["right_in"] = nlohmann::json::array();
        for (int w : key.right_in) je["right_in"].push_back(nlohmann::json::parse(right_alg_->element_json({w})));
      }
      if (t.lout >= 0) je["left_out"] = nlohmann::json::parse(left_alg_->element_json({t.lout}));
      if (t.rout >= 0) je["right_out"] = nlohmann::json::parse(right_alg_->element_json({t.rout}));
      j["entries"].push_back(je);
    }
  j["rules"] = nlohmann::json::array();
  for (const RulePattern& r : rules_) {
    nlohmann::json jr;
    jr["src"] = gens_[r.src].name;
    jr["dst"] = gens_[r.term.dst].name;
    auto word = [&](const std::vector<int>& w) {
      nlohmann::json arr = nlohmann::json::array();
      for (int g : w) arr.push_back(nlohmann::json::parse(right_alg_->element_json({g})));
      return arr;
    };
    jr["prefix"] = word(r.prefix);
    jr["repeated"] = word(r.repeated);
    jr["suffix"] = word(r.suffix);
    if (r.term.lout >= 0) jr["left_out"] = nlohmann::json::parse(left_alg_->element_json({r.term.lout}));
    j["rules"].push_back(jr);
  }
  return j.dump(1);
}

namespace {

int parse_gen(const Algebra& a, const nlohmann::json& jg) {
  AlgGenerator g;
  for (const auto& m : jg.at("moving")) g.moving.emplace_back(m.at(0).get<int>() - 1, m.at(1).get<int>() - 1);
  for (const auto& h : jg.at("horizontals")) g.horizontals.push_back(h.get<int>() - 1);
  std::sort(g.moving.begin(), g.moving.end());
  std::sort(g.horizontals.begin(), g.horizontals.end());
  int id = a.index_of(g);
  if (id < 0) throw std::runtime_error("unknown algebra generator in file");
  return id;
}

}  // namespace

Bimodule Bimodule::from_json(const std::string& text, AlgebraRef left, AlgebraRef right) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto tag_of = [](const std::string& s) { return s == "D" ? Tag::D : s == "A" ? Tag::A : Tag::None; };
  Tag lt = tag_of(j.at("left_tag").get<std::string>());
  Tag rt = tag_of(j.at("right_tag").get<std::string>());
  auto load_alg = [](const nlohmann::json& ja) -> AlgebraRef {
    if (ja.is_null() || ja.empty()) return nullptr;
    PointedMatchedCircle z = PointedMatchedCircle::from_json(ja.at("pmc").dump());
    return std::make_shared<Algebra>(z, ja.at("i").get<int>(), ja.value("quotient", false));
  };
  if (!left && lt != Tag::None) left = load_alg(j.at("left_algebra"));
  if (!right && rt != Tag::None) right = load_alg(j.at("right_algebra"));
  Bimodule b(lt, rt, left, right);
  b.set_right_op(j.value("right_op", false));
  for (const auto& jg : j.at("generators")) {
    int li = -1, ri = -1;
    if (jg.contains("left_idem")) li = left->idempotent_id(jg.at("left_idem").get<std::vector<int>>());
    if (jg.contains("right_idem")) ri = right->idempotent_id(jg.at("right_idem").get<std::vector<int>>());
    b.add_gen(jg.at("name").get<std::string>(), li, ri);
  }
  for (const auto& je : j.at("entries")) {
    EntryKey key;
    key.src = b.gen_by_name(je.at("src").get<std::string>());
    if (je.contains("left_in"))
      for (const auto& u : je.at("left_in")) key.left_in.push_back(parse_gen(*left, u));
    if (je.contains("right_in"))
      for (const auto& w : je.at("right_in")) key.right_in.push_back(parse_gen(*right, w));
    Term t;
    t.dst = b.gen_by_name(je.at("dst").get<std::string>());
    t.lout = je.contains("left_out") ? parse_gen(*left, je.at("left_out")) : -1;
    t.rout = je.contains("right_out") ? parse_gen(*right, je.at("right_out")) : -1;
    b.add_entry(key, t);
  }
  for (const auto& jr : j.value("rules", nlohmann::json::array())) {
    RulePattern r;
    r.src = b.gen_by_name(jr.at("src").get<std::string>());
    r.term.dst = b.gen_by_name(jr.at("dst").get<std::string>());
    auto word = [&](const nlohmann::json& arr) {
      std::vector<int> w;
      for (const auto& g : arr) w.push_back(parse_gen(*right, g));
      return w;
    };
    r.prefix = word(jr.at("prefix"));
    r.repeated = word(jr.at("repeated"));
    r.suffix = word(jr.at("suffix"));
    r.term.lout = jr.contains("left_out") ? parse_gen(*left, jr.at("left_out")) : -1;
    b.add_rule(r);
  }
  return b;
}

}  // namespace bhf
