#include "bhf/strands.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "bhf/f2.hpp"
#include "json.hpp"

namespace bhf {

std::vector<int> SmallGen::target_sorted() const {
  std::vector<int> t = image;
  std::sort(t.begin(), t.end());
  return t;
}

int SmallGen::inversions() const {
  int inv = 0;
  for (size_t i = 0; i < source.size(); ++i)
    for (size_t j = i + 1; j < source.size(); ++j)
      if (image[i] > image[j]) ++inv;
  return inv;
}

std::optional<SmallGen> small_product(const SmallGen& a, const SmallGen& b) {
  if (a.target_sorted() != b.source) return std::nullopt;
  SmallGen c;
  c.source = a.source;
  c.image.resize(a.source.size());
  for (size_t i = 0; i < a.source.size(); ++i) {
    int mid = a.image[i];
    auto it = std::lower_bound(b.source.begin(), b.source.end(), mid);
    c.image[i] = b.image[it - b.source.begin()];
  }
  if (c.inversions() != a.inversions() + b.inversions()) return std::nullopt;
  return c;
}

std::vector<SmallGen> small_differential(const SmallGen& a) {
  std::vector<SmallGen> out;
  int inv = a.inversions();
  for (size_t i = 0; i < a.source.size(); ++i)
    for (size_t j = i + 1; j < a.source.size(); ++j) {
      if (a.image[i] <= a.image[j]) continue;  // want an inversion
      SmallGen r = a;
      std::swap(r.image[i], r.image[j]);
      if (r.inversions() == inv - 1) out.push_back(std::move(r));
    }
  return out;
}

// --- Algebra ---

Algebra::Algebra(PointedMatchedCircle z, int strands_grading, bool mult_one)
    : z_(std::move(z)), i_(strands_grading), mult_one_(mult_one) {
  int k = z_.genus();
  if (i_ < -k || i_ > k) throw std::runtime_error("strands grading out of range");
  build_basis();
}

namespace {

// local multiplicities of the one-chain of a generator
std::vector<int> one_chain(const AlgGenerator& g, int n) {
  std::vector<int> h(std::max(0, n - 1), 0);
  for (auto [a, b] : g.moving)
    for (int j = a; j < b; ++j) ++h[j];
  return h;
}

bool mult_at_most_one(const std::vector<int>& h) {
  for (int x : h)
    if (x > 1) return false;
  return true;
}

}  // namespace

void Algebra::build_basis() {
  int n = z_.num_points();
  int k = z_.genus();
  int total = k + i_;

  // enumerate moving strand sets with pairwise distinct initial points in
  // distinct pairs, same for terminal points
  std::vector<std::pair<int, int>> strands;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) strands.emplace_back(a, b);

  std::vector<AlgGenerator> raw;
  std::vector<std::pair<int, int>> current;
  // recursive enumeration over strands in lexicographic order
  auto compatible = [&](const std::pair<int, int>& s) {
    for (auto [a, b] : current) {
      if (a == s.first || b == s.second) return false;
      if (z_.pair_of(a) == z_.pair_of(s.first)) return false;
      if (z_.pair_of(b) == z_.pair_of(s.second)) return false;
    }
    return true;
  };
  std::vector<int> freepairs;
  auto emit = [&]() {
    int m = static_cast<int>(current.size());
    if (m > total) return;
    int want = total - m;
    // horizontal pairs must avoid pairs of initial and terminal points
    std::vector<bool> used(z_.num_pairs(), false);
    for (auto [a, b] : current) {
      used[z_.pair_of(a)] = true;
      used[z_.pair_of(b)] = true;
    }
    freepairs.clear();
    for (int h = 0; h < z_.num_pairs(); ++h)
      if (!used[h]) freepairs.push_back(h);
    if (want > static_cast<int>(freepairs.size())) return;
    // all want-subsets of freepairs
    std::vector<int> idx(want);
    for (int t = 0; t < want; ++t) idx[t] = t;
    while (true) {
      AlgGenerator g;
      g.moving = current;
      std::sort(g.moving.begin(), g.moving.end());
      for (int t = 0; t < want; ++t) g.horizontals.push_back(freepairs[idx[t]]);
      raw.push_back(std::move(g));
      int t = want - 1;
      while (t >= 0 && idx[t] == static_cast<int>(freepairs.size()) - want + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int u = t + 1; u < want; ++u) idx[u] = idx[u - 1] + 1;
    }
  };
  // depth-first over strand subsets
  std::vector<size_t> stack;
  emit();
  size_t start = 0;
  while (true) {
    bool descended = false;
    for (size_t s = start; s < strands.size(); ++s) {
      if (!compatible(strands[s])) continue;
      current.push_back(strands[s]);
      stack.push_back(s);
      emit();
      start = s + 1;
      descended = true;
      break;
    }
    if (!descended) {
      if (stack.empty()) break;
      start = stack.back() + 1;
      stack.pop_back();
      current.pop_back();
    }
  }

  std::sort(raw.begin(), raw.end());
  for (auto& g : raw) {
    if (mult_one_ && !mult_at_most_one(one_chain(g, n))) continue;
    index_[g] = static_cast<int>(basis_.size());
    basis_.push_back(g);
  }

  init_idem_.resize(basis_.size());
  term_idem_.resize(basis_.size());
  gr_.resize(basis_.size());
  for (size_t g = 0; g < basis_.size(); ++g) {
    std::vector<int> s, t;
    for (auto [a, b] : basis_[g].moving) {
      s.push_back(z_.pair_of(a));
      t.push_back(z_.pair_of(b));
    }
    for (int h : basis_[g].horizontals) {
      s.push_back(h);
      t.push_back(h);
    }
    std::sort(s.begin(), s.end());
    std::sort(t.begin(), t.end());
    auto intern = [&](const std::vector<int>& idem) {
      auto it = idem_index_.find(idem);
      if (it != idem_index_.end()) return it->second;
      int id = static_cast<int>(idempotents_.size());
      idem_index_[idem] = id;
      idempotents_.push_back(idem);
      return id;
    };
    init_idem_[g] = intern(s);
    term_idem_[g] = intern(t);

    // gr' from the first E-instance
    std::vector<SmallGen> inst = e_expansion(basis_[g]);
    const SmallGen& first = inst.front();
    std::vector<int> alpha = one_chain(basis_[g], n);
    long long maslov2 = 2LL * first.inversions();
    for (int p : first.source) {
      int below = p > 0 ? alpha[p - 1] : 0;
      int above = p < n - 1 ? alpha[p] : 0;
      maslov2 -= below + above;
    }
    gr_[g] = GradingElement{maslov2, alpha};
  }

  idem_gen_.assign(idempotents_.size(), -1);
  for (size_t g = 0; g < basis_.size(); ++g)
    if (is_idempotent(static_cast<int>(g))) idem_gen_[init_idem_[g]] = static_cast<int>(g);

  int maxsum = 0;
  for (size_t g = 0; g < basis_.size(); ++g) {
    int s = 0;
    for (int x : gr_[g].alpha) s += x;
    maxsum = std::max(maxsum, s);
  }
  nilpotency_ = maxsum + 1;
}

int Algebra::index_of(const AlgGenerator& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

int Algebra::idempotent_id(const std::vector<int>& subset) const {
  auto it = idem_index_.find(subset);
  return it == idem_index_.end() ? -1 : it->second;
}

std::vector<SmallGen> Algebra::e_expansion(const AlgGenerator& g) const {
  std::vector<SmallGen> out;
  int hn = static_cast<int>(g.horizontals.size());
  for (int mask = 0; mask < (1 << hn); ++mask) {
    std::vector<std::pair<int, int>> pts;  // (source, image)
    for (auto [a, b] : g.moving) pts.emplace_back(a, b);
    for (int t = 0; t < hn; ++t) {
      auto [lo, hi] = z_.pair_points(g.horizontals[t]);
      int p = (mask >> t) & 1 ? hi : lo;
      pts.emplace_back(p, p);
    }
    std::sort(pts.begin(), pts.end());
    SmallGen sg;
    for (auto [s, im] : pts) {
      sg.source.push_back(s);
      sg.image.push_back(im);
    }
    out.push_back(std::move(sg));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Algebra::collect(std::set<SmallGen>& instances) const {
  std::vector<int> out;
  while (!instances.empty()) {
    const SmallGen& first = *instances.begin();
    AlgGenerator g;
    for (size_t i = 0; i < first.source.size(); ++i) {
      if (first.image[i] == first.source[i])
        g.horizontals.push_back(z_.pair_of(first.source[i]));
      else
        g.moving.emplace_back(first.source[i], first.image[i]);
    }
    std::sort(g.horizontals.begin(), g.horizontals.end());
    std::sort(g.moving.begin(), g.moving.end());
    for (const SmallGen& inst : e_expansion(g)) {
      auto it = instances.find(inst);
      if (it == instances.end()) throw std::logic_error("E-recollection failed");
      instances.erase(it);
    }
    int id = index_of(g);
    if (id >= 0)
      out.push_back(id);
    else if (!mult_one_)
      throw std::logic_error("collected generator missing from basis");
    // in the A' quotient, generators with multiplicity >= 2 are set to zero
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<int>& Algebra::product(int a, int b) const {
  auto key = std::make_pair(a, b);
  auto it = product_cache_.find(key);
  if (it != product_cache_.end()) return it->second;
  std::set<SmallGen> acc;
  for (const SmallGen& x : e_expansion(basis_[a]))
    for (const SmallGen& y : e_expansion(basis_[b])) {
      auto p = small_product(x, y);
      if (!p) continue;
      auto ins = acc.insert(*p);
      if (!ins.second) acc.erase(ins.first);
    }
  std::vector<int> result = collect(acc);
  return product_cache_.emplace(key, std::move(result)).first->second;
}

const std::vector<int>& Algebra::differential(int a) const {
  auto it = diff_cache_.find(a);
  if (it != diff_cache_.end()) return it->second;
  std::set<SmallGen> acc;
  for (const SmallGen& x : e_expansion(basis_[a]))
    for (const SmallGen& r : small_differential(x)) {
      auto ins = acc.insert(r);
      if (!ins.second) acc.erase(ins.first);
    }
  std::vector<int> result = collect(acc);
  return diff_cache_.emplace(a, std::move(result)).first->second;
}

std::optional<AlgGenerator> Algebra::direct_product(const AlgGenerator& x, const AlgGenerator& y) const {
  // Composite strands as height triples (start, middle, end); death exactly
  // when two composites cross in both halves.
  struct Path {
    int h1, h2, h3;
  };
  std::vector<Path> paths;
  std::vector<bool> y_strand_used(y.moving.size(), false);
  std::set<int> y_horiz(y.horizontals.begin(), y.horizontals.end());
  std::set<int> x_horiz(x.horizontals.begin(), x.horizontals.end());

  AlgGenerator out;
  for (auto [a, b] : x.moving) {
    bool continued = false;
    for (size_t j = 0; j < y.moving.size(); ++j) {
      if (y.moving[j].first == b) {
        paths.push_back({a, b, y.moving[j].second});
        out.moving.emplace_back(a, y.moving[j].second);
        y_strand_used[j] = true;
        continued = true;
        break;
      }
    }
    if (!continued) {
      if (!y_horiz.count(z_.pair_of(b))) return std::nullopt;
      paths.push_back({a, b, b});
      out.moving.emplace_back(a, b);
    }
  }
  for (size_t j = 0; j < y.moving.size(); ++j) {
    if (y_strand_used[j]) continue;
    auto [p, c] = y.moving[j];
    if (!x_horiz.count(z_.pair_of(p))) return std::nullopt;
    paths.push_back({p, p, c});
    out.moving.emplace_back(p, c);
  }
  // remaining y horizontals must be matched by x horizontals and vice versa
  for (int h : y.horizontals) {
    bool consumed = false;
    for (auto [a, b] : x.moving)
      if (z_.pair_of(b) == h) consumed = true;
    if (consumed) continue;
    if (!x_horiz.count(h)) return std::nullopt;
    out.horizontals.push_back(h);
  }
  for (int h : x.horizontals) {
    bool consumed = false;
    for (auto [p, c] : y.moving)
      if (z_.pair_of(p) == h) consumed = true;
    if (consumed) continue;
    if (!y_horiz.count(h)) return std::nullopt;
  }
  // double crossing check
  for (size_t i = 0; i < paths.size(); ++i)
    for (size_t j = i + 1; j < paths.size(); ++j) {
      const Path& u = paths[i];
      const Path& v = paths[j];
      bool c1 = (u.h1 - v.h1) * (u.h2 - v.h2) < 0;
      bool c2 = (u.h2 - v.h2) * (u.h3 - v.h3) < 0;
      if (c1 && c2) return std::nullopt;
    }
  std::sort(out.moving.begin(), out.moving.end());
  std::sort(out.horizontals.begin(), out.horizontals.end());
  return out;
}

std::vector<int> Algebra::homology_class(int g) const { return one_chain(basis_[g], z_.num_points()); }

std::vector<int> Algebra::a_of_chords(const std::vector<std::pair<int, int>>& chords) const {
  int k = z_.genus();
  AlgGenerator base;
  for (auto [a, b] : chords) {
    if (a < 1 || b > z_.num_points() || a >= b) return {};
    base.moving.emplace_back(a - 1, b - 1);
  }
  std::sort(base.moving.begin(), base.moving.end());
  // endpoint and pair collisions make the element zero
  std::vector<bool> used(z_.num_pairs(), false), used_t(z_.num_pairs(), false);
  std::set<int> inits, terms;
  for (auto [a, b] : base.moving) {
    if (!inits.insert(a).second || !terms.insert(b).second) return {};
    if (used[z_.pair_of(a)] || used_t[z_.pair_of(b)]) return {};
    used[z_.pair_of(a)] = true;
    used_t[z_.pair_of(b)] = true;
  }
  int want = k + i_ - static_cast<int>(base.moving.size());
  if (want < 0) return {};
  std::vector<int> freepairs;
  for (int h = 0; h < z_.num_pairs(); ++h)
    if (!used[h] && !used_t[h]) freepairs.push_back(h);
  if (want > static_cast<int>(freepairs.size())) return {};
  std::vector<int> out;
  std::vector<int> idx(want);
  for (int t = 0; t < want; ++t) idx[t] = t;
  while (true) {
    AlgGenerator g = base;
    for (int t = 0; t < want; ++t) g.horizontals.push_back(freepairs[idx[t]]);
    int id = index_of(g);
    if (id >= 0) out.push_back(id);
    if (want == 0) break;
    int t = want - 1;
    while (t >= 0 && idx[t] == static_cast<int>(freepairs.size()) - want + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int u = t + 1; u < want; ++u) idx[u] = idx[u - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Algebra::gen_name(int g) const {
  std::ostringstream os;
  const AlgGenerator& x = basis_[g];
  os << "{";
  for (size_t i = 0; i < x.moving.size(); ++i)
    os << (i ? "," : "") << "(" << x.moving[i].first + 1 << ">" << x.moving[i].second + 1 << ")";
  os << "|";
  for (size_t i = 0; i < x.horizontals.size(); ++i) os << (i ? "," : "") << x.horizontals[i] + 1;
  os << "}";
  return os.str();
}

std::string Algebra::element_json(const std::vector<int>& gens) const {
  nlohmann::json arr = nlohmann::json::array();
  for (int g : gens) {
    nlohmann::json jg;
    jg["moving"] = nlohmann::json::array();
    for (auto [a, b] : basis_[g].moving) jg["moving"].push_back({a + 1, b + 1});
    jg["horizontals"] = nlohmann::json::array();
    for (int h : basis_[g].horizontals) jg["horizontals"].push_back(h + 1);
    arr.push_back(jg);
  }
  return arr.dump();
}

// --- homology ---

namespace {

std::vector<int> boundary_points(const std::vector<int>& h, int n) {
  // d(one-chain) as point multiplicities: an interval contributes -1 at its
  // start point and +1 at its endpoint
  std::vector<int> d(n, 0);
  for (int p = 0; p < n; ++p) {
    int below = p > 0 ? h[p - 1] : 0;
    int above = p < n - 1 ? h[p] : 0;
    d[p] = below - above;
  }
  return d;
}

}  // namespace

bool homology_support_conditions(const PointedMatchedCircle& z, const std::vector<int>& s,
                                 const std::vector<int>& t, const std::vector<int>& h) {
  int n = z.num_points();
  std::vector<int> d = boundary_points(h, n);
  // 1: compatibility M_* d h = t - s
  for (int pr = 0; pr < z.num_pairs(); ++pr) {
    auto [a, b] = z.pair_points(pr);
    int lhs = d[a] + d[b];
    int rhs = (std::count(t.begin(), t.end(), pr) ? 1 : 0) - (std::count(s.begin(), s.end(), pr) ? 1 : 0);
    if (lhs != rhs) return false;
  }
  // 2: multiplicities 0 or 1
  for (int x : h)
    if (x < 0 || x > 1) return false;
  // 3: half-matched pairs not in s and t
  auto interior = [&](int p) {
    int below = p > 0 ? h[p - 1] : 0;
    int above = p < n - 1 ? h[p] : 0;
    return below >= 1 && above >= 1;
  };
  for (int pr = 0; pr < z.num_pairs(); ++pr) {
    auto [a, b] = z.pair_points(pr);
    bool ia = interior(a), ib = interior(b);
    if (ia != ib) {
      bool in_s = std::count(s.begin(), s.end(), pr) != 0;
      bool in_t = std::count(t.begin(), t.end(), pr) != 0;
      if (in_s && in_t) return false;
    }
  }
  return true;
}

AlgebraHomology algebra_homology(const Algebra& a, bool verify_support) {
  // group basis by (init idem, term idem, one-chain)
  std::map<std::tuple<int, int, std::vector<int>>, std::vector<int>> blocks;
  for (int g = 0; g < a.dim(); ++g)
    blocks[{a.init_idem(g), a.term_idem(g), a.gr_prime(g).alpha}].push_back(g);

  AlgebraHomology out;
  for (const auto& [key, gens] : blocks) {
    // split block by Maslov degree; d drops maslov2 by 2
    std::map<long long, std::vector<int>> by_deg;
    for (int g : gens) by_deg[a.gr_prime(g).maslov2].push_back(g);
    std::map<long long, int> rank_d;  // rank of d: deg -> deg-2
    for (const auto& [deg, dg] : by_deg) {
      std::map<int, int> pos;
      auto lower = by_deg.find(deg - 2);
      int nrows = 0;
      if (lower != by_deg.end())
        for (int g : lower->second) pos[g] = nrows++;
      std::vector<std::vector<int>> cols;
      for (int g : dg) {
        std::vector<int> col;
        for (int d : a.differential(g)) {
          auto it = pos.find(d);
          if (it != pos.end()) col.push_back(it->second);
        }
        cols.push_back(col);
      }
      rank_d[deg] = f2_rank_of_columns(cols, nrows);
    }
    for (const auto& [deg, dg] : by_deg) {
      int dim = static_cast<int>(dg.size());
      int rk_out = rank_d.count(deg) ? rank_d[deg] : 0;
      int rk_in = rank_d.count(deg + 2) ? rank_d[deg + 2] : 0;
      int hdim = dim - rk_out - rk_in;
      if (hdim == 0) continue;
      HomologyBlock b;
      b.init_idem = a.idempotent_subset(std::get<0>(key));
      b.term_idem = a.idempotent_subset(std::get<1>(key));
      b.one_chain = std::get<2>(key);
      b.maslov2 = deg;
      // crossingless representative: minimal-inversion generator in the block
      // at this degree (the theorem guarantees a crossingless cycle exists)
      b.representative = dg.front();
      if (verify_support) {
        if (hdim != 1) throw std::logic_error("homology block not 1-dimensional");
        if (!homology_support_conditions(a.circle(), b.init_idem, b.term_idem, b.one_chain))
          throw std::logic_error("support conditions violated by computed homology");
        long long minm = by_deg.begin()->first;
        for (const auto& [d2, _] : by_deg) minm = std::min(minm, d2);
        if (deg != minm) throw std::logic_error("homology not at minimal Maslov degree");
        // representative must be a crossingless diagram: every instance has
        // inv contributions only from horizontal smearing, i.e. minimal deg
        if (!a.differential(b.representative).empty())
          throw std::logic_error("crossingless representative is not a cycle");
      }
      out.blocks.push_back(std::move(b));
    }
  }
  if (verify_support) {
    // conversely, every idempotent pair + chain satisfying the conditions
    // with a nonempty block must appear
    std::set<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>> found;
    for (const auto& b : out.blocks) found.insert({b.init_idem, b.term_idem, b.one_chain});
    for (const auto& [key, gens] : blocks) {
      auto s = a.idempotent_subset(std::get<0>(key));
      auto t = a.idempotent_subset(std::get<1>(key));
      const auto& h = std::get<2>(key);
      if (homology_support_conditions(a.circle(), s, t, h) && !found.count({s, t, h}))
        throw std::logic_error("support conditions hold but block has no homology");
    }
  }
  return out;
}

AlgGenerator reverse_generator(const PointedMatchedCircle& z, const AlgGenerator& g) {
  int n = z.num_points();
  PointedMatchedCircle r = z.reversed();
  AlgGenerator out;
  for (auto [a, b] : g.moving) out.moving.emplace_back(n - 1 - b, n - 1 - a);
  for (int h : g.horizontals) {
    auto [a, b] = z.pair_points(h);
    out.horizontals.push_back(r.pair_of(n - 1 - a));
  }
  std::sort(out.moving.begin(), out.moving.end());
  std::sort(out.horizontals.begin(), out.horizontals.end());
  return out;
}

}  // namespace bhf
