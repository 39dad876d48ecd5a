#include "bhf/diagrams.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bhf/f2.hpp"
#include "json.hpp"

namespace bhf {

int ArcedDiagram::alpha_of_point(int p) const {
  for (size_t i = 0; i < alphas.size(); ++i)
    if (std::count(alphas[i].points.begin(), alphas[i].points.end(), p)) return static_cast<int>(i);
  return -1;
}

int ArcedDiagram::beta_of_point(int p) const {
  for (size_t i = 0; i < betas.size(); ++i)
    if (std::count(betas[i].begin(), betas[i].end(), p)) return static_cast<int>(i);
  return -1;
}

void ArcedDiagram::validate() const {
  for (size_t p = 0; p < points.size(); ++p) {
    if (alpha_of_point(static_cast<int>(p)) < 0) throw std::runtime_error("point off the alpha curves");
    if (beta_of_point(static_cast<int>(p)) < 0) throw std::runtime_error("point off the beta circles");
    const DiagPoint& pt = points[p];
    for (int r : {pt.ne, pt.nw, pt.sw, pt.se})
      if (r < 0 || r >= static_cast<int>(regions.size())) throw std::runtime_error("bad corner region");
  }
  for (const DiagRegion& r : regions) {
    if (static_cast<int>(r.left_chords.size()) != std::max(0, left.num_points() - 1))
      throw std::runtime_error("left chord vector size");
    if (static_cast<int>(r.right_chords.size()) != std::max(0, right.num_points() - 1))
      throw std::runtime_error("right chord vector size");
  }
  bool has_z = false;
  for (const DiagRegion& r : regions) has_z |= r.z_adjacent;
  if (!has_z) throw std::runtime_error("no z-adjacent region");
}

namespace {

std::vector<int> nonz_regions(const ArcedDiagram& h) {
  std::vector<int> ids;
  for (size_t r = 0; r < h.regions.size(); ++r)
    if (!h.regions[r].z_adjacent) ids.push_back(static_cast<int>(r));
  return ids;
}

// corner defect row of each point over the given regions
IntMat defect_matrix(const ArcedDiagram& h, const std::vector<int>& region_ids) {
  IntMat m(h.points.size(), std::vector<long long>(region_ids.size(), 0));
  std::map<int, int> col;
  for (size_t c = 0; c < region_ids.size(); ++c) col[region_ids[c]] = static_cast<int>(c);
  for (size_t p = 0; p < h.points.size(); ++p) {
    const DiagPoint& pt = h.points[p];
    auto bump = [&](int region, long long v) {
      auto it = col.find(region);
      if (it != col.end()) m[p][it->second] += v;
    };
    bump(pt.ne, 1);
    bump(pt.sw, 1);
    bump(pt.nw, -1);
    bump(pt.se, -1);
  }
  return m;
}

}  // namespace

DomainLattice periodic_domains(const ArcedDiagram& h) {
  DomainLattice out;
  out.region_ids = nonz_regions(h);
  out.basis = int_kernel_basis(defect_matrix(h, out.region_ids));
  return out;
}

AdmissibilityReport check_admissible(const ArcedDiagram& h, AdmissibilityFlavor flavor) {
  DomainLattice full = periodic_domains(h);
  // flavor cuts the lattice by boundary-chord conditions:
  //  Full: all periodic domains; Left: right-provincial ones; Right:
  //  left-provincial; Provincial: both boundaries zero.
  bool need_left_zero = flavor == AdmissibilityFlavor::Right || flavor == AdmissibilityFlavor::Provincial;
  bool need_right_zero = flavor == AdmissibilityFlavor::Left || flavor == AdmissibilityFlavor::Provincial;
  std::vector<std::vector<long long>> sub;
  {
    // kernel of the chord conditions inside the lattice
    int rank = static_cast<int>(full.basis.size());
    int lrows = need_left_zero ? std::max(0, h.left.num_points() - 1) : 0;
    int rrows = need_right_zero ? std::max(0, h.right.num_points() - 1) : 0;
    if (lrows + rrows == 0 || rank == 0) {
      sub = full.basis;
    } else {
      IntMat cond(lrows + rrows, std::vector<long long>(rank, 0));
      for (int b = 0; b < rank; ++b) {
        for (int i = 0; i < lrows; ++i) {
          long long s = 0;
          for (size_t c = 0; c < full.region_ids.size(); ++c)
            s += full.basis[b][c] * h.regions[full.region_ids[c]].left_chords[i];
          cond[i][b] = s;
        }
        for (int i = 0; i < rrows; ++i) {
          long long s = 0;
          for (size_t c = 0; c < full.region_ids.size(); ++c)
            s += full.basis[b][c] * h.regions[full.region_ids[c]].right_chords[i];
          cond[lrows + i][b] = s;
        }
      }
      for (const auto& k : int_kernel_basis(cond)) {
        std::vector<long long> v(full.region_ids.size(), 0);
        for (int b = 0; b < rank; ++b)
          for (size_t c = 0; c < v.size(); ++c) v[c] += k[b] * full.basis[b][c];
        bool nz = false;
        for (long long x : v) nz |= x != 0;
        if (nz) sub.push_back(v);
      }
    }
  }
  AdmissibilityReport rep;
  int dim = static_cast<int>(full.region_ids.size());
  rep.admissible = positive_orthogonal_vector_exists(sub, dim, &rep.area);
  if (!rep.admissible) {
    auto w = one_signed_combination(sub, dim, 4);
    if (w) rep.witness = *w;
  }
  return rep;
}

std::vector<DiagGenerator> diagram_generators(const ArcedDiagram& h) {
  std::vector<DiagGenerator> out;
  std::vector<int> choice(h.betas.size(), 0);
  while (true) {
    std::vector<int> pts;
    for (size_t b = 0; b < h.betas.size(); ++b) pts.push_back(h.betas[b][choice[b]]);
    // constraint: one point per alpha circle, at most one per alpha arc
    std::map<int, int> alpha_count;
    for (int p : pts) alpha_count[h.alpha_of_point(p)]++;
    bool ok = true;
    for (auto [a, c] : alpha_count)
      if (c > 1) ok = false;
    for (size_t a = 0; a < h.alphas.size(); ++a)
      if (h.alphas[a].kind == AlphaKind::Circle && alpha_count[static_cast<int>(a)] != 1) ok = false;
    if (ok) {
      DiagGenerator g;
      g.points = pts;
      std::sort(g.points.begin(), g.points.end());
      for (int p : pts) {
        const AlphaObject& a = h.alphas[h.alpha_of_point(p)];
        if (a.kind == AlphaKind::LeftArc) g.left_arcs.push_back(a.pair_index);
        if (a.kind == AlphaKind::RightArc) g.right_arcs.push_back(a.pair_index);
      }
      std::sort(g.left_arcs.begin(), g.left_arcs.end());
      std::sort(g.right_arcs.begin(), g.right_arcs.end());
      out.push_back(std::move(g));
    }
    size_t b = 0;
    while (b < h.betas.size() && choice[b] + 1 == static_cast<int>(h.betas[b].size())) choice[b++] = 0;
    if (b == h.betas.size()) break;
    ++choice[b];
  }
  return out;
}

std::optional<std::vector<long long>> connecting_domain(const ArcedDiagram& h, const DiagGenerator& x,
                                                        const DiagGenerator& y) {
  std::vector<int> ids = nonz_regions(h);
  IntMat m = defect_matrix(h, ids);
  std::vector<long long> target(h.points.size(), 0);
  for (size_t p = 0; p < h.points.size(); ++p) {
    bool in_x = std::count(x.points.begin(), x.points.end(), static_cast<int>(p));
    bool in_y = std::count(y.points.begin(), y.points.end(), static_cast<int>(p));
    target[p] = (in_y ? 1 : 0) - (in_x ? 1 : 0);
  }
  return int_solve(m, target);
}

std::pair<GradingElement, GradingElement> domain_grading(const ArcedDiagram& h,
                                                         const std::vector<long long>& domain,
                                                         const DiagGenerator& x, const DiagGenerator& y) {
  std::vector<int> ids = nonz_regions(h);
  if (domain.size() != ids.size()) throw NotConnecting("domain coefficient count");
  // verify the corner defects match x -> y
  IntMat m = defect_matrix(h, ids);
  for (size_t p = 0; p < h.points.size(); ++p) {
    long long s = 0;
    for (size_t c = 0; c < ids.size(); ++c) s += m[p][c] * domain[c];
    bool in_x = std::count(x.points.begin(), x.points.end(), static_cast<int>(p));
    bool in_y = std::count(y.points.begin(), y.points.end(), static_cast<int>(p));
    if (s != (in_y ? 1 : 0) - (in_x ? 1 : 0)) throw NotConnecting("domain does not connect x to y");
  }
  // doubled Maslov: -2e(B) - 2n_x(B) - 2n_y(B)
  long long e4 = 0;
  for (size_t c = 0; c < ids.size(); ++c) e4 += domain[c] * h.regions[ids[c]].euler4;
  auto corner4 = [&](const DiagGenerator& g) {
    long long total4 = 0;  // four times the sum of average multiplicities
    for (int p : g.points) {
      const DiagPoint& pt = h.points[p];
      for (int r : {pt.ne, pt.nw, pt.sw, pt.se}) {
        auto it = std::find(ids.begin(), ids.end(), r);
        if (it != ids.end()) total4 += domain[it - ids.begin()];
      }
    }
    return total4;
  };
  long long maslov4 = -e4 - corner4(x) - corner4(y);
  if (maslov4 % 2 != 0) throw NotConnecting("nonintegral doubled Maslov component");
  GradingElement gl, gr;
  gl.maslov2 = maslov4 / 2;
  gl.alpha.assign(std::max(0, h.left.num_points() - 1), 0);
  gr.maslov2 = 0;
  gr.alpha.assign(std::max(0, h.right.num_points() - 1), 0);
  for (size_t c = 0; c < ids.size(); ++c) {
    for (size_t i = 0; i < gl.alpha.size(); ++i)
      gl.alpha[i] += static_cast<int>(domain[c]) * h.regions[ids[c]].left_chords[i];
    for (size_t i = 0; i < gr.alpha.size(); ++i)
      gr.alpha[i] += static_cast<int>(domain[c]) * h.regions[ids[c]].right_chords[i];
  }
  return {gl, gr};
}

// ---- built-in transcriptions ----

namespace {

ArcedDiagram make_torus_boundaries() {
  ArcedDiagram h{standard_pmc(StandardKind::Torus, 1), standard_pmc(StandardKind::Torus, 1), {}, {}, {}, {}};
  return h;
}

}  // namespace

ArcedDiagram diagram_dehn_twist_mu() {
  // Regions D1..D4 and the z-region. Points x,y,z on beta1 and s,t on beta2;
  // generators p = {x,t}, q = {z,s}, r = {y,t}.
  ArcedDiagram h = make_torus_boundaries();
  auto reg = [&](const std::string& n, int e4, std::vector<int> lc, std::vector<int> rc, bool z) {
    h.regions.push_back(DiagRegion{n, e4, std::move(lc), std::move(rc), z});
    return static_cast<int>(h.regions.size()) - 1;
  };
  int D1 = reg("D1", -2, {1, 0, 0}, {1, 0, 0}, false);
  int D2 = reg("D2", 0, {0, 1, 0}, {0, 0, 0}, false);
  int D3 = reg("D3", -8, {0, 0, 1}, {0, 1, 0}, false);
  int D4 = reg("D4", 0, {0, 0, 0}, {0, 0, 1}, false);
  int Z = reg("Z", 0, {0, 0, 0}, {0, 0, 0}, true);
  auto pt = [&](const std::string& n, int ne, int nw, int sw, int se) {
    h.points.push_back(DiagPoint{n, ne, nw, sw, se});
    return static_cast<int>(h.points.size()) - 1;
  };
  int x = pt("x", D2, D1, Z, D3);
  int y = pt("y", D3, D2, D3, D4);
  int z = pt("z", D1, D3, D4, Z);
  int s = pt("s", D1, D3, D4, Z);
  int t = pt("t", D3, D1, Z, D4);
  h.alphas = {
      AlphaObject{AlphaKind::LeftArc, 0, {x}},      // alpha-L pair 0
      AlphaObject{AlphaKind::LeftArc, 1, {y, s}},   // alpha-L pair 1
      AlphaObject{AlphaKind::RightArc, 0, {t}},     // alpha-R pair 0
      AlphaObject{AlphaKind::RightArc, 1, {z}},     // alpha-R pair 1
  };
  h.betas = {{x, y, z}, {s, t}};
  h.validate();
  return h;
}

ArcedDiagram diagram_aa_identity() {
  ArcedDiagram h = make_torus_boundaries();
  auto reg = [&](const std::string& n, int e4, std::vector<int> lc, std::vector<int> rc, bool z) {
    h.regions.push_back(DiagRegion{n, e4, std::move(lc), std::move(rc), z});
    return static_cast<int>(h.regions.size()) - 1;
  };
  int R1 = reg("R1", 0, {1, 0, 0}, {0, 0, 0}, false);
  int M = reg("M", -4, {0, 1, 0}, {0, 1, 0}, false);
  int R3 = reg("R3", 0, {0, 0, 1}, {0, 0, 0}, false);
  int S1 = reg("S1", -2, {0, 0, 0}, {1, 0, 0}, false);
  int S3 = reg("S3", -2, {0, 0, 0}, {0, 0, 1}, false);
  int B1 = reg("B1", 2, {0, 0, 0}, {0, 0, 0}, false);
  int B2 = reg("B2", 2, {0, 0, 0}, {0, 0, 0}, false);
  int Z = reg("Z", 0, {0, 0, 0}, {0, 0, 0}, true);
  auto pt = [&](const std::string& n, int ne, int nw, int sw, int se) {
    h.points.push_back(DiagPoint{n, ne, nw, sw, se});
    return static_cast<int>(h.points.size()) - 1;
  };
  int a = pt("a", S1, M, R1, Z);
  int b = pt("b", M, S1, Z, S3);
  int c1 = pt("c1", Z, R1, Z, B1);
  int c2 = pt("c2", B1, Z, S3, Z);
  int d = pt("d", M, R3, Z, S3);
  int e = pt("e", S1, M, S3, Z);
  int f1 = pt("f1", Z, S1, Z, B2);
  int f2 = pt("f2", R3, Z, B2, Z);
  h.alphas = {
      AlphaObject{AlphaKind::LeftArc, 0, {a, f1, f2}},
      AlphaObject{AlphaKind::LeftArc, 1, {d, c1, c2}},
      AlphaObject{AlphaKind::RightArc, 0, {e}},
      AlphaObject{AlphaKind::RightArc, 1, {b}},
  };
  h.betas = {{a, b, c1, c2}, {d, e, f1, f2}};
  h.validate();
  return h;
}

ArcedDiagram diagram_canonical_identity() {
  ArcedDiagram h = make_torus_boundaries();
  auto reg = [&](const std::string& n, int e4, std::vector<int> lc, std::vector<int> rc, bool z) {
    h.regions.push_back(DiagRegion{n, e4, std::move(lc), std::move(rc), z});
    return static_cast<int>(h.regions.size()) - 1;
  };
  int P1 = reg("P1", 0, {1, 0, 0}, {0, 0, 1}, false);
  int P2 = reg("P2", 0, {0, 1, 1}, {1, 1, 0}, false);
  int Z = reg("Z", 0, {0, 0, 0}, {0, 0, 0}, true);
  (void)Z;
  auto pt = [&](const std::string& n, int ne, int nw, int sw, int se) {
    h.points.push_back(DiagPoint{n, ne, nw, sw, se});
    return static_cast<int>(h.points.size()) - 1;
  };
  int m1 = pt("m1", P1, P2, P2, P1);
  int n1 = pt("n1", P1, P2, P2, P1);
  int m2 = pt("m2", P2, P1, P1, P2);
  int n2 = pt("n2", P2, P1, P1, P2);
  h.alphas = {
      AlphaObject{AlphaKind::LeftArc, 0, {m1}},
      AlphaObject{AlphaKind::LeftArc, 1, {m2}},
      AlphaObject{AlphaKind::RightArc, 0, {n1}},
      AlphaObject{AlphaKind::RightArc, 1, {n2}},
  };
  h.betas = {{m1, n1}, {m2, n2}};
  h.validate();
  return h;
}

ArcedDiagram builtin_diagram(const std::string& name) {
  if (name == "dehn-twist-mu") return diagram_dehn_twist_mu();
  if (name == "aa-identity") return diagram_aa_identity();
  if (name == "canonical-identity") return diagram_canonical_identity();
  throw std::runtime_error("unknown builtin diagram: " + name);
}

// ---- serialization ----

std::string ArcedDiagram::to_json() const {
  nlohmann::json j;
  j["left"] = nlohmann::json::parse(left.to_json());
  j["right"] = nlohmann::json::parse(right.to_json());
  j["regions"] = nlohmann::json::array();
  for (const DiagRegion& r : regions)
    j["regions"].push_back({{"name", r.name},
                            {"euler4", r.euler4},
                            {"left_chords", r.left_chords},
                            {"right_chords", r.right_chords},
                            {"z", r.z_adjacent}});
  j["points"] = nlohmann::json::array();
  for (const DiagPoint& p : points)
    j["points"].push_back({{"name", p.name}, {"ne", p.ne}, {"nw", p.nw}, {"sw", p.sw}, {"se", p.se}});
  j["alphas"] = nlohmann::json::array();
  for (const AlphaObject& a : alphas)
    j["alphas"].push_back(
        {{"kind", a.kind == AlphaKind::LeftArc  ? "L"
                  : a.kind == AlphaKind::RightArc ? "R"
                                                  : "circle"},
         {"pair", a.pair_index},
         {"points", a.points}});
  j["betas"] = betas;
  return j.dump(1);
}

ArcedDiagram ArcedDiagram::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ArcedDiagram h{PointedMatchedCircle::from_json(j.at("left").dump()),
                 PointedMatchedCircle::from_json(j.at("right").dump()),
                 {},
                 {},
                 {},
                 {}};
  for (const auto& jr : j.at("regions"))
    h.regions.push_back(DiagRegion{jr.at("name").get<std::string>(), jr.at("euler4").get<int>(),
                                   jr.at("left_chords").get<std::vector<int>>(),
                                   jr.at("right_chords").get<std::vector<int>>(), jr.at("z").get<bool>()});
  for (const auto& jp : j.at("points"))
    h.points.push_back(DiagPoint{jp.at("name").get<std::string>(), jp.at("ne").get<int>(),
                                 jp.at("nw").get<int>(), jp.at("sw").get<int>(), jp.at("se").get<int>()});
  for (const auto& ja : j.at("alphas")) {
    std::string k = ja.at("kind").get<std::string>();
    h.alphas.push_back(AlphaObject{k == "L"   ? AlphaKind::LeftArc
                                   : k == "R" ? AlphaKind::RightArc
                                              : AlphaKind::Circle,
                                   ja.at("pair").get<int>(), ja.at("points").get<std::vector<int>>()});
  }
  h.betas = j.at("betas").get<std::vector<std::vector<int>>>();
  h.validate();
  return h;
}

}  // namespace bhf
