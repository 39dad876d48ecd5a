#include "bhf/gradedcheck.hpp"

#include <deque>
#include <sstream>

namespace bhf {

namespace {

bool in_subgroup_single(const GradingElement& g, const std::vector<GradingElement>& words, int depth) {
  GradingElement id = gp_identity(static_cast<int>(g.alpha.size()) + 1);
  if (g == id) return true;
  std::set<std::pair<long long, std::vector<int>>> seen;
  std::vector<GradingElement> frontier{id};
  seen.insert({0, id.alpha});
  for (int d = 0; d < depth; ++d) {
    std::vector<GradingElement> next;
    for (const GradingElement& cur : frontier)
      for (const GradingElement& w : words)
        for (const GradingElement& s : {gp_mul(cur, w), gp_mul(cur, gp_inv(w))}) {
          if (s == g) return true;
          if (seen.insert({s.maslov2, s.alpha}).second) next.push_back(s);
        }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace

void check_lambda_degree_DA(const Bimodule& b, const DAGradedAssignment& assignment, int bfs_depth) {
  if (b.left_tag() != Tag::D || b.right_tag() != Tag::A)
    throw GradingViolation("DA grading check expects a DA structure");
  const Algebra& la = *b.left_alg();
  const Algebra& ra = *b.right_alg();
  int n = la.circle().num_points();
  auto coef_grading = [&](const Algebra& alg, int g) {
    return assignment.refinement ? assignment.refinement->refine(alg, g) : alg.gr_prime(g);
  };
  auto check_entry = [&](int src, const std::vector<int>& w, const Term& t) {
    GradingElement target = gp_lambda(n, static_cast<long long>(w.size()) - 1);
    target = gp_mul(target, gp_inv(coef_grading(la, t.lout)));
    target = gp_mul(target, assignment.gen_grading[src]);
    for (int bi : w) {
      GradingElement gb = coef_grading(ra, bi);
      if (assignment.twist) gb = assignment.twist(gb);
      target = gp_mul(target, gb);
    }
    GradingElement defect = gp_mul(gp_inv(assignment.gen_grading[t.dst]), target);
    if (!in_subgroup_single(defect, assignment.periodic, bfs_depth)) {
      std::ostringstream os;
      os << "lambda-degree violation at entry " << b.gen(src).name << " -> " << b.gen(t.dst).name
         << " (|w|=" << w.size() << ")";
      throw GradingViolation(os.str());
    }
  };
  for (const auto& [key, terms] : b.table())
    for (const Term& t : terms) check_entry(key.src, key.right_in, t);
  for (const RulePattern& r : b.rules())
    for (int reps = 0; reps <= 2; ++reps) {
      std::vector<int> w = r.prefix;
      for (int i = 0; i < reps; ++i) w.insert(w.end(), r.repeated.begin(), r.repeated.end());
      w.insert(w.end(), r.suffix.begin(), r.suffix.end());
      check_entry(r.src, w, r.term);
      if (r.repeated.empty()) break;
    }
}

namespace {

BiGrading dd_entry_target(const Bimodule& b, const DDGradingAssignment& assignment, int src, const Term& t) {
  const Algebra& la = *b.left_alg();
  const Algebra& ra = *b.right_alg();
  int lp = la.circle().num_points();
  int rp = ra.circle().num_points();
  BiGrading target = bi_identity(lp, rp);
  target.maslov2 = -2;  // lambda^{-1}
  target = bi_mul(target, bi_inv(bi_from_left(la.gr_prime(t.lout), rp)));
  target = bi_mul(target, assignment.gen_grading[src]);
  target = bi_mul(target, bi_inv(bi_from_right(ra.gr_prime(t.rout), lp)));
  return target;
}

}  // namespace

void check_lambda_degree_DD(const Bimodule& b, const DDGradingAssignment& assignment, int bfs_depth) {
  if (b.left_tag() != Tag::D || b.right_tag() != Tag::D)
    throw GradingViolation("DD grading check expects a DD structure");
  for (const auto& [key, terms] : b.table())
    for (const Term& t : terms) {
      BiGrading target = dd_entry_target(b, assignment, key.src, t);
      BiGrading defect = bi_mul(bi_inv(assignment.gen_grading[t.dst]), target);
      if (!in_subgroup_bfs(defect, assignment.periodic, bfs_depth)) {
        std::ostringstream os;
        os << "lambda-degree violation at entry " << b.gen(key.src).name << " -> " << b.gen(t.dst).name;
        throw GradingViolation(os.str());
      }
    }
}

DDGradingAssignment dd_assignment_from_periodic_data(const Bimodule& b, int base_gen) {
  const Algebra& la = *b.left_alg();
  const Algebra& ra = *b.right_alg();
  int lp = la.circle().num_points();
  int rp = ra.circle().num_points();
  DDGradingAssignment out;
  out.gen_grading.assign(b.num_gens(), bi_identity(lp, rp));
  std::vector<bool> placed(b.num_gens(), false);
  placed[base_gen] = true;
  // propagate along a spanning tree of the entry graph
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [key, terms] : b.table())
      for (const Term& t : terms) {
        if (placed[key.src] && !placed[t.dst]) {
          out.gen_grading[t.dst] = dd_entry_target(b, out, key.src, t);
          placed[t.dst] = true;
          progress = true;
        } else if (placed[t.dst] && !placed[key.src]) {
          // invert the rule for gr(src)
          BiGrading lhs = out.gen_grading[t.dst];
          BiGrading v = bi_identity(lp, rp);
          v.maslov2 = 2;
          v = bi_mul(v, bi_from_left(la.gr_prime(t.lout), rp));
          v = bi_mul(v, lhs);
          v = bi_mul(v, bi_from_right(ra.gr_prime(t.rout), lp));
          out.gen_grading[key.src] = v;
          placed[key.src] = true;
          progress = true;
        }
      }
  }
  // remaining defects become the periodic words
  for (const auto& [key, terms] : b.table())
    for (const Term& t : terms) {
      BiGrading defect =
          bi_mul(bi_inv(out.gen_grading[t.dst]), dd_entry_target(b, out, key.src, t));
      BiGrading id = bi_identity(lp, rp);
      if (!(defect == id)) out.periodic.push_back(defect);
    }
  return out;
}

}  // namespace bhf
