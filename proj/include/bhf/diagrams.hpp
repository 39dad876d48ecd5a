// Combinatorial arced bordered Heegaard diagrams: regions with Euler
// measures and boundary-chord content, intersection points with their four
// corner regions, alpha arcs/circles and beta circles. Periodic domains,
// admissibility in all flavors, generators, connecting domains, and domain
// gradings are exact integer/rational computations.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhf/grading.hpp"
#include "bhf/pmc.hpp"

namespace bhf {

struct NotConnecting : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DiagRegion {
  std::string name;
  int euler4 = 0;              // Euler measure times 4
  std::vector<int> left_chords;   // interval multiplicities on the left circle
  std::vector<int> right_chords;  // on the right circle
  bool z_adjacent = false;
};

struct DiagPoint {
  std::string name;
  int ne, nw, sw, se;  // region ids of the four quadrants
};

enum class AlphaKind { LeftArc, RightArc, Circle };

struct AlphaObject {
  AlphaKind kind;
  int pair_index = -1;  // matched pair on its boundary circle (arcs only)
  std::vector<int> points;
};

struct ArcedDiagram {
  PointedMatchedCircle left, right;
  std::vector<DiagRegion> regions;
  std::vector<DiagPoint> points;
  std::vector<AlphaObject> alphas;
  std::vector<std::vector<int>> betas;  // point ids per beta circle

  int alpha_of_point(int p) const;
  int beta_of_point(int p) const;
  void validate() const;

  std::string to_json() const;
  static ArcedDiagram from_json(const std::string& text);
};

// integer vectors indexed by non-z regions (in region order, z's skipped)
struct DomainLattice {
  std::vector<int> region_ids;                  // the non-z regions
  std::vector<std::vector<long long>> basis;    // periodic domain basis
};

// kernel of the corner-defect map with z-region coefficients forced to zero
DomainLattice periodic_domains(const ArcedDiagram& h);

enum class AdmissibilityFlavor { Full, Left, Right, Provincial };

struct AdmissibilityReport {
  bool admissible = false;
  std::vector<long long> area;     // positive area vector when admissible
  std::vector<long long> witness;  // one-signed periodic domain otherwise
};

AdmissibilityReport check_admissible(const ArcedDiagram& h, AdmissibilityFlavor flavor);

struct DiagGenerator {
  std::vector<int> points;
  std::vector<int> left_arcs;   // occupied left alpha arcs (pair indices)
  std::vector<int> right_arcs;  // occupied right alpha arcs
};

// one point per beta and alpha circle, at most one per alpha arc
std::vector<DiagGenerator> diagram_generators(const ArcedDiagram& h);

// a domain in pi_2(x, y), or nullopt when the generators sit in different
// spin-c classes; coefficients indexed like DomainLattice::region_ids
std::optional<std::vector<long long>> connecting_domain(const ArcedDiagram& h, const DiagGenerator& x,
                                                        const DiagGenerator& y);

// g'(B) = (-e(B) - n_x(B) - n_y(B); d^L B, d^R B) as a pair of grading
// elements sharing the Maslov component (left slot carries it)
std::pair<GradingElement, GradingElement> domain_grading(const ArcedDiagram& h,
                                                         const std::vector<long long>& domain,
                                                         const DiagGenerator& x, const DiagGenerator& y);

// built-in transcriptions
ArcedDiagram diagram_dehn_twist_mu();
ArcedDiagram diagram_aa_identity();
ArcedDiagram diagram_canonical_identity();
ArcedDiagram builtin_diagram(const std::string& name);  // by the names above

}  // namespace bhf
