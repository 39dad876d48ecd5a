// The strands algebras A(n,k) and A(Z,i): basis generators are collections of
// upward-veering moving strands at point level together with horizontal
// strands smeared over matched pairs. Products and differentials are computed
// through the E-basis expansion into A(4k, k+i) and recollected.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bhf/pmc.hpp"

namespace bhf {

struct ParentMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Basis element of A(n,k): a partial bijection phi on sorted source points
// with phi(x) >= x.
struct SmallGen {
  std::vector<int> source;  // sorted, 0-based points
  std::vector<int> image;   // image[i] = phi(source[i])
  auto operator<=>(const SmallGen&) const = default;

  std::vector<int> target_sorted() const;
  int inversions() const;
};

// nonzero product in A(n,k), or nullopt
std::optional<SmallGen> small_product(const SmallGen& a, const SmallGen& b);
// differential in A(n,k): resolutions dropping the inversion count by one
std::vector<SmallGen> small_differential(const SmallGen& a);

// Basis generator of A(Z,i).
struct AlgGenerator {
  std::vector<std::pair<int, int>> moving;  // sorted strands (from,to), 0-based
  std::vector<int> horizontals;             // sorted matched-pair indices
  auto operator<=>(const AlgGenerator&) const = default;
};

// A grading-group element of G'(Z): doubled Maslov component plus interval
// multiplicities (length 4k-1).
struct GradingElement {
  long long maslov2 = 0;
  std::vector<int> alpha;
  bool operator==(const GradingElement&) const = default;
};

class Algebra {
 public:
  // Full A(Z,i). When mult_one is set, the quotient A'(Z,i) by the ideal of
  // elements with a local multiplicity >= 2.
  Algebra(PointedMatchedCircle z, int strands_grading, bool mult_one = false);

  const PointedMatchedCircle& circle() const { return z_; }
  int strands_grading() const { return i_; }
  bool is_quotient() const { return mult_one_; }

  int dim() const { return static_cast<int>(basis_.size()); }
  const AlgGenerator& gen(int g) const { return basis_[g]; }
  int index_of(const AlgGenerator& g) const;

  bool is_idempotent(int g) const { return basis_[g].moving.empty(); }
  // idempotents as sorted pair-index subsets
  int num_idempotents() const { return static_cast<int>(idempotents_.size()); }
  const std::vector<int>& idempotent_subset(int id) const { return idempotents_[id]; }
  int idempotent_gen(int id) const { return idem_gen_[id]; }  // basis index
  int idempotent_id(const std::vector<int>& subset) const;

  int init_idem(int g) const { return init_idem_[g]; }
  int term_idem(int g) const { return term_idem_[g]; }

  // F2 product and differential on basis indices; results are sorted basis
  // index lists (memoized).
  const std::vector<int>& product(int a, int b) const;
  const std::vector<int>& differential(int a) const;

  // Direct product rule on the (moving, horizontals) representation; used as
  // the fast path and cross-checked against the E-expansion in the tests.
  std::optional<AlgGenerator> direct_product(const AlgGenerator& a, const AlgGenerator& b) const;

  const GradingElement& gr_prime(int g) const { return gr_[g]; }
  std::vector<int> homology_class(int g) const;  // interval multiplicities

  // Aug-ideal words of nonzero product vanish beyond this length.
  int nilpotency_length() const { return nilpotency_; }

  // a(rho) for a set of chords given as 1-based closed point intervals.
  std::vector<int> a_of_chords(const std::vector<std::pair<int, int>>& chords) const;

  std::string gen_name(int g) const;  // serialization-based name
  std::string element_json(const std::vector<int>& gens) const;

  std::vector<SmallGen> e_expansion(const AlgGenerator& g) const;

 private:
  void build_basis();
  std::vector<int> collect(std::set<SmallGen>& instances) const;

  PointedMatchedCircle z_;
  int i_;
  bool mult_one_;
  int nilpotency_ = 1;
  std::vector<AlgGenerator> basis_;
  std::map<AlgGenerator, int> index_;
  std::vector<std::vector<int>> idempotents_;
  std::map<std::vector<int>, int> idem_index_;
  std::vector<int> idem_gen_;
  std::vector<int> init_idem_, term_idem_;
  std::vector<GradingElement> gr_;
  mutable std::map<std::pair<int, int>, std::vector<int>> product_cache_;
  mutable std::map<int, std::vector<int>> diff_cache_;
};

// One homology block of A(Z,i): idempotent pair, one-chain, and the surviving
// Maslov degree with its crossingless representative.
struct HomologyBlock {
  std::vector<int> init_idem;  // pair subset
  std::vector<int> term_idem;
  std::vector<int> one_chain;  // interval multiplicities
  long long maslov2 = 0;
  int representative = -1;  // basis index of the chosen crossingless cycle
};

struct AlgebraHomology {
  std::vector<HomologyBlock> blocks;  // each 1-dimensional
  int total_rank() const { return static_cast<int>(blocks.size()); }
};

// Blockwise F2 homology of A(Z,i); verify_support also checks the block
// pattern against the four support conditions and 1-dimensionality.
AlgebraHomology algebra_homology(const Algebra& a, bool verify_support = true);

// The four support conditions for a prospective block.
bool homology_support_conditions(const PointedMatchedCircle& z, const std::vector<int>& s,
                                 const std::vector<int>& t, const std::vector<int>& h);

// Orientation reversal A(Z,i) -> A(-Z,i), an anti-isomorphism on basis
// elements: R(xy) = R(y)R(x).
AlgGenerator reverse_generator(const PointedMatchedCircle& z, const AlgGenerator& g);

}  // namespace bhf
