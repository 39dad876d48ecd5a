// Pointed matched circles: 4k marked points on a circle, matched in pairs,
// cut open at the basepoint so the points read 1..4k.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bhf {

struct NotAnInvolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SurgeryDisconnects : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadGenus : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class PointedMatchedCircle {
 public:
  // matching is given as pairs of 1-based point labels.
  PointedMatchedCircle(int num_points, std::vector<std::pair<int, int>> matching);

  int num_points() const { return n_; }
  int genus() const { return n_ / 4; }
  int num_pairs() const { return n_ / 2; }

  // 0-based point -> 0-based matched partner.
  int partner(int p) const { return partner_[p]; }
  // 0-based point -> pair index in 0..2k-1 (pairs ordered by smaller point).
  int pair_of(int p) const { return pair_of_[p]; }
  // pair index -> its two 0-based points (low, high).
  std::pair<int, int> pair_points(int h) const { return pairs_[h]; }

  // Matching as sorted 1-based pairs; the canonical form for equality.
  std::vector<std::pair<int, int>> canonical_matching() const;
  bool operator==(const PointedMatchedCircle& o) const;

  PointedMatchedCircle reversed() const;

  // Pair relabeling induced by orientation reversal: pair h of this circle
  // occupies which pair index of reversed().
  int reversed_pair(int h) const;

  std::string to_json() const;
  static PointedMatchedCircle from_json(const std::string& text);

 private:
  int n_;
  std::vector<int> partner_;
  std::vector<int> pair_of_;
  std::vector<std::pair<int, int>> pairs_;
};

PointedMatchedCircle connect_sum(const PointedMatchedCircle& z1, const PointedMatchedCircle& z2);

enum class StandardKind { Split, Antipodal, Torus };
PointedMatchedCircle standard_pmc(StandardKind kind, int genus);

// Parses "torus", "split:k", "antipodal:k", or a path to a JSON file.
PointedMatchedCircle parse_pmc_spec(const std::string& spec);

}  // namespace bhf
