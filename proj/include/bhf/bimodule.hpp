// Unified container for type D / A / DA / DD / AA structures over strands
// algebras, with one tagged evaluator serving the structure-equation checker,
// box tensor products, and the bimodule constructors.
//
// Conventions (fixed throughout):
//  * generators carry action-side idempotents: a left-D output a on an entry
//    from x to y satisfies init(a) = x.left, term(a) = y.left; a right-D
//    output b satisfies init(b) = x.right, term(b) = y.right;
//  * A-side input words are typed the same way and drawn from the
//    augmentation ideal; on the left the last-listed letter is consumed
//    first, on the right the first-listed letter;
//  * iterated D outputs multiply in application order on both sides, except
//    that a structure built with right_op composes its right outputs in the
//    reversed order (the bar resolution needs this).
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bhf/strands.hpp"

namespace bhf {

struct TagMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundedPair : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StructureViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Tag { None, D, A };

using AlgebraRef = std::shared_ptr<const Algebra>;

struct ModGen {
  std::string name;
  int left_idem = -1;  // idempotent id in the side algebra, -1 for Tag::None
  int right_idem = -1;
  auto operator<=>(const ModGen&) const = default;
};

// Key of a structure-map or morphism entry.
struct EntryKey {
  int src = 0;
  std::vector<int> left_in;   // outermost first; empty unless left tag is A
  std::vector<int> right_in;  // consumed first-to-last; empty unless right A
  auto operator<=>(const EntryKey&) const = default;
};

struct Term {
  int lout = -1;  // algebra basis id; -1 when the left side carries none
  int dst = 0;
  int rout = -1;
  auto operator<=>(const Term&) const = default;
};

// Infinite operation family: entries src x (prefix repeated^i suffix) -> term,
// for all i >= 0, on the right input stream.
struct RulePattern {
  int src = 0;
  std::vector<int> prefix;
  std::vector<int> repeated;
  std::vector<int> suffix;
  Term term;
};

using EntryTable = std::map<EntryKey, std::vector<Term>>;

class Bimodule {
 public:
  Bimodule(Tag left_tag, Tag right_tag, AlgebraRef left_alg, AlgebraRef right_alg)
      : left_tag_(left_tag), right_tag_(right_tag), left_alg_(std::move(left_alg)), right_alg_(std::move(right_alg)) {}

  Tag left_tag() const { return left_tag_; }
  Tag right_tag() const { return right_tag_; }
  const AlgebraRef& left_alg() const { return left_alg_; }
  const AlgebraRef& right_alg() const { return right_alg_; }
  bool right_op() const { return right_op_; }
  void set_right_op(bool v) { right_op_ = v; }
  // When set, the left-A stream is consumed first-listed-first with
  // init-matched typing (both stored actions of a right-right bimodule);
  // otherwise the left side is an honest left action.
  bool left_init_matched() const { return left_init_matched_; }
  void set_left_init_matched(bool v) { left_init_matched_ = v; }

  int add_gen(std::string name, int left_idem, int right_idem);
  int num_gens() const { return static_cast<int>(gens_.size()); }
  const ModGen& gen(int g) const { return gens_[g]; }
  int gen_by_name(const std::string& name) const;

  // toggles the term (F2); validates idempotent typing
  void add_entry(const EntryKey& key, const Term& term);
  void add_rule(RulePattern rule);

  const EntryTable& table() const { return table_; }
  const std::vector<RulePattern>& rules() const { return rules_; }

  // table + rule lookup for one exact key
  std::vector<Term> lookup(const EntryKey& key) const;
  // true when some entry key with this source has right_in starting with w
  bool right_prefix_exists(int src, const std::vector<int>& w) const;

  // maximal input word lengths present (rules contribute prefix+2rep+suffix)
  int max_left_len() const;
  int max_right_len() const;

  std::string describe() const;
  std::string to_json() const;
  static Bimodule from_json(const std::string& text, AlgebraRef left, AlgebraRef right);

  bool same_tables(const Bimodule& o) const;

 private:
  void check_term_typing(const EntryKey& key, const Term& term) const;

  Tag left_tag_, right_tag_;
  AlgebraRef left_alg_, right_alg_;
  bool right_op_ = false;
  bool left_init_matched_ = false;
  std::vector<ModGen> gens_;
  EntryTable table_;
  std::vector<RulePattern> rules_;
};

// ---- structure equation ----

struct StructureReport {
  bool ok = true;
  std::string violation;  // first failing generator/word description
};

// Checks the tagged structure equation on all idempotent-compatible input
// words up to the given lengths per side (defaults derive from the table).
StructureReport check_structure(const Bimodule& b, int left_len = -1, int right_len = -1);

// ---- boundedness ----

enum class BoundFlavor { Operational, Left, Right };
enum class Bounded { Yes, No, Unknown };

Bounded is_bounded(const Bimodule& b, BoundFlavor flavor);

// ---- box tensor product ----

// Pairs X's right side with Y's left side; one of the two must be the A side
// and the other the D side. Output tags are (X.left, Y.right). Entries whose
// consumed input words exceed input_cap are not enumerated (rule families
// make the full table infinite).
Bimodule box(const Bimodule& x, const Bimodule& y, int path_cap = 20000, int input_cap = 8);

// ---- constructors ----

Bimodule identity_DA(const AlgebraRef& a);
Bimodule algebra_AA(const AlgebraRef& a);
// Bar resolution DD bimodule, truncated to words of length <= max_len.
// Stored with right_op set: its right outputs compose in reversed order.
Bimodule bar_DD(const AlgebraRef& a, int max_len);
// Reverses the roles of the two sides, transposing all structure entries.
Bimodule opposite(const Bimodule& b);
// The explicit diagonal DD bimodule over (A(Z), A(-Z)).
Bimodule cfdd_identity(const AlgebraRef& az, const AlgebraRef& aminusz);

}  // namespace bhf
