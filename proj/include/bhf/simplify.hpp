// Cancellation of differential components with idempotent coefficients, with
// the homotopy-equivalence data (f, g, h) tracked through every step, plus the
// morphism-complex operations used to verify it.
#pragma once

#include "bhf/bimodule.hpp"

namespace bhf {

struct NonTerminating : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A morphism between two structures of the same shape: entries in the same
// (inputs; src; inputs) -> (louts, dst, routs) format. Sources index
// src_module generators, targets index dst_module generators.
struct MorphismTable {
  EntryTable entries;

  void toggle(const EntryKey& key, const Term& term);
  bool is_zero() const { return entries.empty(); }
};

// Identity morphism of b (idempotent coefficients on D sides).
MorphismTable identity_morphism(const Bimodule& b);

// second-after-first composition; all structures share tags and algebras.
MorphismTable compose_morphisms(const Bimodule& src, const Bimodule& mid, const Bimodule& dst,
                                const MorphismTable& first, const MorphismTable& second);

// Differential of a morphism f: X -> Y in the morphism complex.
MorphismTable morphism_differential(const Bimodule& x, const Bimodule& y, const MorphismTable& f);

struct Simplified {
  Bimodule reduced;
  MorphismTable f;  // original -> reduced
  MorphismTable g;  // reduced -> original
  MorphismTable h;  // homotopy on the original
  Bimodule original;

  // entrywise verification of d f = 0, d g = 0, f g = id, g f = id + d h
  bool verify(int left_len = -1, int right_len = -1) const;
};

// Repeatedly cancels the lexicographically least differential component whose
// coefficients are idempotents. When A-sides are present, composite entries
// are kept up to the given total input length per side.
Simplified simplify(const Bimodule& b, int input_cap = 8);

}  // namespace bhf
