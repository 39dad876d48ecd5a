// Hochschild complexes: the cyclic bar complex CH of an AA bimodule over one
// algebra, and the small rotation-based complex tCH of a DA structure.
#pragma once

#include "bhf/bimodule.hpp"
#include "bhf/chain.hpp"

namespace bhf {

struct UnboundedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cyclic words x (x) a_1 (x) ... (x) a_l with idempotent chaining around the
// circle, truncated at the given word length (a subcomplex: the differential
// never raises length).
ChainComplex hochschild_AA(const Bimodule& m, int max_len);

// The complex on the cyclicization of a DA structure over one algebra: basis
// = generators with equal idempotents; differential iterates rotation o
// delta-hat with exact linear cycle detection, raising UnboundedInput when
// the orbit grows without settling.
ChainComplex hochschild_DA(const Bimodule& n, int iteration_cap = 200);

// Structural comparison underlying CH(M) ~ tCH(Bar(A) box M): builds both
// differentials on cyclic words up to the cap and compares them under the
// canonical bijection of bases. Returns true when every differential entry
// agrees within the window where truncation cannot interfere.
bool hochschild_bar_comparison(const Bimodule& m, int max_len);

}  // namespace bhf
