#ifndef BELYI_FQFACTOR_HPP
#define BELYI_FQFACTOR_HPP

#include <vector>

#include "belyi/fq.hpp"

namespace belyi {

// Complete factorization over F_q: squarefree split, distinct-degree split,
// then equal-degree (Cantor-Zassenhaus) splitting with deterministic
// seeding, so results are reproducible bit for bit.  Factors are monic and
// returned sorted; the product over factors^multiplicity times the leading
// coefficient reproduces the input.  Throws on the zero polynomial.
std::vector<std::pair<FqPoly, int>> factor_fq(const FqPoly& f);

// Multiset of irreducible-factor degrees (with multiplicity), sorted
// decreasing; the "cycle type" of f under Frobenius when f is squarefree.
std::vector<int> factor_degrees(const FqPoly& f);

// Squarefree decomposition f = lc * prod g_i^i over F_q (handles the
// characteristic-p p-th power collapse).
std::vector<std::pair<FqPoly, int>> squarefree_decomposition_fq(const FqPoly& f);

bool is_squarefree_fq(const FqPoly& f);

}  // namespace belyi

#endif
