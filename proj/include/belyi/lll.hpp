#ifndef BELYI_LLL_HPP
#define BELYI_LLL_HPP

#include <vector>

#include <gmpxx.h>

namespace belyi {

/// Lovasz-reduce the lattice basis given by the rows (delta = 3/4), in exact
/// integer/rational arithmetic.  Throws on linearly dependent rows.  When
/// `transform` is non-null it receives the unimodular matrix U with
/// result = U * input.
std::vector<std::vector<mpz_class>> lll_reduce(
    std::vector<std::vector<mpz_class>> basis,
    std::vector<std::vector<mpz_class>>* transform = nullptr);

}  // namespace belyi

#endif
