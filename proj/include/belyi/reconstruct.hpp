#ifndef BELYI_RECONSTRUCT_HPP
#define BELYI_RECONSTRUCT_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "belyi/padic.hpp"
#include "belyi/qpoly.hpp"

namespace belyi {

// Recover x/y from a mod m with |x|, y <= sqrt(m/2), y coprime to m, via the
// half-extended Euclidean algorithm.  Failure is a value, not an error.
std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m);

// Lattice search for a small integer relation sum_i c_i * v_i = 0 mod p^N
// among the given ring elements.  Returns the coefficient vector of the
// shortest reduced row passing the height/precision ratio test.
std::optional<std::vector<mpz_class>> integer_relation(const std::vector<PadicElem>& values,
                                                       const PadicRing& ring);

struct AlgebraicCandidate {
  ZPoly minpoly;  // primitive, irreducible, positive leading coefficient
  int degree() const { return minpoly.degree(); }
};

// Recognize a ring element as an algebraic number of degree <= max_degree:
// an integer relation among 1, a, ..., a^max_degree yields a candidate
// minimal polynomial (content-normalized and irreducibility-checked, with
// the designated root being the input value).  Rational inputs come back as
// the degree-1 polynomial matching rational_reconstruct.
std::optional<AlgebraicCandidate> algebraic_reconstruct(const PadicElem& a,
                                                        const PadicRing& ring,
                                                        int max_degree);

// Express a in the field generated by theta: a = sum_i r_i theta^i with
// rational r_i, fielddeg coefficients.  Verified mod p^N before returning.
std::optional<std::vector<mpq_class>> express_in_power_basis(const PadicElem& a,
                                                             const PadicElem& theta,
                                                             int field_degree,
                                                             const PadicRing& ring);

}  // namespace belyi

#endif
