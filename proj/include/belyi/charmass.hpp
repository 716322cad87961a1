#ifndef BELYI_CHARMASS_HPP
#define BELYI_CHARMASS_HPP

#include <vector>

#include <gmpxx.h>

#include "belyi/permutation.hpp"

namespace belyi {

// All partitions of d in reverse-lexicographic order ((d) first, (1^d) last).
std::vector<CycleType> partitions(int d, int cap = 30);

// Number of partitions of d (independent recurrence, used as a cross-check).
mpz_class partition_count(int d);

// Size of the S_d conjugacy class with the given cycle type:
// d! / prod_i (i^{m_i} m_i!).
mpz_class class_size(const CycleType& c);

// Order of the centralizer of an element of the given type:
// prod_i i^{m_i} m_i!.
mpz_class centralizer_order(const CycleType& c);

// chi_lambda(mu) by the Murnaghan-Nakayama border-strip recursion.  Both
// arguments are partitions of the same d.  Memoized internally; safe to call
// from several threads.
long character_value(const CycleType& lambda, const CycleType& mu);

// chi_lambda(1) = dimension of the irreducible indexed by lambda.
mpz_class character_dimension(const CycleType& lambda);

/// One column of the S_d character table: values chi_lambda(mu) for each
/// irreducible lambda, at a fixed class mu.
struct CharacterTableSlice {
  int degree = 0;
  std::vector<CycleType> lambdas;
  std::vector<long> values;
};

CharacterTableSlice character_column(const CycleType& mu);

// Frobenius: sum over triples (s0,s1,sInf) with the given classes and
// s0*s1*sInf = 1, taken up to simultaneous conjugation and weighted by
// 1/|centralizer|, equals
//   (#C0 #C1 #Cinf / (d!)^2) * sum_lambda chi(C0)chi(C1)chi(Cinf)/chi(1).
// Exact rational; includes intransitive triples.
mpq_class frobenius_mass(const CycleType& c0, const CycleType& c1, const CycleType& cInf,
                         int cap = 30);

}  // namespace belyi

#endif
