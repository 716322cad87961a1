#ifndef BELYI_ENUMERATION_HPP
#define BELYI_ENUMERATION_HPP

#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "belyi/permutation.hpp"

namespace belyi {

struct EnumOptions {
  int degree_cap = 13;
  mpz_class class_budget = mpz_class(100000000);  // max class_size(c1) scanned
  int threads = 1;
};

/// Representatives of all triples with prescribed classes, up to simultaneous
/// conjugation.  Intransitive triples are included and flagged.
struct EnumerationResult {
  CycleType c0, c1, cInf;
  int degree = 0;
  std::vector<PermutationTriple> representatives;  // canonical forms
  std::vector<mpz_class> aut_orders;               // parallel
  std::vector<bool> transitive_flags;              // parallel
  std::vector<mpz_class> group_orders;             // parallel
  mpz_class stream_count = 0;  // sigma1 candidates emitted before filtering

  // sum over representatives of 1/autOrder (all of them, transitive or not)
  mpq_class total_mass() const;
  long transitive_count(std::optional<mpz_class> group_order_filter = std::nullopt) const;
};

// Streams every permutation in S_d with cycle type c exactly once.  The
// callback may return false to stop early.  Emission order is deterministic.
void for_each_permutation_of_type(const CycleType& c,
                                  const std::function<bool(const Permutation&)>& fn);

std::vector<Permutation> permutations_of_type(const CycleType& c, int degree_cap = 13);

// The canonical representative of the class c used as the fixed sigma0:
// cycles laid out on consecutive points, longest first.
Permutation fixed_representative(const CycleType& c);

// Generators of the centralizer of fixed_representative(c) in S_d.
std::vector<Permutation> centralizer_generators(const CycleType& c);

// Enumerate triples with the given classes up to simultaneous conjugation.
// Fixes sigma0 = fixed_representative(c0), streams sigma1 over its class,
// keeps pairs whose product has type cInf, and partitions the kept set into
// orbits under centralizer conjugation.  Parity-incompatible classes return
// an empty result immediately.
EnumerationResult triples_with_classes(const CycleType& c0, const CycleType& c1,
                                       const CycleType& cInf,
                                       const EnumOptions& opt = {});

long passport_size(const CycleType& c0, const CycleType& c1, const CycleType& cInf,
                   std::optional<mpz_class> group_order_filter = std::nullopt,
                   const EnumOptions& opt = {});

// Upper bound for the field-of-moduli degree of any Belyi map with these
// classes: the number of transitive conjugacy classes of triples.
long degree_bound(const CycleType& c0, const CycleType& c1, const CycleType& cInf,
                  const EnumOptions& opt = {});

}  // namespace belyi

#endif
