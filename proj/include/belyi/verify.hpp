#ifndef BELYI_VERIFY_HPP
#define BELYI_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "belyi/model.hpp"
#include "belyi/permutation.hpp"

namespace belyi {

struct IsBelyiResult {
  bool ok = false;
  CycleType over0, over1, overInf;  // computed fiber profiles (when defined)
  bool classes_match = false;       // computed == claimed
  std::string reason;               // populated when !ok
};

// Exact check that the model is a genus-0 three-point cover: the fiber
// profiles over 0, 1, infinity are computed from squarefree decompositions
// (the point at infinity is accounted for by degree bookkeeping); the map is
// a Belyi map iff the three profiles absorb all 2d-2 ramification.
IsBelyiResult is_belyi(const BelyiMapModel& m);

struct SampleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduce the model modulo a degree-1 prime over p (a linear residue is
// preferred; an inert prime uses the full residue field) and factor
// num - c*den: the factor-degree multiset is a cycle type realized by the
// Frobenius, which must lie in the monodromy group.  Throws SampleError on
// precondition violations (bad prime, branch residue value, ...).
CycleType cycle_type_sample(const BelyiMapModel& m, long p, long c_value);

enum class Verdict { Consistent, Inconsistent };

struct MonodromyReport {
  Verdict verdict = Verdict::Inconsistent;
  std::string witness;              // offending sample or missing class
  long samples_taken = 0;
  std::vector<long> primes_used;
  std::string note = "statistical check; consistency is not a proof";
};

// Samples cycle types across >= 3 usable primes.  CONSISTENT requires every
// sampled type to occur in <sigma0, sigma1> and every class of density
// >= 0.1 in the group to be observed.  The seed offsets the deterministic
// residue-value counters.
MonodromyReport monodromy_consistent(const BelyiMapModel& m, const PermutationTriple& t,
                                     int trials, uint64_t seed = 0);

}  // namespace belyi

#endif
