#ifndef BELYI_SOLVER_HPP
#define BELYI_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "belyi/enumeration.hpp"
#include "belyi/eqsys.hpp"
#include "belyi/fq.hpp"
#include "belyi/model.hpp"
#include "belyi/padic.hpp"

namespace belyi {

// The `count` smallest primes not dividing the group order, increasing.
// Such primes admit a good-reduction model and divide no ramification index.
std::vector<long> good_primes(const mpz_class& group_order, int count);

struct SearchOptions {
  unsigned long long scan_budget = 500000000ULL;  // max loop-space size
  int threads = 1;
  bool use_mitm = false;
};

// All F_q-points of the system (one gauge case): variables that some
// equation determines linearly are eliminated before scanning, and the
// remaining loop space is enumerated exhaustively.  Solutions are full
// assignments to every system variable, deterministically ordered.
std::vector<std::vector<FqElem>> search_fq(const PolynomialSystem& sys, const FqContext& ctx,
                                           const SearchOptions& opt = {});

// loop-space size after elimination (for budget decisions / error reports)
mpz_class search_loop_size(const PolynomialSystem& sys, const FqContext& ctx);

struct SolveOptions {
  std::vector<long> primes;  // override good_primes when nonempty
  int prime_count = 3;
  long max_q = 50000;
  unsigned long long scan_budget = 500000000ULL;
  bool use_asd = true;
  bool strict = false;
  bool use_mitm = false;
  int threads = 1;
  int max_digits = 400;  // decimal precision cap for lifting
  std::optional<NormalizationPlan> plan;
  EnumOptions enum_options;
};

struct PrimeTrailEntry {
  long p = 0;
  int ext_degree = 1;
  std::string case_label;
  long seeds = 0;
  long lifted = 0;
  std::vector<std::string> notes;
};

struct SolveReport {
  CycleType c0, c1, cInf;
  long passport_transitive = 0;  // transitive classes with these cycle types
  long field_degree_bound = 0;
  std::vector<PrimeTrailEntry> trail;
  std::vector<BelyiMapModel> models;
  std::vector<std::string> unresolved;
  bool complete = false;  // models found == transitive passport count
};

// The finite-field + lifting pipeline: build the system, close it, augment
// with the differentiation relations, search small fields over good primes,
// lift nonsingular seeds, recognize coefficients over a number field, verify
// and deduplicate.  Every returned model passes is_belyi with matching
// classes.
SolveReport solve_passport(const CycleType& c0, const CycleType& c1, const CycleType& cInf,
                           const SolveOptions& opt = {});

}  // namespace belyi

#endif
