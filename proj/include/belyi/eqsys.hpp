#ifndef BELYI_EQSYS_HPP
#define BELYI_EQSYS_HPP

#include <optional>
#include <string>
#include <vector>

#include "belyi/mpoly.hpp"
#include "belyi/permutation.hpp"

namespace belyi {

/// A cycle of a fiber, identified by its length.  Fibers are numbered
/// 0 (over 0), 1 (over 1), 2 (over infinity).
struct CycleAnchor {
  int fiber = 2;
  int length = 1;
  bool operator==(const CycleAnchor& o) const { return fiber == o.fiber && length == o.length; }
};

/// Where the distinguished points go.  The cycle named by at_infinity must
/// belong to the infinity fiber (the normal form keeps a pole at t = oo);
/// at_zero / at_one may reference a cycle of any fiber, whose point is then
/// pinned at t = 0 / t = 1.
struct NormalizationPlan {
  CycleAnchor at_infinity;
  std::optional<CycleAnchor> at_zero;
  std::optional<CycleAnchor> at_one;

  // Default policy: a maximal cycle of the infinity fiber goes to oo; if the
  // 0-fiber (resp. 1-fiber) has a cycle of some length occurring exactly
  // once, the largest such is pinned at 0 (resp. 1).
  static NormalizationPlan default_for(const CycleType& c0, const CycleType& c1,
                                       const CycleType& cInf);

  void validate(const CycleType& c0, const CycleType& c1, const CycleType& cInf) const;
};

struct SystemVariable {
  std::string name;
  std::string role;  // leading-constant | factor-coefficient | aux-inverse | gauge-ref
  bool nonvanishing = false;
};

struct SystemEquation {
  MPoly poly;
  std::string provenance;  // coefficient-match | ASD | gauge | nondegeneracy
};

/// Monic factor of unknown coefficients: coefficients of t^0..t^{degree-1}
/// are variables var_base..var_base+degree-1.
struct FactorShape {
  int fiber;
  int multiplicity;
  int degree;
  int var_base;
};

/// Anchored factor (t - root)^multiplicity with a known rational root.
struct LiteralFactor {
  int fiber;
  int multiplicity;
  mpz_class root;
};

/// var := value substitution recorded by gauge fixing (value in full vars).
struct GaugeAssignment {
  int var;
  MPoly value;
};

struct PolynomialSystem {
  CycleType c0, c1, cInf;
  int degree = 0;

  std::vector<SystemVariable> vars;
  std::vector<SystemEquation> eqs;

  int c_var = 0;    // leading constant
  int inf_pole = 0; // pole order at t = infinity
  std::vector<FactorShape> factors;
  std::vector<LiteralFactor> literals;
  std::vector<GaugeAssignment> gauge_subs;
  std::vector<std::pair<int, int>> inverse_pairs;  // (v, v') added by closure

  std::string case_label = "base";
  bool seed_sliced = false;  // scaling gauge left to be pinned at lift time

  size_t nvars() const { return vars.size(); }
  bool is_substituted(int var) const;
  std::vector<int> scan_variables() const;  // not substituted, not aux-inverse
  std::vector<int> nonvanishing_variables() const;

  // The map skeleton in t with MPoly coefficients (gauge substitutions
  // applied): numerator = c * prod(fiber-0 pieces), denominator monic.
  TPoly numerator_shape() const;
  TPoly denominator_shape() const;
  TPoly one_fiber_numerator_shape() const;  // c * prod(fiber-1 pieces)

  // count of equations by provenance
  long count_equations(const std::string& provenance) const;
};

struct BuildResult {
  PolynomialSystem base;                  // no gauge conditions applied
  std::vector<PolynomialSystem> cases;    // one per gauge case
};

// Synthesize the genus-0 direct-method system for the classes under the
// plan.  Throws if the classes do not have genus 0 or the plan is invalid.
BuildResult build_system(const CycleType& c0, const CycleType& c1, const CycleType& cInf,
                         const NormalizationPlan& plan);

inline BuildResult build_system(const CycleType& c0, const CycleType& c1,
                                const CycleType& cInf) {
  return build_system(c0, c1, cInf, NormalizationPlan::default_for(c0, c1, cInf));
}

// Differentiation augmentation: divisibility relations between the fiber
// polynomials and their derivatives, reduced to coefficient identities.
// Solutions that are genuine maps of the declared classes are preserved.
PolynomialSystem asd_augment(const PolynomialSystem& sys);

// Nonvanishing closure: every marked variable v gains a partner v' and the
// equation v*v' = 1.  With strict = true, factor discriminants and pairwise
// resultants (same fiber, and numerator against denominator) also receive
// nonvanishing auxiliaries.
PolynomialSystem close_nondegenerate(const PolynomialSystem& sys, bool strict = false);

// Symbolic resultant of two univariate polynomials with MPoly coefficients
// (Sylvester determinant, cofactor expansion).
MPoly resultant(const TPoly& a, const TPoly& b, int nvars);

}  // namespace belyi

#endif
