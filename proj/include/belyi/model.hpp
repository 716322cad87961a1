#ifndef BELYI_MODEL_HPP
#define BELYI_MODEL_HPP

#include <optional>
#include <string>

#include "belyi/numberfield.hpp"
#include "belyi/permutation.hpp"

namespace belyi {

/// Genus-0 rational map over a number field with its claimed ramification
/// profile.  The denominator is kept monic and coprime to the numerator.
struct BelyiMapModel {
  FieldPtr field;
  NFPoly num, den;
  CycleType c0, c1, cInf;

  int degree() const { return std::max(num.degree(), den.degree()); }

  // monic-denominator normal form; throws if num/den share a factor
  static BelyiMapModel make(FieldPtr field, NFPoly num, NFPoly den, CycleType c0,
                            CycleType c1, CycleType cInf);

  // apply the field automorphism/embedding theta -> theta_image
  BelyiMapModel map_generator(const NFElem& theta_image) const;

  std::string to_string() const;
};

// Exact gauge equivalence: does f2(a t + b) = f1 hold for some a != 0, b in
// the field?  Both maps must share the pole at infinity (the normal form
// used throughout), so candidate transforms are affine; they are derived
// from matching fiber points rather than searched.
bool gauge_equivalent(const BelyiMapModel& f1, const BelyiMapModel& f2);

// key for dedup/storage: field and coefficient tuples, exact
std::string model_key(const BelyiMapModel& m);

}  // namespace belyi

#endif
