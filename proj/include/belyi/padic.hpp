#ifndef BELYI_PADIC_HPP
#define BELYI_PADIC_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "belyi/eqsys.hpp"
#include "belyi/fq.hpp"

namespace belyi {

/// Element of Z_p / p^N or of its unramified extension of degree k,
/// represented as a polynomial residue with coefficients mod p^N.
struct PadicElem {
  std::vector<mpz_class> c;  // length k, entries in [0, p^N)
  bool operator==(const PadicElem& o) const { return c == o.c; }
};

/// Fixed-precision arithmetic in Z_{p^k} mod p^N.  For k = 2 the modulus is
/// the integer lift of the Conway polynomial used by the matching FqContext,
/// so residues reduce consistently mod p.
class PadicRing {
public:
  using Elem = PadicElem;

  PadicRing(long p, int precision, int k = 1);
  static PadicRing lift_of(const FqContext& ctx, int precision);

  long p() const { return p_; }
  int precision() const { return n_; }
  int k() const { return k_; }
  const mpz_class& pN() const { return pn_; }

  Elem zero() const;
  Elem one() const;
  Elem from_mpz(const mpz_class& v) const;
  Elem from_fq(const FqContext& ctx, const FqElem& a) const;  // integer lift
  FqElem to_fq(const FqContext& ctx, const Elem& a) const;    // reduce mod p

  bool is_zero(const Elem& a) const;
  bool is_unit(const Elem& a) const;  // nonzero mod p
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;  // requires unit

  // reinterpret at lower or equal precision
  Elem reduce_to(const Elem& a, const PadicRing& target) const;

  // balanced digit expansion of a prime-field value (k = 1 component)
  std::vector<long> balanced_digits(const mpz_class& a, int count) const;

  std::string to_string(const Elem& a) const;

private:
  long p_;
  int n_;
  int k_;
  mpz_class pn_;
  std::vector<mpz_class> modulus_;  // monic degree k lift (k >= 2)

  mpz_class red(const mpz_class& v) const;
};

struct NewtonOptions {
  int target_precision = 64;
  // pin this variable to its seed value (gauge slice); -1 = none
  int slice_var = -1;
};

struct NewtonResult {
  bool ok = false;
  std::string error;
  std::vector<PadicElem> values;        // per system variable, all filled
  std::vector<int> selected_equations;  // rows of the square subsystem
  std::vector<int> nonzero_residuals;   // equation indices with residual != 0
  int precision = 0;
};

// p-adic Newton lifting of a finite-field solution of the system.  The seed
// assigns values to sys.scan_variables(); substituted and auxiliary
// variables are derived.  A square subsystem with unit Jacobian determinant
// is selected among the coefficient-match/ASD equations; quadratically
// convergent iteration refines to the requested precision, then residuals
// of the full system are reported.
NewtonResult multinewton_lift(const PolynomialSystem& sys, const FqContext& ctx,
                              const std::vector<FqElem>& seed_scan_values,
                              const NewtonOptions& opt);

}  // namespace belyi

#endif
