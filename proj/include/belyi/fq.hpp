#ifndef BELYI_FQ_HPP
#define BELYI_FQ_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace belyi {

constexpr int kFqMaxExt = 4;

/// Element of F_{p^k}: coefficients of the residue polynomial, low first.
/// Unused coordinates are zero.
struct FqElem {
  std::array<uint64_t, kFqMaxExt> c{};
  bool operator==(const FqElem& o) const { return c == o.c; }
  bool operator<(const FqElem& o) const { return c < o.c; }
};

/// F_{p^k} with an explicit monic irreducible modulus over F_p.
/// For k = 2 the modulus follows the Conway-polynomial convention; for
/// k = 1 it is x - g with g the least primitive root.  Larger k fall back
/// to the least monic irreducible in lexicographic coefficient order.
class FqContext {
public:
  static FqContext prime_field(uint64_t p);
  static FqContext make(uint64_t p, int k);
  // explicit modulus: monic with coefficients mod p, length k+1
  static FqContext with_modulus(uint64_t p, std::vector<uint64_t> modulus);

  uint64_t p() const { return p_; }
  int k() const { return k_; }
  mpz_class q() const;
  const std::vector<uint64_t>& modulus() const { return modulus_; }

  FqElem zero() const { return FqElem{}; }
  FqElem one() const;
  FqElem from_int(long v) const;   // image of an integer
  FqElem generator() const;        // the residue class of x (k >= 2)
  FqElem from_vector(const std::vector<uint64_t>& v) const;

  bool is_zero(const FqElem& a) const;
  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem inv(const FqElem& a) const;
  FqElem pow(FqElem a, mpz_class e) const;
  FqElem frobenius(const FqElem& a) const;  // a^p

  // enumeration order: mixed-radix counter over the coefficients
  uint64_t size_u64() const;
  FqElem from_index(uint64_t idx) const;
  uint64_t to_index(const FqElem& a) const;

  std::string to_string(const FqElem& a, const std::string& gen = "a") const;

  bool operator==(const FqContext& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

private:
  uint64_t p_ = 0;
  int k_ = 1;
  std::vector<uint64_t> modulus_;  // monic, length k_+1

  uint64_t mod_add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p_ ? s - p_ : s; }
  uint64_t mod_sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t mod_mul(uint64_t a, uint64_t b) const { return (uint64_t)((__uint128_t)a * b % p_); }
  uint64_t mod_inv(uint64_t a) const;
};

// least primitive root mod p (p prime)
uint64_t least_primitive_root(uint64_t p);

// Conway polynomial for degree 2 over F_p: the minimal monic primitive
// quadratic (in the standard twisted lexicographic order) whose constant
// term is the least primitive root of F_p.
std::vector<uint64_t> conway_polynomial_k2(uint64_t p);

/// Univariate polynomial over an FqContext (low coefficients first).
class FqPoly {
public:
  FqPoly() = default;
  explicit FqPoly(FqContext ctx) : ctx_(std::move(ctx)) {}
  FqPoly(FqContext ctx, std::vector<FqElem> coeffs);

  static FqPoly from_integers(const FqContext& ctx, const std::vector<mpz_class>& coeffs);
  static FqPoly from_ints(const FqContext& ctx, const std::vector<long>& coeffs);
  static FqPoly x(const FqContext& ctx);
  static FqPoly constant(const FqContext& ctx, const FqElem& c);

  const FqContext& ctx() const { return ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FqElem coeff(int i) const;
  uint64_t coeff_int(int i) const;  // valid when k = 1
  const FqElem& leading() const;
  std::vector<mpz_class> to_integers() const;  // k = 1 only

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator*(const FqPoly& o) const;
  FqPoly scaled(const FqElem& s) const;
  bool operator==(const FqPoly& o) const { return c_ == o.c_; }

  FqPoly monic() const;
  FqPoly derivative() const;
  FqElem eval(const FqElem& x) const;

  static void divmod(const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r);
  FqPoly operator%(const FqPoly& b) const;
  FqPoly operator/(const FqPoly& b) const;

  std::string to_string(const std::string& var = "t") const;

  void normalize();

private:
  FqContext ctx_;
  std::vector<FqElem> c_;
};

FqPoly gcd(const FqPoly& a, const FqPoly& b);  // monic
void fq_xgcd(const FqPoly& a, const FqPoly& b, FqPoly& d, FqPoly& u, FqPoly& v);
FqPoly powmod(const FqPoly& base, const mpz_class& e, const FqPoly& mod);

}  // namespace belyi

#endif
