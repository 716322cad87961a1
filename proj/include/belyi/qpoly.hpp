#ifndef BELYI_QPOLY_HPP
#define BELYI_QPOLY_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

namespace belyi {

/// Univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has an empty coefficient vector.
class QPoly {
public:
  QPoly() = default;
  QPoly(std::initializer_list<mpq_class> coeffs);
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly constant(const mpq_class& c);
  static QPoly x();  // the monomial t
  static QPoly monomial(const mpq_class& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const mpq_class& operator[](int i) const;  // 0 beyond degree
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& leading() const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const mpq_class& s) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  QPoly derivative() const;
  mpq_class eval(const mpq_class& x) const;
  QPoly monic() const;

  // division with remainder; divisor must be nonzero
  static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
  QPoly operator/(const QPoly& b) const;  // exact or quotient part
  QPoly operator%(const QPoly& b) const;

  std::string to_string(const std::string& var = "t") const;

  void normalize();  // strip leading zeros

private:
  std::vector<mpq_class> c_;
};

QPoly gcd(const QPoly& a, const QPoly& b);  // monic gcd

// Yun's squarefree decomposition: returns (g_i, i) with f = lc * prod g_i^i,
// g_i monic squarefree pairwise coprime (factors with g_i = 1 omitted).
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

/// Integer polynomial helpers (for lattice reconstruction and Z[x] tests).
struct ZPoly {
  std::vector<mpz_class> c;  // low first, normalized (no leading zeros)

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void normalize();
  mpz_class content() const;
  ZPoly primitive_part() const;  // content removed, leading coefficient > 0
  QPoly to_q() const;
  static ZPoly from_q_clearing_denominators(const QPoly& f);
  std::string to_string(const std::string& var = "x") const;
  bool operator==(const ZPoly& o) const { return c == o.c; }
};

// Irreducibility over Q of a nonconstant integer polynomial (content
// ignored).  Exact: rational root sieve, modular degree patterns, and a
// Hensel-lift factor recombination fallback.
bool is_irreducible_z(const ZPoly& f);

// Full factorization over Z (primitive part; multiplicities via squarefree
// decomposition).  Returns primitive irreducible factors with multiplicity.
std::vector<std::pair<ZPoly, int>> factor_z(const ZPoly& f);

}  // namespace belyi

#endif
