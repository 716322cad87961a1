#ifndef BELYI_NUMBERFIELD_HPP
#define BELYI_NUMBERFIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "belyi/qpoly.hpp"

namespace belyi {

/// Q(theta) presented by the minimal polynomial of theta; elements are
/// rational vectors in the power basis 1, theta, ..., theta^(deg-1).
/// Degree 1 is Q itself.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
  static std::shared_ptr<const NumberField> rationals();
  // primitive integer polynomial, irreducible over Q (verified)
  static std::shared_ptr<const NumberField> create(const ZPoly& minpoly);

  int degree() const { return deg_; }
  bool is_rationals() const { return deg_ == 1; }
  const QPoly& minpoly() const { return minpoly_monic_; }   // monic over Q
  const ZPoly& minpoly_z() const { return minpoly_z_; }     // primitive over Z
  std::string describe() const;

  bool same_presentation(const NumberField& o) const { return minpoly_z_ == o.minpoly_z_; }

private:
  NumberField() = default;
  int deg_ = 1;
  QPoly minpoly_monic_;
  ZPoly minpoly_z_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NFElem {
public:
  NFElem() = default;
  NFElem(FieldPtr K, std::vector<mpq_class> coords);
  static NFElem from_rational(const FieldPtr& K, const mpq_class& r);
  static NFElem theta(const FieldPtr& K);  // the field generator

  const FieldPtr& field() const { return K_; }
  const std::vector<mpq_class>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_value() const;  // valid when is_rational()

  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator*(const NFElem& o) const;
  NFElem operator-() const;
  NFElem inverse() const;
  bool operator==(const NFElem& o) const;

  // apply a field embedding given by the image of theta
  NFElem map_generator(const NFElem& theta_image) const;

  std::string to_string(const std::string& gen = "w") const;

private:
  FieldPtr K_;
  std::vector<mpq_class> c_;
};

// Roots of the defining polynomial inside the field itself: theta always;
// for quadratic fields also the conjugate root.  (Non-normal cubics and
// higher report only theta.)
std::vector<NFElem> field_roots_in_field(const FieldPtr& K);

/// Polynomials over a number field.
class NFPoly {
public:
  NFPoly() = default;
  explicit NFPoly(FieldPtr K) : K_(std::move(K)) {}
  NFPoly(FieldPtr K, std::vector<NFElem> coeffs);
  static NFPoly from_qpoly(const FieldPtr& K, const QPoly& f);

  const FieldPtr& field() const { return K_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  NFElem coeff(int i) const;
  const std::vector<NFElem>& coeffs() const { return c_; }
  const NFElem& leading() const;

  NFPoly operator+(const NFPoly& o) const;
  NFPoly operator-(const NFPoly& o) const;
  NFPoly operator*(const NFPoly& o) const;
  NFPoly scaled(const NFElem& s) const;
  bool operator==(const NFPoly& o) const;

  NFPoly monic() const;
  NFPoly derivative() const;
  NFElem eval(const NFElem& x) const;
  NFPoly map_generator(const NFElem& theta_image) const;
  // substitute t -> a*t + b
  NFPoly compose_affine(const NFElem& a, const NFElem& b) const;

  static void divmod(const NFPoly& a, const NFPoly& b, NFPoly& q, NFPoly& r);
  NFPoly operator/(const NFPoly& b) const;
  NFPoly operator%(const NFPoly& b) const;

  std::string to_string(const std::string& var = "t", const std::string& gen = "w") const;

  void normalize();

private:
  FieldPtr K_;
  std::vector<NFElem> c_;
};

NFPoly gcd(const NFPoly& a, const NFPoly& b);  // monic
std::vector<std::pair<NFPoly, int>> squarefree_decomposition(const NFPoly& f);

}  // namespace belyi

#endif
