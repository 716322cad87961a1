#ifndef BELYI_MPOLY_HPP
#define BELYI_MPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace belyi {

/// Sparse multivariate polynomial over Z in a fixed number of variables.
/// Terms are keyed by exponent vectors (one byte per variable).
class MPoly {
public:
  using Exp = std::vector<uint8_t>;

  MPoly() = default;
  explicit MPoly(int nvars) : n_(nvars) {}

  static MPoly constant(int nvars, const mpz_class& c);
  static MPoly variable(int nvars, int idx);

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && is_zero_exp(t_.begin()->first)); }
  mpz_class constant_value() const;  // valid when is_constant()

  const std::map<Exp, mpz_class>& terms() const { return t_; }
  void add_term(const Exp& e, const mpz_class& c);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const mpz_class& s) const;
  bool operator==(const MPoly& o) const { return n_ == o.n_ && t_ == o.t_; }

  MPoly pow(int e) const;
  MPoly derivative(int var) const;
  MPoly substitute(int var, const MPoly& value) const;

  int degree_in(int var) const;
  int total_degree() const;
  // f = coeff*x_var + rest with neither part involving x_var; requires
  // degree_in(var) <= 1
  void linear_split(int var, MPoly& coeff, MPoly& rest) const;
  bool involves(int var) const { return degree_in(var) > 0; }

  // Divide out the largest monomial factor supported on the given variables
  // (e.g. strip powers of a nonvanishing variable from an equation).
  MPoly strip_monomial_factor(const std::vector<int>& vars, Exp* removed = nullptr) const;

  mpq_class eval_q(const std::vector<mpq_class>& point) const;

  // Generic evaluation over a ring R providing:
  //   Elem, from_mpz(const mpz_class&), add(Elem,Elem), mul(Elem,Elem), one()
  template <typename Ring>
  typename Ring::Elem eval(const Ring& R, const std::vector<typename Ring::Elem>& pt) const {
    typename Ring::Elem acc = R.from_mpz(0);
    for (const auto& [e, c] : t_) {
      typename Ring::Elem term = R.from_mpz(c);
      for (int v = 0; v < n_; ++v)
        for (int k = 0; k < e[v]; ++k) term = R.mul(term, pt[v]);
      acc = R.add(acc, term);
    }
    return acc;
  }

  std::string to_string(const std::vector<std::string>& names) const;

private:
  int n_ = 0;
  std::map<Exp, mpz_class> t_;

  static bool is_zero_exp(const Exp& e);
};

/// Univariate polynomial in a distinguished variable t whose coefficients
/// are MPoly values (the direct-method working form).
class TPoly {
public:
  TPoly() = default;
  explicit TPoly(int nvars) : n_(nvars) {}
  TPoly(int nvars, std::vector<MPoly> coeffs);

  static TPoly from_mpoly(const MPoly& c);            // degree 0
  static TPoly t_power(int nvars, int k);             // t^k
  static TPoly linear_root(int nvars, const mpz_class& root);  // t - root

  int nvars() const { return n_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  MPoly coeff(int i) const;  // by value; zero polynomial beyond the degree
  const std::vector<MPoly>& coeffs() const { return c_; }

  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  TPoly scaled(const MPoly& s) const;
  TPoly pow(int e) const;
  TPoly derivative() const;

  // remainder after division by a divisor whose leading coefficient is the
  // constant 1 (monic in t)
  static TPoly rem_monic(const TPoly& a, const TPoly& b);

  void normalize();

private:
  int n_ = 0;
  std::vector<MPoly> c_;
};

}  // namespace belyi

#endif
