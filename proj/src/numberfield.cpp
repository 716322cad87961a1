#include "belyi/numberfield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace belyi {

FieldPtr NumberField::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->deg_ = 1;
    f->minpoly_monic_ = QPoly::x();
    f->minpoly_z_.c = {0, 1};
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr NumberField::create(const ZPoly& minpoly) {
  ZPoly prim = minpoly.primitive_part();
  if (prim.degree() < 1) throw std::invalid_argument("minimal polynomial must be nonconstant");
  if (prim.degree() == 1) return rationals();
  if (!is_irreducible_z(prim))
    throw std::invalid_argument("minimal polynomial is not irreducible over Q");
  auto f = std::shared_ptr<NumberField>(new NumberField());
  f->deg_ = prim.degree();
  f->minpoly_z_ = prim;
  f->minpoly_monic_ = prim.to_q().monic();
  return f;
}

std::string NumberField::describe() const {
  if (is_rationals()) return "Q";
  return "Q[w]/(" + minpoly_z_.to_string("w") + ")";
}

NFElem::NFElem(FieldPtr K, std::vector<mpq_class> coords)
    : K_(std::move(K)), c_(std::move(coords)) {
  if ((int)c_.size() != K_->degree()) throw std::invalid_argument("coordinate length mismatch");
}

NFElem NFElem::from_rational(const FieldPtr& K, const mpq_class& r) {
  std::vector<mpq_class> c(K->degree(), 0);
  c[0] = r;
  return NFElem(K, std::move(c));
}

NFElem NFElem::theta(const FieldPtr& K) {
  if (K->degree() < 2) throw std::invalid_argument("theta undefined over Q");
  std::vector<mpq_class> c(K->degree(), 0);
  c[1] = 1;
  return NFElem(K, std::move(c));
}

bool NFElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool NFElem::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class NFElem::rational_value() const {
  if (!is_rational()) throw std::logic_error("element is not rational");
  return c_[0];
}

NFElem NFElem::operator+(const NFElem& o) const {
  std::vector<mpq_class> r = c_;
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return NFElem(K_, std::move(r));
}

NFElem NFElem::operator-(const NFElem& o) const {
  std::vector<mpq_class> r = c_;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
  return NFElem(K_, std::move(r));
}

NFElem NFElem::operator-() const {
  std::vector<mpq_class> r = c_;
  for (auto& x : r) x = -x;
  return NFElem(K_, std::move(r));
}

NFElem NFElem::operator*(const NFElem& o) const {
  const int d = K_->degree();
  std::vector<mpq_class> ac = c_, bc = o.c_;
  QPoly prod = QPoly(std::move(ac)) * QPoly(std::move(bc));
  QPoly rem = prod % K_->minpoly();
  std::vector<mpq_class> r(d, 0);
  for (int i = 0; i <= rem.degree(); ++i) r[i] = rem[i];
  return NFElem(K_, std::move(r));
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  const int d = K_->degree();
  if (d == 1) return from_rational(K_, 1 / c_[0]);
  // extended Euclid in Q[x]: u*elem + v*minpoly = 1
  std::vector<mpq_class> ac = c_;
  QPoly a(std::move(ac));
  QPoly b = K_->minpoly();
  QPoly r0 = b, r1 = a;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero() && r1.degree() > 0) {
    QPoly q, r;
    QPoly::divmod(r0, r1, q, r);
    QPoly t = t0 - q * t1;
    r0 = r1; r1 = r;
    t0 = t1; t1 = t;
  }
  if (r1.is_zero()) throw std::logic_error("element not invertible (minpoly reducible?)");
  QPoly inv = t1 * (mpq_class(1) / r1[0]);
  QPoly rem = inv % b;
  std::vector<mpq_class> r(d, 0);
  for (int i = 0; i <= rem.degree(); ++i) r[i] = rem[i];
  return NFElem(K_, std::move(r));
}

bool NFElem::operator==(const NFElem& o) const { return c_ == o.c_; }

NFElem NFElem::map_generator(const NFElem& theta_image) const {
  NFElem acc = NFElem::from_rational(theta_image.field(), 0);
  NFElem pw = NFElem::from_rational(theta_image.field(), 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    acc = acc + pw * NFElem::from_rational(theta_image.field(), c_[i]);
    pw = pw * theta_image;
  }
  return acc;
}

std::string NFElem::to_string(const std::string& gen) const {
  if (K_->degree() == 1) return c_[0].get_str();
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    mpq_class a = abs(c_[i]);
    bool unit = (a == 1 && i > 0);
    if (!unit) os << a.get_str();
    if (i >= 1) {
      if (!unit) os << "*";
      os << gen;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  os << ")";
  return os.str();
}

std::vector<NFElem> field_roots_in_field(const FieldPtr& K) {
  std::vector<NFElem> roots;
  if (K->degree() == 1) return roots;
  roots.push_back(NFElem::theta(K));
  if (K->degree() == 2) {
    // monic x^2 + u x + v: conjugate root = -u - theta
    const QPoly& m = K->minpoly();
    std::vector<mpq_class> c(2);
    c[0] = -m[1];
    c[1] = -1;
    roots.emplace_back(K, std::move(c));
  }
  return roots;
}

NFPoly::NFPoly(FieldPtr K, std::vector<NFElem> coeffs) : K_(std::move(K)), c_(std::move(coeffs)) {
  normalize();
}

void NFPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

NFPoly NFPoly::from_qpoly(const FieldPtr& K, const QPoly& f) {
  std::vector<NFElem> c;
  c.reserve(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) c.push_back(NFElem::from_rational(K, f[i]));
  return NFPoly(K, std::move(c));
}

NFElem NFPoly::coeff(int i) const {
  if (i < 0 || i >= (int)c_.size()) return NFElem::from_rational(K_, 0);
  return c_[i];
}

const NFElem& NFPoly::leading() const {
  if (is_zero()) throw std::invalid_argument("leading of zero polynomial");
  return c_.back();
}

NFPoly NFPoly::operator+(const NFPoly& o) const {
  std::vector<NFElem> r;
  size_t n = std::max(c_.size(), o.c_.size());
  r.reserve(n);
  for (size_t i = 0; i < n; ++i) r.push_back(coeff((int)i) + o.coeff((int)i));
  return NFPoly(K_, std::move(r));
}

NFPoly NFPoly::operator-(const NFPoly& o) const {
  std::vector<NFElem> r;
  size_t n = std::max(c_.size(), o.c_.size());
  r.reserve(n);
  for (size_t i = 0; i < n; ++i) r.push_back(coeff((int)i) - o.coeff((int)i));
  return NFPoly(K_, std::move(r));
}

NFPoly NFPoly::operator*(const NFPoly& o) const {
  if (is_zero() || o.is_zero()) return NFPoly(K_);
  std::vector<NFElem> r(c_.size() + o.c_.size() - 1, NFElem::from_rational(K_, 0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  }
  return NFPoly(K_, std::move(r));
}

NFPoly NFPoly::scaled(const NFElem& s) const {
  std::vector<NFElem> r = c_;
  for (auto& x : r) x = x * s;
  return NFPoly(K_, std::move(r));
}

bool NFPoly::operator==(const NFPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

NFPoly NFPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

NFPoly NFPoly::derivative() const {
  if (c_.size() <= 1) return NFPoly(K_);
  std::vector<NFElem> r;
  r.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    r.push_back(c_[i] * NFElem::from_rational(K_, (long)i));
  return NFPoly(K_, std::move(r));
}

NFElem NFPoly::eval(const NFElem& x) const {
  NFElem acc = NFElem::from_rational(K_, 0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

NFPoly NFPoly::map_generator(const NFElem& theta_image) const {
  std::vector<NFElem> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.map_generator(theta_image));
  return NFPoly(theta_image.field(), std::move(r));
}

NFPoly NFPoly::compose_affine(const NFElem& a, const NFElem& b) const {
  // horner for f(a t + b)
  NFPoly at(K_, {b, a});
  NFPoly acc(K_);
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * at;
    acc = acc + NFPoly(K_, {c_[i]});
  }
  return acc;
}

void NFPoly::divmod(const NFPoly& a, const NFPoly& b, NFPoly& q, NFPoly& r) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  r = a;
  std::vector<NFElem> qc;
  const FieldPtr& K = a.K_;
  if (a.degree() >= b.degree())
    qc.assign(a.degree() - b.degree() + 1, NFElem::from_rational(K, 0));
  NFElem lead_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    NFElem f = r.leading() * lead_inv;
    qc[shift] = f;
    std::vector<NFElem> rc = r.c_;
    for (int i = 0; i <= b.degree(); ++i) rc[i + shift] = rc[i + shift] - f * b.c_[i];
    rc.pop_back();
    r = NFPoly(K, std::move(rc));
  }
  q = NFPoly(K, std::move(qc));
}

NFPoly NFPoly::operator/(const NFPoly& b) const {
  NFPoly q, r;
  divmod(*this, b, q, r);
  return q;
}

NFPoly NFPoly::operator%(const NFPoly& b) const {
  NFPoly q, r;
  divmod(*this, b, q, r);
  return r;
}

std::string NFPoly::to_string(const std::string& var, const std::string& gen) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].to_string(gen);
    if (i >= 1) {
      os << "*" << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

NFPoly gcd(const NFPoly& a, const NFPoly& b) {
  NFPoly x = a, y = b;
  while (!y.is_zero()) {
    NFPoly r = x % y;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

std::vector<std::pair<NFPoly, int>> squarefree_decomposition(const NFPoly& f) {
  std::vector<std::pair<NFPoly, int>> out;
  if (f.is_zero() || f.degree() == 0) return out;
  NFPoly w = f.monic();
  NFPoly g = gcd(w, w.derivative());
  NFPoly y = w / g;
  int i = 1;
  while (y.degree() > 0) {
    NFPoly z = gcd(y, g);
    NFPoly part = y / z;
    if (part.degree() > 0) out.emplace_back(part.monic(), i);
    y = z;
    if (g.degree() > 0) g = g / z;
    ++i;
  }
  return out;
}

}  // namespace belyi
