#include "belyi/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace belyi {

bool MPoly::is_zero_exp(const Exp& e) {
  return std::all_of(e.begin(), e.end(), [](uint8_t x) { return x == 0; });
}

MPoly MPoly::constant(int nvars, const mpz_class& c) {
  MPoly p(nvars);
  if (c != 0) p.t_[Exp(nvars, 0)] = c;
  return p;
}

MPoly MPoly::variable(int nvars, int idx) {
  if (idx < 0 || idx >= nvars) throw std::out_of_range("variable index");
  MPoly p(nvars);
  Exp e(nvars, 0);
  e[idx] = 1;
  p.t_[e] = 1;
  return p;
}

mpz_class MPoly::constant_value() const {
  if (t_.empty()) return 0;
  return t_.begin()->second;
}

void MPoly::add_term(const Exp& e, const mpz_class& c) {
  if (c == 0) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(n_);
  for (const auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

MPoly MPoly::operator*(const mpz_class& s) const {
  MPoly r(n_);
  if (s == 0) return r;
  for (const auto& [e, c] : t_) r.t_[e] = c * s;
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(n_);
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      Exp e(n_);
      for (int i = 0; i < n_; ++i) {
        int s = e1[i] + e2[i];
        if (s > 255) throw std::overflow_error("exponent overflow");
        e[i] = static_cast<uint8_t>(s);
      }
      r.add_term(e, c1 * c2);
    }
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  MPoly r = MPoly::constant(n_, 1);
  MPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

MPoly MPoly::derivative(int var) const {
  MPoly r(n_);
  for (const auto& [e, c] : t_) {
    if (e[var] == 0) continue;
    Exp ne = e;
    ne[var] -= 1;
    r.add_term(ne, c * (long)e[var]);
  }
  return r;
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
  MPoly r(n_);
  for (const auto& [e, c] : t_) {
    Exp base = e;
    int k = base[var];
    base[var] = 0;
    MPoly term(n_);
    term.t_[base] = c;
    if (k > 0) term = term * value.pow(k);
    r = r + term;
  }
  return r;
}

int MPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, (int)e[var]);
  return d;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : t_) {
    int s = 0;
    for (int i = 0; i < n_; ++i) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

void MPoly::linear_split(int var, MPoly& coeff, MPoly& rest) const {
  coeff = MPoly(n_);
  rest = MPoly(n_);
  for (const auto& [e, c] : t_) {
    if (e[var] == 0) {
      rest.add_term(e, c);
    } else if (e[var] == 1) {
      Exp ne = e;
      ne[var] = 0;
      coeff.add_term(ne, c);
    } else {
      throw std::invalid_argument("linear_split: degree exceeds 1");
    }
  }
}

MPoly MPoly::strip_monomial_factor(const std::vector<int>& vars, Exp* removed) const {
  if (removed) removed->assign(n_, 0);
  if (t_.empty()) return *this;
  Exp common(n_, 255);
  for (const auto& [e, c] : t_)
    for (int v = 0; v < n_; ++v) common[v] = std::min(common[v], e[v]);
  Exp strip(n_, 0);
  for (int v : vars) strip[v] = common[v];
  if (is_zero_exp(strip)) return *this;
  MPoly r(n_);
  for (const auto& [e, c] : t_) {
    Exp ne = e;
    for (int v = 0; v < n_; ++v) ne[v] = static_cast<uint8_t>(e[v] - strip[v]);
    r.t_[ne] = c;
  }
  if (removed) *removed = strip;
  return r;
}

mpq_class MPoly::eval_q(const std::vector<mpq_class>& point) const {
  mpq_class acc = 0;
  for (const auto& [e, c] : t_) {
    mpq_class term(c);
    for (int v = 0; v < n_; ++v)
      for (int k = 0; k < e[v]; ++k) term *= point[v];
    acc += term;
  }
  return acc;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print reverse order: higher-degree terms first feels natural
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class a = c;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    first = false;
    mpz_class abs_a = abs(a);
    bool printed = false;
    if (abs_a != 1 || is_zero_exp(e)) {
      os << abs_a.get_str();
      printed = true;
    }
    for (int v = 0; v < n_; ++v) {
      if (!e[v]) continue;
      if (printed) os << "*";
      os << names[v];
      if (e[v] > 1) os << "^" << (int)e[v];
      printed = true;
    }
  }
  return os.str();
}

TPoly::TPoly(int nvars, std::vector<MPoly> coeffs) : n_(nvars), c_(std::move(coeffs)) {
  normalize();
}

void TPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly TPoly::from_mpoly(const MPoly& c) {
  TPoly p(c.nvars());
  if (!c.is_zero()) p.c_ = {c};
  return p;
}

TPoly TPoly::t_power(int nvars, int k) {
  TPoly p(nvars);
  p.c_.assign(k + 1, MPoly(nvars));
  p.c_[k] = MPoly::constant(nvars, 1);
  return p;
}

TPoly TPoly::linear_root(int nvars, const mpz_class& root) {
  TPoly p(nvars);
  p.c_ = {MPoly::constant(nvars, -root), MPoly::constant(nvars, 1)};
  p.normalize();
  return p;
}

MPoly TPoly::coeff(int i) const {
  if (i < 0 || i >= (int)c_.size()) return MPoly(n_);
  return c_[i];
}

TPoly TPoly::operator+(const TPoly& o) const {
  std::vector<MPoly> r(std::max(c_.size(), o.c_.size()), MPoly(n_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
  return TPoly(n_, std::move(r));
}

TPoly TPoly::operator-(const TPoly& o) const {
  std::vector<MPoly> r(std::max(c_.size(), o.c_.size()), MPoly(n_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
  return TPoly(n_, std::move(r));
}

TPoly TPoly::operator*(const TPoly& o) const {
  if (is_zero() || o.is_zero()) return TPoly(n_);
  std::vector<MPoly> r(c_.size() + o.c_.size() - 1, MPoly(n_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
  }
  return TPoly(n_, std::move(r));
}

TPoly TPoly::scaled(const MPoly& s) const {
  std::vector<MPoly> r = c_;
  for (auto& x : r) x = x * s;
  return TPoly(n_, std::move(r));
}

TPoly TPoly::pow(int e) const {
  TPoly r = TPoly::from_mpoly(MPoly::constant(n_, 1));
  TPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

TPoly TPoly::derivative() const {
  if (c_.size() <= 1) return TPoly(n_);
  std::vector<MPoly> r(c_.size() - 1, MPoly(n_));
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * mpz_class((long)i);
  return TPoly(n_, std::move(r));
}

TPoly TPoly::rem_monic(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("rem_monic: zero divisor");
  if (!b.c_.back().is_constant() || b.c_.back().constant_value() != 1)
    throw std::invalid_argument("rem_monic: divisor must be monic in t");
  TPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    MPoly lead = r.c_.back();
    int shift = r.degree() - b.degree();
    std::vector<MPoly> rc = r.c_;
    for (int i = 0; i <= b.degree(); ++i) rc[i + shift] = rc[i + shift] - lead * b.c_[i];
    rc.pop_back();
    r = TPoly(r.n_, std::move(rc));
  }
  return r;
}

}  // namespace belyi
