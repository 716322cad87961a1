#include "belyi/qpoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "belyi/fq.hpp"
#include "belyi/fqfactor.hpp"

namespace belyi {

QPoly::QPoly(std::initializer_list<mpq_class> coeffs) : c_(coeffs) { normalize(); }
QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly QPoly::constant(const mpq_class& c) { return QPoly({c}); }
QPoly QPoly::x() { return QPoly({0, 1}); }

QPoly QPoly::monomial(const mpq_class& c, int deg) {
  std::vector<mpq_class> v(deg + 1, 0);
  v[deg] = c;
  return QPoly(std::move(v));
}

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& QPoly::operator[](int i) const {
  static const mpq_class zero = 0;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

const mpq_class& QPoly::leading() const {
  if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return c_.back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
  std::vector<mpq_class> r = c_;
  for (auto& x : r) x = -x;
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const mpq_class& s) const {
  if (s == 0) return QPoly();
  std::vector<mpq_class> r = c_;
  for (auto& x : r) x *= s;
  return QPoly(std::move(r));
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<mpq_class> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * (long)i;
  return QPoly(std::move(r));
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  mpq_class inv = mpq_class(1) / leading();
  return (*this) * inv;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  r = a;
  std::vector<mpq_class> qc;
  if (a.degree() >= b.degree()) qc.assign(a.degree() - b.degree() + 1, 0);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    mpq_class f = r.leading() / b.leading();
    qc[shift] = f;
    std::vector<mpq_class> rc = r.c_;
    for (int i = 0; i <= b.degree(); ++i) rc[i + shift] -= f * b.c_[i];
    rc.resize(r.degree());  // leading term cancels exactly
    r = QPoly(std::move(rc));
  }
  q = QPoly(std::move(qc));
}

QPoly QPoly::operator/(const QPoly& b) const {
  QPoly q, r;
  divmod(*this, b, q, r);
  return q;
}

QPoly QPoly::operator%(const QPoly& b) const {
  QPoly q, r;
  divmod(*this, b, q, r);
  return r;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& a = c_[i];
    if (a == 0) continue;
    mpq_class abs_a = a > 0 ? a : mpq_class(-a);
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    first = false;
    bool unit = (abs_a == 1);
    if (i == 0) os << abs_a.get_str();
    else {
      if (!unit) os << abs_a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  if (f.is_zero() || f.degree() == 0) return out;
  QPoly w = f.monic();
  QPoly g = gcd(w, w.derivative());
  QPoly y = w / g;
  int i = 1;
  while (y.degree() > 0) {
    QPoly z = gcd(y, g);
    QPoly part = y / z;
    if (part.degree() > 0) out.emplace_back(part.monic(), i);
    y = z;
    if (g.degree() > 0) g = g / z;
    ++i;
  }
  return out;
}

void ZPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c) {
    mpz_class ax = abs(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ax.get_mpz_t());
  }
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (c.back() < 0) g = -g;
  ZPoly r;
  r.c.reserve(c.size());
  for (const auto& x : c) r.c.push_back(x / g);
  return r;
}

QPoly ZPoly::to_q() const {
  std::vector<mpq_class> v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(x);
  return QPoly(std::move(v));
}

ZPoly ZPoly::from_q_clearing_denominators(const QPoly& f) {
  mpz_class l = 1;
  for (const auto& q : f.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  ZPoly r;
  r.c.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) {
    mpq_class v = q * l;
    r.c.push_back(v.get_num());
  }
  r.normalize();
  return r;
}

std::string ZPoly::to_string(const std::string& var) const { return to_q().to_string(var); }

namespace {

// ---------- Zassenhaus factorization over Z ----------

using VP = std::vector<mpz_class>;  // poly mod m, low first

void vp_trim(VP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

VP vp_reduce(const VP& a, const mpz_class& m) {
  VP r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] % m;
    if (r[i] < 0) r[i] += m;
  }
  vp_trim(r);
  return r;
}

VP vp_mul(const VP& a, const VP& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  VP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
  for (auto& x : r)
    if (x < 0) x += m;
  vp_trim(r);
  return r;
}

// remainder of a modulo monic b, coefficients mod m
VP vp_rem_monic(VP a, const VP& b, const mpz_class& m) {
  vp_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    mpz_class lead = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = (a[i + shift] - lead * b[i]) % m;
      if (a[i + shift] < 0) a[i + shift] += m;
    }
    vp_trim(a);
  }
  return a;
}

mpz_class centered(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// f monic mod p^K (target modulus), facs monic mod p pairwise coprime with
// product f mod p.  Linear multifactor Hensel lift to modulus M = p^K.
std::vector<VP> hensel_multilift(const VP& f, std::vector<VP> facs, long p, const mpz_class& M) {
  const FqContext ctx = FqContext::prime_field((uint64_t)p);
  const size_t r = facs.size();
  // correction multipliers: h_i = (prod_{j != i} g_j)^{-1} mod (g_i, p)
  std::vector<FqPoly> gi_p, hi_p;
  for (size_t i = 0; i < r; ++i) gi_p.push_back(FqPoly::from_integers(ctx, facs[i]));
  for (size_t i = 0; i < r; ++i) {
    FqPoly prod = FqPoly::constant(ctx, ctx.one());
    for (size_t j = 0; j < r; ++j)
      if (j != i) prod = (prod * gi_p[j]) % gi_p[i];
    FqPoly d, u, v;
    fq_xgcd(prod, gi_p[i], d, u, v);
    if (d.degree() != 0) throw std::logic_error("hensel: modular factors not coprime");
    hi_p.push_back(u.scaled(ctx.inv(d.coeff(0))) % gi_p[i]);
  }
  mpz_class m = p;
  while (m < M) {
    // e = (f - prod facs) / m  mod p
    VP prod = {mpz_class(1)};
    mpz_class next_m = m * p;
    for (const auto& g : facs) prod = vp_mul(prod, g, next_m);
    VP e(std::max(f.size(), prod.size()), 0);
    for (size_t i = 0; i < f.size(); ++i) e[i] = f[i] % next_m;
    for (size_t i = 0; i < prod.size(); ++i) {
      e[i] -= prod[i];
      e[i] %= next_m;
      if (e[i] < 0) e[i] += next_m;
    }
    for (auto& x : e) {
      if (x % m != 0) throw std::logic_error("hensel: drift off the lift path");
      x /= m;
      x %= p;
    }
    vp_trim(e);
    FqPoly ep = FqPoly::from_integers(ctx, e);
    for (size_t i = 0; i < r; ++i) {
      FqPoly delta = (ep * hi_p[i]) % gi_p[i];
      // facs[i] += m * delta
      for (int dg = 0; dg <= delta.degree(); ++dg) {
        if ((size_t)dg >= facs[i].size()) facs[i].resize(dg + 1, 0);
        facs[i][dg] = (facs[i][dg] + m * (long)delta.coeff_int(dg)) % next_m;
        if (facs[i][dg] < 0) facs[i][dg] += next_m;
      }
    }
    m = next_m;
  }
  return facs;
}

mpz_class factor_coeff_bound(const ZPoly& f) {
  mpz_class norm2 = 0;
  for (const auto& x : f.c) norm2 += x * x;
  mpz_class s = sqrt(norm2) + 1;
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, f.degree() + 1);
  return two_n * s * abs(f.c.back());
}

// factor a primitive squarefree polynomial of degree >= 1 over Z
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
  const int n = f.degree();
  if (n == 1) return {f};

  const long candidate_primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  std::optional<std::vector<VP>> best;
  long best_p = 0;
  for (long p : candidate_primes) {
    if (f.c.back() % p == 0) continue;
    FqContext ctx = FqContext::prime_field((uint64_t)p);
    FqPoly fp = FqPoly::from_integers(ctx, f.c);
    if (fp.degree() != n || !is_squarefree_fq(fp)) continue;
    auto mf = factor_fq(fp.monic());
    if (mf.size() == 1) return {f};  // irreducible mod p
    std::vector<VP> parts;
    for (const auto& [g, mult] : mf) {
      VP v(g.degree() + 1);
      for (int i = 0; i <= g.degree(); ++i) v[i] = mpz_class((unsigned long)g.coeff_int(i));
      parts.push_back(std::move(v));
    }
    if (!best || parts.size() < best->size()) {
      best = std::move(parts);
      best_p = p;
    }
    if (best->size() <= 3) break;
  }
  if (!best) throw std::logic_error("factor_z: no usable prime found");

  const long p = best_p;
  mpz_class bound = 2 * factor_coeff_bound(f);
  mpz_class M = p;
  while (M <= bound) M *= p;

  // make f monic mod M for lifting
  mpz_class lc = f.c.back() % M;
  if (lc < 0) lc += M;
  mpz_class lcinv;
  if (mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t()) == 0)
    throw std::logic_error("factor_z: leading coefficient not invertible");
  VP fmonic(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) {
    fmonic[i] = (f.c[i] % M) * lcinv % M;
    if (fmonic[i] < 0) fmonic[i] += M;
  }
  auto lifted = hensel_multilift(fmonic, *best, p, M);

  // subset recombination
  std::vector<ZPoly> result;
  ZPoly rem = f;
  std::vector<VP> pool = lifted;
  int size = 1;
  while (2 * size <= (int)pool.size()) {
    bool found_any = false;
    std::vector<int> idx(size);
    std::function<bool(int, int)> choose = [&](int start, int k) -> bool {
      if (k == size) {
        VP cand = {mpz_class(rem.c.back() % M)};
        if (cand[0] < 0) cand[0] += M;
        for (int i = 0; i < size; ++i) cand = vp_mul(cand, pool[idx[i]], M);
        ZPoly g;
        g.c.resize(cand.size());
        for (size_t i = 0; i < cand.size(); ++i) g.c[i] = centered(cand[i], M);
        g.normalize();
        if (g.is_zero()) return false;
        g = g.primitive_part();
        if (g.degree() < 1) return false;
        QPoly q, rr;
        QPoly::divmod(rem.to_q(), g.to_q(), q, rr);
        if (!rr.is_zero()) return false;
        result.push_back(g);
        rem = ZPoly::from_q_clearing_denominators(q).primitive_part();
        std::vector<VP> npool;
        for (int j = 0, t = 0; j < (int)pool.size(); ++j) {
          if (t < size && idx[t] == j) { ++t; continue; }
          npool.push_back(pool[j]);
        }
        pool = std::move(npool);
        return true;
      }
      for (int i = start; i < (int)pool.size(); ++i) {
        idx[k] = i;
        if (choose(i + 1, k + 1)) return true;
      }
      return false;
    };
    if ((int)pool.size() >= size && choose(0, 0)) {
      found_any = true;
    }
    if (!found_any) ++size;
  }
  if (rem.degree() >= 1) result.push_back(rem);
  return result;
}

}  // namespace

bool is_irreducible_z(const ZPoly& f_in) {
  ZPoly f = f_in.primitive_part();
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  QPoly fq = f.to_q();
  if (gcd(fq, fq.derivative()).degree() > 0) return false;
  auto parts = factor_squarefree_z(f);
  return parts.size() == 1;
}

std::vector<std::pair<ZPoly, int>> factor_z(const ZPoly& f_in) {
  std::vector<std::pair<ZPoly, int>> out;
  ZPoly f = f_in.primitive_part();
  if (f.degree() < 1) return out;
  for (const auto& [g, mult] : squarefree_decomposition(f.to_q())) {
    ZPoly gz = ZPoly::from_q_clearing_denominators(g).primitive_part();
    if (gz.degree() < 1) continue;
    for (auto& irr : factor_squarefree_z(gz)) out.emplace_back(irr.primitive_part(), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.c < b.first.c;
  });
  return out;
}

}  // namespace belyi
