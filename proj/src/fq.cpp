#include "belyi/fq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace belyi {

namespace {

std::vector<uint64_t> prime_factors_u64(uint64_t n) {
  std::vector<uint64_t> fs;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = (uint64_t)((__uint128_t)r * b % m);
    b = (uint64_t)((__uint128_t)b * b % m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

uint64_t least_primitive_root(uint64_t p) {
  if (p == 2) return 1;
  auto fs = prime_factors_u64(p - 1);
  for (uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (uint64_t f : fs)
      if (powmod_u64(g, (p - 1) / f, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

std::vector<uint64_t> conway_polynomial_k2(uint64_t p) {
  // Monic primitive quadratic x^2 + a1 x + a0 with a0 = least primitive
  // root (norm compatibility with degree 1), minimal in the twisted order:
  // writing x^2 - c1 x + c0, minimize c1 then c0.  Here c0 = a0 is fixed.
  const uint64_t g = least_primitive_root(p);
  const uint64_t q1 = p * p - 1;
  auto fs = prime_factors_u64(q1);
  for (uint64_t c1 = 0; c1 < p; ++c1) {
    uint64_t a1 = (p - c1 % p) % p;  // a1 = -c1
    // candidate x^2 + a1 x + g; alpha^2 = -a1*alpha - g
    // primitivity: order of alpha equals p^2 - 1
    auto mul2 = [&](std::array<uint64_t, 2> u, std::array<uint64_t, 2> v) {
      // (u0 + u1 x)(v0 + v1 x) mod (x^2 + a1 x + g)
      uint64_t t0 = (uint64_t)((__uint128_t)u[0] * v[0] % p);
      uint64_t t1 = (uint64_t)(((__uint128_t)u[0] * v[1] + (__uint128_t)u[1] * v[0]) % p);
      uint64_t t2 = (uint64_t)((__uint128_t)u[1] * v[1] % p);
      // x^2 = -a1 x - g
      uint64_t r0 = (t0 + (uint64_t)((__uint128_t)t2 * (p - g) % p)) % p;
      uint64_t r1 = (t1 + (uint64_t)((__uint128_t)t2 * (p - a1) % p)) % p;
      return std::array<uint64_t, 2>{r0, r1};
    };
    auto pw = [&](std::array<uint64_t, 2> b, uint64_t e) {
      std::array<uint64_t, 2> r{1, 0};
      while (e) {
        if (e & 1) r = mul2(r, b);
        b = mul2(b, b);
        e >>= 1;
      }
      return r;
    };
    std::array<uint64_t, 2> alpha{0, 1};
    bool primitive = true;
    for (uint64_t f : fs) {
      auto v = pw(alpha, q1 / f);
      if (v[0] == 1 && v[1] == 0) { primitive = false; break; }
    }
    if (primitive) return {g % p, a1, 1};
  }
  throw std::logic_error("no Conway quadratic found");
}

FqContext FqContext::prime_field(uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  FqContext ctx;
  ctx.p_ = p;
  ctx.k_ = 1;
  uint64_t g = least_primitive_root(p);
  ctx.modulus_ = {(p - g) % p, 1};  // x - g
  return ctx;
}

FqContext FqContext::make(uint64_t p, int k) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  if (k < 1 || k > kFqMaxExt) throw std::invalid_argument("extension degree out of range");
  if (k == 1) return prime_field(p);
  FqContext ctx;
  ctx.p_ = p;
  ctx.k_ = k;
  if (k == 2) {
    ctx.modulus_ = conway_polynomial_k2(p);
    return ctx;
  }
  // least monic irreducible in lexicographic coefficient order (a_0,..,a_{k-1})
  std::vector<uint64_t> m(k + 1, 0);
  m[k] = 1;
  auto irreducible = [&](const std::vector<uint64_t>& mod) {
    FqContext c2;
    c2.p_ = p;
    c2.k_ = k;
    c2.modulus_ = mod;
    // x^{p^j} tests via FqPoly over the PRIME field with this modulus
    FqContext fp = FqContext::prime_field(p);
    std::vector<FqElem> mc(k + 1);
    for (int i = 0; i <= k; ++i) mc[i] = fp.from_int((long)mod[i]);
    FqPoly modp(fp, mc);
    FqPoly x = FqPoly::x(fp);
    // f irreducible iff x^{p^k} = x mod f and gcd(x^{p^{k/t}} - x, f) = 1
    // for all prime divisors t of k
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    if (!(powmod(x, pk, modp) == x % modp)) return false;
    for (uint64_t t : prime_factors_u64((uint64_t)k)) {
      mpz_class pj;
      mpz_ui_pow_ui(pj.get_mpz_t(), p, k / t);
      FqPoly d = gcd(powmod(x, pj, modp) - x, modp);
      if (d.degree() != 0) return false;
    }
    return true;
  };
  while (true) {
    if (irreducible(m)) { ctx.modulus_ = m; return ctx; }
    // increment (a_0, a_1, ...) as a base-p counter
    int i = 0;
    while (i < k) {
      if (++m[i] < p) break;
      m[i] = 0;
      ++i;
    }
    if (i == k) throw std::logic_error("no irreducible found (impossible)");
  }
}

FqContext FqContext::with_modulus(uint64_t p, std::vector<uint64_t> modulus) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree >= 1");
  FqContext ctx;
  ctx.p_ = p;
  ctx.k_ = static_cast<int>(modulus.size()) - 1;
  if (ctx.k_ > kFqMaxExt) throw std::invalid_argument("extension degree out of range");
  for (auto& c : modulus) c %= p;
  modulus.back() = 1;
  ctx.modulus_ = std::move(modulus);
  return ctx;
}

mpz_class FqContext::q() const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p_, k_);
  return r;
}

FqElem FqContext::one() const {
  FqElem e;
  e.c[0] = 1 % p_;
  return e;
}

FqElem FqContext::from_int(long v) const {
  long m = static_cast<long>(p_);
  long r = v % m;
  if (r < 0) r += m;
  FqElem e;
  e.c[0] = static_cast<uint64_t>(r);
  return e;
}

FqElem FqContext::generator() const {
  if (k_ < 2) throw std::logic_error("generator defined for k >= 2");
  FqElem e;
  e.c[1] = 1;
  return e;
}

FqElem FqContext::from_vector(const std::vector<uint64_t>& v) const {
  if ((int)v.size() > k_) throw std::invalid_argument("vector longer than extension degree");
  FqElem e;
  for (size_t i = 0; i < v.size(); ++i) e.c[i] = v[i] % p_;
  return e;
}

bool FqContext::is_zero(const FqElem& a) const {
  for (int i = 0; i < k_; ++i)
    if (a.c[i] != 0) return false;
  return true;
}

FqElem FqContext::add(const FqElem& a, const FqElem& b) const {
  FqElem r;
  for (int i = 0; i < k_; ++i) r.c[i] = mod_add(a.c[i], b.c[i]);
  return r;
}

FqElem FqContext::sub(const FqElem& a, const FqElem& b) const {
  FqElem r;
  for (int i = 0; i < k_; ++i) r.c[i] = mod_sub(a.c[i], b.c[i]);
  return r;
}

FqElem FqContext::neg(const FqElem& a) const {
  FqElem r;
  for (int i = 0; i < k_; ++i) r.c[i] = a.c[i] ? p_ - a.c[i] : 0;
  return r;
}

FqElem FqContext::mul(const FqElem& a, const FqElem& b) const {
  if (k_ == 1) {
    FqElem r;
    r.c[0] = mod_mul(a.c[0], b.c[0]);
    return r;
  }
  // schoolbook product then reduction by the monic modulus
  std::array<uint64_t, 2 * kFqMaxExt - 1> t{};
  for (int i = 0; i < k_; ++i) {
    if (!a.c[i]) continue;
    for (int j = 0; j < k_; ++j)
      t[i + j] = (uint64_t)(((__uint128_t)a.c[i] * b.c[j] + t[i + j]) % p_);
  }
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    uint64_t coef = t[i];
    if (!coef) continue;
    t[i] = 0;
    for (int j = 0; j < k_; ++j) {
      // x^i = x^{i-k} * x^k = x^{i-k} * (-(m_0 + ... + m_{k-1}x^{k-1}))
      uint64_t sub = mod_mul(coef, modulus_[j]);
      t[i - k_ + j] = mod_sub(t[i - k_ + j], sub);
    }
  }
  FqElem r;
  for (int i = 0; i < k_; ++i) r.c[i] = t[i];
  return r;
}

uint64_t FqContext::mod_inv(uint64_t a) const {
  // extended Euclid
  long long t = 0, nt = 1;
  long long r = (long long)p_, nr = (long long)(a % p_);
  while (nr != 0) {
    long long qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  if (r != 1) throw std::invalid_argument("not invertible");
  if (t < 0) t += (long long)p_;
  return (uint64_t)t;
}

FqElem FqContext::inv(const FqElem& a) const {
  if (is_zero(a)) throw std::invalid_argument("inverse of zero");
  if (k_ == 1) {
    FqElem r;
    r.c[0] = mod_inv(a.c[0]);
    return r;
  }
  // a^(q-2)
  mpz_class e = q() - 2;
  FqElem base = a;
  return pow(base, e);
}

FqElem FqContext::pow(FqElem a, mpz_class e) const {
  if (e < 0) { a = inv(a); e = -e; }
  FqElem r = one();
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FqElem FqContext::frobenius(const FqElem& a) const {
  return pow(a, mpz_class((unsigned long)p_));
}

uint64_t FqContext::size_u64() const {
  uint64_t s = 1;
  for (int i = 0; i < k_; ++i) s *= p_;
  return s;
}

FqElem FqContext::from_index(uint64_t idx) const {
  FqElem e;
  for (int i = 0; i < k_; ++i) {
    e.c[i] = idx % p_;
    idx /= p_;
  }
  return e;
}

uint64_t FqContext::to_index(const FqElem& a) const {
  uint64_t idx = 0;
  for (int i = k_; i-- > 0;) idx = idx * p_ + a.c[i];
  return idx;
}

std::string FqContext::to_string(const FqElem& a, const std::string& gen) const {
  if (k_ == 1) return std::to_string(a.c[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = k_; i-- > 0;) {
    if (!a.c[i]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a.c[i] != 1) os << a.c[i];
    if (i >= 1) {
      if (a.c[i] != 1) os << "*";
      os << gen;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

FqPoly::FqPoly(FqContext ctx, std::vector<FqElem> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  normalize();
}

void FqPoly::normalize() {
  while (!c_.empty() && ctx_.is_zero(c_.back())) c_.pop_back();
}

FqPoly FqPoly::from_integers(const FqContext& ctx, const std::vector<mpz_class>& coeffs) {
  std::vector<FqElem> v(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    mpz_class r = coeffs[i] % (long)ctx.p();
    if (r < 0) r += (long)ctx.p();
    v[i] = ctx.from_int(r.get_si());
  }
  return FqPoly(ctx, std::move(v));
}

FqPoly FqPoly::from_ints(const FqContext& ctx, const std::vector<long>& coeffs) {
  std::vector<FqElem> v(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) v[i] = ctx.from_int(coeffs[i]);
  return FqPoly(ctx, std::move(v));
}

FqPoly FqPoly::x(const FqContext& ctx) {
  return FqPoly(ctx, {ctx.zero(), ctx.one()});
}

FqPoly FqPoly::constant(const FqContext& ctx, const FqElem& c) { return FqPoly(ctx, {c}); }

FqElem FqPoly::coeff(int i) const {
  if (i < 0 || i >= (int)c_.size()) return FqElem{};
  return c_[i];
}

uint64_t FqPoly::coeff_int(int i) const { return coeff(i).c[0]; }

const FqElem& FqPoly::leading() const {
  if (is_zero()) throw std::invalid_argument("leading of zero polynomial");
  return c_.back();
}

std::vector<mpz_class> FqPoly::to_integers() const {
  std::vector<mpz_class> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = (unsigned long)c_[i].c[0];
  return v;
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
  std::vector<FqElem> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = ctx_.add(coeff((int)i), o.coeff((int)i));
  return FqPoly(ctx_, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
  std::vector<FqElem> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = ctx_.sub(coeff((int)i), o.coeff((int)i));
  return FqPoly(ctx_, std::move(r));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
  if (is_zero() || o.is_zero()) return FqPoly(ctx_);
  std::vector<FqElem> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (ctx_.is_zero(c_[i])) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = ctx_.add(r[i + j], ctx_.mul(c_[i], o.c_[j]));
  }
  return FqPoly(ctx_, std::move(r));
}

FqPoly FqPoly::scaled(const FqElem& s) const {
  std::vector<FqElem> r = c_;
  for (auto& x : r) x = ctx_.mul(x, s);
  return FqPoly(ctx_, std::move(r));
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(ctx_.inv(leading()));
}

FqPoly FqPoly::derivative() const {
  if (c_.size() <= 1) return FqPoly(ctx_);
  std::vector<FqElem> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = ctx_.mul(c_[i], ctx_.from_int((long)i));
  return FqPoly(ctx_, std::move(r));
}

FqElem FqPoly::eval(const FqElem& x) const {
  FqElem acc{};
  for (size_t i = c_.size(); i-- > 0;) acc = ctx_.add(ctx_.mul(acc, x), c_[i]);
  return acc;
}

void FqPoly::divmod(const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const FqContext& ctx = a.ctx_;
  r = a;
  std::vector<FqElem> qc;
  if (a.degree() >= b.degree()) qc.assign(a.degree() - b.degree() + 1, FqElem{});
  FqElem lcinv = ctx.inv(b.leading());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    FqElem f = ctx.mul(r.leading(), lcinv);
    qc[shift] = f;
    std::vector<FqElem> rc = r.c_;
    for (int i = 0; i <= b.degree(); ++i)
      rc[i + shift] = ctx.sub(rc[i + shift], ctx.mul(f, b.c_[i]));
    r = FqPoly(ctx, std::move(rc));
  }
  q = FqPoly(ctx, std::move(qc));
}

FqPoly FqPoly::operator%(const FqPoly& b) const {
  FqPoly q, r;
  divmod(*this, b, q, r);
  return r;
}

FqPoly FqPoly::operator/(const FqPoly& b) const {
  FqPoly q, r;
  divmod(*this, b, q, r);
  return q;
}

std::string FqPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (ctx_.is_zero(c_[i])) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = ctx_.to_string(c_[i]);
    if (i == 0) os << cs;
    else {
      if (cs != "1") os << "(" << cs << ")*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = x % y;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

void fq_xgcd(const FqPoly& a, const FqPoly& b, FqPoly& d, FqPoly& u, FqPoly& v) {
  const FqContext& ctx = a.ctx();
  FqPoly r0 = a, r1 = b;
  FqPoly s0 = FqPoly::constant(ctx, ctx.one()), s1 = FqPoly(ctx);
  FqPoly t0 = FqPoly(ctx), t1 = FqPoly::constant(ctx, ctx.one());
  while (!r1.is_zero()) {
    FqPoly q, r;
    FqPoly::divmod(r0, r1, q, r);
    r0 = r1; r1 = r;
    FqPoly s = s0 - q * s1;
    s0 = s1; s1 = s;
    FqPoly t = t0 - q * t1;
    t0 = t1; t1 = t;
  }
  d = r0;
  u = s0;
  v = t0;
}

FqPoly powmod(const FqPoly& base, const mpz_class& e, const FqPoly& mod) {
  const FqContext& ctx = base.ctx();
  FqPoly r = FqPoly::constant(ctx, ctx.one());
  FqPoly b = base % mod;
  mpz_class ee = e;
  while (ee > 0) {
    if (mpz_odd_p(ee.get_mpz_t())) r = (r * b) % mod;
    b = (b * b) % mod;
    ee >>= 1;
  }
  return r;
}

}  // namespace belyi
