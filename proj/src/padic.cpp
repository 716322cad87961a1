#include "belyi/padic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace belyi {

PadicRing::PadicRing(long p, int precision, int k) : p_(p), n_(precision), k_(k) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  if (k < 1 || k > 2) throw std::invalid_argument("only unramified degree <= 2 supported");
  mpz_ui_pow_ui(pn_.get_mpz_t(), (unsigned long)p, (unsigned long)precision);
  if (k_ == 2) {
    auto conway = conway_polynomial_k2((uint64_t)p);
    modulus_.assign(conway.begin(), conway.end());
  }
}

PadicRing PadicRing::lift_of(const FqContext& ctx, int precision) {
  PadicRing r((long)ctx.p(), precision, ctx.k());
  if (ctx.k() >= 2) {
    r.modulus_.clear();
    for (uint64_t m : ctx.modulus()) r.modulus_.push_back((unsigned long)m);
  }
  return r;
}

mpz_class PadicRing::red(const mpz_class& v) const {
  mpz_class r = v % pn_;
  if (r < 0) r += pn_;
  return r;
}

PadicElem PadicRing::zero() const { return PadicElem{std::vector<mpz_class>(k_, 0)}; }

PadicElem PadicRing::one() const {
  PadicElem e = zero();
  e.c[0] = 1;
  return e;
}

PadicElem PadicRing::from_mpz(const mpz_class& v) const {
  PadicElem e = zero();
  e.c[0] = red(v);
  return e;
}

PadicElem PadicRing::from_fq(const FqContext& ctx, const FqElem& a) const {
  if (ctx.k() > k_) throw std::invalid_argument("from_fq: extension degree mismatch");
  PadicElem e = zero();
  for (int i = 0; i < ctx.k(); ++i) e.c[i] = (unsigned long)a.c[i];
  return e;
}

FqElem PadicRing::to_fq(const FqContext& ctx, const Elem& a) const {
  FqElem r{};
  for (int i = 0; i < std::min(k_, ctx.k()); ++i) {
    mpz_class m = a.c[i] % (long)ctx.p();
    if (m < 0) m += (long)ctx.p();
    r.c[i] = m.get_ui();
  }
  return r;
}

bool PadicRing::is_zero(const Elem& a) const {
  for (const auto& x : a.c)
    if (x != 0) return false;
  return true;
}

bool PadicRing::is_unit(const Elem& a) const {
  for (const auto& x : a.c)
    if (x % p_ != 0) return true;
  return false;
}

PadicElem PadicRing::add(const Elem& a, const Elem& b) const {
  PadicElem r = zero();
  for (int i = 0; i < k_; ++i) r.c[i] = red(a.c[i] + b.c[i]);
  return r;
}

PadicElem PadicRing::sub(const Elem& a, const Elem& b) const {
  PadicElem r = zero();
  for (int i = 0; i < k_; ++i) r.c[i] = red(a.c[i] - b.c[i]);
  return r;
}

PadicElem PadicRing::neg(const Elem& a) const {
  PadicElem r = zero();
  for (int i = 0; i < k_; ++i) r.c[i] = red(-a.c[i]);
  return r;
}

PadicElem PadicRing::mul(const Elem& a, const Elem& b) const {
  if (k_ == 1) {
    PadicElem r = zero();
    r.c[0] = red(a.c[0] * b.c[0]);
    return r;
  }
  // (a0 + a1 x)(b0 + b1 x) mod (x^2 + m1 x + m0)
  mpz_class t0 = a.c[0] * b.c[0];
  mpz_class t1 = a.c[0] * b.c[1] + a.c[1] * b.c[0];
  mpz_class t2 = a.c[1] * b.c[1];
  PadicElem r = zero();
  r.c[0] = red(t0 - t2 * modulus_[0]);
  r.c[1] = red(t1 - t2 * modulus_[1]);
  return r;
}

PadicElem PadicRing::inv(const Elem& a) const {
  if (!is_unit(a)) throw std::invalid_argument("inverse of a non-unit");
  FqContext ctx =
      k_ == 1 ? FqContext::prime_field((uint64_t)p_)
              : FqContext::with_modulus((uint64_t)p_,
                                        std::vector<uint64_t>{modulus_[0].get_ui(),
                                                              modulus_[1].get_ui(), 1});
  FqElem am = to_fq(ctx, a);
  FqElem im = ctx.inv(am);
  PadicElem x = from_fq(ctx, im);
  int prec = 1;
  while (prec < n_) {
    prec = std::min(2 * prec, n_);
    x = mul(x, sub(from_mpz(2), mul(a, x)));
  }
  return x;
}

PadicElem PadicRing::reduce_to(const Elem& a, const PadicRing& target) const {
  if (target.k_ != k_ || target.p_ != p_)
    throw std::invalid_argument("reduce_to: incompatible rings");
  PadicElem r = target.zero();
  for (int i = 0; i < k_; ++i) r.c[i] = a.c[i] % target.pn_;
  return r;
}

std::vector<long> PadicRing::balanced_digits(const mpz_class& a, int count) const {
  std::vector<long> digits;
  mpz_class x = red(a);
  for (int i = 0; i < count; ++i) {
    mpz_class d = x % p_;
    if (d < 0) d += p_;
    if (2 * d > p_) d -= p_;
    digits.push_back(d.get_si());
    x = (x - d) / p_;
  }
  return digits;
}

std::string PadicRing::to_string(const Elem& a) const {
  std::ostringstream os;
  if (k_ == 1) {
    os << a.c[0].get_str();
  } else {
    os << a.c[0].get_str() << " + " << a.c[1].get_str() << "*w";
  }
  os << " (mod " << p_ << "^" << n_ << ")";
  return os.str();
}

namespace {

// dense linear solve A x = b over the ring; pivots must be units
bool solve_linear(const PadicRing& R, std::vector<std::vector<PadicElem>> A,
                  std::vector<PadicElem> b, std::vector<PadicElem>& x) {
  const size_t n = A.size();
  std::vector<size_t> colperm(n);
  for (size_t i = 0; i < n; ++i) colperm[i] = i;
  for (size_t row = 0; row < n; ++row) {
    size_t pr = row, pc = row;
    bool found = false;
    for (size_t i = row; i < n && !found; ++i)
      for (size_t j = row; j < n && !found; ++j)
        if (R.is_unit(A[i][j])) { pr = i; pc = j; found = true; }
    if (!found) return false;
    std::swap(A[row], A[pr]);
    std::swap(b[row], b[pr]);
    for (size_t i = 0; i < n; ++i) std::swap(A[i][row], A[i][pc]);
    std::swap(colperm[row], colperm[pc]);
    PadicElem piv_inv = R.inv(A[row][row]);
    for (size_t j = row; j < n; ++j) A[row][j] = R.mul(A[row][j], piv_inv);
    b[row] = R.mul(b[row], piv_inv);
    for (size_t i = 0; i < n; ++i) {
      if (i == row || R.is_zero(A[i][row])) continue;
      PadicElem f = A[i][row];
      for (size_t j = row; j < n; ++j) A[i][j] = R.sub(A[i][j], R.mul(f, A[row][j]));
      b[i] = R.sub(b[i], R.mul(f, b[row]));
    }
  }
  x.assign(n, R.zero());
  for (size_t i = 0; i < n; ++i) x[colperm[i]] = b[i];
  return true;
}

struct RingAdapter {
  const PadicRing* R;
  using Elem = PadicElem;
  Elem from_mpz(const mpz_class& v) const { return R->from_mpz(v); }
  Elem add(const Elem& a, const Elem& b) const { return R->add(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return R->mul(a, b); }
};

struct FqAdapter {
  const FqContext* C;
  using Elem = FqElem;
  Elem from_mpz(const mpz_class& v) const {
    mpz_class r = v % (long)C->p();
    if (r < 0) r += (long)C->p();
    return C->from_int((long)r.get_ui());
  }
  Elem add(const Elem& a, const Elem& b) const { return C->add(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return C->mul(a, b); }
};

}  // namespace

NewtonResult multinewton_lift(const PolynomialSystem& sys, const FqContext& ctx,
                              const std::vector<FqElem>& seed_scan_values,
                              const NewtonOptions& opt) {
  NewtonResult res;
  const auto scan = sys.scan_variables();
  if (seed_scan_values.size() != scan.size()) {
    res.error = "seed length does not match scan variables";
    return res;
  }

  std::vector<int> lift_vars;
  for (int v : scan)
    if (v != opt.slice_var) lift_vars.push_back(v);
  const size_t nv = lift_vars.size();

  std::vector<int> cand;
  for (size_t i = 0; i < sys.eqs.size(); ++i)
    if (sys.eqs[i].provenance == "coefficient-match" || sys.eqs[i].provenance == "ASD")
      cand.push_back((int)i);

  // full seed point over F_q
  std::vector<FqElem> seed_full(sys.nvars(), FqElem{});
  for (size_t i = 0; i < scan.size(); ++i) seed_full[scan[i]] = seed_scan_values[i];
  FqAdapter FA{&ctx};
  for (const auto& s : sys.gauge_subs) seed_full[s.var] = s.value.eval(FA, seed_full);
  for (const auto& [v, vinv] : sys.inverse_pairs) seed_full[vinv] = ctx.inv(seed_full[v]);

  // greedy selection of equations whose gradients are independent mod p
  std::vector<int> sel;
  std::vector<std::vector<MPoly>> sel_jac;
  std::vector<std::vector<FqElem>> basis;
  std::vector<int> pivot_col;
  for (size_t ci = 0; ci < cand.size() && sel.size() < nv; ++ci) {
    std::vector<MPoly> grads;
    grads.reserve(nv);
    for (int v : lift_vars) grads.push_back(sys.eqs[cand[ci]].poly.derivative(v));
    std::vector<FqElem> row(nv);
    for (size_t j = 0; j < nv; ++j) row[j] = grads[j].eval(FA, seed_full);
    std::vector<FqElem> red = row;
    for (size_t b = 0; b < basis.size(); ++b) {
      FqElem f = red[pivot_col[b]];
      if (ctx.is_zero(f)) continue;
      for (size_t j = 0; j < nv; ++j) red[j] = ctx.sub(red[j], ctx.mul(f, basis[b][j]));
    }
    int pc = -1;
    for (size_t j = 0; j < nv; ++j)
      if (!ctx.is_zero(red[j])) { pc = (int)j; break; }
    if (pc < 0) continue;
    FqElem inv = ctx.inv(red[pc]);
    for (size_t j = 0; j < nv; ++j) red[j] = ctx.mul(red[j], inv);
    basis.push_back(red);
    pivot_col.push_back(pc);
    sel.push_back(cand[ci]);
    sel_jac.push_back(std::move(grads));
  }
  if (sel.size() < nv) {
    res.error = "no invertible square Jacobian subsystem mod p (rank " +
                std::to_string(sel.size()) + " of " + std::to_string(nv) + ")";
    return res;
  }
  res.selected_equations = sel;

  const int target = opt.target_precision;
  int prec = 1;
  {
    PadicRing R1 = PadicRing::lift_of(ctx, 1);
    res.values.assign(sys.nvars(), R1.zero());
    for (size_t i = 0; i < sys.nvars(); ++i) res.values[i] = R1.from_fq(ctx, seed_full[i]);
  }

  while (prec < target) {
    int next = std::min(2 * prec, target);
    PadicRing R = PadicRing::lift_of(ctx, next);
    RingAdapter RA{&R};
    std::vector<PadicElem> xv(sys.nvars(), R.zero());
    for (size_t i = 0; i < sys.nvars(); ++i)
      for (size_t j = 0; j < (size_t)R.k(); ++j) xv[i].c[j] = res.values[i].c[j];
    for (const auto& s : sys.gauge_subs) xv[s.var] = s.value.eval(RA, xv);
    for (const auto& [v, vinv] : sys.inverse_pairs) xv[vinv] = R.inv(xv[v]);

    std::vector<PadicElem> F(nv);
    for (size_t i = 0; i < nv; ++i) F[i] = sys.eqs[sel[i]].poly.eval(RA, xv);
    std::vector<std::vector<PadicElem>> J(nv, std::vector<PadicElem>(nv, R.zero()));
    for (size_t i = 0; i < nv; ++i)
      for (size_t j = 0; j < nv; ++j) J[i][j] = sel_jac[i][j].eval(RA, xv);
    std::vector<PadicElem> delta;
    if (!solve_linear(R, J, F, delta)) {
      res.ok = false;
      res.error = "Jacobian became singular during lifting";
      return res;
    }
    for (size_t j = 0; j < nv; ++j) xv[lift_vars[j]] = R.sub(xv[lift_vars[j]], delta[j]);
    for (const auto& s : sys.gauge_subs) xv[s.var] = s.value.eval(RA, xv);
    for (const auto& [v, vinv] : sys.inverse_pairs) xv[vinv] = R.inv(xv[v]);
    res.values = std::move(xv);
    prec = next;
  }

  PadicRing R = PadicRing::lift_of(ctx, prec);
  RingAdapter RA{&R};
  for (size_t i = 0; i < sys.eqs.size(); ++i) {
    PadicElem r = sys.eqs[i].poly.eval(RA, res.values);
    if (!R.is_zero(r)) res.nonzero_residuals.push_back((int)i);
  }
  res.precision = prec;
  res.ok = true;
  return res;
}

}  // namespace belyi
