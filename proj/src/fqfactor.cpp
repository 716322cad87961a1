#include "belyi/fqfactor.hpp"

#include <algorithm>
#include <stdexcept>

namespace belyi {

namespace {

// deterministic splitting elements: xorshift stream seeded from the field
// and the polynomial being split
struct DetRng {
  uint64_t s;
  explicit DetRng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

uint64_t poly_fingerprint(const FqPoly& f) {
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&](uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(f.ctx().p());
  mix((uint64_t)f.ctx().k());
  for (int i = 0; i <= f.degree(); ++i)
    for (int j = 0; j < f.ctx().k(); ++j) mix(f.coeff(i).c[j]);
  return h;
}

FqPoly random_poly_below(const FqContext& ctx, int deg_bound, DetRng& rng) {
  std::vector<FqElem> c(deg_bound);
  for (auto& e : c) e = ctx.from_index(rng.next() % ctx.size_u64());
  return FqPoly(ctx, std::move(c));
}

// trace map over F_2-like splitting for even characteristic:
// T(a) = a + a^q + a^{q^2} + ... + a^{q^{d-1}} computed mod f
FqPoly trace_map(const FqPoly& a, int d, const mpz_class& q, const FqPoly& f) {
  FqPoly acc = a % f;
  FqPoly cur = a % f;
  for (int i = 1; i < d; ++i) {
    cur = powmod(cur, q, f);
    acc = (acc + cur) % f;
  }
  return acc;
}

// split a squarefree product of irreducibles all of degree d
void equal_degree_split(const FqPoly& f, int d, std::vector<FqPoly>& out) {
  const FqContext& ctx = f.ctx();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  DetRng rng(poly_fingerprint(f) ^ (uint64_t)d * 0x2545F4914F6CDD1DULL);
  mpz_class q = ctx.q();
  for (int attempt = 0;; ++attempt) {
    if (attempt > 256) throw std::logic_error("equal-degree splitting failed to converge");
    FqPoly a = random_poly_below(ctx, f.degree(), rng);
    if (a.degree() < 1) continue;
    FqPoly g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, out);
      equal_degree_split(f / g, d, out);
      return;
    }
    FqPoly h;
    if (ctx.p() == 2) {
      h = trace_map(a, d * ctx.k(), mpz_class(2), f);
    } else {
      mpz_class e;
      mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), d);
      e = (e - 1) / 2;
      h = powmod(a, e, f) - FqPoly::constant(ctx, ctx.one());
    }
    g = gcd(h, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, out);
      equal_degree_split(f / g, d, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FqPoly, int>> squarefree_decomposition_fq(const FqPoly& f_in) {
  if (f_in.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  const FqContext& ctx = f_in.ctx();
  const uint64_t p = ctx.p();
  std::vector<std::pair<FqPoly, int>> out;
  FqPoly f = f_in.monic();
  if (f.degree() == 0) return out;

  // Yun-style loop; when the derivative vanishes f is a p-th power and we
  // recurse on its p-th root with multiplicities scaled by p.
  std::function<void(FqPoly, int)> rec = [&](FqPoly g, int scale) {
    FqPoly der = g.derivative();
    if (der.is_zero()) {
      // g = h(x^p): take p-th root coefficient-wise (a -> a^{q/p} inverts
      // Frobenius on the coefficients)
      std::vector<FqElem> hc;
      mpz_class e = ctx.q() / (long)p;
      for (int i = 0; i <= g.degree(); i += (int)p)
        hc.push_back(ctx.pow(g.coeff(i), e));
      rec(FqPoly(ctx, std::move(hc)), scale * (int)p);
      return;
    }
    FqPoly c = gcd(g, der);
    FqPoly w = g / c;
    int i = 1;
    while (w.degree() > 0) {
      FqPoly y = gcd(w, c);
      FqPoly part = w / y;
      if (part.degree() > 0) out.emplace_back(part.monic(), i * scale);
      w = y;
      c = c / y;
      ++i;
    }
    if (c.degree() > 0) rec(c, scale * 1);  // leftover p-th power part
  };
  // note: in the loop above, once w exhausts, c holds the p-th-power part
  rec(f, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second < b.second;
  });
  return out;
}

bool is_squarefree_fq(const FqPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  FqPoly der = f.derivative();
  if (der.is_zero()) return false;
  return gcd(f, der).degree() == 0;
}

std::vector<std::pair<FqPoly, int>> factor_fq(const FqPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factorization of the zero polynomial");
  const FqContext& ctx = f.ctx();
  std::vector<std::pair<FqPoly, int>> result;
  if (f.degree() == 0) return result;

  for (const auto& [sqfree, mult] : squarefree_decomposition_fq(f)) {
    // distinct-degree split of the squarefree part
    FqPoly rest = sqfree;
    FqPoly x = FqPoly::x(ctx);
    FqPoly xq = x % rest;
    mpz_class q = ctx.q();
    for (int d = 1; rest.degree() >= 1 && d <= rest.degree(); ++d) {
      if (2 * d > rest.degree()) {
        // remainder is irreducible
        result.emplace_back(rest.monic(), mult);
        rest = FqPoly::constant(ctx, ctx.one());
        break;
      }
      xq = powmod(xq, q, rest);
      FqPoly g = gcd(xq - x, rest);
      if (g.degree() > 0) {
        std::vector<FqPoly> pieces;
        equal_degree_split(g, d, pieces);
        for (auto& piece : pieces) result.emplace_back(piece, mult);
        rest = rest / g;
        xq = xq % rest;
      }
    }
    if (rest.degree() >= 1) result.emplace_back(rest.monic(), mult);
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (int i = a.first.degree(); i >= 0; --i) {
      if (a.first.coeff(i) == b.first.coeff(i)) continue;
      return a.first.coeff(i) < b.first.coeff(i);
    }
    return a.second < b.second;
  });
  return result;
}

std::vector<int> factor_degrees(const FqPoly& f) {
  std::vector<int> degs;
  for (const auto& [g, mult] : factor_fq(f))
    for (int i = 0; i < mult; ++i) degs.push_back(g.degree());
  std::sort(degs.begin(), degs.end(), std::greater<int>());
  return degs;
}

}  // namespace belyi
