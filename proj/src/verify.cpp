#include "belyi/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "belyi/fq.hpp"
#include "belyi/fqfactor.hpp"

namespace belyi {

namespace {

// multiplicity profile of a polynomial from its squarefree decomposition,
// plus an optional part at infinity
std::vector<int> profile_of(const NFPoly& f, int at_infinity) {
  std::vector<int> parts;
  for (const auto& [g, mult] : squarefree_decomposition(f))
    for (int i = 0; i < g.degree(); ++i) parts.push_back(mult);
  if (at_infinity > 0) parts.push_back(at_infinity);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return parts;
}

}  // namespace

IsBelyiResult is_belyi(const BelyiMapModel& m) {
  IsBelyiResult res;
  const int dn = m.num.degree(), dd = m.den.degree();
  const int d = std::max(dn, dd);
  if (d < 1) {
    res.reason = "constant map";
    return res;
  }
  if (gcd(m.num, m.den).degree() > 0) {
    res.reason = "numerator and denominator share a factor";
    return res;
  }

  // fiber over 0: zeros of num (+ infinity when deg num < deg den)
  std::vector<int> p0 = profile_of(m.num, dn < dd ? dd - dn : 0);
  // fiber over infinity: zeros of den (+ infinity when deg num > deg den)
  std::vector<int> pinf = profile_of(m.den, dn > dd ? dn - dd : 0);
  // fiber over 1: zeros of num - den (+ infinity on degree drop when dn == dd)
  NFPoly diff = m.num - m.den;
  int drop = 0;
  if (dn == dd) {
    int dg = diff.is_zero() ? -1 : diff.degree();
    if (dg < 0) {
      res.reason = "map is identically 1";
      return res;
    }
    drop = d - dg;
  }
  std::vector<int> p1 = profile_of(diff, drop);

  auto sum = [](const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
  };
  if (sum(p0) != d || sum(p1) != d || sum(pinf) != d) {
    res.reason = "fiber profiles do not cover the degree (genus bookkeeping failed)";
    return res;
  }
  res.over0 = CycleType(p0);
  res.over1 = CycleType(p1);
  res.overInf = CycleType(pinf);

  const int excess_sum = res.over0.excess() + res.over1.excess() + res.overInf.excess();
  if (excess_sum != 2 * d - 2) {
    res.reason = "critical values outside {0,1,oo}: excess sum " +
                 std::to_string(excess_sum) + " != " + std::to_string(2 * d - 2);
    return res;
  }
  res.ok = true;
  res.classes_match = (res.over0 == m.c0 && res.over1 == m.c1 && res.overInf == m.cInf);
  return res;
}

namespace {

struct Residue {
  FqContext ctx;
  FqElem theta_image;
};

// residue field of a prime above p, degree-1 preferred
std::optional<Residue> residue_above(const FieldPtr& K, long p) {
  FqContext fp = FqContext::prime_field((uint64_t)p);
  if (K->is_rationals()) return Residue{fp, fp.zero()};
  const ZPoly& mz = K->minpoly_z();
  if (mz.c.back() % p == 0) return std::nullopt;  // p divides the leading coefficient
  FqPoly mp = FqPoly::from_integers(fp, mz.c);
  if (!is_squarefree_fq(mp)) return std::nullopt;  // ramified
  auto facs = factor_fq(mp.monic());
  // smallest-degree factor first (factor_fq sorts by degree)
  const FqPoly& g = facs.front().first;
  if (g.degree() == 1) {
    // theta -> -g0
    FqElem root = fp.neg(g.coeff(0));
    return Residue{fp, root};
  }
  if (g.degree() > kFqMaxExt) return std::nullopt;
  FqContext big = FqContext::make((uint64_t)p, g.degree());
  // find a root of g inside the big field by refactoring over it
  std::vector<FqElem> lifted;
  for (int i = 0; i <= g.degree(); ++i) lifted.push_back(big.from_int((long)g.coeff_int(i)));
  FqPoly gbig(big, lifted);
  for (const auto& [lin, mult] : factor_fq(gbig)) {
    if (lin.degree() == 1) return Residue{big, big.neg(lin.coeff(0))};
  }
  return std::nullopt;
}

std::optional<FqPoly> reduce_poly(const NFPoly& f, const Residue& rsd, long p) {
  std::vector<FqElem> out;
  const FqContext& ctx = rsd.ctx;
  for (int i = 0; i <= f.degree(); ++i) {
    FqElem acc = ctx.zero();
    FqElem pw = ctx.one();
    for (const mpq_class& q : f.coeff(i).coords()) {
      if (q.get_den() % p == 0) return std::nullopt;  // p divides a denominator
      mpz_class num = q.get_num() % p, den = q.get_den() % p;
      if (num < 0) num += p;
      FqElem val = ctx.mul(ctx.from_int(num.get_si()), ctx.inv(ctx.from_int(den.get_si())));
      acc = ctx.add(acc, ctx.mul(val, pw));
      pw = ctx.mul(pw, rsd.theta_image);
    }
    out.push_back(acc);
  }
  return FqPoly(ctx, std::move(out));
}

}  // namespace

CycleType cycle_type_sample(const BelyiMapModel& m, long p, long c_value) {
  auto rsd = residue_above(m.field, p);
  if (!rsd) throw SampleError("prime " + std::to_string(p) + " unusable (ramified or divides data)");
  auto numr = reduce_poly(m.num, *rsd, p);
  auto denr = reduce_poly(m.den, *rsd, p);
  if (!numr || !denr) throw SampleError("prime divides a coefficient denominator");
  const FqContext& ctx = rsd->ctx;
  const int d = m.degree();
  if (numr->degree() != m.num.degree() || denr->degree() != m.den.degree())
    throw SampleError("degree drop modulo the prime (bad reduction)");
  if (gcd(*numr, *denr).degree() > 0) throw SampleError("numerator and denominator collide mod p");
  FqElem c = ctx.from_int(c_value);
  if (ctx.is_zero(c) || c == ctx.one()) throw SampleError("value must avoid 0 and 1");
  FqPoly g = *numr - denr->scaled(c);
  if (g.degree() != d) throw SampleError("sample value meets the fiber at infinity");
  if (!is_squarefree_fq(g)) throw SampleError("sample value hits a branch residue");
  return CycleType(factor_degrees(g));
}

MonodromyReport monodromy_consistent(const BelyiMapModel& m, const PermutationTriple& t,
                                     int trials, uint64_t seed) {
  auto belyi = is_belyi(m);
  if (!belyi.ok) throw std::invalid_argument("monodromy check on a non-Belyi model");
  auto pass = passport_of(t);
  if (!(belyi.over0 == pass.c0 && belyi.over1 == pass.c1 && belyi.overInf == pass.cInf))
    throw std::invalid_argument("model classes do not match the triple's passport");

  // enumerate the group generated by sigma0, sigma1 and collect the cycle
  // types with their densities
  std::set<Permutation> group;
  std::vector<Permutation> frontier = {Permutation(t.degree())};
  group.insert(frontier[0]);
  const std::vector<Permutation> gens = {t.s0(), t.s1()};
  while (!frontier.empty()) {
    if (group.size() > 2000000) throw std::invalid_argument("group too large to enumerate");
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Permutation h = g * s;
        if (group.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  std::map<CycleType, long> tally;
  for (const auto& g : group) tally[cycle_type(g)]++;

  MonodromyReport rep;
  std::map<CycleType, long> observed;
  const mpz_class group_ord = mpz_class((unsigned long)group.size());

  // usable primes: good reduction, coprime to the group order
  std::vector<long> primes;
  for (long p = 3; p < 5000 && (int)primes.size() < 6; ++p) {
    bool isp = p >= 2;
    for (long q = 2; q * q <= p; ++q)
      if (p % q == 0) isp = false;
    if (!isp) continue;
    if (group_ord % p == 0) continue;
    if (!residue_above(m.field, p)) continue;
    primes.push_back(p);
  }
  if ((int)primes.size() < 3) throw std::invalid_argument("insufficient usable primes");

  long taken = 0;
  std::map<long, long> counters;  // deterministic per-prime value counters
  for (long p : primes) counters[p] = (long)(seed % 1000003);
  long stall = 0;
  for (size_t pi = 0; taken < trials; pi = (pi + 1) % primes.size()) {
    if (++stall > 64L * trials + 1024)
      throw std::invalid_argument("unable to draw enough usable samples");
    long p = primes[pi];
    long& ctr = counters[p];
    CycleType sample({1});
    bool got = false;
    for (int att = 0; att < 2 * (int)p && !got; ++att) {
      long c = 2 + (ctr % (p - 2));  // walks 2..p-1
      ++ctr;
      try {
        sample = cycle_type_sample(m, p, c);
        got = true;
      } catch (const SampleError&) {
        continue;
      }
    }
    if (!got) continue;  // this prime is exhausted; move on
    ++taken;
    observed[sample]++;
    if (tally.find(sample) == tally.end()) {
      rep.verdict = Verdict::Inconsistent;
      rep.witness = "sampled type " + sample.to_string() + " not realized in the group";
      rep.samples_taken = taken;
      rep.primes_used = primes;
      return rep;
    }
  }

  for (const auto& [ct, cnt] : tally) {
    if (10 * cnt >= (long)group.size() && observed.find(ct) == observed.end()) {
      rep.verdict = Verdict::Inconsistent;
      rep.witness = "class " + ct.to_string() + " of density >= 0.1 never observed";
      rep.samples_taken = taken;
      rep.primes_used = primes;
      return rep;
    }
  }
  rep.verdict = Verdict::Consistent;
  rep.samples_taken = taken;
  rep.primes_used = primes;
  return rep;
}

}  // namespace belyi
