#include "belyi/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "belyi/reconstruct.hpp"
#include "belyi/verify.hpp"

namespace belyi {

std::vector<long> good_primes(const mpz_class& group_order, int count) {
  if (group_order < 1) throw std::invalid_argument("group order must be positive");
  std::vector<long> out;
  for (long p = 2; (int)out.size() < count; ++p) {
    bool isp = p >= 2;
    for (long q = 2; q * q <= p; ++q)
      if (p % q == 0) { isp = false; break; }
    if (!isp) continue;
    if (group_order % p == 0) continue;
    out.push_back(p);
  }
  return out;
}

namespace {

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

// one eliminated variable: equation linear in var with either a statically
// invertible coefficient or a constant nonzero remainder term
struct ChainEntry {
  int eq = -1;
  int var = -1;
  MPoly coeff;          // L in L*var + M = 0
  MPoly rest;           // M
  bool runtime_checked = false;  // L may vanish; then M != 0 rejects the point
};

struct SearchPlanData {
  std::vector<int> loop_vars;
  std::vector<ChainEntry> chain;
  std::vector<int> check_eqs;       // remaining equations
  std::vector<char> loop_nonzero;   // parallel to loop_vars
};

// a coefficient is statically a unit if it is a nonzero constant times a
// monomial in nonvanishing variables
bool static_unit(const PolynomialSystem& sys, const MPoly& L) {
  if (L.is_zero()) return false;
  if (L.terms().size() != 1) return false;
  const auto& [e, c] = *L.terms().begin();
  for (size_t v = 0; v < sys.nvars(); ++v)
    if (e[v] > 0 && !sys.vars[v].nonvanishing) return false;
  return c != 0;
}

SearchPlanData plan_search(const PolynomialSystem& sys, const FqContext& ctx) {
  SearchPlanData plan;
  const auto scan = sys.scan_variables();
  std::set<int> remaining(scan.begin(), scan.end());
  std::set<int> pinned;  // variables an eliminator depends on
  std::vector<char> eq_used(sys.eqs.size(), 0);
  const long p = (long)ctx.p();

  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t ei = 0; ei < sys.eqs.size(); ++ei) {
      if (eq_used[ei]) continue;
      const auto& eq = sys.eqs[ei];
      if (eq.provenance != "coefficient-match" && eq.provenance != "ASD") continue;
      // candidate variables: linear, not pinned, still remaining
      int best_var = -1;
      MPoly bestL, bestM;
      bool best_runtime = false;
      for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) {
        int v = *it;
        if (pinned.count(v)) continue;
        if (eq.poly.degree_in(v) != 1) continue;
        MPoly L, M;
        eq.poly.linear_split(v, L, M);
        bool su = static_unit(sys, L);
        if (su) {
          // the constant must be a unit mod p
          mpz_class c = L.terms().begin()->second % p;
          if (c == 0) su = false;
        }
        bool runtime_ok = false;
        if (!su) {
          // safe only when M is a nonzero constant mod p (L=0 then rejects)
          if (M.is_constant() && !M.is_zero()) {
            mpz_class c = M.constant_value() % p;
            runtime_ok = (c != 0);
          }
        }
        if (su || runtime_ok) {
          best_var = v;
          bestL = L;
          bestM = M;
          best_runtime = !su;
          break;  // highest-index candidate first
        }
      }
      if (best_var < 0) continue;
      ChainEntry ce;
      ce.eq = (int)ei;
      ce.var = best_var;
      ce.coeff = bestL;
      ce.rest = bestM;
      ce.runtime_checked = best_runtime;
      plan.chain.push_back(ce);
      eq_used[ei] = 1;
      remaining.erase(best_var);
      // other variables of this equation must stay loop variables
      for (int v : scan)
        if (v != best_var && sys.eqs[ei].poly.involves(v)) pinned.insert(v);
      progress = true;
    }
  }
  for (int v : scan)
    if (remaining.count(v)) plan.loop_vars.push_back(v);
  for (size_t ei = 0; ei < sys.eqs.size(); ++ei) {
    if (eq_used[ei]) continue;
    if (sys.eqs[ei].provenance == "nondegeneracy" || sys.eqs[ei].provenance == "gauge")
      continue;  // handled via inverse pairs / substitutions
    plan.check_eqs.push_back((int)ei);
  }
  plan.loop_nonzero.assign(plan.loop_vars.size(), 0);
  for (size_t i = 0; i < plan.loop_vars.size(); ++i)
    if (sys.vars[plan.loop_vars[i]].nonvanishing) plan.loop_nonzero[i] = 1;
  return plan;
}

}  // namespace

mpz_class search_loop_size(const PolynomialSystem& sys, const FqContext& ctx) {
  auto plan = plan_search(sys, ctx);
  mpz_class q = ctx.q();
  mpz_class total = 1;
  for (size_t i = 0; i < plan.loop_vars.size(); ++i) total *= q;
  return total;
}

std::vector<std::vector<FqElem>> search_fq(const PolynomialSystem& sys, const FqContext& ctx,
                                           const SearchOptions& opt) {
  auto plan = plan_search(sys, ctx);
  const uint64_t q = ctx.size_u64();
  const size_t L = plan.loop_vars.size();

  mpz_class space = 1;
  for (size_t i = 0; i < L; ++i) space *= (long)q;
  if (space > mpz_class((unsigned long)opt.scan_budget))
    throw std::runtime_error("search budget exceeded; loop space has " + space.get_str() +
                             " points");

  FqAdapter FA{&ctx};
  const auto run_range = [&](uint64_t lo, uint64_t hi, std::vector<std::vector<FqElem>>& out) {
    std::vector<FqElem> point(sys.nvars(), FqElem{});
    std::vector<uint64_t> idx(L, 0);
    for (uint64_t outer = lo; outer < hi; ++outer) {
      // mixed-radix decode: outer fills the first loop variable, rest scan
      uint64_t rem = outer;
      for (size_t i = 0; i < L; ++i) {
        idx[i] = (i == 0) ? rem : 0;
      }
      if (L > 0) {
        idx[0] = outer;
      }
      // inner loop over remaining variables
      std::vector<uint64_t> inner(L > 0 ? L - 1 : 0, 0);
      bool done = false;
      while (!done) {
        // fill point
        bool skip = false;
        for (size_t i = 0; i < L; ++i) {
          uint64_t v = (i == 0) ? idx[0] : inner[i - 1];
          point[plan.loop_vars[i]] = ctx.from_index(v);
          if (plan.loop_nonzero[i] && v == 0) skip = true;
        }
        if (!skip) {
          bool reject = false;
          // evaluate elimination chain
          for (const auto& ce : plan.chain) {
            FqElem Lv = ce.coeff.eval(FA, point);
            FqElem Mv = ce.rest.eval(FA, point);
            if (ctx.is_zero(Lv)) {
              reject = true;  // rest is a nonzero constant, or unit broke
              break;
            }
            point[ce.var] = ctx.neg(ctx.mul(Mv, ctx.inv(Lv)));
            if (sys.vars[ce.var].nonvanishing && ctx.is_zero(point[ce.var])) {
              reject = true;
              break;
            }
          }
          if (!reject) {
            for (int ei : plan.check_eqs) {
              if (!ctx.is_zero(sys.eqs[ei].poly.eval(FA, point))) {
                reject = true;
                break;
              }
            }
          }
          if (!reject) {
            // derived variables
            for (const auto& s : sys.gauge_subs) point[s.var] = s.value.eval(FA, point);
            bool ok = true;
            for (const auto& [v, vinv] : sys.inverse_pairs) {
              if (ctx.is_zero(point[v])) { ok = false; break; }
              point[vinv] = ctx.inv(point[v]);
            }
            // nondegeneracy for non-variable markers (strict mode)
            if (ok) {
              for (size_t ei = 0; ei < sys.eqs.size(); ++ei) {
                if (sys.eqs[ei].provenance != "nondegeneracy") continue;
                bool is_pair = false;
                for (const auto& [v, vinv] : sys.inverse_pairs) {
                  MPoly probe = MPoly::variable((int)sys.nvars(), v) *
                                    MPoly::variable((int)sys.nvars(), vinv) -
                                MPoly::constant((int)sys.nvars(), 1);
                  if (sys.eqs[ei].poly == probe) is_pair = true;
                }
                if (is_pair) continue;
                // strict marker m * aux = 1: needs m != 0; solve aux
                // the marker equation has the aux variable linear
                for (size_t v = 0; v < sys.nvars(); ++v) {
                  if (sys.vars[v].role != "aux-inverse") continue;
                  if (sys.eqs[ei].poly.degree_in((int)v) != 1) continue;
                  MPoly Lm, Mm;
                  sys.eqs[ei].poly.linear_split((int)v, Lm, Mm);
                  FqElem Lv = Lm.eval(FA, point);
                  if (ctx.is_zero(Lv)) { ok = false; break; }
                  point[v] = ctx.neg(ctx.mul(Mm.eval(FA, point), ctx.inv(Lv)));
                }
                if (!ok) break;
              }
            }
            if (ok) out.push_back(point);
          }
        }
        // advance inner counters
        if (L <= 1) break;
        size_t d = 0;
        while (d < inner.size()) {
          if (++inner[d] < q) break;
          inner[d] = 0;
          ++d;
        }
        if (d == inner.size()) done = true;
      }
      if (L == 0) break;
    }
  };

  std::vector<std::vector<FqElem>> solutions;
  const uint64_t outer_n = (L == 0) ? 1 : q;
  int threads = std::max(1, opt.threads);
  if (threads == 1 || outer_n < 2) {
    run_range(0, outer_n, solutions);
  } else {
    threads = std::min<int>(threads, (int)outer_n);
    std::vector<std::vector<std::vector<FqElem>>> parts(threads);
    std::vector<std::thread> ts;
    for (int i = 0; i < threads; ++i) {
      uint64_t lo = outer_n * i / threads, hi = outer_n * (i + 1) / threads;
      ts.emplace_back([&, i, lo, hi] { run_range(lo, hi, parts[i]); });
    }
    for (auto& th : ts) th.join();
    for (auto& part : parts)
      for (auto& sol : part) solutions.push_back(std::move(sol));
  }
  return solutions;
}

namespace {

// scaling weight of each variable under t -> u t
std::vector<int> variable_weights(const PolynomialSystem& sys) {
  std::vector<int> w(sys.nvars(), 0);
  w[sys.c_var] = sys.inf_pole;
  for (const auto& f : sys.factors)
    for (int i = 0; i < f.degree; ++i) w[f.var_base + i] = f.degree - i;
  return w;
}

// choose the slice variable for a seed-sliced system: a seed-nonzero scan
// variable whose weight equals the gcd of all seed-nonzero weights
int choose_slice_var(const PolynomialSystem& sys, const FqContext& ctx,
                     const std::vector<FqElem>& full_point) {
  auto w = variable_weights(sys);
  int g = 0;
  for (int v : sys.scan_variables())
    if (!ctx.is_zero(full_point[v]) && w[v] > 0) g = std::gcd(g, w[v]);
  if (g == 0) return -1;
  std::vector<int> scan = sys.scan_variables();
  std::sort(scan.begin(), scan.end(), [&](int a, int b) { return w[a] < w[b]; });
  for (int v : scan)
    if (!ctx.is_zero(full_point[v]) && w[v] == g) return v;
  return -1;
}

struct ReconstructedModel {
  BelyiMapModel model;
  std::string key;
};

// Try to express all coordinates over Q or over one number field generated
// by some coordinate; returns the model coefficients as field elements.
std::optional<std::vector<NFElem>> recognize_coordinates(
    const std::vector<PadicElem>& values, const PadicRing& R, int max_degree,
    FieldPtr& field_out, PadicElem& theta_out) {
  const size_t n = values.size();
  std::vector<NFElem> out;

  // all-rational attempt (only meaningful for prime-field lifts or values
  // with vanishing extension component)
  bool maybe_rational = true;
  for (const auto& v : values)
    if (R.k() == 2 && v.c[1] != 0) maybe_rational = false;
  if (maybe_rational) {
    FieldPtr Q = NumberField::rationals();
    std::vector<NFElem> rat;
    bool ok = true;
    for (const auto& v : values) {
      auto r = rational_reconstruct(v.c[0], R.pN());
      if (!r) { ok = false; break; }
      rat.push_back(NFElem::from_rational(Q, *r));
    }
    if (ok) {
      field_out = Q;
      theta_out = R.zero();
      return rat;
    }
  }

  // algebraic generator: the coordinate with the largest minimal polynomial
  std::optional<AlgebraicCandidate> best;
  size_t best_idx = 0;
  for (size_t i = 0; i < n; ++i) {
    auto cand = algebraic_reconstruct(values[i], R, max_degree);
    if (!cand) continue;
    if (!best || cand->degree() > best->degree()) {
      best = cand;
      best_idx = i;
    }
  }
  if (!best || best->degree() < 2) return std::nullopt;

  FieldPtr K;
  try {
    K = NumberField::create(best->minpoly);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  const PadicElem& theta = values[best_idx];
  for (size_t i = 0; i < n; ++i) {
    auto coords = express_in_power_basis(values[i], theta, K->degree(), R);
    if (!coords) return std::nullopt;
    out.emplace_back(K, *coords);
  }
  field_out = K;
  theta_out = theta;
  return out;
}

// assemble the model from per-variable field elements
std::optional<BelyiMapModel> assemble_model(const PolynomialSystem& sys,
                                            const std::vector<NFElem>& vals,
                                            const FieldPtr& K) {
  auto poly_of_fiber = [&](int fiber, bool with_c) -> NFPoly {
    NFPoly prod = NFPoly::from_qpoly(K, QPoly::constant(1));
    for (const auto& f : sys.factors) {
      if (f.fiber != fiber) continue;
      std::vector<NFElem> c;
      for (int i = 0; i < f.degree; ++i) c.push_back(vals[f.var_base + i]);
      c.push_back(NFElem::from_rational(K, 1));
      NFPoly fp(K, c);
      for (int m = 0; m < f.multiplicity; ++m) prod = prod * fp;
    }
    for (const auto& l : sys.literals) {
      if (l.fiber != fiber) continue;
      NFPoly lp(K, {NFElem::from_rational(K, mpq_class(-l.root)), NFElem::from_rational(K, 1)});
      for (int m = 0; m < l.multiplicity; ++m) prod = prod * lp;
    }
    if (with_c) prod = prod.scaled(vals[sys.c_var]);
    return prod;
  };
  NFPoly num = poly_of_fiber(0, true);
  NFPoly den = poly_of_fiber(2, false);
  try {
    return BelyiMapModel::make(K, num, den, sys.c0, sys.c1, sys.cInf);
  } catch (const std::invalid_argument&) {
    return std::nullopt;  // parasitic: shared factors or degree collapse
  }
}

}  // namespace

SolveReport solve_passport(const CycleType& c0, const CycleType& c1, const CycleType& cInf,
                           const SolveOptions& opt) {
  SolveReport rep;
  rep.c0 = c0;
  rep.c1 = c1;
  rep.cInf = cInf;

  // combinatorial stage: passport size bounds the field degree and gives the
  // completeness certificate
  auto enum_res = triples_with_classes(c0, c1, cInf, opt.enum_options);
  rep.passport_transitive = enum_res.transitive_count();
  if (rep.passport_transitive == 0) {
    rep.unresolved.push_back("no transitive triples with these classes");
    rep.complete = true;
    return rep;
  }
  rep.field_degree_bound = rep.passport_transitive;

  mpz_class max_group_order = 1;
  for (size_t i = 0; i < enum_res.representatives.size(); ++i)
    if (enum_res.transitive_flags[i] && enum_res.group_orders[i] > max_group_order)
      max_group_order = enum_res.group_orders[i];

  NormalizationPlan plan =
      opt.plan ? *opt.plan : NormalizationPlan::default_for(c0, c1, cInf);
  auto build = build_system(c0, c1, cInf, plan);
  std::vector<PolynomialSystem> cases;
  for (auto& cs : build.cases) {
    PolynomialSystem s = close_nondegenerate(cs, opt.strict);
    if (opt.use_asd) s = asd_augment(s);
    cases.push_back(std::move(s));
  }

  // lcm-ish: use the largest group order among transitive candidates to pick
  // primes that are good for every possible monodromy group in the passport
  mpz_class order_lcm = 1;
  for (size_t i = 0; i < enum_res.representatives.size(); ++i)
    if (enum_res.transitive_flags[i])
      mpz_lcm(order_lcm.get_mpz_t(), order_lcm.get_mpz_t(),
              enum_res.group_orders[i].get_mpz_t());
  std::vector<long> primes =
      opt.primes.empty() ? good_primes(order_lcm, opt.prime_count) : opt.primes;

  std::set<std::string> seen_keys;

  for (long p : primes) {
    if ((long)rep.models.size() >= rep.passport_transitive) break;
    for (int k = 1; k <= 2; ++k) {
      if ((long)rep.models.size() >= rep.passport_transitive) break;
      double qsize = std::pow((double)p, k);
      if (qsize > (double)opt.max_q) continue;
      FqContext ctx = FqContext::make((uint64_t)p, k);
      // precision target from the cap (decimal digits -> p-adic digits)
      int targetN = std::max(8, (int)(opt.max_digits * std::log(10.0) / std::log((double)p)));

      for (const auto& sys : cases) {
        PrimeTrailEntry trail;
        trail.p = p;
        trail.ext_degree = k;
        trail.case_label = sys.case_label;
        std::vector<std::vector<FqElem>> seeds;
        try {
          SearchOptions so;
          so.scan_budget = opt.scan_budget;
          so.threads = opt.threads;
          so.use_mitm = opt.use_mitm;
          seeds = search_fq(sys, ctx, so);
        } catch (const std::runtime_error& e) {
          trail.notes.push_back(e.what());
          rep.trail.push_back(trail);
          continue;
        }
        trail.seeds = (long)seeds.size();

        for (const auto& seed_full : seeds) {
          if ((long)rep.models.size() >= rep.passport_transitive) break;
          std::vector<FqElem> seed_scan;
          for (int v : sys.scan_variables()) seed_scan.push_back(seed_full[v]);

          NewtonOptions nopt;
          nopt.slice_var = sys.seed_sliced ? choose_slice_var(sys, ctx, seed_full) : -1;

          // precision ladder: stop once the recognized model repeats
          std::vector<int> ladder;
          for (int N = 16;; N = std::min(2 * N, targetN)) {
            ladder.push_back(N);
            if (N >= targetN) break;
          }
          std::optional<std::string> last_key;
          std::optional<BelyiMapModel> accepted;
          for (int N : ladder) {
            nopt.target_precision = N;
            NewtonResult nr = multinewton_lift(sys, ctx, seed_scan, nopt);
            if (!nr.ok) {
              trail.notes.push_back("lift failed: " + nr.error);
              break;
            }
            if (!nr.nonzero_residuals.empty()) {
              trail.notes.push_back("residuals nonzero on " +
                                    std::to_string(nr.nonzero_residuals.size()) +
                                    " equations (parasitic branch)");
              break;
            }
            PadicRing R = PadicRing::lift_of(ctx, N);
            FieldPtr K;
            PadicElem theta = R.zero();
            auto coords =
                recognize_coordinates(nr.values, R, (int)rep.field_degree_bound, K, theta);
            if (!coords) {
              if (N == targetN) trail.notes.push_back("reconstruction did not stabilize");
              continue;
            }
            auto model = assemble_model(sys, *coords, K);
            if (!model) {
              trail.notes.push_back("degenerate model (parasitic seed)");
              break;
            }
            std::string key = model_key(*model);
            if (last_key && *last_key == key) {
              accepted = model;
              break;
            }
            last_key = key;
          }
          if (!accepted) continue;

          auto check = is_belyi(*accepted);
          if (!check.ok || !check.classes_match) {
            trail.notes.push_back("verification rejected a lifted model (" +
                                  (check.ok ? std::string("classes mismatch") : check.reason) +
                                  ")");
            continue;
          }
          ++trail.lifted;

          // Conjugate seeds recognize to identical coefficient tuples over
          // the abstract field; a repeated tuple therefore stands for the
          // other embedding.  Quadratic fields can present it internally.
          std::vector<BelyiMapModel> candidates = {*accepted};
          if (accepted->field->degree() == 2) {
            auto roots = field_roots_in_field(accepted->field);
            if (roots.size() == 2) candidates.push_back(accepted->map_generator(roots[1]));
          }
          bool placed = false;
          for (const auto& cand : candidates) {
            std::string key = model_key(cand);
            if (seen_keys.count(key)) continue;
            bool gauge_dup = false;
            for (const auto& m : rep.models)
              if (gauge_equivalent(m, cand)) { gauge_dup = true; break; }
            seen_keys.insert(key);
            if (gauge_dup) continue;
            rep.models.push_back(cand);
            placed = true;
            break;
          }
          if (!placed && accepted->field->degree() > 2)
            trail.notes.push_back(
                "repeated tuple over a degree-" + std::to_string(accepted->field->degree()) +
                " field: further Galois-conjugate embeddings are not listed separately");
        }
        rep.trail.push_back(trail);
      }
    }
  }
  rep.complete = ((long)rep.models.size() == rep.passport_transitive);
  if (!rep.complete)
    rep.unresolved.push_back("found " + std::to_string(rep.models.size()) + " of " +
                             std::to_string(rep.passport_transitive) +
                             " transitive classes; remaining dessins may require other "
                             "normalizations or larger fields");
  return rep;
}

}  // namespace belyi
