#include "belyi/eqsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace belyi {

namespace {

// factor letters per fiber, in construction order
const char* kFiber0Letters[] = {"a", "b", "g", "h", "m"};
const char* kFiber1Letters[] = {"d", "e", "k", "l", "n"};
const char* kFiber2Letters[] = {"u", "v", "w", "y", "z"};

const char** fiber_letters(int fiber) {
  switch (fiber) {
    case 0: return kFiber0Letters;
    case 1: return kFiber1Letters;
    default: return kFiber2Letters;
  }
}

std::optional<int> largest_unique_length(const CycleType& c) {
  for (int len : c.parts())  // parts are sorted decreasing
    if (c.multiplicity(len) == 1) return len;
  return std::nullopt;
}

}  // namespace

NormalizationPlan NormalizationPlan::default_for(const CycleType& c0, const CycleType& c1,
                                                 const CycleType& cInf) {
  NormalizationPlan plan;
  plan.at_infinity = {2, cInf.parts().front()};
  if (auto len = largest_unique_length(c0)) plan.at_zero = CycleAnchor{0, *len};
  if (auto len = largest_unique_length(c1)) plan.at_one = CycleAnchor{1, *len};
  return plan;
}

void NormalizationPlan::validate(const CycleType& c0, const CycleType& c1,
                                 const CycleType& cInf) const {
  auto type_of = [&](int fiber) -> const CycleType& {
    return fiber == 0 ? c0 : fiber == 1 ? c1 : cInf;
  };
  if (at_infinity.fiber != 2)
    throw std::invalid_argument(
        "normalization: the point at infinity must carry a cycle of the infinity fiber");
  std::map<std::pair<int, int>, int> used;
  used[{2, at_infinity.length}]++;
  if (at_zero) used[{at_zero->fiber, at_zero->length}]++;
  if (at_one) used[{at_one->fiber, at_one->length}]++;
  for (const auto& [key, cnt] : used) {
    const CycleType& c = type_of(key.first);
    if (c.multiplicity(key.second) < cnt)
      throw std::invalid_argument("normalization: anchored cycle not present in its fiber");
  }
}

bool PolynomialSystem::is_substituted(int var) const {
  for (const auto& s : gauge_subs)
    if (s.var == var) return true;
  return false;
}

std::vector<int> PolynomialSystem::scan_variables() const {
  std::vector<int> out;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].role == "aux-inverse") continue;
    if (is_substituted((int)i)) continue;
    out.push_back((int)i);
  }
  return out;
}

std::vector<int> PolynomialSystem::nonvanishing_variables() const {
  std::vector<int> out;
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].nonvanishing) out.push_back((int)i);
  return out;
}

long PolynomialSystem::count_equations(const std::string& provenance) const {
  long n = 0;
  for (const auto& e : eqs)
    if (e.provenance == provenance) ++n;
  return n;
}

namespace {

// monic factor polynomial in t from a FactorShape, gauge subs applied
TPoly factor_tpoly(const PolynomialSystem& sys, const FactorShape& f) {
  const int n = (int)sys.nvars();
  std::vector<MPoly> coeffs(f.degree + 1, MPoly(n));
  coeffs[f.degree] = MPoly::constant(n, 1);
  for (int i = 0; i < f.degree; ++i) {
    MPoly v = MPoly::variable(n, f.var_base + i);
    for (const auto& s : sys.gauge_subs)
      v = v.substitute(s.var, s.value);
    coeffs[i] = v;
  }
  return TPoly(n, std::move(coeffs));
}

TPoly fiber_product(const PolynomialSystem& sys, int fiber, bool with_constant) {
  const int n = (int)sys.nvars();
  TPoly prod = TPoly::from_mpoly(MPoly::constant(n, 1));
  for (const auto& f : sys.factors)
    if (f.fiber == fiber) prod = prod * factor_tpoly(sys, f).pow(f.multiplicity);
  for (const auto& l : sys.literals)
    if (l.fiber == fiber) prod = prod * TPoly::linear_root(n, l.root).pow(l.multiplicity);
  if (with_constant) prod = prod.scaled(MPoly::variable(n, sys.c_var));
  return prod;
}

}  // namespace

TPoly PolynomialSystem::numerator_shape() const { return fiber_product(*this, 0, true); }
TPoly PolynomialSystem::denominator_shape() const { return fiber_product(*this, 2, false); }
TPoly PolynomialSystem::one_fiber_numerator_shape() const { return fiber_product(*this, 1, true); }

namespace {

// strip powers of nonvanishing variables from an equation (they cannot be
// zero, so the equation is equivalent without them)
MPoly strip_nonvanishing(const PolynomialSystem& sys, const MPoly& e) {
  return e.strip_monomial_factor(sys.nonvanishing_variables());
}

void push_equation(PolynomialSystem& sys, const MPoly& e, const std::string& provenance) {
  if (e.is_zero()) return;
  MPoly s = strip_nonvanishing(sys, e);
  if (s.is_constant() && s.constant_value() != 0)
    throw std::logic_error("inconsistent equation generated (nonzero constant)");
  for (const auto& existing : sys.eqs)
    if (existing.poly == s) return;
  sys.eqs.push_back({s, provenance});
}

// coefficient-match equations: numerator - denominator - (1-fiber numerator)
void generate_match_equations(PolynomialSystem& sys) {
  TPoly diff = sys.numerator_shape() - sys.denominator_shape() - sys.one_fiber_numerator_shape();
  // top coefficient vanishes identically (both sides lead with c)
  for (int k = diff.degree(); k >= 0; --k)
    push_equation(sys, diff.coeff(k), "coefficient-match");
}

struct GaugeCaseSpec {
  std::string label;
  std::vector<GaugeAssignment> subs;
};

// weight-w coefficient of a monic factor under t -> u*t rescaling is the
// coefficient of t^{degree-w}
int weighted_coeff_var(const FactorShape& f, int weight) {
  return f.var_base + f.degree - weight;
}

}  // namespace

BuildResult build_system(const CycleType& c0, const CycleType& c1, const CycleType& cInf,
                         const NormalizationPlan& plan) {
  if (genus_of_types(c0, c1, cInf) != 0)
    throw std::invalid_argument("build_system: classes do not have genus 0");
  plan.validate(c0, c1, cInf);

  const int d = c0.degree();
  PolynomialSystem sys;
  sys.c0 = c0;
  sys.c1 = c1;
  sys.cInf = cInf;
  sys.degree = d;
  sys.inf_pole = plan.at_infinity.length;

  // anchored literal factors
  std::map<std::pair<int, int>, int> anchored;  // (fiber, length) -> count
  anchored[{2, plan.at_infinity.length}]++;
  if (plan.at_zero) {
    sys.literals.push_back({plan.at_zero->fiber, plan.at_zero->length, 0});
    anchored[{plan.at_zero->fiber, plan.at_zero->length}]++;
  }
  if (plan.at_one) {
    sys.literals.push_back({plan.at_one->fiber, plan.at_one->length, 1});
    anchored[{plan.at_one->fiber, plan.at_one->length}]++;
  }

  // variables: leading constant first, then factor coefficients
  sys.vars.push_back({"c", "leading-constant", true});
  sys.c_var = 0;
  auto add_factors = [&](int fiber, const CycleType& c) {
    const char** letters = fiber_letters(fiber);
    int letter_idx = 0;
    const auto& parts = c.parts();
    size_t i = 0;
    while (i < parts.size()) {
      size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      int len = parts[i];
      int count = (int)(j - i);
      auto it = anchored.find({fiber, len});
      if (it != anchored.end()) count -= it->second;
      if (count > 0) {
        FactorShape f;
        f.fiber = fiber;
        f.multiplicity = len;
        f.degree = count;
        f.var_base = (int)sys.vars.size();
        std::string letter = letters[letter_idx++];
        for (int k = 0; k < count; ++k)
          sys.vars.push_back({letter + std::to_string(k), "factor-coefficient", false});
        sys.factors.push_back(f);
      }
      i = j;
    }
  };
  add_factors(0, c0);
  add_factors(1, c1);
  add_factors(2, cInf);

  // rebuild every MPoly-producing step with the final variable count
  generate_match_equations(sys);

  // ---- gauge analysis ----
  int anchors = 1 + (plan.at_zero ? 1 : 0) + (plan.at_one ? 1 : 0);
  BuildResult out;
  out.base = sys;

  std::vector<GaugeCaseSpec> case_specs;
  if (anchors == 3) {
    case_specs.push_back({"full-anchor", {}});
  } else if (anchors == 2) {
    // one-parameter rescaling remains; pinned against the seed at lift time
    case_specs.push_back({"scaling-sliced", {}});
  } else {
    // full affine gauge: depress one factor by the shift, then split on
    // subleading coefficients against the reference constant
    const int n = (int)sys.nvars();
    const FactorShape* shift = nullptr;
    for (const auto& f : sys.factors) {
      if (f.degree < 1) continue;
      if (!shift || std::make_tuple(f.multiplicity, f.degree, f.fiber) <
                        std::make_tuple(shift->multiplicity, shift->degree, shift->fiber))
        shift = &f;
    }
    if (!shift) throw std::logic_error("no factor available for the gauge shift");
    int shift_sub = weighted_coeff_var(*shift, 1);   // subleading := 0
    int ref = shift->var_base;                        // constant coefficient
    GaugeAssignment depress{shift_sub, MPoly(n)};

    std::vector<int> chain;
    for (int fiber : {0, 1, 2}) {
      if (fiber == shift->fiber) continue;
      for (const auto& f : sys.factors)
        if (f.fiber == fiber && f.degree >= 1) chain.push_back(weighted_coeff_var(f, 1));
    }
    MPoly ref_poly = MPoly::variable(n, ref);
    for (size_t i = 0; i < chain.size(); ++i) {
      GaugeCaseSpec cs;
      cs.label = "case-" + std::to_string(i + 1);
      cs.subs.push_back(depress);
      for (size_t j = 0; j < i; ++j) cs.subs.push_back({chain[j], MPoly(n)});
      cs.subs.push_back({chain[i], ref_poly});
      case_specs.push_back(std::move(cs));
    }
    // terminal case: every chain coefficient vanishes (the map is a
    // polynomial in a power of t); pin a weight-2 coefficient instead
    GaugeCaseSpec term;
    term.label = "case-" + std::to_string(chain.size() + 1);
    term.subs.push_back(depress);
    for (int x : chain) term.subs.push_back({x, MPoly(n)});
    std::optional<int> pin;
    for (const auto& f : sys.factors) {
      if (f.fiber != shift->fiber || &f == shift || f.degree < 2) continue;
      pin = weighted_coeff_var(f, 2);
      break;
    }
    if (!pin)
      for (const auto& f : sys.factors) {
        if (f.fiber == shift->fiber || f.degree < 2) continue;
        pin = weighted_coeff_var(f, 2);
        break;
      }
    if (pin) {
      term.subs.push_back({*pin, ref_poly});
      case_specs.push_back(std::move(term));
    }
    if (case_specs.empty())
      throw std::logic_error("gauge analysis produced no cases for this class shape");
  }

  for (const auto& cs : case_specs) {
    PolynomialSystem s = sys;
    s.case_label = cs.label;
    s.seed_sliced = (cs.label == "scaling-sliced");
    s.gauge_subs = cs.subs;
    if (!cs.subs.empty()) {
      // the reference coefficient appearing on the right of a pin is
      // nonvanishing by construction of the case split
      for (const auto& sub : cs.subs)
        for (const auto& [e, c] : sub.value.terms())
          for (size_t v = 0; v < s.vars.size(); ++v)
            if (e[v] > 0) s.vars[v].nonvanishing = true;
      s.eqs.clear();
      generate_match_equations(s);
      // record the substitutions as gauge equations for the export format
      for (const auto& sub : cs.subs) {
        MPoly g = MPoly::variable((int)s.nvars(), sub.var) - sub.value;
        s.eqs.push_back({g, "gauge"});
      }
    }
    out.cases.push_back(std::move(s));
  }
  return out;
}

namespace {

struct FiberData {
  std::vector<std::pair<TPoly, int>> facs;  // (monic poly, multiplicity)
  bool with_constant;
};

FiberData fiber_data(const PolynomialSystem& sys, int fiber) {
  FiberData fd;
  fd.with_constant = (fiber != 2);
  for (const auto& f : sys.factors)
    if (f.fiber == fiber) fd.facs.emplace_back(factor_tpoly(sys, f), f.multiplicity);
  for (const auto& l : sys.literals)
    if (l.fiber == fiber)
      fd.facs.emplace_back(TPoly::linear_root((int)sys.nvars(), l.root), l.multiplicity);
  return fd;
}

// p0 = prod f^(m-1); P = lead * prod f; Pt = lead * sum m_i f_i' prod_{j!=i} f_j
struct AsdParts {
  TPoly p0, P, Pt;
};

AsdParts asd_parts(const PolynomialSystem& sys, int fiber) {
  const int n = (int)sys.nvars();
  FiberData fd = fiber_data(sys, fiber);
  AsdParts out;
  out.p0 = TPoly::from_mpoly(MPoly::constant(n, 1));
  out.P = TPoly::from_mpoly(MPoly::constant(n, 1));
  for (const auto& [f, m] : fd.facs) {
    out.p0 = out.p0 * f.pow(m - 1);
    out.P = out.P * f;
  }
  TPoly sum(n);
  for (size_t i = 0; i < fd.facs.size(); ++i) {
    TPoly term = fd.facs[i].first.derivative().scaled(
        MPoly::constant(n, fd.facs[i].second));
    for (size_t j = 0; j < fd.facs.size(); ++j)
      if (j != i) term = term * fd.facs[j].first;
    sum = sum + term;
  }
  out.Pt = sum;
  if (fd.with_constant) {
    MPoly c = MPoly::variable(n, sys.c_var);
    out.P = out.P.scaled(c);
    out.Pt = out.Pt.scaled(c);
  }
  return out;
}

}  // namespace

PolynomialSystem asd_augment(const PolynomialSystem& sys) {
  PolynomialSystem out = sys;
  AsdParts zero = asd_parts(sys, 0);
  AsdParts one = asd_parts(sys, 1);
  AsdParts inf = asd_parts(sys, 2);

  auto add_relation = [&](const TPoly& left, const TPoly& modpoly) {
    if (modpoly.degree() < 1) return;
    TPoly rem = TPoly::rem_monic(left, modpoly);
    for (int k = rem.degree(); k >= 0; --k) push_equation(out, rem.coeff(k), "ASD");
  };

  // d(f) supported away from each fiber's repeated part:
  //   Q*Rt - Qt*R = 0 mod p0,  P*Rt - Pt*R = 0 mod q0,  P*Qt - Pt*Q = 0 mod r0
  // with (P,Q,R) attached to the fibers over (0, infinity, 1).
  add_relation(inf.P * one.Pt - inf.Pt * one.P, zero.p0);
  add_relation(zero.P * one.Pt - zero.Pt * one.P, inf.p0);
  add_relation(zero.P * inf.Pt - zero.Pt * inf.P, one.p0);
  return out;
}

MPoly resultant(const TPoly& a, const TPoly& b, int nvars) {
  const int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return MPoly(nvars);
  if (m == 0) return a.coeff(0).pow(std::max(n, 0));
  if (n == 0) return b.coeff(0).pow(m);
  const int size = m + n;
  std::vector<std::vector<MPoly>> M(size, std::vector<MPoly>(size, MPoly(nvars)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[r][r + m - k] = a.coeff(k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) M[n + r][r + n - k] = b.coeff(k);
  // cofactor expansion (sizes stay small)
  std::function<MPoly(std::vector<std::vector<MPoly>>&)> det =
      [&](std::vector<std::vector<MPoly>>& mat) -> MPoly {
    const size_t s = mat.size();
    if (s == 1) return mat[0][0];
    MPoly acc(nvars);
    for (size_t i = 0; i < s; ++i) {
      if (mat[i][0].is_zero()) continue;
      std::vector<std::vector<MPoly>> minor;
      minor.reserve(s - 1);
      for (size_t r = 0; r < s; ++r) {
        if (r == i) continue;
        minor.emplace_back(mat[r].begin() + 1, mat[r].end());
      }
      MPoly sub = det(minor);
      MPoly term = mat[i][0] * sub;
      acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  return det(M);
}

PolynomialSystem close_nondegenerate(const PolynomialSystem& sys, bool strict) {
  PolynomialSystem out = sys;

  struct Marker {
    MPoly value;        // quantity required nonzero
    std::string name;
  };
  std::vector<Marker> markers;
  const int n0 = (int)sys.nvars();
  for (int v : sys.nonvanishing_variables()) {
    bool have = false;
    for (const auto& [a, b] : sys.inverse_pairs)
      if (a == v) have = true;
    if (!have) markers.push_back({MPoly::variable(n0, v), sys.vars[v].name});
  }
  if (strict) {
    for (const auto& f : sys.factors) {
      if (f.degree >= 2) {
        TPoly fp = factor_tpoly(sys, f);
        markers.push_back({resultant(fp, fp.derivative(), n0),
                           "disc_" + sys.vars[f.var_base].name});
      }
    }
    // distinct roots within a fiber, and no numerator/denominator overlap
    for (size_t i = 0; i < sys.factors.size(); ++i)
      for (size_t j = i + 1; j < sys.factors.size(); ++j) {
        const auto& fi = sys.factors[i];
        const auto& fj = sys.factors[j];
        bool same_fiber = fi.fiber == fj.fiber;
        bool num_den = (fi.fiber == 0 && fj.fiber == 2) || (fi.fiber == 2 && fj.fiber == 0);
        if (!same_fiber && !num_den) continue;
        markers.push_back({resultant(factor_tpoly(sys, fi), factor_tpoly(sys, fj), n0),
                           "res_" + sys.vars[fi.var_base].name + "_" + sys.vars[fj.var_base].name});
      }
  }

  if (markers.empty()) return out;

  const int n1 = n0 + (int)markers.size();
  auto extend = [&](const MPoly& p) {
    MPoly q(n1);
    for (const auto& [e, c] : p.terms()) {
      MPoly::Exp ne(n1, 0);
      std::copy(e.begin(), e.end(), ne.begin());
      q.add_term(ne, c);
    }
    return q;
  };
  for (auto& e : out.eqs) e.poly = extend(e.poly);
  for (auto& s : out.gauge_subs) s.value = extend(s.value);

  for (size_t i = 0; i < markers.size(); ++i) {
    int aux = n0 + (int)i;
    out.vars.push_back({markers[i].name + "_inv", "aux-inverse", false});
    MPoly eq = extend(markers[i].value) * MPoly::variable(n1, aux) - MPoly::constant(n1, 1);
    out.eqs.push_back({eq, "nondegeneracy"});
    // single-variable markers are recorded as (v, v') pairs so that scans
    // can derive v' = 1/v instead of searching it
    for (int v = 0; v < n0; ++v)
      if (markers[i].value == MPoly::variable(n0, v)) out.inverse_pairs.emplace_back(v, aux);
  }
  return out;
}

}  // namespace belyi
