#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "belyi/eqsys.hpp"

using namespace belyi;

namespace {

CycleType CT(const std::string& s) { return CycleType::parse(s); }

// evaluate every equation of a given provenance at a rational point
bool all_vanish(const PolynomialSystem& sys, const std::vector<mpq_class>& pt,
                const std::string& provenance = "") {
  for (const auto& e : sys.eqs) {
    if (!provenance.empty() && e.provenance != provenance) continue;
    if (e.poly.eval_q(pt) != 0) return false;
  }
  return true;
}

int find_var(const PolynomialSystem& sys, const std::string& name) {
  for (size_t i = 0; i < sys.vars.size(); ++i)
    if (sys.vars[i].name == name) return (int)i;
  return -1;
}

}  // namespace

TEST_CASE("degree-3 system has the known unique solution") {
  auto build = build_system(CT("2 1"), CT("2 1"), CT("3"));
  REQUIRE(build.cases.size() == 1);
  const auto& sys = build.cases[0];
  CHECK(sys.case_label == "full-anchor");
  // c, a0 (free simple zero), d0 (free simple one-point)
  REQUIRE(sys.vars.size() == 3);
  CHECK(sys.count_equations("coefficient-match") == 3);

  // f = c t^2 (t + a0), f - 1 = c (t-1)^2 (t + d0):
  // solution a0 = -3/2, d0 = 1/2, c = -2
  int c = find_var(sys, "c"), a0 = find_var(sys, "a0"), d0 = find_var(sys, "d0");
  REQUIRE(c >= 0);
  REQUIRE(a0 >= 0);
  REQUIRE(d0 >= 0);
  std::vector<mpq_class> pt(sys.nvars());
  pt[c] = -2;
  pt[a0] = mpq_class(-3, 2);
  pt[d0] = mpq_class(1, 2);
  CHECK(all_vanish(sys, pt));

  // a wrong point violates the system
  pt[a0] = 1;
  CHECK_FALSE(all_vanish(sys, pt));

  // ASD augmentation keeps the solution
  auto asys = asd_augment(sys);
  pt[a0] = mpq_class(-3, 2);
  CHECK(asys.count_equations("ASD") > 0);
  CHECK(all_vanish(asys, pt));
}

TEST_CASE("squaring map: anchored at infinity and zero, scaling sliced") {
  auto build = build_system(CT("2"), CT("1 1"), CT("2"));
  REQUIRE(build.cases.size() == 1);
  const auto& sys = build.cases[0];
  CHECK(sys.seed_sliced);
  REQUIRE(sys.vars.size() == 3);  // c, d1, d0
  // one-parameter family: c arbitrary nonzero, d1 = 0, d0 = -1/c
  int c = find_var(sys, "c"), d0 = find_var(sys, "d0"), d1 = find_var(sys, "d1");
  std::vector<mpq_class> pt(sys.nvars());
  pt[c] = 5;
  pt[d1] = 0;
  pt[d0] = mpq_class(-1, 5);
  CHECK(all_vanish(sys, pt));
  pt[c] = 1;
  pt[d0] = -1;
  CHECK(all_vanish(sys, pt));
}

TEST_CASE("degree-4 augmentation pins the three coefficients at once") {
  auto build = build_system(CT("2 1^2"), CT("3 1"), CT("4"));
  REQUIRE(build.cases.size() == 1);
  const auto& sys = build.cases[0];
  REQUIRE(sys.vars.size() == 4);  // c, a0, a1, d0
  auto asys = asd_augment(sys);
  REQUIRE(asys.count_equations("ASD") == 3);

  int c = find_var(sys, "c"), a0 = find_var(sys, "a0"), a1 = find_var(sys, "a1"),
      d0 = find_var(sys, "d0");

  // the ASD equations are linear in (a0, a1, d0) and force
  // a1 = -8/3, a0 = 2, d0 = 1/3 regardless of c
  std::vector<mpq_class> pt(sys.nvars());
  pt[c] = 7;  // arbitrary nonzero; the relations strip it
  pt[a1] = mpq_class(-8, 3);
  pt[a0] = 2;
  pt[d0] = mpq_class(1, 3);
  CHECK(all_vanish(asys, pt, "ASD"));
  // each coordinate is pinned: perturbing any one breaks some ASD equation
  for (int v : {a0, a1, d0}) {
    auto bad = pt;
    bad[v] += 1;
    CHECK_FALSE(all_vanish(asys, bad, "ASD"));
  }

  // full solution with c = 3 solves base + ASD
  pt[c] = 3;
  CHECK(all_vanish(asys, pt));
}

TEST_CASE("degree-8 system: 8 equations, 10 variables, 3 gauge cases") {
  auto build = build_system(CT("2^3 1^2"), CT("3^2 1^2"), CT("8"));
  CHECK(build.base.vars.size() == 10);
  CHECK(build.base.count_equations("coefficient-match") == 8);
  REQUIRE(build.cases.size() == 3);

  // case (i): b1 = 0, d1 = b0 != 0
  const auto& c1 = build.cases[0];
  REQUIRE(c1.gauge_subs.size() == 2);
  int b1 = find_var(c1, "b1"), b0 = find_var(c1, "b0"), d1 = find_var(c1, "d1");
  int e1 = find_var(c1, "e1"), a1 = find_var(c1, "a1");
  CHECK(c1.gauge_subs[0].var == b1);
  CHECK(c1.gauge_subs[0].value.is_zero());
  CHECK(c1.gauge_subs[1].var == d1);
  CHECK(c1.gauge_subs[1].value == MPoly::variable((int)c1.nvars(), b0));
  CHECK(c1.vars[b0].nonvanishing);

  // case (ii): b1 = 0, d1 = 0, e1 = b0
  const auto& c2 = build.cases[1];
  REQUIRE(c2.gauge_subs.size() == 3);
  CHECK(c2.gauge_subs[1].var == d1);
  CHECK(c2.gauge_subs[1].value.is_zero());
  CHECK(c2.gauge_subs[2].var == e1);

  // case (iii): b1 = d1 = e1 = 0, a1 = b0
  const auto& c3 = build.cases[2];
  REQUIRE(c3.gauge_subs.size() == 4);
  CHECK(c3.gauge_subs[3].var == a1);
}

TEST_CASE("degree-7 systems in both normalizations have seven unknowns") {
  // default plan for the solver's class order
  auto build = build_system(CT("2^3 1"), CT("3^2 1"), CT("6 1"));
  REQUIRE(build.cases.size() == 1);
  CHECK(build.cases[0].case_label == "full-anchor");
  CHECK(build.cases[0].vars.size() == 7);
  CHECK(build.cases[0].count_equations("coefficient-match") == 7);

  // the alternative normalization: classes transposed, with the simple pole
  // at 0 and the simple zero at 1
  NormalizationPlan plan;
  plan.at_infinity = {2, 6};
  plan.at_zero = CycleAnchor{2, 1};
  plan.at_one = CycleAnchor{0, 1};
  auto build2 = build_system(CT("3^2 1"), CT("2^3 1"), CT("6 1"), plan);
  REQUIRE(build2.cases.size() == 1);
  CHECK(build2.cases[0].vars.size() == 7);
}

TEST_CASE("nonzero genus is rejected") {
  CHECK_THROWS(build_system(CT("3^2 1"), CT("3 2^2"), CT("7")));  // genus 1
  CHECK_THROWS(build_system(CT("2 1"), CT("1 1 1"), CT("1 1 1")));
}

TEST_CASE("plan validation") {
  NormalizationPlan plan;
  plan.at_infinity = {0, 2};  // wrong fiber
  CHECK_THROWS(plan.validate(CT("2 1"), CT("2 1"), CT("3")));
  plan.at_infinity = {2, 3};
  plan.at_zero = CycleAnchor{0, 5};  // no 5-cycle in the 0-fiber
  CHECK_THROWS(plan.validate(CT("2 1"), CT("2 1"), CT("3")));
}

TEST_CASE("nondegeneracy closure") {
  auto build = build_system(CT("2 1"), CT("2 1"), CT("3"));
  const auto& sys = build.cases[0];
  auto closed = close_nondegenerate(sys);
  // only c is marked
  CHECK(closed.vars.size() == sys.vars.size() + 1);
  CHECK(closed.count_equations("nondegeneracy") == 1);
  REQUIRE(closed.inverse_pairs.size() == 1);
  CHECK(closed.inverse_pairs[0].first == find_var(sys, "c"));
  // solutions pair with the inverse value
  std::vector<mpq_class> pt(closed.nvars());
  pt[find_var(closed, "c")] = -2;
  pt[find_var(closed, "a0")] = mpq_class(-3, 2);
  pt[find_var(closed, "d0")] = mpq_class(1, 2);
  pt[closed.inverse_pairs[0].second] = mpq_class(-1, 2);
  CHECK(all_vanish(closed, pt));

  // idempotent on already-marked variables
  auto closed2 = close_nondegenerate(closed);
  CHECK(closed2.vars.size() == closed.vars.size());
}

TEST_CASE("strict closure adds discriminant auxiliaries") {
  auto build = build_system(CT("2^3 1^2"), CT("3^2 1^2"), CT("8"));
  auto strict = close_nondegenerate(build.cases[0], /*strict=*/true);
  CHECK(strict.count_equations("nondegeneracy") > 1);
}

TEST_CASE("symbolic resultant matches the quadratic discriminant") {
  // F = t^2 + x t + y: res(F, F') = -(x^2 - 4y)
  TPoly F(2, {MPoly::variable(2, 1), MPoly::variable(2, 0), MPoly::constant(2, 1)});
  MPoly r = resultant(F, F.derivative(), 2);
  MPoly expected = MPoly::constant(2, 4) * MPoly::variable(2, 1) -
                   MPoly::variable(2, 0) * MPoly::variable(2, 0);
  CHECK(r == expected);
}

TEST_CASE("gauge equations are recorded in split cases") {
  auto build = build_system(CT("2^3 1^2"), CT("3^2 1^2"), CT("8"));
  for (const auto& cs : build.cases)
    CHECK(cs.count_equations("gauge") == (long)cs.gauge_subs.size());
}
