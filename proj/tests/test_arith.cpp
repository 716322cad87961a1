#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "belyi/eqsys.hpp"
#include "belyi/fq.hpp"
#include "belyi/fqfactor.hpp"
#include "belyi/lll.hpp"
#include "belyi/numberfield.hpp"
#include "belyi/padic.hpp"
#include "belyi/qpoly.hpp"
#include "belyi/reconstruct.hpp"

using namespace belyi;

TEST_CASE("prime field arithmetic") {
  auto F = FqContext::prime_field(13);
  CHECK(F.q() == 13);
  auto a = F.from_int(7), b = F.from_int(9);
  CHECK(F.mul(a, b).c[0] == 63 % 13);
  CHECK(F.add(a, b).c[0] == 3);
  CHECK(F.mul(a, F.inv(a)) == F.one());
  CHECK(F.pow(F.from_int(2), 12) == F.one());  // Fermat
}

TEST_CASE("Conway quadratic for F_25 matches the classical table") {
  // alpha^2 - alpha + 2 = 0, i.e. x^2 + 4x + 2 over F_5
  auto m = conway_polynomial_k2(5);
  REQUIRE(m.size() == 3);
  CHECK(m[0] == 2);
  CHECK(m[1] == 4);
  CHECK(m[2] == 1);
  auto F25 = FqContext::make(5, 2);
  // alpha is primitive of order 24
  auto alpha = F25.generator();
  auto x = alpha;
  int order = 1;
  while (!(x == F25.one())) {
    x = F25.mul(x, alpha);
    ++order;
  }
  CHECK(order == 24);
  // alpha^8 = 2*alpha + 1 (used by the stored degree-7 seed)
  auto a8 = F25.pow(alpha, 8);
  CHECK(a8.c[0] == 1);
  CHECK(a8.c[1] == 2);
}

TEST_CASE("extension field inverse and frobenius") {
  auto F49 = FqContext::make(7, 2);
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto a = F49.from_index(1 + rng() % 48);
    CHECK(F49.mul(a, F49.inv(a)) == F49.one());
    // frobenius is an automorphism fixing F_7
    auto b = F49.from_index(1 + rng() % 48);
    CHECK(F49.frobenius(F49.mul(a, b)) == F49.mul(F49.frobenius(a), F49.frobenius(b)));
  }
  CHECK(F49.frobenius(F49.from_int(5)) == F49.from_int(5));
}

TEST_CASE("factorization examples") {
  auto F5 = FqContext::prime_field(5);
  // t^2 - 1 = (t-1)(t+1)
  auto f = FqPoly::from_ints(F5, {-1, 0, 1});
  auto facs = factor_fq(f);
  REQUIRE(facs.size() == 2);
  CHECK(facs[0].first.degree() == 1);
  CHECK(facs[1].first.degree() == 1);

  auto F3 = FqContext::prime_field(3);
  auto g = FqPoly::from_ints(F3, {1, 0, 1});  // t^2 + 1 irreducible mod 3
  auto gf = factor_fq(g);
  REQUIRE(gf.size() == 1);
  CHECK(gf[0].first.degree() == 2);
  CHECK(gf[0].second == 1);
}

TEST_CASE("factorization product property, randomized") {
  std::mt19937 rng(17);
  for (auto [p, k] : {std::pair<long, int>{5, 1}, {13, 1}, {3, 2}, {2, 1}, {7, 2}}) {
    auto F = FqContext::make(p, k);
    for (int it = 0; it < 200; ++it) {
      int deg = 1 + rng() % 8;
      std::vector<FqElem> cs(deg + 1);
      for (auto& c : cs) c = F.from_index(rng() % F.size_u64());
      FqPoly f(F, cs);
      if (f.degree() < 1) continue;
      auto facs = factor_fq(f);
      FqPoly prod = FqPoly::constant(F, f.leading());
      for (const auto& [g, m] : facs) {
        CHECK(g.leading() == F.one());
        for (int i = 0; i < m; ++i) prod = prod * g;
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("squarefree detection in characteristic p") {
  auto F3 = FqContext::prime_field(3);
  // (t+1)^3 = t^3 + 1 mod 3 has zero derivative
  auto f = FqPoly::from_ints(F3, {1, 0, 0, 1});
  CHECK_FALSE(is_squarefree_fq(f));
  auto facs = factor_fq(f);
  REQUIRE(facs.size() == 1);
  CHECK(facs[0].second == 3);
  CHECK(facs[0].first.degree() == 1);
}

TEST_CASE("padic ring arithmetic") {
  PadicRing R(13, 8);
  auto a = R.from_mpz(mpz_class("123456789"));
  auto b = R.inv(a);
  CHECK(R.mul(a, b) == R.one());
  // balanced digits of -3 - 5*13 - 13^2
  mpz_class v = -3 - 5 * 13 - 169;
  auto digs = R.balanced_digits(v, 3);
  CHECK(digs == std::vector<long>{-3, -5, -1});

  PadicRing R2(5, 6, 2);
  auto x = PadicElem{{mpz_class(2), mpz_class(3)}};
  auto xi = R2.inv(x);
  CHECK(R2.mul(x, xi) == R2.one());
}

TEST_CASE("rational reconstruction round-trips") {
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), 13, 8);
  // a = -3/2 mod 13^8
  mpz_class half_inv;
  mpz_class two = 2;
  mpz_invert(half_inv.get_mpz_t(), two.get_mpz_t(), m.get_mpz_t());
  mpz_class a = (-3 * half_inv) % m;
  auto r = rational_reconstruct(a, m);
  REQUIRE(r.has_value());
  CHECK(*r == mpq_class(-3, 2));
  CHECK(*rational_reconstruct(mpz_class(1), m) == 1);

  std::mt19937 rng(23);
  for (int it = 0; it < 1000; ++it) {
    long num = (long)(rng() % 20001) - 10000;
    long den = 1 + (long)(rng() % 9999);
    if (den % 13 == 0) continue;
    mpz_class dinv;
    mpz_class zden = den;
    mpz_invert(dinv.get_mpz_t(), zden.get_mpz_t(), m.get_mpz_t());
    mpz_class enc = (num * dinv) % m;
    auto rec = rational_reconstruct(enc, m);
    REQUIRE(rec.has_value());
    mpq_class expect(num, den);
    expect.canonicalize();
    CHECK(*rec == expect);
  }
}

TEST_CASE("lll basics") {
  // identity stays identity
  std::vector<std::vector<mpz_class>> id = {{1, 0}, {0, 1}};
  auto r = lll_reduce(id);
  CHECK(r == id);

  // Gauss reduction case
  std::vector<std::vector<mpz_class>> b = {{1, 0}, {4, 1}};
  std::vector<std::vector<mpz_class>> U;
  auto red = lll_reduce(b, &U);
  // first vector no longer than the shortest input vector
  mpz_class n0 = red[0][0] * red[0][0] + red[0][1] * red[0][1];
  CHECK(n0 <= 1);
  // unimodular transform reproduces the reduced basis
  for (size_t i = 0; i < red.size(); ++i)
    for (size_t j = 0; j < 2; ++j) {
      mpz_class acc = 0;
      for (size_t k = 0; k < 2; ++k) acc += U[i][k] * b[k][j];
      CHECK(acc == red[i][j]);
    }
  CHECK_THROWS(lll_reduce({{1, 2}, {2, 4}}));
}

TEST_CASE("knapsack lattice recovers x^2 - 2 from a 7-adic root") {
  // 3^2 = 2 mod 7: Hensel-lift the square root of 2
  const int N = 16;
  PadicRing R(7, N);
  PadicElem r = R.from_mpz(3);
  for (int i = 0; i < 6; ++i) {
    // Newton: r <- r - (r^2-2)/(2r)
    PadicElem num = R.sub(R.mul(r, r), R.from_mpz(2));
    r = R.sub(r, R.mul(num, R.inv(R.add(r, r))));
  }
  CHECK(R.is_zero(R.sub(R.mul(r, r), R.from_mpz(2))));
  auto cand = algebraic_reconstruct(r, R, 2);
  REQUIRE(cand.has_value());
  ZPoly expect;
  expect.c = {-2, 0, 1};
  CHECK(cand->minpoly == expect);
}

TEST_CASE("13-adic sqrt(-3) reconstructs to x^2 + 3") {
  const int N = 16;
  PadicRing R(13, N);
  PadicElem r = R.from_mpz(6);  // 6^2 = 36 = -3 mod 13
  for (int i = 0; i < 6; ++i) {
    PadicElem num = R.add(R.mul(r, r), R.from_mpz(3));
    r = R.sub(r, R.mul(num, R.inv(R.add(r, r))));
  }
  auto cand = algebraic_reconstruct(r, R, 2);
  REQUIRE(cand.has_value());
  ZPoly expect;
  expect.c = {3, 0, 1};
  CHECK(cand->minpoly == expect);
  // rational input reconstructs at degree 1
  auto rat = algebraic_reconstruct(R.from_mpz(mpz_class(-7)), R, 2);
  REQUIRE(rat.has_value());
  CHECK(rat->degree() == 1);
}

TEST_CASE("expressing values in a power basis") {
  const int N = 20;
  PadicRing R(13, N);
  PadicElem th = R.from_mpz(6);
  for (int i = 0; i < 6; ++i) {
    PadicElem num = R.add(R.mul(th, th), R.from_mpz(3));
    th = R.sub(th, R.mul(num, R.inv(R.add(th, th))));
  }
  // a = 5/2 - 7*theta
  PadicElem a = R.sub(R.mul(R.from_mpz(5), R.inv(R.from_mpz(2))),
                      R.mul(R.from_mpz(7), th));
  auto coords = express_in_power_basis(a, th, 2, R);
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == mpq_class(5, 2));
  CHECK((*coords)[1] == -7);
}

TEST_CASE("Z[x] irreducibility and factorization") {
  ZPoly f;
  f.c = {-2, 0, 1};  // x^2 - 2
  CHECK(is_irreducible_z(f));
  ZPoly g;
  g.c = {-1, 0, 1};  // (x-1)(x+1)
  CHECK_FALSE(is_irreducible_z(g));
  auto facs = factor_z(g);
  REQUIRE(facs.size() == 2);
  CHECK(facs[0].first.degree() == 1);

  // x^4 + 1: irreducible over Z though reducible modulo every prime
  ZPoly h;
  h.c = {1, 0, 0, 0, 1};
  CHECK(is_irreducible_z(h));

  ZPoly prod;  // (x^2-2)(x^2-3) = x^4 - 5x^2 + 6
  prod.c = {6, 0, -5, 0, 1};
  auto pf = factor_z(prod);
  REQUIRE(pf.size() == 2);
  CHECK(pf[0].first.degree() == 2);
  CHECK(pf[1].first.degree() == 2);

  // multiplicities
  ZPoly sq;  // (x-1)^2 (x+2)
  sq.c = {2, -3, 0, 1};
  auto sf = factor_z(sq);
  REQUIRE(sf.size() == 2);
  bool saw_double = false;
  for (auto& [fac, mult] : sf)
    if (mult == 2) saw_double = true;
  CHECK(saw_double);
}

TEST_CASE("number field arithmetic in Q(sqrt(-3))") {
  ZPoly mp;
  mp.c = {3, 0, 1};
  auto K = NumberField::create(mp);
  CHECK(K->degree() == 2);
  auto th = NFElem::theta(K);
  CHECK((th * th) == NFElem::from_rational(K, -3));
  auto x = NFElem(K, {mpq_class(1, 2), mpq_class(-2, 3)});
  CHECK((x * x.inverse()) == NFElem::from_rational(K, 1));
  // conjugate root
  auto roots = field_roots_in_field(K);
  REQUIRE(roots.size() == 2);
  CHECK(roots[1] == -th);
  ZPoly red;
  red.c = {-1, 0, 1};  // x^2 - 1 reducible
  CHECK_THROWS(NumberField::create(red));
}

TEST_CASE("NFPoly gcd and squarefree decomposition") {
  auto Q = NumberField::rationals();
  // f = (t^2 - 2)^2 (t - 1) over Q
  QPoly a({-2, 0, 1}), b({-1, 1});
  QPoly f = a * a * b;
  NFPoly nf = NFPoly::from_qpoly(Q, f);
  auto sq = squarefree_decomposition(nf);
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].second == 1);
  CHECK(sq[0].first.degree() == 1);
  CHECK(sq[1].second == 2);
  CHECK(sq[1].first.degree() == 2);

  ZPoly mp;
  mp.c = {-2, 0, 1};
  auto K = NumberField::create(mp);
  // over Q(sqrt(2)), t^2 - 2 splits: (t - w)(t + w)
  NFPoly g = NFPoly::from_qpoly(K, a);
  NFPoly lin(K, {-NFElem::theta(K), NFElem::from_rational(K, 1)});
  NFPoly q = g / lin;
  CHECK((q * lin) == g);
}

TEST_CASE("multivariate Newton lifting on the degree-3 system") {
  auto build = build_system(CycleType({2, 1}), CycleType({2, 1}), CycleType({3}));
  auto sys = close_nondegenerate(build.cases[0]);
  auto F5 = FqContext::prime_field(5);
  // seed: c=-2=3, a0=-3/2=1, d0=1/2=3
  std::vector<FqElem> seed;
  for (int v : sys.scan_variables()) {
    const std::string& name = sys.vars[v].name;
    if (name == "c") seed.push_back(F5.from_int(3));
    else if (name == "a0") seed.push_back(F5.from_int(1));
    else seed.push_back(F5.from_int(3));
  }
  NewtonOptions opt;
  opt.target_precision = 32;
  auto nr = multinewton_lift(sys, F5, seed, opt);
  REQUIRE(nr.ok);
  CHECK(nr.nonzero_residuals.empty());
  CHECK(nr.precision == 32);
  PadicRing R(5, 32);
  for (size_t i = 0; i < sys.nvars(); ++i) {
    const std::string& name = sys.vars[i].name;
    auto r = rational_reconstruct(nr.values[i].c[0], R.pN());
    REQUIRE(r.has_value());
    if (name == "c") CHECK(*r == -2);
    if (name == "a0") CHECK(*r == mpq_class(-3, 2));
    if (name == "d0") CHECK(*r == mpq_class(1, 2));
  }

  // deterministic: lifting twice gives identical digits
  auto nr2 = multinewton_lift(sys, F5, seed, opt);
  CHECK(nr2.values == nr.values);

  // precision contract: reaches exactly the requested target
  NewtonOptions small;
  small.target_precision = 7;
  auto nr3 = multinewton_lift(sys, F5, seed, small);
  REQUIRE(nr3.ok);
  CHECK(nr3.precision == 7);
}

TEST_CASE("lifting detects rank-deficient seeds") {
  // the squaring-map system has a one-parameter family; without a slice the
  // Jacobian cannot reach full rank
  auto build = build_system(CycleType({2}), CycleType({1, 1}), CycleType({2}));
  auto sys = close_nondegenerate(build.cases[0]);
  auto F5 = FqContext::prime_field(5);
  std::vector<FqElem> seed;
  for (int v : sys.scan_variables()) {
    const std::string& name = sys.vars[v].name;
    if (name == "c") seed.push_back(F5.from_int(1));
    else if (name == "d0") seed.push_back(F5.from_int(4));  // -1
    else seed.push_back(F5.from_int(0));
  }
  NewtonOptions opt;
  opt.target_precision = 8;
  auto nr = multinewton_lift(sys, F5, seed, opt);
  CHECK_FALSE(nr.ok);

  // pinning the leading constant restores a square system
  for (int v : sys.scan_variables())
    if (sys.vars[v].name == "c") opt.slice_var = v;
  auto nr2 = multinewton_lift(sys, F5, seed, opt);
  REQUIRE(nr2.ok);
  CHECK(nr2.nonzero_residuals.empty());
}
