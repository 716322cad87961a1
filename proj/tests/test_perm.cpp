#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "belyi/permutation.hpp"

using namespace belyi;

namespace {

Permutation P(const std::string& s, int d) { return Permutation::from_cycles(s, d); }

// every permutation of S_d, for small brute-force sweeps
std::vector<Permutation> all_perms(int d) {
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation random_perm(int d, std::mt19937& rng) {
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

}  // namespace

TEST_CASE("cycle parsing and printing") {
  auto p = P("(1 2)(3 4)", 5);
  CHECK(p(0) == 1);
  CHECK(p(1) == 0);
  CHECK(p(2) == 3);
  CHECK(p(4) == 4);
  CHECK(p.to_cycle_string() == "(1 2)(3 4)");
  CHECK(P("e", 3).is_identity());
  CHECK_THROWS(P("(1 2)(2 3)", 3));
  CHECK_THROWS(P("(1 9)", 3));
}

TEST_CASE("composition convention: left to right") {
  // (1 2) then (2 3) sends 1 -> 2 -> 3
  auto a = P("(1 2)", 3), b = P("(2 3)", 3);
  auto ab = a * b;
  CHECK(ab(0) == 2);
  CHECK(ab.to_cycle_string() == "(1 3 2)");
}

TEST_CASE("cycle_type examples") {
  CHECK(cycle_type(Permutation(4)) == CycleType({1, 1, 1, 1}));
  CHECK(cycle_type(P("(1 2 3)(4 5)", 5)) == CycleType({3, 2}));
  // cusp widths 1 and 6 at degree 7
  CHECK(cycle_type(P("(1 4 7 6 5 3)", 7)) == CycleType({6, 1}));
}

TEST_CASE("class notation") {
  CHECK(CycleType::parse("3^2 2^1 1^2") == CycleType({3, 3, 2, 1, 1}));
  CHECK(CycleType::parse("6 1") == CycleType({6, 1}));
  CHECK(CycleType::parse(" 2^3 1^1") == CycleType({2, 2, 2, 1}));
  CHECK(CycleType({3, 3, 2, 1, 1}).to_string() == "3^2 2^1 1^2");
  CHECK_THROWS(CycleType::parse(""));
  CHECK_THROWS(CycleType::parse("0^2"));
}

TEST_CASE("excess") {
  CHECK(CycleType({1, 1, 1}).excess() == 0);
  CHECK(CycleType({3, 2, 1, 1}).excess() == 3);
  CHECK(CycleType({2, 1}).excess() == 1);
  CHECK(CycleType({3}).excess() == 2);
}

TEST_CASE("triple invariant enforced") {
  auto s0 = P("(1 2)", 3), s1 = P("(2 3)", 3);
  CHECK_THROWS(PermutationTriple(s0, s1, P("(1 3 2)", 3)));  // wrong under L2R
  auto t = PermutationTriple(s0, s1, P("(1 2 3)", 3));
  CHECK((t.s0() * t.s1() * t.sInf()).is_identity());
  auto t2 = PermutationTriple::from_two(s0, s1);
  CHECK(t2 == t);
}

TEST_CASE("genus examples") {
  // degree 3: g = 1 - 3 + (1+1+2)/2 = 0
  auto t3 = PermutationTriple::from_two(P("(1 2)", 3), P("(2 3)", 3));
  CHECK(cycle_type(t3.sInf()) == CycleType({3}));
  CHECK(genus_of_triple(t3) == 0);

  // degree 7 triple with genus 1
  auto t7 = PermutationTriple(P("(1 3 2)(4 6 5)", 7), P("(1 5 2)(3 4)(6 7)", 7),
                              P("(1 3 5 2 6 7 4)", 7));
  CHECK(genus_of_triple(t7) == 1);

  // degree 1
  auto t1 = PermutationTriple::from_two(Permutation(1), Permutation(1));
  CHECK(genus_of_triple(t1) == 0);

  // degree 9 triple of types (9,9,3^3) has genus 3
  auto t9 = PermutationTriple::from_two(P("(1 7 4 2 8 5 9 6 3)", 9).inverse(),
                                        P("(1 4 6 2 5 7 9 3 8)", 9).inverse());
  CHECK(cycle_type(t9.sInf()) == CycleType({3, 3, 3}));
  CHECK(genus_of_triple(t9) == 3);

  CHECK(genus_of_types(CycleType({2, 1}), CycleType({2, 1}), CycleType({3})) == 0);
  CHECK_THROWS(genus_of_types(CycleType({2}), CycleType({1, 1}), CycleType({1, 1})));
}

TEST_CASE("order-42 degree-7 triple is valid as printed") {
  auto t = PermutationTriple(P("(1 2)(3 4)(6 7)", 7), P("(1 2 3)(4 5 6)", 7),
                             P("(1 4 7 6 5 3)", 7));
  CHECK(genus_of_triple(t) == 0);
  CHECK(is_transitive(t));
  CHECK(group_order(t) == 42);
}

TEST_CASE("transitivity") {
  CHECK(is_transitive(PermutationTriple::from_two(P("(1 2)", 3), P("(2 3)", 3))));
  CHECK_FALSE(is_transitive(PermutationTriple::from_two(P("(1 2)", 3), P("(1 2)", 3))));
  CHECK(is_transitive(PermutationTriple::from_two(Permutation(1), Permutation(1))));
}

TEST_CASE("conjugation properties") {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    int d = 1 + (int)(rng() % 7);
    auto s0 = random_perm(d, rng), s1 = random_perm(d, rng);
    auto t = PermutationTriple::from_two(s0, s1);
    auto tau = random_perm(d, rng);
    auto tc = conjugate(t, tau);
    CHECK((tc.s0() * tc.s1() * tc.sInf()).is_identity());
    CHECK(cycle_type(tc.s0()) == cycle_type(t.s0()));
    CHECK(cycle_type(tc.s1()) == cycle_type(t.s1()));
    CHECK(cycle_type(tc.sInf()) == cycle_type(t.sInf()));
    CHECK(conjugate(t, Permutation(d)) == t);
    CHECK(conjugate(conjugate(t, tau), tau.inverse()) == t);
    // group action: conjugate by tau then rho equals conjugate by tau*rho
    auto rho = random_perm(d, rng);
    CHECK(conjugate(conjugate(t, tau), rho) == conjugate(t, tau * rho));
  }
}

TEST_CASE("canonical form: idempotent, class function, matches brute force") {
  std::mt19937 rng(11);
  for (int it = 0; it < 120; ++it) {
    int d = 1 + (int)(rng() % 6);
    auto t = PermutationTriple::from_two(random_perm(d, rng), random_perm(d, rng));
    auto c = canonical_form(t);
    CHECK(canonical_form(c) == c);
    auto tau = random_perm(d, rng);
    CHECK(canonical_form(conjugate(t, tau)) == c);
    // brute force agrees with the backtracking search
    CHECK(canonical_form_brute(t) == canonical_form(t, /*brute_limit=*/0));
  }
}

TEST_CASE("canonical form of the degree-3 triple") {
  auto t = PermutationTriple::from_two(P("(1 2)", 3), P("(2 3)", 3));
  auto c = canonical_form(t);
  // brute-force oracle: scan all 6 conjugates, take the lex-least key
  auto cb = canonical_form_brute(t);
  CHECK(c == cb);
  CHECK(cycle_type(c.s0()) == CycleType({2, 1}));
  CHECK(cycle_type(c.s1()) == CycleType({2, 1}));
}

TEST_CASE("automorphisms") {
  auto t3 = PermutationTriple::from_two(P("(1 2)", 3), P("(2 3)", 3));
  auto a3 = automorphisms(t3);
  REQUIRE(a3.size() == 1);
  CHECK(a3[0].is_identity());

  auto t2 = PermutationTriple::from_two(P("(1 2)", 2), P("(1 2)", 2));
  CHECK(automorphisms(t2).size() == 2);
}

TEST_CASE("automorphism count divides degree for transitive triples (d <= 5)") {
  for (int d = 1; d <= 5; ++d) {
    auto perms = all_perms(d);
    for (const auto& s0 : perms)
      for (const auto& s1 : perms) {
        auto t = PermutationTriple::from_two(s0, s1);
        if (!is_transitive(t)) continue;
        auto a = automorphisms(t);
        CHECK(d % (int)a.size() == 0);
      }
  }
}

TEST_CASE("orbit-stabilizer: |Aut| * |orbit| = d! for d <= 5") {
  std::mt19937 rng(23);
  for (int d = 1; d <= 5; ++d) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), d);
    auto perms = all_perms(d);
    for (int it = 0; it < 40; ++it) {
      auto t = PermutationTriple::from_two(random_perm(d, rng), random_perm(d, rng));
      std::set<PermutationTriple> orbit;
      for (const auto& tau : perms) orbit.insert(conjugate(t, tau));
      mpz_class prod = mpz_class((long)automorphisms(t).size()) * (long)orbit.size();
      CHECK(prod == fact);
    }
  }
}

TEST_CASE("group order examples") {
  auto t3 = PermutationTriple::from_two(P("(1 2)", 3), P("(2 3)", 3));
  CHECK(group_order(t3) == 6);

  auto t7 = PermutationTriple(P("(1 2)(3 4)(6 7)", 7), P("(1 2 3)(4 5 6)", 7),
                              P("(1 4 7 6 5 3)", 7));
  CHECK(group_order(t7) == 42);

  // degree-8 pair generating PGL_2(F_7), order 336
  auto t8 = PermutationTriple::from_two(P("(2 7)(3 6)(4 5)", 8), P("(1 2 8)(3 7 5)", 8));
  CHECK(cycle_type(t8.sInf()) == CycleType({8}));
  CHECK(group_order(t8) == 336);

  // full symmetric group at degree 13 (stress for the stabilizer chain)
  auto big = PermutationTriple::from_two(P("(1 2)", 13), P("(1 2 3 4 5 6 7 8 9 10 11 12 13)", 13));
  mpz_class f13;
  mpz_fac_ui(f13.get_mpz_t(), 13);
  CHECK(group_order(big) == f13);

  CHECK_THROWS(group_order(big, /*degree_cap=*/5));
}

TEST_CASE("group order divisibility properties") {
  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it) {
    int d = 2 + (int)(rng() % 5);
    auto t = PermutationTriple::from_two(random_perm(d, rng), random_perm(d, rng));
    mpz_class g = group_order(t);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), d);
    CHECK(g <= fact);
    CHECK(fact % g == 0);
    CHECK(g % t.s0().order() == 0);
    CHECK(g % t.s1().order() == 0);
    CHECK(g % t.sInf().order() == 0);
  }
}

TEST_CASE("passport examples") {
  auto t3 = PermutationTriple::from_two(P("(1 2)", 3), P("(2 3)", 3));
  auto p3 = passport_of(t3);
  CHECK(p3.genus == 0);
  CHECK(p3.group_order == 6);
  CHECK(p3.transitive);
  CHECK(p3.c0 == CycleType({2, 1}));
  CHECK(p3.c1 == CycleType({2, 1}));
  CHECK(p3.cInf == CycleType({3}));
  CHECK(p3.group_tag == "S_3");

  // degree-8 example: relabeled action of PGL_2(F_7) on P^1(F_7)
  auto t8 = PermutationTriple::from_two(P("(2 7)(3 6)(4 5)", 8), P("(1 2 8)(3 7 5)", 8));
  auto p8 = passport_of(t8);
  CHECK(p8.genus == 0);
  CHECK(p8.group_order == 336);
  CHECK(p8.transitive);
  CHECK(p8.c0 == CycleType::parse("2^3 1^2"));
  CHECK(p8.c1 == CycleType::parse("3^2 1^2"));
  CHECK(p8.cInf == CycleType::parse("8^1"));

  auto t1 = PermutationTriple::from_two(Permutation(1), Permutation(1));
  auto p1 = passport_of(t1);
  CHECK(p1.genus == 0);
  CHECK(p1.group_order == 1);
  CHECK(p1.transitive);
  CHECK(p1.c0 == CycleType({1}));
}

TEST_CASE("excess sum is even for valid triples") {
  std::mt19937 rng(31);
  for (int it = 0; it < 300; ++it) {
    int d = 1 + (int)(rng() % 8);
    auto t = PermutationTriple::from_two(random_perm(d, rng), random_perm(d, rng));
    int e = cycle_type(t.s0()).excess() + cycle_type(t.s1()).excess() +
            cycle_type(t.sInf()).excess();
    CHECK(e % 2 == 0);
  }
}

TEST_CASE("genus nonnegative for transitive triples up to degree 7") {
  std::mt19937 rng(41);
  for (int it = 0; it < 2000; ++it) {
    int d = 1 + (int)(rng() % 7);
    auto t = PermutationTriple::from_two(random_perm(d, rng), random_perm(d, rng));
    if (!is_transitive(t)) continue;
    CHECK(genus_of_triple(t) >= 0);
  }
}
