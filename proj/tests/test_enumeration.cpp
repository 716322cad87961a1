#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "belyi/charmass.hpp"
#include "belyi/enumeration.hpp"
#include "belyi/permutation.hpp"

using namespace belyi;

namespace {

// brute-force: all simultaneous-conjugacy classes with the given classes,
// by scanning all pairs in S_d x S_d
long brute_class_count(const CycleType& c0, const CycleType& c1, const CycleType& cInf,
                       bool transitive_only) {
  const int d = c0.degree();
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> all;
  do {
    all.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  std::set<PermutationTriple> classes;
  for (const auto& a : all) {
    if (cycle_type(a) != c0) continue;
    for (const auto& b : all) {
      if (cycle_type(b) != c1) continue;
      if (cycle_type(a * b) != cInf) continue;
      auto t = PermutationTriple::from_two(a, b);
      if (transitive_only && !is_transitive(t)) continue;
      classes.insert(canonical_form(t));
    }
  }
  return (long)classes.size();
}

}  // namespace

TEST_CASE("permutations_of_type counts") {
  CHECK(permutations_of_type(CycleType({2, 1})).size() == 3);
  CHECK(permutations_of_type(CycleType({5})).size() == 24);      // (d-1)!
  CHECK(permutations_of_type(CycleType({7})).size() == 720);
  CHECK(permutations_of_type(CycleType({1, 1, 1, 1})).size() == 1);
}

TEST_CASE("permutations_of_type matches class_size and emits no duplicates") {
  for (int d = 1; d <= 7; ++d) {
    for (const auto& c : partitions(d)) {
      std::set<Permutation> seen;
      long n = 0;
      for_each_permutation_of_type(c, [&](const Permutation& p) {
        ++n;
        CHECK(cycle_type(p) == c);
        CHECK(seen.insert(p).second);
        return true;
      });
      CHECK(mpz_class(n) == class_size(c));
    }
  }
}

TEST_CASE("centralizer generators really centralize, orbit sizes divide") {
  for (int d = 1; d <= 7; ++d)
    for (const auto& c : partitions(d)) {
      auto tau = fixed_representative(c);
      CHECK(cycle_type(tau) == c);
      for (const auto& g : centralizer_generators(c))
        CHECK(conjugate(tau, g) == tau);
      // the generated group has the full centralizer order
      CHECK(group_order(centralizer_generators(c)) == centralizer_order(c));
    }
}

TEST_CASE("degree-7 passport: two transitive classes of order 42") {
  auto res = triples_with_classes(CycleType::parse("2^3 1"), CycleType::parse("3^2 1"),
                                  CycleType::parse("6 1"));
  CHECK(res.stream_count == class_size(CycleType::parse("3^2 1")));
  long transitive = res.transitive_count();
  CHECK(transitive == 2);
  for (size_t i = 0; i < res.representatives.size(); ++i) {
    if (!res.transitive_flags[i]) continue;
    CHECK(res.group_orders[i] == 42);
    CHECK(res.aut_orders[i] == 1);
  }
  CHECK(passport_size(CycleType::parse("2^3 1"), CycleType::parse("3^2 1"),
                      CycleType::parse("6 1"), mpz_class(42)) == 2);
}

TEST_CASE("degree-3 passport: exactly one class") {
  auto res = triples_with_classes(CycleType({2, 1}), CycleType({2, 1}), CycleType({3}));
  REQUIRE(res.representatives.size() == 1);
  CHECK(res.transitive_flags[0]);
  CHECK(res.aut_orders[0] == 1);
  CHECK(res.group_orders[0] == 6);
}

TEST_CASE("parity obstruction yields the empty passport") {
  auto res = triples_with_classes(CycleType({2, 1}), CycleType({1, 1, 1}), CycleType({1, 1, 1}));
  CHECK(res.representatives.empty());
  CHECK(passport_size(CycleType({2, 1}), CycleType({1, 1, 1}), CycleType({1, 1, 1})) == 0);
}

TEST_CASE("representative passports match the requested classes") {
  auto c0 = CycleType::parse("2^2 1"), c1 = CycleType::parse("3 1^2"), cInf = CycleType::parse("5");
  auto res = triples_with_classes(c0, c1, cInf);
  for (const auto& t : res.representatives) {
    auto p = passport_of(t);
    CHECK(p.c0 == c0);
    CHECK(p.c1 == c1);
    CHECK(p.cInf == cInf);
  }
}

TEST_CASE("enumeration vs brute force on all class triples of degree <= 5") {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& c0 : partitions(d))
      for (const auto& c1 : partitions(d))
        for (const auto& cInf : partitions(d)) {
          auto res = triples_with_classes(c0, c1, cInf);
          CHECK((long)res.representatives.size() == brute_class_count(c0, c1, cInf, false));
          CHECK(res.transitive_count() == brute_class_count(c0, c1, cInf, true));
        }
  }
}

TEST_CASE("mass identity against frobenius_mass, degree <= 6") {
  // full degree <= 7 sweep plus random degree <= 9 cases run in acceptance
  for (int d = 2; d <= 6; ++d)
    for (const auto& c0 : partitions(d))
      for (const auto& c1 : partitions(d))
        for (const auto& cInf : partitions(d)) {
          auto res = triples_with_classes(c0, c1, cInf);
          CHECK(res.total_mass() == frobenius_mass(c0, c1, cInf));
        }
}

TEST_CASE("result independent of conjugated tau0 (representatives canonical)") {
  auto c0 = CycleType::parse("2^2 1^2"), c1 = CycleType::parse("3 2 1"), cInf = CycleType::parse("6");
  auto res = triples_with_classes(c0, c1, cInf);
  // rerunning with permuted classes ordering of same data must give identical
  // canonical representatives (determinism)
  auto res2 = triples_with_classes(c0, c1, cInf);
  REQUIRE(res.representatives.size() == res2.representatives.size());
  for (size_t i = 0; i < res.representatives.size(); ++i)
    CHECK(res.representatives[i] == res2.representatives[i]);
  // canonical forms are conjugation-invariant, so equality as sets against a
  // run where every kept pair was conjugated is implied by the class-function
  // property tested in test_perm; here we check the set has no duplicates.
  std::set<PermutationTriple> s(res.representatives.begin(), res.representatives.end());
  CHECK(s.size() == res.representatives.size());
}

TEST_CASE("degree bound examples") {
  CHECK(degree_bound(CycleType({2, 1}), CycleType({2, 1}), CycleType({3})) == 1);
  CHECK(degree_bound(CycleType::parse("2^3 1"), CycleType::parse("3^2 1"),
                     CycleType::parse("6 1")) == 2);
  // genus-1 ramification data with exactly three triples
  CHECK(degree_bound(CycleType::parse("3^2 1"), CycleType::parse("3 2^2"),
                     CycleType::parse("7")) == 3);
}

TEST_CASE("degree-8 ramification type carries four dessins") {
  auto res = triples_with_classes(CycleType::parse("2^3 1^2"), CycleType::parse("3^2 1^2"),
                                  CycleType::parse("8"));
  CHECK(res.transitive_count() == 4);
  CHECK(res.transitive_count(mpz_class(336)) == 2);
  CHECK(res.transitive_count(mpz_class(48)) == 2);
  // every triple with an 8-cycle is transitive
  CHECK(res.representatives.size() == 4);
}

TEST_CASE("budget refusal for oversized classes") {
  EnumOptions opt;
  opt.class_budget = 10;
  CHECK_THROWS(triples_with_classes(CycleType::parse("2^3 1"), CycleType::parse("3^2 1"),
                                    CycleType::parse("6 1"), opt));
  opt.degree_cap = 5;
  CHECK_THROWS(triples_with_classes(CycleType::parse("2^3 1"), CycleType::parse("3^2 1"),
                                    CycleType::parse("6 1"), opt));
}
