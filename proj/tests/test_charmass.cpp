#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "belyi/charmass.hpp"
#include "belyi/permutation.hpp"

using namespace belyi;

namespace {

// Independent dimension oracle: product of hook lengths.
mpz_class hook_dimension(const CycleType& lam) {
  const auto& p = lam.parts();
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), lam.degree());
  mpz_class den = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      int arm = p[i] - j - 1;
      int leg = 0;
      for (size_t k = i + 1; k < p.size(); ++k)
        if (p[k] > j) ++leg;
      den *= arm + leg + 1;
    }
  }
  return num / den;
}

// brute-force class size by scanning S_d
long brute_class_size(const CycleType& c) {
  int d = c.degree();
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 0);
  long n = 0;
  do {
    if (cycle_type(Permutation(img)) == c) ++n;
  } while (std::next_permutation(img.begin(), img.end()));
  return n;
}

}  // namespace

TEST_CASE("partition lists") {
  auto p1 = partitions(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0] == CycleType({1}));
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(13).size() == 101);
  // reverse-lexicographic: (d) first, (1^d) last
  auto p5 = partitions(5);
  CHECK(p5.front() == CycleType({5}));
  CHECK(p5.back() == CycleType({1, 1, 1, 1, 1}));
  CHECK_THROWS(partitions(31));
}

TEST_CASE("partition function cross-check (pentagonal recurrence)") {
  for (int d = 1; d <= 14; ++d)
    CHECK(mpz_class((long)partitions(d).size()) == partition_count(d));
  CHECK(partition_count(13) == 101);
  CHECK(partition_count(20) == 627);
}

TEST_CASE("class sizes") {
  CHECK(class_size(CycleType({1, 1, 1})) == 1);
  CHECK(class_size(CycleType({2, 1})) == 3);
  CHECK(class_size(CycleType::parse("3^2 2^3 1^1")) == 7207200);  // d = 13
  for (int d = 2; d <= 7; ++d)
    for (const auto& c : partitions(d))
      CHECK(class_size(c) == brute_class_size(c));
}

TEST_CASE("trivial and sign characters") {
  for (int d = 1; d <= 9; ++d) {
    CycleType triv({d});
    std::vector<int> ones(d, 1);
    CycleType sgn(ones);
    for (const auto& mu : partitions(d)) {
      CHECK(character_value(triv, mu) == 1);
      CHECK(character_value(sgn, mu) == mu.sign());
    }
  }
}

TEST_CASE("standard representation of S_3 as oracle") {
  // 2x2 matrices for the standard rep: traces give chi_(2,1).
  // chi(1^3) = 2, chi(2,1) = 0, chi(3) = -1.
  CycleType lam({2, 1});
  CHECK(character_value(lam, CycleType({1, 1, 1})) == 2);
  CHECK(character_value(lam, CycleType({2, 1})) == 0);
  CHECK(character_value(lam, CycleType({3})) == -1);
}

TEST_CASE("dimensions match the hook-length oracle") {
  for (int d = 1; d <= 13; ++d) {
    std::vector<int> ones(d, 1);
    CycleType id_class(ones);
    for (const auto& lam : partitions(d)) {
      mpz_class dim = character_dimension(lam);
      CHECK(dim == hook_dimension(lam));
      CHECK(mpz_class(character_value(lam, id_class)) == dim);
    }
  }
}

TEST_CASE("column orthogonality up to d = 8") {
  // full d <= 10 sweep lives in the acceptance suite
  for (int d = 2; d <= 8; ++d) {
    auto parts = partitions(d);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), d);
    for (const auto& mu : parts) {
      for (const auto& nu : parts) {
        mpz_class s = 0;
        for (const auto& lam : parts)
          s += mpz_class(character_value(lam, mu)) * character_value(lam, nu);
        if (mu == nu)
          CHECK(s == fact / class_size(mu));
        else
          CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("frobenius mass examples") {
  // d=2: single triple ((12),(12),e) with centralizer of order 2
  CHECK(frobenius_mass(CycleType({2}), CycleType({2}), CycleType({1, 1})) == mpq_class(1, 2));
  // d=3
  CHECK(frobenius_mass(CycleType({2, 1}), CycleType({2, 1}), CycleType({3})) == 1);
  // mass of the degree-12 data equals 567 1/4
  CHECK(frobenius_mass(CycleType::parse("3^2 2^3"), CycleType::parse("5 4 2 1"),
                       CycleType::parse("6 4 2")) == mpq_class(2269, 4));
  // the degree-13 fixed-point completion has a different (larger) mass
  CHECK(frobenius_mass(CycleType::parse("3^2 2^3 1^1"), CycleType::parse("5 4 2 1^2"),
                       CycleType::parse("6 4 2 1")) == mpq_class(7187, 2));
}

TEST_CASE("frobenius mass is symmetric in its three arguments") {
  auto a = CycleType::parse("2^2 1^2"), b = CycleType::parse("3 2 1"), c = CycleType::parse("4 1^2");
  auto m = frobenius_mass(a, b, c);
  CHECK(frobenius_mass(a, c, b) == m);
  CHECK(frobenius_mass(b, a, c) == m);
  CHECK(frobenius_mass(c, b, a) == m);
  CHECK(frobenius_mass(b, c, a) == m);
}

TEST_CASE("character column slice") {
  auto col = character_column(CycleType({2, 1}));
  REQUIRE(col.lambdas.size() == 3);
  REQUIRE(col.values.size() == 3);
  CHECK(col.degree == 3);
  // order matches partitions(3): (3), (2,1), (1,1,1)
  CHECK(col.values[0] == 1);
  CHECK(col.values[1] == 0);
  CHECK(col.values[2] == -1);
}
