#ifndef BELYI_PERMUTATION_HPP
#define BELYI_PERMUTATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace belyi {

/*
 * Permutations act on the right and products read left to right:
 * (a * b) means "apply a, then b", i.e. i^(a*b) = (i^a)^b.  This convention
 * is fixed once for the whole project; every stored triple is valid under it.
 *
 * Points are 0-based internally.  All text/JSON interfaces use 1-based
 * points to match the usual cycle notation.
 */
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int degree);                  // identity
  explicit Permutation(std::vector<int> images);     // 0-based image table

  static Permutation identity(int degree) { return Permutation(degree); }

  // Parses cycle notation with 1-based points, e.g. "(1 2)(3 4)" or "e".
  // Commas inside cycles are accepted: "(1,2)(3,4)".
  static Permutation from_cycles(const std::string& s, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[i]; }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;
  int order() const;  // lcm of cycle lengths

  std::vector<std::vector<int>> cycles() const;      // all cycles incl. fixed pts
  std::string to_cycle_string() const;               // 1-based, "e" for identity

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
  std::vector<int> img_;
};

// i^(tau^-1 sigma tau)
Permutation conjugate(const Permutation& sigma, const Permutation& tau);

/// Weakly decreasing multiset of cycle lengths; a partition of the degree.
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);  // sorted internally

  static CycleType of(const Permutation& p);

  // Parses the exponential notation "3^2 2^1 1^2" (exponent 1 may be
  // omitted: "6 1" means 6^1 1^1).
  static CycleType parse(const std::string& s);

  int degree() const { return degree_; }
  const std::vector<int>& parts() const { return parts_; }
  size_t count() const { return parts_.size(); }
  int excess() const { return degree_ - static_cast<int>(parts_.size()); }
  int sign() const { return excess() % 2 == 0 ? 1 : -1; }

  // multiplicity of a given part length
  int multiplicity(int len) const;

  std::string to_string() const;  // exponential notation

  bool operator==(const CycleType& o) const { return parts_ == o.parts_; }
  bool operator!=(const CycleType& o) const { return parts_ != o.parts_; }
  bool operator<(const CycleType& o) const { return parts_ < o.parts_; }

private:
  std::vector<int> parts_;  // weakly decreasing
  int degree_ = 0;
};

inline int excess(const CycleType& c) { return c.excess(); }
CycleType cycle_type(const Permutation& p);

/// (sigma0, sigma1, sigmaInf) with sigma0*sigma1*sigmaInf = identity.
class PermutationTriple {
public:
  PermutationTriple() = default;
  PermutationTriple(Permutation s0, Permutation s1, Permutation sInf);

  // Completes sigmaInf = (sigma0*sigma1)^-1.
  static PermutationTriple from_two(const Permutation& s0, const Permutation& s1);

  int degree() const { return s0_.degree(); }
  const Permutation& s0() const { return s0_; }
  const Permutation& s1() const { return s1_; }
  const Permutation& sInf() const { return sInf_; }
  const Permutation& sigma(int i) const;  // 0,1,2 -> s0,s1,sInf

  bool operator==(const PermutationTriple& o) const {
    return s0_ == o.s0_ && s1_ == o.s1_;
  }
  bool operator<(const PermutationTriple& o) const;

private:
  Permutation s0_, s1_, sInf_;
};

struct Passport {
  int genus = 0;
  mpz_class group_order;
  std::string group_tag;  // optional human label
  bool transitive = false;
  CycleType c0, c1, cInf;

  bool operator==(const Passport& o) const {
    return genus == o.genus && group_order == o.group_order &&
           transitive == o.transitive && c0 == o.c0 && c1 == o.c1 && cInf == o.cInf;
  }
};

// Euler characteristic bookkeeping, eq. of Riemann-Hurwitz on three fibers:
// g = 1 - d + (e0+e1+eInf)/2.  Throws if the excess sum is odd, or if the
// result is negative for a transitive triple (both signal corrupted input).
int genus_of_triple(const PermutationTriple& t);
int genus_of_types(const CycleType& c0, const CycleType& c1, const CycleType& cInf);

bool is_transitive(const PermutationTriple& t);

PermutationTriple conjugate(const PermutationTriple& t, const Permutation& tau);

// Distinguished representative of the simultaneous-conjugacy class: the
// lexicographically least triple, comparing concatenated image sequences of
// sigma0 then sigma1 over all conjugators.  Brute force scans all d!
// conjugators for d <= brute_limit; above that a backtracking minimal-image
// search is used.  Both agree wherever both run.
PermutationTriple canonical_form(const PermutationTriple& t, int brute_limit = 9);
PermutationTriple canonical_form_brute(const PermutationTriple& t);

// All tau commuting with both sigma0 and sigma1 (the centralizer of the
// monodromy group in S_d).  Contains the identity; for transitive triples
// the count divides d.
std::vector<Permutation> automorphisms(const PermutationTriple& t);

// Order of <sigma0, sigma1> via a stabilizer chain.  Exact.
mpz_class group_order(const std::vector<Permutation>& gens, int degree_cap = 32);
mpz_class group_order(const PermutationTriple& t, int degree_cap = 32);

Passport passport_of(const PermutationTriple& t);

// Orbit partition of {0..d-1} under a generator set.
std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, int degree);

}  // namespace belyi

#endif
