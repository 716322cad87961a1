#include "belyi/charmass.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace belyi {

std::vector<CycleType> partitions(int d, int cap) {
  if (d < 1) throw std::invalid_argument("partitions: d must be positive");
  if (d > cap) throw std::invalid_argument("partitions: d exceeds configured cap");
  std::vector<CycleType> out;
  std::vector<int> cur;
  // reverse-lexicographic: largest first part first
  auto rec = [&](auto&& self, int rest, int maxp) -> void {
    if (rest == 0) { out.emplace_back(cur); return; }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

mpz_class partition_count(int d) {
  // Euler's pentagonal number recurrence.
  std::vector<mpz_class> p(d + 1);
  p[0] = 1;
  for (int n = 1; n <= d; ++n) {
    mpz_class s = 0;
    for (int k = 1;; ++k) {
      long g1 = (long)k * (3 * k - 1) / 2;
      long g2 = (long)k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      int sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= n) s += sign * p[n - g1];
      if (g2 <= n) s += sign * p[n - g2];
    }
    p[n] = s;
  }
  return p[d];
}

mpz_class centralizer_order(const CycleType& c) {
  mpz_class z = 1;
  const auto& parts = c.parts();
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    long m = static_cast<long>(j - i);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), parts[i], m);
    mpz_class mf;
    mpz_fac_ui(mf.get_mpz_t(), m);
    z *= pw * mf;
    i = j;
  }
  return z;
}

mpz_class class_size(const CycleType& c) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), c.degree());
  return fact / centralizer_order(c);
}

namespace {

// Murnaghan-Nakayama on beta-numbers (first-column hook lengths).  Removing
// a border strip of length r is subtracting r from a beta-number, legal when
// the result is a fresh nonnegative value; the sign is (-1)^(number of
// beta-numbers jumped over).
long mn_recurse(std::vector<int> beta, const std::vector<int>& mu, size_t k,
                std::map<std::pair<std::vector<int>, size_t>, long>& memo) {
  std::sort(beta.begin(), beta.end());
  if (k == mu.size()) return 1;  // empty partition remains
  auto key = std::make_pair(beta, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int r = mu[k];
  long total = 0;
  for (size_t bi = 0; bi < beta.size(); ++bi) {
    int nb = beta[bi] - r;
    if (nb < 0) continue;
    bool clash = false;
    int jumped = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
      if (j == bi) continue;
      if (beta[j] == nb) { clash = true; break; }
      if (nb < beta[j] && beta[j] < beta[bi]) ++jumped;
    }
    if (clash) continue;
    std::vector<int> nbeta = beta;
    nbeta[bi] = nb;
    long sub = mn_recurse(std::move(nbeta), mu, k + 1, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace

long character_value(const CycleType& lambda, const CycleType& mu) {
  if (lambda.degree() != mu.degree())
    throw std::invalid_argument("character_value: partitions of different degrees");
  const auto& lp = lambda.parts();
  const size_t n = lp.size();
  std::vector<int> beta(n);
  for (size_t i = 0; i < n; ++i)
    beta[i] = lp[i] + static_cast<int>(n - 1 - i);
  std::map<std::pair<std::vector<int>, size_t>, long> memo;
  return mn_recurse(std::move(beta), mu.parts(), 0, memo);
}

mpz_class character_dimension(const CycleType& lambda) {
  // hookless route: chi_lambda at the identity class via MN would recurse
  // d levels; use the determinant-free beta-number product formula
  //   dim = d! * prod_{i<j}(beta_i - beta_j) / prod_i beta_i!
  const auto& lp = lambda.parts();
  const size_t n = lp.size();
  std::vector<long> beta(n);
  for (size_t i = 0; i < n; ++i) beta[i] = lp[i] + static_cast<long>(n - 1 - i);
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), lambda.degree());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) num *= beta[i] - beta[j];
  mpz_class den = 1;
  for (size_t i = 0; i < n; ++i) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), beta[i]);
    den *= f;
  }
  mpz_class dim = num / den;
  return dim;
}

CharacterTableSlice character_column(const CycleType& mu) {
  CharacterTableSlice slice;
  slice.degree = mu.degree();
  slice.lambdas = partitions(mu.degree());
  slice.values.reserve(slice.lambdas.size());
  for (const auto& lam : slice.lambdas) slice.values.push_back(character_value(lam, mu));
  return slice;
}

mpq_class frobenius_mass(const CycleType& c0, const CycleType& c1, const CycleType& cInf,
                         int cap) {
  if (c0.degree() != c1.degree() || c0.degree() != cInf.degree())
    throw std::invalid_argument("frobenius_mass: classes of different degrees");
  const int d = c0.degree();
  if (d > cap) throw std::invalid_argument("frobenius_mass: degree exceeds cap");
  mpq_class sum = 0;
  for (const auto& lam : partitions(d, cap)) {
    long v0 = character_value(lam, c0);
    if (v0 == 0) continue;
    long v1 = character_value(lam, c1);
    if (v1 == 0) continue;
    long vinf = character_value(lam, cInf);
    if (vinf == 0) continue;
    mpq_class term(mpz_class(v0) * v1 * vinf, character_dimension(lam));
    term.canonicalize();
    sum += term;
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), d);
  mpq_class front(class_size(c0) * class_size(c1) * class_size(cInf), fact * fact);
  front.canonicalize();
  mpq_class res = front * sum;
  res.canonicalize();
  return res;
}

}  // namespace belyi
