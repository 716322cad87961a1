#include "belyi/reconstruct.hpp"

#include <algorithm>

#include "belyi/lll.hpp"

namespace belyi {

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
  if (m < 2) return std::nullopt;
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  mpz_class x = r1, y = t1;
  if (y == 0) return std::nullopt;
  if (y < 0) { y = -y; x = -x; }
  if (y > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  if (g != 1 && g != 0) {
    // common factor means the representative is not reduced; reject unless
    // it divides out cleanly
    x /= g;
    y /= g;
  }
  mpz_class gy;
  mpz_gcd(gy.get_mpz_t(), y.get_mpz_t(), m.get_mpz_t());
  if (gy != 1) return std::nullopt;
  // verify x = a*y mod m
  mpz_class chk = (x - a * y) % m;
  if (chk != 0) return std::nullopt;
  mpq_class res(x, y);
  res.canonicalize();
  return res;
}

namespace {

// shared lattice machinery: rows (I | C * value-coords) + modulus rows
std::optional<std::vector<mpz_class>> relation_lattice(const std::vector<PadicElem>& values,
                                                       const PadicRing& ring) {
  const size_t m = values.size();
  const int k = ring.k();
  const mpz_class& pN = ring.pN();
  const size_t cols = m + k;

  std::vector<std::vector<mpz_class>> basis;
  for (size_t i = 0; i < m; ++i) {
    std::vector<mpz_class> row(cols, 0);
    row[i] = 1;
    for (int j = 0; j < k; ++j) row[m + j] = pN * values[i].c[j];
    basis.push_back(std::move(row));
  }
  for (int j = 0; j < k; ++j) {
    std::vector<mpz_class> row(cols, 0);
    row[m + j] = pN * pN;
    basis.push_back(std::move(row));
  }
  auto reduced = lll_reduce(std::move(basis));

  // pick the shortest row with a nonzero coefficient part and zero value part
  std::optional<std::vector<mpz_class>> best;
  mpz_class best_norm = 0;
  for (const auto& row : reduced) {
    bool coeffs_nonzero = false;
    for (size_t i = 0; i < m; ++i)
      if (row[i] != 0) coeffs_nonzero = true;
    if (!coeffs_nonzero) continue;
    bool value_zero = true;
    for (int j = 0; j < k; ++j)
      if (row[m + j] != 0) value_zero = false;
    if (!value_zero) continue;
    mpz_class norm = 0;
    for (size_t i = 0; i < m; ++i) norm += row[i] * row[i];
    if (!best || norm < best_norm) {
      best = std::vector<mpz_class>(row.begin(), row.begin() + m);
      best_norm = norm;
    }
  }
  if (!best) return std::nullopt;

  // height/precision ratio test: demand the relation is overdetermined by a
  // comfortable margin, H^(m+1) * 2^(2m) <= p^N
  mpz_class H = 1;
  for (const auto& c : *best) {
    mpz_class a = abs(c);
    if (a > H) H = a;
  }
  mpz_class lhs;
  mpz_pow_ui(lhs.get_mpz_t(), H.get_mpz_t(), (unsigned long)(m + 1));
  mpz_class margin;
  mpz_ui_pow_ui(margin.get_mpz_t(), 2, 2 * (unsigned long)m);
  if (lhs * margin > pN) return std::nullopt;

  // exact check mod p^N
  PadicElem acc = ring.zero();
  for (size_t i = 0; i < m; ++i)
    acc = ring.add(acc, ring.mul(ring.from_mpz((*best)[i]), values[i]));
  if (!ring.is_zero(acc)) return std::nullopt;
  return best;
}

}  // namespace

std::optional<std::vector<mpz_class>> integer_relation(const std::vector<PadicElem>& values,
                                                       const PadicRing& ring) {
  return relation_lattice(values, ring);
}

std::optional<AlgebraicCandidate> algebraic_reconstruct(const PadicElem& a,
                                                        const PadicRing& ring,
                                                        int max_degree) {
  if (max_degree < 1) return std::nullopt;
  // powers 1, a, ..., a^max_degree
  std::vector<PadicElem> powers;
  PadicElem cur = ring.one();
  for (int i = 0; i <= max_degree; ++i) {
    powers.push_back(cur);
    cur = ring.mul(cur, a);
  }
  auto rel = relation_lattice(powers, ring);
  if (!rel) return std::nullopt;
  ZPoly poly;
  poly.c = *rel;
  poly.normalize();
  if (poly.degree() < 1) return std::nullopt;
  poly = poly.primitive_part();
  if (!is_irreducible_z(poly)) {
    // pick the irreducible factor vanishing at the designated root
    for (const auto& [f, mult] : factor_z(poly)) {
      PadicElem acc = ring.zero();
      PadicElem pw = ring.one();
      for (const auto& coeff : f.c) {
        acc = ring.add(acc, ring.mul(ring.from_mpz(coeff), pw));
        pw = ring.mul(pw, a);
      }
      if (ring.is_zero(acc)) return AlgebraicCandidate{f};
    }
    return std::nullopt;
  }
  return AlgebraicCandidate{poly};
}

std::optional<std::vector<mpq_class>> express_in_power_basis(const PadicElem& a,
                                                             const PadicElem& theta,
                                                             int field_degree,
                                                             const PadicRing& ring) {
  // relation among {a, 1, theta, ..., theta^(field_degree-1)}
  std::vector<PadicElem> values;
  values.push_back(a);
  PadicElem cur = ring.one();
  for (int i = 0; i < field_degree; ++i) {
    values.push_back(cur);
    cur = ring.mul(cur, theta);
  }
  auto rel = relation_lattice(values, ring);
  if (!rel) return std::nullopt;
  const mpz_class& ca = (*rel)[0];
  if (ca == 0) return std::nullopt;
  std::vector<mpq_class> out(field_degree);
  for (int i = 0; i < field_degree; ++i) {
    out[i] = mpq_class(-(*rel)[i + 1], ca);
    out[i].canonicalize();
  }
  return out;
}

}  // namespace belyi
