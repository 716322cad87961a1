#include "belyi/lll.hpp"

#include <stdexcept>

namespace belyi {

namespace {

mpq_class dot_zz(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return mpq_class(s);
}

mpq_class dot_qq(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  mpq_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

mpq_class dot_zq(const std::vector<mpz_class>& a, const std::vector<mpq_class>& b) {
  mpq_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += mpq_class(a[i]) * b[i];
  return s;
}

mpz_class round_q(const mpq_class& q) {
  // nearest integer, ties toward even via floor(q + 1/2)
  mpq_class h = q + mpq_class(1, 2);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
  return fl;
}

}  // namespace

std::vector<std::vector<mpz_class>> lll_reduce(std::vector<std::vector<mpz_class>> b,
                                               std::vector<std::vector<mpz_class>>* transform) {
  const size_t n = b.size();
  if (n == 0) return b;
  const size_t dim = b[0].size();
  for (const auto& row : b)
    if (row.size() != dim) throw std::invalid_argument("lll: ragged basis");

  std::vector<std::vector<mpz_class>> U;
  if (transform) {
    U.assign(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) U[i][i] = 1;
  }

  // Gram-Schmidt data: bstar (rational vectors), mu, and |bstar|^2
  std::vector<std::vector<mpq_class>> bstar(n, std::vector<mpq_class>(dim));
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n, 0));
  std::vector<mpq_class> norm2(n, 0);

  auto gso = [&]() {
    for (size_t i = 0; i < n; ++i) {
      for (size_t d = 0; d < dim; ++d) bstar[i][d] = mpq_class(b[i][d]);
      for (size_t j = 0; j < i; ++j) {
        if (norm2[j] == 0) throw std::invalid_argument("lll: dependent rows");
        mu[i][j] = dot_zq(b[i], bstar[j]) / norm2[j];
        for (size_t d = 0; d < dim; ++d) bstar[i][d] -= mu[i][j] * bstar[j][d];
      }
      norm2[i] = dot_qq(bstar[i], bstar[i]);
      if (norm2[i] == 0) throw std::invalid_argument("lll: dependent rows");
    }
  };
  gso();

  const mpq_class delta(3, 4);
  size_t k = 1;
  while (k < n) {
    // size reduction against rows k-1..0
    for (size_t j = k; j-- > 0;) {
      mpz_class r = round_q(mu[k][j]);
      if (r != 0) {
        for (size_t d = 0; d < dim; ++d) b[k][d] -= r * b[j][d];
        if (transform)
          for (size_t d = 0; d < n; ++d) U[k][d] -= r * U[j][d];
        gso();
      }
    }
    // Lovasz condition
    if (norm2[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      if (transform) std::swap(U[k], U[k - 1]);
      gso();
      k = k > 1 ? k - 1 : 1;
    }
  }
  if (transform) *transform = std::move(U);
  return b;
}

}  // namespace belyi
