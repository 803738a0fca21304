#pragma once

// Computations kept independent of the library code paths they check.

#include "ecy/localmodel.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using ecy::local::Poly;

// genus of a smooth plane curve of degree d
inline long plane_genus(long d) { return (d - 1) * (d - 2) / 2; }

// genus of a C + b F on F_n with C.C = -n, C.F = 1, F.F = 0
inline long hirzebruch_genus(long n, long a, long b) { return (a - 1) * (b - 1) - n * a * (a - 1) / 2; }

// residue of a rational modulo p; p must not divide the denominator
inline std::int64_t mod_p(const ecy::Rational& q, std::int64_t p) {
  mpz_class num = q.get_num() % p, den = q.get_den() % p;
  if (num < 0) num += p;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
  mpz_class r = (num * inv) % p;
  return r.get_si();
}

// rank of a matrix over F_p
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), mpz_class(static_cast<long>(m[rank][c])).get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t());
    const std::int64_t iv = inv.get_si();
    for (auto& x : m[rank]) x = static_cast<std::int64_t>((__int128)x * iv % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::int64_t f = m[r][c];
      for (int k = 0; k < cols; ++k) {
        m[r][k] = static_cast<std::int64_t>((m[r][k] - (__int128)f * m[rank][k]) % p);
        if (m[r][k] < 0) m[r][k] += p;
      }
    }
    ++rank;
  }
  return rank;
}

// dim Q[s,t] / ((p, q) + m^N); equals the local intersection multiplicity once N exceeds it
inline int local_algebra_dim(const Poly& p, const Poly& q, int N) {
  std::vector<std::pair<int, int>> monos;
  for (int d = 0; d < N; ++d)
    for (int i = 0; i <= d; ++i) monos.push_back({i, d - i});
  auto index = [N](int ds, int dt) {
    const int d = ds + dt;
    return d * (d + 1) / 2 + ds;
  };
  int best = 0;
  for (std::int64_t prime : {1000000007LL, 998244353LL}) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const Poly* gen : {&p, &q})
      for (const auto& [a, b] : monos) {
        std::vector<std::int64_t> row(monos.size(), 0);
        for (const auto& [key, c] : gen->terms()) {
          const int ds = key.first + a, dt = key.second + b;
          if (ds + dt >= N) continue;
          row[index(ds, dt)] = (row[index(ds, dt)] + mod_p(c, prime)) % prime;
        }
        rows.push_back(std::move(row));
      }
    best = std::max(best, rank_mod_p(rows, prime));
  }
  return static_cast<int>(monos.size()) - best;
}

// random polynomial with entries in [-5, 5], nonzero constant term and nonzero t^deg_t term
inline Poly random_unit(std::mt19937& rng, int deg_s, int deg_t, std::optional<int> truncation = std::nullopt) {
  std::uniform_int_distribution<int> d(-5, 5);
  Poly p = Poly::zero(truncation);
  for (int i = 0; i <= deg_s; ++i)
    for (int j = 0; j <= deg_t; ++j) {
      int c = d(rng);
      if (i == 0 && (j == 0 || j == deg_t) && c == 0) c = 1;
      p += Poly::monomial(c, i, j, truncation);
    }
  return p;
}

inline Poly random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> d(-5, 5);
  Poly p;
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; j + i <= deg; ++j) p += Poly::monomial(d(rng), i, j);
  return p;
}

}  // namespace oracle
