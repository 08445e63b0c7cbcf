#pragma once

#include <random>

#include <gmpxx.h>

#include "wesym/code.hpp"
#include "wesym/wpoly.hpp"

namespace wesym::test {

// Random code of dimension at most k (dependent rows are dropped).
inline LinearCode random_code(std::mt19937_64& rng, unsigned q, std::size_t k, std::size_t n) {
  const FieldPtr F = field_of_order(q);
  std::vector<Row> rows(k, Row(n));
  for (auto& r : rows) {
    for (auto& e : r) e = static_cast<Elem>(rng() % q);
  }
  row_reduce(*F, rows);
  if (rows.empty()) {
    rows.assign(1, Row(n, 0));
    rows[0][0] = 1;
  }
  return LinearCode(F, n, rows);
}

// Counts weights of every message combination directly.
inline WeightEnumerator naive_enumerator(const LinearCode& c) {
  const Field& F = c.F();
  const std::size_t n = c.n(), k = c.k();
  WeightEnumerator w;
  w.coeffs.assign(n + 1, 0);
  std::vector<unsigned> msg(k, 0);
  for (;;) {
    std::size_t wt = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Elem s = 0;
      for (std::size_t i = 0; i < k; ++i) s = F.add(s, F.mul(static_cast<Elem>(msg[i]), c.gen()[i][j]));
      wt += s != 0;
    }
    ++w.coeffs[wt];
    std::size_t i = 0;
    while (i < k && ++msg[i] == F.q()) msg[i++] = 0;
    if (i == k) break;
  }
  return w;
}

inline mpq_class random_rational(std::mt19937_64& rng, int span = 5) {
  mpq_class r(static_cast<long>(rng() % (2 * span + 1)) - span, 1 + static_cast<long>(rng() % 4));
  r.canonicalize();
  return r;
}

// Random invertible rational 2x2 matrix.
inline RatMatrix random_gl2(std::mt19937_64& rng) {
  for (;;) {
    RatMatrix m{random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
    if (m[0] * m[3] - m[1] * m[2] != 0) return m;
  }
}

}  // namespace wesym::test
