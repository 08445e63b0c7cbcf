#include "wesym/invring.hpp"

#include <algorithm>

#include "wesym/code.hpp"
#include "wesym/error.hpp"

namespace wesym {

HomPoly InvariantDecomposition::reconstruct() const {
  std::size_t n = 0;
  if (!terms.empty()) n = terms.front().a * f1.degree() + terms.front().b * f2.degree();
  HomPoly out(std::vector<mpq_class>(n + 1, 0));
  for (const auto& t : terms) {
    out = out + product(power(f1, t.a), power(f2, t.b)) * t.coeff;
  }
  return out;
}

std::pair<HomPoly, HomPoly> gleason_generators() {
  return {HomPoly(weight_enumerator(named_code("hamming8"))),
          HomPoly(weight_enumerator(named_code("golay24")))};
}

std::pair<HomPoly, HomPoly> dihedral_generators(unsigned i) {
  if (i == 0 || i > 30) throw Error(Errc::InvalidArgument, "dihedral generator index out of range");
  const std::size_t h = std::size_t{1} << i;
  std::vector<mpq_class> a(h + 1, 0), b(2 * h + 1, 0);
  a[0] = a[h] = 1;
  b[0] = b[2 * h] = 1;
  b[h] = 2 * (2 * mpz_class(h) - 1);
  return {HomPoly(std::move(a)), HomPoly(std::move(b))};
}

std::vector<std::pair<unsigned, unsigned>> exponent_pairs(std::size_t n, std::size_t d1,
                                                          std::size_t d2) {
  if (d1 == 0 || d2 == 0) throw Error(Errc::InvalidArgument, "generators must have positive degree");
  std::vector<std::pair<unsigned, unsigned>> out;
  for (std::size_t a = 0; a * d1 <= n; ++a) {
    if ((n - a * d1) % d2 == 0) {
      out.emplace_back(static_cast<unsigned>(a), static_cast<unsigned>((n - a * d1) / d2));
    }
  }
  return out;
}

std::optional<InvariantDecomposition> decompose(const HomPoly& p, const HomPoly& f1,
                                                const HomPoly& f2) {
  const std::size_t n = p.degree();
  const auto pairs = exponent_pairs(n, f1.degree(), f2.degree());
  if (pairs.empty()) {
    throw Error(Errc::DegreeMismatch, "degree " + std::to_string(n) + " not reachable from degrees " +
                                          std::to_string(f1.degree()) + " and " +
                                          std::to_string(f2.degree()));
  }
  const std::size_t cols = pairs.size();
  // Augmented system: rows are monomials x^(n-i) y^i, last column is p.
  std::vector<std::vector<mpq_class>> M(n + 1, std::vector<mpq_class>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    const HomPoly g = product(power(f1, pairs[j].first), power(f2, pairs[j].second));
    for (std::size_t i = 0; i <= n; ++i) M[i][j] = g[i];
  }
  for (std::size_t i = 0; i <= n; ++i) M[i][cols] = p[i];

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row <= n; ++c) {
    std::size_t r = row;
    while (r <= n && M[r][c] == 0) ++r;
    if (r > n) continue;
    std::swap(M[r], M[row]);
    const mpq_class inv = 1 / M[row][c];
    for (std::size_t k = c; k <= cols; ++k) M[row][k] *= inv;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == row || M[i][c] == 0) continue;
      const mpq_class f = M[i][c];
      for (std::size_t k = c; k <= cols; ++k) M[i][k] -= f * M[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i <= n; ++i) {
    if (M[i][cols] != 0) return std::nullopt;
  }

  InvariantDecomposition d;
  d.f1 = f1;
  d.f2 = f2;
  d.unique = pivots.size() == cols;
  std::vector<mpq_class> x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = M[r][cols];
  for (std::size_t j = 0; j < cols; ++j) {
    if (x[j] != 0) d.terms.push_back({pairs[j].first, pairs[j].second, x[j]});
  }
  return d;
}

NumericDecomposition rm4_11_decomposition(mpfr_prec_t prec) {
  const BigFloat zero(prec);
  const BigFloat s = sqrt(BigFloat(15.0L, prec));
  auto re = [&](long double v) { return BigComplex(BigFloat(v, prec), zero); };
  const BigComplex is(zero, s);
  // f1 coefficients, then f1^2 by convolution.
  const std::vector<BigComplex> f1{re(2), re(3) + is, re(3) - is};
  std::vector<BigComplex> g1(5, re(0));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) g1[i + j] += f1[i] * f1[j];
  }
  const std::vector<BigComplex> g2{re(53), re(-36), re(-18), re(636), re(213)};
  const std::vector<BigComplex> w{re(1), re(0), re(0), re(12), re(3)};

  // Normal equations G^H G [alpha beta]^T = G^H w.
  BigComplex a11 = re(0), a12 = re(0), a22 = re(0), b1 = re(0), b2 = re(0);
  for (std::size_t i = 0; i < 5; ++i) {
    a11 += g1[i].conj() * g1[i];
    a12 += g1[i].conj() * g2[i];
    a22 += g2[i].conj() * g2[i];
    b1 += g1[i].conj() * w[i];
    b2 += g2[i].conj() * w[i];
  }
  const BigComplex a21 = a12.conj();
  const BigComplex det = a11 * a22 - a12 * a21;
  NumericDecomposition out{(b1 * a22 - a12 * b2) / det, (a11 * b2 - a21 * b1) / det, zero};
  BigFloat worst(prec);
  for (std::size_t i = 0; i < 5; ++i) {
    worst = max(worst, (w[i] - out.alpha * g1[i] - out.beta * g2[i]).abs());
  }
  out.residual = worst / BigFloat(12.0L, prec);
  return out;
}

}  // namespace wesym
