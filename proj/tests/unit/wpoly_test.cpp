#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "wesym/error.hpp"
#include "wesym/wpoly.hpp"

using namespace wesym;

namespace {

HomPoly linear(const mpq_class& a, const mpq_class& b) { return HomPoly(std::vector<mpq_class>{a, b}); }

// prod (x - r_i y)^(m_i), optionally times y^inf and x^zero.
HomPoly from_roots(const std::vector<std::pair<mpq_class, unsigned>>& roots, unsigned inf = 0,
                   unsigned zero = 0) {
  HomPoly p = HomPoly::from_ints({1});
  for (const auto& [r, m] : roots) p = product(p, power(linear(1, -r), m));
  if (inf) p = product(p, power(linear(0, 1), inf));
  if (zero) p = product(p, power(linear(1, 0), zero));
  return p;
}

}  // namespace

TEST(HomPoly, ArithmeticAndPower) {
  const HomPoly a = HomPoly::from_ints({1, 1});
  EXPECT_EQ(power(a, 3), HomPoly::from_ints({1, 3, 3, 1}));
  EXPECT_EQ(product(a, HomPoly::from_ints({1, -1})), HomPoly::from_ints({1, 0, -1}));
  EXPECT_EQ(a + a, a * mpq_class(2));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_THROW(a + HomPoly::from_ints({1, 0, 0}), Error);
  EXPECT_EQ(HomPoly::monomial(3, 1, 5), HomPoly::from_ints({0, 5, 0, 0}));
}

TEST(HomPoly, SubstitutionIsAnAction) {
  std::mt19937_64 rng(5);
  const HomPoly p = HomPoly::from_ints({1, 0, 0, 0, 14, 0, 0, 0, 1});
  for (int t = 0; t < 10; ++t) {
    const RatMatrix A = test::random_gl2(rng), B = test::random_gl2(rng);
    // ((p o A) o B)(v) = p(A B v).
    const RatMatrix AB{A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
                       A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]};
    EXPECT_EQ(substitute_exact(substitute_exact(p, A), B), substitute_exact(p, AB));
  }
  EXPECT_THROW(substitute_exact(p, {1, 2, 2, 4}), Error);
}

TEST(Multiplicity, RecoversPlantedRoots) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::pair<mpq_class, unsigned>> roots;
    std::vector<std::size_t> mults;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      mpq_class r(static_cast<long>(i * 7 + 1 + rng() % 5), 1 + static_cast<long>(rng() % 3));
      r.canonicalize();
      bool dup = false;
      for (const auto& e : roots) dup = dup || e.first == r;
      if (dup) continue;
      const unsigned m = 1 + rng() % 3;
      roots.push_back({r, m});
      mults.push_back(m);
    }
    const unsigned inf = rng() % 3, zero = rng() % 3;
    if (inf) mults.push_back(inf);
    if (zero) mults.push_back(zero);
    std::sort(mults.rbegin(), mults.rend());
    const auto ms = multiplicity_structure(from_roots(roots, inf, zero));
    EXPECT_EQ(ms.multiplicities, mults);
    EXPECT_EQ(ms.distinct_count, mults.size());
    EXPECT_EQ(ms.infinity_multiplicity, inf);
    EXPECT_EQ(ms.zero_multiplicity, zero);
    EXPECT_EQ(ms.squarefree_part.degree(), mults.size());
  }
}

TEST(Multiplicity, ExponentGcdDeflation) {
  // x^16 + 30 x^8 y^8 + y^16 = P(z^8) with P quadratic: 16 simple roots.
  const auto ms = multiplicity_structure(HomPoly::from_ints(
      {1, 0, 0, 0, 0, 0, 0, 0, 30, 0, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(ms.exponent_gcd, 8u);
  EXPECT_EQ(ms.distinct_count, 16u);
  // (x^2 + y^2)^7: two roots of multiplicity 7.
  const auto pairs = multiplicity_structure(power(HomPoly::from_ints({1, 0, 1}), 7));
  EXPECT_EQ(pairs.multiplicities, (std::vector<std::size_t>{7, 7}));
  EXPECT_THROW(multiplicity_structure(HomPoly::from_ints({0, 0})), Error);
}

TEST(SelfDual, FormallySelfDualEnumerators) {
  EXPECT_TRUE(is_formally_self_dual(make_enumerator({1, 0, 0, 0, 14, 0, 0, 0, 1}), 2));
  EXPECT_TRUE(is_formally_self_dual(make_enumerator({1, 0, 1}), 2));
  EXPECT_TRUE(is_formally_self_dual(make_enumerator({1, 0, 4}), 5));
  EXPECT_FALSE(is_formally_self_dual(make_enumerator({1, 0, 0, 0, 14, 0, 0, 0, 1}), 3));
  EXPECT_FALSE(is_formally_self_dual(make_enumerator({1, 3, 3, 1}), 2));
}

TEST(PolyIo, RoundTrip) {
  const HomPoly p(std::vector<mpq_class>{mpq_class(1, 3), 0, mpq_class(-7, 2)});
  std::stringstream s;
  write_poly(s, p);
  EXPECT_EQ(read_poly(s), p);
  std::istringstream bad("2\n1\nx\n3\n");
  EXPECT_THROW(read_poly(bad), Error);
  EXPECT_THROW(to_enumerator(p), Error);
  EXPECT_EQ(to_enumerator(HomPoly::from_ints({1, 0, 3})).coeffs, make_enumerator({1, 0, 3}).coeffs);
}
