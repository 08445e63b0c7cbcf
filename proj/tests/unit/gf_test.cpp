#include <cmath>

#include <gtest/gtest.h>

#include "wesym/error.hpp"
#include "wesym/gf.hpp"

using namespace wesym;

namespace {

// Schoolbook arithmetic on digit vectors modulo the field's own modulus; an
// oracle independent of the lookup tables.
struct SlowField {
  unsigned p, v;
  std::vector<unsigned> mod;

  std::vector<unsigned> digits(unsigned e) const {
    std::vector<unsigned> d(v);
    for (auto& x : d) {
      x = e % p;
      e /= p;
    }
    return d;
  }
  unsigned index(const std::vector<unsigned>& d) const {
    unsigned e = 0;
    for (std::size_t i = d.size(); i-- > 0;) e = e * p + d[i];
    return e;
  }
  unsigned add(unsigned a, unsigned b) const {
    auto x = digits(a), y = digits(b);
    for (unsigned i = 0; i < v; ++i) x[i] = (x[i] + y[i]) % p;
    return index(x);
  }
  unsigned mul(unsigned a, unsigned b) const {
    auto x = digits(a), y = digits(b);
    std::vector<unsigned> prod(2 * v, 0);
    for (unsigned i = 0; i < v; ++i) {
      for (unsigned j = 0; j < v; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    }
    for (std::size_t d = prod.size(); d-- > v;) {
      const unsigned c = prod[d];
      if (c == 0) continue;
      for (unsigned t = 0; t <= v; ++t) prod[d - v + t] = (prod[d - v + t] + p * p - c * mod[t]) % p;
    }
    prod.resize(v);
    return index(prod);
  }
};

}  // namespace

class FieldAxioms : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(FieldAxioms, TablesMatchSchoolbookArithmetic) {
  const auto [p, v] = GetParam();
  const Field F(p, v);
  ASSERT_EQ(F.q(), static_cast<unsigned>(std::pow(p, v)));
  SlowField S{p, v, F.modulus()};
  if (v == 1) S.mod = {0, 1};  // reduction never triggers
  for (unsigned a = 0; a < F.q(); ++a) {
    for (unsigned b = 0; b < F.q(); ++b) {
      ASSERT_EQ(F.add(a, b), S.add(a, b)) << a << "+" << b;
      ASSERT_EQ(F.mul(a, b), S.mul(a, b)) << a << "*" << b;
    }
  }
}

TEST_P(FieldAxioms, InversesAndPowers) {
  const auto [p, v] = GetParam();
  const Field F(p, v);
  for (unsigned a = 1; a < F.q(); ++a) {
    EXPECT_EQ(F.mul(a, F.inv(a)), 1);
    EXPECT_EQ(F.add(a, F.neg(a)), 0);
    EXPECT_EQ(F.pow(a, F.q() - 1), 1);  // Fermat
    EXPECT_EQ(F.pow(a, 3), F.mul(a, F.mul(a, a)));
  }
  EXPECT_EQ(F.add(0, F.neg(0)), 0);
  EXPECT_THROW(F.inv(0), Error);
}

TEST_P(FieldAxioms, ModulusIsIrreducible) {
  const auto [p, v] = GetParam();
  const Field F(p, v);
  if (v == 1) return;
  // The multiplicative group is cyclic of order q - 1: some element has full order.
  bool found = false;
  for (unsigned a = 2; a < F.q() && !found; ++a) {
    unsigned ord = 1;
    Elem x = a;
    while (x != 1) {
      x = F.mul(x, a);
      ++ord;
    }
    found = ord == F.q() - 1;
  }
  EXPECT_TRUE(found);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u},
                                           std::pair{5u, 1u}, std::pair{7u, 1u}, std::pair{2u, 3u},
                                           std::pair{3u, 2u}, std::pair{2u, 4u}, std::pair{5u, 2u},
                                           std::pair{3u, 3u}));

TEST(Field, Gf4Encoding) {
  const Field F(2, 2);
  EXPECT_EQ(F.modulus(), (std::vector<unsigned>{1, 1, 1}));  // x^2 + x + 1
  EXPECT_EQ(F.mul(2, 2), 3);                                 // w^2 = w + 1
  EXPECT_EQ(F.add(2, 1), 3);
  EXPECT_EQ(F.basis(1), 2);
}

TEST(Field, LargeFieldUsesLogTables) {
  const Field F(2, 10);
  for (unsigned a = 1; a < F.q(); a += 37) {
    EXPECT_EQ(F.mul(a, F.inv(a)), 1);
    EXPECT_EQ(F.add(a, a), 0);
  }
  const Field G(257, 1);
  EXPECT_EQ(G.mul(256, 256), 1);
}

TEST(Field, Errors) {
  try {
    Field F(6, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPrime);
  }
  try {
    Field F(2, 17);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldTooLarge);
  }
  EXPECT_THROW(field_of_order(12), Error);
  EXPECT_EQ(field_of_order(9)->p(), 3u);
  EXPECT_EQ(field_of_order(9)->v(), 2u);
}
