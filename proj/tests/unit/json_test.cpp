#include <gtest/gtest.h>

#include "json_io.hpp"
#include "wesym/error.hpp"

using namespace wesym;
namespace wj = wesym::json;

TEST(JsonIo, EnumeratorWithBigCoefficients) {
  WeightEnumerator w = make_enumerator({1, 0, 5});
  w.coeffs[1] = mpz_class("123456789012345678901234567890");
  const auto j = wj::to_json(w);
  EXPECT_TRUE(j.dump().find("123456789012345678901234567890") != std::string::npos);
  EXPECT_EQ(wj::enumerator_from_json(j), w);
  // Survives a text round trip too.
  EXPECT_EQ(wj::enumerator_from_json(nlohmann::json::parse(j.dump())), w);
}

TEST(JsonIo, RationalPolynomial) {
  const HomPoly p(std::vector<mpq_class>{mpq_class(1, 3), 0, mpq_class(-7, 2)});
  EXPECT_EQ(wj::poly_from_json(nlohmann::json::parse(wj::to_json(p).dump())), p);
}

TEST(JsonIo, FiniteGroupIsBitExact) {
  const HomPoly w(weight_enumerator(named_code("golay12_ternary")));
  const SymmetryGroup g = symmetry_group(w, 3u);
  const SymmetryGroup back = wj::group_from_json(nlohmann::json::parse(wj::to_json(g).dump()));
  EXPECT_EQ(back.kind, g.kind);
  EXPECT_EQ(back.iso, g.iso);
  EXPECT_EQ(back.proj_order, g.proj_order);
  EXPECT_EQ(back.full_order, g.full_order);
  EXPECT_EQ(back.degree, g.degree);
  ASSERT_EQ(back.elements.size(), g.elements.size());
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    EXPECT_EQ(back.elements[i].order, g.elements[i].order);
    for (int e = 0; e < 4; ++e) {
      EXPECT_EQ(back.elements[i].proj[e].re(), g.elements[i].proj[e].re());
      EXPECT_EQ(back.elements[i].proj[e].im(), g.elements[i].proj[e].im());
    }
    EXPECT_EQ(back.elements[i].lambda.re(), g.elements[i].lambda.re());
  }
}

TEST(JsonIo, InfiniteGroup) {
  const SymmetryGroup g = symmetry_group(HomPoly::from_ints({1, 0, 1}), 2u);
  const SymmetryGroup back = wj::group_from_json(wj::to_json(g));
  EXPECT_EQ(back.kind, GroupKind::Infinite);
  EXPECT_EQ(back.infinite_case, g.infinite_case);
}

TEST(JsonIo, DecompositionAndReport) {
  const auto [f1, f2] = gleason_generators();
  const auto d = decompose(HomPoly(weight_enumerator(reed_muller(make_field(2), 2, 5))), f1, f2);
  ASSERT_TRUE(d.has_value());
  const auto dback = wj::decomposition_from_json(nlohmann::json::parse(wj::to_json(*d).dump()));
  EXPECT_EQ(dback.reconstruct(), d->reconstruct());
  EXPECT_EQ(dback.unique, d->unique);
  ASSERT_EQ(dback.terms.size(), d->terms.size());
  EXPECT_EQ(dback.terms[0].coeff, d->terms[0].coeff);

  const auto r = analyze_infinite(power(HomPoly::from_ints({1, 0, 1}), 7), 2u);
  const auto rback = wj::report_from_json(wj::to_json(r));
  EXPECT_EQ(rback.kind, r.kind);
  EXPECT_EQ(rback.q, r.q);
  EXPECT_EQ(rback.n, r.n);
  EXPECT_EQ(rback.classification_open, r.classification_open);
  EXPECT_EQ(rback.notes, r.notes);
}

TEST(JsonIo, MalformedInputThrows) {
  EXPECT_THROW(wj::enumerator_from_json(nlohmann::json::parse(R"({"coeffs": ["x"]})")), std::exception);
  EXPECT_THROW(wj::group_from_json(nlohmann::json::parse("{}")), std::exception);
}
