#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wesym/code.hpp"

namespace wesym {

// Homogeneous bivariate polynomial sum_i c_i x^(n-i) y^i with rational
// coefficients. The degree is fixed by the coefficient count, so the zero
// polynomial of degree n is representable.
class HomPoly {
 public:
  HomPoly() : c_(1, 0) {}
  explicit HomPoly(std::vector<mpq_class> coeffs);
  explicit HomPoly(const WeightEnumerator& w);
  static HomPoly from_ints(const std::vector<long long>& coeffs);
  // x^(n-i) y^i times c.
  static HomPoly monomial(std::size_t n, std::size_t i, const mpq_class& c = 1);

  std::size_t degree() const noexcept { return c_.size() - 1; }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
  const mpq_class& operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const;

  bool operator==(const HomPoly& o) const { return c_ == o.c_; }
  HomPoly operator+(const HomPoly& o) const;
  HomPoly operator-(const HomPoly& o) const;
  HomPoly operator*(const mpq_class& s) const;

  std::string to_string() const;

 private:
  std::vector<mpq_class> c_;
};

HomPoly product(const HomPoly& a, const HomPoly& b);
HomPoly power(const HomPoly& a, unsigned e);

using RatMatrix = std::array<mpq_class, 4>;  // [a b; c d] row-major

// p(ax+by, cx+dy). Throws SingularMatrix if ad - bc = 0.
HomPoly substitute_exact(const HomPoly& p, const RatMatrix& M);

// Squarefree factor of P(u) over the integers, coefficients low -> high.
struct SquarefreeFactor {
  std::vector<mpz_class> coeffs;
  std::size_t multiplicity;
};

// Exact root-multiplicity data of a binary form.
//
// With L leading and T trailing zero coefficients, p(z,1) = z^T h(z) where
// h(z) = P(z^g) for the exponent gcd g. Each root u of P yields g distinct
// roots z, all carrying the multiplicity of u.
struct MultiplicityStructure {
  std::size_t degree = 0;
  std::size_t distinct_count = 0;
  std::vector<std::size_t> multiplicities;  // descending
  HomPoly squarefree_part;
  std::size_t infinity_multiplicity = 0;  // root (1:0)
  std::size_t zero_multiplicity = 0;      // root (0:1)
  std::size_t exponent_gcd = 1;
  std::vector<SquarefreeFactor> factors;  // Yun factors of P
};

// Throws InvalidArgument for the zero polynomial.
MultiplicityStructure multiplicity_structure(const HomPoly& p);

bool is_formally_self_dual(const WeightEnumerator& w, unsigned q);

// Degree on the first line, then n+1 rationals "p/q" (or integers).
HomPoly read_poly(std::istream& in);
HomPoly read_poly_file(const std::string& path);
void write_poly(std::ostream& out, const HomPoly& p);

// Integer coefficients as a WeightEnumerator; throws InvalidArgument otherwise.
WeightEnumerator to_enumerator(const HomPoly& p);

}  // namespace wesym
