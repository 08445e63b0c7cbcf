#pragma once

#include <cstdint>
#include <vector>

#include "wesym/bigfloat.hpp"
#include "wesym/wpoly.hpp"

namespace wesym {

struct RootOptions {
  mpfr_prec_t precision = kDefaultPrecision;
  mpfr_prec_t max_precision = 4096;
  std::uint64_t seed = 0x5eed;
};

struct Root {
  BigComplex value;
  std::size_t multiplicity;
};

// Distinct roots (z:1) of a binary form. A root at (1:0) is not listed; its
// multiplicity is recorded separately.
struct RootSet {
  std::vector<Root> roots;
  bool includes_zero = false;
  std::size_t infinity_multiplicity = 0;
  std::size_t degree = 0;
  BigFloat sep;             // min pairwise distance; 0 with fewer than two roots
  BigFloat cluster_radius;  // max inclusion radius
  BigFloat residual_bound;  // max relative residual
  mpfr_prec_t prec = kDefaultPrecision;
};

// Numerical roots of the exact squarefree factors, multiplicities attached
// from the exact structure. Doubles precision until every inclusion radius
// is below sep/3 and residuals are below 2^(-prec/2); throws
// PrecisionExhausted past the cap.
RootSet find_roots(const HomPoly& p, const RootOptions& opts = {});

// Throws InvalidArgument with fewer than two distinct roots.
BigFloat pairwise_separation(const RootSet& rs);

// max |coefficient difference| / max |coefficient| between prod (z - z_j)^m_j
// and p(z,1)/lead.
BigFloat reconstruction_error(const HomPoly& p, const RootSet& rs);

// Coefficients of a binary form at a fixed precision, for fast evaluation.
class NumericForm {
 public:
  NumericForm(const HomPoly& p, mpfr_prec_t prec);
  std::size_t degree() const noexcept { return c_.size() - 1; }
  mpfr_prec_t prec() const noexcept { return prec_; }
  BigComplex eval(const BigComplex& x, const BigComplex& y) const;
  // sum |c_i| |x|^(n-i) |y|^i, the natural scale of eval(x, y).
  BigFloat magnitude(const BigComplex& x, const BigComplex& y) const;

 private:
  std::vector<BigFloat> c_;
  std::vector<std::size_t> support_;  // indices of nonzero coefficients
  mpfr_prec_t prec_;
};

}  // namespace wesym
