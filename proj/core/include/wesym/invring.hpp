#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wesym/bigfloat.hpp"
#include "wesym/wpoly.hpp"

namespace wesym {

struct DecompositionTerm {
  unsigned a = 0;  // exponent of f1
  unsigned b = 0;  // exponent of f2
  mpq_class coeff;
};

// p = sum coeff f1^a f2^b, exactly.
struct InvariantDecomposition {
  HomPoly f1;
  HomPoly f2;
  std::vector<DecompositionTerm> terms;  // nonzero coefficients, (a, b) ascending
  bool unique = true;

  HomPoly reconstruct() const;
};

// Hamming [8,4,4] and Golay [24,12,8] enumerators.
std::pair<HomPoly, HomPoly> gleason_generators();

// (x^(2^i) + y^(2^i), x^(2^(i+1)) + 2(2^(i+1) - 1) x^(2^i) y^(2^i) + y^(2^(i+1))).
std::pair<HomPoly, HomPoly> dihedral_generators(unsigned i);

// Exponent pairs (a, b) with a d1 + b d2 = n, lexicographically ascending.
std::vector<std::pair<unsigned, unsigned>> exponent_pairs(std::size_t n, std::size_t d1,
                                                          std::size_t d2);

// nullopt when p is not in Q[f1, f2]. Throws DegreeMismatch when no exponent
// pair exists. A rank-deficient system yields the solution supported on the
// earliest pivot columns and unique = false.
std::optional<InvariantDecomposition> decompose(const HomPoly& p, const HomPoly& f1,
                                                const HomPoly& f2);

// Quaternary RM(1,1): w = x^4 + 12 x y^3 + 3 y^4 against
// f1 = 2x^2 + (3 + s)xy + (3 - s)y^2 and f2 = 53x^4 - 36x^3y - 18x^2y^2 + 636xy^3 + 213y^4
// with s = sqrt(-15). alpha, beta solve the normal equations at prec bits;
// residual is max |coefficient of w - alpha f1^2 - beta f2| / max |w_i|.
struct NumericDecomposition {
  BigComplex alpha;
  BigComplex beta;
  BigFloat residual;
};
NumericDecomposition rm4_11_decomposition(mpfr_prec_t prec = kDefaultPrecision);

}  // namespace wesym
