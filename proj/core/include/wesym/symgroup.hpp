#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wesym/bigfloat.hpp"
#include "wesym/roots.hpp"
#include "wesym/wpoly.hpp"

namespace wesym {

enum class GroupKind { Finite, Infinite };
enum class InfiniteCase { ZeroCode, FullSpace, SumOfPairs, OtherTwoRoot };
enum class IsoKind { Cyclic, Dihedral, A4, S4, A5 };

std::string to_string(InfiniteCase c);

struct IsoType {
  IsoKind kind = IsoKind::Cyclic;
  // k for Cyclic(k) and Dihedral(k); the largest element order (3, 4, 5) otherwise.
  std::size_t parameter = 1;

  std::size_t order() const noexcept;
  std::string type_name() const;  // "Cyclic", "Dihedral", "A4", ...
  // Table label: Id, C3, V4, D8, A4, S4, A5.
  std::string label() const;
  bool operator==(const IsoType& o) const { return kind == o.kind && parameter == o.parameter; }
};

using CMat = std::array<std::complex<long double>, 4>;

// [a b; c d] acting by (x, y) -> (ax + by, cx + dy), up to scale.
class ProjectiveMatrix {
 public:
  ProjectiveMatrix() = default;
  // Scales so the entry of largest modulus (first in a, b, c, d order among
  // near-ties) equals 1. Throws SingularMatrix for a vanishing determinant.
  explicit ProjectiveMatrix(std::array<BigComplex, 4> m);

  const std::array<BigComplex, 4>& entries() const noexcept { return m_; }
  const BigComplex& operator[](std::size_t i) const { return m_[i]; }
  mpfr_prec_t prec() const noexcept { return m_[0].prec(); }
  CMat to_cld() const;
  BigComplex det() const;
  ProjectiveMatrix operator*(const ProjectiveMatrix& o) const;
  // Projective equality: max |A_i B_j - A_j B_i| <= tol.
  bool approx_equal(const ProjectiveMatrix& o, long double tol) const;

 private:
  std::array<BigComplex, 4> m_;
};

struct SymmetryElement {
  ProjectiveMatrix proj;
  BigComplex lambda;  // p(A v) = lambda p(v)
  std::size_t order = 1;
};

struct SymmetryGroup {
  GroupKind kind = GroupKind::Finite;
  std::optional<InfiniteCase> infinite_case;
  std::size_t degree = 0;
  std::vector<SymmetryElement> elements;  // identity first
  std::size_t proj_order = 0;
  std::size_t full_order = 0;
  std::optional<IsoType> iso;
  mpfr_prec_t prec = kDefaultPrecision;
  std::size_t distinct_roots = 0;
};

struct Finiteness {
  GroupKind kind = GroupKind::Finite;
  std::optional<InfiniteCase> infinite_case;
  std::size_t distinct_count = 0;
};

// Exact: finite iff at least three distinct projective roots. Without a field
// order only OtherTwoRoot is reported for the infinite branch, except x^n.
Finiteness classify_finiteness(const HomPoly& w, std::optional<unsigned> q = std::nullopt);

struct SymmetryOptions {
  RootOptions roots;
  unsigned threads = 1;
};

SymmetryGroup symmetry_group(const HomPoly& w, std::optional<unsigned> q = std::nullopt,
                             const SymmetryOptions& opts = {});

// Throws NotBlichfeldt for any other signature.
IsoType identify_group(const std::vector<CMat>& elements);

// Closure of the generators; throws ClosureFailure beyond max_order elements.
std::vector<CMat> generate_group(const std::vector<CMat>& generators, std::size_t max_order = 120);

struct ScalarLift {
  std::size_t full_order = 0;
  std::vector<BigComplex> scalings;  // c with c^n lambda = 1, one per element
};

ScalarLift lift_scalars(const SymmetryGroup& g);

// (z1 - z3)(z2 - z4) / ((z1 - z4)(z2 - z3)); throws DegenerateTuple.
BigComplex cross_ratio(const BigComplex& z1, const BigComplex& z2, const BigComplex& z3,
                       const BigComplex& z4);

struct CrossRatioCertificate {
  std::array<std::size_t, 5> roots;  // z1..z5, indices into RootSet::roots
  std::array<std::size_t, 4> first;
  std::array<std::size_t, 4> second;
};

// Two critical 4-sets sharing three roots certify a trivial projective group.
// Requires 5 to 40 distinct roots (InvalidArgument otherwise).
std::optional<CrossRatioCertificate> trivial_certificate(const RootSet& rs);

// Sign s with w(v(x, y)) = s w(x, y) for v = 2^(-1/2) [1 z8; z8^-1 -1].
std::optional<int> check_v_antiinvariance(const HomPoly& w, mpfr_prec_t prec = kDefaultPrecision);

// max_j |p(A v_j) - lambda p(v_j)| / (E(A v_j) + |lambda| E(v_j)) over
// deterministic sample points v_j = (1, t_j), E the absolute-term magnitude.
BigFloat invariance_residual(const HomPoly& p, const std::array<BigComplex, 4>& A,
                             const BigComplex& lambda, std::size_t samples, mpfr_prec_t prec,
                             std::size_t salt = 0);

// lambda with p(A v) = lambda p(v) if the relative residual at `samples`
// points is at most 2^(-prec/2); nullopt otherwise.
std::optional<BigComplex> verify_invariance(const HomPoly& p, const std::array<BigComplex, 4>& A,
                                            std::size_t samples, mpfr_prec_t prec,
                                            std::size_t salt = 0);

}  // namespace wesym
