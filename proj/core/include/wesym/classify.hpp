#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wesym/code.hpp"
#include "wesym/symgroup.hpp"
#include "wesym/wpoly.hpp"

namespace wesym {

struct InfiniteCaseReport {
  InfiniteCase kind = InfiniteCase::OtherTwoRoot;
  std::optional<unsigned> q;
  std::size_t n = 0;
  // Equivalence claim forced by the enumerator, empty when none is known.
  std::string structure;
  // Binary sum-of-pairs enumerators are not known to determine the code.
  bool classification_open = false;
  std::vector<std::string> notes;
};

// Requires fewer than three distinct roots (InvalidArgument otherwise). With
// A_0 = 1 an enumerator (x^2 + a y^2)^(n/2) must have a = q - 1; any other a
// throws ContradictsLemma.
InfiniteCaseReport analyze_infinite(const HomPoly& w, std::optional<unsigned> q);

// Case read off the generator matrix alone: k = 0, k = n, or n/2 weight-2
// codewords with pairwise disjoint supports covering every coordinate.
// nullopt when none of these holds.
std::optional<InfiniteCase> structural_case(const LinearCode& code);

struct SemigroupGeneratorCheck {
  std::string name;
  std::size_t n = 0;
  WeightEnumerator enumerator;
  bool matches = false;  // enumerator == (x^2 + y^2)^(n/2)
};

// X1..X5 with lengths 2, 6, 14, 14, 14.
std::vector<SemigroupGeneratorCheck> verify_m_semigroup_generators();

struct PairSumCheck {
  unsigned q = 0;
  std::size_t n = 0;  // number of <(1,1)> summands
  bool in_scope = false;  // q > 4
  bool formally_self_dual = false;
  std::size_t divisibility = 0;
  std::optional<InfiniteCase> kind;
};

// Builds the direct sum of n copies of <(1,1)> over F_q and checks it.
PairSumCheck gleason_pierce_corollary_check(unsigned q, std::size_t n);

}  // namespace wesym
