#include "wesym/classify.hpp"

#include "wesym/error.hpp"

namespace wesym {

namespace {

// a with w = w_0 (x^2 + a y^2)^(n/2), if w has that shape and a != 0.
std::optional<mpq_class> pair_parameter(const HomPoly& w) {
  const std::size_t n = w.degree();
  if (n == 0 || n % 2 != 0 || w[0] == 0) return std::nullopt;
  const mpq_class a = w[2] / (w[0] * static_cast<unsigned long>(n / 2));
  if (a == 0) return std::nullopt;
  const HomPoly shape = power(HomPoly(std::vector<mpq_class>{1, 0, a}), static_cast<unsigned>(n / 2));
  if (!(shape * w[0] == w)) return std::nullopt;
  return a;
}

}  // namespace

InfiniteCaseReport analyze_infinite(const HomPoly& w, std::optional<unsigned> q) {
  const Finiteness f = classify_finiteness(w, q);
  if (f.kind != GroupKind::Infinite) {
    throw Error(Errc::InvalidArgument, "enumerator has " + std::to_string(f.distinct_count) +
                                           " distinct roots; symmetry group is finite");
  }
  InfiniteCaseReport r;
  r.kind = *f.infinite_case;
  r.q = q;
  r.n = w.degree();
  const bool from_code = w[0] == 1;
  switch (r.kind) {
    case InfiniteCase::ZeroCode:
      r.structure = "zero code";
      break;
    case InfiniteCase::FullSpace:
      r.structure = "full space F_" + std::to_string(*q) + "^" + std::to_string(r.n);
      break;
    case InfiniteCase::SumOfPairs:
      if (*q == 2) {
        r.classification_open = true;
        r.notes.push_back(
            "binary codes with this enumerator are not classified; X1..X5 are known irreducible examples");
      } else {
        r.structure = "direct sum of " + std::to_string(r.n / 2) + " copies of <(1,1)> over F_" +
                      std::to_string(*q);
      }
      break;
    case InfiniteCase::OtherTwoRoot: {
      const auto a = pair_parameter(w);
      if (a && from_code && q) {
        throw Error(Errc::ContradictsLemma, "enumerator (x^2 + " + a->get_str() + " y^2)^" +
                                                std::to_string(r.n / 2) + " requires a = " +
                                                std::to_string(*q - 1) + " for a code over F_" +
                                                std::to_string(*q));
      }
      if (from_code && q) r.notes.push_back("no linear code over F_q has this enumerator");
      break;
    }
  }
  return r;
}

std::optional<InfiniteCase> structural_case(const LinearCode& code) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  if (k == 0) return InfiniteCase::ZeroCode;
  if (k == n) return InfiniteCase::FullSpace;
  if (n % 2 != 0 || 2 * k != n) return std::nullopt;
  const Field& F = code.F();
  // A codeword supported inside {i, j} exists iff deleting columns i, j drops the rank.
  std::vector<int> partner(n, -1);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Row> rest;
      rest.reserve(k);
      for (const auto& row : code.gen()) {
        Row r;
        r.reserve(n - 2);
        for (std::size_t c = 0; c < n; ++c) {
          if (c != i && c != j) r.push_back(row[c]);
        }
        rest.push_back(std::move(r));
      }
      if (rank(F, rest) == k) continue;
      // Rule out weight-1 codewords, which would make the pair support degenerate.
      if (partner[i] != -1 || partner[j] != -1) return std::nullopt;
      partner[i] = static_cast<int>(j);
      partner[j] = static_cast<int>(i);
      ++pairs;
    }
  }
  if (pairs != n / 2) return std::nullopt;
  return InfiniteCase::SumOfPairs;
}

std::vector<SemigroupGeneratorCheck> verify_m_semigroup_generators() {
  std::vector<SemigroupGeneratorCheck> out;
  for (const char* name : {"X1", "X2", "X3", "X4", "X5"}) {
    const LinearCode c = named_code(name);
    SemigroupGeneratorCheck chk;
    chk.name = name;
    chk.n = c.n();
    chk.enumerator = weight_enumerator(c);
    const HomPoly target =
        power(HomPoly(std::vector<mpq_class>{1, 0, 1}), static_cast<unsigned>(c.n() / 2));
    chk.matches = c.n() % 2 == 0 && HomPoly(chk.enumerator) == target;
    out.push_back(std::move(chk));
  }
  return out;
}

PairSumCheck gleason_pierce_corollary_check(unsigned q, std::size_t n) {
  PairSumCheck r;
  r.q = q;
  r.n = n;
  r.in_scope = q > 4;
  if (!r.in_scope || n == 0) return r;
  const FieldPtr F = field_of_order(q);
  LinearCode c = repetition(F, 2);
  for (std::size_t i = 1; i < n; ++i) c = direct_sum(c, repetition(F, 2));
  const WeightEnumerator w = weight_enumerator(c);
  r.formally_self_dual = is_formally_self_dual(w, q);
  r.divisibility = divisibility(w);
  r.kind = classify_finiteness(HomPoly(w), q).infinite_case;
  return r;
}

}  // namespace wesym
