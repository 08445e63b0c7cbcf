// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wesym/classify.hpp"
#include "wesym/code.hpp"
#include "wesym/error.hpp"
#include "wesym/invring.hpp"
#include "wesym/roots.hpp"
#include "wesym/symgroup.hpp"
#include "wesym/tables.hpp"

using namespace wesym;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 12) failures.push_back(what);
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Every finite group seen by the run, for the closure property.
struct SeenGroup {
  std::string where;
  SymmetryGroup g;
};
std::vector<SeenGroup> g_seen;
// Finite binary table enumerators, reused by the root reconstruction property.
std::vector<HomPoly> g_table1;

SymmetryGroup track(const std::string& where, SymmetryGroup g) {
  if (g.kind == GroupKind::Finite) g_seen.push_back({where, g});
  return g;
}

HomPoly enumerator(const LinearCode& c) { return HomPoly(weight_enumerator_smart(c)); }

bool proj_equal(const CMat& A, const CMat& B) {
  long double d = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) d = std::max(d, std::abs(A[i] * B[j] - A[j] * B[i]));
  }
  return d < 1e-9L;
}

CMat mul(const CMat& A, const CMat& B) {
  return {A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3], A[2] * B[0] + A[3] * B[2],
          A[2] * B[1] + A[3] * B[3]};
}

bool closed(const SymmetryGroup& g) {
  std::vector<CMat> els;
  for (const auto& e : g.elements) els.push_back(e.proj.to_cld());
  if (els.size() != g.proj_order) return false;
  for (const auto& a : els) {
    for (const auto& b : els) {
      const CMat p = mul(a, b);
      if (std::none_of(els.begin(), els.end(), [&](const CMat& e) { return proj_equal(e, p); })) return false;
    }
  }
  return true;
}

// One table: compute every non-skipped cell and compare with the published label.
Outcome table_criterion(unsigned q, double limit_seconds) {
  Outcome o;
  const TableSpec& spec = table_spec(q);
  const FieldPtr F = field_of_order(q);
  const auto t0 = Clock::now();
  std::size_t computed = 0, skipped = 0;
  for (unsigned r = 0; r < spec.rows; ++r) {
    for (unsigned m = 1; m <= spec.cols; ++m) {
      if (spec.is_skipped(r, m)) {
        ++skipped;
        continue;
      }
      const std::string cell = "(" + std::to_string(r) + "," + std::to_string(m) + ")";
      try {
        const LinearCode c = reed_muller(F, r, m);
        const HomPoly w = enumerator(c);
        const SymmetryGroup g = track("RM_" + std::to_string(q) + cell, symmetry_group(w, q));
        if (q == 2 && g.kind == GroupKind::Finite) g_table1.push_back(w);
        const std::string label = group_label(g);
        o.require(label == spec.label(r, m), cell + " computed " + label + ", expected " + spec.label(r, m));
        ++computed;
      } catch (const Error& e) {
        o.require(false, cell + " error: " + e.what());
      }
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs <= limit_seconds, "runtime " + std::to_string(secs) + " s over limit");
  std::ostringstream s;
  s << computed << " cells computed, " << skipped << " skipped, " << static_cast<int>(secs) << " s";
  o.summary = s.str();
  return o;
}

Outcome ac4_named_codes() {
  Outcome o;
  auto expect = [&](const std::string& what, const HomPoly& w, unsigned q, IsoType iso) {
    const SymmetryGroup g = track(what, symmetry_group(w, q));
    o.require(g.kind == GroupKind::Finite && g.iso == iso,
              what + " gave " + (g.iso ? g.iso->label() : std::string("infinite")));
    o.require(g.full_order == g.degree * g.proj_order, what + " order identity");
  };
  expect("hamming8", enumerator(named_code("hamming8")), 2, {IsoKind::S4, 4});
  expect("golay24", enumerator(named_code("golay24")), 2, {IsoKind::S4, 4});
  expect("golay12_ternary", enumerator(named_code("golay12_ternary")), 3, {IsoKind::A4, 3});
  for (std::size_t n = 3; n <= 6; ++n) {
    expect("repetition(2," + std::to_string(n) + ")", enumerator(repetition(make_field(2), n)), 2,
           {IsoKind::Dihedral, n});
  }
  expect("rep(3,3)+rep(3,6)",
         enumerator(direct_sum(repetition(make_field(3), 3), repetition(make_field(3), 6))), 3,
         {IsoKind::Cyclic, 3});
  o.summary = "hamming8 S4, golay24 S4, golay12_ternary A4, repetition D3..D6, direct sum C3";
  return o;
}

Outcome ac5_gleason() {
  Outcome o;
  const auto [f1, f2] = gleason_generators();
  auto member = [&](const std::string& what, const HomPoly& p, const HomPoly& a, const HomPoly& b) {
    const auto d = decompose(p, a, b);
    o.require(d.has_value(), what + " not a member");
    if (d) o.require(d->reconstruct() == p, what + " reconstruction differs");
    return d;
  };
  const auto rm25 = member("RM_2(2,5)", enumerator(reed_muller(make_field(2), 2, 5)), f1, f2);
  if (rm25) {
    // Regression fixture: (4/3) f1 f2 - (1/3) f1^4.
    o.require(rm25->terms.size() == 2 && rm25->terms[0].coeff == mpq_class(4, 3) &&
                  rm25->terms[1].coeff == mpq_class(-1, 3),
              "RM_2(2,5) coefficients changed");
  }
  const auto g24 = member("golay24", enumerator(named_code("golay24")), f1, f2);
  if (g24) o.require(g24->terms.size() == 1 && g24->terms[0].b == 1, "golay24 is not f2");
  for (unsigned m = 3; m <= 6; ++m) {
    const auto [a, b] = dihedral_generators(m - 1);
    const auto d = member("RM_2(1," + std::to_string(m) + ")", enumerator(reed_muller(make_field(2), 1, m)), a, b);
    if (d) o.require(d->terms.size() == 1 && d->terms[0].b == 1, "RM_2(1,m) fixture changed");
  }
  o.summary = "RM_2(2,5) = 4/3 f1 f2 - 1/3 f1^4, golay24 = f2, RM_2(1,m) = dihedral f2 for m = 3..6";
  return o;
}

mpq_class random_rational(std::mt19937_64& rng) {
  mpq_class r(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
  r.canonicalize();
  return r;
}

Outcome ac6_properties(const std::vector<HomPoly>& table1) {
  Outcome o;
  std::mt19937_64 rng(6);
  std::ostringstream s;

  // MacWilliams involution against direct enumeration of the dual.
  int mw = 0;
  while (mw < 50) {
    const unsigned q = std::vector<unsigned>{2, 3, 4, 5}[rng() % 4];
    const std::size_t k = 1 + rng() % 12, n = k + 1 + rng() % (24 - k);
    if (std::pow(q, k) > 4e6 || std::pow(q, n - k) > 4e6) continue;
    const FieldPtr F = field_of_order(q);
    std::vector<Row> rows(k, Row(n));
    for (auto& r : rows) {
      for (auto& e : r) e = static_cast<Elem>(rng() % q);
    }
    row_reduce(*F, rows);
    if (rows.empty()) continue;
    const LinearCode c(F, n, rows);
    const WeightEnumerator w = weight_enumerator(c), wd = weight_enumerator(dual(c));
    o.require(macwilliams(w, q, c.k()) == wd, "MacWilliams forward q=" + std::to_string(q));
    o.require(macwilliams(wd, q, n - c.k()) == w, "MacWilliams back q=" + std::to_string(q));
    ++mw;
  }
  s << mw << " MacWilliams codes";

  // Ax valuation and PRM divisibility.
  int ax = 0, prm = 0;
  for (unsigned q : {2u, 3u, 4u}) {
    const FieldPtr F = field_of_order(q);
    for (unsigned m = 1; m <= (q == 2 ? 7u : 4u); ++m) {
      for (unsigned r = 1; r <= m * (q - 1); ++r) {
        const LinearCode c = reed_muller(F, r, m);
        if (std::min(c.k(), c.n() - c.k()) * std::log2(q) > 24) continue;
        std::size_t val = 0;
        for (std::size_t x = divisibility(weight_enumerator_smart(c)); x % F->p() == 0; x /= F->p()) ++val;
        o.require(val == F->v() * ((m - 1) / r), "Ax q=" + std::to_string(q) + " r=" + std::to_string(r) +
                                                     " m=" + std::to_string(m));
        ++ax;
      }
    }
    for (unsigned m = 1; m <= 3; ++m) {
      for (unsigned r = 1; r <= 2; ++r) {
        const LinearCode c = projective_reed_muller(F, r, m);
        if (std::min(c.k(), c.n() - c.k()) * std::log2(q) > 22) continue;
        std::size_t need = 1;
        for (unsigned t = 0; t < m / r; ++t) need *= q;
        o.require(divisibility(weight_enumerator_smart(c)) % need == 0, "PRM q=" + std::to_string(q));
        ++prm;
      }
    }
  }
  s << ", " << ax << " Ax cells, " << prm << " PRM cells";

  // Conjugation invariance under exact rational changes of variables.
  const std::vector<std::pair<std::string, HomPoly>> polys{
      {"hamming8", enumerator(named_code("hamming8"))},
      {"golay12_ternary", enumerator(named_code("golay12_ternary"))},
      {"x^5+y^5", HomPoly::from_ints({1, 0, 0, 0, 0, 1})},
      {"RM_3(1,2)", enumerator(reed_muller(make_field(3), 1, 2))},
      {"RM_4(1,1)", enumerator(reed_muller(field_of_order(4), 1, 1))},
      {"RM_4(2,2)", enumerator(reed_muller(field_of_order(4), 2, 2))},
  };
  int conj = 0;
  for (const auto& [name, w] : polys) {
    const SymmetryGroup base = track(name, symmetry_group(w));
    for (int t = 0; t < 10; ++t) {
      RatMatrix M;
      do {
        M = {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
      } while (M[0] * M[3] - M[1] * M[2] == 0);
      const SymmetryGroup g = track(name + " conjugate", symmetry_group(substitute_exact(w, M)));
      o.require(g.iso == base.iso, name + " conjugate changed type");
      ++conj;
    }
  }
  s << ", " << conj << " conjugations";

  // Root reconstruction on every finite binary table enumerator.
  BigFloat worst(0.0L, 256);
  for (const HomPoly& w : table1) {
    const RootSet rs = find_roots(w);
    const BigFloat e = reconstruction_error(w, rs);
    worst = max(worst, e);
  }
  o.require(worst <= exp2(-64, 256), "reconstruction error " + worst.to_string(6));
  s << ", " << table1.size() << " binary table root sets (worst " << worst.to_string(3) << ")";

  // Closure and order identity on everything computed so far.
  std::size_t groups = 0;
  for (const auto& sg : g_seen) {
    o.require(closed(sg.g), sg.where + " not closed");
    o.require(sg.g.full_order == sg.g.degree * sg.g.proj_order, sg.where + " order identity");
    ++groups;
  }
  s << ", " << groups << " groups closed";
  o.summary = s.str();
  return o;
}

Outcome ac7_infinite() {
  Outcome o;
  auto expect = [&](const LinearCode& c, InfiniteCase want) {
    const HomPoly w(weight_enumerator(c));
    const auto rep = analyze_infinite(w, c.F().q());
    o.require(rep.kind == want, c.name() + " analyzed as " + to_string(rep.kind));
    const SymmetryGroup g = symmetry_group(w, c.F().q());
    o.require(g.kind == GroupKind::Infinite && g.infinite_case == want, c.name() + " group kind");
  };
  auto named = [](LinearCode c, std::string name) {
    c.set_name(std::move(name));
    return c;
  };
  expect(named(zero_code(make_field(3), 5), "{0}"), InfiniteCase::ZeroCode);
  expect(named(full_space(make_field(5), 4), "F_5^4"), InfiniteCase::FullSpace);
  for (unsigned q : {3u, 5u}) {
    LinearCode c = repetition(make_field(q), 2);
    for (int i = 0; i < 3; ++i) c = direct_sum(c, repetition(make_field(q), 2));
    const std::string name = "pairs over F_" + std::to_string(q);
    expect(named(c, name), InfiniteCase::SumOfPairs);
    o.require(structural_case(c) == InfiniteCase::SumOfPairs, name + " structural check");
    o.require(!analyze_infinite(HomPoly(weight_enumerator(c)), q).structure.empty(), name + " structure claim");
  }
  for (const auto& chk : verify_m_semigroup_generators()) {
    o.require(chk.matches, chk.name + " enumerator");
    expect(named_code(chk.name), InfiniteCase::SumOfPairs);
  }
  o.summary = "zero code, full space, pair sums over F_3 and F_5, X1..X5";
  return o;
}

Outcome ac8_rm4() {
  Outcome o;
  const HomPoly w = enumerator(reed_muller(field_of_order(4), 1, 1));
  const SymmetryGroup g = track("RM_4(1,1)", symmetry_group(w, 4u));
  o.require(g.proj_order == 4, "proj_order " + std::to_string(g.proj_order));
  for (std::size_t i = 1; i < g.elements.size(); ++i) o.require(g.elements[i].order == 2, "element order");

  constexpr mpfr_prec_t prec = 256;
  const BigComplex s(BigFloat(0.0L, prec), sqrt(BigFloat(15.0L, prec)));
  auto c = [&](long double v) { return BigComplex(std::complex<long double>(v, 0), prec); };
  const std::array<BigComplex, 4> m1{c(3) - s, c(6) + s * BigFloat(2.0L, prec), c(-4), s - c(3)};
  const std::array<BigComplex, 4> m2{c(1), c(3), c(1), c(-1)};
  BigFloat worst(0.0L, prec);
  for (const auto& M : {m1, m2}) {
    const auto lambda = verify_invariance(w, M, 16, prec, 11);
    o.require(lambda.has_value(), "matrix is not a symmetry");
    if (!lambda) continue;
    worst = max(worst, invariance_residual(w, M, *lambda, 16, prec, 23));
    const ProjectiveMatrix P(M);
    o.require(std::any_of(g.elements.begin(), g.elements.end(),
                          [&](const SymmetryElement& e) { return e.proj.approx_equal(P, 1e-12L); }),
              "matrix not among computed elements");
  }
  o.require(worst <= exp2(-100, prec), "invariance residual " + worst.to_string(6));
  const NumericDecomposition nd = rm4_11_decomposition(prec);
  o.require(nd.residual <= exp2(-80, prec), "decomposition residual " + nd.residual.to_string(6));
  o.summary = "V4, invariance residual " + worst.to_string(3) + ", decomposition residual " +
              nd.residual.to_string(3);
  return o;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](const char* id, const char* title, const std::function<Outcome()>& f) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s [%s; %.1f s]\n", id, o.pass ? "PASS" : "FAIL", title, o.summary.c_str(),
                seconds_since(t0));
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  };

  report("AC1", "binary Reed-Muller table", [] { return table_criterion(2, 15 * 60); });
  report("AC2", "ternary Reed-Muller table", [] { return table_criterion(3, 30 * 60); });
  report("AC3", "quaternary Reed-Muller table", [] { return table_criterion(4, 20 * 60); });
  report("AC4", "named-code groups", ac4_named_codes);
  report("AC5", "invariant-ring membership", ac5_gleason);
  report("AC6", "property suites", [] { return ac6_properties(g_table1); });
  report("AC7", "infinite-case classifier", ac7_infinite);
  report("AC8", "quaternary RM(1,1)", ac8_rm4);
  return all ? 0 : 1;
}
