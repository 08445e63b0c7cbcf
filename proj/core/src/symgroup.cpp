#include "wesym/symgroup.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <thread>

#include "wesym/error.hpp"

namespace wesym {

namespace {

using cld = std::complex<long double>;

struct NeedMorePrecision {};

BigComplex cnum(long double re, long double im, mpfr_prec_t p) {
  return {BigFloat(re, p), BigFloat(im, p)};
}

// Signed 3x3 minors of the 3x4 system rows (z, 1, -w z, -w): null vector (a, b, c, d).
template <class C>
std::array<C, 4> solve_triple(const std::array<C, 3>& z, const std::array<C, 3>& w, const C& one) {
  std::array<std::array<C, 4>, 3> M;
  for (int i = 0; i < 3; ++i) {
    M[i][0] = z[i];
    M[i][1] = one;
    M[i][2] = -(w[i] * z[i]);
    M[i][3] = -w[i];
  }
  auto det3 = [&](int skip) {
    int c[3];
    for (int j = 0, t = 0; j < 4; ++j) {
      if (j != skip) c[t++] = j;
    }
    const C m1 = M[1][c[1]] * M[2][c[2]] - M[1][c[2]] * M[2][c[1]];
    const C m2 = M[1][c[0]] * M[2][c[2]] - M[1][c[2]] * M[2][c[0]];
    const C m3 = M[1][c[0]] * M[2][c[1]] - M[1][c[1]] * M[2][c[0]];
    return M[0][c[0]] * m1 - M[0][c[1]] * m2 + M[0][c[2]] * m3;
  };
  return {det3(0), -det3(1), det3(2), -det3(3)};
}

// Canonical scaling in long double with the same tie rule as ProjectiveMatrix.
CMat canon(CMat m) {
  long double mx = 0;
  for (const auto& e : m) mx = std::max(mx, std::abs(e));
  std::size_t piv = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(m[i]) >= mx * (1 - 1e-12L)) {
      piv = i;
      break;
    }
  }
  const cld s = m[piv];
  for (auto& e : m) e /= s;
  m[piv] = 1;
  return m;
}

CMat mul(const CMat& A, const CMat& B) {
  return {A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3], A[2] * B[0] + A[3] * B[2],
          A[2] * B[1] + A[3] * B[3]};
}

long double proj_dist(const CMat& A, const CMat& B) {
  long double d = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) d = std::max(d, std::abs(A[i] * B[j] - A[j] * B[i]));
  }
  return d;
}

constexpr long double kGroupTol = 1e-10L;

long double key_of(const CMat& m) {
  return m[0].real() + 1.4142135623730950488L * m[1].real() + 1.7320508075688772935L * m[2].real() +
         2.2360679774997896964L * m[3].real() + 0.5772156649015328606L * m[0].imag() +
         2.7182818284590452354L * m[1].imag() + 0.6931471805599453094L * m[2].imag() +
         1.2020569031595942854L * m[3].imag();
}

// Multiplication table and element orders of a finite set of canonical matrices.
struct GroupTable {
  std::vector<CMat> mats;
  std::vector<std::vector<std::uint32_t>> table;
  std::size_t identity = 0;
  std::vector<std::size_t> orders;

  explicit GroupTable(std::vector<CMat> in) : mats(std::move(in)) {
    const std::size_t N = mats.size();
    for (auto& m : mats) m = canon(m);
    std::vector<std::pair<long double, std::uint32_t>> keys(N);
    for (std::size_t i = 0; i < N; ++i) keys[i] = {key_of(mats[i]), static_cast<std::uint32_t>(i)};
    std::sort(keys.begin(), keys.end());
    auto find = [&](const CMat& P) -> std::int64_t {
      const long double k = key_of(P);
      auto it = std::lower_bound(keys.begin(), keys.end(), std::make_pair(k - 1e-7L, 0u));
      for (; it != keys.end() && it->first <= k + 1e-7L; ++it) {
        if (proj_dist(P, mats[it->second]) <= kGroupTol) return it->second;
      }
      for (std::size_t i = 0; i < N; ++i) {
        if (proj_dist(P, mats[i]) <= kGroupTol) return static_cast<std::int64_t>(i);
      }
      return -1;
    };
    const CMat I{1, 0, 0, 1};
    const auto id = find(I);
    if (id < 0) throw Error(Errc::ClosureFailure, "identity missing from symmetry set");
    identity = static_cast<std::size_t>(id);
    table.assign(N, std::vector<std::uint32_t>(N));
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        const auto k = find(canon(mul(mats[i], mats[j])));
        if (k < 0) throw Error(Errc::ClosureFailure, "symmetry set not closed under products");
        table[i][j] = static_cast<std::uint32_t>(k);
      }
    }
    orders.assign(N, 1);
    for (std::size_t i = 0; i < N; ++i) {
      std::size_t k = i;
      std::size_t ord = 1;
      while (k != identity) {
        k = table[k][i];
        if (++ord > N) throw Error(Errc::ClosureFailure, "element without finite order");
      }
      orders[i] = ord;
    }
  }
};

IsoType identify(const GroupTable& G) {
  const std::size_t N = G.mats.size();
  std::map<std::size_t, std::size_t> census;
  for (auto o : G.orders) ++census[o];
  auto count = [&](std::size_t o) { return census.count(o) ? census.at(o) : 0; };
  for (std::size_t i = 0; i < N; ++i) {
    if (G.orders[i] == N) return {IsoKind::Cyclic, N};
  }
  if (N % 2 == 0 && N >= 4) {
    const std::size_t k = N / 2;
    for (std::size_t r = 0; r < N; ++r) {
      if (G.orders[r] != k) continue;
      std::vector<bool> in_sub(N, false);
      for (std::size_t e = G.identity, s = 0; s < k; ++s, e = G.table[e][r]) in_sub[e] = true;
      bool ok = true;
      for (std::size_t i = 0; i < N && ok; ++i) {
        if (!in_sub[i] && G.orders[i] != 2) ok = false;
      }
      if (ok) return {IsoKind::Dihedral, k};
      break;
    }
  }
  if (N == 12 && count(1) == 1 && count(2) == 3 && count(3) == 8) return {IsoKind::A4, 3};
  if (N == 24 && count(1) == 1 && count(2) == 9 && count(3) == 8 && count(4) == 6) {
    return {IsoKind::S4, 4};
  }
  if (N == 60 && count(1) == 1 && count(2) == 15 && count(3) == 20 && count(5) == 24) {
    return {IsoKind::A5, 5};
  }
  std::string sig;
  for (auto [o, c] : census) sig += " " + std::to_string(o) + "^" + std::to_string(c);
  throw Error(Errc::NotBlichfeldt, "group of order " + std::to_string(N) + " with orders" + sig);
}

// Deterministic sample abscissae t_j.
BigComplex sample_point(std::size_t j, std::size_t count, mpfr_prec_t prec) {
  const long double phi = 0.6180339887498948482L;
  const long double frac = std::fmod((static_cast<long double>(j) + 0.5L) * phi, 1.0L);
  const long double r = 0.45L + 1.1L * (static_cast<long double>(j) + 0.5L) /
                                    static_cast<long double>(std::max<std::size_t>(count, 1));
  const long double th = 2 * std::numbers::pi_v<long double> * frac + 0.1234L;
  return cnum(r * std::cos(th), r * std::sin(th), prec);
}

std::array<BigComplex, 2> apply(const std::array<BigComplex, 4>& A, const BigComplex& x,
                                const BigComplex& y) {
  return {A[0] * x + A[1] * y, A[2] * x + A[3] * y};
}

// Evaluation point e = (1, t) well away from the roots of p.
std::array<BigComplex, 2> base_point(const NumericForm& F, mpfr_prec_t prec) {
  const BigFloat thresh = exp2(-static_cast<long>(prec / 4), prec);
  const BigComplex one = cnum(1, 0, prec);
  for (std::size_t k = 0; k < 64; ++k) {
    const BigComplex t = cnum(0.3L + 0.11L * k, 0.7L - 0.05L * k, prec);
    const BigComplex v = F.eval(one, t);
    if (v.abs() > F.magnitude(one, t) * thresh) return {one, t};
  }
  throw Error(Errc::InvalidArgument, "no evaluation point off the roots");
}

}  // namespace

std::string to_string(InfiniteCase c) {
  switch (c) {
    case InfiniteCase::ZeroCode: return "ZeroCode";
    case InfiniteCase::FullSpace: return "FullSpace";
    case InfiniteCase::SumOfPairs: return "SumOfPairs";
    case InfiniteCase::OtherTwoRoot: return "OtherTwoRoot";
  }
  return "Unknown";
}

std::size_t IsoType::order() const noexcept {
  switch (kind) {
    case IsoKind::Cyclic: return parameter;
    case IsoKind::Dihedral: return 2 * parameter;
    case IsoKind::A4: return 12;
    case IsoKind::S4: return 24;
    case IsoKind::A5: return 60;
  }
  return 0;
}

std::string IsoType::type_name() const {
  switch (kind) {
    case IsoKind::Cyclic: return "Cyclic";
    case IsoKind::Dihedral: return "Dihedral";
    case IsoKind::A4: return "A4";
    case IsoKind::S4: return "S4";
    case IsoKind::A5: return "A5";
  }
  return "Unknown";
}

std::string IsoType::label() const {
  switch (kind) {
    case IsoKind::Cyclic: return parameter == 1 ? "Id" : "C" + std::to_string(parameter);
    case IsoKind::Dihedral: return parameter == 2 ? "V4" : "D" + std::to_string(parameter);
    default: return type_name();
  }
}

ProjectiveMatrix::ProjectiveMatrix(std::array<BigComplex, 4> m) : m_(std::move(m)) {
  const mpfr_prec_t p = std::max({m_[0].prec(), m_[1].prec(), m_[2].prec(), m_[3].prec()});
  std::array<BigFloat, 4> mod;
  BigFloat mx(p);
  for (int i = 0; i < 4; ++i) {
    mod[i] = m_[i].abs();
    mx = max(mx, mod[i]);
  }
  if (mx.is_zero()) throw Error(Errc::SingularMatrix, "zero matrix");
  const BigFloat cut = mx * (BigFloat(1.0L, p) - exp2(-static_cast<long>(p / 4), p));
  int piv = 0;
  for (int i = 0; i < 4; ++i) {
    if (mod[i] >= cut) {
      piv = i;
      break;
    }
  }
  const BigComplex s = m_[piv];
  for (auto& e : m_) e /= s;
  m_[piv] = cnum(1, 0, p);
  if (det().abs() <= exp2(-static_cast<long>(p / 4), p)) {
    throw Error(Errc::SingularMatrix, "projective matrix with vanishing determinant");
  }
}

CMat ProjectiveMatrix::to_cld() const {
  return {m_[0].to_cld(), m_[1].to_cld(), m_[2].to_cld(), m_[3].to_cld()};
}

BigComplex ProjectiveMatrix::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

ProjectiveMatrix ProjectiveMatrix::operator*(const ProjectiveMatrix& o) const {
  return ProjectiveMatrix({m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
                           m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]});
}

bool ProjectiveMatrix::approx_equal(const ProjectiveMatrix& o, long double tol) const {
  return proj_dist(to_cld(), o.to_cld()) <= tol;
}

Finiteness classify_finiteness(const HomPoly& w, std::optional<unsigned> q) {
  const MultiplicityStructure ms = multiplicity_structure(w);
  Finiteness f;
  f.distinct_count = ms.distinct_count;
  if (ms.distinct_count >= 3) return f;
  f.kind = GroupKind::Infinite;
  const std::size_t n = w.degree();
  const mpq_class c0 = w[0];
  bool zero = c0 != 0;
  for (std::size_t i = 1; i <= n && zero; ++i) zero = w[i] == 0;
  if (zero) {
    f.infinite_case = InfiniteCase::ZeroCode;
    return f;
  }
  if (q && c0 != 0) {
    const mpq_class qm1 = *q - 1;
    const HomPoly full = power(HomPoly(std::vector<mpq_class>{1, qm1}), static_cast<unsigned>(n));
    if (w == full * c0) {
      f.infinite_case = InfiniteCase::FullSpace;
      return f;
    }
    if (n % 2 == 0) {
      const HomPoly pairs =
          power(HomPoly(std::vector<mpq_class>{1, 0, qm1}), static_cast<unsigned>(n / 2));
      if (w == pairs * c0) {
        f.infinite_case = InfiniteCase::SumOfPairs;
        return f;
      }
    }
  }
  f.infinite_case = InfiniteCase::OtherTwoRoot;
  return f;
}

BigFloat invariance_residual(const HomPoly& p, const std::array<BigComplex, 4>& A,
                             const BigComplex& lambda, std::size_t samples, mpfr_prec_t prec,
                             std::size_t salt) {
  const NumericForm F(p, prec);
  const BigComplex one = cnum(1, 0, prec);
  const BigFloat al = lambda.abs();
  BigFloat worst(prec);
  for (std::size_t j = 0; j < samples; ++j) {
    const BigComplex t = sample_point(j + salt * samples, samples * (salt + 1), prec);
    const auto gv = apply(A, one, t);
    const BigComplex lhs = F.eval(gv[0], gv[1]);
    const BigComplex rhs = lambda * F.eval(one, t);
    const BigFloat scale = F.magnitude(gv[0], gv[1]) + al * F.magnitude(one, t);
    if (scale.is_zero()) continue;
    worst = max(worst, (lhs - rhs).abs() / scale);
  }
  return worst;
}

std::optional<BigComplex> verify_invariance(const HomPoly& p, const std::array<BigComplex, 4>& A,
                                            std::size_t samples, mpfr_prec_t prec,
                                            std::size_t salt) {
  const NumericForm F(p, prec);
  const auto e = base_point(F, prec);
  const auto ge = apply(A, e[0], e[1]);
  const BigComplex lambda = F.eval(ge[0], ge[1]) / F.eval(e[0], e[1]);
  const BigFloat r = invariance_residual(p, A, lambda, samples, prec, salt);
  if (r > exp2(-static_cast<long>(prec / 2), prec)) return std::nullopt;
  return lambda;
}

namespace {

struct Candidate {
  std::array<std::uint32_t, 3> target;
  std::vector<std::uint32_t> perm;
};

// Ordered target triples whose Moebius map permutes the roots (long double screen).
std::vector<Candidate> screen(const std::vector<cld>& z, const std::vector<std::size_t>& mult,
                              const std::array<std::size_t, 3>& src, long double tau,
                              unsigned threads) {
  const std::size_t N = z.size();
  std::vector<std::pair<long double, std::uint32_t>> by_re(N);
  for (std::size_t i = 0; i < N; ++i) by_re[i] = {z[i].real(), static_cast<std::uint32_t>(i)};
  std::sort(by_re.begin(), by_re.end());
  const std::array<cld, 3> zs{z[src[0]], z[src[1]], z[src[2]]};
  long double R = 1;
  for (const auto& v : z) R = std::max(R, std::abs(v));

  auto work = [&](std::size_t t1_begin, std::size_t t1_end, std::vector<Candidate>& out) {
    std::vector<std::uint8_t> used(N);
    std::vector<std::uint32_t> perm(N);
    for (std::size_t t1 = t1_begin; t1 < t1_end; ++t1) {
      if (mult[t1] != mult[src[0]]) continue;
      for (std::size_t t2 = 0; t2 < N; ++t2) {
        if (t2 == t1 || mult[t2] != mult[src[1]]) continue;
        for (std::size_t t3 = 0; t3 < N; ++t3) {
          if (t3 == t1 || t3 == t2 || mult[t3] != mult[src[2]]) continue;
          const auto m = solve_triple<cld>(zs, {z[t1], z[t2], z[t3]}, cld(1));
          const long double scale = std::max({std::abs(m[0]), std::abs(m[1]), std::abs(m[2]),
                                              std::abs(m[3])});
          if (!(scale > 0) || std::abs(m[0] * m[3] - m[1] * m[2]) <= 1e-14L * scale * scale) {
            continue;
          }
          std::fill(used.begin(), used.end(), 0);
          bool ok = true;
          for (std::size_t j = 0; j < N && ok; ++j) {
            const cld den = m[2] * z[j] + m[3];
            if (std::abs(den) <= 1e-14L * scale * R) {
              ok = false;
              break;
            }
            const cld w = (m[0] * z[j] + m[1]) / den;
            auto it = std::lower_bound(by_re.begin(), by_re.end(),
                                       std::make_pair(w.real() - tau, std::uint32_t{0}));
            bool hit = false;
            for (; it != by_re.end() && it->first <= w.real() + tau; ++it) {
              const auto k = it->second;
              if (!used[k] && mult[k] == mult[j] && std::abs(w - z[k]) < tau) {
                used[k] = 1;
                perm[j] = k;
                hit = true;
                break;
              }
            }
            ok = hit;
          }
          if (ok) {
            out.push_back({{static_cast<std::uint32_t>(t1), static_cast<std::uint32_t>(t2),
                            static_cast<std::uint32_t>(t3)},
                           perm});
          }
        }
      }
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(N)));
  std::vector<std::vector<Candidate>> parts(threads);
  if (threads == 1) {
    work(0, N, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(work, N * t / threads, N * (t + 1) / threads, std::ref(parts[t]));
    }
    for (auto& th : pool) th.join();
  }
  std::vector<Candidate> all;
  for (auto& p : parts) {
    for (auto& c : p) all.push_back(std::move(c));
  }
  return all;
}

// Symmetries of p (leading coefficient nonzero) from its roots.
std::vector<ProjectiveMatrix> symmetries_from_roots(const HomPoly& p, const RootSet& rs,
                                                    unsigned threads) {
  const mpfr_prec_t prec = rs.prec;
  const std::size_t N = rs.roots.size();
  std::vector<cld> z(N);
  std::vector<std::size_t> mult(N);
  for (std::size_t i = 0; i < N; ++i) {
    z[i] = rs.roots[i].value.to_cld();
    mult[i] = rs.roots[i].multiplicity;
  }
  std::vector<std::size_t> lex(N);
  std::iota(lex.begin(), lex.end(), 0);
  std::sort(lex.begin(), lex.end(), [&](std::size_t a, std::size_t b) {
    if (z[a].real() != z[b].real()) return z[a].real() < z[b].real();
    return z[a].imag() < z[b].imag();
  });
  std::array<std::size_t, 3> src{lex[0], lex[1], lex[2]};
  long double best = -1;
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = a + 1; b < N; ++b) {
      const long double dab = std::abs(z[lex[a]] - z[lex[b]]);
      if (dab <= best) continue;
      for (std::size_t c = b + 1; c < N; ++c) {
        const long double m = std::min({dab, std::abs(z[lex[a]] - z[lex[c]]),
                                        std::abs(z[lex[b]] - z[lex[c]])});
        if (m > best) {
          best = m;
          src = {lex[a], lex[b], lex[c]};
        }
      }
    }
  }

  const long double sep = rs.sep.to_ld();
  long double R = 1;
  for (const auto& v : z) R = std::max(R, std::abs(v));
  std::vector<Candidate> cands;
  if (sep / R >= 1e-12L) {
    cands = screen(z, mult, src, sep / 3, threads);
  } else {
    // Separation below long double resolution: every multiplicity-compatible
    // triple goes to the high-precision check.
    for (std::size_t t1 = 0; t1 < N; ++t1) {
      for (std::size_t t2 = 0; t2 < N; ++t2) {
        for (std::size_t t3 = 0; t3 < N; ++t3) {
          if (t1 == t2 || t1 == t3 || t2 == t3) continue;
          if (mult[t1] != mult[src[0]] || mult[t2] != mult[src[1]] || mult[t3] != mult[src[2]]) {
            continue;
          }
          cands.push_back({{static_cast<std::uint32_t>(t1), static_cast<std::uint32_t>(t2),
                            static_cast<std::uint32_t>(t3)},
                           {}});
        }
      }
    }
  }

  // A true symmetry maps roots onto roots up to root accuracy; sep/3 only
  // guarantees uniqueness of the match and admits near-symmetries.
  const BigFloat Rb(1 + R, prec);
  const BigFloat tau =
      std::min(rs.sep / BigFloat(3.0L, prec),
               max(exp2(-static_cast<long>(prec / 4), prec), rs.cluster_radius * BigFloat(64.0L, prec)) *
                   Rb * Rb,
               [](const BigFloat& a, const BigFloat& b) { return a < b; });
  const std::array<BigComplex, 3> zs{rs.roots[src[0]].value, rs.roots[src[1]].value,
                                     rs.roots[src[2]].value};
  std::vector<ProjectiveMatrix> out;
  for (const auto& c : cands) {
    const auto m = solve_triple<BigComplex>(
        zs, {rs.roots[c.target[0]].value, rs.roots[c.target[1]].value, rs.roots[c.target[2]].value},
        cnum(1, 0, prec));
    // High-precision permutation check.
    std::vector<bool> used(N, false);
    bool ok = true;
    for (std::size_t j = 0; j < N && ok; ++j) {
      const BigComplex den = m[2] * rs.roots[j].value + m[3];
      if (den.is_zero()) {
        ok = false;
        break;
      }
      const BigComplex w = (m[0] * rs.roots[j].value + m[1]) / den;
      bool hit = false;
      if (!c.perm.empty()) {
        const auto k = c.perm[j];
        hit = (w - rs.roots[k].value).abs() < tau;
        if (hit) used[k] = true;
      } else {
        for (std::size_t k = 0; k < N && !hit; ++k) {
          if (!used[k] && rs.roots[k].multiplicity == rs.roots[j].multiplicity &&
              (w - rs.roots[k].value).abs() < tau) {
            used[k] = true;
            hit = true;
          }
        }
      }
      ok = hit;
    }
    if (!ok) continue;
    ProjectiveMatrix A(std::array<BigComplex, 4>{m[0], m[1], m[2], m[3]});
    if (!verify_invariance(p, A.entries(), p.degree() + 1, prec)) throw NeedMorePrecision{};
    out.push_back(std::move(A));
  }
  return out;
}

}  // namespace

SymmetryGroup symmetry_group(const HomPoly& w, std::optional<unsigned> q,
                             const SymmetryOptions& opts) {
  SymmetryGroup G;
  G.degree = w.degree();
  const Finiteness fin = classify_finiteness(w, q);
  G.distinct_roots = fin.distinct_count;
  if (fin.kind == GroupKind::Infinite) {
    G.kind = GroupKind::Infinite;
    G.infinite_case = fin.infinite_case;
    return G;
  }

  // Move a root at (1:0) away with T = [1 0; t 1]; then T A T^-1 is a symmetry of w.
  long t = 0;
  HomPoly pT = w;
  if (w[0] == 0) {
    for (t = 1;; ++t) {
      mpq_class v = 0;
      mpq_class tp = 1;
      for (std::size_t i = 0; i <= w.degree(); ++i) {
        v += w[i] * tp;
        tp *= t;
      }
      if (v != 0) break;
    }
    pT = substitute_exact(w, {1, 0, mpq_class(t), 1});
  }

  std::vector<ProjectiveMatrix> found;
  mpfr_prec_t prec = opts.roots.precision;
  for (;;) {
    RootOptions ro = opts.roots;
    ro.precision = prec;
    const RootSet rs = find_roots(pT, ro);
    try {
      found = symmetries_from_roots(pT, rs, opts.threads);
      prec = rs.prec;
      break;
    } catch (const NeedMorePrecision&) {
      prec = rs.prec * 2;
      if (prec > opts.roots.max_precision) {
        throw Error(Errc::PrecisionExhausted, "symmetry verification failed at " +
                                                  std::to_string(rs.prec) + " bits");
      }
    }
  }
  G.prec = prec;

  if (t != 0) {
    const std::array<BigComplex, 4> T{cnum(1, 0, prec), cnum(0, 0, prec),
                                      cnum(static_cast<long double>(t), 0, prec), cnum(1, 0, prec)};
    const std::array<BigComplex, 4> Ti{cnum(1, 0, prec), cnum(0, 0, prec),
                                       cnum(-static_cast<long double>(t), 0, prec),
                                       cnum(1, 0, prec)};
    for (auto& A : found) A = ProjectiveMatrix(T) * A * ProjectiveMatrix(Ti);
  }

  std::vector<CMat> mats;
  mats.reserve(found.size());
  for (const auto& A : found) mats.push_back(A.to_cld());
  const GroupTable table(mats);
  G.iso = identify(table);

  const NumericForm F(w, prec);
  const auto e = base_point(F, prec);
  const BigComplex pe = F.eval(e[0], e[1]);
  std::vector<std::size_t> idx(found.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if ((a == table.identity) != (b == table.identity)) return a == table.identity;
    if (table.orders[a] != table.orders[b]) return table.orders[a] < table.orders[b];
    return key_of(table.mats[a]) < key_of(table.mats[b]);
  });
  for (auto i : idx) {
    SymmetryElement el;
    el.proj = found[i];
    const auto ge = apply(el.proj.entries(), e[0], e[1]);
    el.lambda = F.eval(ge[0], ge[1]) / pe;
    el.order = table.orders[i];
    G.elements.push_back(std::move(el));
  }
  G.proj_order = G.elements.size();
  G.full_order = G.degree * G.proj_order;
  return G;
}

IsoType identify_group(const std::vector<CMat>& elements) {
  if (elements.empty()) throw Error(Errc::InvalidArgument, "empty group");
  return identify(GroupTable(elements));
}

std::vector<CMat> generate_group(const std::vector<CMat>& generators, std::size_t max_order) {
  std::vector<CMat> els{CMat{1, 0, 0, 1}};
  auto contains = [&](const CMat& m) {
    return std::any_of(els.begin(), els.end(),
                       [&](const CMat& e) { return proj_dist(e, m) <= kGroupTol; });
  };
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (const auto& g : generators) {
      const CMat p = canon(mul(els[i], canon(g)));
      if (!contains(p)) {
        els.push_back(p);
        if (els.size() > max_order) {
          throw Error(Errc::ClosureFailure, "generated group exceeds " + std::to_string(max_order));
        }
      }
    }
  }
  return els;
}

ScalarLift lift_scalars(const SymmetryGroup& g) {
  ScalarLift out;
  if (g.kind != GroupKind::Finite) return out;
  out.full_order = g.degree * g.proj_order;
  const auto n = static_cast<unsigned long>(g.degree);
  for (const auto& el : g.elements) {
    BigFloat r = el.lambda.abs();
    mpfr_rootn_ui(r.raw(), r.raw(), n, MPFR_RNDN);
    r = BigFloat(1.0L, r.prec()) / r;
    const BigFloat th = -el.lambda.arg() / BigFloat(static_cast<long double>(n), r.prec());
    out.scalings.push_back(BigComplex::polar(r, th));
  }
  return out;
}

BigComplex cross_ratio(const BigComplex& z1, const BigComplex& z2, const BigComplex& z3,
                       const BigComplex& z4) {
  const BigComplex d13 = z1 - z3, d24 = z2 - z4, d14 = z1 - z4, d23 = z2 - z3;
  if (d13.is_zero() || d24.is_zero() || d14.is_zero() || d23.is_zero() || (z1 - z2).is_zero() ||
      (z3 - z4).is_zero()) {
    throw Error(Errc::DegenerateTuple, "cross ratio of coincident points");
  }
  return d13 * d24 / (d14 * d23);
}

std::optional<CrossRatioCertificate> trivial_certificate(const RootSet& rs) {
  const std::size_t N = rs.roots.size();
  if (N < 5) throw Error(Errc::InvalidArgument, "certificate needs at least five roots");
  if (N > 40) throw Error(Errc::InvalidArgument, "certificate search limited to 40 roots");
  std::vector<cld> z(N);
  long double R = 1;
  for (std::size_t i = 0; i < N; ++i) {
    z[i] = rs.roots[i].value.to_cld();
    R = std::max(R, std::abs(z[i]));
  }
  const long double sep = rs.sep.to_ld();
  const long double rel = 1e-12L * (R / sep) * (R / sep);
  auto cr = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return (z[a] - z[c]) * (z[b] - z[d]) / ((z[a] - z[d]) * (z[b] - z[c]));
  };
  std::vector<std::pair<long double, long double>> all;
  all.reserve(N * (N - 1) * (N - 2) * (N - 3));
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) {
      if (b == a) continue;
      for (std::size_t c = 0; c < N; ++c) {
        if (c == a || c == b) continue;
        for (std::size_t d = 0; d < N; ++d) {
          if (d == a || d == b || d == c) continue;
          const cld v = cr(a, b, c, d);
          all.emplace_back(v.real(), v.imag());
        }
      }
    }
  }
  std::sort(all.begin(), all.end());
  auto critical = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    const cld v = cr(a, b, c, d);
    const long double tol = rel * (1 + std::abs(v));
    auto it = std::lower_bound(all.begin(), all.end(), std::make_pair(v.real() - tol, -LDBL_MAX));
    std::size_t hits = 0;
    for (; it != all.end() && it->first <= v.real() + tol; ++it) {
      if (std::abs(it->second - v.imag()) <= tol) ++hits;
    }
    return hits == 4;
  };
  // First triple (in lexicographic 4-set order) lying in two critical 4-sets.
  std::map<std::array<std::size_t, 3>, std::size_t> seen;
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = a + 1; b < N; ++b) {
      for (std::size_t c = b + 1; c < N; ++c) {
        for (std::size_t d = c + 1; d < N; ++d) {
          if (!critical(a, b, c, d)) continue;
          const std::array<std::size_t, 4> s{a, b, c, d};
          for (int drop = 3; drop >= 0; --drop) {
            std::array<std::size_t, 3> tri;
            for (int i = 0, t = 0; i < 4; ++i) {
              if (i != drop) tri[t++] = s[i];
            }
            auto [it, fresh] = seen.emplace(tri, s[drop]);
            if (!fresh && it->second != s[drop]) {
              const std::size_t e1 = it->second, e2 = s[drop];
              CrossRatioCertificate cert;
              cert.roots = {tri[0], tri[1], tri[2], e1, e2};
              cert.first = {tri[0], tri[1], tri[2], e1};
              cert.second = {tri[0], tri[1], tri[2], e2};
              return cert;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<int> check_v_antiinvariance(const HomPoly& w, mpfr_prec_t prec) {
  const BigFloat h = sqrt(BigFloat(0.5L, prec));
  const BigComplex z8(h, h);
  const BigComplex z8i(h, -h);
  const std::array<BigComplex, 4> v{cnum(1, 0, prec) * h, z8 * h, z8i * h, cnum(-1, 0, prec) * h};
  for (int s : {1, -1}) {
    const BigFloat r =
        invariance_residual(w, v, cnum(static_cast<long double>(s), 0, prec), w.degree() + 1, prec);
    if (r <= exp2(-static_cast<long>(prec / 2), prec)) return s;
  }
  return std::nullopt;
}

}  // namespace wesym
