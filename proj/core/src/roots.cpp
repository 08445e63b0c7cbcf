#include "wesym/roots.hpp"

#include <cfloat>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "wesym/error.hpp"

namespace wesym {

namespace {

using cld = std::complex<long double>;

BigComplex cone(mpfr_prec_t p) { return {BigFloat(1.0L, p), BigFloat(p)}; }

// Horner for a and a' at z.
void eval_ld(const std::vector<long double>& a, cld z, cld& f, cld& df) {
  f = a.back();
  df = 0;
  for (std::size_t j = a.size() - 1; j-- > 0;) {
    df = df * z + f;
    f = f * z + a[j];
  }
}

void eval_mp(const std::vector<BigFloat>& a, const BigComplex& z, BigComplex& f, BigComplex& df) {
  const mpfr_prec_t p = z.prec();
  f = BigComplex(a.back(), BigFloat(p));
  df = BigComplex(p);
  for (std::size_t j = a.size() - 1; j-- > 0;) {
    df *= z;
    df += f;
    f *= z;
    f.re() += a[j];
  }
}

// Fujiwara bound on root moduli.
long double root_bound(const std::vector<long double>& a) {
  const std::size_t d = a.size() - 1;
  const long double lead = std::fabs(a[d]);
  long double b = 0;
  for (std::size_t j = 0; j < d; ++j) {
    long double t = std::fabs(a[j]) / lead;
    if (j == 0) t /= 2;
    if (t > 0) b = std::max(b, std::pow(t, 1.0L / static_cast<long double>(d - j)));
  }
  return 2 * b;
}

// Aberth-Ehrlich on an integer polynomial of degree >= 2; low -> high coefficients.
std::vector<BigComplex> aberth(const std::vector<mpz_class>& coeffs, mpfr_prec_t prec,
                               std::mt19937_64& rng) {
  const std::size_t d = coeffs.size() - 1;
  std::vector<long double> a(d + 1);
  for (std::size_t j = 0; j <= d; ++j) a[j] = BigFloat(coeffs[j], 128).to_ld();

  const long double R = root_bound(a);
  std::uniform_real_distribution<long double> jitter(0.0L, 1.0L);
  const long double tau = 2 * std::numbers::pi_v<long double>;
  std::vector<cld> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    const long double th = tau * (static_cast<long double>(k) + 0.5L * jitter(rng)) / d + 0.4L;
    z[k] = std::polar(R * (0.9L + 0.1L * jitter(rng)), th);
  }
  for (int sweep = 0; sweep < 2000; ++sweep) {
    long double worst = 0;
    for (std::size_t i = 0; i < d; ++i) {
      cld f, df;
      eval_ld(a, z[i], f, df);
      if (f == cld(0)) continue;
      const cld N = f / df;
      cld S = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) S += 1.0L / (z[i] - z[j]);
      }
      const cld w = N / (1.0L - N * S);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      const long double scale = std::max(std::abs(z[i]), LDBL_MIN);
      worst = std::max(worst, std::abs(w) / scale);
    }
    if (worst < 8 * LDBL_EPSILON) break;
  }

  std::vector<BigFloat> A;
  A.reserve(d + 1);
  for (const auto& c : coeffs) A.emplace_back(c, prec);
  std::vector<BigComplex> Z;
  Z.reserve(d);
  for (const auto& v : z) Z.emplace_back(v, prec);
  const BigFloat target = exp2(-static_cast<long>(prec / 2), prec);
  const BigComplex one = cone(prec);
  int polish = 2;
  BigComplex f(prec), df(prec);
  for (int sweep = 0; sweep < 400 && polish > 0; ++sweep) {
    BigFloat worst(prec);
    for (std::size_t i = 0; i < d; ++i) {
      eval_mp(A, Z[i], f, df);
      if (f.is_zero() || df.is_zero()) continue;
      const BigComplex N = f / df;
      BigComplex S(prec);
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) S += one / (Z[i] - Z[j]);
      }
      const BigComplex w = N / (one - N * S);
      Z[i] -= w;
      const BigFloat az = Z[i].abs();
      if (!az.is_zero()) worst = max(worst, w.abs() / az);
    }
    if (worst < target) --polish;
  }
  return Z;
}

struct FactorRoots {
  std::vector<BigComplex> z;
  std::vector<BigFloat> a;  // coefficients of a(u)
  std::size_t multiplicity;
};

// f(z) = a(z^g) and f'(z).
void eval_factor(const FactorRoots& F, std::size_t g, const BigComplex& z, BigComplex& f,
                 BigComplex& df) {
  const BigComplex zg1 = pow(z, g - 1);
  const BigComplex u = zg1 * z;
  BigComplex da(z.prec());
  eval_mp(F.a, u, f, da);
  df = da * zg1 * BigFloat(static_cast<long double>(g), z.prec());
}

BigFloat abs_sum(const std::vector<BigFloat>& a, const BigFloat& r) {
  BigFloat acc(r.prec());
  for (std::size_t j = a.size(); j-- > 0;) {
    acc *= r;
    acc += abs(a[j]);
  }
  return acc;
}

bool attempt(const MultiplicityStructure& ms, mpfr_prec_t prec, std::uint64_t seed, RootSet& out) {
  std::mt19937_64 rng(seed);
  const std::size_t g = ms.exponent_gcd;
  const BigComplex one = cone(prec);
  std::vector<FactorRoots> parts;
  for (const auto& fac : ms.factors) {
    FactorRoots F;
    F.multiplicity = fac.multiplicity;
    for (const auto& c : fac.coeffs) F.a.emplace_back(c, prec);
    std::vector<BigComplex> us;
    if (fac.coeffs.size() == 2) {
      us.emplace_back(-(F.a[0] / F.a[1]), BigFloat(prec));
    } else {
      us = aberth(fac.coeffs, prec, rng);
    }
    const BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2.0L, prec);
    for (const auto& u : us) {
      if (g == 1) {
        F.z.push_back(u);
        continue;
      }
      BigFloat r = u.abs();
      mpfr_rootn_ui(r.raw(), r.raw(), g, MPFR_RNDN);
      const BigFloat th = u.arg();
      for (std::size_t k = 0; k < g; ++k) {
        BigFloat ang = (th + two_pi * BigFloat(static_cast<long double>(k), prec)) /
                       BigFloat(static_cast<long double>(g), prec);
        BigComplex z = BigComplex::polar(r, ang);
        BigComplex f(prec), df(prec);
        eval_factor(F, g, z, f, df);
        if (!df.is_zero()) z -= f / df;
        F.z.push_back(std::move(z));
      }
    }
    parts.push_back(std::move(F));
  }

  // Inclusion radii D |f(z_i)| / |lead prod_{j != i} (z_i - z_j)| per factor.
  BigFloat max_radius(prec);
  BigFloat max_resid(prec);
  for (const auto& F : parts) {
    const std::size_t D = F.z.size();
    const BigFloat lead = abs(F.a.back());
    for (std::size_t i = 0; i < D; ++i) {
      BigComplex f(prec), df(prec);
      eval_factor(F, g, F.z[i], f, df);
      const BigFloat af = f.abs();
      BigComplex prod = one;
      for (std::size_t j = 0; j < D; ++j) {
        if (j != i) prod *= F.z[i] - F.z[j];
      }
      const BigFloat denom = prod.abs() * lead;
      if (denom.is_zero()) return false;
      max_radius = max(max_radius, af * BigFloat(static_cast<long double>(D), prec) / denom);
      const BigFloat scale = abs_sum(F.a, pow(F.z[i], g).abs());
      if (!scale.is_zero()) max_resid = max(max_resid, af / scale);
    }
  }

  out.roots.clear();
  out.prec = prec;
  out.degree = ms.degree;
  out.infinity_multiplicity = ms.infinity_multiplicity;
  out.includes_zero = ms.zero_multiplicity > 0;
  if (out.includes_zero) out.roots.push_back({BigComplex(prec), ms.zero_multiplicity});
  for (auto& F : parts) {
    for (auto& z : F.z) out.roots.push_back({std::move(z), F.multiplicity});
  }
  out.cluster_radius = max_radius;
  out.residual_bound = max_resid;
  out.sep = out.roots.size() >= 2 ? pairwise_separation(out) : BigFloat(prec);

  const BigFloat tol = exp2(-static_cast<long>(prec / 2), prec);
  if (max_resid > tol) return false;
  if (out.roots.size() >= 2 && !(max_radius * BigFloat(3.0L, prec) < out.sep)) return false;
  return true;
}

}  // namespace

RootSet find_roots(const HomPoly& p, const RootOptions& opts) {
  const MultiplicityStructure ms = multiplicity_structure(p);
  RootSet rs;
  for (mpfr_prec_t prec = std::max<mpfr_prec_t>(opts.precision, 64); prec <= opts.max_precision;
       prec *= 2) {
    if (attempt(ms, prec, opts.seed, rs)) return rs;
  }
  throw Error(Errc::PrecisionExhausted,
              "root separation not certified at " + std::to_string(opts.max_precision) + " bits");
}

BigFloat pairwise_separation(const RootSet& rs) {
  if (rs.roots.size() < 2) throw Error(Errc::InvalidArgument, "separation needs two roots");
  BigFloat best(rs.prec);
  bool first = true;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < rs.roots.size(); ++j) {
      BigFloat d = (rs.roots[i].value - rs.roots[j].value).norm();
      if (first || d < best) {
        best = std::move(d);
        first = false;
      }
    }
  }
  return sqrt(best);
}

BigFloat reconstruction_error(const HomPoly& p, const RootSet& rs) {
  const mpfr_prec_t prec = rs.prec;
  const std::size_t n = p.degree();
  const std::size_t top = n - rs.infinity_multiplicity;  // degree of p(z,1)
  // target_k: coefficient of z^k of p(z,1)/lead.
  const BigFloat lead(p[rs.infinity_multiplicity], prec);
  std::vector<BigFloat> target(top + 1, BigFloat(prec));
  for (std::size_t i = rs.infinity_multiplicity; i <= n; ++i) {
    target[n - i] = BigFloat(p[i], prec) / lead;
  }
  std::vector<BigComplex> rebuilt(1, cone(prec));
  for (const auto& r : rs.roots) {
    for (std::size_t m = 0; m < r.multiplicity; ++m) {
      rebuilt.emplace_back(prec);
      for (std::size_t k = rebuilt.size() - 1; k > 0; --k) {
        rebuilt[k] = rebuilt[k - 1] - rebuilt[k] * r.value;
      }
      rebuilt[0] = -(rebuilt[0] * r.value);
    }
  }
  if (rebuilt.size() != top + 1) {
    throw Error(Errc::InvalidArgument, "root multiplicities do not match the degree");
  }
  BigFloat diff(prec), scale(prec);
  for (std::size_t k = 0; k <= top; ++k) {
    BigComplex t(target[k], BigFloat(prec));
    diff = max(diff, (rebuilt[k] - t).abs());
    scale = max(scale, abs(target[k]));
  }
  return diff / scale;
}

NumericForm::NumericForm(const HomPoly& p, mpfr_prec_t prec) : prec_(prec) {
  c_.reserve(p.degree() + 1);
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    c_.emplace_back(p[i], prec);
    if (p[i] != 0) support_.push_back(i);
  }
}

// Sparse homogeneous Horner: acc_k = acc_{k-1} x^(i_k - i_{k-1}) + c_{i_k} y^(i_k).
BigComplex NumericForm::eval(const BigComplex& x, const BigComplex& y) const {
  if (support_.empty()) return BigComplex(prec_);
  BigComplex acc(c_[support_[0]], BigFloat(prec_));
  BigComplex yp = pow(y, support_[0]);
  acc *= yp;
  std::size_t gap = 0;
  BigComplex xg(prec_), yg(prec_);
  for (std::size_t k = 1; k < support_.size(); ++k) {
    const std::size_t d = support_[k] - support_[k - 1];
    if (d != gap) {
      gap = d;
      xg = pow(x, d);
      yg = pow(y, d);
    }
    acc *= xg;
    yp *= yg;
    acc += yp * c_[support_[k]];
  }
  acc *= pow(x, degree() - support_.back());
  return acc;
}

BigFloat NumericForm::magnitude(const BigComplex& x, const BigComplex& y) const {
  if (support_.empty()) return BigFloat(prec_);
  const BigFloat ax = x.abs();
  const BigFloat ay = y.abs();
  auto rpow = [&](const BigFloat& b, std::size_t e) {
    BigFloat r(prec_);
    mpfr_pow_ui(r.raw(), b.raw(), e, MPFR_RNDN);
    return r;
  };
  BigFloat yp = rpow(ay, support_[0]);
  BigFloat acc = abs(c_[support_[0]]) * yp;
  for (std::size_t k = 1; k < support_.size(); ++k) {
    const std::size_t d = support_[k] - support_[k - 1];
    acc *= rpow(ax, d);
    yp *= rpow(ay, d);
    acc += abs(c_[support_[k]]) * yp;
  }
  acc *= rpow(ax, degree() - support_.back());
  return acc;
}

}  // namespace wesym
