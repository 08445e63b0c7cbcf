#include "wesym/wpoly.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "wesym/error.hpp"

namespace wesym {

HomPoly::HomPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.assign(1, 0);
  for (auto& c : c_) c.canonicalize();
}

HomPoly::HomPoly(const WeightEnumerator& w) {
  c_.reserve(w.coeffs.size());
  for (const auto& a : w.coeffs) c_.emplace_back(a);
  if (c_.empty()) c_.assign(1, 0);
}

HomPoly HomPoly::from_ints(const std::vector<long long>& coeffs) {
  std::vector<mpq_class> c;
  for (long long v : coeffs) c.emplace_back(static_cast<long>(v));
  return HomPoly(std::move(c));
}

HomPoly HomPoly::monomial(std::size_t n, std::size_t i, const mpq_class& c) {
  std::vector<mpq_class> v(n + 1, 0);
  v.at(i) = c;
  return HomPoly(std::move(v));
}

bool HomPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& c) { return c == 0; });
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
  if (degree() != o.degree()) throw Error(Errc::DegreeMismatch, "adding forms of different degree");
  std::vector<mpq_class> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return HomPoly(std::move(r));
}

HomPoly HomPoly::operator-(const HomPoly& o) const {
  if (degree() != o.degree()) throw Error(Errc::DegreeMismatch, "subtracting forms of different degree");
  std::vector<mpq_class> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
  return HomPoly(std::move(r));
}

HomPoly HomPoly::operator*(const mpq_class& s) const {
  std::vector<mpq_class> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return HomPoly(std::move(r));
}

std::string HomPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  const std::size_t n = degree();
  for (std::size_t i = 0; i <= n; ++i) {
    if (c_[i] == 0) continue;
    mpq_class c = c_[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    c = abs(c);
    const bool unit = c == 1 && n > 0;
    if (!unit) os << c.get_str();
    const std::size_t ex = n - i;
    if (ex) os << (unit ? "" : "*") << "x" << (ex > 1 ? "^" + std::to_string(ex) : "");
    if (i) os << ((unit && !ex) ? "" : "*") << "y" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

HomPoly product(const HomPoly& a, const HomPoly& b) {
  std::vector<mpq_class> r(a.degree() + b.degree() + 1, 0);
  for (std::size_t i = 0; i <= a.degree(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j <= b.degree(); ++j) r[i + j] += a[i] * b[j];
  }
  return HomPoly(std::move(r));
}

HomPoly power(const HomPoly& a, unsigned e) {
  HomPoly result = HomPoly::from_ints({1});
  HomPoly base = a;
  while (e) {
    if (e & 1u) result = product(result, base);
    e >>= 1;
    if (e) base = product(base, base);
  }
  return result;
}

HomPoly substitute_exact(const HomPoly& p, const RatMatrix& M) {
  if (M[0] * M[3] - M[1] * M[2] == 0) throw Error(Errc::SingularMatrix, "singular substitution");
  const std::size_t n = p.degree();
  // Powers of the linear forms ax+by and cx+dy, stored as HomPoly.
  const HomPoly L(std::vector<mpq_class>{M[0], M[1]});
  const HomPoly R(std::vector<mpq_class>{M[2], M[3]});
  std::vector<HomPoly> Lp(n + 1), Rp(n + 1);
  Lp[0] = Rp[0] = HomPoly::from_ints({1});
  for (std::size_t j = 1; j <= n; ++j) {
    Lp[j] = product(Lp[j - 1], L);
    Rp[j] = product(Rp[j - 1], R);
  }
  std::vector<mpq_class> acc(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    if (p[i] == 0) continue;
    const HomPoly t = product(Lp[n - i], Rp[i]);
    for (std::size_t j = 0; j <= n; ++j) acc[j] += p[i] * t[j];
  }
  return HomPoly(std::move(acc));
}

namespace {

// Univariate rational polynomials, low -> high, no trailing zeros.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const QPoly& a) { return static_cast<int>(a.size()) - 1; }

QPoly derivative(const QPoly& a) {
  QPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

// Quotient and remainder; b nonzero.
void divmod(QPoly a, const QPoly& b, QPoly& quo, QPoly& rem) {
  trim(a);
  quo.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const mpq_class lead = b.back();
  while (deg(a) >= deg(b)) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class f = a.back() / lead;
    quo[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(quo);
  rem = std::move(a);
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return q;
}

void make_monic(QPoly& a) {
  if (a.empty()) return;
  const mpq_class l = a.back();
  for (auto& c : a) c /= l;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Primitive integer multiple with positive leading coefficient.
std::vector<mpz_class> primitive(const QPoly& a) {
  mpz_class l = 1;
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_class v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  }
  if (!z.empty() && z.back() < 0) g = -g;
  for (auto& v : z) v /= g;
  return z;
}

}  // namespace

MultiplicityStructure multiplicity_structure(const HomPoly& p) {
  if (p.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial has no root structure");
  const std::size_t n = p.degree();
  MultiplicityStructure ms;
  ms.degree = n;
  std::size_t first = 0;
  while (p[first] == 0) ++first;
  std::size_t last = n;
  while (p[last] == 0) --last;
  ms.infinity_multiplicity = first;
  ms.zero_multiplicity = n - last;

  // h(z) = sum_{i=first..last} c_i z^(last-i); exponents e = last - i.
  std::size_t g = 0;
  for (std::size_t i = first; i <= last; ++i) {
    if (p[i] != 0) g = std::gcd(g, last - i);
  }
  if (g == 0) g = 1;
  ms.exponent_gcd = g;
  QPoly P((last - first) / g + 1, 0);
  for (std::size_t i = first; i <= last; ++i) {
    if (p[i] != 0) P[(last - i) / g] = p[i];
  }
  trim(P);

  // Yun's squarefree decomposition of P.
  std::size_t nonzero_roots = 0;
  QPoly sqfree_prod{1};
  if (deg(P) > 0) {
    QPoly b = derivative(P);
    QPoly c = gcd(P, b);
    QPoly w = exact_div(P, c);
    QPoly y = exact_div(b, c);
    QPoly z = sub(y, derivative(w));
    std::size_t i = 1;
    while (deg(w) > 0) {
      QPoly a = gcd(w, z);
      if (deg(a) > 0) {
        ms.factors.push_back({primitive(a), i});
        nonzero_roots += static_cast<std::size_t>(deg(a));
        QPoly prod(sqfree_prod.size() + a.size() - 1, 0);
        for (std::size_t s = 0; s < sqfree_prod.size(); ++s) {
          for (std::size_t t = 0; t < a.size(); ++t) prod[s + t] += sqfree_prod[s] * a[t];
        }
        sqfree_prod = std::move(prod);
      }
      w = exact_div(w, a);
      y = exact_div(z, a);
      z = sub(y, derivative(w));
      ++i;
    }
  }

  if (ms.infinity_multiplicity) ms.multiplicities.push_back(ms.infinity_multiplicity);
  if (ms.zero_multiplicity) ms.multiplicities.push_back(ms.zero_multiplicity);
  for (const auto& f : ms.factors) {
    ms.multiplicities.insert(ms.multiplicities.end(), g * (f.coeffs.size() - 1), f.multiplicity);
  }
  std::sort(ms.multiplicities.rbegin(), ms.multiplicities.rend());
  ms.distinct_count = ms.multiplicities.size();

  // Squarefree form: y^[L>0] x^[T>0] prod a_i(x^g / y^g) y^(g deg).
  const auto prim = primitive(sqfree_prod);
  const std::size_t core = g * (prim.size() - 1);
  const std::size_t has_inf = ms.infinity_multiplicity ? 1 : 0;
  const std::size_t has_zero = ms.zero_multiplicity ? 1 : 0;
  std::vector<mpq_class> sq(core + has_inf + has_zero + 1, 0);
  for (std::size_t j = 0; j < prim.size(); ++j) {
    // u^j -> x^(g j) y^(core - g j); index of y-power.
    sq[core - g * j + has_inf] = prim[j];
  }
  ms.squarefree_part = HomPoly(std::move(sq));
  return ms;
}

bool is_formally_self_dual(const WeightEnumerator& w, unsigned q) {
  const std::size_t n = w.degree();
  mpz_class scale;
  if (n % 2 == 0) {
    mpz_ui_pow_ui(scale.get_mpz_t(), q, n / 2);
  } else {
    mpz_class root;
    mpz_class qq = q;
    if (!mpz_perfect_square_p(qq.get_mpz_t())) return false;
    mpz_sqrt(root.get_mpz_t(), qq.get_mpz_t());
    mpz_pow_ui(scale.get_mpz_t(), root.get_mpz_t(), n);
  }
  WeightEnumerator plain = w;
  plain.q.reset();
  plain.k.reset();
  const WeightEnumerator sub = macwilliams(plain, q, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    if (sub.coeffs[i] != scale * w.coeffs[i]) return false;
  }
  return true;
}

HomPoly read_poly(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next = [&]() {
    while (std::getline(in, line)) {
      ++lineno;
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos != std::string::npos && line[pos] != '#') {
        const auto end = line.find_last_not_of(" \t\r");
        line = line.substr(pos, end - pos + 1);
        return true;
      }
    }
    return false;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  if (!next()) fail("missing degree");
  long long n = -1;
  try {
    std::size_t used = 0;
    n = std::stoll(line, &used);
    if (used != line.size()) n = -1;
  } catch (const std::exception&) {
    n = -1;
  }
  if (n < 0) fail("invalid degree '" + line + "'");
  std::vector<mpq_class> c;
  for (long long i = 0; i <= n; ++i) {
    if (!next()) {
      ++lineno;
      fail("expected " + std::to_string(n + 1) + " coefficients");
    }
    mpq_class v;
    if (v.set_str(line, 10) != 0 || (line.find('/') != std::string::npos && v.get_den() == 0)) {
      fail("invalid rational '" + line + "'");
    }
    v.canonicalize();
    c.push_back(v);
  }
  return HomPoly(std::move(c));
}

HomPoly read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return read_poly(in);
}

void write_poly(std::ostream& out, const HomPoly& p) {
  out << p.degree() << '\n';
  for (const auto& c : p.coeffs()) out << c.get_str() << '\n';
}

WeightEnumerator to_enumerator(const HomPoly& p) {
  WeightEnumerator w;
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) throw Error(Errc::InvalidArgument, "non-integer coefficient " + c.get_str());
    w.coeffs.push_back(c.get_num());
  }
  return w;
}

}  // namespace wesym
