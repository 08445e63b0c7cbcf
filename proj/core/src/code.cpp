#include "wesym/code.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "wesym/error.hpp"

namespace wesym {

LinearCode::LinearCode(FieldPtr field, std::size_t n, std::vector<Row> gen, std::string name)
    : field_(std::move(field)), n_(n), gen_(std::move(gen)), name_(std::move(name)) {
  if (!field_) throw Error(Errc::InvalidArgument, "code without a field");
  for (std::size_t i = 0; i < gen_.size(); ++i) {
    if (gen_[i].size() != n_) {
      throw Error(Errc::RaggedRows, "row " + std::to_string(i) + " has length " +
                                        std::to_string(gen_[i].size()) + ", expected " +
                                        std::to_string(n_));
    }
    for (Elem e : gen_[i]) {
      if (e >= field_->q()) {
        throw Error(Errc::InvalidArgument, "element " + std::to_string(e) +
                                               " outside GF(" + std::to_string(field_->q()) +
                                               ")");
      }
    }
  }
  if (gen_.size() > n_) throw Error(Errc::RankDeficient, "more rows than columns");
  if (rank(*field_, gen_) != gen_.size()) {
    throw Error(Errc::RankDeficient, "generator rows are linearly dependent");
  }
}

WeightEnumerator make_enumerator(std::vector<long long> coeffs) {
  WeightEnumerator w;
  w.coeffs.reserve(coeffs.size());
  for (long long c : coeffs) w.coeffs.emplace_back(static_cast<long>(c));
  return w;
}

std::vector<std::size_t> row_reduce(const Field& F, std::vector<Row>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Elem s = F.inv(rows[r][col]);
    for (auto& e : rows[r]) e = F.mul(e, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Elem f = F.neg(rows[i][col]);
      for (std::size_t j = col; j < n; ++j) {
        if (rows[r][j] != 0) rows[i][j] = F.add(rows[i][j], F.mul(f, rows[r][j]));
      }
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank(const Field& F, std::vector<Row> rows) {
  return row_reduce(F, rows).size();
}

LinearCode code_from_matrix(FieldPtr field, std::vector<Row> rows, std::string name) {
  if (rows.empty()) throw Error(Errc::InvalidArgument, "empty generator matrix");
  const std::size_t n = rows[0].size();
  return LinearCode(std::move(field), n, std::move(rows), std::move(name));
}

LinearCode zero_code(FieldPtr field, std::size_t n) {
  return LinearCode(std::move(field), n, {}, "zero");
}

LinearCode full_space(FieldPtr field, std::size_t n) {
  std::vector<Row> rows(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return LinearCode(std::move(field), n, std::move(rows), "full");
}

LinearCode repetition(FieldPtr field, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "repetition code needs n >= 1");
  return LinearCode(std::move(field), n, {Row(n, 1)}, "repetition");
}

LinearCode dual(const LinearCode& code) {
  const Field& F = code.F();
  const std::size_t n = code.n();
  std::vector<Row> rref = code.gen();
  const auto pivots = row_reduce(F, rref);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Row> out;
  out.reserve(n - pivots.size());
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Row v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(rref[i][f]);
    out.push_back(std::move(v));
  }
  std::string name = code.name().empty() ? std::string{} : code.name() + "^perp";
  return LinearCode(code.field(), n, std::move(out), std::move(name));
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
  if (!(a.F() == b.F())) throw Error(Errc::FieldMismatch, "direct sum over different fields");
  const std::size_t n = a.n() + b.n();
  std::vector<Row> rows;
  rows.reserve(a.k() + b.k());
  for (const auto& r : a.gen()) {
    Row v(n, 0);
    std::copy(r.begin(), r.end(), v.begin());
    rows.push_back(std::move(v));
  }
  for (const auto& r : b.gen()) {
    Row v(n, 0);
    std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(a.n()));
    rows.push_back(std::move(v));
  }
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "+" + b.name();
  return LinearCode(a.field(), n, std::move(rows), std::move(name));
}

std::uint64_t codeword_count(unsigned q, std::size_t k) noexcept {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (c > std::numeric_limits<std::uint64_t>::max() / q) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    c *= q;
  }
  return c;
}

WeightEnumerator macwilliams(const WeightEnumerator& w, unsigned q, std::size_t k) {
  const std::size_t n = w.degree();
  const mpz_class qm1 = q - 1;
  // col holds the coefficients of (1+(q-1)z)^(n-i) (1-z)^i for the current i.
  std::vector<mpz_class> col(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, j);
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), qm1.get_mpz_t(), j);
    col[j] = b * p;
  }
  std::vector<mpz_class> acc(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    if (w.coeffs[i] != 0) {
      for (std::size_t j = 0; j <= n; ++j) acc[j] += w.coeffs[i] * col[j];
    }
    if (i == n) break;
    // Multiply by (1-z), then divide exactly by (1+(q-1)z).
    for (std::size_t j = n; j > 0; --j) col[j] -= col[j - 1];
    for (std::size_t j = 1; j <= n; ++j) col[j] -= qm1 * col[j - 1];
  }
  mpz_class size;
  mpz_ui_pow_ui(size.get_mpz_t(), q, k);
  WeightEnumerator out;
  out.coeffs.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    if (!mpz_divisible_p(acc[j].get_mpz_t(), size.get_mpz_t())) {
      throw Error(Errc::NonIntegerResult,
                  "coefficient " + std::to_string(j) + " not divisible by q^k");
    }
    mpz_divexact(out.coeffs[j].get_mpz_t(), acc[j].get_mpz_t(), size.get_mpz_t());
  }
  out.q = q;
  if (k <= n) out.k = n - k;
  return out;
}

WeightEnumerator macwilliams(const WeightEnumerator& w) {
  if (!w.q || !w.k) throw Error(Errc::InvalidArgument, "enumerator lacks (q, k) provenance");
  return macwilliams(w, *w.q, *w.k);
}

std::size_t divisibility(const WeightEnumerator& w) {
  std::size_t g = 0;
  for (std::size_t i = 1; i < w.coeffs.size(); ++i) {
    if (w.coeffs[i] != 0) g = std::gcd(g, i);
  }
  return g;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

LinearCode read_code(std::istream& in) {
  std::string text;
  std::size_t lineno = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++lineno;
      const auto pos = out.find_first_not_of(" \t\r");
      if (pos != std::string::npos && out[pos] != '#') return true;
    }
    return false;
  };
  if (!next_line(text)) parse_fail(lineno + 1, "missing header 'q k n'");
  std::istringstream hs(text);
  long long q = 0;
  long long k = -1;
  long long n = -1;
  if (!(hs >> q >> k >> n) || q < 2 || k < 0 || n < 0) {
    parse_fail(lineno, "expected header 'q k n'");
  }
  std::string extra;
  if (hs >> extra) parse_fail(lineno, "trailing token '" + extra + "' in header");
  FieldPtr field = field_of_order(static_cast<unsigned>(q));
  std::vector<Row> rows;
  for (long long i = 0; i < k; ++i) {
    if (!next_line(text)) parse_fail(lineno + 1, "expected " + std::to_string(k) + " rows");
    std::istringstream rs(text);
    Row row;
    std::string tok;
    while (rs >> tok) {
      long long v = -1;
      try {
        std::size_t used = 0;
        v = std::stoll(tok, &used);
        if (used != tok.size()) v = -1;
      } catch (const std::exception&) {
        v = -1;
      }
      if (v < 0 || v >= q) parse_fail(lineno, "invalid element '" + tok + "'");
      row.push_back(static_cast<Elem>(v));
    }
    if (static_cast<long long>(row.size()) != n) {
      parse_fail(lineno, "row has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(n));
    }
    rows.push_back(std::move(row));
  }
  return LinearCode(std::move(field), static_cast<std::size_t>(n), std::move(rows));
}

LinearCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return read_code(in);
}

void write_code(std::ostream& out, const LinearCode& code) {
  out << code.F().q() << ' ' << code.k() << ' ' << code.n() << '\n';
  for (const auto& row : code.gen()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

}  // namespace wesym
