#include <algorithm>
#include <functional>

#include "wesym/code.hpp"
#include "wesym/error.hpp"

namespace wesym {

namespace {

std::uint64_t checked_length(unsigned q, unsigned m, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < m; ++i) {
    n *= q;
    if (n > cap) {
      throw Error(Errc::FieldTooLarge, "length " + std::to_string(q) + "^" + std::to_string(m) +
                                           " exceeds cap " + std::to_string(cap));
    }
  }
  return n;
}

// All exponent vectors of length m with entries <= emax and total in [lo, hi],
// ordered by total degree, then lexicographically.
std::vector<std::vector<unsigned>> exponents(unsigned m, unsigned emax, unsigned lo,
                                             unsigned hi) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(m, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
    if (pos == m) {
      if (left == 0) out.push_back(e);
      return;
    }
    for (unsigned x = std::min(emax, left) + 1; x-- > 0;) {
      e[pos] = x;
      rec(pos + 1, left - x);
    }
    e[pos] = 0;
  };
  for (unsigned d = lo; d <= hi; ++d) rec(0, d);
  return out;
}

Row evaluate(const Field& F, const std::vector<unsigned>& e,
             const std::vector<std::vector<Elem>>& points) {
  Row r(points.size());
  for (std::size_t x = 0; x < points.size(); ++x) {
    Elem v = 1;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j]) v = F.mul(v, F.pow(points[x][j], e[j]));
    }
    r[x] = v;
  }
  return r;
}

LinearCode binary(std::vector<std::vector<int>> m, std::string name) {
  std::vector<Row> rows;
  for (const auto& r : m) rows.emplace_back(r.begin(), r.end());
  return code_from_matrix(make_field(2), std::move(rows), std::move(name));
}

// [I | X] with X a 7x7 block.
LinearCode identity_block(const std::vector<std::vector<int>>& X, std::string name) {
  std::vector<std::vector<int>> m;
  for (std::size_t i = 0; i < X.size(); ++i) {
    std::vector<int> r(X.size(), 0);
    r[i] = 1;
    r.insert(r.end(), X[i].begin(), X[i].end());
    m.push_back(std::move(r));
  }
  return binary(std::move(m), std::move(name));
}

LinearCode golay24() {
  // Extended cyclic Golay code: shifts of g(x) over length 23, plus parity.
  const std::vector<int> g = {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1};  // x^0..x^11
  std::vector<std::vector<int>> m;
  for (int s = 0; s < 12; ++s) {
    std::vector<int> r(24, 0);
    int parity = 0;
    for (int j = 0; j < 12; ++j) {
      r[s + j] = g[j];
      parity ^= g[j];
    }
    r[23] = parity;
    m.push_back(std::move(r));
  }
  return binary(std::move(m), "golay24");
}

LinearCode golay12_ternary() {
  const int B[6][6] = {{0, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 2, 1}, {1, 1, 0, 1, 2, 2},
                       {1, 2, 1, 0, 1, 2}, {1, 2, 2, 1, 0, 1}, {1, 1, 2, 2, 1, 0}};
  std::vector<Row> rows;
  for (int i = 0; i < 6; ++i) {
    Row r(12, 0);
    r[i] = 1;
    for (int j = 0; j < 6; ++j) r[6 + j] = static_cast<Elem>(B[i][j]);
    rows.push_back(std::move(r));
  }
  return code_from_matrix(make_field(3), std::move(rows), "golay12_ternary");
}

}  // namespace

LinearCode reed_muller(FieldPtr field, unsigned r, unsigned m, std::uint64_t length_cap) {
  if (m == 0) throw Error(Errc::InvalidArgument, "reed_muller needs m >= 1");
  const Field& F = *field;
  const unsigned q = F.q();
  const std::uint64_t n = checked_length(q, m, length_cap);
  std::vector<std::vector<Elem>> points(n, std::vector<Elem>(m));
  for (std::uint64_t x = 0; x < n; ++x) {
    std::uint64_t v = x;
    for (unsigned j = 0; j < m; ++j) {
      points[x][j] = static_cast<Elem>(v % q);
      v /= q;
    }
  }
  const unsigned top = std::min(r, m * (q - 1));
  std::vector<Row> rows;
  for (const auto& e : exponents(m, q - 1, 0, top)) rows.push_back(evaluate(F, e, points));
  std::string name = "RM_" + std::to_string(q) + "(" + std::to_string(r) + "," +
                     std::to_string(m) + ")";
  return LinearCode(std::move(field), n, std::move(rows), std::move(name));
}

LinearCode projective_reed_muller(FieldPtr field, unsigned r, unsigned m,
                                  std::uint64_t length_cap) {
  if (r == 0 || m == 0) throw Error(Errc::InvalidArgument, "projective_reed_muller needs r, m >= 1");
  const Field& F = *field;
  const unsigned q = F.q();
  const std::uint64_t all = checked_length(q, m + 1, length_cap * q);
  // Representatives with first nonzero coordinate 1, lexicographic in (x_0..x_m).
  std::vector<std::vector<Elem>> points;
  std::vector<Elem> pt(m + 1);
  for (std::uint64_t x = 0; x < all; ++x) {
    std::uint64_t v = x;
    for (unsigned j = m + 1; j-- > 0;) {
      pt[j] = static_cast<Elem>(v % q);
      v /= q;
    }
    auto first = std::find_if(pt.begin(), pt.end(), [](Elem e) { return e != 0; });
    if (first != pt.end() && *first == 1) points.push_back(pt);
  }
  if (points.size() > length_cap) {
    throw Error(Errc::FieldTooLarge, "projective length exceeds cap");
  }
  std::vector<Row> rows;
  for (const auto& e : exponents(m + 1, r, r, r)) rows.push_back(evaluate(F, e, points));
  row_reduce(F, rows);
  std::string name = "PRM_" + std::to_string(q) + "(" + std::to_string(r) + "," +
                     std::to_string(m) + ")";
  const std::size_t n = points.size();
  return LinearCode(std::move(field), n, std::move(rows), std::move(name));
}

std::vector<std::string> named_code_keys() {
  return {"hamming8", "golay24", "golay12_ternary", "X1", "X2", "X3", "X4", "X5"};
}

LinearCode named_code(std::string_view name) {
  if (name == "hamming8") {
    LinearCode c = reed_muller(make_field(2), 1, 3);
    c.set_name("hamming8");
    return c;
  }
  if (name == "golay24") return golay24();
  if (name == "golay12_ternary") return golay12_ternary();
  if (name == "X1") return binary({{1, 1}}, "X1");
  if (name == "X2") {
    return binary({{1, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 1, 1}, {0, 0, 1, 1, 1, 1}}, "X2");
  }
  if (name == "X3") {
    return identity_block({{1, 1, 1, 0, 0, 0, 0},
                           {1, 1, 1, 0, 0, 0, 0},
                           {1, 1, 1, 0, 0, 0, 0},
                           {1, 0, 0, 1, 1, 1, 1},
                           {1, 0, 0, 1, 1, 1, 1},
                           {1, 0, 0, 1, 1, 1, 1},
                           {1, 0, 0, 0, 0, 0, 0}},
                          "X3");
  }
  if (name == "X4") {
    return identity_block({{1, 1, 1, 1, 1, 0, 0},
                           {1, 1, 1, 1, 1, 0, 0},
                           {1, 1, 1, 1, 1, 0, 0},
                           {1, 1, 1, 1, 1, 0, 0},
                           {1, 1, 1, 1, 0, 1, 0},
                           {1, 1, 1, 1, 0, 1, 0},
                           {1, 1, 1, 1, 1, 1, 1}},
                          "X4");
  }
  if (name == "X5") {
    return identity_block({{1, 0, 1, 0, 1, 0, 0},
                           {1, 0, 1, 0, 1, 0, 0},
                           {1, 0, 1, 0, 1, 0, 0},
                           {1, 0, 1, 0, 1, 0, 0},
                           {1, 1, 1, 0, 1, 0, 1},
                           {1, 1, 1, 0, 1, 0, 1},
                           {1, 1, 1, 1, 1, 1, 1}},
                          "X5");
  }
  throw Error(Errc::UnknownName, "unknown code '" + std::string(name) + "'");
}

}  // namespace wesym
