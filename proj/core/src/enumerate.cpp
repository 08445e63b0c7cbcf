#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

#include "wesym/code.hpp"
#include "wesym/error.hpp"

namespace wesym {

namespace {

using Hist = std::vector<std::uint64_t>;

// Rows of the code viewed over the prime field: alpha^t * g_i for t < v.
std::vector<Row> prime_rows(const LinearCode& code) {
  const Field& F = code.F();
  std::vector<Row> out;
  out.reserve(code.k() * F.v());
  for (const auto& g : code.gen()) {
    for (unsigned t = 0; t < F.v(); ++t) {
      const Elem a = F.basis(t);
      Row r(g.size());
      for (std::size_t j = 0; j < g.size(); ++j) r[j] = F.mul(a, g[j]);
      out.push_back(std::move(r));
    }
  }
  return out;
}

// Base-p digits of the range start index; sized to the row count.
std::vector<unsigned> digits_of(std::uint64_t i, unsigned p, std::size_t K) {
  std::vector<unsigned> d(K + 1, 0);
  for (std::size_t j = 0; j < K && i; ++j) {
    d[j] = static_cast<unsigned>(i % p);
    i /= p;
  }
  return d;
}

// Gray coefficient of row j at index i: (d_j - d_{j+1}) mod p.
std::vector<unsigned> gray_of(const std::vector<unsigned>& d, unsigned p, std::size_t K) {
  std::vector<unsigned> g(K);
  for (std::size_t j = 0; j < K; ++j) g[j] = (d[j] + p - d[j + 1]) % p;
  return g;
}

// --- generic kernel: arbitrary GF(q), sparse row supports ----------------

struct GenericData {
  const Field* F;
  std::size_t n;
  std::vector<Row> rows;
  std::vector<std::vector<std::uint32_t>> support;
};

void run_generic(const GenericData& D, std::uint64_t begin, std::uint64_t end, Hist& hist) {
  const Field& F = *D.F;
  const unsigned p = F.p();
  const std::size_t K = D.rows.size();
  auto d = digits_of(begin, p, K);
  const auto g = gray_of(d, p, K);
  Row c(D.n, 0);
  for (std::size_t j = 0; j < K; ++j) {
    if (g[j] == 0) continue;
    const Elem s = static_cast<Elem>(g[j]);
    for (auto x : D.support[j]) c[x] = F.add(c[x], F.mul(s, D.rows[j][x]));
  }
  std::size_t wt = 0;
  for (Elem e : c) wt += e != 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    ++hist[wt];
    if (i + 1 == end) break;
    std::size_t t = 0;
    while (d[t] == p - 1) d[t++] = 0;
    ++d[t];
    const Row& r = D.rows[t];
    for (auto x : D.support[t]) {
      const Elem old = c[x];
      const Elem now = F.add(old, r[x]);
      c[x] = now;
      wt += static_cast<std::size_t>(now != 0) - static_cast<std::size_t>(old != 0);
    }
  }
}

// --- binary bit-sliced kernel: GF(2^V), plane t holds digit t ------------

template <unsigned V, unsigned W>
struct Packed {
  std::array<std::uint64_t, V * W> w{};
};

template <unsigned V, unsigned W>
std::vector<Packed<V, W>> pack_binary(const std::vector<Row>& rows) {
  std::vector<Packed<V, W>> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t x = 0; x < rows[i].size(); ++x) {
      for (unsigned t = 0; t < V; ++t) {
        if ((rows[i][x] >> t) & 1u) out[i].w[t * W + x / 64] |= std::uint64_t{1} << (x % 64);
      }
    }
  }
  return out;
}

template <unsigned V, unsigned W>
void run_binary(const std::vector<Packed<V, W>>& rows, std::uint64_t begin, std::uint64_t end,
                Hist& hist) {
  const std::size_t K = rows.size();
  Packed<V, W> c{};
  for (std::size_t j = 0; j < K; ++j) {
    const bool dj = (begin >> j) & 1u;
    const bool dj1 = j + 1 < 64 ? ((begin >> (j + 1)) & 1u) : false;
    if (dj != dj1) {
      for (unsigned u = 0; u < V * W; ++u) c.w[u] ^= rows[j].w[u];
    }
  }
  std::uint64_t* h = hist.data();
  for (std::uint64_t i = begin;;) {
    unsigned wt = 0;
    for (unsigned u = 0; u < W; ++u) {
      std::uint64_t any = c.w[u];
      for (unsigned t = 1; t < V; ++t) any |= c.w[t * W + u];
      wt += static_cast<unsigned>(std::popcount(any));
    }
    ++h[wt];
    if (++i == end) break;
    const auto& r = rows[static_cast<unsigned>(std::countr_zero(i))];
    for (unsigned u = 0; u < V * W; ++u) c.w[u] ^= r.w[u];
  }
}

// --- ternary bit-sliced kernel: one-hot planes for values 1 and 2 --------

template <unsigned W>
struct Tern {
  std::array<std::uint64_t, W> one{};
  std::array<std::uint64_t, W> two{};
};

template <unsigned W>
inline void tern_add(Tern<W>& a, const Tern<W>& b) {
  for (unsigned u = 0; u < W; ++u) {
    const std::uint64_t a1 = a.one[u];
    const std::uint64_t a2 = a.two[u];
    const std::uint64_t b1 = b.one[u];
    const std::uint64_t b2 = b.two[u];
    const std::uint64_t t = (a1 | b2) ^ (a2 | b1);
    a.one[u] = (a2 | b2) ^ t;
    a.two[u] = (a1 | b1) ^ t;
  }
}

template <unsigned W>
std::vector<Tern<W>> pack_ternary(const std::vector<Row>& rows) {
  std::vector<Tern<W>> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t x = 0; x < rows[i].size(); ++x) {
      const std::uint64_t bit = std::uint64_t{1} << (x % 64);
      if (rows[i][x] == 1) out[i].one[x / 64] |= bit;
      if (rows[i][x] == 2) out[i].two[x / 64] |= bit;
    }
  }
  return out;
}

template <unsigned W>
void run_ternary(const std::vector<Tern<W>>& rows, std::uint64_t begin, std::uint64_t end,
                 Hist& hist) {
  const std::size_t K = rows.size();
  auto d = digits_of(begin, 3, K);
  const auto g = gray_of(d, 3, K);
  Tern<W> c{};
  for (std::size_t j = 0; j < K; ++j) {
    for (unsigned s = 0; s < g[j]; ++s) tern_add(c, rows[j]);
  }
  std::uint64_t* h = hist.data();
  for (std::uint64_t i = begin;;) {
    unsigned wt = 0;
    for (unsigned u = 0; u < W; ++u) wt += static_cast<unsigned>(std::popcount(c.one[u] | c.two[u]));
    ++h[wt];
    if (++i == end) break;
    std::size_t t = 0;
    while (d[t] == 2) d[t++] = 0;
    ++d[t];
    tern_add(c, rows[t]);
  }
}

// Runs fn(begin, end, hist) over disjoint ranges on a worker pool and sums.
template <class Fn>
Hist run_ranges(std::uint64_t total, std::size_t n, const EnumerationOptions& opts, Fn fn) {
  unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  std::uint64_t ranges = opts.ranges ? opts.ranges : std::uint64_t{threads} * 8;
  if (total < (std::uint64_t{1} << 14) && opts.ranges == 0) ranges = 1;
  ranges = std::clamp<std::uint64_t>(ranges, 1, total);
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, ranges));

  std::atomic<std::uint64_t> next{0};
  std::vector<Hist> partial(threads, Hist(n + 1, 0));
  auto worker = [&](unsigned id) {
    for (;;) {
      const std::uint64_t r = next.fetch_add(1);
      if (r >= ranges) return;
      const std::uint64_t b = total / ranges * r + std::min(r, total % ranges);
      const std::uint64_t e = b + total / ranges + (r < total % ranges ? 1 : 0);
      if (b < e) fn(b, e, partial[id]);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  Hist sum(n + 1, 0);
  for (const auto& h : partial) {
    for (std::size_t i = 0; i <= n; ++i) sum[i] += h[i];
  }
  return sum;
}

template <unsigned V, unsigned W>
Hist binary_dispatch_w(const std::vector<Row>& rows, std::uint64_t total, std::size_t n,
                       const EnumerationOptions& opts) {
  const auto packed = pack_binary<V, W>(rows);
  return run_ranges(total, n, opts, [&](std::uint64_t b, std::uint64_t e, Hist& h) {
    run_binary<V, W>(packed, b, e, h);
  });
}

template <unsigned V>
bool binary_dispatch(const std::vector<Row>& rows, std::uint64_t total, std::size_t n,
                     const EnumerationOptions& opts, Hist& out) {
  const std::size_t words = (n + 63) / 64;
  if (words <= 1) out = binary_dispatch_w<V, 1>(rows, total, n, opts);
  else if (words <= 2) out = binary_dispatch_w<V, 2>(rows, total, n, opts);
  else if (words <= 4) out = binary_dispatch_w<V, 4>(rows, total, n, opts);
  else if (words <= 8) out = binary_dispatch_w<V, 8>(rows, total, n, opts);
  else if (words <= 16) out = binary_dispatch_w<V, 16>(rows, total, n, opts);
  else if (words <= 32) out = binary_dispatch_w<V, 32>(rows, total, n, opts);
  else return false;
  return true;
}

template <unsigned W>
Hist ternary_dispatch_w(const std::vector<Row>& rows, std::uint64_t total, std::size_t n,
                        const EnumerationOptions& opts) {
  const auto packed = pack_ternary<W>(rows);
  return run_ranges(total, n, opts, [&](std::uint64_t b, std::uint64_t e, Hist& h) {
    run_ternary<W>(packed, b, e, h);
  });
}

bool ternary_dispatch(const std::vector<Row>& rows, std::uint64_t total, std::size_t n,
                      const EnumerationOptions& opts, Hist& out) {
  const std::size_t words = (n + 63) / 64;
  if (words <= 1) out = ternary_dispatch_w<1>(rows, total, n, opts);
  else if (words <= 2) out = ternary_dispatch_w<2>(rows, total, n, opts);
  else if (words <= 4) out = ternary_dispatch_w<4>(rows, total, n, opts);
  else if (words <= 8) out = ternary_dispatch_w<8>(rows, total, n, opts);
  else if (words <= 16) out = ternary_dispatch_w<16>(rows, total, n, opts);
  else return false;
  return true;
}

}  // namespace

WeightEnumerator weight_enumerator(const LinearCode& code, const EnumerationOptions& opts) {
  const Field& F = code.F();
  const std::size_t n = code.n();
  const std::uint64_t count = codeword_count(F.q(), code.k());
  if (count > opts.budget) {
    throw Error(Errc::TooLarge, std::to_string(F.q()) + "^" + std::to_string(code.k()) +
                                    " codewords exceed budget " + std::to_string(opts.budget));
  }
  WeightEnumerator w;
  w.q = F.q();
  w.k = code.k();
  if (code.k() == 0) {
    w.coeffs.assign(n + 1, 0);
    w.coeffs[0] = 1;
    return w;
  }

  const auto rows = prime_rows(code);
  Hist hist;
  bool done = false;
  if (opts.kernel == Kernel::Auto) {
    if (F.p() == 2) {
      switch (F.v()) {
        case 1: done = binary_dispatch<1>(rows, count, n, opts, hist); break;
        case 2: done = binary_dispatch<2>(rows, count, n, opts, hist); break;
        case 3: done = binary_dispatch<3>(rows, count, n, opts, hist); break;
        case 4: done = binary_dispatch<4>(rows, count, n, opts, hist); break;
        default: break;
      }
    } else if (F.q() == 3) {
      done = ternary_dispatch(rows, count, n, opts, hist);
    }
  }
  if (!done) {
    GenericData D{&F, n, rows, {}};
    D.support.resize(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      for (std::size_t x = 0; x < n; ++x) {
        if (rows[j][x] != 0) D.support[j].push_back(static_cast<std::uint32_t>(x));
      }
    }
    hist = run_ranges(count, n, opts, [&](std::uint64_t b, std::uint64_t e, Hist& h) {
      run_generic(D, b, e, h);
    });
  }
  w.coeffs.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    mpz_class c;
    mpz_import(c.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &hist[i]);
    w.coeffs[i] = c;
  }
  return w;
}

WeightEnumerator weight_enumerator_smart(const LinearCode& code, const EnumerationOptions& opts) {
  const unsigned q = code.F().q();
  if (codeword_count(q, code.k()) <= opts.budget) return weight_enumerator(code, opts);
  if (codeword_count(q, code.n() - code.k()) <= opts.budget) {
    WeightEnumerator wd = weight_enumerator(dual(code), opts);
    WeightEnumerator w = macwilliams(wd, q, code.n() - code.k());
    w.k = code.k();
    return w;
  }
  throw Error(Errc::TooLarge, "code and dual both exceed budget " + std::to_string(opts.budget));
}

}  // namespace wesym
