#include "wesym/gf.hpp"

#include <string>

#include "wesym/error.hpp"

namespace wesym {

namespace {

using Digits = std::vector<unsigned>;

Digits to_digits(unsigned e, unsigned p, unsigned v) {
  Digits d(v);
  for (unsigned t = 0; t < v; ++t) {
    d[t] = e % p;
    e /= p;
  }
  return d;
}

unsigned from_digits(const Digits& d, unsigned p) {
  unsigned e = 0;
  for (std::size_t t = d.size(); t-- > 0;) e = e * p + d[t];
  return e;
}

// Remainder of a modulo the monic polynomial m over GF(p); both low -> high.
Digits poly_mod(Digits a, const Digits& m, unsigned p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const unsigned c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[i - dm + j] = (a[i - dm + j] + (p - c) * m[j]) % p;
    }
  }
  a.resize(dm);
  return a;
}

bool divides(const Digits& f, const Digits& g, unsigned p) {
  Digits r = poly_mod(g, f, p);
  for (unsigned c : r) {
    if (c != 0) return false;
  }
  return true;
}

bool is_irreducible(const Digits& poly, unsigned p) {
  const std::size_t v = poly.size() - 1;
  for (std::size_t d = 1; 2 * d <= v; ++d) {
    unsigned count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (unsigned enc = 0; enc < count; ++enc) {
      Digits f = to_digits(enc, p, static_cast<unsigned>(d));
      f.push_back(1);
      if (divides(f, poly, p)) return false;
    }
  }
  return true;
}

Digits smallest_irreducible(unsigned p, unsigned v) {
  unsigned count = 1;
  for (unsigned i = 0; i < v; ++i) count *= p;
  for (unsigned enc = 0; enc < count; ++enc) {
    Digits poly = to_digits(enc, p, v);
    poly.push_back(1);
    if (poly[0] == 0) continue;  // divisible by x
    if (is_irreducible(poly, p)) return poly;
  }
  throw Error(Errc::InvalidArgument, "no irreducible polynomial found");
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(unsigned p, unsigned v) : p_(p), v_(v) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (v == 0) throw Error(Errc::InvalidArgument, "field exponent must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < v; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(Errc::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(v) + " exceeds 2^16");
    }
  }
  q_ = static_cast<unsigned>(q);
  dense_ = q_ <= 256;
  if (v_ > 1) modulus_ = smallest_irreducible(p_, v_);

  neg_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) {
    Digits d = to_digits(a, p_, v_);
    for (auto& x : d) x = (p_ - x) % p_;
    neg_[a] = static_cast<Elem>(from_digits(d, p_));
  }

  if (dense_) {
    add_.resize(std::size_t{q_} * q_);
    mul_.resize(std::size_t{q_} * q_);
    for (unsigned a = 0; a < q_; ++a) {
      for (unsigned b = 0; b < q_; ++b) {
        add_[index(a, b)] = add_digits(a, b);
        mul_[index(a, b)] = mul_slow(a, b);
      }
    }
  }

  // Primitive element by exhaustive search; drives log/exp and inverses.
  const auto factors = prime_factors(q_ - 1);
  auto pow_slow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  Elem gen = 1;
  if (q_ > 2) {
    for (unsigned g = 2; g < q_; ++g) {
      bool primitive = true;
      for (unsigned l : factors) {
        if (pow_slow(static_cast<Elem>(g), (q_ - 1) / l) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = static_cast<Elem>(g);
        break;
      }
    }
  }
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Elem x = 1;
  for (unsigned i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_slow(x, gen);
  }
  inv_.assign(q_, 0);
  for (unsigned a = 1; a < q_; ++a) {
    inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
  if (v_ == 1) return static_cast<Elem>((a + b) % p_);
  unsigned r = 0;
  unsigned scale = 1;
  unsigned x = a;
  unsigned y = b;
  for (unsigned t = 0; t < v_; ++t) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Elem>(r);
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (v_ == 1) return static_cast<Elem>((static_cast<unsigned>(a) * b) % p_);
  const Digits da = to_digits(a, p_, v_);
  const Digits db = to_digits(b, p_, v_);
  Digits prod(2 * v_ - 1, 0);
  for (unsigned i = 0; i < v_; ++i) {
    for (unsigned j = 0; j < v_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  return static_cast<Elem>(from_digits(poly_mod(prod, modulus_, p_), p_));
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  return exp_[l];
}

Elem Field::basis(unsigned t) const noexcept {
  unsigned e = 1;
  for (unsigned i = 0; i < t; ++i) e *= p_;
  return static_cast<Elem>(e);
}

FieldPtr make_field(unsigned p, unsigned v) { return std::make_shared<const Field>(p, v); }

FieldPtr field_of_order(unsigned q) {
  if (q < 2) throw Error(Errc::InvalidArgument, "field order must be at least 2");
  unsigned p = 0;
  for (unsigned d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned v = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++v;
  }
  if (rest != 1) {
    throw Error(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
  }
  return make_field(p, v);
}

}  // namespace wesym
