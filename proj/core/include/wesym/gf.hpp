#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace wesym {

// Field elements are dense indices 0..q-1. Index e encodes the polynomial
// sum_t d_t x^t where d_t are the base-p digits of e; 0 is zero and 1 is one.
using Elem = std::uint16_t;

inline constexpr unsigned kMaxFieldOrder = 1u << 16;

bool is_prime(unsigned n) noexcept;

// GF(p^v). Immutable after construction.
//
// For v > 1 the modulus is the monic irreducible of degree v whose
// coefficient vector (constant term least significant) has the smallest
// base-p integer encoding. Orders up to 256 carry full q x q add/mul tables;
// larger fields multiply through log/exp tables and add digit-wise.
class Field {
 public:
  Field(unsigned p, unsigned v = 1);

  unsigned p() const noexcept { return p_; }
  unsigned v() const noexcept { return v_; }
  unsigned q() const noexcept { return q_; }

  // Coefficients low -> high, including the leading 1. Empty when v == 1.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept {
    return dense_ ? add_[index(a, b)] : add_digits(a, b);
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem mul(Elem a, Elem b) const noexcept {
    if (dense_) return mul_[index(a, b)];
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  Elem inv(Elem a) const;  // throws DivisionByZero for 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  // x^t in the polynomial basis, i.e. the element with index p^t.
  Elem basis(unsigned t) const noexcept;

  bool operator==(const Field& other) const noexcept {
    return p_ == other.p_ && v_ == other.v_;
  }

 private:
  std::size_t index(Elem a, Elem b) const noexcept {
    return static_cast<std::size_t>(a) * q_ + b;
  }
  Elem add_digits(Elem a, Elem b) const noexcept;
  Elem mul_slow(Elem a, Elem b) const;

  unsigned p_;
  unsigned v_;
  unsigned q_;
  bool dense_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(unsigned p, unsigned v = 1);

// Field of order q; q must be a prime power.
FieldPtr field_of_order(unsigned q);

}  // namespace wesym
