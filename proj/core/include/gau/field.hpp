#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gau/error.hpp"

namespace gau {

/// Field element, packed as a base-p integer: the element with coefficient
/// digits (c_0, ..., c_{k-1}) against powers of the generator t is stored as
/// sum c_i * p^i.  Every value in [0, q) is a valid element.
using Fe = std::uint32_t;

/// GF(p^k) presented as GF(p)[t] / (m(t)) for the lexicographically smallest
/// monic irreducible m: smallest base-p packed integer of the non-leading
/// coefficients, high-degree digit most significant.  q = p^k is capped at
/// 2^32.  Fields with q <= 2^16 carry discrete-log tables; larger fields use
/// direct polynomial arithmetic.  Immutable after construction.
class Fq {
public:
  /// Build GF(p^k) with the canonical modulus.  Throws errc::non_prime,
  /// errc::degree_zero, errc::too_large.
  static Fq make(std::uint64_t p, unsigned k);

  /// Build GF(p^k) with an explicit monic irreducible modulus, given as k+1
  /// base-p digits, constant term first.
  static Fq with_modulus(std::uint64_t p, const std::vector<std::uint32_t>& modulus);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  /// Modulus packed as a base-p integer (monic leading digit included).
  std::uint64_t modulus_packed() const;

  Fe zero() const { return 0; }
  Fe one() const { return 1; }

  Fe add(Fe a, Fe b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) { std::uint64_t s = std::uint64_t(a) + b; return Fe(s >= q_ ? s - q_ : s); }
    return add_digits(a, b);
  }
  Fe neg(Fe a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return a == 0 ? 0 : Fe(q_ - a);
    return neg_digits(a);
  }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

  Fe mul(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[std::size_t(log_[a]) + log_[b]];
    return mul_generic(a, b);
  }

  /// Multiplicative inverse via the extended Euclidean algorithm on the
  /// coefficient polynomials (table shortcut for small fields).
  /// Throws errc::zero_inverse on 0.
  Fe inv(Fe a) const;

  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

  Fe pow(Fe a, std::uint64_t e) const;

  /// Scalar embedding of an integer: n mod p as a degree-0 element.
  Fe from_int(std::uint64_t n) const { return Fe(n % p_); }

  /// Coefficient digits (length k, constant term first).
  std::vector<std::uint32_t> digits(Fe a) const;
  Fe from_digits(const std::vector<std::uint32_t>& d) const;

  std::string to_string(Fe a) const;  // decimal packed value

  bool operator==(const Fq& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }
  bool operator!=(const Fq& o) const { return !(*this == o); }

private:
  Fq() = default;

  Fe add_digits(Fe a, Fe b) const;
  Fe neg_digits(Fe a) const;
  Fe mul_generic(Fe a, Fe b) const;
  Fe inv_generic(Fe a) const;
  void build_tables();

  std::uint64_t p_ = 0;
  unsigned k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;  // k+1 digits, constant first, monic
  std::vector<std::uint32_t> log_;      // log_[a] for a in [1, q); empty above 2^16
  std::vector<Fe> exp_;                 // exp_[i] for i in [0, 2(q-1))
};

}  // namespace gau
