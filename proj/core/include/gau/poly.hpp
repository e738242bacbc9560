#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gau/field.hpp"

namespace gau {

/// Dense polynomial over a field, constant term first, no trailing zeros.
/// The zero polynomial is the empty vector (degree -1).
struct Poly {
  std::vector<Fe> c;

  int deg() const { return int(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Fe lead() const { return c.back(); }
  Fe coeff(int i) const { return (i >= 0 && i < int(c.size())) ? c[std::size_t(i)] : 0; }

  bool operator==(const Poly&) const = default;
};

Poly poly_trim(Poly a);
Poly poly_from(std::vector<Fe> coeffs);
Poly poly_x(unsigned power = 1);
Poly poly_const(Fe v);

Poly poly_add(const Poly& a, const Poly& b, const Fq& F);
Poly poly_sub(const Poly& a, const Poly& b, const Fq& F);
Poly poly_scale(const Poly& a, Fe s, const Fq& F);
Poly poly_mul(const Poly& a, const Poly& b, const Fq& F);
Poly poly_monic(const Poly& a, const Fq& F);

/// Quotient and remainder; divisor must be nonzero (errc::zero_polynomial).
struct PolyDivMod {
  Poly quot, rem;
};
PolyDivMod poly_divmod(const Poly& a, const Poly& b, const Fq& F);
Poly poly_mod(const Poly& a, const Poly& b, const Fq& F);

/// Monic greatest common divisor.
Poly poly_gcd(Poly a, Poly b, const Fq& F);

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& mod, const Fq& F);
Poly poly_derivative(const Poly& a, const Fq& F);
Fe poly_eval(const Poly& a, Fe x, const Fq& F);

/// Deterministic total order: by degree, then coefficients compared from the
/// leading term down.
bool poly_less(const Poly& a, const Poly& b);

std::string poly_to_string(const Poly& a, const Fq& F);

/// Deterministic irreducibility test (Rabin): gcd conditions on x^(q^i) - x.
bool poly_irreducible(const Poly& f, const Fq& F);

struct PolyFactor {
  Poly factor;  // monic irreducible
  int multiplicity;
  bool operator==(const PolyFactor&) const = default;
};

/// Complete factorization of a nonzero polynomial into monic irreducibles via
/// squarefree decomposition and Berlekamp's algorithm, deterministic: factors
/// sorted by poly_less.  Requires q <= 2^16 (errc::too_large) and a nonzero
/// input (errc::zero_polynomial).
std::vector<PolyFactor> berlekamp_factor(const Poly& f, const Fq& F);

}  // namespace gau
