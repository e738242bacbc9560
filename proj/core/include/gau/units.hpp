#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "gau/algebra.hpp"
#include "gau/wedderburn.hpp"

namespace gau {

using BigInt = boost::multiprecision::cpp_int;

// |GL(n, q)| = prod_{i=0}^{n-1} (q^n - q^i).
BigInt gl_order(int n, const BigInt& q);

// q^radical_dim * prod |GL(n_i, q^{d_i})|^{count_i}: the order of U(FG) as
// |1 + J| times the unit count of each matrix component.
BigInt unit_group_order(const Decomposition& dec, int radical_dim, std::uint64_t q);

// Exhaustive unit count over all q^|G| coefficient vectors, testing
// invertibility of the regular representation.  Requires q^|G| <= 2^20
// (errc::too_large).
BigInt brute_force_units(const GroupTable& G, const Fq& F);

bool is_unit(const GroupAlgebra& A, const GroupAlgebra::Elt& a);

// Affine family {1 + sum_i params[i] * raw[i]}.  raw keeps the defining
// direction order (evaluators and display checks depend on it); dirs is the
// same span in canonical form.
struct AffineFamily {
  std::string name;
  std::vector<GroupAlgebra::Elt> raw;  // linearly independent directions
  Subspace dirs;

  int param_dim() const { return int(raw.size()); }
  GroupAlgebra::Elt at(const GroupAlgebra& A, const std::vector<Fe>& params) const;
  // v - 1 lies in the direction span.
  bool contains(const GroupAlgebra& A, const GroupAlgebra::Elt& v) const;
};

// Builds an affine family from explicit directions; verifies independence
// (errc::internal otherwise).
AffineFamily affine_family(std::string name, std::vector<GroupAlgebra::Elt> raw, const Fq& F);

// V = 1 + J with the radical's canonical basis as parameters.
AffineFamily v_group(const Subspace& J);

// {x in J : x*t = t*x for all targets t}; C_V(targets) = 1 + this space.
Subspace centralizer_space(const GroupAlgebra& A,
                           const std::vector<GroupAlgebra::Elt>& targets, const Subspace& J);

// Z(V) = 1 + C_J(J).
Subspace center_of_v(const GroupAlgebra& A, const Subspace& J);

struct UnitReport {
  std::uint64_t p = 0;
  int k = 1;
  std::uint64_t q = 0;
  std::string modulus;  // polynomial in t, e.g. "t^2 + t + 1"
  std::string group_spec;
  int group_order = 0;
  int radical_dim = 0;
  int nilpotency = 1;
  Decomposition dec;
  BigInt unit_order;
  std::string structure;   // empty outside the reference table
  std::string case_label;  // "outside reference table" when not covered
  FerrazData ferraz;
};

// Radical -> quotient -> decomposition (both routes, cross-checked;
// errc::certification on disagreement) -> orders.  For C3xD10 in
// characteristic != 3 the reference row is attached and asserted.
UnitReport structure_report(const GroupTable& G, const Fq& F, std::uint64_t seed = 0);

}  // namespace gau
