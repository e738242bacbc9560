#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gau/field.hpp"
#include "gau/group.hpp"
#include "gau/linalg.hpp"

namespace gau {

// The group algebra FG. Elements are dense coefficient vectors indexed by
// group element: a[g] is the coefficient of G.names[g].
struct GroupAlgebra {
  Fq F;
  GroupTable G;

  using Elt = std::vector<Fe>;

  GroupAlgebra(Fq field, GroupTable group) : F(std::move(field)), G(std::move(group)) {}

  int dim() const { return G.order; }

  Elt zero() const { return Elt(std::size_t(G.order), 0); }
  Elt one() const { return basis(0); }
  Elt basis(int g) const;
  bool is_zero(const Elt& a) const;

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt scale(Fe s, const Elt& a) const;
  // Convolution over the group law.
  Elt mul(const Elt& a, const Elt& b) const;
  Elt pow(const Elt& a, std::uint64_t e) const;

  // Sum of the indicated group elements with coefficient 1.
  Elt hat(const std::vector<int>& subset) const;

  // |G|x|G| matrix of left multiplication by a: left_rep(a) * coords(x) =
  // coords(a*x). Multiplicative: left_rep(a*b) = left_rep(a) * left_rep(b).
  Mat left_rep(const Elt& a) const;
  // Right multiplication: right_rep(a) * coords(x) = coords(x*a).
  Mat right_rep(const Elt& a) const;

  // Inverse via the linear system left_rep(a) * x = 1; empty iff a is not a
  // unit.
  std::optional<Elt> inverse(const Elt& a) const;

  std::string to_string(const Elt& a) const;
};

enum class Side { left, right };

// annihilator(A, a, left) = {v : v*a = 0}; right = {v : a*v = 0}. Canonical.
Subspace annihilator(const GroupAlgebra& A, const GroupAlgebra::Elt& a, Side side);

// One element per conjugacy class, ordered as conjugacy_classes orders them.
std::vector<GroupAlgebra::Elt> class_sums(const GroupAlgebra& A);

// A finite-dimensional associative unital F-algebra given by structure
// constants: sc[i * dim + j] = coordinates of b_i * b_j.
struct Algebra {
  Fq F;
  int dim = 0;
  std::vector<std::vector<Fe>> sc;
  std::vector<Fe> unit;

  using Elt = std::vector<Fe>;

  const std::vector<Fe>& basis_product(int i, int j) const {
    return sc[std::size_t(i) * dim + j];
  }

  Elt zero() const { return Elt(std::size_t(dim), 0); }
  Elt one() const { return unit; }
  Elt mul(const Elt& a, const Elt& b) const;

  Mat left_rep(const Elt& a) const;
  Mat right_rep(const Elt& a) const;

  // Associativity on basis triples (exhaustive for dim <= 32, sampled above)
  // and the unit law. Throws errc::internal on violation.
  void validate() const;
};

// FG viewed as a structure-constant algebra (basis = group elements).
Algebra algebra_of(const GroupAlgebra& A);

// Full matrix algebra M(n, F), basis e_rc in row-major order.
Algebra matrix_algebra(const Fq& F, int n);

// Centralizing conditions against every basis element; for FG this equals the
// span of the class sums.
Subspace center_basis(const GroupAlgebra& A);
Subspace center_basis(const Algebra& A);

// Quotient by a two-sided ideal. The quotient basis is the set of non-pivot
// coordinates of the ideal's RREF; project() reduces an element of A to
// quotient coordinates and is an algebra homomorphism.
struct QuotientAlgebra {
  Algebra alg;
  Subspace ideal;
  std::vector<int> complement;

  std::vector<Fe> project(const std::vector<Fe>& a) const;
};

QuotientAlgebra quotient_algebra(const Algebra& A, const Subspace& ideal);

// The epimorphism eta: FG -> F[G/N] summing coefficients over cosets of a
// normal subgroup N.
struct InducedMap {
  Quotient quotient;          // group-level G/N data
  GroupAlgebra target;        // F[G/N]
  Mat eta;                    // coords(eta(a)) = eta * coords(a)
  Subspace kernel;            // dim |G| - |G/N|

  std::vector<Fe> apply(const std::vector<Fe>& a) const;
};

InducedMap induced_quotient_map(const GroupAlgebra& A, const std::vector<int>& N);

// Coefficient sums over each coset of N, in the quotient's element order.
std::vector<Fe> coset_augmentations(const GroupAlgebra& A, const GroupAlgebra::Elt& a,
                                    const std::vector<int>& N);

}  // namespace gau
