#pragma once

#include <cstdint>
#include <vector>

#include "gau/algebra.hpp"
#include "gau/linalg.hpp"

namespace gau {

// A simple right module, given by the action matrix of every algebra basis
// element (row convention: the module element v maps to v * images[i]).
// ρ(Σ aᵢbᵢ) = Σ aᵢ images[i] is an algebra homomorphism with no proper
// nonzero invariant subspace.
struct IrreducibleRep {
  int dim = 0;
  std::vector<Mat> images;
};

// Composition factors of the right regular module, deduplicated up to
// isomorphism. Deterministic given the seed. Throws errc::chopper_stall if
// the random-element budget (64 per split) is exhausted.
std::vector<IrreducibleRep> composition_factors(const Algebra& A, std::uint64_t seed = 0);

// Isomorphism test for factors of one algebra: equal dimension and a nonzero
// homomorphism space (a linear solve).
bool reps_isomorphic(const IrreducibleRep& S, const IrreducibleRep& T, const Fq& F);

// J(A) = {a : ρ(a) = 0 for every composition factor ρ}. Canonical subspace.
// Certified after the fact: J is a two-sided ideal, J is nilpotent, and the
// radical of A/J recomputes to zero; errc::certification on any violation.
Subspace jacobson_radical(const Algebra& A, std::uint64_t seed = 0);

// Least m with J^m = 0, by iterated span of products. The zero ideal gives 1.
// Throws errc::not_nilpotent if the power dimensions stall above zero.
int nilpotency_index(const Subspace& J, const Algebra& A);

}  // namespace gau
