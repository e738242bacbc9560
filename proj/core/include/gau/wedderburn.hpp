#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gau/algebra.hpp"
#include "gau/group.hpp"

namespace gau {

// One summand M(n, E) of a semisimple decomposition, where E is the degree-d
// extension of the ground field; count merges equal (n, d) summands.
struct SimpleComponent {
  int n = 1;
  int d = 1;
  int count = 1;
  friend bool operator==(const SimpleComponent&, const SimpleComponent&) = default;
};

struct Decomposition {
  std::vector<SimpleComponent> components;  // sorted by (n, d)
  int r = 0;          // total number of simple summands
  int s = 0;          // number of commutative summands (n = 1)
  int total_dim = 0;  // sum of n^2 * d * count

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.components == b.components;
  }
};

// Aggregates duplicates, sorts by (n, d), and fills the derived counters.
Decomposition decomposition_from(std::vector<SimpleComponent> comps);

// Orbits of "class of g -> class of g^q" on the p-regular conjugacy classes;
// m is the lcm of the p-regular element orders.
struct FerrazData {
  std::uint64_t m = 1;
  PRegular regular;
  std::vector<std::vector<int>> orbits;  // p-regular class ids; canonical order

  std::vector<int> orbit_sizes() const;
  // Size of the orbit containing the class of g (g must be p-regular).
  int orbit_size_of(int g) const;
};

FerrazData cyclotomic_classes(const GroupTable& G, std::uint64_t p, std::uint64_t q);

// Decomposition of a semisimple algebra by splitting the center into
// primitive idempotents (minimal polynomial factoring + CRT). For each
// idempotent e: d = dim(center * e), n = sqrt(dim(A * e) / d), certified
// integral (errc::nonsquare_dimension). A non-squarefree minimal polynomial
// in the center reports errc::not_semisimple.
Decomposition central_decomposition(const Algebra& A, std::uint64_t seed = 0);

// All ways to assign a matrix degree n >= 2 to each entry of the extension
// degree multiset ds such that sum n^2 * d = target. Each solution is the
// sorted list of (n, d) pairs; solutions are pairwise distinct.
std::vector<std::vector<std::pair<int, int>>> degree_assignments(std::vector<int> ds,
                                                                 int target);

// Counting route: one simple component per cyclotomic orbit. The commutative
// part is the semisimple part of F(G/G'), computed from the q-power orbits on
// the p-regular elements of the abelianization; the remaining matrix degrees
// are solved from the dimension constraint and must be unique
// (errc::ambiguous_degrees otherwise). radical_dim is the F-dimension of
// J(FG).
Decomposition ferraz_decomposition(const GroupTable& G, const Fq& F, int radical_dim);

// Reference table for F(C3xD10), char p != 3 (errc::char_three otherwise),
// keyed by q mod 15 (p = 2), q mod 6 (p = 5), q mod 30 (p > 5).
struct PredictedCase {
  Decomposition dec;
  int radical_dim = 0;
  int nilpotency = 1;
  std::string case_label;
  std::string structure;  // unit group shape, symbolic in k
};

PredictedCase predicted_c3xd10(std::uint64_t p, int k);

// Multiplicative order of q modulo m (gcd(q, m) must be 1).
std::uint64_t order_mod(std::uint64_t q, std::uint64_t m);

}  // namespace gau
