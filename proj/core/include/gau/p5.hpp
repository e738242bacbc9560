#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gau/algebra.hpp"
#include "gau/poly.hpp"
#include "gau/units.hpp"

namespace gau {

// Replaceable evaluators for the displayed coefficient formulas checked by
// the characteristic-5 step suite.  Each returns a *claimed* value; the suite
// compares it against direct computation and reports mismatches with a
// witness.  Claims are never corrected silently; the containment checks are
// computed independently of these.
struct P5Hooks {
  // Claimed r^v - r for r = 1 + a*y(1-y)^3*x and v with parameters b[0..23].
  std::function<GroupAlgebra::Elt(const GroupAlgebra& A, Fe a, const std::vector<Fe>& b)>
      conjugation_delta;
  // Claimed correction coefficients (k1, k2, k3) of s^t as polynomials in z
  // (z^3 = 1), from the five s-parameters and four t-parameters.
  std::function<std::array<Poly, 3>(const std::array<Poly, 5>& b,
                                    const std::array<Poly, 4>& c, const Fq& F)>
      st_corrections;
  // Claimed (k1, k2) with n^m = n + k1 + k2*x, from the 21 centralizer
  // parameters and the z-polynomial M-parameter.
  std::function<std::pair<GroupAlgebra::Elt, GroupAlgebra::Elt>(
      const GroupAlgebra& A, const std::vector<Fe>& c, const Poly& r)>
      nm_corrections;
};

P5Hooks default_p5_hooks();

struct StepCheck {
  std::string what;
  bool ok = true;
  std::string witness;  // set on failure
};

struct StepResult {
  int step = 0;
  std::string label;
  std::vector<StepCheck> checks;

  bool ok() const;
  std::string first_witness() const;
};

struct P5Report {
  std::uint64_t seed = 0;
  int k = 1;
  std::vector<std::pair<std::string, int>> dims;  // family -> F-parameter count
  std::vector<StepResult> steps;

  bool passed() const;
  int dim_of(const std::string& name) const;  // -1 if absent
};

// Witness-level verification of the unit-group structure of F[C3xD10] in
// characteristic 5: V = 1+J has a rank-k subgroup R, a 21-parameter
// centralizer splitting as a 15-parameter abelian subgroup by a 6-parameter
// complement, a 3-parameter complement M of the centralizer in V, and a
// 9-parameter center.  Checks run exhaustively when a parameter space has at
// most 5^6 points, otherwise on seeded samples (200 per check, 100 for the
// fifth-power check).
P5Report verify_p5_structure(const Fq& F, std::uint64_t seed = 0,
                             const P5Hooks& hooks = default_p5_hooks());

}  // namespace gau
