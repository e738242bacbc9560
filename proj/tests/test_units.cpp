#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gau/radical.hpp"
#include "gau/units.hpp"
#include "test_util.hpp"

using namespace gau;
using Elt = GroupAlgebra::Elt;

namespace {

GroupAlgebra make_A(std::uint64_t p, int k = 1, const std::string& spec = "C3xD10") {
  return GroupAlgebra(Fq::make(p, k), build_group(spec));
}

}  // namespace

TEST_CASE("general linear group orders") {
  CHECK(gl_order(1, 7) == 6);
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(2, 4) == 180);
  CHECK(gl_order(3, 2) == 168);
  CHECK(gl_order(2, 49) == BigInt(2400) * 2352);
}

TEST_CASE("unit group order formula") {
  // F2[C3xD10]: 2^3 * (2-1) * (2^2-1) * |GL(2,4)|^3
  Decomposition d2 = decomposition_from({{1, 1, 1}, {1, 2, 1}, {2, 2, 3}});
  CHECK(unit_group_order(d2, 3, 2) == 139968000);

  // F2[D10]: 2 * |GL(2,4)|
  Decomposition dd = decomposition_from({{1, 1, 1}, {2, 2, 1}});
  CHECK(unit_group_order(dd, 1, 2) == 360);

  // F5[C3xD10]: 5^24 * (5-1)^2 * (25-1)^2
  Decomposition d5 = decomposition_from({{1, 1, 2}, {1, 2, 2}});
  BigInt five24 = boost::multiprecision::pow(BigInt(5), 24);
  CHECK(unit_group_order(d5, 24, 5) == five24 * 16 * 576);

  // bookkeeping identity against gl_order
  Decomposition d7 = decomposition_from({{1, 1, 6}, {2, 2, 3}});
  BigInt expect = 1;
  for (const auto& c : d7.components) {
    BigInt qd = boost::multiprecision::pow(BigInt(7), unsigned(c.d));
    for (int i = 0; i < c.count; ++i) expect *= gl_order(c.n, qd);
  }
  CHECK(unit_group_order(d7, 0, 7) == expect);
}

TEST_CASE("brute force unit counts") {
  CHECK(brute_force_units(build_group("C6"), Fq::make(2, 1)) == 24);
  CHECK(brute_force_units(build_group("C2"), Fq::make(3, 1)) == 4);
  CHECK(brute_force_units(build_group("C2"), Fq::make(2, 1)) == 2);
  CHECK(brute_force_units(build_group("D10"), Fq::make(2, 1)) == 360);

  CHECK(code_of([] { brute_force_units(build_group("D10"), Fq::make(5, 1)); }) ==
        errc::too_large);
  CHECK(code_of([] { brute_force_units(build_group("C3xD10"), Fq::make(2, 1)); }) ==
        errc::too_large);
}

TEST_CASE("unit predicate") {
  GroupAlgebra A = make_A(5);
  Elt n = A.sub(A.one(), A.basis(A.G.generator("y")));
  CHECK(is_unit(A, A.add(A.one(), n)));
  CHECK_FALSE(is_unit(A, n));
  CHECK_FALSE(is_unit(A, A.zero()));

  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    Elt a = A.zero();
    for (auto& c : a) c = Fe(rng() % 5);
    CHECK(is_unit(A, a) == A.inverse(a).has_value());
  }
}

TEST_CASE("units factor through the semisimple quotient") {
  GroupAlgebra A = make_A(5);
  InducedMap m = induced_quotient_map(A, subgroup_generated(A.G, {A.G.generator("y")}));
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    Elt a = A.zero();
    for (auto& c : a) c = Fe(rng() % 5);
    CHECK(is_unit(A, a) == is_unit(m.target, m.apply(a)));
  }
}

TEST_CASE("affine families") {
  GroupAlgebra A = make_A(3);
  Elt d1 = A.sub(A.basis(A.G.generator("y")), A.one());
  Elt d2 = A.sub(A.basis(A.G.generator("z")), A.one());
  AffineFamily fam = affine_family("test", {d1, d2}, A.F);
  CHECK(fam.param_dim() == 2);

  Elt v = fam.at(A, {2, 1});
  Elt manual = A.add(A.one(), A.add(A.scale(2, d1), A.scale(1, d2)));
  CHECK(v == manual);
  CHECK(fam.contains(A, v));
  CHECK(fam.at(A, {0, 0}) == A.one());
  CHECK_FALSE(fam.contains(A, A.add(A.one(), A.basis(A.G.generator("x")))));
  CHECK_FALSE(fam.contains(A, A.zero()));

  CHECK(code_of([&] {
          affine_family("dep", {d1, d2, A.add(d1, d2)}, A.F);
        }) == errc::internal);
}

TEST_CASE("V = 1 + J") {
  GroupAlgebra A = make_A(2);
  Subspace J = jacobson_radical(algebra_of(A));
  AffineFamily V = v_group(J);
  CHECK(V.param_dim() == 3);
  // all 8 elements are involutions: (1+j)^2 = 1 + j^2 = 1 since J^2 = 0
  for (Fe a = 0; a < 2; ++a)
    for (Fe b = 0; b < 2; ++b)
      for (Fe c = 0; c < 2; ++c) {
        Elt v = V.at(A, {a, b, c});
        CHECK(A.mul(v, v) == A.one());
        CHECK(is_unit(A, v));
      }

  GroupAlgebra B = make_A(5);
  Subspace J5 = jacobson_radical(algebra_of(B));
  CHECK(v_group(J5).param_dim() == 24);
}

TEST_CASE("centralizer spaces") {
  GroupAlgebra A = make_A(5);
  Subspace J = jacobson_radical(algebra_of(A));

  CHECK(centralizer_space(A, {A.one()}, J).dim() == 24);
  Subspace cy = centralizer_space(A, {A.basis(A.G.generator("y"))}, J);
  CHECK(cy.dim() == 15);
  // everything in the centralizer actually commutes
  Elt y = A.basis(A.G.generator("y"));
  for (int i = 0; i < cy.dim(); ++i) {
    Elt row = basis_row(cy, i);
    CHECK(A.mul(row, y) == A.mul(y, row));
  }

  CHECK(center_of_v(A, J).dim() == 9);
  CHECK(center_of_v(make_A(5, 2), jacobson_radical(algebra_of(make_A(5, 2)))).dim() == 9);
  GroupAlgebra C = make_A(2);
  CHECK(center_of_v(C, jacobson_radical(algebra_of(C))).dim() == 3);
  GroupAlgebra D = make_A(7);
  CHECK(center_of_v(D, jacobson_radical(algebra_of(D))).dim() == 0);
}

TEST_CASE("structure reports") {
  GroupTable G = build_group("C3xD10");

  UnitReport r2 = structure_report(G, Fq::make(2, 1));
  CHECK(r2.p == 2);
  CHECK(r2.q == 2);
  CHECK(r2.radical_dim == 3);
  CHECK(r2.nilpotency == 2);
  CHECK(r2.dec == predicted_c3xd10(2, 1).dec);
  CHECK(r2.unit_order == 139968000);
  CHECK(r2.case_label == "p=2, q ≡ 2, 8 mod 15");
  CHECK_FALSE(r2.structure.empty());
  CHECK(r2.ferraz.m == 15);

  UnitReport r29 = structure_report(G, Fq::make(29, 1));
  CHECK(r29.radical_dim == 0);
  CHECK(r29.dec == predicted_c3xd10(29, 1).dec);
  CHECK(r29.unit_order == unit_group_order(r29.dec, 0, 29));

  // same report regardless of seed
  UnitReport a = structure_report(G, Fq::make(5, 1), 1);
  UnitReport b = structure_report(G, Fq::make(5, 1), 77);
  CHECK(a.dec == b.dec);
  CHECK(a.unit_order == b.unit_order);
  CHECK(a.radical_dim == b.radical_dim);

  // a group outside the reference table still gets the generic pipeline
  UnitReport rc6 = structure_report(build_group("C6"), Fq::make(7, 1));
  CHECK(rc6.case_label == "outside reference table");
  CHECK(rc6.structure.empty());
  CHECK(rc6.radical_dim == 0);
  CHECK(rc6.dec == decomposition_from({{1, 1, 6}}));
  CHECK(rc6.unit_order == 46656);  // 6^6

  // brute force agreement on a modular case
  UnitReport rd = structure_report(build_group("D10"), Fq::make(2, 1));
  CHECK(rd.unit_order == brute_force_units(build_group("D10"), Fq::make(2, 1)));
}
