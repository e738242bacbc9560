#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gau/radical.hpp"
#include "test_util.hpp"

using namespace gau;
using Elt = GroupAlgebra::Elt;

namespace {

GroupAlgebra make_A(std::uint64_t p, int k = 1, const std::string& spec = "C3xD10") {
  return GroupAlgebra(Fq::make(p, k), build_group(spec));
}

std::vector<int> sorted_dims(const std::vector<IrreducibleRep>& fs) {
  std::vector<int> d;
  for (const auto& f : fs) d.push_back(f.dim);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("radical in characteristic 2") {
  GroupAlgebra A = make_A(2);
  Algebra alg = algebra_of(A);
  Subspace J = jacobson_radical(alg);
  CHECK(J.dim() == 3);
  CHECK(nilpotency_index(J, alg) == 2);

  // closed form: span{(1+x) yhat z^i}
  Elt opx = A.add(A.one(), A.basis(A.G.generator("x")));
  Elt yhat = A.hat(subgroup_generated(A.G, {A.G.generator("y")}));
  std::vector<std::vector<Fe>> rows;
  for (int i = 0; i < 3; ++i)
    rows.push_back(
        A.mul(A.mul(opx, yhat), A.basis(A.G.pow(A.G.generator("z"), std::uint64_t(i)))));
  Subspace S = span_of(A.F, 30, rows);
  REQUIRE(S.dim() == 3);
  CHECK(subspaces_equal(J, S, A.F));

  // same closed form across extension fields
  for (int k : {2, 3, 4}) {
    GroupAlgebra B = make_A(2, k);
    Subspace Jk = jacobson_radical(algebra_of(B));
    CHECK(Jk.dim() == 3);
    CHECK(nilpotency_index(Jk, algebra_of(B)) == 2);
  }
}

TEST_CASE("radical in characteristic 5") {
  GroupAlgebra A = make_A(5);
  Algebra alg = algebra_of(A);
  Subspace J = jacobson_radical(alg);
  CHECK(J.dim() == 24);
  CHECK(nilpotency_index(J, alg) == 5);

  // J = ker of the map onto F[G / <y>]
  InducedMap m = induced_quotient_map(A, subgroup_generated(A.G, {A.G.generator("y")}));
  REQUIRE(m.kernel.dim() == 24);
  CHECK(subspaces_equal(J, m.kernel, A.F));

  // seed independence: the certified radical is canonical
  Subspace J2 = jacobson_radical(alg, 12345);
  CHECK(J2.dim() == 24);
  CHECK(J2.basis == J.basis);

  Subspace J25 = jacobson_radical(algebra_of(make_A(5, 2)));
  CHECK(J25.dim() == 24);
}

TEST_CASE("semisimple characteristics") {
  for (std::uint64_t p : {7u, 11u, 13u, 31u}) {
    Algebra alg = algebra_of(make_A(p));
    Subspace J = jacobson_radical(alg);
    CHECK(J.dim() == 0);
    CHECK(nilpotency_index(J, alg) == 1);
  }
  // Maschke in general: char coprime to the order
  CHECK(jacobson_radical(algebra_of(make_A(7, 1, "C6"))).dim() == 0);
  CHECK(jacobson_radical(algebra_of(make_A(2, 1, "C3"))).dim() == 0);
  CHECK(jacobson_radical(algebra_of(make_A(3, 1, "C2xC2"))).dim() == 0);
  CHECK(jacobson_radical(algebra_of(make_A(3, 1, "D10"))).dim() == 0);
}

TEST_CASE("small modular radicals") {
  Algebra c2 = algebra_of(make_A(2, 1, "C2"));
  Subspace J2 = jacobson_radical(c2);
  CHECK(J2.dim() == 1);
  CHECK(nilpotency_index(J2, c2) == 2);

  Algebra c3 = algebra_of(make_A(3, 1, "C3"));
  Subspace J3 = jacobson_radical(c3);
  CHECK(J3.dim() == 2);
  CHECK(nilpotency_index(J3, c3) == 3);

  Algebra c6 = algebra_of(make_A(2, 1, "C6"));
  Subspace J6 = jacobson_radical(c6);
  CHECK(J6.dim() == 3);
  CHECK(nilpotency_index(J6, c6) == 2);
}

TEST_CASE("composition factors") {
  Algebra M2 = matrix_algebra(Fq::make(3, 1), 2);
  std::vector<IrreducibleRep> fs = composition_factors(M2);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].dim == 2);
  CHECK(reps_isomorphic(fs[0], fs[0], M2.F));

  GroupAlgebra A7 = make_A(7);
  std::vector<IrreducibleRep> f7 = composition_factors(algebra_of(A7));
  CHECK(sorted_dims(f7) == std::vector<int>{1, 1, 1, 1, 1, 1, 4, 4, 4});

  GroupAlgebra A2 = make_A(2);
  std::vector<IrreducibleRep> f2 = composition_factors(algebra_of(A2));
  CHECK(sorted_dims(f2) == std::vector<int>{1, 2, 4, 4, 4});
  for (std::size_t i = 0; i < f2.size(); ++i)
    for (std::size_t j = i + 1; j < f2.size(); ++j)
      CHECK_FALSE(reps_isomorphic(f2[i], f2[j], A2.F));

  // factor images define homomorphisms killing the radical
  Algebra alg2 = algebra_of(A2);
  Subspace J = jacobson_radical(alg2);
  for (const auto& f : f2)
    for (int r = 0; r < J.dim(); ++r) {
      std::vector<Fe> row = basis_row(J, r);
      Mat im(f.dim, f.dim);
      for (int i = 0; i < alg2.dim; ++i)
        if (row[std::size_t(i)] != 0)
          for (std::size_t t = 0; t < im.a.size(); ++t)
            im.a[t] = A2.F.add(im.a[t], A2.F.mul(row[std::size_t(i)], f.images[std::size_t(i)].a[t]));
      for (Fe c : im.a) CHECK(c == 0);
    }

  // determinism given the seed
  std::vector<IrreducibleRep> fa = composition_factors(alg2, 99);
  std::vector<IrreducibleRep> fb = composition_factors(alg2, 99);
  REQUIRE(fa.size() == fb.size());
  for (std::size_t i = 0; i < fa.size(); ++i) {
    CHECK(fa[i].dim == fb[i].dim);
    for (std::size_t g = 0; g < fa[i].images.size(); ++g)
      CHECK(fa[i].images[g].a == fb[i].images[g].a);
  }
}
