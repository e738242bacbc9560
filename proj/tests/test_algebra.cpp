#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gau/algebra.hpp"
#include "test_util.hpp"

using namespace gau;
using Elt = GroupAlgebra::Elt;

namespace {

GroupAlgebra make_A(std::uint64_t p, int k = 1, const std::string& spec = "C3xD10") {
  return GroupAlgebra(Fq::make(p, k), build_group(spec));
}

Elt random_elt(const GroupAlgebra& A, std::mt19937_64& rng) {
  Elt a = A.zero();
  for (auto& c : a) c = Fe(rng() % A.F.q());
  return a;
}

std::vector<int> y_subgroup(const GroupTable& G) {
  return subgroup_generated(G, {G.generator("y")});
}

}  // namespace

TEST_CASE("group law in the algebra") {
  GroupAlgebra A = make_A(2);
  const GroupTable& G = A.G;
  int x = G.generator("x"), y = G.generator("y");
  CHECK(A.mul(A.basis(x), A.basis(y)) == A.mul(A.basis(G.pow(y, 4)), A.basis(x)));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Elt a = random_elt(A, rng);
    CHECK(A.mul(A.one(), a) == a);
    CHECK(A.mul(a, A.one()) == a);
  }
}

TEST_CASE("hat elements") {
  GroupAlgebra A = make_A(2);
  std::vector<int> Y = y_subgroup(A.G);
  Elt yhat = A.hat(Y);
  int ones = 0;
  for (Fe c : yhat) ones += c == 1;
  CHECK(ones == 5);
  for (int g : Y) CHECK(yhat[std::size_t(g)] == 1);

  // (1 + x*yhat)^2 = 1 + yhat in characteristic 2
  Elt u = A.add(A.one(), A.mul(A.basis(A.G.generator("x")), yhat));
  CHECK(A.mul(u, u) == A.add(A.one(), yhat));

  // hat of the whole group is never a unit: G-hat * g = G-hat
  for (std::uint64_t p : {2u, 5u, 7u}) {
    GroupAlgebra B = make_A(p);
    std::vector<int> all(30);
    for (int g = 0; g < 30; ++g) all[std::size_t(g)] = g;
    CHECK_FALSE(B.inverse(B.hat(all)).has_value());
  }
}

TEST_CASE("regular representations") {
  GroupAlgebra A = make_A(2, 2);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    Elt a = random_elt(A, rng);
    Mat L = A.left_rep(a), R = A.right_rep(a);
    for (int g = 0; g < 30; ++g) {
      Elt lhs = A.mul(a, A.basis(g)), rhs = A.mul(A.basis(g), a);
      for (int i = 0; i < 30; ++i) {
        CHECK(L.at(i, g) == lhs[std::size_t(i)]);
        CHECK(R.at(i, g) == rhs[std::size_t(i)]);
      }
    }
  }
  for (int t = 0; t < 100; ++t) {
    Elt a = random_elt(A, rng), b = random_elt(A, rng);
    Mat prod = mat_mul(A.left_rep(a), A.left_rep(b), A.F);
    CHECK(prod.a == A.left_rep(A.mul(a, b)).a);
  }
  // basis elements act by permutation matrices
  for (int g = 0; g < 30; ++g) {
    Mat P = A.left_rep(A.basis(g));
    for (int j = 0; j < 30; ++j) {
      int nz = 0;
      for (int i = 0; i < 30; ++i) nz += P.at(i, j) != 0;
      CHECK(nz == 1);
    }
  }
}

TEST_CASE("inverses") {
  GroupAlgebra A = make_A(5);
  int y = A.G.generator("y");
  CHECK(A.inverse(A.basis(y)).value() == A.basis(A.G.pow(y, 4)));

  // n = 1 - y is nilpotent (n^5 = 0), so (1+n)^-1 is the geometric series
  Elt n = A.sub(A.one(), A.basis(y));
  CHECK(A.is_zero(A.pow(n, 5)));
  Elt series = A.zero();
  Fe sign = 1;
  for (int i = 0; i < 5; ++i) {
    series = A.add(series, A.scale(sign, A.pow(n, std::uint64_t(i))));
    sign = A.F.neg(sign);
  }
  Elt u = A.add(A.one(), n);
  CHECK(A.inverse(u).value() == series);
  CHECK(A.mul(u, series) == A.one());

  CHECK_FALSE(A.inverse(A.zero()).has_value());
  CHECK_FALSE(A.inverse(n).has_value());
}

TEST_CASE("annihilators") {
  GroupAlgebra A = make_A(5);
  std::vector<int> Y = y_subgroup(A.G);
  Elt yhat = A.hat(Y);

  // v * yhat = 0 iff every left-coset sum of v vanishes: dimension 30 - 6
  Subspace ann = annihilator(A, yhat, Side::left);
  CHECK(ann.dim() == 24);

  // that space is exactly FG * (1 - y)
  Elt omy = A.sub(A.one(), A.basis(A.G.generator("y")));
  std::vector<std::vector<Fe>> rows;
  for (int g = 0; g < 30; ++g) rows.push_back(A.mul(A.basis(g), omy));
  Subspace img = span_of(A.F, 30, rows);
  CHECK(img.dim() == 24);
  CHECK(subspaces_equal(ann, img, A.F));

  CHECK(annihilator(A, A.one(), Side::left).dim() == 0);
  CHECK(annihilator(A, A.one(), Side::right).dim() == 0);
  CHECK(annihilator(A, A.zero(), Side::left).dim() == 30);

  // v(1+x) = 0 iff v is constant on the 15 cosets g<x> with opposite signs;
  // in characteristic 2, iff constant with equal signs. Either way dim 15.
  GroupAlgebra B = make_A(2);
  Elt opx = B.add(B.one(), B.basis(B.G.generator("x")));
  CHECK(annihilator(B, opx, Side::left).dim() == 15);
}

TEST_CASE("class sums span the center") {
  GroupAlgebra A = make_A(7);
  std::vector<Elt> cs = class_sums(A);
  REQUIRE(cs.size() == 12);
  CHECK(cs[0] == A.one());

  ClassPartition P = conjugacy_classes(A.G);
  int xc = P.class_of[std::size_t(A.G.generator("x"))];
  int support = 0;
  for (Fe c : cs[std::size_t(xc)]) support += c != 0;
  CHECK(support == 5);
  for (int g : P.classes[std::size_t(xc)])
    CHECK(cs[std::size_t(xc)][std::size_t(g)] == 1);

  Subspace Z = center_basis(A);
  CHECK(Z.dim() == 12);
  std::vector<std::vector<Fe>> rows(cs.begin(), cs.end());
  Subspace S = span_of(A.F, 30, rows);
  CHECK(S.dim() == 12);
  CHECK(subspaces_equal(Z, S, A.F));

  CHECK(center_basis(make_A(2, 1, "C6")).dim() == 6);
  CHECK(center_basis(make_A(5, 1, "D10")).dim() == 4);
}

TEST_CASE("structure constant algebras") {
  GroupAlgebra A = make_A(3, 1, "C6");
  Algebra alg = algebra_of(A);
  CHECK(alg.dim == 6);
  alg.validate();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    Elt a = random_elt(A, rng), b = random_elt(A, rng);
    CHECK(alg.mul(a, b) == A.mul(a, b));
  }

  Algebra M2 = matrix_algebra(Fq::make(5, 1), 2);
  CHECK(M2.dim == 4);
  M2.validate();
  CHECK(center_basis(M2).dim() == 1);
  CHECK(center_basis(matrix_algebra(Fq::make(2, 2), 3)).dim() == 1);
  // e01 * e11 = e01, e11 * e01 = 0
  Algebra::Elt e01(4, 0), e11(4, 0);
  e01[1] = 1;
  e11[3] = 1;
  CHECK(M2.mul(e01, e11) == e01);
  CHECK(M2.mul(e11, e01) == M2.zero());
}

TEST_CASE("quotient algebras") {
  GroupAlgebra A = make_A(2);
  Algebra alg = algebra_of(A);

  QuotientAlgebra Q0 = quotient_algebra(alg, subspace_zero(30));
  CHECK(Q0.alg.dim == 30);
  std::mt19937_64 rng(13);
  Elt a = random_elt(A, rng);
  CHECK(Q0.project(a) == a);

  // span{(1+x) yhat z^i} is a two-sided ideal of square zero
  Elt opx = A.add(A.one(), A.basis(A.G.generator("x")));
  Elt yhat = A.hat(y_subgroup(A.G));
  std::vector<std::vector<Fe>> rows;
  for (int i = 0; i < 3; ++i)
    rows.push_back(A.mul(A.mul(opx, yhat), A.basis(A.G.pow(A.G.generator("z"), std::uint64_t(i)))));
  Subspace J = span_of(A.F, 30, rows);
  REQUIRE(J.dim() == 3);
  for (const auto& r : rows)
    for (const auto& s : rows) CHECK(A.is_zero(A.mul(r, s)));

  QuotientAlgebra Q = quotient_algebra(alg, J);
  CHECK(Q.alg.dim == 27);
  Q.alg.validate();
  for (const auto& r : rows)
    CHECK(Q.project(r) == std::vector<Fe>(27, 0));
  for (int t = 0; t < 50; ++t) {
    Elt u = random_elt(A, rng), v = random_elt(A, rng);
    CHECK(Q.project(A.mul(u, v)) == Q.alg.mul(Q.project(u), Q.project(v)));
  }
  CHECK(Q.project(A.one()) == Q.alg.one());

  CHECK(code_of([&] {
          quotient_algebra(alg, span_of(A.F, 30, {A.basis(A.G.generator("x"))}));
        }) == errc::not_an_ideal);
}

TEST_CASE("induced quotient maps") {
  GroupAlgebra A = make_A(5);
  InducedMap triv = induced_quotient_map(A, {0});
  CHECK(triv.target.dim() == 30);
  CHECK(triv.kernel.dim() == 0);

  InducedMap m = induced_quotient_map(A, y_subgroup(A.G));
  CHECK(m.target.dim() == 6);
  CHECK(m.kernel.dim() == 24);
  CHECK(m.quotient.group.order == 6);
  CHECK(m.apply(A.one()) == m.target.one());
  // eta(yhat) = 5 * identity coset = 0 in characteristic 5
  CHECK(m.target.is_zero(m.apply(A.hat(y_subgroup(A.G)))));

  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    Elt a = random_elt(A, rng), b = random_elt(A, rng);
    CHECK(m.apply(A.mul(a, b)) == m.target.mul(m.apply(a), m.apply(b)));
    CHECK(m.apply(A.add(a, b)) == m.target.add(m.apply(a), m.apply(b)));
  }
  for (int i = 0; i < m.kernel.dim(); ++i)
    CHECK(m.target.is_zero(m.apply(basis_row(m.kernel, i))));

  GroupAlgebra D = make_A(3, 1, "D10");
  CHECK(code_of([&] {
          induced_quotient_map(D, subgroup_generated(D.G, {D.G.generator("x")}));
        }) == errc::not_normal);
}

TEST_CASE("coset augmentations") {
  GroupAlgebra A = make_A(5);
  std::vector<int> Y = y_subgroup(A.G);
  std::vector<Fe> aug1 = coset_augmentations(A, A.one(), Y);
  REQUIRE(aug1.size() == 6);
  CHECK(aug1[0] == 1);
  for (std::size_t i = 1; i < 6; ++i) CHECK(aug1[i] == 0);

  std::vector<int> all(30);
  for (int g = 0; g < 30; ++g) all[std::size_t(g)] = g;
  std::vector<Fe> augh = coset_augmentations(A, A.hat(all), Y);
  for (Fe c : augh) CHECK(c == 0);  // each coset has 5 elements

  GroupAlgebra B = make_A(7);
  std::vector<Fe> augh7 = coset_augmentations(B, B.hat(all), Y);
  for (Fe c : augh7) CHECK(c == 5);
}

TEST_CASE("to_string rendering") {
  GroupAlgebra A = make_A(2);
  CHECK(A.to_string(A.zero()) == "0");
  CHECK(A.to_string(A.one()) == "1");
  Elt u = A.add(A.one(), A.basis(A.G.generator("x")));
  CHECK(A.to_string(u).find("x") != std::string::npos);
}
