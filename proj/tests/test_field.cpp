#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "gau/field.hpp"
#include "test_util.hpp"

using namespace gau;

TEST_CASE("modulus selection is deterministic and minimal") {
  CHECK(Fq::make(2, 1).modulus() == std::vector<std::uint32_t>{0, 1});      // t
  CHECK(Fq::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});   // t^2+t+1
  CHECK(Fq::make(5, 2).modulus() == std::vector<std::uint32_t>{2, 0, 1});   // t^2+2
  CHECK(Fq::make(2, 4).modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  CHECK(Fq::make(3, 1).q() == 3);
  CHECK(Fq::make(7, 2).q() == 49);
  CHECK(Fq::make(2, 2) == Fq::with_modulus(2, {1, 1, 1}));
}

TEST_CASE("field construction rejects bad input") {
  CHECK(code_of([] { Fq::make(4, 1); }) == errc::non_prime);
  CHECK(code_of([] { Fq::make(1, 1); }) == errc::non_prime);
  CHECK(code_of([] { Fq::make(2, 0); }) == errc::degree_zero);
  CHECK(code_of([] { Fq::make(2, 33); }) == errc::too_large);
}

TEST_CASE("small multiplications and inverses") {
  Fq F4 = Fq::make(2, 2);
  Fe t = F4.from_digits({0, 1});
  Fe t1 = F4.from_digits({1, 1});
  CHECK(F4.mul(t, t1) == F4.one());
  CHECK(F4.inv(t) == t1);

  Fq F5 = Fq::make(5, 1);
  CHECK(F5.mul(2, 3) == F5.one());
  Fq F7 = Fq::make(7, 1);
  CHECK(F7.inv(3) == 5);
  CHECK(F7.inv(F7.one()) == F7.one());
  CHECK(code_of([&] { F7.inv(0); }) == errc::zero_inverse);

  for (Fe a = 0; a < 4; ++a) CHECK(F4.mul(a, F4.one()) == a);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(1);
  for (const Fq& F : {Fq::make(2, 3), Fq::make(5, 2)}) {
    for (int i = 0; i < 1000; ++i) {
      Fe a = Fe(rng() % F.q()), b = Fe(rng() % F.q()), c = Fe(rng() % F.q());
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, b) == F.mul(b, a));
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
    }
  }
}

TEST_CASE("Frobenius fixes every element") {
  for (const Fq& F : {Fq::make(2, 1), Fq::make(2, 2), Fq::make(2, 4), Fq::make(2, 8),
                      Fq::make(3, 2), Fq::make(5, 2), Fq::make(7, 2), Fq::make(13, 1)}) {
    REQUIRE(F.q() <= 256);
    for (Fe a = 0; a < F.q(); ++a) CHECK(F.pow(a, F.q()) == a);
  }
}

TEST_CASE("nonzero elements form a group") {
  for (const Fq& F : {Fq::make(2, 4), Fq::make(3, 2), Fq::make(11, 1)}) {
    for (Fe a = 1; a < F.q(); ++a) {
      CHECK(F.inv(F.inv(a)) == a);
      CHECK(F.mul(a, F.inv(a)) == F.one());
      CHECK(F.pow(a, F.q() - 1) == F.one());
    }
  }
}

TEST_CASE("digit encoding round-trips") {
  Fq F = Fq::make(3, 3);
  for (Fe a = 0; a < F.q(); ++a) {
    auto d = F.digits(a);
    CHECK(d.size() == 3);
    CHECK(F.from_digits(d) == a);
  }
  CHECK(F.from_int(7) == 1);  // prime subfield embedding
  Fq F4 = Fq::make(2, 2);
  CHECK(F4.to_string(F4.from_digits({0, 1})) == "2");
}
