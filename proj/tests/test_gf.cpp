#include <vector>

#include <doctest.h>

#include "wpoly/errors.hpp"
#include "wpoly/gf.hpp"

using wpoly::FiniteField;
using wpoly::GfElem;

namespace {

// Exhaustive field axioms; quadratic and cubic loops stay cheap because the
// orders used here are at most 25.
void check_axioms(const FiniteField& f) {
  const int q = f.order();
  for (int a = 0; a < q; ++a) {
    const GfElem x = static_cast<GfElem>(a);
    CHECK(f.add(x, f.zero()) == x);
    CHECK(f.mul(x, f.one()) == x);
    CHECK(f.add(x, f.neg(x)) == f.zero());
    if (a != 0) {
      CHECK(f.mul(x, f.inv(x)) == f.one());
      CHECK(f.div(x, x) == f.one());
    }
    for (int b = 0; b < q; ++b) {
      const GfElem y = static_cast<GfElem>(b);
      CHECK(f.add(x, y) == f.add(y, x));
      CHECK(f.mul(x, y) == f.mul(y, x));
      CHECK(f.sub(x, y) == f.add(x, f.neg(y)));
      for (int c = 0; c < q; ++c) {
        const GfElem z = static_cast<GfElem>(c);
        CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
        CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
        CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      }
    }
  }
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const FiniteField f = FiniteField::make(5, 1);
  CHECK(f.characteristic() == 5);
  CHECK(f.extension_degree() == 1);
  CHECK(f.order() == 5);
  CHECK(f.add(3, 4) == 2);
  CHECK(f.mul(3, 4) == 2);
  CHECK(f.inv(2) == 3);
  check_axioms(f);
}

TEST_CASE("extension fields use the first monic irreducible modulus") {
  const FiniteField f4 = FiniteField::make(2, 2);
  CHECK(f4.order() == 4);
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
  check_axioms(f4);

  const FiniteField f8 = FiniteField::make(2, 3);
  CHECK(f8.order() == 8);
  CHECK(f8.modulus() == std::vector<int>{1, 0, 1, 1});
  check_axioms(f8);

  const FiniteField f25 = FiniteField::make(5, 2);
  CHECK(f25.order() == 25);
  CHECK(f25.modulus() == std::vector<int>{1, 1, 1});
  check_axioms(f25);
}

TEST_CASE("largest supported order") {
  const FiniteField f = FiniteField::make(2, 16);
  CHECK(f.order() == 65536);
  const GfElem a = 54321;
  CHECK(f.mul(a, f.inv(a)) == f.one());
  CHECK(f.add(a, a) == f.zero());
}

TEST_CASE("construction and division errors") {
  CHECK_THROWS_AS(FiniteField::make(4, 1), wpoly::NonPrimeCharacteristic);
  CHECK_THROWS_AS(FiniteField::make(6, 2), wpoly::NonPrimeCharacteristic);
  CHECK_THROWS_AS(FiniteField::make(2, 17), wpoly::FieldTooLarge);
  CHECK_THROWS_AS(FiniteField::make(251, 3), wpoly::FieldTooLarge);
  CHECK_THROWS_AS(FiniteField::make(2, 0), wpoly::Error);

  const FiniteField f = FiniteField::make(3, 1);
  CHECK_THROWS_AS(f.inv(0), wpoly::Error);
  CHECK_THROWS_AS(f.div(1, 0), wpoly::Error);
}
