#include <vector>

#include <doctest.h>

#include "fixtures_data.hpp"
#include "sampler.hpp"
#include "wpoly/betti.hpp"
#include "wpoly/errors.hpp"
#include "wpoly/matroid.hpp"
#include "wpoly/poly.hpp"
#include "wpoly/weight_poly.hpp"

using wpoly::BettiTable;
using wpoly::BiPoly;
using wpoly::Matroid;
using wpoly::TriPoly;
using wpoly::UniPoly;

namespace {

long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Closed form for uniform matroids: P_{U(r,n),j} is
// (-1)^(j+r) C(n,j) (C(j-1,r) + sum_{l>=1} (-1)^l C(j,r+l) Z^l) for j > r,
// zero for 1 <= j <= r.
UniPoly uniform_gwp(int r, int n, int j) {
  if (j == 0) return UniPoly::constant(1);
  if (j <= r) return UniPoly();
  const long long sign = (j + r) % 2 == 0 ? 1 : -1;
  UniPoly p = UniPoly::constant(choose(j - 1, r));
  for (int l = 1; l <= j - r; ++l)
    p.add_term(l, (l % 2 == 0 ? 1 : -1) * choose(j, r + l));
  return UniPoly::constant(sign * choose(n, j)) * p;
}

std::vector<std::string> strings_of(const std::vector<UniPoly>& ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const UniPoly& p : ps) out.push_back(p.str());
  return out;
}

}  // namespace

TEST_CASE("running example weight polynomials, all four routes") {
  const Matroid m = testdata::runex_matroid();
  const std::vector<UniPoly> direct = wpoly::gwp_direct(m);
  REQUIRE(direct.size() == 8);
  CHECK(strings_of(direct) == testdata::runex_gwp_strings());

  CHECK(wpoly::gwp_naive(m) == direct);
  CHECK(wpoly::gwp_complement_form(m) == direct);
  CHECK(wpoly::gwp_from_betti(wpoly::graded_betti_tables(m)) == direct);
  CHECK(wpoly::gwp_direct(m, 4) == direct);

  // The published tables alone already determine the polynomials.
  CHECK(wpoly::gwp_from_betti(testdata::runex_betti_tables()) == direct);
}

TEST_CASE("route agreement on sampled matroids") {
  testdata::MatroidSampler sampler(424242);
  for (int trial = 0; trial < 10; ++trial) {
    const Matroid m = sampler.next();
    const std::vector<UniPoly> direct = wpoly::gwp_direct(m);
    CHECK(wpoly::gwp_naive(m) == direct);
    CHECK(wpoly::gwp_complement_form(m) == direct);
    CHECK(wpoly::gwp_from_betti(wpoly::graded_betti_tables(m)) == direct);
    CHECK(wpoly::enumerator_via_complements(m) == wpoly::enumerator(m));
  }
}

TEST_CASE("uniform matroids match the closed form") {
  for (int n = 1; n <= 10; ++n) {
    for (int r = 0; r <= n; ++r) {
      const std::vector<UniPoly> got = wpoly::gwp_direct(Matroid::uniform(r, n));
      for (int j = 0; j <= n; ++j) CHECK(got[j] == uniform_gwp(r, n, j));
    }
  }
  CHECK(wpoly::gwp_direct(Matroid::uniform(3, 7))[4].str() == "35Z - 35");
}

TEST_CASE("naive route is capped") {
  CHECK_THROWS_AS(wpoly::gwp_naive(Matroid::uniform(1, 17)), wpoly::Error);
}

TEST_CASE("vamos enumerator and tutte polynomial") {
  const Matroid v = testdata::vamos_matroid();
  const TriPoly w = wpoly::enumerator(v);
  CHECK(w.str() == testdata::vamos_enumerator_str());
  CHECK(wpoly::enumerator_via_complements(v) == w);

  const BiPoly t = wpoly::tutte(v);
  CHECK(t.str() == testdata::vamos_tutte_str());
  CHECK(t.eval(1, 1) == 65);
  CHECK(t.eval(2, 1) == 158);
  CHECK(t.eval(2, 2) == 256);
}

TEST_CASE("tutte duality swaps variables") {
  const Matroid m = testdata::runex_matroid();
  CHECK(wpoly::tutte(m.dual()) == wpoly::tutte(m).swapped_vars());

  testdata::MatroidSampler sampler(5);
  for (int trial = 0; trial < 8; ++trial) {
    const Matroid r = sampler.next();
    CHECK(wpoly::tutte(r.dual()) == wpoly::tutte(r).swapped_vars());
  }
}

TEST_CASE("enumerator and tutte determine each other") {
  testdata::MatroidSampler sampler(1717);
  std::vector<Matroid> pool = {testdata::runex_matroid(), testdata::vamos_matroid(),
                               Matroid::uniform(3, 7), Matroid::uniform(4, 4),
                               Matroid::uniform(0, 3)};
  for (int trial = 0; trial < 6; ++trial) pool.push_back(sampler.next());

  for (const Matroid& m : pool) {
    const int n = m.ground_size();
    const int k = m.rank();
    const TriPoly w = wpoly::enumerator(m);
    const BiPoly t = wpoly::tutte(m);
    CHECK(wpoly::tutte_from_enumerator(w, n, k) == t);
    CHECK(wpoly::enumerator_from_tutte(t, n, k) == w);
  }
}

TEST_CASE("tutte to enumerator on a hand-checked example") {
  BiPoly t;
  t.add_term(1, 0, 1);
  t.add_term(0, 1, 1);
  TriPoly expected;
  expected.add_term(2, 0, 0, 1);
  expected.add_term(0, 2, 1, 1);
  expected.add_term(0, 2, 0, -1);
  CHECK(wpoly::enumerator_from_tutte(t, 2, 1) == expected);
  CHECK(wpoly::tutte_from_enumerator(expected, 2, 1) == t);
}

TEST_CASE("free matroid has trivial enumerator") {
  const Matroid f = Matroid::uniform(5, 5);
  TriPoly x5;
  x5.add_term(5, 0, 0, 1);
  BiPoly tx5;
  tx5.add_term(5, 0, 1);
  CHECK(wpoly::enumerator(f) == x5);
  CHECK(wpoly::tutte(f) == tx5);
  CHECK(wpoly::tutte_from_enumerator(x5, 5, 5) == tx5);
  CHECK(wpoly::enumerator_from_tutte(tx5, 5, 5) == x5);
}

TEST_CASE("corrupted enumerators are rejected") {
  const Matroid m = testdata::runex_matroid();
  const TriPoly w = wpoly::enumerator(m);

  TriPoly inhomogeneous = w;
  inhomogeneous.add_term(0, 0, 0, 1);
  CHECK_THROWS_AS(wpoly::tutte_from_enumerator(inhomogeneous, 7, 3),
                  wpoly::InterpolationInconsistency);

  TriPoly deep_z = w;
  deep_z.add_term(0, 7, 5, 1);
  CHECK_THROWS_AS(wpoly::tutte_from_enumerator(deep_z, 7, 3),
                  wpoly::InterpolationInconsistency);

  TriPoly bumped = w;
  bumped.add_term(0, 7, 0, 1);
  CHECK_THROWS_AS(wpoly::tutte_from_enumerator(bumped, 7, 3),
                  wpoly::InterpolationInconsistency);

  TriPoly scaled = w;
  scaled.add_term(7, 0, 0, 1);
  CHECK_THROWS_AS(wpoly::tutte_from_enumerator(scaled, 7, 3),
                  wpoly::InterpolationInconsistency);
}

TEST_CASE("tutte degree bounds are enforced") {
  BiPoly too_x;
  too_x.add_term(2, 0, 1);
  CHECK_THROWS_AS(wpoly::enumerator_from_tutte(too_x, 2, 1),
                  wpoly::InterpolationInconsistency);

  BiPoly too_y;
  too_y.add_term(0, 2, 1);
  CHECK_THROWS_AS(wpoly::enumerator_from_tutte(too_y, 2, 1),
                  wpoly::InterpolationInconsistency);
}

TEST_CASE("elongation shifts coefficients down") {
  CHECK(wpoly::gwp_elongation_shift(UniPoly::from_coeffs({28, -43, 15})).str() ==
        "15Z - 15");
  CHECK(wpoly::gwp_elongation_shift(UniPoly::from_coeffs({10, -23, 19, -7, 1})).str() ==
        "Z^3 - 7Z^2 + 19Z - 13");
  CHECK(wpoly::gwp_elongation_shift(UniPoly::constant(1)) == UniPoly::constant(1));
  CHECK(wpoly::gwp_elongation_shift(UniPoly()).is_zero());

  const Matroid m = testdata::runex_matroid();
  std::vector<UniPoly> level = wpoly::gwp_direct(m);
  for (int l = 0; l < m.corank(); ++l) {
    const std::vector<UniPoly> next = wpoly::gwp_direct(m.elongate(l + 1));
    for (int j = 0; j <= 7; ++j)
      CHECK(wpoly::gwp_elongation_shift(level[j]) == next[j]);
    level = next;
  }
}

TEST_CASE("weight hierarchies agree across routes") {
  const Matroid m = testdata::runex_matroid();
  const wpoly::WeightHierarchy expected{{2, 4, 6, 7}};
  CHECK(wpoly::higher_weights_from_gwp(wpoly::gwp_direct(m)) == expected);
  CHECK(wpoly::higher_weights_from_betti(wpoly::graded_betti_tables(m)) == expected);
  CHECK(wpoly::higher_weights_by_nullity(m) == expected);

  const wpoly::WeightHierarchy simplex{{4, 6, 7}};
  CHECK(wpoly::higher_weights_by_nullity(testdata::simplex_code().matroid()) == simplex);

  for (int n = 1; n <= 8; ++n) {
    for (int r = 0; r < n; ++r) {
      std::vector<int> expected_d;
      for (int i = 1; i <= n - r; ++i) expected_d.push_back(r + i);
      CHECK(wpoly::higher_weights_from_gwp(wpoly::gwp_direct(Matroid::uniform(r, n))).d ==
            expected_d);
    }
  }

  testdata::MatroidSampler sampler(808);
  for (int trial = 0; trial < 10; ++trial) {
    const Matroid r = sampler.next();
    const wpoly::WeightHierarchy h = wpoly::higher_weights_by_nullity(r);
    CHECK(wpoly::higher_weights_from_gwp(wpoly::gwp_direct(r)) == h);
    CHECK(wpoly::higher_weights_from_betti(wpoly::graded_betti_tables(r)) == h);
  }
}

TEST_CASE("elongation drops the first higher weight") {
  const Matroid m = testdata::runex_matroid();
  for (int l = 0; l < m.corank(); ++l) {
    const std::vector<int> now = wpoly::higher_weights_by_nullity(m.elongate(l)).d;
    const std::vector<int> next = wpoly::higher_weights_by_nullity(m.elongate(l + 1)).d;
    REQUIRE(next.size() + 1 == now.size());
    for (std::size_t i = 0; i < next.size(); ++i) CHECK(next[i] == now[i + 1]);
  }
}

TEST_CASE("hierarchy error paths") {
  CHECK_THROWS_AS(
      wpoly::higher_weights_from_gwp({UniPoly::constant(1), UniPoly::monomial(1, 2)}),
      wpoly::MissingDegree);

  BettiTable t0;
  t0.n = 3;
  t0.level = 0;
  t0.entries = {{{1, 3}, 1}};
  BettiTable t1;
  t1.n = 3;
  t1.level = 1;
  CHECK_THROWS_AS(wpoly::higher_weights_from_betti({t0, t1}), wpoly::MissingEntry);
}

TEST_CASE("betti route validates its input tables") {
  const Matroid m = testdata::runex_matroid();
  std::vector<BettiTable> tables = wpoly::graded_betti_tables(m);
  std::vector<BettiTable> gap = {tables[0], tables[2]};
  CHECK_THROWS_AS(wpoly::gwp_from_betti(gap), wpoly::Error);
  std::vector<BettiTable> offset = {tables[1]};
  CHECK_THROWS_AS(wpoly::gwp_from_betti(offset), wpoly::Error);
  std::vector<BettiTable> mixed = tables;
  mixed[1].n = 6;
  CHECK_THROWS_AS(wpoly::gwp_from_betti(mixed), wpoly::Error);
}

TEST_CASE("twin matroids") {
  const std::vector<UniPoly> runex = wpoly::gwp_direct(testdata::runex_matroid());
  CHECK(wpoly::gwp_direct(testdata::gwp_twin_matroid()) == runex);

  // The counterexample pair agrees through j=4 and splits at j=5, taking the
  // two distinct quadratics while sharing all level-0 Betti numbers.
  const std::vector<UniPoly> a = wpoly::gwp_direct(testdata::betti_twin_a());
  const std::vector<UniPoly> b = wpoly::gwp_direct(testdata::betti_twin_b());
  CHECK(a != b);
  for (int j = 0; j <= 4; ++j) CHECK(a[j] == b[j]);
  CHECK(a[4].str() == "5Z - 5");
  CHECK(a[5].str() == "Z^2 - 5Z + 4");
  CHECK(b[5].str() == "2Z^2 - 6Z + 4");
}

TEST_CASE("leading coefficient of the last polynomial detects coloops") {
  CHECK(wpoly::gwp_direct(testdata::runex_matroid())[7].coeff(4) == 1);
  CHECK(wpoly::gwp_direct(testdata::vamos_matroid())[8].coeff(4) == 1);
  CHECK(wpoly::gwp_direct(Matroid::uniform(2, 4))[4].coeff(2) == 1);
  CHECK(wpoly::gwp_direct(testdata::betti_twin_a())[8].coeff(3) == 0);
  CHECK(wpoly::gwp_direct(testdata::betti_twin_b())[8].coeff(3) == 0);
}
