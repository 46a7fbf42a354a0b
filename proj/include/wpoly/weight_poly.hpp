#pragma once

#include <vector>

#include "wpoly/betti.hpp"
#include "wpoly/matroid.hpp"
#include "wpoly/poly.hpp"

namespace wpoly {

// Generalized weight polynomials P_{M,j}(Z) for j = 0..n. Entry j is the
// signed double sum over j-subsets sigma and their subsets gamma of
// (-1)^|gamma| Z^{nullity(gamma)}, collapsed to a single subset sweep with
// binomial multiplicities. P_{M,0} = 1.
std::vector<UniPoly> gwp_direct(const Matroid& m, int threads = 1);

// Literal definition via subset-of-subset enumeration; reference route,
// capped at n <= 16.
std::vector<UniPoly> gwp_naive(const Matroid& m);

// Second route through complement nullities: P_i is a signed binomial
// combination of the sums over |gamma| = j of Z^{nullity(E minus gamma)}.
// Rank queries go through the per-subset path rather than the rank table.
std::vector<UniPoly> gwp_complement_form(const Matroid& m);

// Third route: coefficient of Z^l in P_{M,j} is the alternating sum over i of
// beta^(l-1)_{i,j} - beta^(l)_{i,j}, with out-of-range levels read as zero.
// Expects the tables of graded_betti_tables (levels 0..corank, shared n).
std::vector<UniPoly> gwp_from_betti(const std::vector<BettiTable>& tables);

// W_M(X,Y,Z) = sum_j P_{M,j}(Z) X^(n-j) Y^j.
TriPoly enumerator(const Matroid& m);

// Same polynomial assembled from subset sums of complement nullities,
// sum over gamma of Z^{nullity(E minus gamma)} (X-Y)^{|gamma|} Y^{n-|gamma|}.
TriPoly enumerator_via_complements(const Matroid& m);

// Corank-nullity form: t_M(X,Y) = sum over subsets of
// (X-1)^{rank(E)-rank(sigma)} (Y-1)^{|sigma|-rank(sigma)}.
BiPoly tutte(const Matroid& m);

// t_M(X,Y) = (X-1)^{-(n-k)} X^n W_M(1, X^{-1}, (X-1)(Y-1)), computed by exact
// evaluation on an integer grid followed by Newton interpolation. Throws
// InterpolationInconsistency when W is not an enumerator with parameters
// (n, k): inhomogeneous input, a division remainder, or an off-grid check
// failure.
BiPoly tutte_from_enumerator(const TriPoly& w, int n, int k);

// W_M(X,Y,Z) = (X-Y)^(n-k) Y^k t_M(X/Y, (X+(Z-1)Y)/(X-Y)); same grid
// evaluation and interpolation machinery, same error surface.
TriPoly enumerator_from_tutte(const BiPoly& t, int n, int k);

// Coefficientwise shift that maps P_{M_l, j} to P_{M_(l+1), j}: degrees drop
// by one and the two lowest coefficients fold into the new constant term.
UniPoly gwp_elongation_shift(const UniPoly& p);

// Higher weights d_1 < d_2 < ... < d_(n-k).
struct WeightHierarchy {
  std::vector<int> d;  // d[i-1] is d_i
  bool operator==(const WeightHierarchy& other) const = default;
};

// d_i as the least s with deg P_{M,s} = i. Throws MissingDegree when some
// index in 1..max attained degree has no witness.
WeightHierarchy higher_weights_from_gwp(const std::vector<UniPoly>& gwps);

// d_i as the least degree j with beta^(i-1)_{0,j} nonzero. Expects the tables
// of graded_betti_tables. Throws MissingEntry when a needed row is empty.
WeightHierarchy higher_weights_from_betti(const std::vector<BettiTable>& tables);

// d_i as the least cardinality of a subset of nullity i (the definition).
WeightHierarchy higher_weights_by_nullity(const Matroid& m);

}  // namespace wpoly
