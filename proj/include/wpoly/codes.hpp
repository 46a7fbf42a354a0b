#pragma once

#include <vector>

#include "wpoly/field_matrix.hpp"
#include "wpoly/matroid.hpp"
#include "wpoly/poly.hpp"
#include "wpoly/subset.hpp"

namespace wpoly {

// A linear [n, k] code held as a generator / parity check pair over a common
// field, both in full row rank form and orthogonal to each other. The zero
// code (k = 0) is representable; shortening can produce it.
class LinearCode {
 public:
  // Completes the missing matrix with kernel_basis. The given matrix must
  // have full row rank.
  static LinearCode from_generator(const FieldMatrix& g);
  static LinearCode from_parity_check(const FieldMatrix& h);

  const FiniteField& field() const { return gen_.field(); }
  int length() const { return gen_.cols(); }
  int dimension() const { return gen_.rows(); }
  const FieldMatrix& generator() const { return gen_; }
  const FieldMatrix& parity_check() const { return pcheck_; }

  // Vector matroid of the parity check matrix, rank n - k. Carries the weight
  // distribution data of the code.
  Matroid matroid() const;

  // Deletes the coordinates in `positions` from every word; the generator is
  // re-ranked afterwards, so the dimension may drop.
  LinearCode punctured(const Subset& positions) const;

  // Restricts to words vanishing on `positions`, then deletes those
  // coordinates. The parity check of the result is this code's parity check
  // restricted to the kept columns (re-ranked).
  LinearCode shortened(const Subset& positions) const;

  // Same field, same parameters, same row space of generators.
  bool operator==(const LinearCode& other) const;
  bool operator!=(const LinearCode& other) const { return !(*this == other); }

 private:
  LinearCode(FieldMatrix g, FieldMatrix h);

  FieldMatrix gen_;
  FieldMatrix pcheck_;
};

// counts[j] is the number of words of weight j in the scalar extension of
// degree m (the code itself when m = 1).
struct WeightDistribution {
  int m = 1;
  std::vector<long long> counts;

  bool operator==(const WeightDistribution& other) const = default;
};

// Enumerates all q^(km) words of the degree-m scalar extension and tallies
// weights. Throws EnumerationBudgetExceeded when the word count exceeds
// `budget`. Base-field entries lift as constant polynomials, so m > 1
// requires a prime base field.
WeightDistribution brute_force_distribution(const LinearCode& code, int m = 1,
                                            long long budget = 10'000'000);

// A_j as polynomials in Q = q^m: the weight polynomials of the parity check
// matroid. Evaluating entry j at q^m gives the weight-j count of the
// extension.
std::vector<UniPoly> extended_weight_polynomials(const LinearCode& code);

}  // namespace wpoly
