#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wpoly/matroid.hpp"
#include "wpoly/subset.hpp"

namespace wpoly {

// N-graded Betti numbers of the Stanley-Reisner ideal of the elongation of a
// matroid to rank r+level. Only nonzero entries are stored, keyed by
// (homological index i, degree j).
struct BettiTable {
  int n = 0;
  int level = 0;
  std::map<std::pair<int, int>, long long> entries;

  long long at(int i, int j) const {
    const auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  bool operator==(const BettiTable& other) const = default;
};

// Dimensions of reduced homology of an independence complex over GF(2).
// dims[i+1] holds dim H_i, for i = -1 (the empty face) through rank-1.
struct HomologyDims {
  std::vector<long long> dims;

  long long at(int i) const {
    const int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
    return dims[idx];
  }
  bool operator==(const HomologyDims& other) const = default;
};

// Chain-complex oracle: builds the boundary maps of the independence complex
// (empty face included) and computes homology ranks by row reduction over
// GF(2). Exhaustive reference route; requires ground_size() <= 12.
HomologyDims homology_dims_oracle(const Matroid& m);

// Betti number of the Stanley-Reisner ideal in homological index i and
// multidegree sigma. Nonzero only when i+1 equals the nullity of sigma.
long long betti_sigma(const Matroid& m, int i, Subset sigma);

// N-graded table for one elongation level; levels outside [0, corank] give an
// all-zero table.
BettiTable graded_betti_table(const Matroid& m, int level);

// Tables for every level 0..corank.
std::vector<BettiTable> graded_betti_tables(const Matroid& m);

// Consecutive elongation levels shift homological support down by one: for
// i >= 1, beta^(l)_{i,j} != 0 exactly when beta^(l+1)_{i-1,j} != 0.
bool betti_support_shift_check(const Matroid& m);

}  // namespace wpoly
