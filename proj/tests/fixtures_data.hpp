#pragma once

// Shared reference data for the test suite: the [7,4] code over GF(5) used
// throughout, its basis-equivalent cousins, the Vamos matroid, and the binary
// simplex code of dimension 3.

#include <vector>

#include "wpoly/betti.hpp"
#include "wpoly/codes.hpp"
#include "wpoly/field_matrix.hpp"
#include "wpoly/gf.hpp"
#include "wpoly/matroid.hpp"
#include "wpoly/subset.hpp"

namespace testdata {

inline wpoly::FieldMatrix runex_pcheck() {
  const wpoly::FiniteField f = wpoly::FiniteField::make(5, 1);
  wpoly::FieldMatrix h(f, 3, 7);
  const int rows[3][7] = {
      {1, 0, 0, 3, 3, 3, 4},
      {0, 1, 0, 0, 2, 2, 0},
      {0, 0, 1, 4, 4, 4, 4},
  };
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 7; ++c) h.at(r, c) = static_cast<wpoly::GfElem>(rows[r][c]);
  return h;
}

inline wpoly::LinearCode runex_code() {
  return wpoly::LinearCode::from_parity_check(runex_pcheck());
}

inline std::vector<std::vector<int>> runex_basis_lists() {
  return {
      {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 2, 7}, {1, 3, 5},
      {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {1, 5, 7}, {1, 6, 7}, {2, 3, 4},
      {2, 3, 5}, {2, 3, 6}, {2, 3, 7}, {2, 4, 7}, {2, 5, 7}, {2, 6, 7},
      {3, 4, 5}, {3, 4, 6}, {3, 5, 7}, {3, 6, 7}, {4, 5, 7}, {4, 6, 7},
  };
}

inline wpoly::Matroid from_lists(int n, const std::vector<std::vector<int>>& lists) {
  std::vector<wpoly::Subset> bases;
  bases.reserve(lists.size());
  for (const auto& b : lists) bases.push_back(wpoly::Subset::of_elements(b, n));
  return wpoly::Matroid::from_bases(n, bases);
}

inline wpoly::Matroid runex_matroid() { return from_lists(7, runex_basis_lists()); }

inline std::vector<std::vector<int>> runex_circuit_lists() {
  return {
      {5, 6},          {1, 3, 4},       {1, 3, 7},       {1, 4, 7},
      {2, 4, 5},       {2, 4, 6},       {3, 4, 7},       {1, 2, 3, 5},
      {1, 2, 3, 6},    {1, 2, 5, 7},    {1, 2, 6, 7},    {2, 3, 5, 7},
      {2, 3, 6, 7},
  };
}

// Betti tables of the running example and its elongations, levels 0..4.
inline std::vector<wpoly::BettiTable> runex_betti_tables() {
  std::vector<wpoly::BettiTable> out(5);
  for (int l = 0; l < 5; ++l) {
    out[l].n = 7;
    out[l].level = l;
  }
  out[0].entries = {{{0, 2}, 1},  {{0, 3}, 6},  {{0, 4}, 6}, {{1, 4}, 5},
                    {{1, 5}, 28}, {{2, 6}, 31}, {{3, 7}, 10}};
  out[1].entries = {{{0, 4}, 2}, {{0, 5}, 15}, {{1, 6}, 29}, {{2, 7}, 13}};
  out[2].entries = {{{0, 6}, 7}, {{1, 7}, 6}};
  out[3].entries = {{{0, 7}, 1}};
  return out;
}

// P_{M,0}..P_{M,7} of the running example, rendered in Z.
inline std::vector<std::string> runex_gwp_strings() {
  return {
      "1",
      "0",
      "Z - 1",
      "6Z - 6",
      "2Z^2 - Z - 1",
      "15Z^2 - 43Z + 28",
      "7Z^3 - 36Z^2 + 60Z - 31",
      "Z^4 - 7Z^3 + 19Z^2 - 23Z + 10",
  };
}

// Weight distribution of the running example code (q = 5).
inline std::vector<long long> runex_distribution() {
  return {1, 0, 4, 24, 44, 188, 244, 120};
}

// A matroid with the same GWPs as the running example but different Betti
// numbers: beta_{0,4} = 5 and beta_{1,4} = 4 instead of 6 and 5.
inline wpoly::Matroid gwp_twin_matroid() {
  return from_lists(7, {{1, 4, 7}, {1, 3, 6}, {1, 3, 5}, {1, 3, 4}, {2, 3, 6},
                        {3, 4, 7}, {1, 2, 5}, {1, 5, 7}, {3, 6, 7}, {2, 4, 7},
                        {3, 5, 6}, {2, 3, 4}, {1, 2, 3}, {1, 2, 7}, {1, 5, 6},
                        {3, 4, 5}, {1, 6, 7}, {1, 4, 5}, {2, 3, 7}, {2, 5, 6},
                        {2, 4, 5}, {3, 5, 7}, {2, 6, 7}, {2, 5, 7}});
}

inline std::vector<std::pair<std::pair<int, int>, long long>> gwp_twin_level0() {
  return {{{0, 2}, 1},  {{0, 3}, 6},  {{0, 4}, 5}, {{1, 4}, 4},
          {{1, 5}, 28}, {{2, 6}, 31}, {{3, 7}, 10}};
}

// Rank-5 matroids on 8 elements with identical Betti numbers in every level
// but different GWPs: P_{M,4} = Z^2 - 5Z + 4 for the first, 2Z^2 - 6Z + 4 for
// the second.
inline wpoly::Matroid betti_twin_a() {
  return from_lists(8, {{1, 3, 4, 6, 7}, {1, 2, 3, 6, 8}, {1, 2, 3, 4, 8},
                        {1, 2, 3, 5, 8}, {1, 2, 5, 6, 8}, {1, 2, 3, 4, 7},
                        {1, 2, 3, 5, 7}, {1, 2, 5, 6, 7}, {1, 3, 4, 5, 7},
                        {1, 3, 4, 6, 8}, {1, 2, 4, 6, 8}, {1, 2, 4, 6, 7},
                        {1, 3, 4, 5, 8}, {1, 2, 4, 5, 7}, {1, 4, 5, 6, 7},
                        {1, 2, 3, 6, 7}, {1, 3, 5, 6, 7}, {1, 4, 5, 6, 8},
                        {1, 3, 5, 6, 8}, {1, 2, 4, 5, 8}});
}

inline wpoly::Matroid betti_twin_b() {
  return from_lists(8, {{1, 3, 4, 6, 7}, {1, 2, 3, 4, 8}, {1, 2, 3, 5, 8},
                        {1, 2, 5, 6, 8}, {1, 2, 3, 4, 7}, {1, 2, 3, 5, 7},
                        {1, 2, 5, 6, 7}, {1, 3, 4, 5, 7}, {1, 3, 4, 6, 8},
                        {1, 2, 4, 6, 8}, {1, 2, 4, 6, 7}, {1, 3, 4, 5, 8},
                        {1, 2, 4, 5, 7}, {1, 3, 4, 5, 6}, {1, 2, 4, 5, 6},
                        {1, 3, 5, 6, 7}, {1, 2, 3, 5, 6}, {1, 2, 3, 4, 6},
                        {1, 3, 5, 6, 8}, {1, 2, 4, 5, 8}});
}

inline wpoly::Matroid vamos_matroid() {
  const std::vector<std::vector<int>> non = {
      {1, 2, 3, 4}, {1, 2, 7, 8}, {3, 4, 5, 6}, {3, 4, 7, 8}, {5, 6, 7, 8}};
  std::vector<wpoly::Subset> nonbases;
  for (const auto& b : non) nonbases.push_back(wpoly::Subset::of_elements(b, 8));
  std::vector<wpoly::Subset> bases;
  for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
    const wpoly::Subset s = wpoly::Subset::of_mask(mask);
    if (s.size() != 4) continue;
    bool skip = false;
    for (const auto& nb : nonbases) skip = skip || s == nb;
    if (!skip) bases.push_back(s);
  }
  return wpoly::Matroid::from_bases(8, bases);
}

inline const char* vamos_enumerator_str() {
  return "X^8 + 5X^4Y^4Z - 5X^4Y^4 + 36X^3Y^5Z - 36X^3Y^5 + 28X^2Y^6Z^2 - "
         "138X^2Y^6Z + 110X^2Y^6 + 8XY^7Z^3 - 56XY^7Z^2 + 148XY^7Z - 100XY^7 "
         "+ Y^8Z^4 - 8Y^8Z^3 + 28Y^8Z^2 - 51Y^8Z + 30Y^8";
}

inline const char* vamos_tutte_str() {
  return "X^4 + 4X^3 + 10X^2 + 5XY + 15X + Y^4 + 4Y^3 + 10Y^2 + 15Y";
}

inline wpoly::FieldMatrix simplex_gen() {
  const wpoly::FiniteField f = wpoly::FiniteField::make(2, 1);
  wpoly::FieldMatrix g(f, 3, 7);
  const int rows[3][7] = {
      {0, 0, 0, 1, 1, 1, 1},
      {0, 1, 1, 0, 0, 1, 1},
      {1, 0, 1, 0, 1, 0, 1},
  };
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 7; ++c) g.at(r, c) = static_cast<wpoly::GfElem>(rows[r][c]);
  return g;
}

inline wpoly::LinearCode simplex_code() {
  return wpoly::LinearCode::from_generator(simplex_gen());
}

// A_j of the simplex code as polynomials in Q: index 4 is 7Q - 7, index 6 is
// 7Q^2 - 21Q + 14, index 7 is Q^3 - 7Q^2 + 14Q - 8, the rest constant.
inline long long simplex_weight_count(int j, long long big_q) {
  switch (j) {
    case 0: return 1;
    case 4: return 7 * big_q - 7;
    case 6: return 7 * big_q * big_q - 21 * big_q + 14;
    case 7: return big_q * big_q * big_q - 7 * big_q * big_q + 14 * big_q - 8;
    default: return 0;
  }
}

}  // namespace testdata
