#include "wpoly/betti.hpp"

#include <bit>

#include "wpoly/errors.hpp"
#include "wpoly/field_matrix.hpp"
#include "wpoly/gf.hpp"

namespace wpoly {
namespace {

constexpr int kOracleCap = 12;

// Signed count of independent subsets of sigma in the elongation to level l:
// sum over gamma inside sigma with nullity(gamma) <= l of (-1)^|gamma|.
// The reduced Euler characteristic of the restricted elongation is its
// negative.
long long signed_indep_count(const Matroid& m, std::uint32_t sigma, int level) {
  const auto& ranks = m.rank_table();
  long long acc = 0;
  std::uint32_t sub = sigma;
  while (true) {
    const int size = std::popcount(sub);
    if (size - ranks[sub] <= level) acc += (size & 1) ? -1 : 1;
    if (sub == 0) break;
    sub = (sub - 1) & sigma;
  }
  return acc;
}

}  // namespace

HomologyDims homology_dims_oracle(const Matroid& m) {
  const int n = m.ground_size();
  if (n > kOracleCap)
    throw GroundSetCapExceeded("homology oracle capped at n=" +
                               std::to_string(kOracleCap));
  const int r = m.rank();
  const auto& ranks = m.rank_table();
  const FiniteField gf2 = FiniteField::make(2, 1);

  // faces[c] lists independent sets of cardinality c by mask, ascending;
  // index[mask] is the position of a face within its cardinality class.
  std::vector<std::vector<std::uint32_t>> faces(r + 1);
  std::vector<int> index(std::size_t{1} << n, -1);
  for (std::uint32_t msk = 0; msk < (std::uint32_t{1} << n); ++msk) {
    const int size = std::popcount(msk);
    if (size <= r && ranks[msk] == size) {
      index[msk] = static_cast<int>(faces[size].size());
      faces[size].push_back(msk);
    }
  }

  // boundary_rank[c] is the rank of the map from cardinality-c chains to
  // cardinality-(c-1) chains. Signs alternate with element position; over
  // GF(2) they all map to 1, but the construction is kept general.
  std::vector<int> boundary_rank(r + 2, 0);
  for (int c = 1; c <= r; ++c) {
    FieldMatrix delta(gf2, static_cast<int>(faces[c - 1].size()),
                      static_cast<int>(faces[c].size()));
    for (std::size_t col = 0; col < faces[c].size(); ++col) {
      const std::uint32_t msk = faces[c][col];
      int position = 0;
      for (std::uint32_t b = msk; b; b &= b - 1, ++position) {
        const std::uint32_t sub = msk ^ (b & (~b + 1));
        const int sign = (position & 1) ? -1 : 1;
        const GfElem entry = sign < 0 ? gf2.neg(1) : 1;
        delta.at(index[sub], static_cast<int>(col)) = entry;
      }
    }
    boundary_rank[c] = rank_of(delta);
  }

  HomologyDims out;
  out.dims.assign(r + 1, 0);
  for (int c = 0; c <= r; ++c)
    out.dims[c] = static_cast<long long>(faces[c].size()) - boundary_rank[c] -
                  boundary_rank[c + 1];
  return out;
}

long long betti_sigma(const Matroid& m, int i, Subset sigma) {
  if (sigma.mask() >> m.ground_size())
    throw ElementOutOfRange("multidegree outside ground set");
  const RankProfile rp = m.rank_profile(sigma);
  if (i < 0 || i + 1 != rp.nullity) return 0;
  // Matroid complexes have homology concentrated in the top dimension, so the
  // Betti number reduces to a signed Euler characteristic of the restriction.
  const long long chi = -signed_indep_count(m, sigma.mask(), 0);
  const long long beta = ((rp.rank - 1) % 2 == 0) ? chi : -chi;
  return beta;
}

BettiTable graded_betti_table(const Matroid& m, int level) {
  const int n = m.ground_size();
  BettiTable table;
  table.n = n;
  table.level = level;
  if (level < 0 || level > m.corank()) return table;

  const auto& ranks = m.rank_table();
  const std::uint32_t top = std::uint32_t{1} << n;

  // Zeta transform of (-1)^|gamma| [nullity(gamma) <= level] over subsets:
  // after the sweep, acc[sigma] is the signed independent-subset count of
  // sigma in the elongation, whose negation is the Euler characteristic.
  std::vector<long long> acc(top);
  for (std::uint32_t msk = 0; msk < top; ++msk) {
    const int size = std::popcount(msk);
    acc[msk] = (size - ranks[msk] <= level) ? ((size & 1) ? -1 : 1) : 0;
  }
  for (int b = 0; b < n; ++b) {
    const std::uint32_t bit = std::uint32_t{1} << b;
    for (std::uint32_t msk = 0; msk < top; ++msk)
      if (msk & bit) acc[msk] += acc[msk ^ bit];
  }

  for (std::uint32_t msk = 0; msk < top; ++msk) {
    const int size = std::popcount(msk);
    const int nullity = size - ranks[msk];
    if (nullity <= level) continue;  // independent in the elongation
    const int i = nullity - level - 1;
    const int elong_rank = ranks[msk] + level;
    const long long beta = (elong_rank % 2 == 0) ? acc[msk] : -acc[msk];
    if (beta < 0) throw Error("internal: negative Betti contribution");
    if (beta != 0) table.entries[{i, size}] += beta;
  }
  return table;
}

std::vector<BettiTable> graded_betti_tables(const Matroid& m) {
  std::vector<BettiTable> out;
  out.reserve(m.corank() + 1);
  for (int level = 0; level <= m.corank(); ++level)
    out.push_back(graded_betti_table(m, level));
  return out;
}

bool betti_support_shift_check(const Matroid& m) {
  const std::vector<BettiTable> tables = graded_betti_tables(m);
  const int levels = static_cast<int>(tables.size());
  for (int l = 0; l < levels; ++l) {
    const BettiTable& cur = tables[l];
    const BettiTable* next = (l + 1 < levels) ? &tables[l + 1] : nullptr;
    for (int i = 1; i <= m.ground_size(); ++i)
      for (int j = 0; j <= m.ground_size(); ++j) {
        const bool here = cur.at(i, j) != 0;
        const bool below = next && next->at(i - 1, j) != 0;
        if (here != below) return false;
      }
  }
  return true;
}

}  // namespace wpoly
