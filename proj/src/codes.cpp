#include "wpoly/codes.hpp"

#include <algorithm>
#include <string>

#include "wpoly/errors.hpp"
#include "wpoly/weight_poly.hpp"

namespace wpoly {

namespace {

// rref with zero rows removed: a canonical basis of the row space.
FieldMatrix row_basis(const FieldMatrix& a) {
  const FieldMatrix r = rref(a);
  int kept = 0;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) {
        kept = i + 1;
        break;
      }
  FieldMatrix out(a.field(), kept, a.cols());
  for (int i = 0; i < kept; ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = r.at(i, j);
  return out;
}

Subset kept_positions(int n, const Subset& removed) {
  if (removed.mask() >> n)
    throw ElementOutOfRange("position outside the code length");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const std::uint32_t keep = full & ~removed.mask();
  if (keep == 0) throw Error("cannot remove every coordinate");
  return Subset::of_mask(keep);
}

}  // namespace

LinearCode::LinearCode(FieldMatrix g, FieldMatrix h)
    : gen_(std::move(g)), pcheck_(std::move(h)) {}

LinearCode LinearCode::from_generator(const FieldMatrix& g) {
  if (g.cols() < 1) throw Error("a code needs at least one coordinate");
  if (rank_of(g) != g.rows())
    throw RankDeficientMatrix("generator matrix does not have full row rank");
  return LinearCode(g, kernel_basis(g));
}

LinearCode LinearCode::from_parity_check(const FieldMatrix& h) {
  if (h.cols() < 1) throw Error("a code needs at least one coordinate");
  if (rank_of(h) != h.rows())
    throw RankDeficientMatrix("parity check matrix does not have full row rank");
  return LinearCode(kernel_basis(h), h);
}

Matroid LinearCode::matroid() const { return vector_matroid(pcheck_); }

LinearCode LinearCode::punctured(const Subset& positions) const {
  const FieldMatrix g = row_basis(gen_.restrict_columns(kept_positions(length(), positions)));
  return LinearCode(g, kernel_basis(g));
}

LinearCode LinearCode::shortened(const Subset& positions) const {
  const FieldMatrix h = row_basis(pcheck_.restrict_columns(kept_positions(length(), positions)));
  return LinearCode(kernel_basis(h), h);
}

bool LinearCode::operator==(const LinearCode& other) const {
  return field() == other.field() && length() == other.length() &&
         dimension() == other.dimension() && rref(gen_) == rref(other.gen_);
}

WeightDistribution brute_force_distribution(const LinearCode& code, int m, long long budget) {
  if (m < 1) throw Error("extension exponent must be positive");
  const FiniteField& base = code.field();
  if (m > 1 && base.extension_degree() != 1)
    throw Error("scalar extension is only wired for prime base fields");
  const FiniteField ext = m == 1 ? base : FiniteField::make(base.characteristic(), m);

  const int n = code.length();
  const int k = code.dimension();
  const long long q = ext.order();
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > budget / q)
      throw EnumerationBudgetExceeded("q^(km) exceeds the enumeration budget of " +
                                      std::to_string(budget));
    total *= q;
  }

  // Base-field entries are constant polynomials, so their compact encodings
  // carry over unchanged.
  const FieldMatrix& g = code.generator();

  WeightDistribution dist;
  dist.m = m;
  dist.counts.assign(n + 1, 0);

  std::vector<GfElem> word(n, 0);
  std::vector<GfElem> digits(k, 0);
  while (true) {
    int weight = 0;
    for (int j = 0; j < n; ++j)
      if (word[j] != 0) ++weight;
    dist.counts[weight] += 1;

    int t = 0;
    for (; t < k; ++t) {
      const GfElem old = digits[t];
      const GfElem next = (old + 1 == q) ? GfElem{0} : static_cast<GfElem>(old + 1);
      const GfElem delta = ext.sub(next, old);
      digits[t] = next;
      for (int j = 0; j < n; ++j)
        word[j] = ext.add(word[j], ext.mul(delta, g.at(t, j)));
      if (next != 0) break;
    }
    if (t == k) break;
  }
  return dist;
}

std::vector<UniPoly> extended_weight_polynomials(const LinearCode& code) {
  return gwp_direct(code.matroid());
}

}  // namespace wpoly
