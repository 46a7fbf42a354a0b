#include "wpoly/matroid.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "wpoly/errors.hpp"

namespace wpoly {
namespace {

std::string subset_str(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

// Display order: smaller sets first, then lexicographic on element lists.
bool display_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::uint32_t x = a.mask(), y = b.mask();
  while (x && y) {
    const int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

}  // namespace

int ground_set_cap() {
  static const int cap = [] {
    int v = 20;
    if (const char* s = std::getenv("MATROID_MAX_N")) {
      const int parsed = std::atoi(s);
      if (parsed >= 1) v = std::min(parsed, 26);
    }
    return v;
  }();
  return cap;
}

struct Matroid::Core {
  int n = 0;
  int rank = 0;
  std::vector<Subset> bases;  // sorted by mask, unique

  mutable std::once_flag ranks_once;
  mutable std::vector<std::uint8_t> ranks;
  mutable std::once_flag circuits_once;
  mutable std::vector<Subset> circuits;
};

Matroid Matroid::from_bases_unchecked(int n, std::vector<Subset> bases) {
  if (n < 1) throw Error("ground set must have at least one element");
  if (n > ground_set_cap())
    throw GroundSetCapExceeded("n=" + std::to_string(n) + " exceeds cap " +
                               std::to_string(ground_set_cap()) +
                               " (set MATROID_MAX_N to raise)");
  if (bases.empty()) throw EmptyBasisFamily("matroid needs at least one basis");
  for (Subset b : bases)
    if (b.mask() >> n)
      throw ElementOutOfRange("basis " + subset_str(b) +
                              " outside ground set of size " + std::to_string(n));
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int r = bases.front().size();
  for (Subset b : bases)
    if (b.size() != r)
      throw UnequalBasisCardinality("bases " + subset_str(bases.front()) + " and " +
                                    subset_str(b) + " have different sizes");
  auto core = std::make_shared<Core>();
  core->n = n;
  core->rank = r;
  core->bases = std::move(bases);
  return Matroid(std::move(core));
}

Matroid Matroid::from_bases(int n, const std::vector<Subset>& bases) {
  Matroid m = from_bases_unchecked(n, bases);
  std::unordered_set<std::uint32_t> in_family;
  in_family.reserve(m.core_->bases.size() * 2);
  for (Subset b : m.core_->bases) in_family.insert(b.mask());
  // Basis exchange: for every pair (B1, B2) and x in B1\B2 there must be
  // some y in B2\B1 with (B1 \ x) + y again a basis.
  for (Subset b1 : m.core_->bases) {
    for (Subset b2 : m.core_->bases) {
      if (b1 == b2) continue;
      for (std::uint32_t xs = b1.mask() & ~b2.mask(); xs; xs &= xs - 1) {
        const std::uint32_t xbit = xs & (~xs + 1);
        bool found = false;
        for (std::uint32_t ys = b2.mask() & ~b1.mask(); ys; ys &= ys - 1) {
          const std::uint32_t ybit = ys & (~ys + 1);
          if (in_family.count((b1.mask() ^ xbit) | ybit)) {
            found = true;
            break;
          }
        }
        if (!found)
          throw ExchangeAxiomViolation(
              "no exchange for element " +
              std::to_string(std::countr_zero(xbit) + 1) + " of basis " +
              subset_str(b1) + " against basis " + subset_str(b2));
      }
    }
  }
  return m;
}

Matroid Matroid::uniform(int rank, int n) {
  if (n < 1) throw Error("ground set must have at least one element");
  if (rank < 0 || rank > n) throw Error("uniform matroid needs 0 <= rank <= n");
  if (n > ground_set_cap())
    throw GroundSetCapExceeded("n=" + std::to_string(n) + " exceeds cap " +
                               std::to_string(ground_set_cap()));
  std::vector<Subset> bases;
  const std::uint32_t top = std::uint32_t{1} << n;
  for (std::uint32_t m = 0; m < top; ++m)
    if (std::popcount(m) == rank) bases.push_back(Subset::of_mask(m));
  return from_bases_unchecked(n, std::move(bases));
}

int Matroid::ground_size() const { return core_->n; }
int Matroid::rank() const { return core_->rank; }
int Matroid::corank() const { return core_->n - core_->rank; }
const std::vector<Subset>& Matroid::bases() const { return core_->bases; }

int Matroid::rank(Subset sigma) const {
  if (sigma.mask() >> core_->n)
    throw ElementOutOfRange("subset " + subset_str(sigma) +
                            " outside ground set of size " + std::to_string(core_->n));
  int best = 0;
  const int limit = std::min(core_->rank, sigma.size());
  for (Subset b : core_->bases) {
    const int hit = std::popcount(b.mask() & sigma.mask());
    if (hit > best) best = hit;
    if (best == limit) break;
  }
  return best;
}

int Matroid::nullity(Subset sigma) const { return sigma.size() - rank(sigma); }

RankProfile Matroid::rank_profile(Subset sigma) const {
  const int r = rank(sigma);
  return RankProfile{r, sigma.size() - r};
}

bool Matroid::is_independent(Subset sigma) const {
  return rank(sigma) == sigma.size();
}

Matroid Matroid::dual() const {
  std::vector<Subset> cobases;
  cobases.reserve(core_->bases.size());
  for (Subset b : core_->bases) cobases.push_back(b.complement_in(core_->n));
  return from_bases_unchecked(core_->n, std::move(cobases));
}

RestrictedMatroid Matroid::restrict(Subset sigma) const {
  if (sigma.mask() >> core_->n)
    throw ElementOutOfRange("subset " + subset_str(sigma) +
                            " outside ground set of size " + std::to_string(core_->n));
  if (sigma.empty()) throw Error("cannot restrict to the empty set");
  const std::vector<int> labels = sigma.elements();
  const int r = rank(sigma);
  // Compress positions: old element labels[i] becomes new element i+1.
  std::vector<int> pos(core_->n + 1, -1);
  for (std::size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = static_cast<int>(i);
  std::vector<Subset> bases;
  const std::uint32_t sm = sigma.mask();
  std::uint32_t sub = sm;
  while (true) {  // iterates all submasks of sm, including 0
    if (std::popcount(sub) == r && is_independent(Subset::of_mask(sub))) {
      std::uint32_t packed = 0;
      for (std::uint32_t b = sub; b; b &= b - 1)
        packed |= std::uint32_t{1} << pos[std::countr_zero(b) + 1];
      bases.push_back(Subset::of_mask(packed));
    }
    if (sub == 0) break;
    sub = (sub - 1) & sm;
  }
  return RestrictedMatroid{
      from_bases_unchecked(static_cast<int>(labels.size()), std::move(bases)), labels};
}

Matroid Matroid::elongate(int i) const {
  if (i < 0 || i > corank())
    throw Error("elongation level " + std::to_string(i) + " outside [0, " +
                std::to_string(corank()) + "]");
  if (i == 0) return *this;
  // Bases of the elongation to rank r+i are the (r+i)-subsets of full rank,
  // i.e. those containing a basis.
  const auto& ranks = rank_table();
  const int target = core_->rank + i;
  std::vector<Subset> bases;
  const std::uint32_t top = std::uint32_t{1} << core_->n;
  for (std::uint32_t m = 0; m < top; ++m)
    if (std::popcount(m) == target && ranks[m] == core_->rank)
      bases.push_back(Subset::of_mask(m));
  return from_bases_unchecked(core_->n, std::move(bases));
}

const std::vector<std::uint8_t>& Matroid::rank_table() const {
  std::call_once(core_->ranks_once, [this] {
    const int n = core_->n;
    const std::uint32_t top = std::uint32_t{1} << n;
    std::vector<std::uint8_t> indep(top, 0);
    for (Subset b : core_->bases) indep[b.mask()] = 1;
    // Subsets of bases are independent: sweep masks downward and clear bits.
    for (std::uint32_t m = top; m-- > 0;) {
      if (!indep[m]) continue;
      for (std::uint32_t b = m; b; b &= b - 1) indep[m ^ (b & (~b + 1))] = 1;
    }
    std::vector<std::uint8_t> ranks(top, 0);
    for (std::uint32_t m = 1; m < top; ++m) {
      if (indep[m]) {
        ranks[m] = static_cast<std::uint8_t>(std::popcount(m));
        continue;
      }
      // A dependent set has the same rank as some one-element deletion.
      std::uint8_t best = 0;
      for (std::uint32_t b = m; b; b &= b - 1) {
        const std::uint8_t r = ranks[m ^ (b & (~b + 1))];
        if (r > best) best = r;
      }
      ranks[m] = best;
    }
    core_->ranks = std::move(ranks);
  });
  return core_->ranks;
}

const std::vector<Subset>& Matroid::circuits() const {
  std::call_once(core_->circuits_once, [this] {
    const auto& ranks = rank_table();
    std::vector<Subset> circuits;
    const std::uint32_t top = std::uint32_t{1} << core_->n;
    for (std::uint32_t m = 1; m < top; ++m) {
      const int size = std::popcount(m);
      if (ranks[m] == size) continue;  // independent
      bool minimal = true;
      for (std::uint32_t b = m; b && minimal; b &= b - 1) {
        const std::uint32_t sub = m ^ (b & (~b + 1));
        if (ranks[sub] != std::popcount(sub)) minimal = false;
      }
      if (minimal) circuits.push_back(Subset::of_mask(m));
    }
    std::sort(circuits.begin(), circuits.end(), display_less);
    core_->circuits = std::move(circuits);
  });
  return core_->circuits;
}

long long Matroid::euler_characteristic() const {
  const auto& ranks = rank_table();
  const std::uint32_t top = std::uint32_t{1} << core_->n;
  long long chi = 0;
  for (std::uint32_t m = 0; m < top; ++m) {
    const int size = std::popcount(m);
    if (ranks[m] == size) chi += (size & 1) ? 1 : -1;
  }
  return chi;
}

bool Matroid::operator==(const Matroid& other) const {
  return core_->n == other.core_->n && core_->bases == other.core_->bases;
}

}  // namespace wpoly
