#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "wpoly/subset.hpp"

namespace wpoly {

// Ground-set size cap for exhaustive 2^n operations. Defaults to 20 and can be
// overridden with the MATROID_MAX_N environment variable (clamped to [1, 26]).
int ground_set_cap();

struct RankProfile {
  int rank = 0;
  int nullity = 0;
  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

class Matroid;

// Result of restricting to a subset: the restricted matroid on relabeled
// ground set {1..|sigma|} plus the order-preserving map back to the original
// labels (labels[i] is the original label of new element i+1).
struct RestrictedMatroid;

// A matroid given by its family of bases, elements labeled 1..n.
// Immutable value type; copies share the underlying representation.
class Matroid {
 public:
  // Validates the basis-exchange axiom over all basis pairs.
  static Matroid from_bases(int n, const std::vector<Subset>& bases);
  // Skips validation; caller guarantees the family is a matroid basis family.
  static Matroid from_bases_unchecked(int n, std::vector<Subset> bases);
  static Matroid uniform(int rank, int n);

  int ground_size() const;
  int rank() const;
  int corank() const;  // n - rank
  const std::vector<Subset>& bases() const;  // sorted by mask, unique

  // Rank of a subset: size of the largest independent subset, computed as the
  // max over bases of |B & sigma|.
  int rank(Subset sigma) const;
  int nullity(Subset sigma) const;
  RankProfile rank_profile(Subset sigma) const;
  bool is_independent(Subset sigma) const;

  Matroid dual() const;
  RestrictedMatroid restrict(Subset sigma) const;
  // Elongation to rank r+i: independent sets become the subsets of nullity
  // at most i. Requires 0 <= i <= corank().
  Matroid elongate(int i) const;

  // Minimal dependent sets, sorted by cardinality then lexicographically.
  const std::vector<Subset>& circuits() const;

  // Reduced Euler characteristic of the independence complex:
  // -1 + f_1 - f_2 + ... where f_i counts independent sets of size i.
  long long euler_characteristic() const;

  // Rank of every subset, indexed by bitmask (2^n entries). Built once on
  // first use; shared by the exhaustive kernels.
  const std::vector<std::uint8_t>& rank_table() const;

  bool operator==(const Matroid& other) const;
  bool operator!=(const Matroid& other) const { return !(*this == other); }

 private:
  struct Core;
  explicit Matroid(std::shared_ptr<const Core> core) : core_(std::move(core)) {}
  std::shared_ptr<const Core> core_;
};

struct RestrictedMatroid {
  Matroid matroid;
  std::vector<int> labels;
};

}  // namespace wpoly
