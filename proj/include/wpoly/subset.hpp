#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "wpoly/errors.hpp"

namespace wpoly {

// Subset of a ground set {1,...,n}, stored as a bitmask. Element i is bit i-1.
// n is capped well below 32, so a 32-bit mask always suffices.
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset of_mask(std::uint32_t bits) { return Subset(bits); }

  // Builds from 1-based element labels; every label must lie in [1, n].
  static Subset of_elements(const std::vector<int>& labels, int n) {
    std::uint32_t bits = 0;
    for (int e : labels) {
      if (e < 1 || e > n)
        throw ElementOutOfRange("element " + std::to_string(e) +
                                " outside ground set of size " + std::to_string(n));
      bits |= std::uint32_t{1} << (e - 1);
    }
    return Subset(bits);
  }

  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t mask() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int label) const {
    return label >= 1 && label < 32 && (bits_ >> (label - 1)) & 1u;
  }
  constexpr bool subset_of(Subset t) const { return (bits_ & ~t.bits_) == 0; }
  constexpr Subset complement_in(int n) const {
    return Subset(full(n).bits_ & ~bits_);
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(Subset a, Subset b) { return a.bits_ != b.bits_; }
  // Ordering by mask value; used for canonical storage, not display.
  friend constexpr bool operator<(Subset a, Subset b) { return a.bits_ < b.bits_; }

 private:
  explicit constexpr Subset(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

}  // namespace wpoly
