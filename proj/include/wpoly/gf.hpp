#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace wpoly {

// Element of a finite field in compact integer encoding: the polynomial
// a_0 + a_1 t + ... + a_{m-1} t^{m-1} over GF(p) is stored as sum a_i p^i.
using GfElem = std::uint16_t;

// GF(p^m) with p prime and p^m <= 2^16. The modulus is the lexicographically
// first monic irreducible polynomial of degree m over GF(p), comparing
// coefficient tuples low-degree-first. Immutable value type.
class FiniteField {
 public:
  static FiniteField make(int p, int m);

  int characteristic() const;
  int extension_degree() const;
  int order() const;  // p^m
  // Modulus coefficients, ascending degree, length m+1, monic.
  const std::vector<int>& modulus() const;

  GfElem zero() const { return 0; }
  GfElem one() const { return 1; }
  GfElem add(GfElem a, GfElem b) const;
  GfElem sub(GfElem a, GfElem b) const;
  GfElem neg(GfElem a) const;
  GfElem mul(GfElem a, GfElem b) const;
  GfElem inv(GfElem a) const;
  GfElem div(GfElem a, GfElem b) const;

  // Polynomial rendering, e.g. "1+2*t+t^2"; "0" for the zero element.
  std::string element_to_string(GfElem a) const;

  bool operator==(const FiniteField& other) const;
  bool operator!=(const FiniteField& other) const { return !(*this == other); }

 private:
  struct Core;
  explicit FiniteField(std::shared_ptr<const Core> core) : core_(std::move(core)) {}
  std::shared_ptr<const Core> core_;
};

}  // namespace wpoly
