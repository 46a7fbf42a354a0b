#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wpoly {

// Univariate polynomial with exact int64 coefficients, stored ascending by
// degree with no trailing zeros. The zero polynomial has no coefficients and
// its degree is the empty optional.
class UniPoly {
 public:
  UniPoly() = default;
  static UniPoly constant(long long c);
  static UniPoly monomial(long long c, int degree);
  static UniPoly from_coeffs(std::vector<long long> ascending);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  long long coeff(int degree) const;
  const std::vector<long long>& coeffs() const { return coeffs_; }

  void add_term(int degree, long long c);
  long long eval(long long z) const;

  UniPoly operator+(const UniPoly& other) const;
  UniPoly operator-(const UniPoly& other) const;
  UniPoly operator*(const UniPoly& other) const;
  bool operator==(const UniPoly& other) const = default;

  // Rendering in descending powers with explicit signs, e.g. "15Z^2 - 43Z + 28".
  std::string str(std::string_view var = "Z") const;

 private:
  void normalize();
  std::vector<long long> coeffs_;
};

namespace detail {
// Orders exponent tuples descending lexicographically, which is also the
// display order of terms.
template <std::size_t K>
struct LexDesc {
  bool operator()(const std::array<int, K>& a, const std::array<int, K>& b) const {
    return a > b;
  }
};
}  // namespace detail

// Bivariate polynomial with exact int64 coefficients, sparse storage.
class BiPoly {
 public:
  using Terms = std::map<std::array<int, 2>, long long, detail::LexDesc<2>>;

  void add_term(int dx, int dy, long long c);
  long long coeff(int dx, int dy) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_degree(int axis) const;

  long long eval(long long x, long long y) const;
  BiPoly swapped_vars() const;

  bool operator==(const BiPoly& other) const = default;
  std::string str(std::string_view vx = "X", std::string_view vy = "Y") const;

 private:
  Terms terms_;
};

// Trivariate polynomial with exact int64 coefficients, sparse storage.
class TriPoly {
 public:
  using Terms = std::map<std::array<int, 3>, long long, detail::LexDesc<3>>;

  void add_term(int dx, int dy, int dz, long long c);
  long long coeff(int dx, int dy, int dz) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const TriPoly& other) const = default;
  std::string str(std::string_view vx = "X", std::string_view vy = "Y",
                  std::string_view vz = "Z") const;

 private:
  Terms terms_;
};

}  // namespace wpoly
