#include "wpoly/poly.hpp"

#include <cstdlib>
#include <utility>

namespace wpoly {
namespace {

void append_power(std::string& out, std::string_view var, int deg) {
  if (deg == 0) return;
  out += var;
  if (deg > 1) out += "^" + std::to_string(deg);
}

// Shared renderer: terms arrive in display order as (monomial, coefficient)
// with nonzero coefficients; monomial is empty for the constant term.
std::string format_terms(const std::vector<std::pair<std::string, long long>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    const long long mag = std::llabs(c);
    if (mag != 1 || mono.empty()) out += std::to_string(mag);
    out += mono;
  }
  return out;
}

}  // namespace

UniPoly UniPoly::constant(long long c) {
  UniPoly p;
  p.add_term(0, c);
  return p;
}

UniPoly UniPoly::monomial(long long c, int degree) {
  UniPoly p;
  p.add_term(degree, c);
  return p;
}

UniPoly UniPoly::from_coeffs(std::vector<long long> ascending) {
  UniPoly p;
  p.coeffs_ = std::move(ascending);
  p.normalize();
  return p;
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

long long UniPoly::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[degree];
}

void UniPoly::add_term(int degree, long long c) {
  if (c == 0) return;
  if (degree >= static_cast<int>(coeffs_.size())) coeffs_.resize(degree + 1, 0);
  coeffs_[degree] += c;
  normalize();
}

long long UniPoly::eval(long long z) const {
  long long acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
  UniPoly out = *this;
  if (out.coeffs_.size() < other.coeffs_.size()) out.coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  out.normalize();
  return out;
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
  UniPoly out = *this;
  if (out.coeffs_.size() < other.coeffs_.size()) out.coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out.coeffs_[i] -= other.coeffs_[i];
  out.normalize();
  return out;
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
  if (is_zero() || other.is_zero()) return UniPoly();
  std::vector<long long> prod(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      prod[i + j] += coeffs_[i] * other.coeffs_[j];
  return from_coeffs(std::move(prod));
}

std::string UniPoly::str(std::string_view var) const {
  std::vector<std::pair<std::string, long long>> terms;
  for (int d = static_cast<int>(coeffs_.size()) - 1; d >= 0; --d) {
    if (coeffs_[d] == 0) continue;
    std::string mono;
    append_power(mono, var, d);
    terms.emplace_back(std::move(mono), coeffs_[d]);
  }
  return format_terms(terms);
}

void BiPoly::add_term(int dx, int dy, long long c) {
  if (c == 0) return;
  const std::array<int, 2> key{dx, dy};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

long long BiPoly::coeff(int dx, int dy) const {
  const auto it = terms_.find({dx, dy});
  return it == terms_.end() ? 0 : it->second;
}

int BiPoly::max_degree(int axis) const {
  int best = 0;
  for (const auto& [key, c] : terms_) best = std::max(best, key[axis]);
  return best;
}

long long BiPoly::eval(long long x, long long y) const {
  long long acc = 0;
  for (const auto& [key, c] : terms_) {
    long long term = c;
    for (int i = 0; i < key[0]; ++i) term *= x;
    for (int i = 0; i < key[1]; ++i) term *= y;
    acc += term;
  }
  return acc;
}

BiPoly BiPoly::swapped_vars() const {
  BiPoly out;
  for (const auto& [key, c] : terms_) out.add_term(key[1], key[0], c);
  return out;
}

std::string BiPoly::str(std::string_view vx, std::string_view vy) const {
  std::vector<std::pair<std::string, long long>> terms;
  for (const auto& [key, c] : terms_) {
    std::string mono;
    append_power(mono, vx, key[0]);
    append_power(mono, vy, key[1]);
    terms.emplace_back(std::move(mono), c);
  }
  return format_terms(terms);
}

void TriPoly::add_term(int dx, int dy, int dz, long long c) {
  if (c == 0) return;
  const std::array<int, 3> key{dx, dy, dz};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

long long TriPoly::coeff(int dx, int dy, int dz) const {
  const auto it = terms_.find({dx, dy, dz});
  return it == terms_.end() ? 0 : it->second;
}

std::string TriPoly::str(std::string_view vx, std::string_view vy,
                         std::string_view vz) const {
  std::vector<std::pair<std::string, long long>> terms;
  for (const auto& [key, c] : terms_) {
    std::string mono;
    append_power(mono, vx, key[0]);
    append_power(mono, vy, key[1]);
    append_power(mono, vz, key[2]);
    terms.emplace_back(std::move(mono), c);
  }
  return format_terms(terms);
}

}  // namespace wpoly
