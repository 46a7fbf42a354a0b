#include "wpoly/gf.hpp"

#include <algorithm>

#include "wpoly/errors.hpp"

namespace wpoly {
namespace {

constexpr int kMaxOrder = 1 << 16;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> decode(GfElem a, int p, int m) {
  std::vector<int> digits(m, 0);
  int v = a;
  for (int i = 0; i < m && v; ++i) {
    digits[i] = v % p;
    v /= p;
  }
  return digits;
}

GfElem encode(const std::vector<int>& digits, int p, int m) {
  long long v = 0;
  for (int i = m - 1; i >= 0; --i) v = v * p + digits[i];
  return static_cast<GfElem>(v);
}

int mod_p(long long v, int p) { return static_cast<int>(((v % p) + p) % p); }

// Remainder of a (coefficients mod p, ascending) divided by the monic
// modulus of degree m.
void reduce(std::vector<int>& a, const std::vector<int>& mod, int p) {
  const int m = static_cast<int>(mod.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= m; --d) {
    const long long c = a[d];
    if (c == 0) continue;
    a[d] = 0;
    for (int i = 0; i < m; ++i)
      a[d - m + i] = mod_p(a[d - m + i] - c * mod[i], p);
  }
  a.resize(m);
}

GfElem raw_mul(GfElem a, GfElem b, const std::vector<int>& mod, int p, int m) {
  const std::vector<int> da = decode(a, p, m), db = decode(b, p, m);
  std::vector<int> prod(2 * m - 1, 0);
  for (int i = 0; i < m; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < m; ++j)
      prod[i + j] = mod_p(prod[i + j] + static_cast<long long>(da[i]) * db[j], p);
  }
  reduce(prod, mod, p);
  return encode(prod, p, m);
}

// True when monic polynomial b divides monic polynomial a over GF(p).
bool divides(const std::vector<int>& b, std::vector<int> a, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
    const long long c = a[d];
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i)
      a[d - db + i] = mod_p(a[d - db + i] - c * b[i], p);
  }
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

bool is_irreducible(const std::vector<int>& f, int p) {
  const int m = static_cast<int>(f.size()) - 1;
  if (m == 1) return true;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (int d = 1; 2 * d <= m; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<int> g(d + 1, 0);
      long long v = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

// Lexicographically first monic irreducible of degree m, comparing the
// coefficient tuple (a_0, ..., a_{m-1}) left to right.
std::vector<int> first_irreducible(int p, int m) {
  long long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<int> f(m + 1, 0);
    f[m] = 1;
    long long v = idx;
    for (int i = m - 1; i >= 0; --i) {  // a_0 is the most significant digit
      f[i] = static_cast<int>(v % p);
      v /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

struct FiniteField::Core {
  int p = 0;
  int m = 0;
  int q = 0;
  std::vector<int> mod;     // ascending, monic, length m+1
  std::vector<GfElem> exp;  // exp[i] = g^i for 0 <= i < q-1
  std::vector<int> log;     // log[exp[i]] = i; log[0] unused
};

FiniteField FiniteField::make(int p, int m) {
  if (!is_prime(p))
    throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw Error("extension degree must be at least 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw FieldTooLarge("field order " + std::to_string(p) + "^" + std::to_string(m) +
                          " exceeds 2^16");
  }
  auto core = std::make_shared<Core>();
  core->p = p;
  core->m = m;
  core->q = static_cast<int>(q);
  core->mod = first_irreducible(p, m);

  // Multiplication through discrete logs: find a generator of the unit group
  // by direct order computation, then tabulate its powers.
  const int units = core->q - 1;
  core->exp.assign(units, 0);
  core->log.assign(core->q, 0);
  for (int g = 1; g < core->q; ++g) {
    GfElem e = 1;
    int order = 0;
    std::vector<GfElem> powers;
    powers.reserve(units);
    do {
      powers.push_back(e);
      e = raw_mul(e, static_cast<GfElem>(g), core->mod, p, m);
      ++order;
    } while (e != 1 && order < units);
    if (e == 1 && order == units) {
      for (int i = 0; i < units; ++i) {
        core->exp[i] = powers[i];
        core->log[powers[i]] = i;
      }
      return FiniteField(std::move(core));
    }
  }
  throw Error("no generator found");  // unreachable: unit groups are cyclic
}

int FiniteField::characteristic() const { return core_->p; }
int FiniteField::extension_degree() const { return core_->m; }
int FiniteField::order() const { return core_->q; }
const std::vector<int>& FiniteField::modulus() const { return core_->mod; }

GfElem FiniteField::add(GfElem a, GfElem b) const {
  const int p = core_->p;
  if (p == 2) return a ^ b;
  int va = a, vb = b, out = 0, scale = 1;
  while (va || vb) {
    out += scale * ((va % p + vb % p) % p);
    va /= p;
    vb /= p;
    scale *= p;
  }
  return static_cast<GfElem>(out);
}

GfElem FiniteField::neg(GfElem a) const {
  const int p = core_->p;
  if (p == 2) return a;
  int va = a, out = 0, scale = 1;
  while (va) {
    out += scale * ((p - va % p) % p);
    va /= p;
    scale *= p;
  }
  return static_cast<GfElem>(out);
}

GfElem FiniteField::sub(GfElem a, GfElem b) const { return add(a, neg(b)); }

GfElem FiniteField::mul(GfElem a, GfElem b) const {
  if (a == 0 || b == 0) return 0;
  const int units = core_->q - 1;
  return core_->exp[(core_->log[a] + core_->log[b]) % units];
}

GfElem FiniteField::inv(GfElem a) const {
  if (a == 0) throw Error("inverse of zero");
  const int units = core_->q - 1;
  return core_->exp[(units - core_->log[a]) % units];
}

GfElem FiniteField::div(GfElem a, GfElem b) const { return mul(a, inv(b)); }

std::string FiniteField::element_to_string(GfElem a) const {
  if (a == 0) return "0";
  const std::vector<int> digits = decode(a, core_->p, core_->m);
  std::string out;
  for (int i = 0; i < core_->m; ++i) {
    if (digits[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(digits[i]);
    } else {
      if (digits[i] != 1) out += std::to_string(digits[i]) + "*";
      out += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

bool FiniteField::operator==(const FiniteField& other) const {
  return core_ == other.core_ ||
         (core_->p == other.core_->p && core_->m == other.core_->m);
}

}  // namespace wpoly
