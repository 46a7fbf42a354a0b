#include "wpoly/weight_poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "wpoly/errors.hpp"
#include "wpoly/parallel.hpp"

namespace wpoly {

namespace {

using boost::multiprecision::cpp_int;

std::vector<std::vector<long long>> binomial_table(int n) {
  std::vector<std::vector<long long>> c(n + 1, std::vector<long long>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

// hist[g][u] = number of subsets with cardinality g and nullity u.
std::vector<std::vector<long long>> nullity_histogram(const Matroid& m, int threads) {
  const int n = m.ground_size();
  const auto& ranks = m.rank_table();
  const std::uint32_t top = std::uint32_t{1} << n;
  const int t = std::max(1, threads);

  std::vector<std::vector<std::vector<long long>>> local(
      t, std::vector<std::vector<long long>>(n + 1, std::vector<long long>(n + 1, 0)));
  parallel_blocks(top, t, [&](int block, std::uint32_t begin, std::uint32_t end) {
    auto& h = local[block];
    for (std::uint32_t msk = begin; msk < end; ++msk) {
      const int g = std::popcount(msk);
      h[g][g - ranks[msk]] += 1;
    }
  });

  std::vector<std::vector<long long>> hist(n + 1, std::vector<long long>(n + 1, 0));
  for (const auto& h : local)
    for (int g = 0; g <= n; ++g)
      for (int u = 0; u <= n; ++u) hist[g][u] += h[g][u];
  return hist;
}

std::vector<UniPoly> gwp_from_histogram(const std::vector<std::vector<long long>>& hist, int n) {
  const auto binom = binomial_table(n);
  std::vector<UniPoly> out(n + 1);
  for (int j = 0; j <= n; ++j) {
    std::vector<long long> coef(n + 1, 0);
    for (int g = 0; g <= j; ++g) {
      const long long mult = binom[n - g][j - g];
      for (int u = 0; u <= g; ++u) {
        if (hist[g][u] == 0) continue;
        const long long term = mult * hist[g][u];
        coef[u] += ((j + g) % 2 == 0) ? term : -term;
      }
    }
    out[j] = UniPoly::from_coeffs(coef);
  }
  return out;
}

// Exact interpolation through values at consecutive integer nodes
// x0, x0+1, ..., x0+d; returns ascending coefficients. Forward differences of
// an integer polynomial stay integral, so any inexact factorial division
// means the values did not come from a polynomial of degree <= d.
std::vector<cpp_int> interpolate_consecutive(long long x0, std::vector<cpp_int> v) {
  const int d = static_cast<int>(v.size()) - 1;
  for (int step = 1; step <= d; ++step)
    for (int j = d; j >= step; --j) v[j] -= v[j - 1];

  cpp_int fact = 1;
  for (int k = 0; k <= d; ++k) {
    if (k >= 2) fact *= k;
    cpp_int q, r;
    divide_qr(v[k], fact, q, r);
    if (r != 0) throw InterpolationInconsistency("non-integral Newton coefficient");
    v[k] = q;
  }

  std::vector<cpp_int> out(d + 1, 0);
  std::vector<cpp_int> basis{1};
  for (int k = 0; k <= d; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) out[i] += v[k] * basis[i];
    if (k == d) break;
    std::vector<cpp_int> next(basis.size() + 1, 0);
    const long long node = x0 + k;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= node * basis[i];
    }
    basis = std::move(next);
  }
  return out;
}

long long to_long_checked(const cpp_int& v) {
  static const cpp_int lo = std::numeric_limits<long long>::min();
  static const cpp_int hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi)
    throw InterpolationInconsistency("interpolated coefficient overflows 64 bits");
  return static_cast<long long>(v);
}

cpp_int pow_ll(long long base, int e) {
  cpp_int out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// W(x, 1, (x-1)(y-1)) / (x-1)^(n-k), exact division enforced.
cpp_int tutte_value_from_enumerator(const TriPoly& w, int n, int k, long long x, long long y) {
  const cpp_int z = cpp_int(x - 1) * (y - 1);
  cpp_int num = 0;
  for (const auto& [key, c] : w.terms())
    num += c * pow_ll(x, key[0]) * pow(z, key[2]);
  cpp_int q, r;
  divide_qr(num, pow_ll(x - 1, n - k), q, r);
  if (r != 0)
    throw InterpolationInconsistency("enumerator is not divisible by (X-1)^(n-k) under the substitution");
  return q;
}

// W(x, 1, z) = (x-1)^(n-k) t(x, (x+z-1)/(x-1)), cleared of denominators:
// sum over Tutte terms of t_uv x^u (x+z-1)^v (x-1)^(n-k-v).
cpp_int dehomog_value_from_tutte(const BiPoly& t, int n, int k, long long x, long long z) {
  cpp_int out = 0;
  for (const auto& [key, c] : t.terms())
    out += c * pow_ll(x, key[0]) * pow_ll(x + z - 1, key[1]) * pow_ll(x - 1, n - k - key[1]);
  return out;
}

void require_params(int n, int k, const char* what) {
  if (n < 1 || k < 0 || k > n)
    throw InterpolationInconsistency(std::string(what) + ": parameters out of range");
}

}  // namespace

std::vector<UniPoly> gwp_direct(const Matroid& m, int threads) {
  return gwp_from_histogram(nullity_histogram(m, threads), m.ground_size());
}

std::vector<UniPoly> gwp_naive(const Matroid& m) {
  const int n = m.ground_size();
  if (n > 16) throw GroundSetCapExceeded("literal subset-of-subset sweep is capped at n = 16");
  const auto& ranks = m.rank_table();
  const std::uint32_t top = std::uint32_t{1} << n;

  std::vector<std::vector<long long>> acc(n + 1, std::vector<long long>(n + 1, 0));
  for (std::uint32_t sigma = 0; sigma < top; ++sigma) {
    auto& row = acc[std::popcount(sigma)];
    std::uint32_t sub = sigma;
    while (true) {
      const int g = std::popcount(sub);
      row[g - ranks[sub]] += (g % 2 == 0) ? 1 : -1;
      if (sub == 0) break;
      sub = (sub - 1) & sigma;
    }
  }

  std::vector<UniPoly> out(n + 1);
  for (int j = 0; j <= n; ++j) {
    std::vector<long long> coef = acc[j];
    if (j % 2 != 0)
      for (auto& c : coef) c = -c;
    out[j] = UniPoly::from_coeffs(coef);
  }
  return out;
}

std::vector<UniPoly> gwp_complement_form(const Matroid& m) {
  const int n = m.ground_size();
  const std::uint32_t top = std::uint32_t{1} << n;
  const std::uint32_t full = top - 1;

  // zsum[j] = sum over |gamma| = j of Z^{nullity(E minus gamma)}.
  std::vector<std::vector<long long>> zsum(n + 1, std::vector<long long>(n + 1, 0));
  for (std::uint32_t msk = 0; msk < top; ++msk) {
    const Subset complement = Subset::of_mask(full & ~msk);
    zsum[std::popcount(msk)][m.nullity(complement)] += 1;
  }

  const auto binom = binomial_table(n);
  std::vector<UniPoly> out(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<long long> coef(n + 1, 0);
    for (int j = n - i; j <= n; ++j) {
      const long long mult = binom[j][n - i];
      const bool positive = (i + j + n) % 2 == 0;
      for (int u = 0; u <= n; ++u) {
        if (zsum[j][u] == 0) continue;
        const long long term = mult * zsum[j][u];
        coef[u] += positive ? term : -term;
      }
    }
    out[i] = UniPoly::from_coeffs(coef);
  }
  return out;
}

std::vector<UniPoly> gwp_from_betti(const std::vector<BettiTable>& tables) {
  if (tables.empty()) throw Error("gwp_from_betti: no tables");
  const int n = tables.front().n;
  for (std::size_t l = 0; l < tables.size(); ++l) {
    if (tables[l].n != n) throw Error("gwp_from_betti: tables disagree on ground size");
    if (tables[l].level != static_cast<int>(l))
      throw Error("gwp_from_betti: expected consecutive levels from 0");
  }

  auto at = [&](int level, int i, int j) -> long long {
    if (level < 0 || level >= static_cast<int>(tables.size())) return 0;
    return tables[level].at(i, j);
  };

  std::vector<UniPoly> out(n + 1);
  out[0] = UniPoly::constant(1);
  for (int j = 1; j <= n; ++j) {
    UniPoly p;
    for (int l = 0; l <= static_cast<int>(tables.size()); ++l) {
      long long c = 0;
      for (int i = 0; i <= n; ++i) {
        const long long diff = at(l - 1, i, j) - at(l, i, j);
        c += (i % 2 == 0) ? diff : -diff;
      }
      p.add_term(l, c);
    }
    out[j] = std::move(p);
  }
  return out;
}

TriPoly enumerator(const Matroid& m) {
  const int n = m.ground_size();
  const auto gwps = gwp_direct(m);
  TriPoly w;
  for (int j = 0; j <= n; ++j)
    for (int u = 0; u <= n; ++u) w.add_term(n - j, j, u, gwps[j].coeff(u));
  return w;
}

TriPoly enumerator_via_complements(const Matroid& m) {
  const int n = m.ground_size();
  const std::uint32_t top = std::uint32_t{1} << n;
  const std::uint32_t full = top - 1;
  const auto& ranks = m.rank_table();

  std::vector<std::vector<long long>> zsum(n + 1, std::vector<long long>(n + 1, 0));
  for (std::uint32_t msk = 0; msk < top; ++msk) {
    const std::uint32_t comp = full & ~msk;
    const int cs = std::popcount(comp);
    zsum[std::popcount(msk)][cs - ranks[comp]] += 1;
  }

  const auto binom = binomial_table(n);
  TriPoly w;
  for (int j = 0; j <= n; ++j)
    for (int u = 0; u <= n; ++u) {
      if (zsum[j][u] == 0) continue;
      // (X - Y)^j Y^(n-j) Z^u times the count.
      for (int a = 0; a <= j; ++a) {
        const long long c = binom[j][a] * zsum[j][u];
        w.add_term(j - a, n - j + a, u, (a % 2 == 0) ? c : -c);
      }
    }
  return w;
}

BiPoly tutte(const Matroid& m) {
  const int n = m.ground_size();
  const int r = m.rank();
  const auto& ranks = m.rank_table();
  const std::uint32_t top = std::uint32_t{1} << n;

  // hist[c][u] = number of subsets with corank c and nullity u.
  std::vector<std::vector<long long>> hist(n + 1, std::vector<long long>(n + 1, 0));
  for (std::uint32_t msk = 0; msk < top; ++msk) {
    const int g = std::popcount(msk);
    hist[r - ranks[msk]][g - ranks[msk]] += 1;
  }

  const auto binom = binomial_table(n);
  BiPoly t;
  for (int c = 0; c <= n; ++c)
    for (int u = 0; u <= n; ++u) {
      if (hist[c][u] == 0) continue;
      for (int a = 0; a <= c; ++a)
        for (int b = 0; b <= u; ++b) {
          const long long term = binom[c][a] * binom[u][b] * hist[c][u];
          t.add_term(a, b, ((c - a + u - b) % 2 == 0) ? term : -term);
        }
    }
  return t;
}

BiPoly tutte_from_enumerator(const TriPoly& w, int n, int k) {
  require_params(n, k, "tutte_from_enumerator");
  if (w.is_zero()) throw InterpolationInconsistency("zero enumerator");
  for (const auto& [key, c] : w.terms()) {
    if (key[0] + key[1] != n)
      throw InterpolationInconsistency("enumerator is not homogeneous of degree n in X, Y");
    if (key[2] > n - k)
      throw InterpolationInconsistency("enumerator Z-degree exceeds n - k");
  }

  // Degrees of t are at most k in X and n - k in Y.
  const long long x0 = 2;
  const long long y0 = n + 4;
  std::vector<std::vector<cpp_int>> rows(k + 1);
  for (int i = 0; i <= k; ++i) {
    std::vector<cpp_int> vals(n - k + 1);
    for (int j = 0; j <= n - k; ++j)
      vals[j] = tutte_value_from_enumerator(w, n, k, x0 + i, y0 + j);
    rows[i] = interpolate_consecutive(y0, std::move(vals));
  }

  BiPoly t;
  for (int yd = 0; yd <= n - k; ++yd) {
    std::vector<cpp_int> col(k + 1);
    for (int i = 0; i <= k; ++i) col[i] = rows[i][yd];
    const auto xcoef = interpolate_consecutive(x0, std::move(col));
    for (int xd = 0; xd <= k; ++xd) t.add_term(xd, yd, to_long_checked(xcoef[xd]));
  }

  for (int s = 0; s < 3; ++s) {
    const long long x = n + 5 + s;
    const long long y = 2 * n + 7 + s;
    cpp_int rhs = 0;
    for (const auto& [key, c] : t.terms())
      rhs += c * pow_ll(x, key[0]) * pow_ll(y, key[1]);
    if (tutte_value_from_enumerator(w, n, k, x, y) != rhs)
      throw InterpolationInconsistency("off-grid check failed after interpolation");
  }
  return t;
}

TriPoly enumerator_from_tutte(const BiPoly& t, int n, int k) {
  require_params(n, k, "enumerator_from_tutte");
  if (t.is_zero()) throw InterpolationInconsistency("zero Tutte polynomial");
  for (const auto& [key, c] : t.terms())
    if (key[0] > k || key[1] > n - k)
      throw InterpolationInconsistency("Tutte degrees exceed (k, n - k)");

  const long long x0 = 2;
  const long long z0 = 2;
  std::vector<std::vector<cpp_int>> rows(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<cpp_int> vals(n - k + 1);
    for (int j = 0; j <= n - k; ++j)
      vals[j] = dehomog_value_from_tutte(t, n, k, x0 + i, z0 + j);
    rows[i] = interpolate_consecutive(z0, std::move(vals));
  }

  TriPoly w;
  std::vector<std::vector<long long>> coef(n + 1, std::vector<long long>(n - k + 1, 0));
  for (int zd = 0; zd <= n - k; ++zd) {
    std::vector<cpp_int> col(n + 1);
    for (int i = 0; i <= n; ++i) col[i] = rows[i][zd];
    const auto xcoef = interpolate_consecutive(x0, std::move(col));
    for (int xd = 0; xd <= n; ++xd) {
      coef[xd][zd] = to_long_checked(xcoef[xd]);
      w.add_term(xd, n - xd, zd, coef[xd][zd]);
    }
  }

  for (int s = 0; s < 3; ++s) {
    const long long x = n + 5 + s;
    const long long z = n - k + 5 + s;
    cpp_int rhs = 0;
    for (int xd = 0; xd <= n; ++xd)
      for (int zd = 0; zd <= n - k; ++zd)
        if (coef[xd][zd] != 0) rhs += cpp_int(coef[xd][zd]) * pow_ll(x, xd) * pow_ll(z, zd);
    if (dehomog_value_from_tutte(t, n, k, x, z) != rhs)
      throw InterpolationInconsistency("off-grid check failed after interpolation");
  }
  return w;
}

UniPoly gwp_elongation_shift(const UniPoly& p) {
  const auto deg = p.degree();
  UniPoly out;
  if (!deg) return out;
  out.add_term(0, p.coeff(0) + p.coeff(1));
  for (int u = 2; u <= *deg; ++u) out.add_term(u - 1, p.coeff(u));
  return out;
}

WeightHierarchy higher_weights_from_gwp(const std::vector<UniPoly>& gwps) {
  int top = 0;
  for (const auto& p : gwps)
    if (const auto d = p.degree()) top = std::max(top, *d);

  WeightHierarchy h;
  h.d.assign(top, 0);
  std::vector<bool> seen(top + 1, false);
  for (int j = 0; j < static_cast<int>(gwps.size()); ++j) {
    const auto d = gwps[j].degree();
    if (!d || *d == 0 || seen[*d]) continue;
    seen[*d] = true;
    h.d[*d - 1] = j;
  }
  for (int i = 1; i <= top; ++i)
    if (!seen[i]) throw MissingDegree("no weight polynomial of degree " + std::to_string(i));
  return h;
}

WeightHierarchy higher_weights_from_betti(const std::vector<BettiTable>& tables) {
  // d_i is read from level i - 1; the last level (full corank) sits past the
  // end of the hierarchy, so levels 0..size-2 contribute.
  WeightHierarchy h;
  for (std::size_t l = 0; l + 1 < tables.size(); ++l) {
    const auto& tbl = tables[l];
    int best = -1;
    for (const auto& [key, val] : tbl.entries)
      if (key.first == 0 && val != 0 && (best < 0 || key.second < best)) best = key.second;
    if (best < 0)
      throw MissingEntry("level " + std::to_string(tbl.level) + " has no entry in row i = 0");
    h.d.push_back(best);
  }
  return h;
}

WeightHierarchy higher_weights_by_nullity(const Matroid& m) {
  const int n = m.ground_size();
  const auto& ranks = m.rank_table();
  const std::uint32_t top = std::uint32_t{1} << n;

  std::vector<int> best(m.corank() + 1, n + 1);
  for (std::uint32_t msk = 0; msk < top; ++msk) {
    const int g = std::popcount(msk);
    const int u = g - ranks[msk];
    if (g < best[u]) best[u] = g;
  }

  WeightHierarchy h;
  for (int i = 1; i <= m.corank(); ++i) h.d.push_back(best[i]);
  return h;
}

}  // namespace wpoly
