#include "wpoly/verify.hpp"

#include <string>

#include "wpoly/betti.hpp"
#include "wpoly/errors.hpp"
#include "wpoly/field_matrix.hpp"
#include "wpoly/weight_poly.hpp"

namespace wpoly {

namespace {

CheckResult result(std::string name, bool pass, std::string detail = "") {
  CheckResult r;
  r.name = std::move(name);
  r.pass = pass;
  r.detail = std::move(detail);
  return r;
}

CheckResult skipped(std::string name, std::string why) {
  CheckResult r;
  r.name = std::move(name);
  r.pass = true;
  r.skipped = true;
  r.detail = std::move(why);
  return r;
}

std::string poly_mismatch(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b) {
  for (std::size_t j = 0; j < a.size() && j < b.size(); ++j)
    if (!(a[j] == b[j]))
      return "P_" + std::to_string(j) + ": " + a[j].str() + " vs " + b[j].str();
  return "length mismatch";
}

}  // namespace

std::vector<CheckResult> verify_matroid(const Matroid& m, int threads) {
  std::vector<CheckResult> out;
  const int n = m.ground_size();
  const int k = m.rank();

  const auto direct = gwp_direct(m, threads);
  const auto complement = gwp_complement_form(m);
  const auto tables = graded_betti_tables(m);
  const auto via_betti = gwp_from_betti(tables);
  if (direct != complement)
    out.push_back(result("gwp three-route agreement", false,
                         "complement route: " + poly_mismatch(direct, complement)));
  else if (direct != via_betti)
    out.push_back(result("gwp three-route agreement", false,
                         "Betti route: " + poly_mismatch(direct, via_betti)));
  else
    out.push_back(result("gwp three-route agreement", true));

  {
    bool ok = true;
    std::string detail;
    try {
      const TriPoly w = enumerator(m);
      const BiPoly t = tutte(m);
      if (!(w == enumerator_via_complements(m))) {
        ok = false;
        detail = "enumerator assembly disagrees with the complement form";
      } else if (!(tutte_from_enumerator(w, n, k) == t)) {
        ok = false;
        detail = "W -> t conversion disagrees with the direct Tutte sum";
      } else if (!(enumerator_from_tutte(t, n, k) == w)) {
        ok = false;
        detail = "t -> W conversion disagrees with the direct enumerator";
      }
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    out.push_back(result("tutte/enumerator round-trip", ok, detail));
  }

  out.push_back(result("betti support shift", betti_support_shift_check(m)));

  {
    bool ok = true;
    std::string detail;
    auto prev = direct;
    for (int l = 1; l <= m.corank() && ok; ++l) {
      const auto next = gwp_direct(m.elongate(l), threads);
      for (int j = 0; j <= n && ok; ++j)
        if (!(gwp_elongation_shift(prev[j]) == next[j])) {
          ok = false;
          detail = "level " + std::to_string(l) + ", P_" + std::to_string(j);
        }
      prev = next;
    }
    out.push_back(result("elongation coefficient shift", ok, detail));
  }

  {
    bool ok = true;
    std::string detail;
    try {
      const WeightHierarchy by_degree = higher_weights_from_gwp(direct);
      const WeightHierarchy by_betti = higher_weights_from_betti(tables);
      const WeightHierarchy by_nullity = higher_weights_by_nullity(m);
      if (!(by_degree == by_nullity)) {
        ok = false;
        detail = "degree route disagrees with the nullity definition";
      } else if (!(by_betti == by_nullity)) {
        ok = false;
        detail = "Betti route disagrees with the nullity definition";
      }
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    out.push_back(result("hierarchy triple agreement", ok, detail));
  }

  return out;
}

std::vector<CheckResult> verify_code(const LinearCode& code, int threads) {
  const Matroid mh = code.matroid();
  std::vector<CheckResult> out = verify_matroid(mh, threads);

  out.push_back(result("generator/parity-check matroid duality",
                       vector_matroid(code.generator()) == mh.dual()));

  const auto polys = gwp_direct(mh, threads);
  const long long q = code.field().order();
  const int k = code.dimension();
  constexpr long long kBudget = 10'000'000;

  WeightDistribution base_dist;
  bool have_base = false;
  for (int m = 1; m <= 2; ++m) {
    const std::string name = "distribution oracle m=" + std::to_string(m);
    long long words = 1;
    long long qm = 1;
    bool over = false;
    for (int i = 0; i < m; ++i) {
      if (qm > kBudget / q) over = true;
      qm *= q;
    }
    for (int i = 0; i < k && !over; ++i) {
      if (words > kBudget / qm) over = true;
      words *= qm;
    }
    if (over) {
      out.push_back(skipped(name, "q^(km) exceeds the enumeration budget"));
      continue;
    }
    try {
      const WeightDistribution dist = brute_force_distribution(code, m, kBudget);
      if (m == 1) {
        base_dist = dist;
        have_base = true;
      }
      bool ok = true;
      std::string detail;
      long long sum = 0;
      for (int j = 0; j <= code.length(); ++j) {
        sum += dist.counts[j];
        if (dist.counts[j] != polys[j].eval(qm)) {
          ok = false;
          detail = "A_" + std::to_string(j) + " = " + std::to_string(dist.counts[j]) +
                   " but P_" + std::to_string(j) + "(" + std::to_string(qm) +
                   ") = " + std::to_string(polys[j].eval(qm));
          break;
        }
      }
      if (ok && sum != words) {
        ok = false;
        detail = "counts sum to " + std::to_string(sum) + ", expected " + std::to_string(words);
      }
      out.push_back(result(name, ok, detail));
    } catch (const Error& e) {
      out.push_back(skipped(name, e.what()));
    }
  }

  if (have_base && k >= 1) {
    int min_weight = 0;
    for (int j = 1; j <= code.length(); ++j)
      if (base_dist.counts[j] > 0) {
        min_weight = j;
        break;
      }
    const WeightHierarchy h = higher_weights_by_nullity(mh);
    out.push_back(result("minimum distance equals d_1",
                         !h.d.empty() && h.d.front() == min_weight));
  } else {
    out.push_back(skipped("minimum distance equals d_1",
                          k >= 1 ? "base enumeration skipped" : "zero code"));
  }

  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace wpoly
