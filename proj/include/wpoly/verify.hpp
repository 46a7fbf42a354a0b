#pragma once

#include <string>
#include <vector>

#include "wpoly/codes.hpp"
#include "wpoly/matroid.hpp"

namespace wpoly {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;  // skipped checks report pass = true
  std::string detail;
};

// Cross-route consistency checks on one matroid: three-route GWP agreement,
// enumerator assembly plus Tutte round-trips, Betti support shift, elongation
// coefficient shift, hierarchy triple agreement.
std::vector<CheckResult> verify_matroid(const Matroid& m, int threads = 1);

// The matroid checks on M(H), then code-level checks: generator/parity-check
// matroid duality, brute-force distribution against the weight polynomials at
// m = 1, 2 (skipped when the enumeration budget or field cap is exceeded),
// and minimum distance against d_1.
std::vector<CheckResult> verify_code(const LinearCode& code, int threads = 1);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace wpoly
