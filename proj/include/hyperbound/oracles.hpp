#pragma once

// Seeded Monte-Carlo drivers for the recurrence, thin-part displacement and
// root-magnitude checks. Trial i draws from trial_rng(seed, i) only, so a
// suite's result is a pure function of its arguments.

#include "hyperbound/margulis.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hyperbound {

struct PigeonholeTrial {
  std::uint64_t index = 0;
  double D = 0;
  double a = 0;
  std::uint64_t k = 0;
  double bound = 0;
  bool ok = false;
};

struct PigeonholeSuite {
  int n = 3;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t passed = 0;
  std::uint64_t max_k = 0;
  /// Largest k / bound over the trials.
  double max_ratio = 0;
  std::vector<PigeonholeTrial> failures;
  bool ok() const { return passed == trials; }
};

/// Random rotation of the horizontal R^{n-1}, D uniform in [0, 2], a uniform
/// in (0.05, 0.95), x with ln(|x| / x_n) = D.
PigeonholeSuite run_pigeonhole_suite(int n, std::uint64_t trials, std::uint64_t seed);

struct TubeTrial {
  std::uint64_t index = 0;
  double log_R = 0;
  double tube_radius = 0;
  double axis_distance = 0;
  std::uint64_t cap = 0;
  std::uint64_t k = 0;
  double displacement = 0;
  bool ok = false;
};

struct TubeSuite {
  int n = 3;
  MargulisConstant epsilon;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Trials whose tube radius is non-positive: no point to test.
  std::uint64_t vacuous = 0;
  std::uint64_t passed = 0;
  double max_displacement = 0;
  std::uint64_t max_k = 0;
  std::vector<TubeTrial> failures;
  bool ok() const { return passed + vacuous == trials && passed > 0; }
};

/// log R uniform in [-30, -10], rotation random, x uniform in axis distance
/// below the tube radius; the displacement min_k d(x, phi^k x) is scanned up
/// to the pigeonhole cap with a = eps and must fall below 2 eps.
TubeSuite run_tube_suite(int n, std::uint64_t trials, std::uint64_t seed, const MargulisConstant& eps);

struct RootsTrial {
  std::uint64_t index = 0;
  std::vector<long long> coefficients;
  bool ok = false;
};

struct RootsSuite {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t passed = 0;
  std::uint64_t roots_checked = 0;
  /// Smallest log2 margin seen on either side.
  double min_margin_log2 = 0;
  std::vector<RootsTrial> failures;
  bool ok() const { return passed == trials; }
};

/// Degree uniform in [1, max_degree], coefficients uniform in
/// [-max_coefficient, max_coefficient] with a non-zero leading term.
RootsSuite run_roots_suite(std::uint64_t trials, std::uint64_t seed, int max_degree = 8, long long max_coefficient = 1024);

}  // namespace hyperbound
