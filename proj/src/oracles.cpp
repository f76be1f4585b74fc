#include "hyperbound/oracles.hpp"

#include "hyperbound/grigoriev.hpp"
#include "hyperbound/random.hpp"
#include "hyperbound/upper_half_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace hyperbound {

namespace {

/// Point at height h whose horizontal part is a random direction of length r.
UhsPoint<double> point_with_horizontal_norm(Rng& rng, int n, double h, double r) {
  std::normal_distribution<double> gauss;
  Vector<double> dir(n - 1);
  do {
    for (int i = 0; i < n - 1; ++i) dir(i) = gauss(rng);
  } while (dir.norm() < 1e-12);
  Vector<double> c(n);
  c.head(n - 1) = dir.normalized() * r;
  c(n - 1) = h;
  return UhsPoint<double>(std::move(c));
}

}  // namespace

PigeonholeSuite run_pigeonhole_suite(int n, std::uint64_t trials, std::uint64_t seed) {
  if (n < 3) throw DomainError("run_pigeonhole_suite: n must be at least 3");
  PigeonholeSuite suite;
  suite.n = n;
  suite.trials = trials;
  suite.seed = seed;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng = trial_rng(seed, i);
    const Matrix<double> rotation = random_rotation<double>(rng, n - 1);
    PigeonholeTrial t;
    t.index = i;
    t.D = uniform(rng, 0.0, 2.0);
    t.a = uniform(rng, 0.05, 0.95);
    const double h = uniform(rng, 0.5, 2.0);
    // |x| / h = e^D  =>  |pi(x)| = h sqrt(e^{2D} - 1)
    const UhsPoint<double> x = point_with_horizontal_norm(rng, n, h, h * std::sqrt(std::expm1(2.0 * t.D)));
    t.bound = pigeonhole_k_bound(t.D, t.a, n);
    try {
      t.k = find_recurrent_power(rotation, x, t.a).k;
      t.ok = static_cast<double>(t.k) <= t.bound;
    } catch (const RecurrenceNotFound&) {
      t.ok = false;
    }
    if (t.ok) {
      ++suite.passed;
      suite.max_k = std::max(suite.max_k, t.k);
      suite.max_ratio = std::max(suite.max_ratio, static_cast<double>(t.k) / t.bound);
    } else {
      suite.failures.push_back(t);
    }
  }
  return suite;
}

TubeSuite run_tube_suite(int n, std::uint64_t trials, std::uint64_t seed, const MargulisConstant& eps) {
  if (n < 3) throw DomainError("run_tube_suite: n must be at least 3");
  if (!(eps.value > 0 && eps.value < 1)) throw DomainError("run_tube_suite: eps must lie in (0, 1)");
  TubeSuite suite;
  suite.n = n;
  suite.epsilon = eps;
  suite.trials = trials;
  suite.seed = seed;
  const double e = static_cast<double>(eps.value);
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng = trial_rng(seed, i);
    TubeTrial t;
    t.index = i;
    t.log_R = uniform(rng, -30.0, -10.0);
    const Matrix<double> rotation = random_rotation<double>(rng, n - 1);
    t.tube_radius = tube_radius_lower_from_log(t.log_R, n, eps);
    if (!(t.tube_radius > 0) || t.log_R > std::log(2.0 * e)) {
      ++suite.vacuous;
      continue;
    }
    t.axis_distance = uniform(rng, 0.0, t.tube_radius);
    const double h = uniform(rng, 0.5, 2.0);
    const UhsPoint<double> x = point_with_horizontal_norm(rng, n, h, h * std::sinh(t.axis_distance));
    const LoxodromicNormalForm<double> phi(std::exp(t.log_R), rotation);
    t.cap = search_cap(pigeonhole_k_bound(t.axis_distance, e, n));
    const auto r = min_displacement_oracle(phi, x, t.cap, std::optional<double>(2.0 * e));
    t.k = r.argmin_k;
    t.displacement = r.min_displacement;
    t.ok = t.displacement < 2.0 * e;
    if (t.ok) {
      ++suite.passed;
      suite.max_displacement = std::max(suite.max_displacement, t.displacement);
      suite.max_k = std::max(suite.max_k, t.k);
    } else {
      suite.failures.push_back(t);
    }
  }
  return suite;
}

RootsSuite run_roots_suite(std::uint64_t trials, std::uint64_t seed, int max_degree, long long max_coefficient) {
  if (max_degree < 1 || max_degree > 64) throw DomainError("run_roots_suite: degree must lie in [1, 64]");
  if (max_coefficient < 1) throw DomainError("run_roots_suite: coefficient bound must be positive");
  RootsSuite suite;
  suite.trials = trials;
  suite.seed = seed;
  suite.min_margin_log2 = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng = trial_rng(seed, i);
    std::uniform_int_distribution<int> degree(1, max_degree);
    std::uniform_int_distribution<long long> coeff(-max_coefficient, max_coefficient);
    RootsTrial t;
    t.index = i;
    t.coefficients.resize(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& c : t.coefficients) c = coeff(rng);
    while (t.coefficients.back() == 0) t.coefficients.back() = coeff(rng);
    std::vector<BigInt> big(t.coefficients.begin(), t.coefficients.end());
    const RootOracleReport report = root_magnitude_oracle(big);
    t.ok = report.ok;
    for (const RootCheck& r : report.roots) {
      suite.min_margin_log2 = std::min({suite.min_margin_log2, r.margin_upper_log2, r.margin_lower_log2});
    }
    suite.roots_checked += report.roots.size();
    if (t.ok) ++suite.passed;
    else suite.failures.push_back(t);
  }
  return suite;
}

}  // namespace hyperbound
