#pragma once

// Margulis constants, the tube-radius lower bound and the systole
// certificate chains for closed and cusped manifolds.
//
// All logarithms in the formulas are natural; certificates additionally carry
// log2 of the systole lower bound.

#include "hyperbound/core.hpp"
#include "hyperbound/log_space.hpp"
#include "hyperbound/upper_half_space.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <type_traits>

namespace hyperbound {

enum class MargulisSource { Meyerhoff, Kellerhals, UserSupplied };

std::string to_string(MargulisSource source);
MargulisSource margulis_source_from_string(const std::string& name);

struct MargulisConstant {
  int n = 3;
  long double value = 0.052L;
  MargulisSource source = MargulisSource::Meyerhoff;
};

inline constexpr long double kMeyerhoffEpsilon3 = 0.052L;

/// Meyerhoff: 0.052 for n = 3. Kellerhals: (6 pi)^{-n}. UserSupplied: any
/// positive value passed in `user_value`.
MargulisConstant epsilon_lower(int n, MargulisSource source, std::optional<long double> user_value = std::nullopt);

/// Meyerhoff for n = 3, Kellerhals otherwise.
MargulisConstant default_epsilon(int n);

/// (1/n) log(1/R) + log(eps) - log(4), for 0 < R <= 2 eps. Non-positive
/// values are returned as-is; they mean the formula guarantees no tube.
template <typename Scalar>
Scalar tube_radius_lower(Scalar systole, int n, const MargulisConstant& eps) {
  using std::log;
  const Scalar e = Scalar(eps.value);
  if (!(systole > Scalar(0)) || systole > Scalar(2) * e) {
    throw DomainError("tube_radius_lower: R must lie in (0, 2 eps]");
  }
  return log(Scalar(1) / systole) / Scalar(n) + log(e) - log(Scalar(4));
}

/// Same formula from log(R), for systoles below the floating point range.
template <typename Scalar>
Scalar tube_radius_lower_from_log(Scalar log_systole, int n, const MargulisConstant& eps) {
  using std::log;
  return -log_systole / Scalar(n) + log(Scalar(eps.value)) - log(Scalar(4));
}

/// log2 of (eps/4)^n e^{-n diam}: the systole length at which the tube-radius
/// bound equals `diameter`. The thick-part floor 2 eps is combined by taking
/// the minimum (either case may occur); for eps < 1 the formula value is
/// always the smaller one.
template <typename Scalar>
Scalar systole_lower_from_diameter(Scalar diameter, int n, const MargulisConstant& eps) {
  using std::log;
  using std::log2;
  using std::min;
  if (!(diameter >= Scalar(0))) throw DomainError("systole_lower_from_diameter: diameter must be non-negative");
  const Scalar e = Scalar(eps.value);
  const Scalar tube = -Scalar(n) * (diameter + log(Scalar(4) / e)) / std::numbers::ln2_v<Scalar>;
  const Scalar thick_floor = log2(Scalar(2) * e);
  return min(tube, thick_floor);
}

enum class CertificateCase { Closed, Cusped };

struct BoundCertificate {
  static constexpr const char* kSchema = "cert-v1";

  CertificateCase certificate_case = CertificateCase::Closed;
  int n = 3;
  long long t = 1;
  MargulisConstant epsilon;
  Magnitude edge_bound_B;
  /// t * B.
  Magnitude diameter_bound;
  /// Distance that the tube must reach: diameter_bound in the closed case,
  /// tB + log(tB / eps) in the cusped case.
  Magnitude reach_bound;
  /// d0 = log(tB / eps), clamped at 0 (cusped only).
  double cusp_depth_d0 = 0.0;
  bool cusp_depth_clamped = false;
  /// Tube-radius lower bound evaluated at the certified systole length; by
  /// construction it reproduces reach_bound.
  Magnitude tube_radius_formula_value;
  /// log2 of the thick-part floor 2 eps.
  double thick_floor_log2 = 0.0;
  /// log2 of the systole lower bound; NaN when only systole_loglog is available.
  double systole_log2_lower = 0.0;
  LogLogBound systole_loglog;
  /// Built by symbolic_certificate from log2 B alone.
  bool symbolic = false;
  /// Present for symbolic certificates: the big-O constant c.
  std::optional<double> big_o_constant;
  /// Chain evaluated in ExtendedReal rather than double.
  bool extended_precision = false;
};

template <typename Scalar>
BoundCertificate certificate_from_reach(CertificateCase kind, int n, long long t, Scalar edge_bound,
                                        Scalar reach, const MargulisConstant& eps) {
  using std::log;
  using std::log2;
  BoundCertificate cert;
  cert.certificate_case = kind;
  cert.n = n;
  cert.t = t;
  cert.epsilon = eps;
  cert.edge_bound_B = Magnitude::exact(static_cast<double>(edge_bound));
  const Scalar diameter = Scalar(t) * edge_bound;
  cert.diameter_bound = Magnitude::exact(static_cast<double>(diameter));
  cert.reach_bound = Magnitude::exact(static_cast<double>(reach));
  const Scalar log2_systole = systole_lower_from_diameter<Scalar>(reach, n, eps);
  cert.systole_log2_lower = static_cast<double>(log2_systole);
  cert.thick_floor_log2 = static_cast<double>(log2(Scalar(2) * Scalar(eps.value)));
  cert.tube_radius_formula_value = Magnitude::exact(
      static_cast<double>(tube_radius_lower_from_log<Scalar>(log2_systole * std::numbers::ln2_v<Scalar>, n, eps)));
  cert.systole_loglog = {static_cast<double>(log2(-log2_systole)), -1};
  cert.extended_precision = !std::is_same_v<Scalar, double>;
  return cert;
}

/// Diameter t B, then the systole bound through the inverted tube formula.
template <typename Scalar>
BoundCertificate closed_certificate(int n, long long t, Scalar edge_bound, const MargulisConstant& eps) {
  if (n < 3) throw DomainError("closed_certificate: n must be at least 3");
  if (t < 1) throw DomainError("closed_certificate: t must be at least 1");
  if (!(edge_bound > Scalar(0))) throw DomainError("closed_certificate: B must be positive");
  return certificate_from_reach<Scalar>(CertificateCase::Closed, n, t, edge_bound, Scalar(t) * edge_bound, eps);
}

template <typename Scalar>
struct CuspedReach {
  Scalar reach;
  Scalar d0;
  bool clamped;
};

/// tB + log(tB / eps). When tB <= eps the depth d0 is clamped to 0 and
/// flagged.
template <typename Scalar>
CuspedReach<Scalar> cusped_reach_bound(int n, long long t, Scalar edge_bound, const MargulisConstant& eps) {
  using std::log;
  if (n < 3) throw DomainError("cusped_reach_bound: n must be at least 3");
  if (t < 1) throw DomainError("cusped_reach_bound: t must be at least 1");
  if (!(edge_bound > Scalar(0))) throw DomainError("cusped_reach_bound: B must be positive");
  const Scalar tb = Scalar(t) * edge_bound;
  const Scalar d0 = log(tb / Scalar(eps.value));
  if (d0 > Scalar(0)) return {tb + d0, d0, false};
  return {tb, Scalar(0), d0 < Scalar(0)};
}

template <typename Scalar>
BoundCertificate cusped_certificate(int n, long long t, Scalar edge_bound, const MargulisConstant& eps) {
  const CuspedReach<Scalar> reach = cusped_reach_bound<Scalar>(n, t, edge_bound, eps);
  BoundCertificate cert = certificate_from_reach<Scalar>(CertificateCase::Cusped, n, t, edge_bound, reach.reach, eps);
  cert.cusp_depth_d0 = static_cast<double>(reach.d0);
  cert.cusp_depth_clamped = reach.clamped;
  return cert;
}

/// The same chain with the edge bound known only through log2 B. Used for
/// the parameterized big-O bounds, where B overflows every float format.
BoundCertificate symbolic_certificate(CertificateCase kind, int n, long long t, double edge_bound_log2,
                                      const MargulisConstant& eps);

/// Recomputes a certificate from its input fields (case, n, t, B, eps) in
/// double precision. Numeric certificates go through closed_certificate /
/// cusped_certificate, symbolic ones through symbolic_certificate.
BoundCertificate rederive_certificate(const BoundCertificate& cert);

nlohmann::ordered_json to_json(const BoundCertificate& cert);
BoundCertificate certificate_from_json(const nlohmann::json& j);

template <typename Scalar>
struct DisplacementResult {
  Scalar min_displacement;
  std::uint64_t argmin_k = 0;
  /// Number of powers examined.
  std::uint64_t steps = 0;
};

/// min_{1 <= k <= kmax} d(x, phi^k x). With `stop_below`, the scan ends at the
/// first k whose displacement is below it.
template <typename Scalar>
DisplacementResult<Scalar> min_displacement_oracle(const LoxodromicNormalForm<Scalar>& phi, const UhsPoint<Scalar>& x,
                                                   std::uint64_t kmax,
                                                   std::optional<Scalar> stop_below = std::nullopt) {
  using std::asinh;
  using std::exp;
  using std::sqrt;
  if (kmax < 1) throw DomainError("min_displacement_oracle: kmax must be at least 1");
  if (x.dimension() != phi.dimension()) throw DimensionError("min_displacement_oracle: dimension mismatch");
  const Vector<Scalar> start = x.horizontal();
  const Scalar h = x.height();
  Vector<Scalar> rotated = start;
  Vector<Scalar> next(start.size());
  DisplacementResult<Scalar> result{std::numeric_limits<Scalar>::infinity(), 0, 0};
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    next.noalias() = phi.rotation() * rotated;
    rotated.swap(next);
    const Scalar scale = exp(Scalar(k) * phi.translation());
    // d(x, A^k e^{kR} x) with the chord assembled directly.
    const Scalar chord2 = (rotated * scale - start).squaredNorm() + (h * scale - h) * (h * scale - h);
    const Scalar d = Scalar(2) * asinh(sqrt(chord2) / (Scalar(2) * h * sqrt(scale)));
    ++result.steps;
    if (d < result.min_displacement) {
      result.min_displacement = d;
      result.argmin_k = k;
    }
    if (stop_below && result.min_displacement < *stop_below) break;
  }
  return result;
}

}  // namespace hyperbound
