#pragma once

// Log-space arithmetic for the solution-size bounds of real algebraic
// systems, the composed symbolic systole bound, and an exact root-magnitude
// oracle for integer univariate polynomials.
//
// Big-O constants are unknown; every bound here is parameterised by a
// user-supplied constant c (default 1) and says so in its output.

#include "hyperbound/log_space.hpp"
#include "hyperbound/margulis.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace hyperbound {

inline constexpr const char* kBigOProvenance = "parameterized bound, c user-supplied, default 1";

/// l(p/q) = log2(|pq| + 2).
double rational_length(std::int64_t p, std::int64_t q);

/// log2 of M (kappa d)^{cN}, in any floating type.
template <typename Scalar>
Scalar length_bound_log2(Scalar N, Scalar kappa, Scalar d, Scalar M, Scalar c) {
  using std::log2;
  return log2(M) + c * N * log2(kappa * d);
}

struct AlgebraicSolutionProfile {
  /// log2 of the bound (kappa d)^{cN} on deg(Phi).
  double phi_degree_log2 = 0;
  /// log2 L with L = M (kappa d)^{cN}, the bound on l(Phi), l(alpha), l(beta).
  double length_bound_log2 = 0;
  /// Same with kappa + 2N in place of kappa (coordinates of solutions).
  double variable_length_bound_log2 = 0;
  /// |theta| <= 2^L and |theta| >= 2^{-L}.
  LogLogBound theta_upper;
  LogLogBound theta_lower;
  /// |alpha_i| <= 2^L and |alpha_i| >= 2^{-L'}, L' using kappa + 2N.
  LogLogBound alpha_upper;
  LogLogBound alpha_lower;
  double c = 1;
  std::string provenance = kBigOProvenance;
};

/// N, kappa, d >= 1, M > 0, c >= 0.
AlgebraicSolutionProfile solution_size_bounds(long long N, long long kappa, long long d, double M, double c = 1.0);

struct SymbolicSystoleBound {
  /// log2 B with B = (nt)^{c n^4 t}.
  double edge_bound_log2 = 0;
  /// log2(-log2 R) <= level2.
  LogLogBound systole;
  BoundCertificate certificate;
  double c = 1;
  std::string provenance = kBigOProvenance;
};

/// Edge bound (nt)^{c n^4 t} pushed through the closed (or cusped) systole chain.
SymbolicSystoleBound systole_symbolic_bound(int n, long long t, double c = 1.0,
                                            CertificateCase kind = CertificateCase::Closed,
                                            std::optional<MargulisConstant> eps = std::nullopt);

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct RootCheck {
  /// Isolating interval (lo, hi] and its midpoint.
  double lo = 0;
  double hi = 0;
  double approx = 0;
  bool within_upper = false;
  bool within_lower = false;
  /// log2(U / |theta|) and log2(|theta| U); both >= 0 when the root passes.
  double margin_upper_log2 = 0;
  double margin_lower_log2 = 0;
};

struct RootOracleReport {
  int degree = 0;
  /// Largest coefficient length l(Phi).
  double length = 0;
  /// U = deg 2^l = deg (max|c| + 2), exact.
  BigInt bound;
  /// Multiplicity of 0 as a root (excluded from the checks).
  int zero_multiplicity = 0;
  /// Distinct non-zero real roots, ascending.
  std::vector<RootCheck> roots;
  bool ok = true;
};

/// Exact Sturm-sequence isolation of the real roots of sum c_i x^i
/// (coefficients ascending), then the checks 1/U <= |theta| <= U decided
/// exactly. Degree at most 64.
RootOracleReport root_magnitude_oracle(const std::vector<BigInt>& coefficients);

/// Number of distinct real roots of a square-free-or-not polynomial in (a, b].
int count_real_roots(const std::vector<Rational>& coefficients, const Rational& a, const Rational& b);

}  // namespace hyperbound
