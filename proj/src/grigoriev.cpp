#include "hyperbound/grigoriev.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hyperbound {

double rational_length(std::int64_t p, std::int64_t q) {
  if (q == 0) throw DomainError("rational_length: q must be non-zero");
  const long double pq = std::fabs(static_cast<long double>(p)) * std::fabs(static_cast<long double>(q));
  return static_cast<double>(std::log2(pq + 2.0L));
}

AlgebraicSolutionProfile solution_size_bounds(long long N, long long kappa, long long d, double M, double c) {
  if (N < 1 || kappa < 1 || d < 1) throw DomainError("solution_size_bounds: N, kappa and d must be positive");
  if (!(M > 0.0)) throw DomainError("solution_size_bounds: M must be positive");
  if (!(c >= 0.0)) throw DomainError("solution_size_bounds: c must be non-negative");
  const auto n = static_cast<double>(N);
  const auto k = static_cast<double>(kappa);
  const auto dd = static_cast<double>(d);
  AlgebraicSolutionProfile out;
  out.c = c;
  out.phi_degree_log2 = c * n * std::log2(k * dd);
  out.length_bound_log2 = length_bound_log2<double>(n, k, dd, M, c);
  out.variable_length_bound_log2 = length_bound_log2<double>(n, k + 2.0 * n, dd, M, c);
  out.theta_upper = {out.length_bound_log2, 1};
  out.theta_lower = {out.length_bound_log2, -1};
  out.alpha_upper = {out.length_bound_log2, 1};
  out.alpha_lower = {out.variable_length_bound_log2, -1};
  return out;
}

SymbolicSystoleBound systole_symbolic_bound(int n, long long t, double c, CertificateCase kind,
                                            std::optional<MargulisConstant> eps) {
  if (n < 3) throw DomainError("systole_symbolic_bound: n must be at least 3");
  if (t < 1) throw DomainError("systole_symbolic_bound: t must be at least 1");
  if (!(c >= 0.0)) throw DomainError("systole_symbolic_bound: c must be non-negative");
  SymbolicSystoleBound out;
  out.c = c;
  const double nt = static_cast<double>(n) * static_cast<double>(t);
  const double n4 = std::pow(static_cast<double>(n), 4);
  out.edge_bound_log2 = c * n4 * static_cast<double>(t) * std::log2(nt);
  out.certificate = symbolic_certificate(kind, n, t, out.edge_bound_log2, eps ? *eps : default_epsilon(n));
  out.certificate.big_o_constant = c;
  out.systole = out.certificate.systole_loglog;
  return out;
}

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<int>(i));
  trim(out);
  return out;
}

/// Quotient and remainder of a / b, b non-zero.
std::pair<Poly, Poly> divide(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

Poly square_free(const Poly& p) {
  const Poly g = gcd(p, derivative(p));
  if (g.size() <= 1) return p;
  return divide(p, g).first;
}

Rational evaluate(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

class Sturm {
 public:
  /// `p` must be square-free and non-constant.
  explicit Sturm(const Poly& p) {
    chain_.push_back(p);
    chain_.push_back(derivative(p));
    while (chain_.back().size() > 1) {
      Poly r = divide(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.empty()) break;
      for (auto& x : r) x = -x;
      chain_.push_back(std::move(r));
    }
  }

  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const Poly& q : chain_) {
      const int s = sign(evaluate(q, x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
  const Poly& polynomial() const { return chain_.front(); }

 private:
  std::vector<Poly> chain_;
};

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

int count_real_roots(const std::vector<Rational>& coefficients, const Rational& a, const Rational& b) {
  Poly p = coefficients;
  trim(p);
  if (p.empty()) throw DomainError("count_real_roots: zero polynomial");
  if (p.size() == 1 || !(a < b)) return 0;
  return Sturm(square_free(p)).count(a, b);
}

RootOracleReport root_magnitude_oracle(const std::vector<BigInt>& coefficients) {
  Poly p;
  for (const BigInt& c : coefficients) p.emplace_back(c);
  trim(p);
  if (p.empty()) throw DomainError("root_magnitude_oracle: zero polynomial");
  if (p.size() > 65) throw DomainError("root_magnitude_oracle: degree above 64");
  RootOracleReport report;
  report.degree = static_cast<int>(p.size()) - 1;
  BigInt max_abs = 0;
  for (std::size_t i = 0; i < p.size(); ++i) max_abs = std::max(max_abs, BigInt(abs(coefficients[i])));
  report.length = std::log2(max_abs.convert_to<double>() + 2.0);
  report.bound = BigInt(report.degree) * (max_abs + 2);
  if (report.degree == 0) return report;

  std::size_t shift = 0;
  while (p[shift] == 0) ++shift;
  report.zero_multiplicity = static_cast<int>(shift);
  const Poly reduced(p.begin() + static_cast<std::ptrdiff_t>(shift), p.end());
  if (reduced.size() <= 1) return report;
  const Sturm sturm(square_free(reduced));
  const Poly& sf = sturm.polynomial();

  // Cauchy bound for the search interval, independent of the bound under test.
  Rational cauchy = 0;
  for (std::size_t i = 0; i + 1 < sf.size(); ++i) cauchy = std::max(cauchy, Rational(abs(sf[i] / sf.back())));
  const Rational u(report.bound);
  const Rational reach = std::max(Rational(cauchy + 1), u) + 1;

  std::vector<std::pair<Rational, Rational>> isolated;
  std::vector<std::pair<Rational, Rational>> pending{{-reach, reach}};
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    const int k = sturm.count(a, b);
    if (k == 0) continue;
    if (k == 1) {
      isolated.emplace_back(a, b);
      continue;
    }
    const Rational m = (a + b) / 2;
    pending.emplace_back(a, m);
    pending.emplace_back(m, b);
  }
  std::sort(isolated.begin(), isolated.end());

  for (const auto& interval : isolated) {
    Rational a = interval.first;
    Rational b = interval.second;
    for (int step = 0; step < 64; ++step) {
      const Rational m = (a + b) / 2;
      if (sturm.count(a, m) == 1) b = m;
      else a = m;
    }
    // theta is the unique root in (a, b]
    const auto le = [&](const Rational& c) { return c >= b || (c > a && sturm.count(a, c) == 1); };
    const auto lt = [&](const Rational& c) { return c > b || (c > a && sturm.count(a, c) == 1 && evaluate(sf, c) != 0); };
    RootCheck check;
    check.lo = to_double(a);
    check.hi = to_double(b);
    check.approx = to_double((a + b) / 2);
    const bool positive = !le(Rational(0));
    if (positive) {
      check.within_upper = le(u);
      check.within_lower = !lt(1 / u);
    } else {
      check.within_upper = !lt(-u);
      check.within_lower = le(-1 / u);
    }
    const double log2u = std::log2(to_double(u));
    check.margin_upper_log2 = log2u - std::log2(std::fabs(check.approx));
    check.margin_lower_log2 = std::log2(std::fabs(check.approx)) + log2u;
    report.ok = report.ok && check.within_upper && check.within_lower;
    report.roots.push_back(check);
  }
  return report;
}

}  // namespace hyperbound
