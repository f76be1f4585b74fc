#include "hyperbound/margulis.hpp"
#include "hyperbound/oracles.hpp"
#include "hyperbound/random.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hyperbound;

TEST_CASE("margulis constants") {
  CHECK(epsilon_lower(3, MargulisSource::Meyerhoff).value == 0.052L);
  // mpmath: (6 pi)^-3, (6 pi)^-4
  CHECK(static_cast<double>(epsilon_lower(3, MargulisSource::Kellerhals).value) ==
        doctest::Approx(1.4931265941296059808e-4).epsilon(1e-14));
  CHECK(static_cast<double>(epsilon_lower(4, MargulisSource::Kellerhals).value) ==
        doctest::Approx(7.9212826039230981398e-6).epsilon(1e-14));
  CHECK_THROWS_AS(epsilon_lower(4, MargulisSource::Meyerhoff), DomainError);
  CHECK_THROWS_AS(epsilon_lower(3, MargulisSource::UserSupplied), DomainError);
  CHECK_THROWS_AS(epsilon_lower(3, MargulisSource::UserSupplied, -1.0L), DomainError);
  CHECK(epsilon_lower(5, MargulisSource::UserSupplied, 0.01L).value == 0.01L);
  CHECK(default_epsilon(3).source == MargulisSource::Meyerhoff);
  CHECK(default_epsilon(4).source == MargulisSource::Kellerhals);
  CHECK(margulis_source_from_string(to_string(MargulisSource::Kellerhals)) == MargulisSource::Kellerhals);
}

TEST_CASE("kellerhals constants decrease geometrically") {
  CHECK(epsilon_lower(3, MargulisSource::Kellerhals).value < epsilon_lower(3, MargulisSource::Meyerhoff).value);
  for (int n = 3; n < 10; ++n) {
    const long double ratio = epsilon_lower(n + 1, MargulisSource::Kellerhals).value /
                              epsilon_lower(n, MargulisSource::Kellerhals).value;
    CHECK(static_cast<double>(ratio) == doctest::Approx(1.0 / (6.0 * std::numbers::pi)).epsilon(1e-13));
  }
}

TEST_CASE("tube radius formula") {
  const MargulisConstant eps = epsilon_lower(3, MargulisSource::Meyerhoff);
  // mpmath values
  CHECK(tube_radius_lower(std::exp(-20.0), 3, eps) == doctest::Approx(2.3238607451460663507).epsilon(1e-14));
  CHECK(tube_radius_lower(0.1, 3, eps) == doctest::Approx(-3.5752775571892517547).epsilon(1e-14));
  const long double zero = std::pow(0.052L / 4, 3);
  CHECK(std::abs(static_cast<double>(tube_radius_lower<long double>(zero, 3, eps))) <= 1e-12);
  CHECK_THROWS_AS(tube_radius_lower(0.0, 3, eps), DomainError);
  CHECK_THROWS_AS(tube_radius_lower(0.2, 3, eps), DomainError);
  CHECK(tube_radius_lower_from_log(-20.0, 3, eps) == doctest::Approx(tube_radius_lower(std::exp(-20.0), 3, eps)));
}

TEST_CASE("tube radius is decreasing in R and increasing in eps") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = trial_rng(31, i);
    const int n = 3 + static_cast<int>(i % 3);
    const double e = uniform(rng, 0.01, 0.5);
    const MargulisConstant eps = epsilon_lower(n, MargulisSource::UserSupplied, e);
    const MargulisConstant bigger = epsilon_lower(n, MargulisSource::UserSupplied, e * 1.01);
    const double r = std::exp(uniform(rng, -40.0, std::log(e)));
    CHECK(tube_radius_lower(r * 1.01, n, eps) < tube_radius_lower(r, n, eps));
    CHECK(tube_radius_lower(r, n, bigger) > tube_radius_lower(r, n, eps));
  }
}

TEST_CASE("systole bound from diameter") {
  const MargulisConstant eps = epsilon_lower(3, MargulisSource::Meyerhoff);
  // mpmath: -3 (10 + ln(4 / 0.052)) / ln 2
  CHECK(systole_lower_from_diameter(10.0, 3, eps) == doctest::Approx(-62.07688492623188687).epsilon(1e-14));
  // diam = 0: (eps/4)^n
  CHECK(systole_lower_from_diameter(0.0, 3, eps) == doctest::Approx(3 * std::log2(0.052 / 4)).epsilon(1e-14));
  double last = 0;
  for (int k = 0; k < 50; ++k) {
    const double v = systole_lower_from_diameter(0.5 * k, 3, eps);
    if (k > 0) CHECK(v < last);
    last = v;
  }
  CHECK_THROWS_AS(systole_lower_from_diameter(-1.0, 3, eps), DomainError);
  // The bound inverts the tube formula.
  const double log2r = systole_lower_from_diameter(7.0, 4, eps);
  CHECK(tube_radius_lower_from_log(log2r * std::numbers::ln2, 4, eps) == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("closed certificate") {
  const MargulisConstant eps = epsilon_lower(3, MargulisSource::Meyerhoff);
  const BoundCertificate cert = closed_certificate(3, 5, 2.0, eps);
  CHECK(cert.diameter_bound.value == 10.0);
  CHECK(std::abs(cert.systole_log2_lower - -62.07688492623188687) <= 1e-6);
  CHECK(cert.tube_radius_formula_value.value == doctest::Approx(10.0).epsilon(1e-12));
  CHECK_THROWS_AS(closed_certificate(3, 5, 0.0, eps), DomainError);
  CHECK_THROWS_AS(closed_certificate(2, 5, 1.0, eps), DomainError);
  CHECK_THROWS_AS(closed_certificate(3, 0, 1.0, eps), DomainError);
  // B -> 0+: the (eps/4)^n scale
  CHECK(closed_certificate(3, 1, 1e-300, eps).systole_log2_lower ==
        doctest::Approx(3 * std::log2(0.052 / 4)).epsilon(1e-12));
}

TEST_CASE("extended precision certificate matches double") {
  const MargulisConstant eps = epsilon_lower(3, MargulisSource::Meyerhoff);
  const BoundCertificate d = closed_certificate<double>(3, 5, 2.0, eps);
  const BoundCertificate x = closed_certificate<long double>(3, 5, 2.0L, eps);
  CHECK(x.extended_precision);
  CHECK(x.systole_log2_lower == doctest::Approx(d.systole_log2_lower).epsilon(1e-14));
}

TEST_CASE("cusped reach and certificate") {
  const MargulisConstant eps = epsilon_lower(3, MargulisSource::Meyerhoff);
  // mpmath: 10 + ln(10 / 0.052)
  CHECK(cusped_reach_bound(3, 5, 2.0, eps).reach == doctest::Approx(15.259096653394755381).epsilon(1e-14));
  const auto edge = cusped_reach_bound(3, 1, 0.052, eps);
  CHECK(edge.reach == doctest::Approx(0.052));
  CHECK(edge.d0 == 0.0);
  const auto clamped = cusped_reach_bound(3, 1, 0.01, eps);
  CHECK(clamped.clamped);
  CHECK(clamped.reach == 0.01);
  for (long long t = 1; t < 10; ++t) {
    for (double b : {0.5, 1.0, 2.0, 4.0}) {
      const double r = cusped_reach_bound(3, t, b, eps).reach;
      CHECK(cusped_reach_bound(3, t + 1, b, eps).reach > r);
      CHECK(cusped_reach_bound(3, t, b * 1.5, eps).reach > r);
    }
  }
  const BoundCertificate cert = cusped_certificate(3, 5, 2.0, eps);
  CHECK(cert.certificate_case == CertificateCase::Cusped);
  CHECK(cert.systole_log2_lower == doctest::Approx(systole_lower_from_diameter(15.259096653394755381, 3, eps)));
}

TEST_CASE("certificate round trip") {
  const MargulisConstant eps = epsilon_lower(3, MargulisSource::Meyerhoff);
  for (const BoundCertificate& cert :
       {closed_certificate(3, 5, 2.0, eps), cusped_certificate(4, 7, 3.5, epsilon_lower(4, MargulisSource::Kellerhals)),
        closed_certificate<long double>(5, 2, 1.25L, epsilon_lower(5, MargulisSource::UserSupplied, 0.003L)),
        symbolic_certificate(CertificateCase::Closed, 3, 4, 5000.0, eps)}) {
    const std::string text = to_json(cert).dump();
    const BoundCertificate parsed = certificate_from_json(nlohmann::json::parse(text));
    CHECK(to_json(parsed).dump() == text);
    const BoundCertificate again = rederive_certificate(parsed);
    // bit-for-bit: compare the raw doubles
    CHECK(std::memcmp(&again.systole_log2_lower, &cert.systole_log2_lower, sizeof(double)) == 0);
    CHECK(again.systole_loglog.level2 == cert.systole_loglog.level2);
  }
}

TEST_CASE("symbolic certificate agrees with the numeric chain where both exist") {
  const MargulisConstant eps = epsilon_lower(3, MargulisSource::Meyerhoff);
  const BoundCertificate numeric = closed_certificate(3, 5, 2.0, eps);
  const BoundCertificate symbolic = symbolic_certificate(CertificateCase::Closed, 3, 5, 1.0, eps);
  CHECK(symbolic.systole_log2_lower == doctest::Approx(numeric.systole_log2_lower).epsilon(1e-13));
  const BoundCertificate cn = cusped_certificate(3, 5, 2.0, eps);
  const BoundCertificate cs = symbolic_certificate(CertificateCase::Cusped, 3, 5, 1.0, eps);
  CHECK(cs.systole_log2_lower == doctest::Approx(cn.systole_log2_lower).epsilon(1e-13));
  const BoundCertificate huge = symbolic_certificate(CertificateCase::Closed, 3, 1, 1e6, eps);
  CHECK(std::isnan(huge.systole_log2_lower));
  CHECK(huge.systole_loglog.level2 > 1e6);
}

TEST_CASE("displacement oracle") {
  const LoxodromicNormalForm<double> phi(0.3, Matrix<double>::Identity(2, 2));
  const auto axis = UhsPoint<double>::on_axis(3, 2.0);
  const auto r = min_displacement_oracle(phi, axis, 10);
  CHECK(r.min_displacement == doctest::Approx(0.3));
  CHECK(r.argmin_k == 1);
  Rng rng = trial_rng(32, 0);
  const LoxodromicNormalForm<double> twisted(0.3, random_rotation<double>(rng, 2));
  CHECK(min_displacement_oracle(twisted, axis, 10).min_displacement == doctest::Approx(0.3));
  CHECK_THROWS_AS(min_displacement_oracle(phi, axis, 0), DomainError);
}

TEST_CASE("thin-part displacement suites") {
  const TubeSuite s3 = run_tube_suite(3, 1000, 2024, default_epsilon(3));
  CHECK(s3.failures.empty());
  CHECK(s3.passed + s3.vacuous == 1000);
  CHECK(s3.passed > 500);
  const TubeSuite s4 = run_tube_suite(4, 1000, 2024, epsilon_lower(4, MargulisSource::UserSupplied, 0.052L));
  CHECK(s4.failures.empty());
  CHECK(s4.passed > 500);
  // Kellerhals' constant leaves no tube at these systoles for n = 4.
  const TubeSuite k4 = run_tube_suite(4, 100, 2024, default_epsilon(4));
  CHECK(k4.vacuous == 100);
  CHECK_FALSE(k4.ok());
}

TEST_CASE("suites are reproducible") {
  const PigeonholeSuite a = run_pigeonhole_suite(4, 200, 99);
  const PigeonholeSuite b = run_pigeonhole_suite(4, 200, 99);
  CHECK(a.max_k == b.max_k);
  CHECK(a.max_ratio == b.max_ratio);
  CHECK(a.ok());
}
