#include "hyperbound/random.hpp"
#include "hyperbound/upper_half_space.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hyperbound;

namespace {

UhsPoint<double> pt(std::initializer_list<double> v) {
  Vector<double> out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return UhsPoint<double>(out);
}

Matrix<double> planar_rotation(double angle) {
  Matrix<double> r(2, 2);
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

UhsPoint<double> random_point(Rng& rng, int n) {
  Vector<double> c(n);
  for (int i = 0; i < n - 1; ++i) c(i) = uniform(rng, -3.0, 3.0);
  c(n - 1) = std::exp(uniform(rng, -2.0, 2.0));
  return UhsPoint<double>(c);
}

}  // namespace

TEST_CASE("uhs distance examples") {
  CHECK(uhs_distance(pt({0.3, 2}), pt({0.3, 2})) == 0.0);
  CHECK(uhs_distance(pt({0, 1}), pt({0, std::numbers::e})) == doctest::Approx(1.0).epsilon(1e-15));
  // mpmath: arcosh(3/2)
  CHECK(uhs_distance(pt({0, 1}), pt({1, 1})) == doctest::Approx(0.962423650119206895).epsilon(1e-15));
  CHECK_THROWS_AS(pt({1, 0}), DomainError);
  CHECK_THROWS_AS(pt({1, -1}), DomainError);
  CHECK_THROWS_AS(uhs_distance(pt({0, 1}), pt({0, 0, 1})), DimensionError);
}

TEST_CASE("axis distance examples") {
  CHECK(axis_distance(UhsPoint<double>::on_axis(4, 7.5)) == 0.0);
  // mpmath: arcosh(sqrt 2)
  CHECK(axis_distance(pt({1, 1})) == doctest::Approx(0.88137358701954302523).epsilon(1e-15));
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = trial_rng(21, i);
    const int n = 2 + static_cast<int>(i % 4);
    const UhsPoint<double> x = random_point(rng, n);
    const auto foot = UhsPoint<double>::on_axis(n, x.coords().norm());
    CHECK(axis_distance(x) == doctest::Approx(uhs_distance(x, foot)).epsilon(1e-9));
  }
}

TEST_CASE("loxodromic normal form") {
  const LoxodromicNormalForm<double> phi(std::log(2.0), planar_rotation(std::numbers::pi / 2));
  const UhsPoint<double> x = pt({1, 0, 1});
  CHECK(loxodromic_apply(phi, x, 0).coords() == x.coords());
  const auto y = loxodromic_apply(phi, x, 1);
  CHECK(y.coords()(0) == doctest::Approx(0.0).scale(1));
  CHECK(y.coords()(1) == doctest::Approx(2.0));
  CHECK(y.coords()(2) == doctest::Approx(2.0));
  const LoxodromicNormalForm<double> pure(0.7, Matrix<double>::Identity(2, 2));
  const auto up = loxodromic_apply(pure, UhsPoint<double>::on_axis(3, 1.0), 1);
  CHECK(up.coords()(2) == doctest::Approx(std::exp(0.7)));
  CHECK_THROWS_AS(LoxodromicNormalForm<double>(0.0, Matrix<double>::Identity(2, 2)), DomainError);
  Matrix<double> reflection = Matrix<double>::Identity(2, 2);
  reflection(0, 0) = -1;
  CHECK_THROWS_AS(LoxodromicNormalForm<double>(1.0, reflection), DomainError);
  CHECK_THROWS_AS(loxodromic_apply(phi, x, -1), DomainError);
}

TEST_CASE("loxodromics are isometries preserving the axis") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = trial_rng(22, i);
    const int n = 3 + static_cast<int>(i % 3);
    const LoxodromicNormalForm<double> phi(uniform(rng, 0.01, 1.0), random_rotation<double>(rng, n - 1));
    const auto x = random_point(rng, n);
    const auto y = random_point(rng, n);
    const std::int64_t k = static_cast<std::int64_t>(i % 7);
    const auto fx = loxodromic_apply(phi, x, k);
    const auto fy = loxodromic_apply(phi, y, k);
    CHECK(uhs_distance(fx, fy) == doctest::Approx(uhs_distance(x, y)).epsilon(1e-9));
    CHECK(std::abs(axis_distance(fx) - axis_distance(x)) <= 1e-9);
  }
}

TEST_CASE("vertical scaling") {
  const auto x = pt({0, 1});
  CHECK(vertical_scale(x, 0.0).coords() == x.coords());
  CHECK(vertical_scale(x, 1.0).coords()(1) == doctest::Approx(std::numbers::e));
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = trial_rng(23, i);
    const auto a = random_point(rng, 3);
    const auto b = random_point(rng, 3);
    const double d = uniform(rng, -3.0, 3.0);
    CHECK(uhs_distance(vertical_scale(a, d), vertical_scale(b, d)) ==
          doctest::Approx(uhs_distance(a, b)).epsilon(1e-9));
  }
}

TEST_CASE("pigeonhole cap") {
  CHECK(pigeonhole_k_bound(0.0, 0.5, 3) == doctest::Approx(64.0));
  CHECK(pigeonhole_k_bound(0.0, 1.0 - 1e-12, 3) == doctest::Approx(16.0));
  // mpmath: (40 e^2)^3
  CHECK(pigeonhole_k_bound(2.0, 0.1, 4) == doctest::Approx(25819442.783535047847).epsilon(1e-13));
  CHECK_THROWS_AS(pigeonhole_k_bound(0.0, 1.0, 3), DomainError);
  CHECK_THROWS_AS(pigeonhole_k_bound(-1.0, 0.5, 3), DomainError);
}

TEST_CASE("recurrent powers") {
  CHECK(find_recurrent_power(Matrix<double>(Matrix<double>::Identity(2, 2)), pt({1, 0, 1}), 0.1).k == 1);
  CHECK(find_recurrent_power(planar_rotation(2 * std::numbers::pi / 5), pt({1, 0, 1}), 0.1).k == 5);
  CHECK_THROWS_AS(find_recurrent_power(planar_rotation(1.0), pt({1, 0, 0, 1}), 0.1), DimensionError);
}

TEST_CASE("recurrence never exceeds the pigeonhole cap") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = trial_rng(24, i);
    const int n = 3 + static_cast<int>(i % 3);
    const Matrix<double> a = random_rotation<double>(rng, n - 1);
    const double D = uniform(rng, 0.0, 2.0);
    const double h = uniform(rng, 0.5, 2.0);
    Vector<double> c = Vector<double>::Zero(n);
    c(0) = h * std::sqrt(std::expm1(2 * D));
    c(n - 1) = h;
    const double alpha = uniform(rng, 0.05, 0.95);
    const Recurrence r = find_recurrent_power(a, UhsPoint<double>(c), alpha);
    CHECK(static_cast<double>(r.k) <= pigeonhole_k_bound(D, alpha, n) * (1 + 1e-12));
    // the returned k really recurs
    const Vector<double> moved = matrix_power(a, r.k) * c.head(n - 1);
    Vector<double> m(n);
    m << moved, h;
    CHECK(uhs_distance(UhsPoint<double>(m), UhsPoint<double>(c)) < alpha);
  }
}

TEST_CASE("displacement decomposes through the rotation") {
  // d(x, phi^k x) <= kR + (e^{kR} - 1) e^D + d(A^k x, x)
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = trial_rng(25, i);
    const int n = 3 + static_cast<int>(i % 3);
    const LoxodromicNormalForm<double> phi(uniform(rng, 1e-4, 0.5), random_rotation<double>(rng, n - 1));
    const auto x = random_point(rng, n);
    const double D = std::log(x.coords().norm() / x.height());
    const std::int64_t k = 1 + static_cast<std::int64_t>(i % 20);
    const double kR = static_cast<double>(k) * phi.translation();
    Vector<double> rotated(n);
    rotated << matrix_power(phi.rotation(), static_cast<std::uint64_t>(k)) * x.horizontal(), x.height();
    const double lhs = uhs_distance(x, loxodromic_apply(phi, x, k));
    const double rhs = kR + std::expm1(kR) * std::exp(D) + uhs_distance(UhsPoint<double>(rotated), x);
    CHECK(lhs <= rhs + 1e-9);
  }
}

TEST_CASE("model conversion") {
  const auto b = HyperboloidPoint<double>::basepoint(3);
  const UhsPoint<double> u = convert_model(b);
  CHECK(u.coords().isApprox(UhsPoint<double>::on_axis(3, 1.0).coords()));
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = trial_rng(26, i);
    const int n = 2 + static_cast<int>(i % 4);
    const auto x = random_hyperboloid_point<double>(rng, n, 4.0);
    const auto y = random_hyperboloid_point<double>(rng, n, 4.0);
    const auto back = convert_model(convert_model(x));
    CHECK((back.coords() - x.coords()).cwiseAbs().maxCoeff() <= 1e-9 * x.coords()(n));
    CHECK(std::abs(uhs_distance(convert_model(x), convert_model(y)) - hyp_distance(x, y).distance) <= 1e-9);
    const auto p = random_point(rng, n);
    const auto p2 = convert_model(convert_model(p));
    CHECK((p2.coords() - p.coords()).cwiseAbs().maxCoeff() <= 1e-9 * (1 + p.coords().norm()));
  }
}
