#pragma once

// Upper half-space model of H^n: points (x_1, ..., x_n) with height x_n > 0.
// Loxodromics are taken in normal form with axis the vertical geodesic from
// 0 to infinity, acting as x -> A e^R x with A rotating the first n-1
// coordinates.

#include "hyperbound/core.hpp"
#include "hyperbound/hyperboloid.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace hyperbound {

template <typename Scalar>
class UhsPoint {
 public:
  explicit UhsPoint(Vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw DimensionError("UhsPoint: need n >= 2");
    if (!(height() > Scalar(0))) throw DomainError("UhsPoint: height must be positive (points at infinity rejected)");
  }

  /// (0, ..., 0, h)
  static UhsPoint on_axis(int n, Scalar h) {
    Vector<Scalar> c = Vector<Scalar>::Zero(n);
    c(n - 1) = h;
    return UhsPoint(std::move(c));
  }

  const Vector<Scalar>& coords() const { return coords_; }
  int dimension() const { return static_cast<int>(coords_.size()); }
  Scalar height() const { return coords_(coords_.size() - 1); }
  auto horizontal() const { return coords_.head(coords_.size() - 1); }

 private:
  Vector<Scalar> coords_;
};

/// arcosh(1 + |x - y|^2 / (2 x_n y_n)), evaluated as 2 asinh(|x - y| / (2 sqrt(x_n y_n))).
template <typename Scalar>
Scalar uhs_distance(const UhsPoint<Scalar>& x, const UhsPoint<Scalar>& y) {
  using std::asinh;
  using std::sqrt;
  if (x.dimension() != y.dimension()) throw DimensionError("uhs_distance: dimension mismatch");
  const Scalar chord = (x.coords() - y.coords()).norm();
  return Scalar(2) * asinh(chord / (Scalar(2) * sqrt(x.height() * y.height())));
}

/// Distance to the vertical axis through the origin, arcosh(|x| / x_n).
/// Evaluated as asinh(|pi(x)| / x_n), which is the same quantity.
template <typename Scalar>
Scalar axis_distance(const UhsPoint<Scalar>& x) {
  using std::asinh;
  return asinh(x.horizontal().norm() / x.height());
}

template <typename Scalar>
class LoxodromicNormalForm {
 public:
  LoxodromicNormalForm(Scalar translation, Matrix<Scalar> rotation, Scalar tol = Scalar(kDefaultTolerance))
      : translation_(translation), rotation_(std::move(rotation)) {
    using std::abs;
    if (!(translation_ > Scalar(0))) throw DomainError("LoxodromicNormalForm: translation length must be positive");
    if (rotation_.rows() != rotation_.cols()) throw DimensionError("LoxodromicNormalForm: rotation not square");
    const auto dim = rotation_.rows();
    const Scalar orth = (rotation_.transpose() * rotation_ - Matrix<Scalar>::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (orth > tol) throw DomainError("LoxodromicNormalForm: rotation is not orthogonal");
    if (abs(rotation_.determinant() - Scalar(1)) > tol) throw DomainError("LoxodromicNormalForm: det(A) != 1");
  }

  Scalar translation() const { return translation_; }
  const Matrix<Scalar>& rotation() const { return rotation_; }
  /// Dimension n of the hyperbolic space acted on.
  int dimension() const { return static_cast<int>(rotation_.rows()) + 1; }

 private:
  Scalar translation_;
  Matrix<Scalar> rotation_;
};

template <typename Scalar>
Matrix<Scalar> matrix_power(const Matrix<Scalar>& a, std::uint64_t k) {
  Matrix<Scalar> result = Matrix<Scalar>::Identity(a.rows(), a.cols());
  Matrix<Scalar> base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

/// phi^k(x) = A^k e^{kR} x.
template <typename Scalar>
UhsPoint<Scalar> loxodromic_apply(const LoxodromicNormalForm<Scalar>& phi, const UhsPoint<Scalar>& x, std::int64_t k) {
  using std::exp;
  if (k < 0) throw DomainError("loxodromic_apply: k must be non-negative");
  if (x.dimension() != phi.dimension()) throw DimensionError("loxodromic_apply: dimension mismatch");
  const Scalar scale = exp(Scalar(k) * phi.translation());
  Vector<Scalar> out(x.dimension());
  out.head(x.dimension() - 1) = matrix_power(phi.rotation(), static_cast<std::uint64_t>(k)) * x.horizontal() * scale;
  out(x.dimension() - 1) = x.height() * scale;
  return UhsPoint<Scalar>(std::move(out));
}

/// The homothety x -> e^d x: moves every point a hyperbolic distance d along
/// the vertical geodesic through it. It is an isometry of the model.
template <typename Scalar>
UhsPoint<Scalar> vertical_scale(const UhsPoint<Scalar>& x, Scalar d) {
  using std::exp;
  return UhsPoint<Scalar>(x.coords() * exp(d));
}

/// (4 e^D / a)^{n-1}: cap on the first recurrence time of a rotation orbit.
template <typename Scalar>
Scalar pigeonhole_k_bound(Scalar max_axis_distance, Scalar a, int n) {
  using std::exp;
  using std::pow;
  if (!(a > Scalar(0) && a < Scalar(1))) throw DomainError("pigeonhole_k_bound: a must lie in (0, 1)");
  if (max_axis_distance < Scalar(0)) throw DomainError("pigeonhole_k_bound: D must be non-negative");
  if (n < 3) throw DomainError("pigeonhole_k_bound: n must be at least 3");
  return pow(Scalar(4) * exp(max_axis_distance) / a, Scalar(n - 1));
}

/// Raised when no recurrence is found within the pigeonhole cap. Reaching
/// this means the counting argument failed, so callers treat it as fatal.
class RecurrenceNotFound : public Error {
 public:
  using Error::Error;
};

struct Recurrence {
  std::uint64_t k = 0;
  std::uint64_t cap = 0;
};

/// Rounds a positive cap to an integer search bound, saturating at uint64 max.
template <typename Scalar>
std::uint64_t search_cap(Scalar bound) {
  using std::ceil;
  const long double c = ceil(static_cast<long double>(bound));
  if (!(c < static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

/// Smallest k >= 1 with d(A^k x, x) < a, the rotation acting on the first n-1
/// coordinates at fixed height. The search stops at ceil((4 e^D / a)^{n-1})
/// with e^D = |x| / x_n.
template <typename Scalar>
Recurrence find_recurrent_power(const Matrix<Scalar>& rotation, const UhsPoint<Scalar>& x, Scalar a) {
  using std::log;
  using std::sinh;
  if (rotation.rows() != x.dimension() - 1 || rotation.cols() != x.dimension() - 1) {
    throw DimensionError("find_recurrent_power: rotation must act on the first n-1 coordinates");
  }
  const Scalar d = log(x.coords().norm() / x.height());
  Recurrence result;
  result.cap = search_cap(pigeonhole_k_bound<Scalar>(d < Scalar(0) ? Scalar(0) : d, a, x.dimension()));
  // At equal heights h, d(p, q) < a  <=>  |p - q| < 2 h sinh(a / 2).
  const Scalar threshold = Scalar(2) * x.height() * sinh(a / Scalar(2));
  const Vector<Scalar> start = x.horizontal();
  Vector<Scalar> current = start;
  Vector<Scalar> next(start.size());
  for (std::uint64_t k = 1; k <= result.cap; ++k) {
    next.noalias() = rotation * current;
    current.swap(next);
    if ((current - start).norm() < threshold) {
      result.k = k;
      return result;
    }
  }
  throw RecurrenceNotFound("find_recurrent_power: no k <= " + std::to_string(result.cap) + " with d(A^k x, x) < a");
}

/// Hyperboloid -> upper half-space through the ball model, normalised so that
/// the hyperboloid basepoint maps to (0, ..., 0, 1).
template <typename Scalar>
UhsPoint<Scalar> hyperboloid_to_uhs(const HyperboloidPoint<Scalar>& p) {
  const auto& x = p.coords();
  const int n = p.dimension();
  const Scalar t = x(n);
  const Scalar s = x(n - 1);
  // t - s, computed without cancellation when s is close to t.
  Scalar gap = t - s;
  if (s > Scalar(0)) gap = (Scalar(1) + x.head(n - 1).squaredNorm()) / (t + s);
  if (!(gap > Scalar(0))) throw DomainError("hyperboloid_to_uhs: point maps to infinity");
  Vector<Scalar> u(n);
  u.head(n - 1) = x.head(n - 1) / gap;
  u(n - 1) = Scalar(1) / gap;
  return UhsPoint<Scalar>(std::move(u));
}

template <typename Scalar>
HyperboloidPoint<Scalar> uhs_to_hyperboloid(const UhsPoint<Scalar>& p, Scalar tol = Scalar(kDefaultTolerance)) {
  const int n = p.dimension();
  const Scalar h = p.height();
  const Scalar horizontal2 = p.horizontal().squaredNorm();
  const Scalar diff = Scalar(1) / h;          // t - s
  const Scalar sum = h + horizontal2 / h;     // t + s
  LorentzVector<Scalar> x(n + 1);
  x.head(n - 1) = p.horizontal() / h;
  x(n - 1) = (sum - diff) / Scalar(2);
  x(n) = (sum + diff) / Scalar(2);
  return HyperboloidPoint<Scalar>(std::move(x), tol);
}

/// convert_model in both directions; round trips are the identity.
template <typename Scalar>
UhsPoint<Scalar> convert_model(const HyperboloidPoint<Scalar>& p) {
  return hyperboloid_to_uhs(p);
}

template <typename Scalar>
HyperboloidPoint<Scalar> convert_model(const UhsPoint<Scalar>& p) {
  return uhs_to_hyperboloid(p);
}

}  // namespace hyperbound
