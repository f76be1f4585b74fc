#pragma once

// Hyperboloid model of H^n inside Lorentzian R^{n,1}.
//
// Coordinates are (x_0, ..., x_n) with x_n the timelike coordinate, so the
// basepoint is (0, ..., 0, 1) and the quadratic form is
// q(x) = x_0^2 + ... + x_{n-1}^2 - x_n^2.

#include "hyperbound/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperbound {

template <typename Scalar>
using LorentzVector = Vector<Scalar>;

template <typename Scalar>
using LorentzMatrix = Matrix<Scalar>;

/// Bilinear form sum_{i<n} x_i y_i - x_n y_n.
template <typename Scalar, typename DerivedX, typename DerivedY>
Scalar lorentz_form(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
  if (x.size() != y.size()) {
    throw DimensionError("lorentz_form: dimension mismatch (" + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()) + ")");
  }
  if (x.size() < 3) throw DimensionError("lorentz_form: need n >= 2");
  const Eigen::Index last = x.size() - 1;
  Scalar spatial = x.head(last).dot(y.head(last));
  return spatial - x(last) * y(last);
}

template <typename Scalar>
Scalar lorentz_form(const LorentzVector<Scalar>& x, const LorentzVector<Scalar>& y) {
  return lorentz_form<Scalar, LorentzVector<Scalar>, LorentzVector<Scalar>>(x, y);
}

/// J = diag(1, ..., 1, -1) of size n+1.
template <typename Scalar>
LorentzMatrix<Scalar> lorentz_signature(int n) {
  LorentzMatrix<Scalar> j = LorentzMatrix<Scalar>::Identity(n + 1, n + 1);
  j(n, n) = Scalar(-1);
  return j;
}

template <typename Scalar>
LorentzVector<Scalar> hyperboloid_basepoint(int n) {
  LorentzVector<Scalar> b = LorentzVector<Scalar>::Zero(n + 1);
  b(n) = Scalar(1);
  return b;
}

/// A point on the upper sheet q(x) = -1, x_n > 0.
template <typename Scalar>
class HyperboloidPoint {
 public:
  /// Validates q(x) = -1 within `tol` and x_n > 0.
  explicit HyperboloidPoint(LorentzVector<Scalar> coords, Scalar tol = Scalar(kDefaultTolerance))
      : coords_(std::move(coords)) {
    using std::abs;
    if (coords_.size() < 3) throw DimensionError("HyperboloidPoint: need n >= 2");
    for (Eigen::Index i = 0; i < coords_.size(); ++i) {
      if (!std::isfinite(static_cast<double>(coords_(i)))) throw DomainError("HyperboloidPoint: non-finite coordinate");
    }
    const Scalar q = lorentz_form<Scalar>(coords_, coords_);
    // Relative slack: far from the basepoint q is a difference of large squares.
    const Scalar scale = std::max(Scalar(1), coords_(coords_.size() - 1) * coords_(coords_.size() - 1));
    if (abs(q + Scalar(1)) > tol * scale) {
      throw DomainError("HyperboloidPoint: q(x) = " + std::to_string(static_cast<double>(q)) + ", expected -1");
    }
    if (!(coords_(coords_.size() - 1) > Scalar(0))) throw DomainError("HyperboloidPoint: x_n must be positive");
  }

  static HyperboloidPoint basepoint(int n) { return HyperboloidPoint(hyperboloid_basepoint<Scalar>(n)); }

  const LorentzVector<Scalar>& coords() const { return coords_; }
  int dimension() const { return static_cast<int>(coords_.size()) - 1; }

 private:
  LorentzVector<Scalar> coords_;
};

template <typename Scalar>
struct HyperbolicDistance {
  Scalar distance;
  /// cosh(distance) - 1, obtained without an arcosh.
  Scalar cosh_minus_one;
};

/// cosh(d(x, y)) - 1 = -<x, y> - 1.
template <typename Scalar>
Scalar cosh_distance_minus_one(const HyperboloidPoint<Scalar>& x, const HyperboloidPoint<Scalar>& y) {
  return -lorentz_form<Scalar>(x.coords(), y.coords()) - Scalar(1);
}

/// d(x, y) = arcosh(-<x, y>). Arguments in [1 - tol, 1) are clamped to 1;
/// anything lower means an input left the hyperboloid and is an error.
template <typename Scalar>
HyperbolicDistance<Scalar> hyp_distance(const HyperboloidPoint<Scalar>& x, const HyperboloidPoint<Scalar>& y,
                                        Scalar tol = Scalar(kDefaultTolerance)) {
  using std::acosh;
  Scalar arg = -lorentz_form<Scalar>(x.coords(), y.coords());
  if (arg < Scalar(1)) {
    if (arg < Scalar(1) - tol) {
      throw DomainError("hyp_distance: arcosh argument " + std::to_string(static_cast<double>(arg)) + " below 1");
    }
    arg = Scalar(1);
  }
  return {acosh(arg), arg - Scalar(1)};
}

template <typename Scalar>
struct LorentzCheck {
  bool ok = false;
  /// max |(M^T J M - J)_{ij}|
  Scalar form_residual{};
  /// |det(M) - 1|
  Scalar det_residual{};
  /// M_{nn}; must be positive for the upper sheet to be preserved.
  Scalar sheet_entry{};
};

/// Membership test for SO^+(n,1); report-style, never throws on non-members.
template <typename Scalar>
LorentzCheck<Scalar> is_lorentz_matrix(const LorentzMatrix<Scalar>& m, Scalar tol = Scalar(kDefaultTolerance)) {
  using std::abs;
  if (m.rows() != m.cols() || m.rows() < 3) throw DimensionError("is_lorentz_matrix: expected square (n+1)x(n+1), n >= 2");
  const int n = static_cast<int>(m.rows()) - 1;
  const LorentzMatrix<Scalar> j = lorentz_signature<Scalar>(n);
  LorentzCheck<Scalar> report;
  report.form_residual = (m.transpose() * j * m - j).cwiseAbs().maxCoeff();
  report.det_residual = abs(m.determinant() - Scalar(1));
  report.sheet_entry = m(n, n);
  report.ok = report.form_residual <= tol && report.det_residual <= tol && report.sheet_entry > Scalar(0);
  return report;
}

/// M x for a Lorentz matrix M. The image is re-validated, so a non-Lorentz
/// input surfaces as a DomainError.
template <typename Scalar>
HyperboloidPoint<Scalar> apply_isometry(const LorentzMatrix<Scalar>& m, const HyperboloidPoint<Scalar>& x,
                                        Scalar tol = Scalar(kDefaultTolerance)) {
  if (m.rows() != x.coords().size() || m.cols() != x.coords().size()) {
    throw DimensionError("apply_isometry: matrix/point dimension mismatch");
  }
  return HyperboloidPoint<Scalar>(m * x.coords(), tol);
}

/// Boost of rapidity `t` in the plane spanned by spatial axis `axis` and the
/// time axis. Moves the basepoint to sinh(t) e_axis + cosh(t) e_n.
template <typename Scalar>
LorentzMatrix<Scalar> lorentz_boost(int n, int axis, Scalar t) {
  using std::cosh;
  using std::sinh;
  if (axis < 0 || axis >= n) throw DimensionError("lorentz_boost: axis out of range");
  LorentzMatrix<Scalar> m = LorentzMatrix<Scalar>::Identity(n + 1, n + 1);
  m(axis, axis) = cosh(t);
  m(n, n) = cosh(t);
  m(axis, n) = sinh(t);
  m(n, axis) = sinh(t);
  return m;
}

/// Embeds a rotation of the spatial coordinates as a Lorentz matrix.
template <typename Scalar>
LorentzMatrix<Scalar> lorentz_rotation(const Matrix<Scalar>& rotation) {
  const Eigen::Index n = rotation.rows();
  LorentzMatrix<Scalar> m = LorentzMatrix<Scalar>::Identity(n + 1, n + 1);
  m.topLeftCorner(n, n) = rotation;
  return m;
}

}  // namespace hyperbound
