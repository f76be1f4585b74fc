#pragma once

// Cocycles on a triangulation valued in SO^+(n,1) or SL(2,C): verification of
// the face and inverse relations, path evaluation, the developing map into
// the hyperboloid, and the parabolicity checks on cusp generators.
//
// Only the canonical orientation (tail < head) of an edge carries a matrix;
// the reverse orientation is its inverse, computed on demand.

#include "hyperbound/core.hpp"
#include "hyperbound/hyperboloid.hpp"
#include "hyperbound/triangulation.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace hyperbound {

enum class GroupKind { Lorentz, SL2C };

inline std::string to_string(GroupKind g) { return g == GroupKind::Lorentz ? "lorentz" : "sl2c"; }

inline std::string edge_name(Edge e) { return std::to_string(e.lo) + "-" + std::to_string(e.hi); }

/// A cocycle lacks a value on an edge it is queried on.
class MissingEdgeValue : public DomainError {
 public:
  explicit MissingEdgeValue(Edge e) : DomainError("no cocycle value on edge " + edge_name(e)), edge_(e) {}
  Edge edge() const { return edge_; }

 private:
  Edge edge_;
};

template <typename MatrixType>
class Cocycle {
 public:
  using RealScalar = typename MatrixType::RealScalar;

  /// `size` is the matrix size: n + 1 for Lorentz(n), 2 for SL(2,C).
  explicit Cocycle(int size) : size_(size) {}

  int size() const { return size_; }
  static constexpr GroupKind group() {
    return std::is_same_v<typename MatrixType::Scalar, RealScalar> ? GroupKind::Lorentz : GroupKind::SL2C;
  }
  /// Dimension of the hyperbolic space acted on.
  int n() const { return group() == GroupKind::Lorentz ? size_ - 1 : 3; }

  /// Stores alpha(e); a reversed edge is stored as the inverse.
  void set(OrientedEdge e, const MatrixType& m) {
    if (m.rows() != size_ || m.cols() != size_) throw DimensionError("Cocycle::set: wrong matrix size");
    if (e.tail < e.head) {
      values_.insert_or_assign(e.unoriented(), m);
    } else {
      values_.insert_or_assign(e.unoriented(), MatrixType(m.inverse()));
    }
  }

  bool has(Edge e) const { return values_.count(e) != 0; }

  MatrixType operator()(OrientedEdge e) const {
    auto it = values_.find(e.unoriented());
    if (it == values_.end()) throw MissingEdgeValue(e.unoriented());
    if (e.tail < e.head) return it->second;
    return it->second.inverse();
  }

  /// Canonical-orientation values, ordered by edge.
  const std::map<Edge, MatrixType>& values() const { return values_; }

  MatrixType identity() const { return MatrixType::Identity(size_, size_); }

 private:
  int size_;
  std::map<Edge, MatrixType> values_;
};

template <typename Scalar>
using LorentzCocycle = Cocycle<Matrix<Scalar>>;
template <typename Scalar>
using Sl2cCocycle = Cocycle<Matrix2c<Scalar>>;

/// Distance of a matrix from its group: max(form residual, |det - 1|) for
/// Lorentz matrices (plus a failure flag for the wrong sheet), |det - 1| for SL(2,C).
template <typename Scalar>
Scalar membership_residual(const Matrix<Scalar>& m) {
  const LorentzCheck<Scalar> check = is_lorentz_matrix<Scalar>(m, Scalar(0));
  const Scalar r = std::max(check.form_residual, check.det_residual);
  return check.sheet_entry > Scalar(0) ? r : std::max(r, Scalar(1));
}

template <typename Scalar>
Scalar membership_residual(const Matrix2c<Scalar>& m) {
  return std::abs(m.determinant() - std::complex<Scalar>(1));
}

template <typename Scalar>
struct FaceResidual {
  Simplex face;
  Scalar residual{};
};

template <typename Scalar>
struct EdgeResidual {
  Edge edge;
  Scalar inverse{};
  Scalar membership{};
};

template <typename Scalar>
struct CocycleReport {
  std::vector<FaceResidual<Scalar>> faces;
  std::vector<EdgeResidual<Scalar>> edges;
  Scalar max_face{};
  Scalar max_inverse{};
  Scalar max_membership{};
  Scalar tolerance{};
  bool ok = true;

  std::vector<Simplex> failing_faces() const {
    std::vector<Simplex> out;
    for (const auto& f : faces)
      if (!(f.residual <= tolerance)) out.push_back(f.face);
    return out;
  }
  std::vector<Edge> failing_edges() const {
    std::vector<Edge> out;
    for (const auto& e : edges)
      if (!(e.inverse <= tolerance && e.membership <= tolerance)) out.push_back(e.edge);
    return out;
  }
};

/// Face residual ||alpha(a) alpha(b) - alpha(c)||_max per non-ideal 2-simplex
/// v0 < v1 < v2 with a = v0->v1, b = v1->v2, c = v0->v2; inverse and
/// membership residuals per non-ideal edge.
template <typename MatrixType>
CocycleReport<typename MatrixType::RealScalar> verify_cocycle(const Triangulation& tri,
                                                              const Cocycle<MatrixType>& alpha,
                                                              typename MatrixType::RealScalar tol = kDefaultTolerance) {
  using Real = typename MatrixType::RealScalar;
  CocycleReport<Real> report;
  report.tolerance = tol;
  for (const Edge& e : tri.non_ideal_edges()) {
    if (!alpha.has(e)) throw MissingEdgeValue(e);
  }
  for (const Edge& e : tri.non_ideal_edges()) {
    const MatrixType forward = alpha({e.lo, e.hi});
    const MatrixType backward = alpha({e.hi, e.lo});
    EdgeResidual<Real> r{e, (forward * backward - alpha.identity()).cwiseAbs().maxCoeff(), membership_residual(forward)};
    report.max_inverse = std::max(report.max_inverse, r.inverse);
    report.max_membership = std::max(report.max_membership, r.membership);
    report.ok = report.ok && r.inverse <= tol && r.membership <= tol;
    report.edges.push_back(r);
  }
  for (const Simplex& f : tri.non_ideal_triangles()) {
    const MatrixType lhs = alpha({f[0], f[1]}) * alpha({f[1], f[2]});
    FaceResidual<Real> r{f, (lhs - alpha({f[0], f[2]})).cwiseAbs().maxCoeff()};
    report.max_face = std::max(report.max_face, r.residual);
    report.ok = report.ok && r.residual <= tol;
    report.faces.push_back(std::move(r));
  }
  return report;
}

/// alpha(e_1) ... alpha(e_k); identity for the empty path.
template <typename MatrixType>
MatrixType eval_path(const Cocycle<MatrixType>& alpha, const SimplicialPath& path) {
  if (!is_connected_path(path)) throw DomainError("eval_path: edges do not form a path");
  MatrixType product = alpha.identity();
  for (const OrientedEdge& e : path) product = product * alpha(e);
  return product;
}

/// Same, rejecting paths through ideal vertices of `tri`.
template <typename MatrixType>
MatrixType eval_path(const Triangulation& tri, const Cocycle<MatrixType>& alpha, const SimplicialPath& path) {
  for (const OrientedEdge& e : path) {
    if (tri.is_ideal(e.tail) || tri.is_ideal(e.head)) {
      throw DomainError("eval_path: edge " + edge_name(e.unoriented()) + " meets an ideal vertex");
    }
  }
  return eval_path(alpha, path);
}

/// alpha(u -> v) = g_u^{-1} g_v on every non-ideal edge.
template <typename MatrixType>
Cocycle<MatrixType> coboundary(const Triangulation& tri, const std::vector<MatrixType>& g) {
  if (g.size() != static_cast<std::size_t>(tri.vertex_count())) throw DimensionError("coboundary: one element per vertex");
  Cocycle<MatrixType> alpha(static_cast<int>(g.front().rows()));
  for (const Edge& e : tri.non_ideal_edges()) {
    alpha.set({e.lo, e.hi}, MatrixType(g[static_cast<std::size_t>(e.lo)].inverse() * g[static_cast<std::size_t>(e.hi)]));
  }
  return alpha;
}

/// g^{-1} alpha g.
template <typename MatrixType>
Cocycle<MatrixType> conjugate(const Cocycle<MatrixType>& alpha, const MatrixType& g) {
  Cocycle<MatrixType> out(alpha.size());
  const MatrixType g_inv = g.inverse();
  for (const auto& [e, m] : alpha.values()) out.set({e.lo, e.hi}, MatrixType(g_inv * m * g));
  return out;
}

template <typename MatrixType>
Cocycle<MatrixType> trivial_cocycle(const Triangulation& tri, int size) {
  Cocycle<MatrixType> alpha(size);
  for (const Edge& e : tri.non_ideal_edges()) alpha.set({e.lo, e.hi}, MatrixType::Identity(size, size));
  return alpha;
}

/// X -> A X A^* on Hermitian X = [[t+z, x-iy], [x+iy, t-z]], written as a
/// matrix on (x, y, z, t).
template <typename Scalar>
LorentzMatrix<Scalar> embed_sl2_as_lorentz(const Matrix2c<Scalar>& a, Scalar tol = Scalar(kDefaultTolerance)) {
  using C = std::complex<Scalar>;
  if (std::abs(a.determinant() - C(1)) > tol) throw DomainError("embed_sl2_as_lorentz: det(A) != 1");
  const C i(0, 1);
  LorentzMatrix<Scalar> out(4, 4);
  for (int k = 0; k < 4; ++k) {
    Vector<Scalar> basis = Vector<Scalar>::Zero(4);
    basis(k) = Scalar(1);
    Matrix2c<Scalar> x;
    x << C(basis(3) + basis(2)), C(basis(0)) - i * basis(1), C(basis(0)) + i * basis(1), C(basis(3) - basis(2));
    const Matrix2c<Scalar> y = a * x * a.adjoint();
    out(0, k) = y(1, 0).real();
    out(1, k) = y(1, 0).imag();
    out(2, k) = (y(0, 0).real() - y(1, 1).real()) / Scalar(2);
    out(3, k) = (y(0, 0).real() + y(1, 1).real()) / Scalar(2);
  }
  return out;
}

template <typename Scalar>
LorentzCocycle<Scalar> embed_cocycle(const Sl2cCocycle<Scalar>& alpha, Scalar tol = Scalar(kDefaultTolerance)) {
  LorentzCocycle<Scalar> out(4);
  for (const auto& [e, m] : alpha.values()) out.set({e.lo, e.hi}, embed_sl2_as_lorentz<Scalar>(m, tol));
  return out;
}

/// A point of the Riemann sphere C u {infinity}.
template <typename Scalar>
struct SpherePoint {
  std::complex<Scalar> z{};
  bool infinity = false;
};

/// Chordal distance on the Riemann sphere (diameter 2).
template <typename Scalar>
Scalar chordal_distance(const SpherePoint<Scalar>& p, const SpherePoint<Scalar>& q) {
  using std::sqrt;
  if (p.infinity && q.infinity) return Scalar(0);
  if (p.infinity) return Scalar(2) / sqrt(Scalar(1) + std::norm(q.z));
  if (q.infinity) return Scalar(2) / sqrt(Scalar(1) + std::norm(p.z));
  return Scalar(2) * std::abs(p.z - q.z) / sqrt((Scalar(1) + std::norm(p.z)) * (Scalar(1) + std::norm(q.z)));
}

enum class Sl2Kind { Identity, Parabolic, Elliptic, Loxodromic };

inline std::string to_string(Sl2Kind k) {
  switch (k) {
    case Sl2Kind::Identity: return "identity";
    case Sl2Kind::Parabolic: return "parabolic";
    case Sl2Kind::Elliptic: return "elliptic";
    case Sl2Kind::Loxodromic: return "loxodromic";
  }
  return "?";
}

template <typename Scalar>
struct Sl2Classification {
  Sl2Kind kind = Sl2Kind::Identity;
  std::complex<Scalar> trace{};
  /// Set for parabolics.
  std::optional<SpherePoint<Scalar>> fixed_point;
};

/// Trace test slack |tr^2 - 4| <= trace_tol * max(1, ||A||_F^2).
inline constexpr double kTraceTolerance = 1e-8;

template <typename Scalar>
Sl2Classification<Scalar> classify_sl2(const Matrix2c<Scalar>& a, Scalar tol = Scalar(kDefaultTolerance),
                                       Scalar trace_tol = Scalar(kTraceTolerance)) {
  using C = std::complex<Scalar>;
  if (std::abs(a.determinant() - C(1)) > tol) throw DomainError("classify_sl2: det(A) != 1");
  Sl2Classification<Scalar> out;
  out.trace = a.trace();
  const Matrix2c<Scalar> id = Matrix2c<Scalar>::Identity();
  if ((a - id).cwiseAbs().maxCoeff() <= tol || (a + id).cwiseAbs().maxCoeff() <= tol) return out;
  const Scalar scale = std::max(Scalar(1), a.squaredNorm());
  const C tr2 = out.trace * out.trace;
  if (std::abs(tr2 - C(4)) <= trace_tol * scale) {
    out.kind = Sl2Kind::Parabolic;
    SpherePoint<Scalar> p;
    // Fixed points solve c z^2 + (d - a) z - b = 0, a double root here.
    if (std::abs(a(1, 0)) <= tol * std::sqrt(scale)) {
      p.infinity = true;
    } else {
      p.z = (a(0, 0) - a(1, 1)) / (Scalar(2) * a(1, 0));
    }
    out.fixed_point = p;
  } else if (std::abs(tr2.imag()) <= trace_tol * scale && tr2.real() >= -trace_tol * scale && tr2.real() < Scalar(4)) {
    out.kind = Sl2Kind::Elliptic;
  } else {
    out.kind = Sl2Kind::Loxodromic;
  }
  return out;
}

template <typename Scalar>
struct GeneratorCheck {
  CuspLoop loop;
  Matrix2c<Scalar> value;
  Sl2Classification<Scalar> classification;
  bool ok = false;
};

template <typename Scalar>
struct CuspReport {
  VertexId ideal_vertex = 0;
  std::vector<GeneratorCheck<Scalar>> generators;
  /// Shared fixed point of the parabolic generators, if any.
  std::optional<SpherePoint<Scalar>> fixed_point;
  /// Largest chordal distance of a generator's fixed point from the shared one.
  Scalar fixed_point_spread{};
  bool ok = true;
};

/// Every cusp generator must be parabolic or the identity, and all parabolic
/// fixed points must agree within `tol` in the chordal metric.
template <typename Scalar>
CuspReport<Scalar> check_cusp_parabolicity(const Triangulation& tri, const Sl2cCocycle<Scalar>& alpha, VertexId v,
                                           const BaseTree& base, Scalar tol = Scalar(1e-6)) {
  CuspReport<Scalar> report;
  report.ideal_vertex = v;
  const CuspGenerators gens = cusp_generators(tri, v, base);
  for (const CuspLoop& loop : gens.loops) {
    GeneratorCheck<Scalar> check{loop, eval_path(tri, alpha, loop.loop), {}, false};
    check.classification = classify_sl2<Scalar>(check.value, Scalar(1e-7));
    const Sl2Kind kind = check.classification.kind;
    check.ok = kind == Sl2Kind::Identity || kind == Sl2Kind::Parabolic;
    if (kind == Sl2Kind::Parabolic) {
      const SpherePoint<Scalar>& p = *check.classification.fixed_point;
      if (!report.fixed_point) {
        report.fixed_point = p;
      } else {
        const Scalar spread = chordal_distance(*report.fixed_point, p);
        report.fixed_point_spread = std::max(report.fixed_point_spread, spread);
        check.ok = check.ok && spread <= tol;
      }
    }
    report.ok = report.ok && check.ok;
    report.generators.push_back(std::move(check));
  }
  return report;
}

/// Thrown by develop when the cocycle fails verification or a cusp check.
class CocycleError : public DomainError {
 public:
  using DomainError::DomainError;
};

template <typename Scalar>
struct DevelopedComplex {
  int n = 3;
  VertexId basepoint = 0;
  /// A_gamma for the base-tree path gamma to each non-ideal vertex.
  std::map<VertexId, LorentzMatrix<Scalar>> path_values;
  std::map<VertexId, HyperboloidPoint<Scalar>> vertex_images;
  /// Lift of the head of each edge lo -> hi adjacent to the image of lo:
  /// A_{gamma_lo} alpha(lo -> hi) basepoint. Equals the image of hi on tree
  /// edges and whenever the holonomy around the edge is trivial.
  std::map<Edge, HyperboloidPoint<Scalar>> edge_heads;
  std::map<Edge, Scalar> edge_lengths;
  std::map<Edge, Scalar> edge_cosh_minus_one;
  std::map<VertexId, SpherePoint<Scalar>> ideal_images;
};

/// Vertex images A_gamma . basepoint along base-tree paths and lengths of all
/// non-ideal edges. The length of lo -> hi is d(b, alpha(lo -> hi) b), the
/// distance between adjacent lifts, which does not depend on the path.
template <typename Scalar>
DevelopedComplex<Scalar> develop(const Triangulation& tri, const LorentzCocycle<Scalar>& alpha, const BaseTree& base,
                                 Scalar tol = Scalar(kDefaultTolerance)) {
  if (alpha.n() != tri.dimension()) throw DimensionError("develop: cocycle and triangulation dimensions differ");
  const CocycleReport<Scalar> report = verify_cocycle(tri, alpha, tol);
  if (!report.ok) {
    throw CocycleError("develop: cocycle verification failed (face " + std::to_string(double(report.max_face)) +
                       ", inverse " + std::to_string(double(report.max_inverse)) + ", membership " +
                       std::to_string(double(report.max_membership)) + ")");
  }
  const int n = tri.dimension();
  const LorentzVector<Scalar> b = hyperboloid_basepoint<Scalar>(n);
  // Products along long paths drift off the hyperboloid; scale the check.
  const Scalar point_tol = Scalar(1e3) * tol;
  DevelopedComplex<Scalar> dev;
  dev.n = n;
  dev.basepoint = base.basepoint();
  for (VertexId v = 0; v < tri.vertex_count(); ++v) {
    if (tri.is_ideal(v)) continue;
    LorentzMatrix<Scalar> a = eval_path(alpha, base.path_to(v));
    dev.vertex_images.emplace(v, HyperboloidPoint<Scalar>(a * b, point_tol));
    dev.path_values.emplace(v, std::move(a));
  }
  for (const Edge& e : tri.non_ideal_edges()) {
    const LorentzMatrix<Scalar> step = alpha({e.lo, e.hi});
    const HyperboloidPoint<Scalar> head(dev.path_values.at(e.lo) * (step * b), point_tol);
    const HyperbolicDistance<Scalar> d = hyp_distance(dev.vertex_images.at(e.lo), head, point_tol);
    dev.edge_heads.emplace(e, head);
    dev.edge_lengths.emplace(e, d.distance);
    dev.edge_cosh_minus_one.emplace(e, d.cosh_minus_one);
  }
  return dev;
}

/// SL(2,C) cocycles are developed through the Lorentz embedding; on
/// semi-ideal input every cusp must pass check_cusp_parabolicity and its
/// shared fixed point becomes the ideal vertex image.
template <typename Scalar>
DevelopedComplex<Scalar> develop(const Triangulation& tri, const Sl2cCocycle<Scalar>& alpha, const BaseTree& base,
                                 Scalar tol = Scalar(kDefaultTolerance)) {
  if (tri.dimension() != 3) throw DimensionError("develop: SL(2,C) cocycles need n = 3");
  const CocycleReport<Scalar> report = verify_cocycle(tri, alpha, tol);
  if (!report.ok) throw CocycleError("develop: cocycle verification failed");
  DevelopedComplex<Scalar> dev = develop(tri, embed_cocycle(alpha, tol), base, tol);
  for (VertexId v : tri.ideal_vertices()) {
    const CuspReport<Scalar> cusp = check_cusp_parabolicity(tri, alpha, v, base);
    if (!cusp.ok) {
      for (const auto& g : cusp.generators) {
        if (!g.ok) {
          throw CocycleError("develop: cusp generator through link edge " + edge_name(g.loop.extra_edge.unoriented()) +
                             " at ideal vertex " + std::to_string(v) + " is " + to_string(g.classification.kind));
        }
      }
      throw CocycleError("develop: cusp generators at ideal vertex " + std::to_string(v) + " fix different points");
    }
    if (cusp.fixed_point) dev.ideal_images.emplace(v, *cusp.fixed_point);
  }
  return dev;
}

template <typename Scalar>
struct EdgeLengthBound {
  Scalar max_length{};
  Scalar max_cosh_minus_one{};
  std::optional<Edge> argmax;
};

template <typename Scalar>
EdgeLengthBound<Scalar> edge_length_bound(const DevelopedComplex<Scalar>& dev) {
  EdgeLengthBound<Scalar> out;
  for (const auto& [e, len] : dev.edge_lengths) {
    if (!out.argmax || len > out.max_length) {
      out.max_length = len;
      out.argmax = e;
    }
    out.max_cosh_minus_one = std::max(out.max_cosh_minus_one, dev.edge_cosh_minus_one.at(e));
  }
  return out;
}

// ---------------------------------------------------------------- coc-v1 I/O

/// Parsed coc-v1 file; exactly one of the two cocycles is set.
template <typename Scalar>
struct CocycleFile {
  GroupKind group = GroupKind::Lorentz;
  int n = 3;
  std::optional<LorentzCocycle<Scalar>> lorentz;
  std::optional<Sl2cCocycle<Scalar>> sl2c;
};

namespace detail {

inline Edge parse_edge_key(const std::string& key) {
  const auto dash = key.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == key.size()) {
    throw ParseError(1, 1, "edge key '" + key + "' must be \"tail-head\"");
  }
  std::size_t used_a = 0;
  std::size_t used_b = 0;
  int a = 0;
  int b = 0;
  try {
    a = std::stoi(key.substr(0, dash), &used_a);
    b = std::stoi(key.substr(dash + 1), &used_b);
  } catch (const std::exception&) {
    throw ParseError(1, 1, "edge key '" + key + "' must be \"tail-head\"");
  }
  if (used_a != dash || used_b != key.size() - dash - 1) throw ParseError(1, 1, "edge key '" + key + "' is malformed");
  if (!(a < b)) throw ParseError(1, 1, "edge key '" + key + "' must have tail < head");
  return {a, b};
}

}  // namespace detail

template <typename Scalar>
CocycleFile<Scalar> parse_cocycle(std::string_view text) {
  using C = std::complex<Scalar>;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, column, "syntax error in coc-v1 input");
  }
  const auto fail = [](const std::string& what) { return ParseError(1, 1, what); };
  if (!j.is_object()) throw fail("expected a JSON object");
  if (j.value("format", std::string()) != "coc-v1") throw fail("field 'format' must be \"coc-v1\"");
  if (!j.contains("group") || !j["group"].is_string()) throw fail("field 'group' must be \"lorentz\" or \"sl2c\"");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw fail("field 'n' must be an integer");
  if (!j.contains("values") || !j["values"].is_object()) throw fail("field 'values' must be an object");
  CocycleFile<Scalar> out;
  out.n = j["n"].get<int>();
  const std::string group = j["group"].get<std::string>();
  if (group == "lorentz") {
    out.group = GroupKind::Lorentz;
    if (out.n < 2) throw fail("lorentz cocycles need n >= 2");
    const int size = out.n + 1;
    LorentzCocycle<Scalar> alpha(size);
    for (const auto& [key, entries] : j["values"].items()) {
      if (!entries.is_array() || entries.size() != static_cast<std::size_t>(size * size)) {
        throw fail("value of edge " + key + " must hold " + std::to_string(size * size) + " numbers");
      }
      Matrix<Scalar> m(size, size);
      for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) {
          const auto& x = entries[static_cast<std::size_t>(r * size + c)];
          if (!x.is_number()) throw fail("value of edge " + key + " has a non-numeric entry");
          m(r, c) = Scalar(x.template get<double>());
        }
      const Edge e = detail::parse_edge_key(key);
      alpha.set({e.lo, e.hi}, m);
    }
    out.lorentz = std::move(alpha);
  } else if (group == "sl2c") {
    out.group = GroupKind::SL2C;
    if (out.n != 3) throw fail("sl2c cocycles need n = 3");
    Sl2cCocycle<Scalar> alpha(2);
    for (const auto& [key, entries] : j["values"].items()) {
      if (!entries.is_array() || entries.size() != 4) throw fail("value of edge " + key + " must hold 4 [re, im] pairs");
      Matrix2c<Scalar> m;
      for (int k = 0; k < 4; ++k) {
        const auto& z = entries[static_cast<std::size_t>(k)];
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
          throw fail("value of edge " + key + " has an entry that is not an [re, im] pair");
        }
        m(k / 2, k % 2) = C(Scalar(z[0].template get<double>()), Scalar(z[1].template get<double>()));
      }
      const Edge e = detail::parse_edge_key(key);
      alpha.set({e.lo, e.hi}, m);
    }
    out.sl2c = std::move(alpha);
  } else {
    throw fail("field 'group' must be \"lorentz\" or \"sl2c\"");
  }
  return out;
}

template <typename Scalar>
std::string serialize_cocycle(const LorentzCocycle<Scalar>& alpha) {
  nlohmann::ordered_json j;
  j["format"] = "coc-v1";
  j["group"] = "lorentz";
  j["n"] = alpha.n();
  j["values"] = nlohmann::ordered_json::object();
  for (const auto& [e, m] : alpha.values()) {
    auto entries = nlohmann::ordered_json::array();
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) entries.push_back(static_cast<double>(m(r, c)));
    j["values"][edge_name(e)] = std::move(entries);
  }
  return j.dump(2) + "\n";
}

template <typename Scalar>
std::string serialize_cocycle(const Sl2cCocycle<Scalar>& alpha) {
  nlohmann::ordered_json j;
  j["format"] = "coc-v1";
  j["group"] = "sl2c";
  j["n"] = 3;
  j["values"] = nlohmann::ordered_json::object();
  for (const auto& [e, m] : alpha.values()) {
    auto entries = nlohmann::ordered_json::array();
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        entries.push_back({static_cast<double>(m(r, c).real()), static_cast<double>(m(r, c).imag())});
    j["values"][edge_name(e)] = std::move(entries);
  }
  return j.dump(2) + "\n";
}

}  // namespace hyperbound
