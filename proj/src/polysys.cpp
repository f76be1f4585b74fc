#include "hyperbound/polysys.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <sstream>

namespace hyperbound {

namespace {

using PolyVector = std::vector<Polynomial>;
using PolyMatrix = std::vector<PolyVector>;
using ComplexMatrix = std::array<std::array<ComplexPolynomial, 2>, 2>;

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

std::string edge_label(OrientedEdge e) { return std::to_string(e.tail) + "->" + std::to_string(e.head); }

std::string face_label(const Simplex& f) {
  return std::to_string(f[0]) + "-" + std::to_string(f[1]) + "-" + std::to_string(f[2]);
}

std::string rc(int i, int j) { return "r" + std::to_string(i) + "c" + std::to_string(j); }

int edge_id(const Triangulation& tri, OrientedEdge e) {
  const auto k = tri.edge_index(e.unoriented());
  if (!k) throw DomainError("no edge " + edge_name(e.unoriented()));
  return static_cast<int>(*k);
}

int orientation(OrientedEdge e) { return e.tail < e.head ? 0 : 1; }

std::string entry_name(int k, int o, int i, int j) {
  return "E" + std::to_string(k) + "o" + std::to_string(o) + rc(i, j);
}

Polynomial var(PolySystem& s, const std::string& name) { return Polynomial::variable(s.variable(name)); }

PolyMatrix lorentz_matrix(PolySystem& s, const Triangulation& tri, OrientedEdge e) {
  const int size = tri.dimension() + 1;
  const int k = edge_id(tri, e);
  const int o = orientation(e);
  PolyMatrix m(size, PolyVector(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m[i][j] = var(s, entry_name(k, o, i, j));
  return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t size = a.size();
  PolyMatrix out(size, PolyVector(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      for (std::size_t k = 0; k < size; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

PolyVector apply_matrix(const PolyMatrix& m, const PolyVector& w) {
  PolyVector out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) out[i] += m[i][j] * w[j];
  return out;
}

PolyVector basepoint_vector(int size) {
  PolyVector b(size);
  b[size - 1] = Polynomial::constant(1);
  return b;
}

/// sum_{i<n} x_i y_i - x_n y_n
Polynomial minkowski(const PolyVector& x, const PolyVector& y) {
  Polynomial out;
  const std::size_t last = x.size() - 1;
  for (std::size_t i = 0; i < last; ++i) out += x[i] * y[i];
  out -= x[last] * y[last];
  return out;
}

/// A_gamma b expanded along the path, innermost factor first.
PolyVector path_image(PolySystem& s, const Triangulation& tri, const SimplicialPath& path, PolyVector w) {
  for (auto it = path.rbegin(); it != path.rend(); ++it) w = apply_matrix(lorentz_matrix(s, tri, *it), w);
  return w;
}

PolyVector vertex_variables(PolySystem& s, const std::string& prefix, int size) {
  PolyVector v(size);
  for (int i = 0; i < size; ++i) v[i] = var(s, prefix + "a" + std::to_string(i));
  return v;
}

void add_edge_length_constraints(PolySystem& s, const Triangulation& tri, const BaseTree& base,
                                 const std::map<VertexId, PolyVector>& images, const std::map<Edge, PolyVector>& heads) {
  for (const Edge& e : tri.non_ideal_edges()) {
    const int k = edge_id(tri, {e.lo, e.hi});
    const PolyVector& head = base.is_tree_edge(e) ? images.at(e.hi) : heads.at(e);
    // C = -<x, y> - 1
    Polynomial def = var(s, "C" + std::to_string(k)) + minkowski(images.at(e.lo), head) + Polynomial::constant(1);
    s.add(Relation::EqualZero, std::move(def), "C" + std::to_string(k) + " def " + edge_name(e));
  }
  for (const Edge& e : tri.non_ideal_edges()) {
    const int k = edge_id(tri, {e.lo, e.hi});
    s.add(Relation::StrictPositive, var(s, "C" + std::to_string(k)), "C" + std::to_string(k) + " > 0 " + edge_name(e));
  }
}

void add_ratio_notes(PolySystem& s, const Triangulation& tri) {
  const ComplexityProfile p = complexity_profile(s);
  const double t = static_cast<double>(tri.size());
  s.notes()["N-per-t"] = fmt(static_cast<double>(p.N) / t);
  s.notes()["kappa-per-t"] = fmt(static_cast<double>(p.kappa) / t);
  s.notes()["d-per-t"] = fmt(static_cast<double>(p.d) / t);
}

// ------------------------------------------------------------- SL(2,C) parts

ComplexMatrix complex_matrix(PolySystem& s, const Triangulation& tri, OrientedEdge e) {
  const int k = edge_id(tri, e);
  const int o = orientation(e);
  ComplexMatrix m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m[i][j] = {var(s, entry_name(k, o, i, j) + "re"), var(s, entry_name(k, o, i, j) + "im")};
    }
  return m;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return out;
}

ComplexMatrix path_product(PolySystem& s, const Triangulation& tri, const SimplicialPath& path) {
  ComplexMatrix g;
  g[0][0].re = Polynomial::constant(1);
  g[1][1].re = Polynomial::constant(1);
  for (const OrientedEdge& e : path) g = multiply(g, complex_matrix(s, tri, e));
  return g;
}

void add_complex_equality(PolySystem& s, const ComplexPolynomial& z, const std::string& label) {
  s.add(Relation::EqualZero, z.re, label + " re");
  s.add(Relation::EqualZero, z.im, label + " im");
}

/// Coordinates (x, y, z, t) of G G^* as defining equations for `v`:
/// v_x = Re(g10 conj(g00) + g11 conj(g01)), v_y = Im(...),
/// 2 v_z = |g00|^2 + |g01|^2 - |g10|^2 - |g11|^2, 2 v_t = sum |g_ij|^2.
void add_hermitian_image(PolySystem& s, const PolyVector& v, const ComplexMatrix& g, const std::string& label) {
  const ComplexPolynomial off = g[1][0] * g[0][0].conj() + g[1][1] * g[0][1].conj();
  const Polynomial top = g[0][0].norm() + g[0][1].norm();
  const Polynomial bottom = g[1][0].norm() + g[1][1].norm();
  s.add(Relation::EqualZero, v[0] - off.re, label + " a0");
  s.add(Relation::EqualZero, v[1] - off.im, label + " a1");
  s.add(Relation::EqualZero, 2 * v[2] - (top - bottom), label + " a2");
  s.add(Relation::EqualZero, 2 * v[3] - (top + bottom), label + " a3");
}

PolySystem build_sl2c_cusped_system(const Triangulation& tri, const PolysysOptions& options) {
  PolySystem s;
  const BaseTree base(tri, default_basepoint(tri));
  s.notes()["group"] = "sl2c";
  s.notes()["basepoint"] = std::to_string(base.basepoint());
  const std::vector<Edge> edges = tri.non_ideal_edges();
  for (const Edge& e : edges) {
    complex_matrix(s, tri, {e.lo, e.hi});
    complex_matrix(s, tri, {e.hi, e.lo});
  }
  for (const Edge& e : edges) {
    for (const OrientedEdge oe : {OrientedEdge{e.lo, e.hi}, OrientedEdge{e.hi, e.lo}}) {
      const ComplexMatrix m = complex_matrix(s, tri, oe);
      ComplexPolynomial det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
      det.re -= Polynomial::constant(1);
      add_complex_equality(s, det, "det " + edge_label(oe));
    }
  }
  for (const Simplex& f : tri.non_ideal_triangles()) {
    const ComplexMatrix lhs = multiply(complex_matrix(s, tri, {f[0], f[1]}), complex_matrix(s, tri, {f[1], f[2]}));
    const ComplexMatrix c = complex_matrix(s, tri, {f[0], f[2]});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) add_complex_equality(s, lhs[i][j] - c[i][j], "face " + face_label(f) + " " + rc(i, j));
  }
  for (const Edge& e : edges) {
    ComplexMatrix prod = multiply(complex_matrix(s, tri, {e.lo, e.hi}), complex_matrix(s, tri, {e.hi, e.lo}));
    for (int i = 0; i < 2; ++i) {
      prod[i][i].re -= Polynomial::constant(1);
      for (int j = 0; j < 2; ++j) add_complex_equality(s, prod[i][j], "inverse " + edge_name(e) + " " + rc(i, j));
    }
  }

  std::map<VertexId, PolyVector> images;
  images[base.basepoint()] = basepoint_vector(4);
  for (VertexId v = 0; v < tri.vertex_count(); ++v) {
    if (tri.is_ideal(v) || v == base.basepoint()) continue;
    images[v] = vertex_variables(s, "V" + std::to_string(v), 4);
    add_hermitian_image(s, images[v], path_product(s, tri, base.path_to(v)), "vertex " + std::to_string(v));
  }
  std::map<Edge, PolyVector> heads;
  for (const Edge& e : edges) {
    if (base.is_tree_edge(e)) continue;
    const int k = edge_id(tri, {e.lo, e.hi});
    SimplicialPath path = base.path_to(e.lo);
    path.push_back({e.lo, e.hi});
    heads[e] = vertex_variables(s, "V" + std::to_string(e.hi) + "l" + std::to_string(k), 4);
    add_hermitian_image(s, heads[e], path_product(s, tri, path), "lift " + edge_label({e.lo, e.hi}));
  }
  add_edge_length_constraints(s, tri, base, images, heads);

  int max_loop = 0;
  int generator_count = 0;
  bool any_chained = false;
  for (VertexId v : tri.ideal_vertices()) {
    const CuspGenerators gens = cusp_generators(tri, v, base);
    const std::string cusp = "P" + std::to_string(v);
    const ComplexPolynomial p{var(s, cusp + "a0"), var(s, cusp + "a1")};
    const ComplexPolynomial q{var(s, cusp + "a2"), var(s, cusp + "a3")};
    s.add(Relation::EqualZero, p.norm() + q.norm() - Polynomial::constant(1), "cusp " + std::to_string(v) + " normalization");
    for (std::size_t g = 0; g < gens.loops.size(); ++g) {
      const SimplicialPath& loop = gens.loops[g].loop;
      const int length = static_cast<int>(loop.size());
      max_loop = std::max(max_loop, length);
      ++generator_count;
      const bool chained = options.trace_encoding == TraceEncoding::Chained ||
                           (options.trace_encoding == TraceEncoding::Auto && length > options.direct_trace_max_length);
      const std::string gen_label = "cusp " + std::to_string(v) + " gen " + std::to_string(g);
      ComplexMatrix value;
      if (chained) {
        any_chained = true;
        value = complex_matrix(s, tri, loop.front());
        for (int k = 1; k < length; ++k) {
          const ComplexMatrix next = multiply(value, complex_matrix(s, tri, loop[static_cast<std::size_t>(k)]));
          ComplexMatrix aux;
          const std::string prefix = "T" + std::to_string(v) + "g" + std::to_string(g) + "s" + std::to_string(k + 1);
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
              aux[i][j] = {var(s, prefix + rc(i, j) + "re"), var(s, prefix + rc(i, j) + "im")};
              add_complex_equality(s, aux[i][j] - next[i][j], gen_label + " step " + std::to_string(k + 1) + " " + rc(i, j));
            }
          value = aux;
        }
      } else {
        value = path_product(s, tri, loop);
      }
      const ComplexPolynomial tr = value[0][0] + value[1][1];
      ComplexPolynomial tr2 = tr * tr;
      tr2.re -= Polynomial::constant(4);
      add_complex_equality(s, tr2, gen_label + " trace^2 = 4");
      // [p : q] is fixed by [[a, b], [c, d]]  <=>  -c p^2 + (a - d) p q + b q^2 = 0
      const ComplexPolynomial fixed =
          (value[0][0] - value[1][1]) * p * q + value[0][1] * q * q - value[1][0] * p * p;
      add_complex_equality(s, fixed, gen_label + " fixes " + cusp);
    }
  }
  s.notes()["trace-encoding"] =
      options.trace_encoding == TraceEncoding::Auto ? std::string(any_chained ? "auto(chained)" : "auto(direct)")
                                                    : to_string(options.trace_encoding);
  s.notes()["cusp-generators"] = std::to_string(generator_count);
  s.notes()["max-loop-length"] = std::to_string(max_loop);
  add_ratio_notes(s, tri);
  return s;
}

}  // namespace

std::string to_string(TraceEncoding e) {
  switch (e) {
    case TraceEncoding::Auto: return "auto";
    case TraceEncoding::Direct: return "direct";
    case TraceEncoding::Chained: return "chained";
  }
  return "?";
}

TraceEncoding trace_encoding_from_string(const std::string& s) {
  if (s == "auto") return TraceEncoding::Auto;
  if (s == "direct") return TraceEncoding::Direct;
  if (s == "chained") return TraceEncoding::Chained;
  throw Error("unknown trace encoding '" + s + "' (expected auto, direct or chained)");
}

PolySystem build_lorentz_system(const Triangulation& tri) {
  PolySystem s;
  const int n = tri.dimension();
  const int size = n + 1;
  const BaseTree base(tri, default_basepoint(tri));
  s.notes()["group"] = "lorentz";
  s.notes()["basepoint"] = std::to_string(base.basepoint());
  const std::vector<Edge> edges = tri.non_ideal_edges();
  for (const Edge& e : edges) {
    lorentz_matrix(s, tri, {e.lo, e.hi});
    lorentz_matrix(s, tri, {e.hi, e.lo});
  }
  for (const Simplex& f : tri.non_ideal_triangles()) {
    const PolyMatrix lhs = multiply(lorentz_matrix(s, tri, {f[0], f[1]}), lorentz_matrix(s, tri, {f[1], f[2]}));
    const PolyMatrix c = lorentz_matrix(s, tri, {f[0], f[2]});
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) s.add(Relation::EqualZero, lhs[i][j] - c[i][j], "face " + face_label(f) + " " + rc(i, j));
  }
  for (const Edge& e : edges) {
    const PolyMatrix prod = multiply(lorentz_matrix(s, tri, {e.lo, e.hi}), lorentz_matrix(s, tri, {e.hi, e.lo}));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        s.add(Relation::EqualZero, prod[i][j] - Polynomial::constant(i == j ? 1 : 0),
              "inverse " + edge_name(e) + " " + rc(i, j));
      }
  }
  // M^T J M = J, upper triangle (the matrix is symmetric).
  for (const Edge& e : edges) {
    for (const OrientedEdge oe : {OrientedEdge{e.lo, e.hi}, OrientedEdge{e.hi, e.lo}}) {
      const PolyMatrix m = lorentz_matrix(s, tri, oe);
      for (int i = 0; i < size; ++i)
        for (int j = i; j < size; ++j) {
          Polynomial p;
          for (int k = 0; k < size; ++k) {
            if (k == n) p -= m[k][i] * m[k][j];
            else p += m[k][i] * m[k][j];
          }
          if (i == j) p -= Polynomial::constant(i == n ? -1 : 1);
          s.add(Relation::EqualZero, std::move(p), "member " + edge_label(oe) + " " + rc(i, j));
        }
    }
  }

  std::map<VertexId, PolyVector> images;
  images[base.basepoint()] = basepoint_vector(size);
  for (VertexId v = 0; v < tri.vertex_count(); ++v) {
    if (tri.is_ideal(v) || v == base.basepoint()) continue;
    images[v] = vertex_variables(s, "V" + std::to_string(v), size);
    const PolyVector image = path_image(s, tri, base.path_to(v), basepoint_vector(size));
    for (int i = 0; i < size; ++i) {
      s.add(Relation::EqualZero, images[v][i] - image[i], "vertex " + std::to_string(v) + " a" + std::to_string(i));
    }
  }
  std::map<Edge, PolyVector> heads;
  for (const Edge& e : edges) {
    if (base.is_tree_edge(e)) continue;
    const int k = edge_id(tri, {e.lo, e.hi});
    SimplicialPath path = base.path_to(e.lo);
    path.push_back({e.lo, e.hi});
    heads[e] = vertex_variables(s, "V" + std::to_string(e.hi) + "l" + std::to_string(k), size);
    const PolyVector image = path_image(s, tri, path, basepoint_vector(size));
    for (int i = 0; i < size; ++i) {
      s.add(Relation::EqualZero, heads[e][i] - image[i], "lift " + edge_label({e.lo, e.hi}) + " a" + std::to_string(i));
    }
  }
  add_edge_length_constraints(s, tri, base, images, heads);
  return s;
}

PolySystem build_closed_system(const Triangulation& tri, int n) {
  if (n != tri.dimension()) throw DimensionError("build_closed_system: triangulation has dimension " + std::to_string(tri.dimension()));
  if (!tri.closed()) throw DomainError("build_closed_system: triangulation has ideal vertices");
  return build_lorentz_system(tri);
}

PolySystem build_cusped_system(const Triangulation& tri, int n, const PolysysOptions& options) {
  if (n != tri.dimension()) throw DimensionError("build_cusped_system: triangulation has dimension " + std::to_string(tri.dimension()));
  if (n < 3) throw DomainError("build_cusped_system: n must be at least 3");
  if (n == 3) {
    if (tri.closed()) throw DomainError("build_cusped_system: n = 3 needs at least one ideal vertex");
    return build_sl2c_cusped_system(tri, options);
  }
  // Without ideal vertices the n >= 4 system is the closed one.
  PolySystem s = build_lorentz_system(tri);
  if (tri.closed()) return s;
  add_ratio_notes(s, tri);
  return s;
}

// ---------------------------------------------------------------- assignments

namespace {

using LMatrix = Matrix<long double>;
using CMatrix = Matrix2c<long double>;

BaseTree system_base(const PolySystem& system, const Triangulation& tri) {
  auto it = system.notes().find("basepoint");
  return BaseTree(tri, it == system.notes().end() ? default_basepoint(tri) : std::stoi(it->second));
}

void put_vector(std::map<std::string, long double>& out, const std::string& prefix, const Vector<long double>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) out[prefix + "a" + std::to_string(i)] = v(i);
}

long double minkowski(const Vector<long double>& x, const Vector<long double>& y) {
  const Eigen::Index last = x.size() - 1;
  return x.head(last).dot(y.head(last)) - x(last) * y(last);
}

Vector<long double> hermitian_image(const CMatrix& g) {
  const CMatrix x = g * g.adjoint();
  Vector<long double> v(4);
  v << x(1, 0).real(), x(1, 0).imag(), (x(0, 0).real() - x(1, 1).real()) / 2, (x(0, 0).real() + x(1, 1).real()) / 2;
  return v;
}

template <typename MatrixType, typename Image>
void put_developed(std::map<std::string, long double>& out, const Triangulation& tri, const BaseTree& base,
                   const Cocycle<MatrixType>& alpha, Image image) {
  std::map<VertexId, Vector<long double>> images;
  for (VertexId v = 0; v < tri.vertex_count(); ++v) {
    if (tri.is_ideal(v)) continue;
    images[v] = image(eval_path(alpha, base.path_to(v)));
    if (v != base.basepoint()) put_vector(out, "V" + std::to_string(v), images[v]);
  }
  for (const Edge& e : tri.non_ideal_edges()) {
    const int k = edge_id(tri, {e.lo, e.hi});
    Vector<long double> head = images[e.hi];
    if (!base.is_tree_edge(e)) {
      SimplicialPath path = base.path_to(e.lo);
      path.push_back({e.lo, e.hi});
      head = image(eval_path(alpha, path));
      put_vector(out, "V" + std::to_string(e.hi) + "l" + std::to_string(k), head);
    }
    out["C" + std::to_string(k)] = -minkowski(images[e.lo], head) - 1.0L;
  }
}

}  // namespace

std::map<std::string, long double> assignment_from_cocycle(const PolySystem& system, const Triangulation& tri,
                                                           const LorentzCocycle<double>& alpha) {
  std::map<std::string, long double> out;
  const BaseTree base = system_base(system, tri);
  const int size = alpha.size();
  LorentzCocycle<long double> wide(size);
  for (const auto& [e, m] : alpha.values()) wide.set({e.lo, e.hi}, m.cast<long double>());
  for (const Edge& e : tri.non_ideal_edges()) {
    const int k = edge_id(tri, {e.lo, e.hi});
    for (const OrientedEdge oe : {OrientedEdge{e.lo, e.hi}, OrientedEdge{e.hi, e.lo}}) {
      const LMatrix m = wide(oe);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) out[entry_name(k, orientation(oe), i, j)] = m(i, j);
    }
  }
  const Vector<long double> b = hyperboloid_basepoint<long double>(size - 1);
  put_developed(out, tri, base, wide, [&](const LMatrix& a) -> Vector<long double> { return a * b; });
  return out;
}

std::map<std::string, long double> assignment_from_cocycle(const PolySystem& system, const Triangulation& tri,
                                                           const Sl2cCocycle<double>& alpha) {
  std::map<std::string, long double> out;
  const BaseTree base = system_base(system, tri);
  Sl2cCocycle<long double> wide(2);
  for (const auto& [e, m] : alpha.values()) wide.set({e.lo, e.hi}, m.cast<std::complex<long double>>());
  for (const Edge& e : tri.non_ideal_edges()) {
    const int k = edge_id(tri, {e.lo, e.hi});
    for (const OrientedEdge oe : {OrientedEdge{e.lo, e.hi}, OrientedEdge{e.hi, e.lo}}) {
      const CMatrix m = wide(oe);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          out[entry_name(k, orientation(oe), i, j) + "re"] = m(i, j).real();
          out[entry_name(k, orientation(oe), i, j) + "im"] = m(i, j).imag();
        }
    }
  }
  put_developed(out, tri, base, wide, hermitian_image);

  for (VertexId v : tri.ideal_vertices()) {
    const CuspGenerators gens = cusp_generators(tri, v, base);
    std::optional<SpherePoint<long double>> fixed;
    for (std::size_t g = 0; g < gens.loops.size(); ++g) {
      const SimplicialPath& loop = gens.loops[g].loop;
      CMatrix value = wide(loop.front());
      for (std::size_t k = 1; k < loop.size(); ++k) {
        value = value * wide(loop[k]);
        const std::string prefix = "T" + std::to_string(v) + "g" + std::to_string(g) + "s" + std::to_string(k + 1);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            out[prefix + rc(i, j) + "re"] = value(i, j).real();
            out[prefix + rc(i, j) + "im"] = value(i, j).imag();
          }
      }
      if (!fixed && std::abs(value.determinant() - std::complex<long double>(1)) < 1e-6L) {
        const Sl2Classification<long double> c = classify_sl2<long double>(value, 1e-7L);
        if (c.kind == Sl2Kind::Parabolic) fixed = c.fixed_point;
      }
    }
    // Homogeneous coordinates [p : q] of the fixed point, normalised; any
    // point will do when every generator is trivial.
    std::complex<long double> p(1), q(0);
    if (fixed && !fixed->infinity) {
      p = fixed->z;
      q = 1;
    }
    const long double scale = std::sqrt(std::norm(p) + std::norm(q));
    p /= scale;
    q /= scale;
    const std::string cusp = "P" + std::to_string(v);
    out[cusp + "a0"] = p.real();
    out[cusp + "a1"] = p.imag();
    out[cusp + "a2"] = q.real();
    out[cusp + "a3"] = q.imag();
  }
  return out;
}

}  // namespace hyperbound
