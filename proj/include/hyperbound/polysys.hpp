#pragma once

// Polynomial systems whose real solutions are cocycles (with developed
// vertex positions and edge-length variables) on a triangulation:
//   closed:          SO(n,1), all edges and 2-faces
//   cusped, n >= 4:  SO(n,1), non-ideal edges and 2-faces only
//   cusped, n == 3:  SL(2,C) realified, plus trace and fixed-point
//                    conditions on every cusp generator.
//
// Vertex images are tied to base-tree paths from the lowest non-ideal vertex.

#include "hyperbound/cocycle.hpp"
#include "hyperbound/polynomial.hpp"
#include "hyperbound/triangulation.hpp"

#include <map>
#include <string>

namespace hyperbound {

enum class TraceEncoding {
  /// Direct for loops up to `direct_trace_max_length` edges, chained beyond.
  Auto,
  /// tr(alpha(gamma))^2 - 4 expanded in the edge variables (degree 2L).
  Direct,
  /// Auxiliary partial products T_k = T_{k-1} alpha(e_k); the trace and
  /// fixed-point relations stay of degree at most 3 whatever the loop length.
  Chained,
};

std::string to_string(TraceEncoding e);
TraceEncoding trace_encoding_from_string(const std::string& s);

struct PolysysOptions {
  TraceEncoding trace_encoding = TraceEncoding::Auto;
  int direct_trace_max_length = 4;
};

/// Face, inverse and Lorentz-membership relations on the non-ideal part of
/// `tri`, vertex and lift coordinates along base-tree paths, and one C > 0
/// per non-ideal edge.
PolySystem build_lorentz_system(const Triangulation& tri);

/// Requires a closed triangulation of dimension n.
PolySystem build_closed_system(const Triangulation& tri, int n);

/// n == 3 takes the SL(2,C) path and needs an ideal vertex; for n >= 4 a
/// closed input yields exactly the closed system.
PolySystem build_cusped_system(const Triangulation& tri, int n, const PolysysOptions& options = {});

/// The values a cocycle induces on every variable of the matching system:
/// edge matrices (both orientations), developed coordinates, C = cosh(l) - 1.
std::map<std::string, long double> assignment_from_cocycle(const PolySystem& system, const Triangulation& tri,
                                                           const LorentzCocycle<double>& alpha);
std::map<std::string, long double> assignment_from_cocycle(const PolySystem& system, const Triangulation& tri,
                                                           const Sl2cCocycle<double>& alpha);

}  // namespace hyperbound
