#pragma once

// Simplicial (semi-ideal) triangulations: the tri-v1 file format, counts,
// stars and links, breadth-first base trees and cusp generator loops.

#include "hyperbound/core.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperbound {

using VertexId = int;
/// Strictly increasing vertex ids.
using Simplex = std::vector<VertexId>;

/// Unordered edge stored with lo < hi.
struct Edge {
  VertexId lo = 0;
  VertexId hi = 0;
  auto operator<=>(const Edge&) const = default;
};

struct OrientedEdge {
  VertexId tail = 0;
  VertexId head = 0;
  OrientedEdge reversed() const { return {head, tail}; }
  Edge unoriented() const { return tail < head ? Edge{tail, head} : Edge{head, tail}; }
  auto operator<=>(const OrientedEdge&) const = default;
};

/// Consecutive edges share endpoints: head(i) == tail(i + 1).
using SimplicialPath = std::vector<OrientedEdge>;

/// Inverse path: reversed order, each edge reversed.
SimplicialPath reverse_path(const SimplicialPath& path);
bool is_connected_path(const SimplicialPath& path);

/// A triangulation failed one of the structural checks. `check` names it.
class TriangulationError : public DomainError {
 public:
  TriangulationError(std::string check, const std::string& detail)
      : DomainError(check + ": " + detail), check_(std::move(check)) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

/// Converts a byte offset into 1-based (line, column).
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset);

class Triangulation {
 public:
  /// Validates and canonicalises: tuples are sorted, simplices ordered
  /// lexicographically. Throws TriangulationError naming the failed check.
  Triangulation(int dimension, int vertex_count, std::vector<VertexId> ideal, std::vector<Simplex> simplices);

  int dimension() const { return dimension_; }
  int vertex_count() const { return vertex_count_; }
  /// Number of top simplices t.
  std::size_t size() const { return simplices_.size(); }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  const std::vector<VertexId>& ideal_vertices() const { return ideal_; }
  bool is_ideal(VertexId v) const { return is_ideal_.at(static_cast<std::size_t>(v)); }
  bool closed() const { return ideal_.empty(); }

  /// All edges, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  /// All 2-faces, sorted.
  const std::vector<Simplex>& triangles() const { return triangles_; }
  std::optional<std::size_t> edge_index(Edge e) const;
  bool has_edge(VertexId a, VertexId b) const { return edge_index(OrientedEdge{a, b}.unoriented()).has_value(); }

  bool is_ideal_edge(Edge e) const { return is_ideal(e.lo) || is_ideal(e.hi); }
  /// Edges and 2-faces with no ideal vertex, sorted.
  std::vector<Edge> non_ideal_edges() const;
  std::vector<Simplex> non_ideal_triangles() const;
  /// Vertices adjacent to v, ascending.
  const std::vector<VertexId>& neighbours(VertexId v) const { return neighbours_.at(static_cast<std::size_t>(v)); }

  bool operator==(const Triangulation& other) const {
    return dimension_ == other.dimension_ && vertex_count_ == other.vertex_count_ && ideal_ == other.ideal_ &&
           simplices_ == other.simplices_;
  }

 private:
  int dimension_;
  int vertex_count_;
  std::vector<VertexId> ideal_;
  std::vector<bool> is_ideal_;
  std::vector<Simplex> simplices_;
  std::vector<Edge> edges_;
  std::vector<Simplex> triangles_;
  std::vector<std::vector<VertexId>> neighbours_;
};

/// Parses the tri-v1 text format:
///   {"format": "tri-v1", "dimension": n, "vertices": V, "ideal": [...],
///    "simplices": [[v0, ..., vn], ...]}
Triangulation parse_triangulation(std::string_view text);

/// Canonical tri-v1 text; parse(serialize(T)) == T and serialisation is a
/// fixed point.
std::string serialize_triangulation(const Triangulation& tri);

/// Boundary of the (n+1)-simplex on vertices 0..n+1: n+2 top simplices.
Triangulation simplex_boundary(int n, std::vector<VertexId> ideal = {});

/// All k-vertex faces of a simplex, lexicographic.
std::vector<Simplex> faces_of(const Simplex& simplex, std::size_t k);

struct Census {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t triangles = 0;
  std::size_t top_simplices = 0;
  std::size_t non_ideal_edges = 0;
  std::size_t non_ideal_triangles = 0;
  std::size_t ideal_vertices = 0;
  /// C(n+1, 2) t and C(n+1, 3) t.
  std::size_t edge_bound = 0;
  std::size_t triangle_bound = 0;
};

/// Counts, with edges <= C(n+1,2) t and 2-faces <= C(n+1,3) t checked.
Census census(const Triangulation& tri);

struct StarLink {
  /// Every face (all dimensions) of every top simplex containing v.
  std::vector<Simplex> star;
  /// Members of the star not containing v.
  std::vector<Simplex> link;
};

StarLink star_link(const Triangulation& tri, VertexId v);

/// Alternating count of faces by dimension.
long euler_characteristic(const std::vector<Simplex>& complex);

/// Breadth-first spanning tree of the non-ideal 1-skeleton, neighbours
/// visited in ascending order.
class BaseTree {
 public:
  BaseTree(const Triangulation& tri, VertexId basepoint);

  VertexId basepoint() const { return basepoint_; }
  /// -1 for the basepoint and for ideal vertices.
  VertexId parent(VertexId v) const { return parent_.at(static_cast<std::size_t>(v)); }
  int depth(VertexId v) const { return depth_.at(static_cast<std::size_t>(v)); }
  bool contains(VertexId v) const { return depth(v) >= 0; }
  bool is_tree_edge(Edge e) const { return parent(e.lo) == e.hi || parent(e.hi) == e.lo; }
  /// Unique tree path from the basepoint to v.
  SimplicialPath path_to(VertexId v) const;
  const std::vector<VertexId>& parents() const { return parent_; }

 private:
  VertexId basepoint_;
  std::vector<VertexId> parent_;
  std::vector<int> depth_;
};

/// Lowest-numbered non-ideal vertex.
VertexId default_basepoint(const Triangulation& tri);

struct CuspLoop {
  /// The link edge outside the link spanning tree, oriented lo -> hi.
  OrientedEdge extra_edge;
  /// delta . (tree path w -> a) . (a -> b) . (tree path b -> w) . delta^{-1}
  SimplicialPath loop;
};

struct CuspGenerators {
  VertexId ideal_vertex = 0;
  /// Connector delta from the basepoint to the link root w.
  SimplicialPath connector;
  VertexId link_root = 0;
  /// Parent map of the link spanning tree (-1 at the root and off the link).
  std::vector<VertexId> link_parent;
  /// The edge of the tree Gamma_i that ends at the ideal vertex.
  OrientedEdge into_ideal;
  std::vector<CuspLoop> loops;
};

/// Generators of the cusp group at ideal vertex v, based at the base tree's
/// basepoint. Choices (link root, connector, tree) are lexicographically least.
CuspGenerators cusp_generators(const Triangulation& tri, VertexId v, const BaseTree& base);

}  // namespace hyperbound
