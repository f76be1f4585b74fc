#include "hyperbound/triangulation.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hyperbound {

namespace {

std::string simplex_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void collect_faces(const Simplex& s, std::size_t k, std::size_t start, Simplex& current, std::vector<Simplex>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i + (k - current.size()) <= s.size(); ++i) {
    current.push_back(s[i]);
    collect_faces(s, k, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

SimplicialPath reverse_path(const SimplicialPath& path) {
  SimplicialPath out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(it->reversed());
  return out;
}

bool is_connected_path(const SimplicialPath& path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i].head != path[i + 1].tail) return false;
  }
  return std::all_of(path.begin(), path.end(), [](const OrientedEdge& e) { return e.tail != e.head; });
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::vector<Simplex> faces_of(const Simplex& simplex, std::size_t k) {
  std::vector<Simplex> out;
  Simplex current;
  collect_faces(simplex, k, 0, current, out);
  return out;
}

Triangulation::Triangulation(int dimension, int vertex_count, std::vector<VertexId> ideal,
                             std::vector<Simplex> simplices)
    : dimension_(dimension), vertex_count_(vertex_count), ideal_(std::move(ideal)), simplices_(std::move(simplices)) {
  if (dimension_ < 2) throw TriangulationError("dimension", "dimension must be at least 2");
  if (vertex_count_ < 1) throw TriangulationError("vertices", "vertex count must be positive");
  if (simplices_.empty()) throw TriangulationError("non-empty", "the complex has no top simplices");

  const auto width = static_cast<std::size_t>(dimension_) + 1;
  for (auto& s : simplices_) {
    if (s.size() != width) {
      throw TriangulationError("simplex-size", "simplex " + simplex_string(s) + " does not have " +
                                                   std::to_string(width) + " vertices");
    }
    for (VertexId v : s) {
      if (v < 0 || v >= vertex_count_) {
        throw TriangulationError("vertex-range", "simplex " + simplex_string(s) + " uses unknown vertex " +
                                                     std::to_string(v));
      }
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw TriangulationError("distinct-vertices", "simplex " + simplex_string(s) + " repeats a vertex");
    }
  }
  std::sort(simplices_.begin(), simplices_.end());
  if (auto dup = std::adjacent_find(simplices_.begin(), simplices_.end()); dup != simplices_.end()) {
    throw TriangulationError("duplicate-simplex", "simplex " + simplex_string(*dup) + " appears twice");
  }

  is_ideal_.assign(static_cast<std::size_t>(vertex_count_), false);
  std::sort(ideal_.begin(), ideal_.end());
  for (VertexId v : ideal_) {
    if (v < 0 || v >= vertex_count_) throw TriangulationError("ideal-range", "unknown ideal vertex " + std::to_string(v));
    if (is_ideal_[static_cast<std::size_t>(v)]) {
      throw TriangulationError("ideal-distinct", "ideal vertex " + std::to_string(v) + " listed twice");
    }
    is_ideal_[static_cast<std::size_t>(v)] = true;
  }
  for (const auto& s : simplices_) {
    const auto count = std::count_if(s.begin(), s.end(), [&](VertexId v) { return is_ideal(v); });
    if (count > 1) {
      throw TriangulationError("one-ideal-vertex", "simplex " + simplex_string(s) + " has " + std::to_string(count) +
                                                       " ideal vertices");
    }
  }

  // Closed pseudo-manifold: every codimension-one face bounds exactly two simplices.
  std::map<Simplex, int> facet_count;
  for (const auto& s : simplices_) {
    for (auto& f : faces_of(s, width - 1)) ++facet_count[f];
  }
  for (const auto& [face, count] : facet_count) {
    if (count != 2) {
      throw TriangulationError("face-pairing", "face " + simplex_string(face) + " lies in " + std::to_string(count) +
                                                   " top simplices (expected 2)");
    }
  }

  std::set<Edge> edge_set;
  std::set<Simplex> triangle_set;
  for (const auto& s : simplices_) {
    for (const auto& e : faces_of(s, 2)) edge_set.insert(Edge{e[0], e[1]});
    for (auto& f : faces_of(s, 3)) triangle_set.insert(std::move(f));
  }
  edges_.assign(edge_set.begin(), edge_set.end());
  triangles_.assign(triangle_set.begin(), triangle_set.end());

  neighbours_.assign(static_cast<std::size_t>(vertex_count_), {});
  for (const Edge& e : edges_) {
    neighbours_[static_cast<std::size_t>(e.lo)].push_back(e.hi);
    neighbours_[static_cast<std::size_t>(e.hi)].push_back(e.lo);
  }
  for (auto& nb : neighbours_) std::sort(nb.begin(), nb.end());

  std::vector<bool> seen(static_cast<std::size_t>(vertex_count_), false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : neighbours_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != static_cast<std::size_t>(vertex_count_)) {
    const auto missing = std::find(seen.begin(), seen.end(), false) - seen.begin();
    throw TriangulationError("connected", "1-skeleton is disconnected (vertex " + std::to_string(missing) +
                                              " unreachable from 0)");
  }
}

std::optional<std::size_t> Triangulation::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<Edge> Triangulation::non_ideal_edges() const {
  std::vector<Edge> out;
  std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(out), [&](Edge e) { return !is_ideal_edge(e); });
  return out;
}

std::vector<Simplex> Triangulation::non_ideal_triangles() const {
  std::vector<Simplex> out;
  std::copy_if(triangles_.begin(), triangles_.end(), std::back_inserter(out), [&](const Simplex& s) {
    return std::none_of(s.begin(), s.end(), [&](VertexId v) { return is_ideal(v); });
  });
  return out;
}

Triangulation parse_triangulation(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = line_column(text, offset);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(line, column, what);
  }
  const auto fail = [](const std::string& detail) -> ParseError { return ParseError(1, 1, detail); };
  if (!j.is_object()) throw fail("expected a JSON object");
  for (const char* key : {"format", "dimension", "vertices", "ideal", "simplices"}) {
    if (!j.contains(key)) throw fail(std::string("missing field '") + key + "'");
  }
  if (!j["format"].is_string() || j["format"].get<std::string>() != "tri-v1") {
    throw fail("field 'format' must be \"tri-v1\"");
  }
  if (!j["dimension"].is_number_integer()) throw fail("field 'dimension' must be an integer");
  if (!j["vertices"].is_number_integer()) throw fail("field 'vertices' must be an integer");
  if (!j["ideal"].is_array()) throw fail("field 'ideal' must be an array");
  if (!j["simplices"].is_array()) throw fail("field 'simplices' must be an array");

  std::vector<VertexId> ideal;
  for (const auto& v : j["ideal"]) {
    if (!v.is_number_integer()) throw fail("ideal vertex ids must be integers");
    ideal.push_back(v.get<VertexId>());
  }
  std::vector<Simplex> simplices;
  for (const auto& s : j["simplices"]) {
    if (!s.is_array()) throw fail("each simplex must be an array of vertex ids");
    Simplex simplex;
    for (const auto& v : s) {
      if (!v.is_number_integer()) throw fail("vertex ids must be integers");
      simplex.push_back(v.get<VertexId>());
    }
    simplices.push_back(std::move(simplex));
  }
  return Triangulation(j["dimension"].get<int>(), j["vertices"].get<int>(), std::move(ideal), std::move(simplices));
}

std::string serialize_triangulation(const Triangulation& tri) {
  std::ostringstream out;
  out << "{\n  \"format\": \"tri-v1\",\n  \"dimension\": " << tri.dimension() << ",\n  \"vertices\": "
      << tri.vertex_count() << ",\n  \"ideal\": " << simplex_string(tri.ideal_vertices()) << ",\n  \"simplices\": [\n";
  const auto& simplices = tri.simplices();
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    out << "    " << simplex_string(simplices[i]) << (i + 1 < simplices.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

Triangulation simplex_boundary(int n, std::vector<VertexId> ideal) {
  Simplex all(static_cast<std::size_t>(n) + 2);
  std::iota(all.begin(), all.end(), 0);
  return Triangulation(n, n + 2, std::move(ideal), faces_of(all, static_cast<std::size_t>(n) + 1));
}

Census census(const Triangulation& tri) {
  Census c;
  c.vertices = static_cast<std::size_t>(tri.vertex_count());
  c.edges = tri.edges().size();
  c.triangles = tri.triangles().size();
  c.top_simplices = tri.size();
  c.non_ideal_edges = tri.non_ideal_edges().size();
  c.non_ideal_triangles = tri.non_ideal_triangles().size();
  c.ideal_vertices = tri.ideal_vertices().size();
  const auto width = static_cast<std::size_t>(tri.dimension()) + 1;
  c.edge_bound = binomial(width, 2) * c.top_simplices;
  c.triangle_bound = binomial(width, 3) * c.top_simplices;
  if (c.edges > c.edge_bound) throw Error("census: edge count exceeds C(n+1,2) t");
  if (c.triangles > c.triangle_bound) throw Error("census: 2-face count exceeds C(n+1,3) t");
  return c;
}

StarLink star_link(const Triangulation& tri, VertexId v) {
  if (v < 0 || v >= tri.vertex_count()) throw DomainError("star_link: unknown vertex " + std::to_string(v));
  std::set<Simplex> star;
  for (const auto& s : tri.simplices()) {
    if (!std::binary_search(s.begin(), s.end(), v)) continue;
    for (std::size_t k = 1; k <= s.size(); ++k) {
      for (auto& f : faces_of(s, k)) star.insert(std::move(f));
    }
  }
  StarLink out;
  const auto by_size = [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };
  out.star.assign(star.begin(), star.end());
  std::sort(out.star.begin(), out.star.end(), by_size);
  std::copy_if(out.star.begin(), out.star.end(), std::back_inserter(out.link),
               [&](const Simplex& s) { return !std::binary_search(s.begin(), s.end(), v); });
  return out;
}

long euler_characteristic(const std::vector<Simplex>& complex) {
  long chi = 0;
  for (const auto& s : complex) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

BaseTree::BaseTree(const Triangulation& tri, VertexId basepoint) : basepoint_(basepoint) {
  if (basepoint < 0 || basepoint >= tri.vertex_count()) {
    throw DomainError("base_tree: unknown basepoint " + std::to_string(basepoint));
  }
  if (tri.is_ideal(basepoint)) throw DomainError("base_tree: basepoint " + std::to_string(basepoint) + " is ideal");
  const auto count = static_cast<std::size_t>(tri.vertex_count());
  parent_.assign(count, -1);
  depth_.assign(count, -1);
  depth_[static_cast<std::size_t>(basepoint)] = 0;
  std::deque<VertexId> queue{basepoint};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : tri.neighbours(v)) {
      if (tri.is_ideal(w) || depth_[static_cast<std::size_t>(w)] >= 0) continue;
      depth_[static_cast<std::size_t>(w)] = depth_[static_cast<std::size_t>(v)] + 1;
      parent_[static_cast<std::size_t>(w)] = v;
      queue.push_back(w);
    }
  }
  for (VertexId v = 0; v < tri.vertex_count(); ++v) {
    if (!tri.is_ideal(v) && depth_[static_cast<std::size_t>(v)] < 0) {
      throw TriangulationError("connected", "non-ideal 1-skeleton is disconnected (vertex " + std::to_string(v) +
                                                " unreachable from basepoint)");
    }
  }
}

SimplicialPath BaseTree::path_to(VertexId v) const {
  if (!contains(v)) throw DomainError("path_to: vertex " + std::to_string(v) + " is not in the base tree");
  SimplicialPath path;
  for (VertexId cur = v; cur != basepoint_; cur = parent(cur)) path.push_back({parent(cur), cur});
  std::reverse(path.begin(), path.end());
  return path;
}

VertexId default_basepoint(const Triangulation& tri) {
  for (VertexId v = 0; v < tri.vertex_count(); ++v) {
    if (!tri.is_ideal(v)) return v;
  }
  throw DomainError("default_basepoint: every vertex is ideal");
}

CuspGenerators cusp_generators(const Triangulation& tri, VertexId v, const BaseTree& base) {
  if (v < 0 || v >= tri.vertex_count() || !tri.is_ideal(v)) {
    throw DomainError("cusp_generators: vertex " + std::to_string(v) + " is not ideal");
  }
  const auto count = static_cast<std::size_t>(tri.vertex_count());
  const std::vector<VertexId>& link_vertices = tri.neighbours(v);

  // Link 1-skeleton: {a, b} such that {a, b, v} is a 2-face.
  std::vector<std::vector<VertexId>> link_adj(count);
  std::vector<Edge> link_edges;
  for (const auto& tri_face : tri.triangles()) {
    if (!std::binary_search(tri_face.begin(), tri_face.end(), v)) continue;
    Simplex rest;
    std::copy_if(tri_face.begin(), tri_face.end(), std::back_inserter(rest), [&](VertexId w) { return w != v; });
    link_edges.push_back({rest[0], rest[1]});
    link_adj[static_cast<std::size_t>(rest[0])].push_back(rest[1]);
    link_adj[static_cast<std::size_t>(rest[1])].push_back(rest[0]);
  }
  for (auto& adj : link_adj) std::sort(adj.begin(), adj.end());
  std::sort(link_edges.begin(), link_edges.end());

  CuspGenerators out;
  out.ideal_vertex = v;
  // Nearest link vertex to the basepoint; its tree path meets the link only
  // at its end, so connector + link tree is again a tree.
  out.link_root = *std::min_element(link_vertices.begin(), link_vertices.end(), [&](VertexId a, VertexId b) {
    return base.depth(a) != base.depth(b) ? base.depth(a) < base.depth(b) : a < b;
  });
  out.connector = base.path_to(out.link_root);
  out.into_ideal = {link_vertices.front(), v};

  out.link_parent.assign(count, -1);
  std::vector<bool> seen(count, false);
  seen[static_cast<std::size_t>(out.link_root)] = true;
  std::deque<VertexId> queue{out.link_root};
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId a = queue.front();
    queue.pop_front();
    for (VertexId b : link_adj[static_cast<std::size_t>(a)]) {
      if (seen[static_cast<std::size_t>(b)]) continue;
      seen[static_cast<std::size_t>(b)] = true;
      out.link_parent[static_cast<std::size_t>(b)] = a;
      ++reached;
      queue.push_back(b);
    }
  }
  if (reached != link_vertices.size()) {
    throw TriangulationError("link-connected", "link of ideal vertex " + std::to_string(v) + " is disconnected");
  }

  const auto tree_path_from_root = [&](VertexId target) {
    SimplicialPath path;
    for (VertexId cur = target; cur != out.link_root; cur = out.link_parent[static_cast<std::size_t>(cur)]) {
      path.push_back({out.link_parent[static_cast<std::size_t>(cur)], cur});
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  const SimplicialPath connector_back = reverse_path(out.connector);
  for (const Edge& e : link_edges) {
    if (out.link_parent[static_cast<std::size_t>(e.lo)] == e.hi || out.link_parent[static_cast<std::size_t>(e.hi)] == e.lo) {
      continue;
    }
    CuspLoop loop;
    loop.extra_edge = {e.lo, e.hi};
    loop.loop = out.connector;
    const SimplicialPath to_a = tree_path_from_root(e.lo);
    const SimplicialPath from_b = reverse_path(tree_path_from_root(e.hi));
    loop.loop.insert(loop.loop.end(), to_a.begin(), to_a.end());
    loop.loop.push_back(loop.extra_edge);
    loop.loop.insert(loop.loop.end(), from_b.begin(), from_b.end());
    loop.loop.insert(loop.loop.end(), connector_back.begin(), connector_back.end());
    out.loops.push_back(std::move(loop));
  }
  return out;
}

}  // namespace hyperbound
