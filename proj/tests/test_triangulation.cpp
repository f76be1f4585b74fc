#include "hyperbound/triangulation.hpp"

#include "support/complexes.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hyperbound;

namespace {

std::string check_of(int n, int v, std::vector<VertexId> ideal, std::vector<Simplex> simplices) {
  try {
    Triangulation(n, v, std::move(ideal), std::move(simplices));
  } catch (const TriangulationError& e) {
    return e.check();
  }
  return "";
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("boundary of the 4-simplex") {
  const Triangulation tri = simplex_boundary(3);
  CHECK(tri.size() == 5);
  CHECK(tri.closed());
  const Census c = census(tri);
  CHECK(c.vertices == 5);
  CHECK(c.edges == 10);
  CHECK(c.triangles == 10);
  CHECK(c.top_simplices == 5);
  CHECK(c.edge_bound == 30);
  const Triangulation semi = simplex_boundary(3, {0});
  CHECK_FALSE(semi.closed());
  CHECK(census(semi).non_ideal_edges == 6);
  CHECK(census(semi).ideal_vertices == 1);
}

TEST_CASE("structural checks name what failed") {
  CHECK(check_of(3, 4, {}, {{0, 1, 2, 3}}) == "face-pairing");
  CHECK(check_of(3, 5, {}, {}) == "non-empty");
  CHECK(check_of(1, 2, {}, {{0, 1}}) == "dimension");
  CHECK(check_of(3, 5, {}, {{0, 1, 2}}) == "simplex-size");
  CHECK(check_of(3, 5, {}, {{0, 1, 2, 7}}) == "vertex-range");
  CHECK(check_of(3, 5, {}, {{0, 1, 1, 2}}) == "distinct-vertices");
  auto s = simplex_boundary(3).simplices();
  s.push_back(s.front());
  CHECK(check_of(3, 5, {}, s) == "duplicate-simplex");
  CHECK(check_of(3, 5, {9}, simplex_boundary(3).simplices()) == "ideal-range");
  // every top simplex of the boundary of the 4-simplex meets {0, 1} twice or more
  CHECK(check_of(3, 5, {0, 1}, simplex_boundary(3).simplices()) == "one-ideal-vertex");
  // two disjoint spheres
  const Triangulation sphere = simplex_boundary(3);
  std::vector<Simplex> two = sphere.simplices();
  for (Simplex x : sphere.simplices()) {
    for (auto& v : x) v += 5;
    two.push_back(x);
  }
  CHECK(check_of(3, 10, {}, two) == "connected");
}

TEST_CASE("parse and serialize") {
  const std::string text =
      R"({"format": "tri-v1", "dimension": 3, "vertices": 5, "ideal": [],
          "simplices": [[1,2,3,4],[0,2,3,4],[0,1,3,4],[0,1,2,4],[0,1,2,3]]})";
  const Triangulation tri = parse_triangulation(text);
  CHECK(tri == simplex_boundary(3));
  const std::string canonical = serialize_triangulation(tri);
  CHECK(serialize_triangulation(parse_triangulation(canonical)) == canonical);
  CHECK_THROWS_AS(parse_triangulation(R"({"format": "tri-v2"})"), ParseError);
  CHECK_THROWS_AS(parse_triangulation(R"({"format": "tri-v1", "dimension": "3"})"), ParseError);
  try {
    parse_triangulation("{\n  \"format\": \"tri-v1\",\n  \"dimension\": 3,,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_triangulation(R"({"format": "tri-v1", "dimension": 3, "vertices": 4, "ideal": [],
                                          "simplices": [[0,1,2,3]]})"),
                  TriangulationError);
}

TEST_CASE("round trip is a fixed point on random complexes") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng = trial_rng(41, i);
    const int n = 3 + static_cast<int>(i % 2);
    const Triangulation tri = testing::random_closed_complex(rng, n, 1 + static_cast<int>(i % 6));
    const std::string text = serialize_triangulation(tri);
    const Triangulation back = parse_triangulation(text);
    CHECK(back == tri);
    CHECK(serialize_triangulation(back) == text);
  }
}

TEST_CASE("census bounds hold on random complexes") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng = trial_rng(42, i);
    const int n = 3 + static_cast<int>(i % 3);
    const Triangulation tri = testing::random_closed_complex(rng, n, static_cast<int>(i % 8));
    const Census c = census(tri);
    const auto n1 = static_cast<std::size_t>(n + 1);
    CHECK(c.edges <= binomial(n1, 2) * c.top_simplices);
    CHECK(c.triangles <= binomial(n1, 3) * c.top_simplices);
  }
}

TEST_CASE("star and link") {
  const Triangulation tri = simplex_boundary(3);
  const StarLink sl = star_link(tri, 0);
  const auto tets = std::count_if(sl.star.begin(), sl.star.end(), [](const Simplex& s) { return s.size() == 4; });
  CHECK(tets == 4);
  std::vector<Simplex> expected;
  for (std::size_t k = 1; k <= 3; ++k)
    for (const Simplex& f : faces_of({1, 2, 3, 4}, k)) expected.push_back(f);
  std::vector<Simplex> link = sl.link;
  std::sort(link.begin(), link.end());
  std::sort(expected.begin(), expected.end());
  CHECK(link == expected);
  CHECK(euler_characteristic(sl.link) == 2);
  for (const Simplex& s : sl.link) {
    CHECK(std::find(sl.star.begin(), sl.star.end(), s) != sl.star.end());
  }
}

TEST_CASE("vertex links of closed 3-complexes are spheres") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = trial_rng(43, i);
    const Triangulation tri = testing::random_closed_complex(rng, 3, 1 + static_cast<int>(i % 5));
    for (VertexId v = 0; v < tri.vertex_count(); ++v) {
      const StarLink sl = star_link(tri, v);
      CHECK(euler_characteristic(sl.link) == 2);
      // duality: the link is exactly the star members avoiding v
      std::vector<Simplex> recomputed;
      for (const Simplex& s : sl.star)
        if (std::find(s.begin(), s.end(), v) == s.end()) recomputed.push_back(s);
      CHECK(recomputed == sl.link);
    }
  }
}

TEST_CASE("base tree") {
  const Triangulation tri = simplex_boundary(3);
  const BaseTree base(tri, 0);
  CHECK(base.path_to(0).empty());
  for (VertexId v = 1; v < 5; ++v) CHECK(base.path_to(v).size() == 1);
  for (std::uint64_t i = 0; i < 30; ++i) {
    Rng rng = trial_rng(44, i);
    const Triangulation t = testing::random_closed_complex(rng, 3, 1 + static_cast<int>(i % 7));
    const BaseTree a(t, 0);
    const BaseTree b(t, 0);
    CHECK(a.parents() == b.parents());
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
      const SimplicialPath p = a.path_to(v);
      CHECK(is_connected_path(p));
      CHECK(p.size() <= census(t).edge_bound);
      if (!p.empty()) {
        CHECK(p.front().tail == 0);
        CHECK(p.back().head == v);
      }
    }
  }
}

TEST_CASE("cusp generators of the boundary of the 4-simplex") {
  const Triangulation tri = simplex_boundary(3, {0});
  const BaseTree base(tri, default_basepoint(tri));
  CHECK(base.basepoint() == 1);
  const CuspGenerators g = cusp_generators(tri, 0, base);
  CHECK(g.ideal_vertex == 0);
  CHECK(g.loops.size() == 3);
  for (const CuspLoop& loop : g.loops) {
    CHECK(is_connected_path(loop.loop));
    CHECK(loop.loop.front().tail == base.basepoint());
    CHECK(loop.loop.back().head == base.basepoint());
    CHECK(loop.loop.size() <= 6 * tri.size());
  }
}

TEST_CASE("cusp generators on random semi-ideal complexes") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    Rng rng = trial_rng(45, i);
    const Triangulation closed = testing::random_closed_complex(rng, 3, 1 + static_cast<int>(i % 6));
    // the last stellar vertex sits in simplices of its own
    const Triangulation tri = testing::with_ideal(closed, {closed.vertex_count() - 1});
    const BaseTree base(tri, default_basepoint(tri));
    const CuspGenerators g = cusp_generators(tri, tri.vertex_count() - 1, base);
    // link is a 2-sphere with E edges and V vertices: E - (V - 1) loops
    const StarLink sl = star_link(tri, tri.vertex_count() - 1);
    std::size_t edges = 0;
    std::size_t vertices = 0;
    for (const Simplex& s : sl.link) {
      edges += s.size() == 2;
      vertices += s.size() == 1;
    }
    CHECK(g.loops.size() == edges - (vertices - 1));
    for (const CuspLoop& loop : g.loops) {
      CHECK(loop.loop.front().tail == base.basepoint());
      CHECK(loop.loop.back().head == base.basepoint());
      CHECK(loop.loop.size() <= 6 * tri.size());
    }
  }
}

TEST_CASE("paths") {
  const SimplicialPath p{{0, 1}, {1, 2}};
  CHECK(is_connected_path(p));
  CHECK(reverse_path(p) == SimplicialPath{{2, 1}, {1, 0}});
  CHECK_FALSE(is_connected_path({{0, 1}, {2, 3}}));
}
