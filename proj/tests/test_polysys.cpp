#include "hyperbound/polysys.hpp"

#include "support/complexes.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace hyperbound;

namespace {

PolySystem x_squared_minus_one() {
  PolySystem s;
  const Polynomial x = Polynomial::variable(s.variable("x"));
  s.add(Relation::EqualZero, x * x - Polynomial::constant(1), "eq");
  return s;
}

/// A small random system over a few named variables.
PolySystem random_system(Rng& rng) {
  PolySystem s;
  const int vars = 1 + static_cast<int>(rng() % 5);
  for (int v = 0; v < vars; ++v) s.variable("x" + std::to_string(v));
  const int count = 1 + static_cast<int>(rng() % 6);
  for (int k = 0; k < count; ++k) {
    Polynomial p;
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      for (int v = 0; v < vars; ++v) {
        const int e = static_cast<int>(rng() % 3);
        if (e > 0) m.push_back({static_cast<VariableId>(v), e});
      }
      p.add_term(m, static_cast<Coefficient>(rng() % 2001) - 1000);
    }
    const Relation r = static_cast<Relation>(rng() % 3);
    s.add(r, p, k % 2 ? "c" + std::to_string(k) : "");
  }
  s.notes()["seeded"] = "yes";
  return s;
}

bool mentions(const Constraint& c, VariableId v) {
  const auto vars = c.polynomial.variables();
  return std::find(vars.begin(), vars.end(), v) != vars.end();
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial x = Polynomial::variable(0);
  const Polynomial y = Polynomial::variable(1);
  const Polynomial p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(p.evaluate({3, 2}) == 5);
  CHECK(monomial_product({{0, 1}}, {{0, 2}, {1, 1}}) == Monomial{{0, 3}, {1, 1}});
  CHECK(total_degree({{0, 3}, {1, 1}}) == 4);
  // l(c) = log2(|c| + 2)
  CHECK((7 * x).max_length() == doctest::Approx(std::log2(9.0)));
  CHECK(Polynomial::constant(0).is_zero());
  const Polynomial big = Polynomial::constant(std::numeric_limits<Coefficient>::max());
  CHECK_THROWS_AS(big + Polynomial::constant(1), CoefficientOverflow);
  CHECK_THROWS_AS(big * Polynomial::constant(2), CoefficientOverflow);
}

TEST_CASE("complex polynomials use i^2 = -1") {
  // (x + i y)^2 = x^2 - y^2 + 2 i x y
  const ComplexPolynomial z{Polynomial::variable(0), Polynomial::variable(1)};
  const ComplexPolynomial sq = z * z;
  CHECK(sq.re.evaluate({2, 3}) == -5);
  CHECK(sq.im.evaluate({2, 3}) == 12);
  CHECK(z.norm().evaluate({2, 3}) == 13);
  CHECK((z * z.conj()).im.is_zero());
}

TEST_CASE("complexity profile examples") {
  const ComplexityProfile empty = complexity_profile(PolySystem{});
  CHECK(empty.N == 0);
  CHECK(empty.kappa == 0);
  CHECK(empty.d == 0);
  CHECK(empty.M == 0.0);
  const ComplexityProfile p = complexity_profile(x_squared_minus_one());
  CHECK(p.N == 1);
  CHECK(p.kappa == 1);
  CHECK(p.d == 2);
  // mpmath: log2 3
  CHECK(p.M == doctest::Approx(1.5849625007211561815).epsilon(1e-15));
  const PolySystem expanded = expand_equalities(x_squared_minus_one());
  CHECK(complexity_profile(expanded).kappa == 2);
  CHECK(expanded.constraints()[0].relation == Relation::NonNegative);
  CHECK(expanded.constraints()[1].polynomial == -x_squared_minus_one().constraints()[0].polynomial);
}

TEST_CASE("text and JSON emitters") {
  const PolySystem s = x_squared_minus_one();
  CHECK(render_polynomial(s, s.constraints()[0].polynomial) == "+1*x^2 -1");
  const std::string text = emit_text(s);
  CHECK(text.find("REL eq: +1*x^2 -1") != std::string::npos);
  CHECK(text.find("VAR x\n") != std::string::npos);
  CHECK(parse_text(text) == s);
  CHECK(parse_json(nlohmann::json::parse(emit(s, EmitFormat::Json))) == s);
  CHECK_THROWS_AS(parse_text("VAR x\nREL eq: 1*x\n"), ParseError);
  try {
    parse_text("VAR x\nVAR y\nBOGUS\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_text("VAR x\nREL eq: +1*x^0\n"), ParseError);
}

TEST_CASE("emit and parse round trip on random systems") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = trial_rng(81, i);
    const PolySystem s = random_system(rng);
    const std::string text = emit_text(s);
    const PolySystem back = parse_text(text);
    CHECK(emit_text(back) == text);
    const std::string json = emit(s, EmitFormat::Json);
    CHECK(emit(parse_json(nlohmann::json::parse(json)), EmitFormat::Json) == json);
    const ComplexityProfile a = complexity_profile(s);
    const ComplexityProfile b = complexity_profile(back);
    CHECK(a.N == b.N);
    CHECK(a.kappa == b.kappa);
    CHECK(a.d == b.d);
    CHECK(a.M == b.M);
  }
}

TEST_CASE("variable names carry their role") {
  const VariableInfo e = classify_variable_name("E7o1r2c3im");
  CHECK(e.role == VariableRole::EdgeEntry);
  CHECK(e.edge == 7);
  CHECK(e.orientation == 1);
  CHECK(e.row == 2);
  CHECK(e.col == 3);
  CHECK(e.part == 1);
  CHECK(classify_variable_name("V3a2").role == VariableRole::VertexCoordinate);
  const VariableInfo lift = classify_variable_name("V3l5a1");
  CHECK(lift.role == VariableRole::LiftCoordinate);
  CHECK(lift.edge == 5);
  CHECK(classify_variable_name("C4").role == VariableRole::CVariable);
  CHECK(classify_variable_name("P0a3").role == VariableRole::CuspFixedPoint);
  CHECK(classify_variable_name("T0g1s2r0c0re").role == VariableRole::Auxiliary);
  CHECK(classify_variable_name("x").role == VariableRole::Auxiliary);
}

TEST_CASE("closed system on the boundary of the 4-simplex") {
  const Triangulation tri = simplex_boundary(3);
  const PolySystem s = build_closed_system(tri, 3);
  std::map<VariableRole, std::size_t> roles;
  for (const auto& v : s.variables()) ++roles[v.role];
  CHECK(roles[VariableRole::EdgeEntry] == 320);
  CHECK(roles[VariableRole::VertexCoordinate] == 16);
  CHECK(roles[VariableRole::LiftCoordinate] == 24);
  CHECK(roles[VariableRole::CVariable] == 10);
  std::map<std::string, std::size_t> kinds;
  for (const auto& c : s.constraints()) ++kinds[c.label.substr(0, c.label.find(' '))];
  CHECK(kinds["face"] == 160);
  CHECK(kinds["inverse"] == 160);
  CHECK(kinds["member"] == 200);
  const ComplexityProfile p = complexity_profile(s);
  CHECK(p.N == 370);
  CHECK(p.kappa == 580);
  CHECK(p.d == 2);
  CHECK(p.M == doctest::Approx(std::log2(3.0)));
  CHECK(emit_text(build_closed_system(tri, 3)) == emit_text(s));
  CHECK_THROWS_AS(build_closed_system(tri, 4), DimensionError);
  CHECK_THROWS_AS(build_closed_system(simplex_boundary(3, {0}), 3), DomainError);
}

TEST_CASE("profile bounds on random closed inputs") {
  for (std::uint64_t i = 0; i < 6; ++i) {
    Rng rng = trial_rng(82, i);
    const int n = 3 + static_cast<int>(i % 2);
    const Triangulation tri = testing::random_closed_complex(rng, n, 1 + static_cast<int>(i));
    const ComplexityProfile p = complexity_profile(build_closed_system(tri, n));
    const double t = static_cast<double>(tri.size());
    CHECK(static_cast<double>(p.N) <= std::pow(n + 2, 4) * t);
    CHECK(static_cast<double>(p.kappa) <= std::pow(n + 2, 5) * t);
    CHECK(p.d <= (n + 1) * (n + 1) * static_cast<int>(tri.size()));
    CHECK(p.M <= 2.0);
  }
}

TEST_CASE("coboundary assignments satisfy the closed system") {
  for (std::uint64_t i = 0; i < 8; ++i) {
    Rng rng = trial_rng(83, i);
    const int n = 3 + static_cast<int>(i % 2);
    const Triangulation tri =
        i < 2 ? simplex_boundary(n) : testing::random_closed_complex(rng, n, static_cast<int>(i));
    const PolySystem s = build_closed_system(tri, n);
    const auto alpha = coboundary(tri, testing::random_lorentz_family<double>(rng, n, tri.vertex_count(), 0));
    const auto values = assignment_from_cocycle(s, tri, alpha);
    const ResidualReport r = eval_residuals(s, values);
    CHECK(r.max_equality_residual <= 1e-7L);
    const auto dev = develop(tri, alpha, BaseTree(tri, default_basepoint(tri)));
    for (const auto& [e, c] : dev.edge_cosh_minus_one) {
      const std::string name = "C" + std::to_string(*tri.edge_index(e));
      CHECK(std::abs(static_cast<double>(values.at(name)) - std::cosh(dev.edge_lengths.at(e)) + 1) <= 1e-7);
      CHECK(std::abs(static_cast<double>(values.at(name)) - c) <= 1e-7);
    }
    // generic vertex images are distinct, so every edge has positive length
    CHECK(r.ok);
  }
}

TEST_CASE("the trivial cocycle fails exactly the positivity constraints") {
  const Triangulation tri = simplex_boundary(3);
  const PolySystem s = build_closed_system(tri, 3);
  const auto values = assignment_from_cocycle(s, tri, trivial_cocycle<Matrix<double>>(tri, 4));
  const ResidualReport r = eval_residuals(s, values);
  CHECK_FALSE(r.ok);
  CHECK(r.max_equality_residual == 0);
  CHECK(r.violated.size() == 10);
  for (std::size_t k : r.violated) CHECK(s.constraints()[k].relation == Relation::StrictPositive);
  REQUIRE(r.worst_strict);
  CHECK(r.min_strict_value == 0);
}

TEST_CASE("a perturbed assignment names the broken constraint") {
  const Triangulation tri = simplex_boundary(3);
  const PolySystem s = build_closed_system(tri, 3);
  Rng rng = trial_rng(84, 0);
  auto values = assignment_from_cocycle(s, tri, coboundary(tri, testing::random_lorentz_family<double>(rng, 3, 5, 0)));
  values.at("E4o0r1c2") += 1e-3L;
  const ResidualReport r = eval_residuals(s, values);
  CHECK_FALSE(r.ok);
  CHECK(r.max_equality_residual > 1e-5L);
  REQUIRE(r.worst_equality);
  CHECK(mentions(s.constraints()[*r.worst_equality], *s.find("E4o0r1c2")));
  for (std::size_t k : r.violated) CHECK(mentions(s.constraints()[k], *s.find("E4o0r1c2")));
  values.erase("V1a0");
  CHECK_THROWS_AS(eval_residuals(s, values), Error);
}

TEST_CASE("cusped systems") {
  // n >= 4 on a closed input is the closed system
  const Triangulation closed4 = simplex_boundary(4);
  CHECK(emit_text(build_cusped_system(closed4, 4)) == emit_text(build_closed_system(closed4, 4)));
  CHECK_THROWS_AS(build_cusped_system(simplex_boundary(3), 3), DomainError);
  CHECK_THROWS_AS(build_cusped_system(closed4, 3), DimensionError);
  // n >= 4 semi-ideal: only the non-ideal part
  const Triangulation semi4 = simplex_boundary(4, {0});
  const PolySystem s4 = build_cusped_system(semi4, 4);
  for (const auto& v : s4.variables()) {
    if (v.role != VariableRole::CVariable) continue;
    const Edge e = semi4.edges()[static_cast<std::size_t>(v.edge)];
    CHECK_FALSE(semi4.is_ideal_edge(e));
  }
  CHECK(s4.notes().count("N-per-t") == 1);
}

TEST_CASE("cusped SL(2,C) system on the boundary of the 4-simplex") {
  const Triangulation tri = simplex_boundary(3, {0});
  for (TraceEncoding enc : {TraceEncoding::Direct, TraceEncoding::Chained, TraceEncoding::Auto}) {
    const PolySystem s = build_cusped_system(tri, 3, {enc});
    CHECK(s.notes().at("cusp-generators") == "3");
    const int max_loop = std::stoi(s.notes().at("max-loop-length"));
    CHECK(max_loop <= 6 * static_cast<int>(tri.size()));
    int trace_degree = 0;
    int fixed_degree = 0;
    for (const auto& c : s.constraints()) {
      if (c.label.find("trace^2") != std::string::npos) trace_degree = std::max(trace_degree, c.polynomial.degree());
      if (c.label.find("fixes") != std::string::npos) fixed_degree = std::max(fixed_degree, c.polynomial.degree());
    }
    if (enc == TraceEncoding::Direct) {
      CHECK(trace_degree == 2 * max_loop);
      CHECK(trace_degree <= 12 * static_cast<int>(tri.size()));
      CHECK(fixed_degree <= max_loop + 2);
    }
    if (enc == TraceEncoding::Chained) {
      CHECK(trace_degree <= 2);
      CHECK(fixed_degree <= 3);
    }
    // the trivial cocycle and coboundaries satisfy every equality
    const auto trivial = assignment_from_cocycle(s, tri, trivial_cocycle<Matrix2c<double>>(tri, 2));
    CHECK(eval_residuals(s, trivial).max_equality_residual <= 1e-12L);
    Rng rng = trial_rng(85, static_cast<std::uint64_t>(enc));
    const auto alpha = coboundary(tri, testing::random_sl2c_family<double>(rng, 5, 1));
    const ResidualReport r = eval_residuals(s, assignment_from_cocycle(s, tri, alpha));
    CHECK(r.max_equality_residual <= 1e-7L);
    CHECK(r.ok);
    CHECK(parse_text(emit_text(s)) == s);
  }
  CHECK(trace_encoding_from_string("chained") == TraceEncoding::Chained);
  CHECK_THROWS_AS(trace_encoding_from_string("fast"), Error);
}

TEST_CASE("cusped SL(2,C) systems on random semi-ideal complexes") {
  for (std::uint64_t i = 0; i < 5; ++i) {
    Rng rng = trial_rng(86, i);
    const Triangulation closed = testing::random_closed_complex(rng, 3, 1 + static_cast<int>(i));
    const Triangulation tri = testing::with_ideal(closed, {closed.vertex_count() - 1});
    const PolySystem s = build_cusped_system(tri, 3);
    const auto alpha = coboundary(tri, testing::random_sl2c_family<double>(rng, tri.vertex_count(), 0));
    CHECK(eval_residuals(s, assignment_from_cocycle(s, tri, alpha)).max_equality_residual <= 1e-7L);
  }
}

TEST_CASE("emission is byte-deterministic") {
  const Triangulation tri = simplex_boundary(3, {0});
  const std::string a = emit(build_cusped_system(tri, 3), EmitFormat::Json);
  const std::string b = emit(build_cusped_system(tri, 3), EmitFormat::Json);
  CHECK(a == b);
  CHECK(emit_text(build_closed_system(simplex_boundary(3), 3)) == emit_text(build_closed_system(simplex_boundary(3), 3)));
}
