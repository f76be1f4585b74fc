#include "cli.hpp"

#include "hyperbound/cocycle.hpp"
#include "hyperbound/grigoriev.hpp"
#include "hyperbound/margulis.hpp"
#include "hyperbound/oracles.hpp"
#include "hyperbound/polysys.hpp"
#include "hyperbound/triangulation.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace hyperbound::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad input that is not a parse error of one of the file formats.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A check ran and failed; carries the payload to print.
struct CheckFailed {
  std::string payload;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

/// Every floating point number in the payload is cut to 12 significant digits.
void round_numbers(Json& j) {
  if (j.is_number_float()) {
    const double x = j.get<double>();
    j = std::isfinite(x) ? Json(round12(x)) : Json(nullptr);
  } else if (j.is_structured()) {
    for (auto& child : j) round_numbers(child);
  }
}

std::string dump(Json j) {
  round_numbers(j);
  return j.dump(2) + "\n";
}

bool extended_precision() {
  const char* env = std::getenv("HYPERBOUND_PRECISION");
  if (env == nullptr || std::string(env).empty() || std::string(env) == "double") return false;
  if (std::string(env) == "extended") return true;
  throw InputError("HYPERBOUND_PRECISION must be 'double' or 'extended'");
}

/// meyerhoff | kellerhals | a positive number (user-supplied); empty means
/// the default for n.
MargulisConstant parse_epsilon(const std::string& text, int n) {
  if (text.empty()) return default_epsilon(n);
  if (text == "meyerhoff") return epsilon_lower(n, MargulisSource::Meyerhoff);
  if (text == "kellerhals") return epsilon_lower(n, MargulisSource::Kellerhals);
  std::size_t used = 0;
  long double value = 0;
  try {
    value = std::stold(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || used == 0) {
    throw InputError("--epsilon must be meyerhoff, kellerhals or a positive number");
  }
  return epsilon_lower(n, MargulisSource::UserSupplied, value);
}

Json epsilon_json(const MargulisConstant& e) {
  return {{"n", e.n}, {"value", static_cast<double>(e.value)}, {"source", to_string(e.source)}};
}

CertificateCase parse_case(const std::string& s) { return s == "cusped" ? CertificateCase::Cusped : CertificateCase::Closed; }

Json simplices_json(const std::vector<Simplex>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

Json path_json(const SimplicialPath& path) {
  Json out = Json::array();
  if (path.empty()) return out;
  out.push_back(path.front().tail);
  for (const auto& e : path) out.push_back(e.head);
  return out;
}

Json census_json(const Census& c) {
  return {{"vertices", c.vertices},
          {"edges", c.edges},
          {"triangles", c.triangles},
          {"top_simplices", c.top_simplices},
          {"non_ideal_edges", c.non_ideal_edges},
          {"non_ideal_triangles", c.non_ideal_triangles},
          {"ideal_vertices", c.ideal_vertices},
          {"edge_bound", c.edge_bound},
          {"triangle_bound", c.triangle_bound}};
}

std::vector<Simplex> all_faces(const Triangulation& tri) {
  std::set<Simplex> faces;
  for (const Simplex& s : tri.simplices())
    for (std::size_t k = 1; k <= s.size(); ++k)
      for (auto& f : faces_of(s, k)) faces.insert(std::move(f));
  return {faces.begin(), faces.end()};
}

Json summary_json(const Triangulation& tri) {
  return {{"format", "tri-v1"},
          {"dimension", tri.dimension()},
          {"vertices", tri.vertex_count()},
          {"ideal", tri.ideal_vertices()},
          {"closed", tri.closed()},
          {"census", census_json(census(tri))},
          {"euler_characteristic", euler_characteristic(all_faces(tri))}};
}

// ------------------------------------------------------------------- tri

std::string tri_validate(const std::string& file) {
  const std::string text = read_file(file);
  try {
    const Triangulation tri = parse_triangulation(text);
    Json j = summary_json(tri);
    j["valid"] = true;
    return dump(j);
  } catch (const TriangulationError& e) {
    Json j{{"format", "tri-v1"}, {"valid", false}, {"check", e.check()}, {"detail", e.what()}};
    throw CheckFailed{dump(j), e.what()};
  }
}

std::string tri_inspect(const std::string& file, std::optional<int> basepoint, std::optional<int> vertex) {
  const Triangulation tri = parse_triangulation(read_file(file));
  Json j = summary_json(tri);
  const VertexId b = basepoint ? *basepoint : default_basepoint(tri);
  if (b < 0 || b >= tri.vertex_count() || tri.is_ideal(b)) throw InputError("--basepoint must be a non-ideal vertex");
  const BaseTree base(tri, b);
  Json tree{{"basepoint", b}, {"parent", base.parents()}};
  Json depth = Json::array();
  for (VertexId v = 0; v < tri.vertex_count(); ++v) depth.push_back(base.depth(v));
  tree["depth"] = depth;
  j["base_tree"] = tree;
  if (vertex) {
    if (*vertex < 0 || *vertex >= tri.vertex_count()) throw InputError("--vertex out of range");
    const StarLink sl = star_link(tri, *vertex);
    j["star_link"] = {{"vertex", *vertex},
                      {"star", simplices_json(sl.star)},
                      {"link", simplices_json(sl.link)},
                      {"link_euler_characteristic", euler_characteristic(sl.link)}};
  }
  Json cusps = Json::array();
  for (VertexId v : tri.ideal_vertices()) {
    const CuspGenerators g = cusp_generators(tri, v, base);
    Json loops = Json::array();
    for (const CuspLoop& loop : g.loops) {
      loops.push_back({{"extra_edge", {loop.extra_edge.tail, loop.extra_edge.head}}, {"path", path_json(loop.loop)}});
    }
    cusps.push_back({{"ideal_vertex", v},
                     {"link_root", g.link_root},
                     {"connector", path_json(g.connector)},
                     {"into_ideal", {g.into_ideal.tail, g.into_ideal.head}},
                     {"generators", loops}});
  }
  j["cusps"] = cusps;
  return dump(j);
}

// --------------------------------------------------------------- polysys

std::string polysys_emit(const std::string& file, const std::string& kind, const std::string& format,
                         const std::string& encoding) {
  const Triangulation tri = parse_triangulation(read_file(file));
  PolySystem system = [&] {
    if (kind == "closed") return build_closed_system(tri, tri.dimension());
    PolysysOptions options;
    options.trace_encoding = trace_encoding_from_string(encoding);
    return build_cusped_system(tri, tri.dimension(), options);
  }();
  if (format == "json") return dump(emit_json(system));
  return emit_text(system);
}

// --------------------------------------------------------------- cocycle

template <typename Scalar>
Json matrix_json(const Matrix<Scalar>& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.push_back(static_cast<double>(m(r, c)));
  return out;
}

template <typename Scalar>
Json sphere_json(const SpherePoint<Scalar>& p) {
  if (p.infinity) return {{"infinity", true}};
  return {{"infinity", false}, {"re", static_cast<double>(p.z.real())}, {"im", static_cast<double>(p.z.imag())}};
}

template <typename Scalar>
Json report_json(const CocycleReport<Scalar>& r) {
  Json faces = Json::array();
  for (const auto& f : r.failing_faces()) faces.push_back(f);
  Json edges = Json::array();
  for (const auto& e : r.failing_edges()) edges.push_back(edge_name(e));
  return {{"tolerance", static_cast<double>(r.tolerance)},
          {"max_face_residual", static_cast<double>(r.max_face)},
          {"max_inverse_residual", static_cast<double>(r.max_inverse)},
          {"max_membership_residual", static_cast<double>(r.max_membership)},
          {"failing_faces", faces},
          {"failing_edges", edges},
          {"ok", r.ok}};
}

template <typename Scalar>
Json cusp_json(const CuspReport<Scalar>& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators) {
    gens.push_back({{"extra_edge", edge_name(g.loop.extra_edge.unoriented())},
                    {"kind", to_string(g.classification.kind)},
                    {"trace", {static_cast<double>(g.classification.trace.real()),
                               static_cast<double>(g.classification.trace.imag())}},
                    {"ok", g.ok}});
  }
  Json j{{"ideal_vertex", r.ideal_vertex}, {"generators", gens}};
  j["fixed_point"] = r.fixed_point ? sphere_json(*r.fixed_point) : Json(nullptr);
  j["fixed_point_spread"] = static_cast<double>(r.fixed_point_spread);
  j["ok"] = r.ok;
  return j;
}

template <typename Scalar>
std::string cocycle_verify(const Triangulation& tri, const CocycleFile<Scalar>& file, Scalar tol, VertexId b) {
  Json j{{"group", to_string(file.group)}, {"n", file.n}};
  bool ok = false;
  if (file.lorentz) {
    const auto r = verify_cocycle(tri, *file.lorentz, tol);
    j["report"] = report_json(r);
    ok = r.ok;
  } else {
    const auto r = verify_cocycle(tri, *file.sl2c, tol);
    j["report"] = report_json(r);
    ok = r.ok;
    Json cusps = Json::array();
    if (ok) {
      const BaseTree base(tri, b);
      for (VertexId v : tri.ideal_vertices()) {
        const auto c = check_cusp_parabolicity(tri, *file.sl2c, v, base);
        cusps.push_back(cusp_json(c));
        ok = ok && c.ok;
      }
    }
    j["cusps"] = cusps;
  }
  j["ok"] = ok;
  if (!ok) throw CheckFailed{dump(j), "cocycle verification failed"};
  return dump(j);
}

template <typename Scalar>
std::string cocycle_develop(const Triangulation& tri, const CocycleFile<Scalar>& file, Scalar tol, VertexId b) {
  const BaseTree base(tri, b);
  DevelopedComplex<Scalar> dev;
  try {
    dev = file.lorentz ? develop(tri, *file.lorentz, base, tol) : develop(tri, *file.sl2c, base, tol);
  } catch (const CocycleError& e) {
    Json j{{"group", to_string(file.group)}, {"n", file.n}, {"ok", false}, {"error", e.what()}};
    throw CheckFailed{dump(j), e.what()};
  }
  Json images = Json::object();
  for (const auto& [v, p] : dev.vertex_images) {
    Json coords = Json::array();
    for (int i = 0; i < p.coords().size(); ++i) coords.push_back(static_cast<double>(p.coords()(i)));
    images[std::to_string(v)] = coords;
  }
  Json edges = Json::array();
  for (const auto& [e, len] : dev.edge_lengths) {
    edges.push_back({{"edge", edge_name(e)},
                     {"length", static_cast<double>(len)},
                     {"cosh_minus_one", static_cast<double>(dev.edge_cosh_minus_one.at(e))}});
  }
  Json ideal = Json::object();
  for (const auto& [v, p] : dev.ideal_images) ideal[std::to_string(v)] = sphere_json(p);
  const auto bound = edge_length_bound(dev);
  Json j{{"group", to_string(file.group)},
         {"n", dev.n},
         {"basepoint", dev.basepoint},
         {"precision", std::is_same_v<Scalar, double> ? "double" : "extended"},
         {"vertex_images", images},
         {"edges", edges},
         {"ideal_images", ideal},
         {"max_edge_length", static_cast<double>(bound.max_length)},
         {"max_cosh_minus_one", static_cast<double>(bound.max_cosh_minus_one)}};
  j["argmax_edge"] = bound.argmax ? Json(edge_name(*bound.argmax)) : Json(nullptr);
  j["ok"] = true;
  return dump(j);
}

template <typename Scalar>
std::string cocycle_command(const std::string& verb, const std::string& tri_file, const std::string& coc_file,
                            double tol, std::optional<int> basepoint) {
  const Triangulation tri = parse_triangulation(read_file(tri_file));
  const CocycleFile<Scalar> file = parse_cocycle<Scalar>(read_file(coc_file));
  if (file.n != tri.dimension()) throw InputError("cocycle dimension does not match the triangulation");
  const VertexId b = basepoint ? *basepoint : default_basepoint(tri);
  if (b < 0 || b >= tri.vertex_count() || tri.is_ideal(b)) throw InputError("--basepoint must be a non-ideal vertex");
  if (verb == "verify") return cocycle_verify<Scalar>(tri, file, Scalar(tol), b);
  return cocycle_develop<Scalar>(tri, file, Scalar(tol), b);
}

// ----------------------------------------------------------------- bound

struct BoundArgs {
  int n = 3;
  long long t = 1;
  double B = 0;
  double c = 1;
  std::optional<double> R;
  std::optional<double> log_R;
  std::string epsilon;
  std::string kind = "closed";
};

std::string bound_tube_radius(const BoundArgs& a) {
  const MargulisConstant eps = parse_epsilon(a.epsilon, a.n);
  if (a.R.has_value() == a.log_R.has_value()) throw InputError("give exactly one of --R and --log-R");
  Json j{{"n", a.n}, {"epsilon", epsilon_json(eps)}};
  long double radius = 0;
  const bool ext = extended_precision();
  if (a.R) {
    j["R"] = *a.R;
    radius = ext ? tube_radius_lower<long double>(*a.R, a.n, eps) : tube_radius_lower<double>(*a.R, a.n, eps);
  } else {
    const long double two_eps_log = std::log(2.0L * eps.value);
    if (!(*a.log_R <= two_eps_log)) throw InputError("--log-R must not exceed log(2 eps)");
    j["log_R"] = *a.log_R;
    radius = ext ? tube_radius_lower_from_log<long double>(*a.log_R, a.n, eps)
                 : tube_radius_lower_from_log<double>(*a.log_R, a.n, eps);
  }
  j["tube_radius"] = static_cast<double>(radius);
  j["vacuous"] = !(radius > 0);
  j["precision"] = ext ? "extended" : "double";
  return dump(j);
}

std::string bound_certificate(const BoundArgs& a) {
  const MargulisConstant eps = parse_epsilon(a.epsilon, a.n);
  const bool cusped = parse_case(a.kind) == CertificateCase::Cusped;
  BoundCertificate cert;
  if (extended_precision()) {
    const auto b = static_cast<long double>(a.B);
    cert = cusped ? cusped_certificate<long double>(a.n, a.t, b, eps) : closed_certificate<long double>(a.n, a.t, b, eps);
  } else {
    cert = cusped ? cusped_certificate<double>(a.n, a.t, a.B, eps) : closed_certificate<double>(a.n, a.t, a.B, eps);
  }
  return dump(to_json(cert));
}

std::string bound_symbolic(const BoundArgs& a) {
  const MargulisConstant eps = parse_epsilon(a.epsilon, a.n);
  const SymbolicSystoleBound s = systole_symbolic_bound(a.n, a.t, a.c, parse_case(a.kind), eps);
  Json j{{"n", a.n},
         {"t", a.t},
         {"c", s.c},
         {"provenance", s.provenance},
         {"edge_bound_log2", s.edge_bound_log2},
         {"systole_loglog", {{"level2", s.systole.level2}, {"sign", s.systole.sign}}},
         {"certificate", to_json(s.certificate)}};
  return dump(j);
}

// ---------------------------------------------------------------- oracle

std::string oracle_pigeonhole(int n, std::uint64_t trials, std::uint64_t seed) {
  const PigeonholeSuite s = run_pigeonhole_suite(n, trials, seed);
  Json failures = Json::array();
  for (std::size_t i = 0; i < s.failures.size() && i < 10; ++i) {
    const auto& f = s.failures[i];
    failures.push_back({{"trial", f.index}, {"D", f.D}, {"a", f.a}, {"k", f.k}, {"bound", f.bound}});
  }
  Json j{{"oracle", "pigeonhole"}, {"n", n},           {"trials", trials},       {"seed", seed},
         {"passed", s.passed},     {"max_k", s.max_k}, {"max_k_over_bound", s.max_ratio}, {"failures", failures},
         {"ok", s.ok()}};
  if (!s.ok()) throw CheckFailed{dump(j), "pigeonhole suite failed"};
  return dump(j);
}

std::string oracle_tube(int n, std::uint64_t trials, std::uint64_t seed, const std::string& epsilon) {
  const TubeSuite s = run_tube_suite(n, trials, seed, parse_epsilon(epsilon, n));
  Json failures = Json::array();
  for (std::size_t i = 0; i < s.failures.size() && i < 10; ++i) {
    const auto& f = s.failures[i];
    failures.push_back({{"trial", f.index},
                        {"log_R", f.log_R},
                        {"tube_radius", f.tube_radius},
                        {"axis_distance", f.axis_distance},
                        {"cap", f.cap},
                        {"displacement", f.displacement}});
  }
  Json j{{"oracle", "tube"},
         {"n", n},
         {"epsilon", epsilon_json(s.epsilon)},
         {"trials", trials},
         {"seed", seed},
         {"passed", s.passed},
         {"vacuous", s.vacuous},
         {"max_displacement", s.max_displacement},
         {"max_k", s.max_k},
         {"failures", failures},
         {"ok", s.ok()}};
  if (!s.ok()) throw CheckFailed{dump(j), s.passed == 0 ? "no non-vacuous trial" : "thin-part suite failed"};
  return dump(j);
}

std::string oracle_roots(std::uint64_t trials, std::uint64_t seed, int max_degree, long long max_coefficient) {
  const RootsSuite s = run_roots_suite(trials, seed, max_degree, max_coefficient);
  Json failures = Json::array();
  for (std::size_t i = 0; i < s.failures.size() && i < 10; ++i) {
    failures.push_back({{"trial", s.failures[i].index}, {"coefficients", s.failures[i].coefficients}});
  }
  Json j{{"oracle", "roots"},
         {"trials", trials},
         {"seed", seed},
         {"max_degree", max_degree},
         {"max_coefficient", max_coefficient},
         {"passed", s.passed},
         {"roots_checked", s.roots_checked},
         {"min_margin_log2", s.roots_checked > 0 ? Json(s.min_margin_log2) : Json(nullptr)},
         {"failures", failures},
         {"ok", s.ok()}};
  if (!s.ok()) throw CheckFailed{dump(j), "root magnitude oracle failed"};
  return dump(j);
}

/// Deepest subcommand that was selected, for help and usage text.
const CLI::App* selected(const CLI::App& app) {
  const CLI::App* cur = &app;
  for (;;) {
    const auto subs = cur->get_subcommands();
    if (subs.empty()) return cur;
    cur = subs.front();
  }
}

}  // namespace

CommandResult run(const std::vector<std::string>& argv) {
  CLI::App app{"Systole bound toolkit for hyperbolic manifolds", "hyperbound"};
  app.require_subcommand(1);
  std::function<std::string()> action;

  // tri
  auto* tri = app.add_subcommand("tri", "Validate or inspect a tri-v1 triangulation")->require_subcommand(1);
  std::string tri_file;
  std::optional<int> basepoint;
  std::optional<int> vertex;
  auto* validate = tri->add_subcommand("validate", "Run the structural checks and print the census");
  validate->add_option("file", tri_file, "tri-v1 file")->required();
  validate->callback([&] { action = [&] { return tri_validate(tri_file); }; });
  auto* inspect = tri->add_subcommand("inspect", "Census, base tree, star/link and cusp generators");
  inspect->add_option("file", tri_file, "tri-v1 file")->required();
  inspect->add_option("--basepoint", basepoint, "Base-tree root (default: lowest non-ideal vertex)");
  inspect->add_option("--vertex", vertex, "Also print the star and link of this vertex");
  inspect->callback([&] { action = [&] { return tri_inspect(tri_file, basepoint, vertex); }; });

  // polysys
  auto* polysys = app.add_subcommand("polysys", "Polynomial systems")->require_subcommand(1);
  std::string sys_case = "closed";
  std::string sys_format = "text";
  std::string encoding = "auto";
  auto* emit_cmd = polysys->add_subcommand("emit", "Emit the polynomial system of a triangulation");
  emit_cmd->add_option("file", tri_file, "tri-v1 file")->required();
  emit_cmd->add_option("--case", sys_case, "closed | cusped")->check(CLI::IsMember({"closed", "cusped"}));
  emit_cmd->add_option("--format", sys_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  emit_cmd->add_option("--trace-encoding", encoding, "auto | direct | chained (cusped, n = 3)")
      ->check(CLI::IsMember({"auto", "direct", "chained"}));
  emit_cmd->callback([&] { action = [&] { return polysys_emit(tri_file, sys_case, sys_format, encoding); }; });

  // cocycle
  auto* cocycle = app.add_subcommand("cocycle", "coc-v1 cocycles")->require_subcommand(1);
  std::string coc_file;
  double tol = kDefaultTolerance;
  for (const std::string verb : {"verify", "develop"}) {
    auto* cmd = cocycle->add_subcommand(verb, verb == "verify" ? "Check the cocycle relations (and cusps)"
                                                              : "Develop vertex images and edge lengths");
    cmd->add_option("triangulation", tri_file, "tri-v1 file")->required();
    cmd->add_option("cocycle", coc_file, "coc-v1 file")->required();
    cmd->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--basepoint", basepoint, "Base-tree root (default: lowest non-ideal vertex)");
    cmd->callback([&, verb] {
      action = [&, verb] {
        return extended_precision() ? cocycle_command<long double>(verb, tri_file, coc_file, tol, basepoint)
                                    : cocycle_command<double>(verb, tri_file, coc_file, tol, basepoint);
      };
    });
  }

  // bound
  auto* bound = app.add_subcommand("bound", "Tube radius and systole certificates")->require_subcommand(1);
  BoundArgs ba;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", ba.n, "Dimension")->required()->check(CLI::Range(3, 64));
    cmd->add_option("--epsilon", ba.epsilon, "meyerhoff | kellerhals | <value> (default: Meyerhoff for n = 3)");
  };
  auto* tube = bound->add_subcommand("tube-radius", "Tube-radius lower bound at systole R");
  add_common(tube);
  tube->add_option("--R", ba.R, "Systole length");
  tube->add_option("--log-R", ba.log_R, "Natural log of the systole length");
  tube->callback([&] { action = [&] { return bound_tube_radius(ba); }; });
  auto* cert = bound->add_subcommand("certificate", "cert-v1 certificate from an edge-length bound B");
  add_common(cert);
  cert->add_option("--t", ba.t, "Number of top simplices")->required()->check(CLI::PositiveNumber);
  cert->add_option("--B", ba.B, "Edge-length bound")->required();
  cert->add_option("--case", ba.kind, "closed | cusped")->check(CLI::IsMember({"closed", "cusped"}));
  cert->callback([&] { action = [&] { return bound_certificate(ba); }; });
  auto* symbolic = bound->add_subcommand("symbolic", "Parameterized bound from B = (nt)^{c n^4 t}");
  add_common(symbolic);
  symbolic->add_option("--t", ba.t, "Number of top simplices")->required()->check(CLI::PositiveNumber);
  symbolic->add_option("--c", ba.c, "Big-O constant (default 1)")->check(CLI::NonNegativeNumber);
  symbolic->add_option("--case", ba.kind, "closed | cusped")->check(CLI::IsMember({"closed", "cusped"}));
  symbolic->callback([&] { action = [&] { return bound_symbolic(ba); }; });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Seeded Monte-Carlo oracles")->require_subcommand(1);
  int on = 3;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string oeps;
  int max_degree = 8;
  long long max_coeff = 1024;
  const auto add_seeded = [&](CLI::App* cmd, bool with_n) {
    if (with_n) cmd->add_option("--n", on, "Dimension")->check(CLI::Range(3, 16));
    cmd->add_option("--trials", trials, "Number of trials");
    cmd->add_option("--seed", seed, "Root seed")->required();
  };
  auto* pig = oracle->add_subcommand("pigeonhole", "Recurrence time of random rotations");
  add_seeded(pig, true);
  pig->callback([&] { action = [&] { return oracle_pigeonhole(on, trials, seed); }; });
  auto* otube = oracle->add_subcommand("tube", "Displacement inside the thin-part tube");
  add_seeded(otube, true);
  otube->add_option("--epsilon", oeps, "meyerhoff | kellerhals | <value> (default: Meyerhoff for n = 3)");
  otube->callback([&] { action = [&] { return oracle_tube(on, trials, seed, oeps); }; });
  auto* roots = oracle->add_subcommand("roots", "Root magnitudes of random integer polynomials");
  add_seeded(roots, false);
  roots->add_option("--max-degree", max_degree, "Degree bound")->check(CLI::Range(1, 64));
  roots->add_option("--max-coefficient", max_coeff, "Coefficient bound")->check(CLI::PositiveNumber);
  roots->callback([&] { action = [&] { return oracle_roots(trials, seed, max_degree, max_coeff); }; });

  CommandResult result;
  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    result.out = selected(app)->help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kInputError;
    result.err = std::string("error: ") + e.what() + "\n\n" + selected(app)->help();
    return result;
  }

  try {
    result.out = action();
  } catch (const CheckFailed& f) {
    result.exit_code = kCheckFailed;
    result.out = f.payload;
    result.err = "check failed: " + f.message + "\n";
  } catch (const ParseError& e) {
    result.exit_code = kInputError;
    result.err = std::string("parse error: ") + e.what() + "\n";
  } catch (const TriangulationError& e) {
    result.exit_code = kInputError;
    result.err = "invalid triangulation (" + e.check() + "): " + e.what() + "\n";
  } catch (const Error& e) {
    result.exit_code = kInputError;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = kInputError;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace hyperbound::cli
