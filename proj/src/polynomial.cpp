#include "hyperbound/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <regex>
#include <sstream>

namespace hyperbound {

namespace {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow("polynomial coefficient overflow in addition");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow("polynomial coefficient overflow in multiplication");
  return r;
}

double coefficient_length(Coefficient c) {
  const long double mag = c < 0 ? -static_cast<long double>(c) : static_cast<long double>(c);
  return static_cast<double>(std::log2(mag + 2.0L));
}

std::string render_monomial(const PolySystem& s, const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m) {
    if (!out.empty()) out += '*';
    out += s.info(v).name;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

/// Terms in emission order: by rendered monomial, constant last.
std::vector<std::pair<std::string, Coefficient>> sorted_terms(const PolySystem& s, const Polynomial& p) {
  std::vector<std::pair<std::string, Coefficient>> terms;
  terms.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) terms.emplace_back(render_monomial(s, m), c);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.empty() != b.first.empty()) return b.first.empty();
    return a.first < b.first;
  });
  return terms;
}

std::string format_double(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

}  // namespace

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

int total_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

Polynomial Polynomial::constant(Coefficient c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(VariableId v, Coefficient c) {
  Polynomial p;
  p.add_term({{v, 1}}, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

double Polynomial::max_length() const {
  double l = 0.0;
  for (const auto& [m, c] : terms_) l = std::max(l, coefficient_length(c));
  return l;
}

std::vector<VariableId> Polynomial::variables() const {
  std::vector<VariableId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  out -= *this;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), checked_mul(ca, cb));
  return out;
}

Polynomial operator*(Coefficient c, const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, pc] : p.terms_) out.add_term(m, checked_mul(c, pc));
  return out;
}

long double Polynomial::evaluate(const std::vector<long double>& values) const {
  long double sum = 0.0L;
  for (const auto& [m, c] : terms_) {
    long double term = static_cast<long double>(c);
    for (const auto& [v, e] : m) {
      const long double x = values.at(v);
      for (int k = 0; k < e; ++k) term *= x;
    }
    sum += term;
  }
  return sum;
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::StrictPositive: return "pos";
    case Relation::NonNegative: return "nonneg";
    case Relation::EqualZero: return "eq";
  }
  return "?";
}

Relation relation_from_string(std::string_view s) {
  if (s == "pos") return Relation::StrictPositive;
  if (s == "nonneg") return Relation::NonNegative;
  if (s == "eq") return Relation::EqualZero;
  throw Error("unknown relation kind '" + std::string(s) + "'");
}

std::string to_string(VariableRole r) {
  switch (r) {
    case VariableRole::EdgeEntry: return "edge-entry";
    case VariableRole::VertexCoordinate: return "vertex-coordinate";
    case VariableRole::LiftCoordinate: return "lift-coordinate";
    case VariableRole::CVariable: return "c-variable";
    case VariableRole::CuspFixedPoint: return "cusp-fixed-point";
    case VariableRole::Auxiliary: return "auxiliary";
  }
  return "?";
}

VariableInfo classify_variable_name(const std::string& name) {
  static const std::regex edge_re(R"(E(\d+)o([01])r(\d+)c(\d+)(re|im)?)");
  static const std::regex vertex_re(R"(V(\d+)a(\d+))");
  static const std::regex lift_re(R"(V(\d+)l(\d+)a(\d+))");
  static const std::regex c_re(R"(C(\d+))");
  static const std::regex cusp_re(R"(P(\d+)a(\d+))");
  VariableInfo info;
  info.name = name;
  std::smatch m;
  if (std::regex_match(name, m, edge_re)) {
    info.role = VariableRole::EdgeEntry;
    info.edge = std::stoi(m[1]);
    info.orientation = std::stoi(m[2]);
    info.row = std::stoi(m[3]);
    info.col = std::stoi(m[4]);
    if (m[5].matched) info.part = m[5] == "re" ? 0 : 1;
  } else if (std::regex_match(name, m, vertex_re)) {
    info.role = VariableRole::VertexCoordinate;
    info.vertex = std::stoi(m[1]);
    info.axis = std::stoi(m[2]);
  } else if (std::regex_match(name, m, lift_re)) {
    info.role = VariableRole::LiftCoordinate;
    info.vertex = std::stoi(m[1]);
    info.edge = std::stoi(m[2]);
    info.axis = std::stoi(m[3]);
  } else if (std::regex_match(name, m, c_re)) {
    info.role = VariableRole::CVariable;
    info.edge = std::stoi(m[1]);
  } else if (std::regex_match(name, m, cusp_re)) {
    info.role = VariableRole::CuspFixedPoint;
    info.cusp = std::stoi(m[1]);
    info.axis = std::stoi(m[2]);
  }
  return info;
}

VariableId PolySystem::variable(const std::string& name) {
  auto it = by_name_.find(name);
  if (it != by_name_.end()) return it->second;
  const auto id = static_cast<VariableId>(variables_.size());
  variables_.push_back(classify_variable_name(name));
  by_name_.emplace(name, id);
  return id;
}

std::optional<VariableId> PolySystem::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

void PolySystem::add(Relation r, Polynomial p, std::string label) {
  for (VariableId v : p.variables()) {
    if (v >= variables_.size()) throw Error("PolySystem::add: polynomial uses an unregistered variable");
  }
  constraints_.push_back({r, std::move(p), std::move(label)});
}

bool PolySystem::emitted_equal(const PolySystem& other) const { return emit_text(*this) == emit_text(other); }

ComplexityProfile complexity_profile(const PolySystem& s) {
  ComplexityProfile p;
  p.N = s.variables().size();
  p.kappa = s.constraints().size();
  for (const auto& c : s.constraints()) {
    p.d = std::max(p.d, c.polynomial.degree());
    p.M = std::max(p.M, c.polynomial.max_length());
  }
  return p;
}

PolySystem expand_equalities(const PolySystem& s) {
  PolySystem out;
  for (const auto& v : s.variables()) out.variable(v.name);
  out.notes() = s.notes();
  for (const auto& c : s.constraints()) {
    if (c.relation == Relation::EqualZero) {
      out.add(Relation::NonNegative, c.polynomial, c.label);
      out.add(Relation::NonNegative, -c.polynomial, c.label);
    } else {
      out.add(c.relation, c.polynomial, c.label);
    }
  }
  return out;
}

std::string render_polynomial(const PolySystem& s, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, c] : sorted_terms(s, p)) {
    if (!out.empty()) out += ' ';
    out += c < 0 ? '-' : '+';
    // Magnitude of INT64_MIN is not representable; print through unsigned.
    const auto mag = c < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    out += std::to_string(mag);
    if (!mono.empty()) out += '*' + mono;
  }
  return out;
}

std::string emit_text(const PolySystem& s) {
  const ComplexityProfile p = complexity_profile(s);
  std::ostringstream out;
  out << "# polysys-v1\n";
  out << "# profile N=" << p.N << " kappa=" << p.kappa << " d=" << p.d << " M=" << format_double(p.M) << "\n";
  for (const auto& [key, value] : s.notes()) out << "NOTE " << key << " " << value << "\n";
  for (const auto& v : s.variables()) out << "VAR " << v.name << "\n";
  for (const auto& c : s.constraints()) {
    out << "REL " << to_string(c.relation) << ": " << render_polynomial(s, c.polynomial);
    if (!c.label.empty()) out << "  # " << c.label;
    out << "\n";
  }
  return out.str();
}

nlohmann::ordered_json emit_json(const PolySystem& s) {
  const ComplexityProfile p = complexity_profile(s);
  nlohmann::ordered_json j;
  j["format"] = "polysys-v1";
  j["profile"] = {{"N", p.N}, {"kappa", p.kappa}, {"d", p.d}, {"M", p.M}};
  j["notes"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : s.notes()) j["notes"][key] = value;
  auto vars = nlohmann::ordered_json::array();
  for (const auto& v : s.variables()) vars.push_back({{"name", v.name}, {"role", to_string(v.role)}});
  j["variables"] = std::move(vars);
  auto constraints = nlohmann::ordered_json::array();
  for (const auto& c : s.constraints()) {
    nlohmann::ordered_json jc;
    jc["relation"] = to_string(c.relation);
    jc["label"] = c.label;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [m, coeff] : c.polynomial.terms()) {
      auto mono = nlohmann::ordered_json::array();
      for (const auto& [v, e] : m) mono.push_back({s.info(v).name, e});
      terms.push_back({{"coefficient", coeff}, {"monomial", std::move(mono)}});
    }
    jc["terms"] = std::move(terms);
    constraints.push_back(std::move(jc));
  }
  j["constraints"] = std::move(constraints);
  return j;
}

std::string emit(const PolySystem& s, EmitFormat format) {
  if (format == EmitFormat::Text) return emit_text(s);
  return emit_json(s).dump(1) + "\n";
}

namespace {

Polynomial parse_polynomial_text(PolySystem& s, std::string_view body, std::size_t line) {
  Polynomial p;
  std::istringstream in{std::string(body)};
  std::string token;
  std::size_t column = 1;
  while (in >> token) {
    if (token == "0") continue;
    if (token.size() < 2 || (token[0] != '+' && token[0] != '-')) {
      throw ParseError(line, column, "term '" + token + "' must start with a sign");
    }
    const bool negative = token[0] == '-';
    std::size_t pos = 1;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos == 1) throw ParseError(line, column, "term '" + token + "' has no coefficient");
    std::uint64_t mag = 0;
    try {
      mag = std::stoull(token.substr(1, pos - 1));
    } catch (const std::exception&) {
      throw ParseError(line, column, "coefficient out of range in '" + token + "'");
    }
    const std::uint64_t limit = negative ? std::uint64_t(1) << 63 : (std::uint64_t(1) << 63) - 1;
    if (mag > limit) throw ParseError(line, column, "coefficient out of range in '" + token + "'");
    const Coefficient c = negative ? static_cast<Coefficient>(0 - mag) : static_cast<Coefficient>(mag);
    Monomial m;
    while (pos < token.size()) {
      if (token[pos] != '*') throw ParseError(line, column, "expected '*' in term '" + token + "'");
      ++pos;
      std::size_t end = token.find_first_of("*^", pos);
      if (end == std::string::npos) end = token.size();
      const std::string name = token.substr(pos, end - pos);
      if (name.empty()) throw ParseError(line, column, "empty variable name in '" + token + "'");
      int e = 1;
      pos = end;
      if (pos < token.size() && token[pos] == '^') {
        std::size_t stop = token.find('*', pos);
        if (stop == std::string::npos) stop = token.size();
        try {
          e = std::stoi(token.substr(pos + 1, stop - pos - 1));
        } catch (const std::exception&) {
          throw ParseError(line, column, "bad exponent in '" + token + "'");
        }
        if (e < 1) throw ParseError(line, column, "exponent must be positive in '" + token + "'");
        pos = stop;
      }
      m = monomial_product(m, {{s.variable(name), e}});
    }
    p.add_term(m, c);
    column += token.size() + 1;
  }
  return p;
}

}  // namespace

PolySystem parse_text(std::string_view text) {
  PolySystem s;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (line.rfind("VAR ", 0) == 0) {
      s.variable(std::string(line.substr(4)));
    } else if (line.rfind("NOTE ", 0) == 0) {
      const std::string_view rest = line.substr(5);
      const auto space = rest.find(' ');
      if (space == std::string_view::npos) throw ParseError(line_no, 6, "NOTE needs a key and a value");
      s.notes()[std::string(rest.substr(0, space))] = std::string(rest.substr(space + 1));
    } else if (line.rfind("REL ", 0) == 0) {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError(line_no, 5, "expected ':' after the relation kind");
      Relation r;
      try {
        r = relation_from_string(line.substr(4, colon - 4));
      } catch (const Error& e) {
        throw ParseError(line_no, 5, e.what());
      }
      std::string_view body = line.substr(colon + 1);
      std::string label;
      if (const auto hash = body.find("  # "); hash != std::string_view::npos) {
        label = std::string(body.substr(hash + 4));
        body = body.substr(0, hash);
      }
      s.add(r, parse_polynomial_text(s, body, line_no), std::move(label));
    } else {
      throw ParseError(line_no, 1, "expected VAR, NOTE or REL");
    }
    if (end == text.size()) break;
  }
  return s;
}

PolySystem parse_json(const nlohmann::json& j) {
  const auto fail = [](const std::string& what) { return ParseError(1, 1, what); };
  if (!j.is_object() || j.value("format", std::string()) != "polysys-v1") throw fail("expected a polysys-v1 object");
  PolySystem s;
  if (j.contains("notes")) {
    for (const auto& [key, value] : j["notes"].items()) s.notes()[key] = value.get<std::string>();
  }
  for (const auto& v : j.at("variables")) s.variable(v.at("name").get<std::string>());
  for (const auto& c : j.at("constraints")) {
    Polynomial p;
    for (const auto& t : c.at("terms")) {
      Monomial m;
      for (const auto& f : t.at("monomial")) {
        m = monomial_product(m, {{s.variable(f.at(0).get<std::string>()), f.at(1).get<int>()}});
      }
      p.add_term(m, t.at("coefficient").get<Coefficient>());
    }
    s.add(relation_from_string(c.at("relation").get<std::string>()), std::move(p), c.value("label", std::string()));
  }
  return s;
}

ResidualReport eval_residuals(const PolySystem& s, const std::map<std::string, long double>& assignment,
                              const ResidualThresholds& thresholds) {
  std::vector<long double> values(s.variables().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto it = assignment.find(s.variables()[i].name);
    if (it == assignment.end()) throw Error("eval_residuals: no value for variable " + s.variables()[i].name);
    values[i] = it->second;
  }
  ResidualReport r;
  r.min_strict_value = std::numeric_limits<long double>::infinity();
  r.min_nonneg_value = std::numeric_limits<long double>::infinity();
  for (std::size_t i = 0; i < s.constraints().size(); ++i) {
    const Constraint& c = s.constraints()[i];
    const long double v = c.polynomial.evaluate(values);
    r.values.push_back(v);
    bool violated = false;
    switch (c.relation) {
      case Relation::EqualZero:
        if (!r.worst_equality || std::fabs(v) > r.max_equality_residual) {
          r.max_equality_residual = std::fabs(v);
          r.worst_equality = i;
        }
        violated = !(std::fabs(v) <= thresholds.equality);
        break;
      case Relation::StrictPositive:
        if (!r.worst_strict || v < r.min_strict_value) {
          r.min_strict_value = v;
          r.worst_strict = i;
        }
        violated = !(v > thresholds.strict);
        break;
      case Relation::NonNegative:
        if (!r.worst_nonneg || v < r.min_nonneg_value) {
          r.min_nonneg_value = v;
          r.worst_nonneg = i;
        }
        violated = !(v >= -thresholds.nonneg);
        break;
    }
    if (violated) r.violated.push_back(i);
  }
  r.ok = r.violated.empty();
  return r;
}

}  // namespace hyperbound
