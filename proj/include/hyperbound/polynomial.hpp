#pragma once

// Sparse multivariate polynomials with exact 64-bit integer coefficients,
// polynomial systems with relation kinds and a named variable registry, the
// complexity profile (N, kappa, d, M), text/JSON emitters and residual
// evaluation.

#include "hyperbound/core.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperbound {

using VariableId = std::uint32_t;
using Coefficient = std::int64_t;

/// (variable, exponent) pairs, ascending variable, exponents >= 1.
using Monomial = std::vector<std::pair<VariableId, int>>;

Monomial monomial_product(const Monomial& a, const Monomial& b);
int total_degree(const Monomial& m);

/// Coefficient arithmetic left the int64 range.
class CoefficientOverflow : public Error {
 public:
  using Error::Error;
};

class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(Coefficient c);
  static Polynomial variable(VariableId v, Coefficient c = 1);

  /// Adds c * m, collecting like terms; zero coefficients are dropped.
  void add_term(const Monomial& m, Coefficient c);

  const std::map<Monomial, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  /// Largest coefficient length l(c) = log2(|c| + 2) over all terms.
  double max_length() const;
  std::vector<VariableId> variables() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Coefficient c, const Polynomial& p);
  bool operator==(const Polynomial&) const = default;

  /// Evaluation in long double; `values` is indexed by VariableId.
  long double evaluate(const std::vector<long double>& values) const;

 private:
  std::map<Monomial, Coefficient> terms_;
};

/// Real and imaginary parts of a polynomial in realified complex variables.
struct ComplexPolynomial {
  Polynomial re;
  Polynomial im;

  friend ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    return {a.re - b.re, a.im - b.im};
  }
  /// (a + ib)(c + id) with i^2 = -1 applied during expansion.
  friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ComplexPolynomial conj() const { return {re, -im}; }
  /// |z|^2 = re^2 + im^2.
  Polynomial norm() const { return re * re + im * im; }
};

enum class Relation { StrictPositive, NonNegative, EqualZero };

/// "pos", "nonneg", "eq".
std::string to_string(Relation r);
Relation relation_from_string(std::string_view s);

enum class VariableRole { EdgeEntry, VertexCoordinate, LiftCoordinate, CVariable, CuspFixedPoint, Auxiliary };

std::string to_string(VariableRole r);

/// Registered name plus the triangulation feature it stands for. Names:
///   E{edge}o{0|1}r{i}c{j}[re|im]  edge-matrix entry (o1 = reversed edge)
///   V{vertex}a{i}                 vertex image coordinate
///   V{vertex}l{edge}a{i}          coordinate of the lift adjacent across a non-tree edge
///   C{edge}                       cosh(length) - 1
///   P{cusp}a{i}                   cusp fixed point (Re p, Im p, Re q, Im q)
/// Anything else is auxiliary.
struct VariableInfo {
  std::string name;
  VariableRole role = VariableRole::Auxiliary;
  int edge = -1;
  int orientation = -1;
  int row = -1;
  int col = -1;
  /// 0 real, 1 imaginary; -1 for real variables.
  int part = -1;
  int vertex = -1;
  int axis = -1;
  int cusp = -1;
};

/// Recovers the role and indices from a registered name.
VariableInfo classify_variable_name(const std::string& name);

struct Constraint {
  Relation relation = Relation::EqualZero;
  Polynomial polynomial;
  /// Human-readable origin, e.g. "face 0-1-2 r0c1".
  std::string label;
};

struct ComplexityProfile {
  std::size_t N = 0;
  std::size_t kappa = 0;
  int d = 0;
  double M = 0.0;
};

class PolySystem {
 public:
  /// Registers (or looks up) a variable by name.
  VariableId variable(const std::string& name);
  std::optional<VariableId> find(const std::string& name) const;
  const std::vector<VariableInfo>& variables() const { return variables_; }
  const VariableInfo& info(VariableId v) const { return variables_.at(v); }

  void add(Relation r, Polynomial p, std::string label = {});
  const std::vector<Constraint>& constraints() const { return constraints_; }

  /// Notes attached by the generator (reported constants, encodings).
  std::map<std::string, std::string>& notes() { return notes_; }
  const std::map<std::string, std::string>& notes() const { return notes_; }

  bool operator==(const PolySystem& other) const {
    return emitted_equal(other);
  }

 private:
  bool emitted_equal(const PolySystem& other) const;

  std::vector<VariableInfo> variables_;
  std::map<std::string, VariableId> by_name_;
  std::vector<Constraint> constraints_;
  std::map<std::string, std::string> notes_;
};

/// Exact (N, kappa, d, M) with l(p/q) = log2(|pq| + 2).
ComplexityProfile complexity_profile(const PolySystem& s);

/// Each equality f = 0 becomes the pair f >= 0, -f >= 0.
PolySystem expand_equalities(const PolySystem& s);

enum class EmitFormat { Text, Json };

/// Canonical text: a profile header block, one `VAR name` line per registered
/// variable, then one `REL <kind>: <terms>` line per constraint. Terms are
/// sorted by their rendered monomial with the constant last; labels follow
/// as `# ...` comments.
std::string emit_text(const PolySystem& s);
nlohmann::ordered_json emit_json(const PolySystem& s);
std::string emit(const PolySystem& s, EmitFormat format);

/// Inverse of the emitters; throws ParseError-like Error with line numbers.
PolySystem parse_text(std::string_view text);
PolySystem parse_json(const nlohmann::json& j);

/// Renders a polynomial in the text format, e.g. "+1*x^2 -1".
std::string render_polynomial(const PolySystem& s, const Polynomial& p);

struct ResidualReport {
  /// Signed value of each constraint polynomial.
  std::vector<long double> values;
  long double max_equality_residual = 0;
  std::optional<std::size_t> worst_equality;
  /// Smallest value among strict-positive constraints (+inf if none).
  long double min_strict_value = 0;
  std::optional<std::size_t> worst_strict;
  long double min_nonneg_value = 0;
  std::optional<std::size_t> worst_nonneg;
  /// Indices of constraints violated at the thresholds used.
  std::vector<std::size_t> violated;
  bool ok = true;
};

struct ResidualThresholds {
  long double equality = 1e-7L;
  /// Strict constraints need value > strict; non-negative ones >= -nonneg.
  long double strict = 0.0L;
  long double nonneg = 1e-7L;
};

/// Evaluates every constraint; throws Error naming a missing variable.
ResidualReport eval_residuals(const PolySystem& s, const std::map<std::string, long double>& assignment,
                              const ResidualThresholds& thresholds = {});

}  // namespace hyperbound
