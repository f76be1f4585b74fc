#include "hyperbound/margulis.hpp"

#include <cmath>
#include <numbers>

namespace hyperbound {

std::string to_string(MargulisSource source) {
  switch (source) {
    case MargulisSource::Meyerhoff:
      return "meyerhoff";
    case MargulisSource::Kellerhals:
      return "kellerhals";
    case MargulisSource::UserSupplied:
      return "user";
  }
  return "user";
}

MargulisSource margulis_source_from_string(const std::string& name) {
  if (name == "meyerhoff") return MargulisSource::Meyerhoff;
  if (name == "kellerhals") return MargulisSource::Kellerhals;
  if (name == "user") return MargulisSource::UserSupplied;
  throw DomainError("unknown Margulis constant source '" + name + "'");
}

MargulisConstant epsilon_lower(int n, MargulisSource source, std::optional<long double> user_value) {
  if (n < 3) throw DomainError("epsilon_lower: n must be at least 3");
  switch (source) {
    case MargulisSource::Meyerhoff:
      if (n != 3) throw DomainError("epsilon_lower: the Meyerhoff constant is only available for n = 3");
      return {n, kMeyerhoffEpsilon3, source};
    case MargulisSource::Kellerhals:
      return {n, std::pow(6.0L * std::numbers::pi_v<long double>, -static_cast<long double>(n)), source};
    case MargulisSource::UserSupplied:
      if (!user_value || !(*user_value > 0.0L) || !std::isfinite(static_cast<double>(*user_value))) {
        throw DomainError("epsilon_lower: user-supplied constant must be a positive finite value");
      }
      return {n, *user_value, source};
  }
  throw DomainError("epsilon_lower: unknown source");
}

MargulisConstant default_epsilon(int n) {
  return epsilon_lower(n, n == 3 ? MargulisSource::Meyerhoff : MargulisSource::Kellerhals);
}

BoundCertificate symbolic_certificate(CertificateCase kind, int n, long long t, double edge_bound_log2,
                                      const MargulisConstant& eps) {
  if (n < 3) throw DomainError("symbolic_certificate: n must be at least 3");
  if (t < 1) throw DomainError("symbolic_certificate: t must be at least 1");
  const double ln2 = std::numbers::ln2;
  const double e = static_cast<double>(eps.value);
  BoundCertificate cert;
  cert.certificate_case = kind;
  cert.n = n;
  cert.t = t;
  cert.epsilon = eps;
  cert.symbolic = true;
  cert.edge_bound_B = Magnitude::from_log2(edge_bound_log2);
  const double diameter_log2 = std::log2(static_cast<double>(t)) + edge_bound_log2;
  cert.diameter_bound = Magnitude::from_log2(diameter_log2);
  double reach_log2 = diameter_log2;
  if (kind == CertificateCase::Cusped) {
    // log(tB / eps) = diameter_log2 * ln 2 - ln eps
    const double d0 = diameter_log2 * ln2 - std::log(e);
    if (d0 > 0.0) {
      reach_log2 = log2_add(diameter_log2, std::log2(d0));
      cert.cusp_depth_d0 = d0;
    } else {
      cert.cusp_depth_clamped = d0 < 0.0;
    }
  }
  cert.reach_bound = Magnitude::from_log2(reach_log2);
  cert.tube_radius_formula_value = cert.reach_bound;
  cert.thick_floor_log2 = std::log2(2.0 * e);
  // -log2 R = n (reach + ln(4/eps)) / ln 2
  const double level2 = std::log2(n / ln2) + log2_add(reach_log2, std::log2(std::log(4.0 / e)));
  cert.systole_loglog = {level2, -1};
  cert.systole_log2_lower = level2 < 1000.0 ? -std::exp2(level2) : std::numeric_limits<double>::quiet_NaN();
  return cert;
}

BoundCertificate rederive_certificate(const BoundCertificate& cert) {
  BoundCertificate out;
  if (cert.symbolic) {
    out = symbolic_certificate(cert.certificate_case, cert.n, cert.t, cert.edge_bound_B.log2, cert.epsilon);
    out.big_o_constant = cert.big_o_constant;
    return out;
  }
  const bool cusped = cert.certificate_case == CertificateCase::Cusped;
  if (cert.extended_precision) {
    const auto b = static_cast<ExtendedReal>(cert.edge_bound_B.value);
    return cusped ? cusped_certificate<ExtendedReal>(cert.n, cert.t, b, cert.epsilon)
                  : closed_certificate<ExtendedReal>(cert.n, cert.t, b, cert.epsilon);
  }
  return cusped ? cusped_certificate<double>(cert.n, cert.t, cert.edge_bound_B.value, cert.epsilon)
                : closed_certificate<double>(cert.n, cert.t, cert.edge_bound_B.value, cert.epsilon);
}

namespace {

nlohmann::ordered_json magnitude_json(const Magnitude& m) {
  if (!m.symbolic()) return m.value;
  return nlohmann::ordered_json{{"log2", m.log2}};
}

Magnitude magnitude_from_json(const nlohmann::json& j) {
  if (j.is_number()) return Magnitude::exact(j.get<double>());
  return Magnitude::from_log2(j.at("log2").get<double>());
}

}  // namespace

nlohmann::ordered_json to_json(const BoundCertificate& cert) {
  nlohmann::ordered_json j;
  j["schema"] = BoundCertificate::kSchema;
  j["case"] = cert.certificate_case == CertificateCase::Closed ? "closed" : "cusped";
  j["n"] = cert.n;
  j["t"] = cert.t;
  j["epsilon"] = {{"n", cert.epsilon.n},
                  {"value", static_cast<double>(cert.epsilon.value)},
                  {"source", to_string(cert.epsilon.source)}};
  j["edge_bound_B"] = magnitude_json(cert.edge_bound_B);
  j["diameter_bound"] = magnitude_json(cert.diameter_bound);
  j["reach_bound"] = magnitude_json(cert.reach_bound);
  if (cert.certificate_case == CertificateCase::Cusped) {
    j["cusp_depth_d0"] = cert.cusp_depth_d0;
    j["cusp_depth_clamped"] = cert.cusp_depth_clamped;
  }
  j["tube_radius_formula_value"] = magnitude_json(cert.tube_radius_formula_value);
  j["thick_floor_log2"] = cert.thick_floor_log2;
  if (std::isnan(cert.systole_log2_lower)) {
    j["systole_log2_lower"] = nullptr;
  } else {
    j["systole_log2_lower"] = cert.systole_log2_lower;
  }
  j["systole_loglog"] = {{"level2", cert.systole_loglog.level2}, {"sign", cert.systole_loglog.sign}};
  j["precision"] = cert.extended_precision ? "extended" : "double";
  j["chain"] = cert.symbolic ? "symbolic" : "numeric";
  if (cert.big_o_constant) {
    j["big_o_constant"] = *cert.big_o_constant;
    j["provenance"] = "parameterized bound, c user-supplied, default 1";
  }
  return j;
}

BoundCertificate certificate_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<std::string>() != BoundCertificate::kSchema) {
    throw DomainError("certificate: unsupported schema '" + j.at("schema").get<std::string>() + "'");
  }
  BoundCertificate cert;
  const std::string kind = j.at("case").get<std::string>();
  if (kind != "closed" && kind != "cusped") throw DomainError("certificate: unknown case '" + kind + "'");
  cert.certificate_case = kind == "closed" ? CertificateCase::Closed : CertificateCase::Cusped;
  cert.n = j.at("n").get<int>();
  cert.t = j.at("t").get<long long>();
  const auto& eps = j.at("epsilon");
  cert.epsilon = {eps.at("n").get<int>(), static_cast<long double>(eps.at("value").get<double>()),
                  margulis_source_from_string(eps.at("source").get<std::string>())};
  // The stored double loses the long double bits of computed constants;
  // restore them from the source.
  if (cert.epsilon.source != MargulisSource::UserSupplied) {
    cert.epsilon = epsilon_lower(cert.epsilon.n, cert.epsilon.source);
  }
  cert.edge_bound_B = magnitude_from_json(j.at("edge_bound_B"));
  cert.diameter_bound = magnitude_from_json(j.at("diameter_bound"));
  cert.reach_bound = magnitude_from_json(j.at("reach_bound"));
  if (cert.certificate_case == CertificateCase::Cusped) {
    cert.cusp_depth_d0 = j.at("cusp_depth_d0").get<double>();
    cert.cusp_depth_clamped = j.at("cusp_depth_clamped").get<bool>();
  }
  cert.tube_radius_formula_value = magnitude_from_json(j.at("tube_radius_formula_value"));
  cert.thick_floor_log2 = j.at("thick_floor_log2").get<double>();
  const auto& log2_lower = j.at("systole_log2_lower");
  cert.systole_log2_lower =
      log2_lower.is_null() ? std::numeric_limits<double>::quiet_NaN() : log2_lower.get<double>();
  cert.systole_loglog = {j.at("systole_loglog").at("level2").get<double>(),
                         j.at("systole_loglog").at("sign").get<int>()};
  cert.extended_precision = j.value("precision", std::string("double")) == "extended";
  cert.symbolic = j.value("chain", std::string("numeric")) == "symbolic";
  if (j.contains("big_o_constant")) cert.big_o_constant = j.at("big_o_constant").get<double>();
  return cert;
}

}  // namespace hyperbound
