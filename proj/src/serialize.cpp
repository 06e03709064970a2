#include "squeezekit/serialize.hpp"

#include <cmath>
#include <cstdio>

#include "overloaded.hpp"
#include "squeezekit/errors.hpp"

namespace squeezekit {

using detail::Overloaded;

namespace {

Json complex_array(const std::vector<Complex>& values) {
  Json out = Json::array();
  for (Complex z : values) out.push_back(to_json(z));
  return out;
}

std::vector<Complex> complex_list(const Json& j) {
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ArgumentError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("field '") + key + "': " + e.what());
  }
}

void append_vector(std::vector<std::string>& fields, const ComplexVector& z) {
  for (Complex e : z) {
    fields.push_back(format_double(e.real()));
    fields.push_back(format_double(e.imag()));
  }
}

void append_vector_header(std::vector<std::string>& fields, const std::string& name, std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    fields.push_back(name + std::to_string(i + 1) + "_re");
    fields.push_back(name + std::to_string(i + 1) + "_im");
  }
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexVector& z) { return complex_array(z.entries()); }

Json to_json(const BalancedDomain& domain) {
  Json out;
  std::visit(Overloaded{[&](const Polydisc& s) {
                          out["type"] = "polydisc";
                          out["dim"] = s.dim;
                        },
                        [&](const EuclideanBall& s) {
                          out["type"] = "ball";
                          out["dim"] = s.dim;
                        },
                        [&](const PNormBall& s) {
                          out["type"] = "pnorm";
                          out["dim"] = s.dim;
                          out["p"] = s.p;
                        },
                        [&](const WeightedPolydisc& s) {
                          out["type"] = "weighted";
                          out["dim"] = s.radii.size();
                          out["radii"] = s.radii;
                        },
                        [&](const CustomGauge& s) {
                          out["type"] = "custom";
                          out["dim"] = s.dim;
                          out["label"] = s.label;
                        }},
             domain.shape());
  out["scale"] = domain.scale();
  return out;
}

Json to_json(const ReinhardtDomain& domain) {
  Json constraints = Json::array();
  for (const auto& c : domain.constraints()) constraints.push_back({{"exponents", c.exponents}, {"bound", c.bound}});
  return {{"type", "reinhardt"},
          {"dim", domain.dim()},
          {"box_radius", domain.box_radius()},
          {"constraints", std::move(constraints)}};
}

Json to_json(const Automorphism& f) {
  return std::visit(Overloaded{[](const IdentityAutomorphism& a) -> Json {
                                 return {{"type", "identity"}, {"dim", a.dim}};
                               },
                               [](const PolydiscAutomorphism& a) -> Json {
                                 return {{"type", "polydisc"},
                                         {"centers", complex_array(a.centers)},
                                         {"phases", a.phases},
                                         {"permutation", a.permutation}};
                               },
                               [](const BallAutomorphism& a) -> Json {
                                 return {{"type", "ball"},
                                         {"center", complex_array(a.center)},
                                         {"unitary", complex_array(a.unitary)}};
                               }},
                    f.spec());
}

Json to_json(const GaugeValue& g) {
  return {{"value", g.value}, {"method", to_string(g.method)}, {"tolerance", g.tolerance}};
}

Json to_json(const LinearFunctional& l) { return {{"coefficients", to_json(l.coefficients)}}; }

Json to_json(const AnalyticDiscPoly& disc) {
  Json coeffs = Json::array();
  for (const auto& c : disc.coefficients) coeffs.push_back(to_json(c));
  return {{"coefficients", std::move(coeffs)},
          {"zeta0", to_json(disc.zeta0)},
          {"zeta1", to_json(disc.zeta1)},
          {"margin", disc.margin},
          {"grid", disc.grid}};
}

Json to_json(const MetricBound& bound) {
  Json cert = std::visit(Overloaded{[](const std::string& tag) -> Json {
                                      return {{"type", "closed-form"}, {"tag", tag}};
                                    },
                                    [](const AnalyticDiscPoly& d) -> Json {
                                      Json j = to_json(d);
                                      j["type"] = "disc";
                                      return j;
                                    },
                                    [](const LinearFunctional& l) -> Json {
                                      Json j = to_json(l);
                                      j["type"] = "functional";
                                      return j;
                                    },
                                    [](const std::vector<AnalyticDiscPoly>& chain) -> Json {
                                      Json discs = Json::array();
                                      for (const auto& d : chain) discs.push_back(to_json(d));
                                      return {{"type", "chain"}, {"discs", std::move(discs)}};
                                    }},
                         bound.certificate);
  return {{"value", bound.value}, {"kind", to_string(bound.kind)}, {"certificate", std::move(cert)}};
}

Json to_json(const CurveLength& length) {
  return {{"value", length.value},
          {"refined_value", length.refined_value},
          {"richardson_residual", length.richardson_residual},
          {"nodes_per_segment", length.nodes_per_segment}};
}

Json to_json(const GrowthRow& row) {
  return {{"j", row.j},
          {"dist", row.dist},
          {"dist_lower_bound", row.dist_lower_bound},
          {"K", row.kobayashi},
          {"K_plus_log_dist", row.compensated_full},
          {"K_plus_half_log_dist", row.compensated_half}};
}

Json to_json(const InclusionReport& report) {
  return {{"domain", to_json(report.domain)},
          {"automorphism", to_json(report.automorphism)},
          {"s", report.s},
          {"h_F0", report.h_F0},
          {"alpha_s", report.alpha_s},
          {"samples", report.samples},
          {"violations", report.violations},
          {"max_excess", report.max_excess},
          {"tolerance", report.tolerance},
          {"seed", report.seed.seed},
          {"stream", report.seed.stream}};
}

Json to_json(const Embedding& f) {
  Json map = std::visit(Overloaded{[](const IdentityScale& m) -> Json {
                                     return {{"type", "identity-scale"}, {"factor", m.factor}};
                                   },
                                   [](const AutomorphismCompose& m) -> Json {
                                     return {{"type", "automorphism-compose"},
                                             {"automorphism", to_json(m.automorphism)},
                                             {"factor", m.factor}};
                                   },
                                   [](const CoordinateAffine& m) -> Json {
                                     return {{"type", "coordinate-affine"},
                                             {"scales", complex_array(m.scales)},
                                             {"translation", to_json(m.translation)}};
                                   }},
                        f.map);
  return {{"map", std::move(map)},
          {"source", to_json(f.source)},
          {"target", to_json(f.target)},
          {"base", to_json(f.base)}};
}

Json to_json(const SqueezeRecord& record) {
  return {{"base", to_json(record.base)},
          {"embedding", record.embedding.id()},
          {"certificate", to_json(record.embedding)},
          {"radius", record.radius},
          {"target", record.target},
          {"method", to_string(record.method)},
          {"samples", record.samples}};
}

Json to_json(const RadiusChainRecord& r) {
  return {{"identity_lhs", r.identity_lhs},
          {"identity_rhs", r.identity_rhs},
          {"x", r.x},
          {"lower_bound_1m4", r.lower_bound_1m4},
          {"lower_bound_ok", r.lower_bound_ok},
          {"sqrt_vs_linear_ok", r.sqrt_vs_linear_ok},
          {"gate_ok", r.gate_ok},
          {"bound_route_ok", r.bound_route_ok}};
}

Json to_json(const ScanRecord& r) {
  Json out{{"j", r.j},
           {"q", to_json(r.q)},
           {"dist", r.dist},
           {"T", r.T},
           {"eps", r.eps},
           {"c", r.c},
           {"threshold32", r.threshold32},
           {"s", r.s},
           {"b", r.b},
           {"lhs", r.radius_chain ? Json(r.radius_chain->identity_lhs) : Json(nullptr)},
           {"rhs", r.radius_chain ? Json(r.radius_chain->identity_rhs) : Json(nullptr)},
           {"flags", r.flags},
           {"verdict", r.verdict}};
  out["dist_lower_bound"] = r.dist_lower_bound;
  out["base_image_ok"] = r.base_image_ok;
  out["radius_chain"] = r.radius_chain ? to_json(*r.radius_chain) : Json(nullptr);
  out["lower_bound_1m4"] = r.radius_chain ? Json(r.radius_chain->lower_bound_1m4) : Json(nullptr);
  out["required_radius"] = r.required_radius;
  out["final_radius"] = r.final_radius ? Json(*r.final_radius) : Json(nullptr);
  out["final_method"] = r.final_method ? Json(to_string(*r.final_method)) : Json(nullptr);
  out["gating"] = r.gating;
  return out;
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ArgumentError("complex number must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ArgumentError("complex vector must be an array of [re, im] pairs");
  return ComplexVector(complex_list(j));
}

BalancedDomain domain_from_json(const Json& j) {
  const auto type = field<std::string>(j, "type");
  const double scale = j.contains("scale") ? field<double>(j, "scale") : 1.0;
  BalancedDomain base = [&] {
    if (type == "polydisc") return BalancedDomain::polydisc(field<std::size_t>(j, "dim"));
    if (type == "ball") return BalancedDomain::ball(field<std::size_t>(j, "dim"));
    if (type == "pnorm") return BalancedDomain::pnorm_ball(field<std::size_t>(j, "dim"), field<double>(j, "p"));
    if (type == "weighted") return BalancedDomain::weighted_polydisc(field<std::vector<double>>(j, "radii"));
    if (type == "custom") throw UnsupportedVariant("custom gauges cannot be read back from JSON");
    throw ArgumentError("unknown domain type '" + type + "'");
  }();
  return scale == 1.0 ? base : base.scaled(scale);
}

ReinhardtDomain reinhardt_from_json(const Json& j) {
  if (field<std::string>(j, "type") != "reinhardt") throw ArgumentError("expected a reinhardt domain");
  std::vector<MonomialConstraint> constraints;
  for (const auto& c : field<Json>(j, "constraints"))
    constraints.push_back({field<std::vector<double>>(c, "exponents"), field<double>(c, "bound")});
  return ReinhardtDomain(field<std::size_t>(j, "dim"), std::move(constraints), field<double>(j, "box_radius"));
}

Automorphism automorphism_from_json(const Json& j) {
  const auto type = field<std::string>(j, "type");
  if (type == "identity") return Automorphism::identity(field<std::size_t>(j, "dim"));
  if (type == "polydisc")
    return Automorphism::polydisc(complex_list(field<Json>(j, "centers")), field<std::vector<double>>(j, "phases"),
                                  field<std::vector<std::size_t>>(j, "permutation"));
  if (type == "ball")
    return Automorphism::ball(complex_list(field<Json>(j, "center")), complex_list(field<Json>(j, "unitary")));
  throw ArgumentError("unknown automorphism type '" + type + "'");
}

AnalyticDiscPoly disc_from_json(const Json& j) {
  AnalyticDiscPoly disc;
  for (const auto& c : field<Json>(j, "coefficients")) disc.coefficients.push_back(vector_from_json(c));
  if (disc.coefficients.empty()) throw ArgumentError("disc needs at least one coefficient");
  disc.zeta0 = complex_from_json(field<Json>(j, "zeta0"));
  disc.zeta1 = complex_from_json(field<Json>(j, "zeta1"));
  disc.margin = j.contains("margin") ? field<double>(j, "margin") : 0.0;
  disc.grid = j.contains("grid") ? field<std::size_t>(j, "grid") : 0;
  return disc;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> scan_csv_header(std::size_t dim) {
  std::vector<std::string> h{"j"};
  append_vector_header(h, "q", dim);
  for (const char* name : {"dist", "T", "eps", "c", "threshold32", "s", "b", "lhs", "rhs", "flags", "verdict"})
    h.emplace_back(name);
  return h;
}

std::vector<std::string> scan_csv_row(const ScanRecord& r) {
  std::vector<std::string> f{std::to_string(r.j)};
  append_vector(f, r.q);
  for (double v : {r.dist, r.T, r.eps, r.c, r.threshold32, r.s, r.b}) f.push_back(format_double(v));
  f.push_back(r.radius_chain ? format_double(r.radius_chain->identity_lhs) : "");
  f.push_back(r.radius_chain ? format_double(r.radius_chain->identity_rhs) : "");
  f.push_back(r.flags);
  f.push_back(r.verdict);
  return f;
}

std::vector<std::string> growth_csv_header() {
  return {"j", "dist", "K", "K_plus_log_dist", "K_plus_half_log_dist"};
}

std::vector<std::string> growth_csv_row(const GrowthRow& row) {
  return {std::to_string(row.j), format_double(row.dist), format_double(row.kobayashi),
          format_double(row.compensated_full), format_double(row.compensated_half)};
}

std::vector<std::string> inclusion_csv_header() {
  return {"domain", "automorphism", "s", "h_F0", "alpha_s", "samples", "violations", "max_excess", "seed"};
}

std::vector<std::string> inclusion_csv_row(const InclusionReport& r) {
  return {r.domain.name(),
          r.automorphism.kind(),
          format_double(r.s),
          format_double(r.h_F0),
          format_double(r.alpha_s),
          std::to_string(r.samples),
          std::to_string(r.violations),
          format_double(r.max_excess),
          std::to_string(r.seed.seed)};
}

std::vector<std::string> squeeze_csv_header(std::size_t dim) {
  std::vector<std::string> h;
  append_vector_header(h, "z", dim);
  for (const char* name : {"embedding", "radius", "target", "method", "samples"}) h.emplace_back(name);
  return h;
}

std::vector<std::string> squeeze_csv_row(const SqueezeRecord& r) {
  std::vector<std::string> f;
  append_vector(f, r.base);
  f.push_back(r.embedding.id());
  f.push_back(format_double(r.radius));
  f.push_back(r.target);
  f.push_back(to_string(r.method));
  f.push_back(std::to_string(r.samples));
  return f;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char ch : f) {
      if (ch == '"') out += '"';
      out += ch;
    }
    out += '"';
  }
  return out;
}

}  // namespace squeezekit
