#include "squeezekit/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "squeezekit/errors.hpp"
#include "squeezekit/verification.hpp"

namespace squeezekit::cli {

namespace {

struct DomainArgs {
  std::size_t dim = 2;
  double p = 2.0;
  std::vector<double> radii;
  double scale = 1.0;
};

struct CommonArgs {
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  std::size_t samples = 100000;
};

BalancedDomain make_domain(const std::string& kind, const DomainArgs& a) {
  BalancedDomain d = [&] {
    if (kind == "polydisc") return BalancedDomain::polydisc(a.dim);
    if (kind == "ball") return BalancedDomain::ball(a.dim);
    if (kind == "pnorm") return BalancedDomain::pnorm_ball(a.dim, a.p);
    if (kind == "weighted") {
      if (a.radii.size() != a.dim) throw ArgumentError("--radii needs one radius per dimension");
      return BalancedDomain::weighted_polydisc(a.radii);
    }
    throw ArgumentError("unknown domain '" + kind + "'");
  }();
  return a.scale == 1.0 ? d : d.scaled(a.scale);
}

ComplexVector make_point(const std::vector<double>& flat, std::size_t dim, const char* flag) {
  if (flat.size() != 2 * dim)
    throw ArgumentError(std::string(flag) + " expects " + std::to_string(2 * dim) + " numbers (re,im per coordinate)");
  return ComplexVector::from_interleaved(flat);
}

Automorphism make_automorphism(const BalancedDomain& d, const std::vector<double>& center,
                               const std::vector<double>& phases) {
  if (center.empty()) return Automorphism::identity(d.dim());
  const ComplexVector a = make_point(center, d.dim(), "--center");
  if (a.is_zero() && phases.empty()) return Automorphism::identity(d.dim());
  if (d.is_polydisc() || (d.dim() == 1 && d.is_ball())) {
    std::vector<double> ph = phases.empty() ? std::vector<double>(d.dim(), 0.0) : phases;
    std::vector<std::size_t> perm(d.dim());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    return Automorphism::polydisc(a.entries(), ph, perm);
  }
  if (d.is_ball()) {
    std::vector<Complex> identity(d.dim() * d.dim(), 0.0);
    for (std::size_t i = 0; i < d.dim(); ++i) identity[i * d.dim() + i] = 1.0;
    return Automorphism::ball(a.entries(), identity);
  }
  throw UnsupportedVariant("automorphisms exist only for the unit polydisc and ball");
}

std::string fmt(double x) { return format_double(x); }

/// Shorter rendering for human-readable summaries.
std::string txt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

void add_domain_options(CLI::App* cmd, DomainArgs& a, std::string& kind, const std::string& flag) {
  cmd->add_option(flag, kind, "polydisc | ball | pnorm | weighted")->capture_default_str();
  cmd->add_option("--dim", a.dim, "complex dimension")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--p", a.p, "exponent for pnorm domains")->capture_default_str();
  cmd->add_option("--radii", a.radii, "radii for weighted polydiscs")->delimiter(',');
  cmd->add_option("--scale", a.scale, "scale factor c (the domain c*D)")->capture_default_str();
}

void add_common_options(CLI::App* cmd, CommonArgs& c) {
  cmd->add_option("--format", c.format, "text | csv | jsonl (record-stream)")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "csv", "jsonl", "record-stream"}));
  cmd->add_option("-o,--output", c.output, "output path (stdout when omitted)");
  cmd->add_option("--seed", c.seed, "random seed")->envname("SQUEEZEKIT_SEED")->capture_default_str();
  cmd->add_option("--tol", c.tolerance, "verification tolerance")->capture_default_str()->check(
      CLI::PositiveNumber);
  cmd->add_option("--samples", c.samples, "Monte-Carlo samples")->capture_default_str()->check(
      CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
}

Format parse_format(const std::string& f) {
  if (f == "csv") return Format::csv;
  if (f == "jsonl" || f == "record-stream") return Format::jsonl;
  return Format::text;
}

struct Outcome {
  Report report;
  bool passed = true;
};

}  // namespace

bool emit_report(const Report& report, Format format, const std::string& path, std::ostream& stdout_stream) {
  std::ofstream file;
  if (!path.empty()) {
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) return false;
  }
  std::ostream& out = path.empty() ? stdout_stream : file;
  switch (format) {
    case Format::text:
      for (const auto& line : report.text) out << line << '\n';
      break;
    case Format::csv:
      out << csv_line(report.header) << '\n';
      for (const auto& row : report.rows) out << csv_line(row) << '\n';
      break;
    case Format::jsonl:
      for (const auto& record : report.records) out << record.dump() << '\n';
      break;
  }
  out.flush();
  return static_cast<bool>(out);
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauges, invariant metrics, Schwarz inclusions and squeezing bounds for balanced convex domains",
               "squeezekit"};
  app.require_subcommand(1);
  CommonArgs common;
  DomainArgs dom;
  std::string domain_kind = "polydisc";
  std::string omega_kind = "polydisc";
  std::string target_kind = "polydisc";
  std::vector<double> point, zpt, wpt, center, phases, ray, base;
  std::string method = "closed-form";
  std::string embedding = "transport";
  std::size_t chain = 2, degree = 1, restarts = 2, J = 12, skip = 0, draws = 1000;
  int exponent = 2;
  double s = 0.8, h_a = 0.5, factor = 0.0;

  auto* gauge_cmd = app.add_subcommand("gauge", "Minkowski gauge of a point");
  add_domain_options(gauge_cmd, dom, domain_kind, "--domain");
  gauge_cmd->add_option("--point", point, "re,im pairs")->delimiter(',')->required();

  auto* kdist_cmd = app.add_subcommand("kdist", "Kobayashi distance: closed form or bounds");
  add_domain_options(kdist_cmd, dom, domain_kind, "--domain");
  kdist_cmd->add_option("--z", zpt, "first point (origin when omitted)")->delimiter(',');
  kdist_cmd->add_option("--w", wpt, "second point")->delimiter(',')->required();
  kdist_cmd->add_option("--method", method, "closed-form | upper | lower | chain")
      ->capture_default_str()
      ->check(CLI::IsMember({"closed-form", "upper", "lower", "chain"}));
  kdist_cmd->add_option("--chain", chain, "chain length for --method chain")->capture_default_str();
  kdist_cmd->add_option("--degree", degree, "polynomial disc degree")->capture_default_str();

  auto* disc_cmd = app.add_subcommand("disc", "Optimize a polynomial analytic disc through two points");
  add_domain_options(disc_cmd, dom, domain_kind, "--domain");
  disc_cmd->add_option("--z", zpt, "first point")->delimiter(',')->required();
  disc_cmd->add_option("--w", wpt, "second point")->delimiter(',')->required();
  disc_cmd->add_option("--degree", degree, "polynomial degree")->capture_default_str();
  disc_cmd->add_option("--restarts", restarts, "random restarts")->capture_default_str();

  auto* schwarz_cmd = app.add_subcommand("schwarz", "Monte-Carlo check of alpha(s) D inside F^-1(s D)");
  add_domain_options(schwarz_cmd, dom, domain_kind, "--domain");
  schwarz_cmd->add_option("--center", center, "F(0) as re,im pairs (identity when omitted)")->delimiter(',');
  schwarz_cmd->add_option("--phases", phases, "polydisc rotation angles")->delimiter(',');
  schwarz_cmd->add_option("--s", s, "target level s")->capture_default_str();

  auto* sharp_cmd = app.add_subcommand("sharpness", "One-variable sharpness probe for alpha(s)");
  sharp_cmd->add_option("--ha", h_a, "h(F(0)) in [0, 1)")->capture_default_str();
  sharp_cmd->add_option("--s", s, "level s in (h_a, 1)")->capture_default_str();

  auto* squeeze_cmd = app.add_subcommand("squeeze", "Certified squeezing lower bound at a point");
  add_domain_options(squeeze_cmd, dom, omega_kind, "--omega");
  squeeze_cmd->add_option("--target", target_kind, "model domain D")->capture_default_str();
  squeeze_cmd->add_option("--point", point, "base point")->delimiter(',');
  squeeze_cmd->add_option("--embedding", embedding, "transport | identity")
      ->capture_default_str()
      ->check(CLI::IsMember({"transport", "identity"}));
  squeeze_cmd->add_option("--factor", factor, "scale of the identity embedding (largest admissible when omitted)");

  auto* scan_cmd = app.add_subcommand("scan", "Boundary scan along a ray with the inequality chain");
  add_domain_options(scan_cmd, dom, omega_kind, "--omega");
  scan_cmd->add_option("--target", target_kind, "model domain D")->capture_default_str();
  scan_cmd->add_option("--ray", ray, "direction u; q_j = (1 - 2^-j) u")->delimiter(',')->required();
  scan_cmd->add_option("--J", J, "number of points")->capture_default_str();
  scan_cmd->add_option("--exponent", exponent, "compensating exponent (1 or 2)")
      ->capture_default_str()
      ->check(CLI::IsMember({1, 2}));
  scan_cmd->add_option("--skip", skip, "rows j <= N do not gate the verdict")->capture_default_str();
  scan_cmd->add_option("--base", base, "base point z0 (origin when omitted)")->delimiter(',');

  auto* growth_cmd = app.add_subcommand("growth", "K(0, z_j) against boundary distance along a ray");
  add_domain_options(growth_cmd, dom, domain_kind, "--domain");
  growth_cmd->add_option("--direction", ray, "direction u with gauge 1")->delimiter(',')->required();
  growth_cmd->add_option("--J", J, "number of points")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify-all", "Run the randomized property suite");
  verify_cmd->add_option("--draws", draws, "random draws per property")->capture_default_str();

  for (auto* cmd : {gauge_cmd, kdist_cmd, disc_cmd, schwarz_cmd, sharp_cmd, squeeze_cmd, scan_cmd, growth_cmd,
                    verify_cmd})
    add_common_options(cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const RngSeed seed{common.seed, 0};
  Outcome result;
  Report& rep = result.report;
  try {
    if (gauge_cmd->parsed()) {
      const BalancedDomain d = make_domain(domain_kind, dom);
      const GaugeValue g = gauge(d, make_point(point, d.dim(), "--point"));
      rep.header = {"value", "method", "tolerance"};
      rep.rows.push_back({fmt(g.value), to_string(g.method), fmt(g.tolerance)});
      rep.records.push_back(to_json(g));
      rep.text.push_back(txt(g.value));
    } else if (kdist_cmd->parsed()) {
      const BalancedDomain d = make_domain(domain_kind, dom);
      const ComplexVector w = make_point(wpt, d.dim(), "--w");
      const ComplexVector z = zpt.empty() ? ComplexVector::zeros(d.dim()) : make_point(zpt, d.dim(), "--z");
      MetricBound b{0.0, BoundKind::exact, std::string()};
      if (method == "closed-form") {
        b = z.is_zero() ? kobayashi_balanced(d, w) : kobayashi_homogeneous(d, z, w);
      } else if (method == "lower") {
        if (!z.is_zero()) throw ArgumentError("--method lower bounds K(0, w); omit --z");
        b = kobayashi_lower_functional(d, w);
      } else {
        LempertOptions opts;
        opts.degree = degree;
        opts.seed = seed;
        if (method == "upper") {
          b = lempert_upper(d, z, w, opts);
        } else {
          ChainOptions copts;
          copts.lempert = opts;
          b = kobayashi_upper_chain(d, z, w, chain, copts);
        }
      }
      rep.header = {"value", "kind", "method"};
      rep.rows.push_back({fmt(b.value), to_string(b.kind), method});
      rep.records.push_back(to_json(b));
      rep.text.push_back(txt(b.value) + " (" + to_string(b.kind) + ", " + method + ")");
    } else if (disc_cmd->parsed()) {
      const BalancedDomain d = make_domain(domain_kind, dom);
      LempertOptions opts;
      opts.degree = degree;
      opts.restarts = restarts;
      opts.seed = seed;
      const MetricBound b =
          lempert_upper(d, make_point(zpt, d.dim(), "--z"), make_point(wpt, d.dim(), "--w"), opts);
      const auto& disc = std::get<AnalyticDiscPoly>(b.certificate);
      const DiscCheck check = check_disc(
          d, [&](Complex zeta) { return disc(zeta); }, disc.zeta0, disc.zeta1, make_point(zpt, d.dim(), "--z"),
          make_point(wpt, d.dim(), "--w"), disc.grid);
      result.passed = check.admissible() && check.interpolation_error <= common.tolerance;
      rep.header = {"value", "degree", "margin", "interpolation_error"};
      rep.rows.push_back({fmt(b.value), std::to_string(disc.degree()), fmt(check.margin),
                          fmt(check.interpolation_error)});
      Json j = to_json(b);
      j["interpolation_error"] = check.interpolation_error;
      rep.records.push_back(std::move(j));
      rep.text.push_back("lempert upper bound " + txt(b.value) + " (degree " + std::to_string(disc.degree()) +
                         ", margin " + txt(check.margin) + ", interpolation error " +
                         txt(check.interpolation_error) + ")");
    } else if (schwarz_cmd->parsed()) {
      const BalancedDomain d = make_domain(domain_kind, dom);
      InclusionOptions opts;
      opts.samples = common.samples;
      opts.seed = seed;
      opts.tolerance = common.tolerance;
      const InclusionReport r = verify_inclusion(d, make_automorphism(d, center, phases), s, opts);
      result.passed = r.passed();
      rep.header = inclusion_csv_header();
      rep.rows.push_back(inclusion_csv_row(r));
      rep.records.push_back(to_json(r));
      rep.text.push_back(std::to_string(r.violations) + " violations in " + std::to_string(r.samples) +
                         " samples (s = " + txt(s) + ", h(F(0)) = " + txt(r.h_F0) + ", alpha = " + txt(r.alpha_s) +
                         ", max excess " + txt(r.max_excess) + ")");
    } else if (sharp_cmd->parsed()) {
      const SharpnessProbe p = sharpness_probe(h_a, s);
      const double gap = std::abs(p.image_gauge - s);
      result.passed = gap <= common.tolerance;
      rep.header = {"h_a", "s", "z", "image_gauge", "gap"};
      rep.rows.push_back({fmt(h_a), fmt(s), fmt(p.z), fmt(p.image_gauge), fmt(gap)});
      rep.records.push_back({{"h_a", h_a}, {"s", s}, {"z", p.z}, {"image_gauge", p.image_gauge}, {"gap", gap}});
      rep.text.push_back("z = " + txt(p.z) + ", |F(z)| = " + txt(p.image_gauge));
    } else if (squeeze_cmd->parsed()) {
      const BalancedDomain omega = make_domain(omega_kind, dom);
      const BalancedDomain target = make_domain(target_kind, DomainArgs{dom.dim, dom.p, dom.radii, 1.0});
      const ComplexVector z = point.empty() ? ComplexVector::zeros(omega.dim()) : make_point(point, omega.dim(), "--point");
      Embedding f = [&] {
        if (embedding == "transport") return transport_family(omega, target)(z);
        if (!z.is_zero()) throw ArgumentError("the identity embedding needs the base point 0");
        double c = factor;
        if (c == 0.0) {
          const auto ratio = norm_ratio(omega, target);
          if (!ratio) throw UnsupportedVariant("no closed-form scale; pass --factor");
          c = 1.0 / *ratio;
        }
        return make_embedding(IdentityScale{c}, omega, target, z);
      }();
      InnerRadiusOptions opts;
      opts.seed = seed;
      const SqueezeRecord r = squeeze_lower_bound(omega, target, z, f, opts);
      rep.header = squeeze_csv_header(omega.dim());
      rep.rows.push_back(squeeze_csv_row(r));
      rep.records.push_back(to_json(r));
      rep.text.push_back("squeezing lower bound " + txt(r.radius) + " (" + to_string(r.method) + ", " +
                         r.embedding.id() + ")");
    } else if (scan_cmd->parsed()) {
      const BalancedDomain omega = make_domain(omega_kind, dom);
      const BalancedDomain target = make_domain(target_kind, DomainArgs{dom.dim, dom.p, dom.radii, 1.0});
      ScanConfig config;
      config.exponent = exponent;
      config.skip = skip;
      config.inner.seed = seed;
      if (!base.empty()) config.base = make_point(base, omega.dim(), "--base");
      const ComplexVector u = make_point(ray, omega.dim(), "--ray");
      const ScanResult r = run_scan(omega, target, ray_sequence(u, J), transport_family(omega, target), config);
      result.passed = r.verdict != "chain-not-verified";
      rep.header = scan_csv_header(omega.dim());
      for (const auto& row : r.rows) {
        rep.rows.push_back(scan_csv_row(row));
        rep.records.push_back(to_json(row));
      }
      rep.text.push_back("j  dist  T  eps  threshold32  b  final_radius  flags  verdict");
      for (const auto& row : r.rows)
        rep.text.push_back(std::to_string(row.j) + "  " + txt(row.dist) + "  " + txt(row.T) + "  " + txt(row.eps) +
                           "  " + txt(row.threshold32) + "  " + txt(row.b) + "  " +
                           (row.final_radius ? txt(*row.final_radius) : "-") + "  " + row.flags + "  " + row.verdict);
      rep.text.push_back("c = " + (r.c ? txt(*r.c) : std::string("n/a")) + ", hypothesis " +
                         (r.hypothesis_consistent ? "consistent" : "inconsistent") + ", verdict " + r.verdict);
    } else if (growth_cmd->parsed()) {
      const BalancedDomain d = make_domain(domain_kind, dom);
      const auto rows = boundary_growth_scan(d, make_point(ray, d.dim(), "--direction"), static_cast<int>(J));
      rep.header = growth_csv_header();
      rep.text.push_back("j  dist  K  K+log(dist)  K+log(dist)/2");
      for (const auto& row : rows) {
        rep.rows.push_back(growth_csv_row(row));
        rep.records.push_back(to_json(row));
        rep.text.push_back(std::to_string(row.j) + "  " + txt(row.dist) + "  " + txt(row.kobayashi) + "  " +
                           txt(row.compensated_full) + "  " + txt(row.compensated_half));
      }
    } else if (verify_cmd->parsed()) {
      SuiteOptions opts;
      opts.samples = draws;
      opts.inclusion_samples = common.samples;
      opts.seed = seed;
      const auto results = run_property_suite(opts);
      rep.header = {"property", "checks", "failures", "worst", "status", "detail"};
      for (const auto& r : results) {
        const std::string status = r.passed() ? "pass" : "FAIL";
        result.passed = result.passed && r.passed();
        rep.rows.push_back({r.name, std::to_string(r.checks), std::to_string(r.failures), fmt(r.worst), status,
                            r.detail});
        rep.records.push_back({{"property", r.name},
                               {"checks", r.checks},
                               {"failures", r.failures},
                               {"worst", r.worst},
                               {"status", status},
                               {"detail", r.detail}});
        rep.text.push_back(status + "  " + r.name + "  (" + std::to_string(r.checks) + " checks" +
                           (r.failures ? ", " + std::to_string(r.failures) + " failures" : std::string()) + ")" +
                           (r.detail.empty() ? "" : "  " + r.detail));
      }
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedVariant& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (!emit_report(rep, parse_format(common.format), common.output, out)) {
    err << "error: cannot write " << common.output << '\n';
    return 2;
  }
  return result.passed ? 0 : 1;
}

}  // namespace squeezekit::cli
