#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "squeezekit/cli.hpp"
#include "squeezekit/errors.hpp"
#include "squeezekit/metrics.hpp"
#include "squeezekit/scan.hpp"
#include "squeezekit/schwarz.hpp"
#include "squeezekit/serialize.hpp"
#include "squeezekit/squeezing.hpp"

namespace py = pybind11;
using namespace squeezekit;

namespace {

using Point = std::vector<Complex>;

ComplexVector vec(const Point& p) { return ComplexVector(p); }

Point pt(const ComplexVector& z) { return z.entries(); }

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_squeezekit, m) {
  m.doc() = "C++ core of squeezekit";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<CertificateError>(m, "CertificateError", base.ptr());

  py::class_<BalancedDomain>(m, "Domain")
      .def_static("polydisc", &BalancedDomain::polydisc, py::arg("dim"))
      .def_static("ball", &BalancedDomain::ball, py::arg("dim"))
      .def_static("pnorm_ball", &BalancedDomain::pnorm_ball, py::arg("dim"), py::arg("p"))
      .def_static("weighted_polydisc", &BalancedDomain::weighted_polydisc, py::arg("radii"))
      .def("scaled", &BalancedDomain::scaled, py::arg("factor"))
      .def_property_readonly("dim", &BalancedDomain::dim)
      .def_property_readonly("scale", &BalancedDomain::scale)
      .def_property_readonly("name", &BalancedDomain::name)
      .def("gauge", [](const BalancedDomain& d, const Point& z) { return gauge(d, vec(z)).value; }, py::arg("z"))
      .def("contains", [](const BalancedDomain& d, const Point& z) { return contains(d, vec(z)); }, py::arg("z"))
      .def(
          "boundary_distance",
          [](const BalancedDomain& d, const Point& z) {
            const auto r = boundary_distance(d, vec(z));
            return py::make_tuple(r.value, r.lower_bound);
          },
          py::arg("z"), "(distance, is_lower_bound)")
      .def(
          "sample",
          [](const BalancedDomain& d, std::size_t count, std::uint64_t seed) {
            std::vector<Point> out;
            for (const auto& z : sample_interior(d, count, RngSeed{seed, 0})) out.push_back(pt(z));
            return out;
          },
          py::arg("count"), py::arg("seed") = 42)
      .def("to_json", [](const BalancedDomain& d) { return to_python(to_json(d)); })
      .def("__repr__", [](const BalancedDomain& d) { return "Domain(" + d.name() + ")"; });

  py::class_<Automorphism>(m, "Automorphism")
      .def_static("identity", &Automorphism::identity, py::arg("dim"))
      .def_static("polydisc", &Automorphism::polydisc, py::arg("centers"), py::arg("phases"),
                  py::arg("permutation"))
      .def_static("ball", &Automorphism::ball, py::arg("center"), py::arg("unitary"))
      .def_property_readonly("kind", &Automorphism::kind)
      .def_property_readonly("dim", &Automorphism::dim)
      .def("__call__", [](const Automorphism& f, const Point& z) { return pt(apply(f, vec(z))); }, py::arg("z"))
      .def("inverse", [](const Automorphism& f) { return inverse(f); })
      .def("to_json", [](const Automorphism& f) { return to_python(to_json(f)); });

  m.def(
      "transport_to_origin",
      [](const BalancedDomain& d, const Point& a) { return transport_to_origin(d, vec(a)); }, py::arg("domain"),
      py::arg("a"));
  m.def("alpha", &alpha, py::arg("x"), py::arg("h_a"));
  m.def("poincare", &poincare, py::arg("zeta0"), py::arg("zeta1"));

  m.def(
      "kobayashi_balanced", [](const BalancedDomain& d, const Point& z) { return kobayashi_balanced(d, vec(z)).value; },
      py::arg("domain"), py::arg("z"));
  m.def(
      "kobayashi_homogeneous",
      [](const BalancedDomain& d, const Point& z, const Point& w) {
        return kobayashi_homogeneous(d, vec(z), vec(w)).value;
      },
      py::arg("domain"), py::arg("z"), py::arg("w"));
  m.def(
      "kobayashi_lower_functional",
      [](const BalancedDomain& d, const Point& z) { return kobayashi_lower_functional(d, vec(z)).value; },
      py::arg("domain"), py::arg("z"));
  m.def(
      "lempert_upper",
      [](const BalancedDomain& d, const Point& z, const Point& w, std::size_t degree, bool polish,
         std::uint64_t seed) {
        LempertOptions opts;
        opts.degree = degree;
        opts.polish = polish;
        opts.seed = RngSeed{seed, 0};
        return to_python(to_json(lempert_upper(d, vec(z), vec(w), opts)));
      },
      py::arg("domain"), py::arg("z"), py::arg("w"), py::arg("degree") = 1, py::arg("polish") = true,
      py::arg("seed") = 42, "Returns {value, kind, certificate}.");
  m.def(
      "infinitesimal_upper",
      [](const BalancedDomain& d, const Point& z, const Point& v, const std::string& family) {
        InfinitesimalOptions opts;
        if (family == "transported")
          opts.family = DiscFamily::transported;
        else if (family != "affine")
          throw ArgumentError("family must be 'affine' or 'transported'");
        return infinitesimal_upper(d, vec(z), vec(v), opts);
      },
      py::arg("domain"), py::arg("z"), py::arg("v"), py::arg("family") = "affine");
  m.def(
      "curve_length_upper",
      [](const BalancedDomain& d, const std::vector<Point>& path, std::size_t q, const std::string& family) {
        InfinitesimalOptions opts;
        if (family == "transported")
          opts.family = DiscFamily::transported;
        else if (family != "affine")
          throw ArgumentError("family must be 'affine' or 'transported'");
        std::vector<ComplexVector> p;
        for (const auto& x : path) p.push_back(vec(x));
        return to_python(to_json(curve_length_upper(d, p, q, opts)));
      },
      py::arg("domain"), py::arg("path"), py::arg("q"), py::arg("family") = "transported");
  m.def(
      "boundary_growth_scan",
      [](const BalancedDomain& d, const Point& u, int J) {
        Json rows = Json::array();
        for (const auto& r : boundary_growth_scan(d, vec(u), J)) rows.push_back(to_json(r));
        return to_python(rows);
      },
      py::arg("domain"), py::arg("u"), py::arg("J"));

  m.def(
      "verify_inclusion",
      [](const BalancedDomain& d, const Automorphism& f, double s, std::size_t samples, std::uint64_t seed,
         double tol) {
        InclusionOptions opts;
        opts.samples = samples;
        opts.seed = RngSeed{seed, 0};
        opts.tolerance = tol;
        return to_python(to_json(verify_inclusion(d, f, s, opts)));
      },
      py::arg("domain"), py::arg("f"), py::arg("s"), py::arg("samples") = 100000, py::arg("seed") = 42,
      py::arg("tol") = 1e-12);
  m.def(
      "sharpness_probe",
      [](double h_a, double s) {
        const auto p = sharpness_probe(h_a, s);
        return py::make_tuple(p.z, p.image_gauge);
      },
      py::arg("h_a"), py::arg("s"));

  m.def(
      "inner_radius",
      [](const BalancedDomain& target, const BalancedDomain& image) {
        const auto r = inner_radius(target, ImageRegion::of(image));
        return py::make_tuple(r.value, to_string(r.method));
      },
      py::arg("target"), py::arg("image"));
  m.def(
      "squeeze_transport",
      [](const BalancedDomain& omega, const BalancedDomain& target, const Point& z) {
        return to_python(to_json(squeeze_lower_bound(omega, target, vec(z), transport_family(omega, target)(vec(z)))));
      },
      py::arg("omega"), py::arg("target"), py::arg("z"));
  m.def(
      "squeeze_identity",
      [](const BalancedDomain& omega, const BalancedDomain& target, double factor) {
        const ComplexVector origin = ComplexVector::zeros(omega.dim());
        return to_python(to_json(
            squeeze_lower_bound(omega, target, origin, make_embedding(IdentityScale{factor}, omega, target, origin))));
      },
      py::arg("omega"), py::arg("target"), py::arg("factor"));

  m.def("epsilon_sequence", &epsilon_sequence, py::arg("T"), py::arg("dist"), py::arg("exponent") = 2);
  m.def(
      "radius_chain",
      [](double s, double b, double c, double eps) { return to_python(to_json(radius_chain(s, b, c, eps))); },
      py::arg("s"), py::arg("b"), py::arg("c") = 0.0, py::arg("eps") = 0.0);
  m.def(
      "run_scan",
      [](const BalancedDomain& omega, const BalancedDomain& target, const Point& ray, std::size_t J, int exponent,
         std::size_t skip) {
        ScanConfig config;
        config.exponent = exponent;
        config.skip = skip;
        const auto r = run_scan(omega, target, ray_sequence(vec(ray), J), transport_family(omega, target), config);
        Json rows = Json::array();
        for (const auto& row : r.rows) rows.push_back(to_json(row));
        Json out{{"verdict", r.verdict},
                 {"c", r.c ? Json(*r.c) : Json(nullptr)},
                 {"hypothesis_consistent", r.hypothesis_consistent},
                 {"rows", std::move(rows)}};
        return to_python(out);
      },
      py::arg("omega"), py::arg("target"), py::arg("ray"), py::arg("J"), py::arg("exponent") = 2,
      py::arg("skip") = 0);

  m.def(
      "main",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"squeezekit"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
