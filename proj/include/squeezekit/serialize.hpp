#pragma once

// JSON records and CSV rows for every report type.

#include <string>
#include <vector>

#include "json.hpp"
#include "squeezekit/automorphisms.hpp"
#include "squeezekit/geometry.hpp"
#include "squeezekit/metrics.hpp"
#include "squeezekit/minkowski.hpp"
#include "squeezekit/scan.hpp"
#include "squeezekit/schwarz.hpp"
#include "squeezekit/squeezing.hpp"

namespace squeezekit {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Json to_json(const ComplexVector& z);
Json to_json(const BalancedDomain& domain);
Json to_json(const ReinhardtDomain& domain);
Json to_json(const Automorphism& f);
Json to_json(const GaugeValue& g);
Json to_json(const LinearFunctional& l);
Json to_json(const AnalyticDiscPoly& disc);
Json to_json(const MetricBound& bound);
Json to_json(const CurveLength& length);
Json to_json(const GrowthRow& row);
Json to_json(const InclusionReport& report);
Json to_json(const Embedding& f);
Json to_json(const SqueezeRecord& record);
Json to_json(const RadiusChainRecord& record);
Json to_json(const ScanRecord& record);

Complex complex_from_json(const Json& j);
ComplexVector vector_from_json(const Json& j);
/// Throws UnsupportedVariant for custom gauges (their membership oracle is code).
BalancedDomain domain_from_json(const Json& j);
ReinhardtDomain reinhardt_from_json(const Json& j);
Automorphism automorphism_from_json(const Json& j);
AnalyticDiscPoly disc_from_json(const Json& j);

/// printf("%.17g"); "nan", "inf", "-inf" for non-finite values.
std::string format_double(double x);

/// Scan table columns: j, q (re/im per coordinate), dist, T, eps, c, threshold32,
/// s, b, lhs, rhs, flags, verdict.
std::vector<std::string> scan_csv_header(std::size_t dim);
std::vector<std::string> scan_csv_row(const ScanRecord& record);

std::vector<std::string> growth_csv_header();
std::vector<std::string> growth_csv_row(const GrowthRow& row);

std::vector<std::string> inclusion_csv_header();
std::vector<std::string> inclusion_csv_row(const InclusionReport& report);

std::vector<std::string> squeeze_csv_header(std::size_t dim);
std::vector<std::string> squeeze_csv_row(const SqueezeRecord& record);

/// Joins fields with ',' and quotes any field containing ',', '"' or a newline.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace squeezekit
