#pragma once

#include <string>

#include "json.hpp"
#include "momentcone/catalog.hpp"
#include "momentcone/decompose.hpp"
#include "momentcone/facial.hpp"

namespace momentcone::io {

using basis::Chart;
using basis::FunctionSystem;
using basis::Point;
using decompose::GroundSet;
using exactla::Scalar;
using momentmap::AtomicMeasure;
using momentmap::MomentSequence;
using nlohmann::json;

/// All scalars cross the wire as exact strings ("3/2", "1/2+1/1*sqrt2"),
/// never as floats, so emitted files are stable and bit-exact on re-read.

json point_to_json(const Point& p);
Point point_from_json(const json& j, Chart chart);
Point point_from_string(const std::string& comma_separated, Chart chart);

json system_to_json(const FunctionSystem& sys);
FunctionSystem system_from_json(const json& j);

json measure_to_json(const AtomicMeasure& mu);
AtomicMeasure measure_from_json(const json& j, Chart chart);

json ground_to_json(const GroundSet& x);
GroundSet ground_from_json(const json& j, Chart chart);

json sequence_to_json(const MomentSequence& s);
MomentSequence sequence_from_json(const json& j);

json certificate_to_json(const decompose::MembershipCertificate& cert);
json face_report_to_json(const facial::FaceReport& rep, const GroundSet& x);
json max_mass_report_to_json(const facial::MaxMassReport& rep);
json psp_result_to_json(const facial::PspResult& r);
json core_result_to_json(const facial::CoreVarietyResult& r, const GroundSet& x);
json named_polynomial_to_json(const catalog::NamedPolynomial& p);
json table_row_to_json(const catalog::TableRow& row);
json example_to_json(const catalog::ExampleSystem& ex);

json load_json_file(const std::string& path);

}  // namespace momentcone::io
