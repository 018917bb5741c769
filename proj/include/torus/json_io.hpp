#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "torus/verifiers.hpp"

namespace torus::io {

using json = nlohmann::json;

// Rationals travel as "num/den" strings, never as decimals.
Rational rational_from_json(const json& value, const std::string& path);
CirclePoint point_from_json(const json& value, const std::string& path);

json to_json(const ArcUnion& arcs);
ArcUnion arc_union_from_json(const json& value, const std::string& path = "$");

json to_json(const PLCircleMap& map);
PLCircleMap map_from_json(const json& value, const std::string& path = "$");

json to_json(const SeparatedSetReport& report);
SeparatedSetReport separated_report_from_json(const json& value, const std::string& path = "$");

json to_json(const EdgeColoring& coloring);
EdgeColoring coloring_from_json(const json& value, const std::string& path = "$");

json to_json(const RamseyCertificate& cert);
RamseyCertificate certificate_from_json(const json& value, const std::string& path = "$");

json to_json(const VerificationReport& report);
VerificationReport verification_report_from_json(const json& value, const std::string& path = "$");

json to_json(const ShadowResult& result);
ShadowResult shadow_result_from_json(const json& value, const std::string& path = "$");

// Point-set convenience reader: a bare array of rationals, an object with a
// "points" array, or a full separated-set report.
std::vector<CirclePoint> points_from_json(const json& value, const std::string& path = "$");
json points_to_json(const std::vector<CirclePoint>& points);

// Orbit target lists: an array of arrays, an array of rationals (a single
// orbit), or an object with a "targets" key.
std::vector<std::vector<CirclePoint>> target_lists_from_json(const json& value,
                                                             const std::string& path = "$");

std::string read_file(const std::string& path);
json parse_file(const std::string& path);
// Writes via a temp file in the same directory plus rename.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace torus::io
