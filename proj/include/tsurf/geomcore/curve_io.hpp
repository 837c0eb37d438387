#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tsurf/geomcore/curve.hpp"

namespace tsurf::geom {

// {"kind":"analytic","x":"...","y":"...","z":"...","domain":[a,b]} or
// {"kind":"samples","points":[[t,x,y,z],...]}; an optional "arclength": true
// marks a curve that is already unit speed.
Curve curve_from_json(const nlohmann::json& j);
// Only analytic and sampled curves can be written.
nlohmann::json curve_to_json(const Curve& c);
Curve load_curve(const std::filesystem::path& path);

// Named fixtures: line, line(a,b,c), circle(r), helix(a,b), scherk-slice(k)
// with k = 1 or 2 for the two generators of z = log cos x - log cos y, and
// fourier(p,q). Arguments are optional and default to the listed names'
// standard values.
nlohmann::json fixture_json(std::string_view call);
Curve fixture(std::string_view call);
std::vector<std::string> fixture_names();

// Shortest round-trip decimal form of x.
std::string format_double(double x);

}  // namespace tsurf::geom
