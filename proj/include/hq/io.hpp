#pragma once

#include "hq/consistency.hpp"
#include "hq/lagrange.hpp"
#include "hq/qpoly.hpp"
#include "hq/quat.hpp"

#include "json.hpp"

#include <string>

namespace hq::io {

using nlohmann::json;

// Rationals: JSON integer when integral and small, "p/q" (or "p") string
// otherwise. Parse errors name the offending field path, e.g. "left[0].node[1]".
json to_json(const Rat& r);
json to_json(const Quat& q);
json to_json(const QPoly& f);
json to_json(const RawProblem& p);
json to_json(const ReducedProblem& p);
json to_json(const SolutionSet& sol);

Rat rat_from_json(const json& j, const std::string& path);
Quat quat_from_json(const json& j, const std::string& path);
QPoly poly_from_json(const json& j, const std::string& path);
// Rejects a node repeated within one side.
RawProblem problem_from_json(const json& j);

// Quaternion given on the command line: a JSON 4-array or an expression such
// as "1/2-3k".
Quat parse_quat_arg(const std::string& text);

json read_json_file(const std::string& path);

}  // namespace hq::io
