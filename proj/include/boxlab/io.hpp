// io.hpp
// JSON serialization: the "box322-v1" distribution format, LP problems and
// solutions, optimization results.
//
//   {"format": "box322-v1",
//    "entries": {"UUU|+++": {"num": 1, "den": 2}, "UUU|-+-": 0.5, ...}}
//
// Omitted keys are zero.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "boxlab/box_world.hpp"
#include "boxlab/lp.hpp"
#include "boxlab/optimizer.hpp"

namespace boxlab::io {

using json = nlohmann::json;

inline constexpr std::string_view kBoxFormat = "box322-v1";

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json to_json(const box::JointDistribution& d);
json to_json(const box::ExactDistribution& d);

// Throws FormatError on a wrong format tag, malformed key, or bad value.
box::JointDistribution distribution_from_json(const json& j);
box::JointDistribution distribution_from_string(std::string_view text);

json to_json(const lp::LinearProgram& lp);
// The point of a 64-variable solution is also given in box322-v1 form under
// "distribution".
json to_json(const lp::LpSolution& sol);
json to_json(const opt::OptimizationResult& res);

}  // namespace boxlab::io
