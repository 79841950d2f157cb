#include "boxlab/io.hpp"

#include <cmath>

#include "boxlab/gnst.hpp"

namespace boxlab::io {

json to_json(const box::JointDistribution& d) {
    json entries = json::object();
    for (std::size_t s = 0; s < 8; ++s)
        for (std::size_t o = 0; o < 8; ++o)
            if (d.at(s, o) != 0.0) entries[box::format_key(s, o, 3)] = d.at(s, o);
    return {{"format", kBoxFormat}, {"entries", entries}};
}

json to_json(const box::ExactDistribution& d) {
    json entries = json::object();
    for (std::size_t s = 0; s < 8; ++s) {
        for (std::size_t o = 0; o < 8; ++o) {
            const Rational& r = d.at(s, o);
            if (r != Rational{0}) entries[box::format_key(s, o, 3)] = {{"num", r.num()}, {"den", r.den()}};
        }
    }
    return {{"format", kBoxFormat}, {"entries", entries}};
}

box::JointDistribution distribution_from_json(const json& j) {
    if (!j.is_object() || !j.contains("format") || j["format"] != kBoxFormat) {
        throw FormatError("expected an object with \"format\": \"box322-v1\"");
    }
    if (!j.contains("entries") || !j["entries"].is_object()) throw FormatError("missing \"entries\" object");
    box::JointDistribution d;
    for (const auto& [key, value] : j["entries"].items()) {
        std::pair<std::size_t, std::size_t> idx;
        try {
            idx = box::parse_key(key, 3);
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
        double v = 0.0;
        if (value.is_number()) {
            v = value.get<double>();
        } else if (value.is_object() && value.contains("num") && value.contains("den") &&
                   value["num"].is_number_integer() && value["den"].is_number_integer()) {
            const auto den = value["den"].get<std::int64_t>();
            if (den == 0) throw FormatError("zero denominator for " + key);
            v = static_cast<double>(value["num"].get<std::int64_t>()) / static_cast<double>(den);
        } else {
            throw FormatError("entry " + key + " must be a number or {\"num\", \"den\"}");
        }
        if (!std::isfinite(v)) throw FormatError("non-finite entry " + key);
        d.at(idx.first, idx.second) = v;
    }
    return d;
}

box::JointDistribution distribution_from_string(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return distribution_from_json(j);
}

namespace {

std::string relation_name(lp::Relation r) {
    switch (r) {
        case lp::Relation::Equal: return "=";
        case lp::Relation::LessEqual: return "<=";
        case lp::Relation::GreaterEqual: return ">=";
    }
    return "?";
}

}  // namespace

json to_json(const lp::LinearProgram& lp) {
    json cons = json::array();
    for (const auto& c : lp.constraints) {
        json terms = json::object();
        for (std::size_t j = 0; j < lp.num_variables; ++j) {
            if (c.coeffs[j] == 0.0) continue;
            const std::string name = lp.variable_names.empty() ? std::to_string(j) : lp.variable_names[j];
            terms[name] = c.coeffs[j];
        }
        cons.push_back({{"label", c.label}, {"terms", terms}, {"relation", relation_name(c.relation)}, {"rhs", c.rhs}});
    }
    json obj = json::object();
    for (std::size_t j = 0; j < lp.num_variables; ++j) {
        if (lp.objective[j] == 0.0) continue;
        obj[lp.variable_names.empty() ? std::to_string(j) : lp.variable_names[j]] = lp.objective[j];
    }
    return {{"sense", "maximize"}, {"variables", lp.num_variables}, {"objective", obj}, {"constraints", cons}};
}

json to_json(const lp::LpSolution& sol) {
    json j{{"status", lp::to_string(sol.status)}, {"iterations", sol.iterations}};
    if (sol.status != lp::Status::Optimal) {
        j["value"] = nullptr;
        j["point"] = nullptr;
        return j;
    }
    j["value"] = sol.value;
    j["point"] = sol.point;
    j["basis"] = sol.basis;
    if (sol.point.size() == 64) j["distribution"] = to_json(lp::to_distribution(sol));
    return j;
}

json to_json(const opt::OptimizationResult& res) {
    json argmax = json::object();
    for (std::size_t k = 0; k < res.names.size() && k < res.argmax.size(); ++k) argmax[res.names[k]] = res.argmax[k];
    json stages = json::array();
    for (const auto& s : res.stages) stages.push_back({{"stage", s.name}, {"best", s.best}});
    return {{"objective", res.objective}, {"argmax", argmax}, {"value", res.value},
            {"evaluations", res.evaluations}, {"stages", stages}};
}

}  // namespace boxlab::io
