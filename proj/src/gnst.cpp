#include "boxlab/gnst.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace boxlab::lp {

namespace {

std::size_t var(std::string_view key) {
    const auto [s, o] = box::parse_key(key, 3);
    return s * 8 + o;
}

std::vector<double> unit(std::size_t n, std::initializer_list<std::string_view> keys, std::size_t parties = 3) {
    std::vector<double> row(n, 0.0);
    for (auto k : keys) {
        const auto [s, o] = box::parse_key(k, parties);
        row[s * (std::size_t{1} << parties) + o] += 1.0;
    }
    return row;
}

void add_hardy_zeros(LinearProgram& lp) {
    for (auto key : {"DUU|+++", "UDU|+++", "UUD|+++"}) {
        lp.add_equality(unit(64, {key}), 0.0, std::string("zero ") + key);
    }
}

// Sum over the free party's outcomes for both of its settings (and both
// outcomes), giving one equality per setting of the ignored party.
void add_pair_zero(LinearProgram& lp, std::size_t free_party, const char* pattern, const char* label) {
    // pattern is a 3-party key with '*' at the ignored party's setting slot and
    // '.' at its outcome slot.
    for (char s : {'U', 'D'}) {
        std::vector<double> row(64, 0.0);
        for (char o : {'+', '-'}) {
            std::string key(pattern);
            key[free_party] = s;
            key[4 + free_party] = o;
            row[var(key)] += 1.0;
        }
        lp.add_equality(std::move(row), 0.0, std::string(label) + " (ignored party at " + s + ")");
    }
}

void name_variables(LinearProgram& lp, std::size_t parties) {
    const std::size_t rows = std::size_t{1} << parties;
    lp.variable_names.clear();
    for (std::size_t s = 0; s < rows; ++s)
        for (std::size_t o = 0; o < rows; ++o) lp.variable_names.push_back(box::format_key(s, o, parties));
}

}  // namespace

LinearProgram no_signaling_polytope(std::size_t parties) {
    if (parties != 2 && parties != 3) throw std::invalid_argument("no_signaling_polytope: parties must be 2 or 3");
    const std::size_t rows = std::size_t{1} << parties;
    const std::size_t n = rows * rows;
    LinearProgram lp(n);
    name_variables(lp, parties);
    for (std::size_t s = 0; s < rows; ++s) {
        std::vector<double> row(n, 0.0);
        for (std::size_t o = 0; o < rows; ++o) row[s * rows + o] = 1.0;
        lp.add_equality(std::move(row), 1.0, "normalization " + box::detail::setting_label(s, parties));
    }
    for (std::size_t p = 0; p < parties; ++p) {
        const std::size_t bit = std::size_t{1} << (parties - 1 - p);
        for (std::size_t s = 0; s < rows; ++s) {
            if (s & bit) continue;
            for (std::size_t o = 0; o < rows; ++o) {
                if (o & bit) continue;
                std::vector<double> row(n, 0.0);
                row[s * rows + o] += 1.0;
                row[s * rows + (o | bit)] += 1.0;
                row[(s | bit) * rows + o] -= 1.0;
                row[(s | bit) * rows + (o | bit)] -= 1.0;
                lp.add_equality(std::move(row), 0.0,
                                "no-signaling " + box::detail::signaling_label(p, s, o, parties));
            }
        }
    }
    return lp;
}

LinearProgram build_gnst_problem() {
    LinearProgram lp = no_signaling_polytope(3);
    add_hardy_zeros(lp);
    lp.objective[var("UUU|+++")] = 1.0;
    lp.objective[var("DDD|---")] = -1.0;
    return lp;
}

LinearProgram build_gap_problem(double p_target, double min_gap) {
    if (!std::isfinite(p_target) || !std::isfinite(min_gap)) {
        throw std::invalid_argument("build_gap_problem: non-finite parameter");
    }
    LinearProgram lp = build_gnst_problem();
    lp.add_equality(unit(64, {"UUU|+++"}), p_target, "P fixed");
    auto gap = std::vector<double>(64, 0.0);
    gap[var("UUU|+++")] = 1.0;
    gap[var("DDD|---")] = -1.0;
    lp.add_constraint(std::move(gap), Relation::GreaterEqual, min_gap, "P - Q >= gap");
    lp.objective.assign(64, 0.0);
    lp.objective[var("DDD|---")] = 1.0;
    return lp;
}

LpSolution max_Q_given_P(double p_target, double min_gap) {
    return simplex_solve(build_gap_problem(p_target, min_gap));
}

LinearProgram build_rahaman_problem() {
    LinearProgram lp = build_gnst_problem();
    add_pair_zero(lp, 2, "DU*|++.", "P(D1,U2|++) = 0");
    add_pair_zero(lp, 0, "*DU|.++", "P(D2,U3|++) = 0");
    add_pair_zero(lp, 1, "U*D|+.+", "P(U1,D3|++) = 0");
    lp.add_equality(unit(64, {"DDD|---"}), 0.0, "zero DDD|---");
    lp.objective.assign(64, 0.0);
    lp.objective[var("UUU|+++")] = 1.0;
    return lp;
}

LinearProgram build_gyni_problem() {
    LinearProgram lp = no_signaling_polytope(3);
    lp.objective = unit(64, {"UUU|+++", "UDD|--+", "DUD|+--", "DDU|-+-"});
    return lp;
}

LpSolution max_gyni_nosignaling() { return simplex_solve(build_gyni_problem()); }

LinearProgram build_two_party_cabello_polytope() {
    LinearProgram lp = no_signaling_polytope(2);
    lp.add_equality(unit(16, {"DU|++"}, 2), 0.0, "zero DU|++");
    lp.add_equality(unit(16, {"UD|++"}, 2), 0.0, "zero UD|++");
    return lp;
}

box::JointDistribution to_distribution(const LpSolution& sol) {
    if (sol.status != Status::Optimal || sol.point.size() != 64) {
        throw std::invalid_argument("to_distribution: need an optimal 64-variable solution");
    }
    box::JointDistribution d;
    for (std::size_t j = 0; j < 64; ++j) d.at(j / 8, j % 8) = sol.point[j];
    return d;
}

box::TwoQubitDistribution to_two_party_distribution(const LpSolution& sol) {
    if (sol.status != Status::Optimal || sol.point.size() != 16) {
        throw std::invalid_argument("to_two_party_distribution: need an optimal 16-variable solution");
    }
    box::TwoQubitDistribution d;
    for (std::size_t j = 0; j < 16; ++j) d.at(j / 4, j % 4) = sol.point[j];
    return d;
}

std::optional<LinearProgram> problem_by_name(std::string_view name) {
    if (name == "gnst") return build_gnst_problem();
    if (name == "rahaman") return build_rahaman_problem();
    if (name == "gyni") return build_gyni_problem();
    if (name.starts_with("gap:")) {
        const std::string_view num = name.substr(4);
        double p = 0.0;
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
        if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size() || !std::isfinite(p)) {
            throw std::invalid_argument("malformed gap value '" + std::string(num) + "'");
        }
        return build_gap_problem(p);
    }
    return std::nullopt;
}

}  // namespace boxlab::lp
