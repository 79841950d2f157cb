// gnst.hpp
// Linear programs over the no-signaling polytope of the (3,2,2) scenario
// (and the two-party (2,2,2) one). Variable j of every three-party problem is
// entry j of a JointDistribution, i.e. setting_index * 8 + outcome_index.

#pragma once

#include <optional>
#include <string_view>

#include "boxlab/box_world.hpp"
#include "boxlab/lp.hpp"

namespace boxlab::lp {

// The C = P - Q maximum over the no-signaling polytope; used as the default
// gap in max_Q_given_P.
inline constexpr double kGnstOptimum = 0.5;

// Positivity (via x >= 0), normalization and no-signaling only, zero objective.
LinearProgram no_signaling_polytope(std::size_t parties = 3);

// No-signaling polytope plus P(DUU|+++) = P(UDU|+++) = P(UUD|+++) = 0, with
// objective P(UUU|+++) - P(DDD|---).
LinearProgram build_gnst_problem();

// GNST problem with P(UUU|+++) = p_target and P - Q >= min_gap; maximizes
// Q = P(DDD|---). With the default gap this asks whether the optimum C = 0.5
// can be reached with P above one half.
LpSolution max_Q_given_P(double p_target, double min_gap = kGnstOptimum);
LinearProgram build_gap_problem(double p_target, double min_gap = kGnstOptimum);

// GNST problem plus the pair-marginal zeros P(D1,U2|++), P(D2,U3|++),
// P(U1,D3|++) (one copy per setting of the ignored party) and P(DDD|---) = 0;
// maximizes P(UUU|+++).
LinearProgram build_rahaman_problem();

// No-signaling polytope (without the Hardy zeros), objective the four GYNI
// probabilities.
LinearProgram build_gyni_problem();
LpSolution max_gyni_nosignaling();

// Two-party no-signaling box with P(D1,U2|++) = P(U1,D2|++) = 0.
LinearProgram build_two_party_cabello_polytope();

box::JointDistribution to_distribution(const LpSolution& sol);
box::TwoQubitDistribution to_two_party_distribution(const LpSolution& sol);

// Resolves "gnst", "rahaman", "gyni" or "gap:<p>"; nullopt on unknown ids,
// std::invalid_argument on a malformed gap value.
std::optional<LinearProgram> problem_by_name(std::string_view name);

}  // namespace boxlab::lp
