// optimizer.hpp
// Derivative-free maximization of the Cabello/Hardy success probabilities.
//
// Strategy: evaluate a coarse grid over the search box, then refine the best
// few grid points with a bounded Hooke-Jeeves pattern search until the step
// falls below min_step (relative to each coordinate's range).

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace boxlab::opt {

using Objective = std::function<double(std::span<const double>)>;

struct Dimension {
    std::string name;
    double lower = 0.0;
    double upper = 0.0;  // lower == upper pins the coordinate
};

struct SearchOptions {
    int grid_points = 11;        // per free dimension
    std::size_t starts = 8;      // grid points refined locally
    double initial_step = 0.1;   // fraction of each range
    double min_step = 1e-8;      // fraction of each range
    std::size_t max_evaluations_per_start = 400000;
};

struct Stage {
    std::string name;
    double best = 0.0;
};

struct OptimizationResult {
    std::string objective;
    std::vector<std::string> names;
    std::vector<double> argmax;
    double value = 0.0;
    std::size_t evaluations = 0;
    std::vector<Stage> stages;  // best value so far, non-decreasing
};

// Generic bounded maximizer. Deterministic for a given (f, dims, options):
// ties are broken towards the lexicographically smallest argmax.
OptimizationResult maximize(const Objective& f, const std::vector<Dimension>& dims,
                            const SearchOptions& options = {}, std::string objective_name = {});

// ---------------------------------------------------------------------------
// Three-qubit Cabello argument, generalized GHZ family

struct ThreeQubitOptions {
    double x_max = 10.0;
    std::optional<double> t;  // pins
    std::optional<double> gamma;
    SearchOptions search{};
};

// Maximizes C(t, x, y, z, gamma) over t in [0,1], x, y, z in (0, x_max],
// gamma in [-pi, pi]. argmax order: t, x, y, z, gamma with x <= y <= z.
OptimizationResult maximize_three_qubit_cna(const ThreeQubitOptions& options = {});

// Hardy slice: gamma = 0 and z = 1 / (t x y), so that Q vanishes.
// argmax order: t, x, y, z.
OptimizationResult maximize_three_qubit_hna(const ThreeQubitOptions& options = {});

struct FixedTOptions {
    double log10_min = -4.0;  // x, y, z searched on a log10 scale
    double log10_max = 6.0;
    bool symmetric = false;   // fast mode x = y = z
    std::optional<double> x, y, z, gamma;  // pins
    SearchOptions search{};
};

// Best C at fixed t. For t = 0 the supremum over the box is the analytic
// bound -1 / (1 + x_max^2)^3 and no search is run. argmax order: x, y, z, gamma.
OptimizationResult maximize_cna_fixed_t(double t, const FixedTOptions& options = {});

// ---------------------------------------------------------------------------
// Two-qubit baselines

struct TwoQubitAngles {
    double t = 1.0;
    double x = 1.0;  // tan(beta_1)
    double y = 1.0;  // tan(beta_2)
    double delta = 0.0;  // delta_1 + delta_2
};

struct TwoQubitOptions {
    std::optional<double> t;
    std::optional<double> delta;
    double log10_range = 3.0;
    SearchOptions search{};
};

// R - S evaluated by the Born-rule engine with bases chosen so that
// P(D1,U2|++) and P(U1,D2|++) vanish (tan(alpha_2) = t / x, tan(alpha_1) = t / y,
// gamma_1 + delta_2 = delta_1 + gamma_2 = pi).
struct TwoQubitEvaluation {
    double r = 0.0;
    double s = 0.0;
    double zero_du = 0.0;
    double zero_ud = 0.0;
};
TwoQubitEvaluation evaluate_two_qubit(const TwoQubitAngles& a);

// Hardy: S = 0 enforced by delta = pi, x y = 1 / t. argmax order: t, y.
OptimizationResult maximize_two_qubit_hardy(const TwoQubitOptions& options = {});

// Cabello: maximizes R - S. argmax order: t, x, y, delta.
OptimizationResult maximize_two_qubit_cabello(const TwoQubitOptions& options = {});

// Dispatch on "cna3", "hna3", "cna2", "hna2"; nullopt for unknown targets.
std::optional<OptimizationResult> optimize_target(std::string_view target);

}  // namespace boxlab::opt
