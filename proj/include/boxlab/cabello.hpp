// cabello.hpp
// Closed-form success probabilities of the three-qubit Cabello argument for
// the generalized GHZ family, the measurement-angle constraint solver, the
// Hardy special case and t-scans of the success function.

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boxlab/quantum_core.hpp"

namespace boxlab::cabello {

// gamma_0 = -arccos(7/8), the phase of the global optimum.
inline const double kGamma0 = -std::acos(7.0 / 8.0);

// Reduced coordinates: x, y, z are tan(beta_k), gamma the summed D-phase.
struct CabelloPoint {
    double t = 1.0;
    double x = 1.0;
    double y = 1.0;
    double z = 1.0;
    double gamma = 0.0;
};

struct ConstraintSolution {
    std::array<quantum::QubitMeasurementAngles, 3> angles{};
    std::array<int, 3> branch{1, 1, 1};
    double delta_sum = 0.0;  // delta_1 + delta_2 + delta_3
};

// P(U1,U2,U3|+++) for the GHZ-family state. alpha_k in [0, pi/2).
double prob_P(double t, const std::array<double, 3>& alpha, double delta);

// P(D1,D2,D3|---). beta_k in [0, pi/2).
double prob_Q(double t, const std::array<double, 3>& beta, double gamma);

// Picks measurement bases that make P(DUU|+++), P(UDU|+++) and P(UUD|+++)
// vanish. Phases are split evenly across qubits; branch integers must be odd
// (even branches need negative tangents, outside the alpha range).
ConstraintSolution solve_constraints(const CabelloPoint& point,
                                     const std::array<int, 3>& branch = {1, 1, 1});

struct SuccessParts {
    double p = 0.0;
    double q = 0.0;
    double c() const { return p - q; }
};

// P and Q expressed in (t, x, y, z, gamma) under the m = (1,1,1) solution.
SuccessParts success_parts(const CabelloPoint& point);

// C = P - Q. Requires x, y, z > 0 and t in [0, 1].
double success_C(const CabelloPoint& point);

// t^2 / (1 + t^{4/3})^3, the Hardy-case success at x = y = z = t^{-1/3}, gamma = 0.
double hardy_profile(double t);

// (1 + cos(pi/(n-1))) / 2^n for n >= 3.
double nqubit_hardy_max(int n);

struct ScanRow {
    double t = 0.0;
    double c = 0.0;
};

std::vector<ScanRow> scan_C(double x, double y, double z, double gamma, const std::vector<double>& ts);

// steps + 1 evenly spaced points from t_min to t_max inclusive.
std::vector<double> linear_grid(double t_min, double t_max, int steps);

// "t,C" header then one row per sample, 17 significant digits.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

// Interval of t on which C > 0, located from a log + linear grid and refined by
// bisection to relative width tol.
struct PositivityInterval {
    double lower = 0.0;  // first sign change from negative to positive
    double upper = 1.0;  // where C returns to <= 0, or 1 if still positive there
    bool positive_at_one = true;
};

std::optional<PositivityInterval> positivity_interval(double x, double y, double z, double gamma,
                                                      double tol = 1e-9);

// Smallest root of C(., x, y, z, gamma) in (0, 1]; nullopt when C never
// becomes positive (the argument never succeeds).
std::optional<double> positivity_threshold(double x, double y, double z, double gamma,
                                           double tol = 1e-9);

}  // namespace boxlab::cabello
