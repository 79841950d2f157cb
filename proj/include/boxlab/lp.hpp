// lp.hpp
// Dense two-phase simplex for small linear programs in the form
//
//   maximize c.x  subject to  a_i.x {=,<=,>=} b_i,  x >= 0.
//
// Bland's rule is used for both entering and leaving variables, so heavily
// degenerate polytopes (the no-signaling constraints are rank deficient) do
// not cycle.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace boxlab::lp {

enum class Relation { Equal, LessEqual, GreaterEqual };

struct Constraint {
    std::vector<double> coeffs;
    Relation relation = Relation::Equal;
    double rhs = 0.0;
    std::string label;
};

struct LinearProgram {
    std::size_t num_variables = 0;
    std::vector<double> objective;  // maximized
    std::vector<Constraint> constraints;
    std::vector<std::string> variable_names;  // optional, for output

    explicit LinearProgram(std::size_t n = 0) : num_variables(n), objective(n, 0.0) {}

    void add_equality(std::vector<double> coeffs, double rhs, std::string label = {});
    void add_constraint(std::vector<double> coeffs, Relation rel, double rhs, std::string label = {});

    // Throws std::invalid_argument if any vector length differs from num_variables.
    void check() const;
    double objective_at(std::span<const double> x) const;
};

enum class Status { Optimal, Infeasible, Unbounded };

std::string to_string(Status s);

struct LpSolution {
    Status status = Status::Infeasible;
    double value = 0.0;
    std::vector<double> point;        // structural variables only
    std::vector<std::size_t> basis;   // basic columns; >= num_variables are slacks
    std::size_t iterations = 0;
};

struct SimplexOptions {
    double pivot_tolerance = 1e-10;
    double infeasibility_threshold = 1e-8;  // phase-1 optimum above this means infeasible
    std::size_t max_iterations = 200000;
};

LpSolution simplex_solve(const LinearProgram& lp, const SimplexOptions& options = {});

// Largest violation of any constraint or bound by x (0 if feasible).
double max_violation(const LinearProgram& lp, std::span<const double> x);

}  // namespace boxlab::lp
