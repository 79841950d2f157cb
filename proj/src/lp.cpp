#include "boxlab/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace boxlab::lp {

void LinearProgram::add_equality(std::vector<double> coeffs, double rhs, std::string label) {
    add_constraint(std::move(coeffs), Relation::Equal, rhs, std::move(label));
}

void LinearProgram::add_constraint(std::vector<double> coeffs, Relation rel, double rhs, std::string label) {
    if (coeffs.size() != num_variables) throw std::invalid_argument("constraint length mismatch");
    constraints.push_back({std::move(coeffs), rel, rhs, std::move(label)});
}

void LinearProgram::check() const {
    if (objective.size() != num_variables) throw std::invalid_argument("objective length mismatch");
    if (!variable_names.empty() && variable_names.size() != num_variables) {
        throw std::invalid_argument("variable name count mismatch");
    }
    for (const auto& c : constraints) {
        if (c.coeffs.size() != num_variables) throw std::invalid_argument("constraint length mismatch");
    }
}

double LinearProgram::objective_at(std::span<const double> x) const {
    double v = 0.0;
    for (std::size_t j = 0; j < num_variables; ++j) v += objective[j] * x[j];
    return v;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Optimal: return "optimal";
        case Status::Infeasible: return "infeasible";
        case Status::Unbounded: return "unbounded";
    }
    return "unknown";
}

namespace {

// Row-major tableau with the right-hand side stored in the last column.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * (cols + 1), 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data_[i * (cols_ + 1) + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * (cols_ + 1) + j]; }
    double& rhs(std::size_t i) { return (*this)(i, cols_); }
    double rhs(std::size_t i) const { return (*this)(i, cols_); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void pivot(std::size_t r, std::size_t c, std::vector<double>& reduced) {
        const double p = (*this)(r, c);
        for (std::size_t j = 0; j <= cols_; ++j) (*this)(r, j) /= p;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const double f = (*this)(i, c);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            (*this)(i, c) = 0.0;
        }
        const double f = reduced[c];
        if (f != 0.0) {
            for (std::size_t j = 0; j <= cols_; ++j) reduced[j] -= f * (*this)(r, j);
            reduced[c] = 0.0;
        }
    }

    void erase_row(std::size_t r) {
        data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)),
                    data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (cols_ + 1)));
        --rows_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<double> data_;
};

// reduced[j] = c_j - c_B B^-1 A_j for j < cols; reduced[cols] = -(current value).
std::vector<double> reduced_costs(const Tableau& t, const std::vector<double>& cost,
                                  const std::vector<std::size_t>& basis) {
    std::vector<double> r(t.cols() + 1, 0.0);
    for (std::size_t j = 0; j < t.cols(); ++j) r[j] = cost[j];
    for (std::size_t i = 0; i < t.rows(); ++i) {
        const double cb = cost[basis[i]];
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j <= t.cols(); ++j) r[j] -= cb * t(i, j);
    }
    return r;
}

enum class Outcome { Optimal, Unbounded, IterationLimit };

// Maximizes with Bland's rule over columns allowed[j] == true.
Outcome run(Tableau& t, std::vector<double>& reduced, std::vector<std::size_t>& basis,
            const std::vector<bool>& allowed, const SimplexOptions& opt, std::size_t& iterations) {
    const double eps = opt.pivot_tolerance;
    while (true) {
        if (iterations >= opt.max_iterations) return Outcome::IterationLimit;
        std::size_t enter = t.cols();
        for (std::size_t j = 0; j < t.cols(); ++j) {
            if (allowed[j] && reduced[j] > eps) {
                enter = j;
                break;
            }
        }
        if (enter == t.cols()) return Outcome::Optimal;

        std::size_t leave = t.rows();
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < t.rows(); ++i) {
            const double a = t(i, enter);
            if (a <= eps) continue;
            const double ratio = std::max(t.rhs(i), 0.0) / a;
            if (leave == t.rows() || ratio < best_ratio - eps) {
                best_ratio = ratio;
                leave = i;
            } else if (std::abs(ratio - best_ratio) <= eps && basis[i] < basis[leave]) {
                best_ratio = std::min(best_ratio, ratio);
                leave = i;
            }
        }
        if (leave == t.rows()) return Outcome::Unbounded;
        t.pivot(leave, enter, reduced);
        basis[leave] = enter;
        ++iterations;
    }
}

}  // namespace

LpSolution simplex_solve(const LinearProgram& lp, const SimplexOptions& opt) {
    lp.check();
    const std::size_t n = lp.num_variables;
    const std::size_t m = lp.constraints.size();

    std::size_t slacks = 0;
    for (const auto& c : lp.constraints) slacks += c.relation == Relation::Equal ? 0 : 1;
    const std::size_t first_art = n + slacks;
    const std::size_t cols = first_art + m;

    Tableau t(m, cols);
    std::vector<std::size_t> basis(m);
    std::size_t slack_col = n;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        for (std::size_t j = 0; j < n; ++j) t(i, j) = c.coeffs[j];
        if (c.relation == Relation::LessEqual) t(i, slack_col++) = 1.0;
        else if (c.relation == Relation::GreaterEqual) t(i, slack_col++) = -1.0;
        t.rhs(i) = c.rhs;
        if (t.rhs(i) < 0.0) {
            for (std::size_t j = 0; j <= cols; ++j) t(i, j) = -t(i, j);
        }
        t(i, first_art + i) = 1.0;
        basis[i] = first_art + i;
    }

    LpSolution sol;
    std::vector<bool> allowed(cols, true);

    // Phase 1: maximize -(sum of artificials).
    std::vector<double> cost1(cols, 0.0);
    for (std::size_t i = 0; i < m; ++i) cost1[first_art + i] = -1.0;
    auto reduced = reduced_costs(t, cost1, basis);
    if (run(t, reduced, basis, allowed, opt, sol.iterations) == Outcome::IterationLimit) {
        throw std::runtime_error("simplex: iteration limit in phase 1");
    }
    const double infeasibility = reduced[cols];  // = sum of artificials at optimum
    if (infeasibility > opt.infeasibility_threshold) {
        sol.status = Status::Infeasible;
        return sol;
    }

    // Drive remaining artificials out of the basis; rows where that is
    // impossible are linear combinations of others and are dropped.
    for (std::size_t i = 0; i < t.rows();) {
        if (basis[i] < first_art) {
            ++i;
            continue;
        }
        std::size_t col = first_art;
        for (std::size_t j = 0; j < first_art; ++j) {
            if (std::abs(t(i, j)) > opt.pivot_tolerance) {
                col = j;
                break;
            }
        }
        if (col < first_art) {
            t.pivot(i, col, reduced);
            basis[i] = col;
            ++i;
        } else {
            t.erase_row(i);
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    // Phase 2 on the original objective; artificials may not re-enter.
    for (std::size_t j = first_art; j < cols; ++j) allowed[j] = false;
    std::vector<double> cost2(cols, 0.0);
    for (std::size_t j = 0; j < n; ++j) cost2[j] = lp.objective[j];
    reduced = reduced_costs(t, cost2, basis);
    const Outcome out = run(t, reduced, basis, allowed, opt, sol.iterations);
    if (out == Outcome::IterationLimit) throw std::runtime_error("simplex: iteration limit in phase 2");
    if (out == Outcome::Unbounded) {
        sol.status = Status::Unbounded;
        return sol;
    }

    sol.status = Status::Optimal;
    sol.point.assign(n, 0.0);
    for (std::size_t i = 0; i < t.rows(); ++i) {
        if (basis[i] < n) sol.point[basis[i]] = std::max(t.rhs(i), 0.0);
    }
    sol.basis = basis;
    std::sort(sol.basis.begin(), sol.basis.end());
    sol.value = lp.objective_at(sol.point);
    return sol;
}

double max_violation(const LinearProgram& lp, std::span<const double> x) {
    if (x.size() != lp.num_variables) throw std::invalid_argument("max_violation: size mismatch");
    double worst = 0.0;
    for (double v : x) worst = std::max(worst, -v);
    for (const auto& c : lp.constraints) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < lp.num_variables; ++j) lhs += c.coeffs[j] * x[j];
        const double diff = lhs - c.rhs;
        switch (c.relation) {
            case Relation::Equal: worst = std::max(worst, std::abs(diff)); break;
            case Relation::LessEqual: worst = std::max(worst, diff); break;
            case Relation::GreaterEqual: worst = std::max(worst, -diff); break;
        }
    }
    return worst;
}

}  // namespace boxlab::lp
