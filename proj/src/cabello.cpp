#include "boxlab/cabello.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace boxlab::cabello {

namespace {

constexpr double kPi = std::numbers::pi;

void check_t(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("t must lie in [0, 1]");
}

double checked_tan(double angle) {
    if (!(angle >= 0.0 && angle < kPi / 2)) {
        throw std::domain_error("angle must lie in [0, pi/2); use the tangent parameterization at pi/2");
    }
    return std::tan(angle);
}

}  // namespace

double prob_P(double t, const std::array<double, 3>& alpha, double delta) {
    check_t(t);
    const double a1 = checked_tan(alpha[0]), a2 = checked_tan(alpha[1]), a3 = checked_tan(alpha[2]);
    const double prod = a1 * a2 * a3;
    const double num = t * t + prod * prod + 2.0 * t * std::cos(delta) * prod;
    const double den = (1 + t * t) * (1 + a1 * a1) * (1 + a2 * a2) * (1 + a3 * a3);
    return num / den;
}

double prob_Q(double t, const std::array<double, 3>& beta, double gamma) {
    check_t(t);
    const double b1 = checked_tan(beta[0]), b2 = checked_tan(beta[1]), b3 = checked_tan(beta[2]);
    const double prod = b1 * b2 * b3;
    const double num = 1.0 + t * t * prod * prod - 2.0 * t * std::cos(gamma) * prod;
    const double den = (1 + t * t) * (1 + b1 * b1) * (1 + b2 * b2) * (1 + b3 * b3);
    return num / den;
}

ConstraintSolution solve_constraints(const CabelloPoint& pt, const std::array<int, 3>& branch) {
    if (!(pt.t > 0.0 && pt.t <= 1.0)) throw std::domain_error("solve_constraints: t must lie in (0, 1]");
    if (!(pt.x > 0.0 && pt.y > 0.0 && pt.z > 0.0)) {
        throw std::domain_error("solve_constraints: x, y, z must be positive");
    }
    for (int m : branch) {
        if (m % 2 == 0) throw std::domain_error("solve_constraints: branch integers must be odd");
    }
    ConstraintSolution sol;
    sol.branch = branch;
    const int msum = branch[0] + branch[1] + branch[2];
    sol.delta_sum = (msum * kPi - pt.gamma) / 2.0;
    const double delta_each = sol.delta_sum / 3.0;

    const std::array<double, 3> tb{pt.x, pt.y, pt.z};
    for (std::size_t k = 0; k < 3; ++k) {
        const double others = tb[(k + 1) % 3] * tb[(k + 2) % 3];
        const double tan2_alpha = tb[k] / others * pt.t;
        auto& a = sol.angles[k];
        a.alpha = std::atan(std::sqrt(tan2_alpha));
        a.beta = std::atan(tb[k]);
        a.delta = delta_each;
        a.gamma = branch[k] * kPi - 2.0 * delta_each;
    }
    return sol;
}

SuccessParts success_parts(const CabelloPoint& pt) {
    check_t(pt.t);
    const double t = pt.t, x = pt.x, y = pt.y, z = pt.z;
    if (!(x > 0.0 && y > 0.0 && z > 0.0)) throw std::domain_error("success_C: x, y, z must be positive");
    const double p = x * y * z;
    const double s = std::sin(pt.gamma / 2.0);
    const double bracket = t + p - 2.0 * std::sqrt(t * p) * s;
    SuccessParts parts;
    if (p > 1e3) {
        // numerator and denominator divided by (xyz)^2
        const double den = (1 + t * t) * p * (1 + t * x * x / p) * (1 + t * y * y / p) * (1 + t * z * z / p);
        parts.p = t * t * bracket / den;
    } else {
        const double tp = t * p;
        const double den = (1 + t * t) * (p + t * x * x) * (p + t * y * y) * (p + t * z * z);
        parts.p = tp * tp * bracket / den;
    }
    const double tp = t * p;
    parts.q = (1.0 + tp * tp - 2.0 * tp * std::cos(pt.gamma)) / ((1 + t * t) * (1 + x * x) * (1 + y * y) * (1 + z * z));
    return parts;
}

double success_C(const CabelloPoint& point) { return success_parts(point).c(); }

double hardy_profile(double t) {
    if (!(t > 0.0 && t <= 1.0)) throw std::domain_error("hardy_profile: t must lie in (0, 1]");
    const double d = 1.0 + std::pow(t, 4.0 / 3.0);
    return t * t / (d * d * d);
}

double nqubit_hardy_max(int n) {
    if (n < 3) throw std::domain_error("nqubit_hardy_max: n must be at least 3");
    return (1.0 + std::cos(kPi / (n - 1))) / std::ldexp(1.0, n);
}

std::vector<ScanRow> scan_C(double x, double y, double z, double gamma, const std::vector<double>& ts) {
    std::vector<ScanRow> rows;
    rows.reserve(ts.size());
    for (double t : ts) rows.push_back({t, success_C({t, x, y, z, gamma})});
    return rows;
}

std::vector<double> linear_grid(double t_min, double t_max, int steps) {
    if (steps < 1) throw std::invalid_argument("linear_grid: steps must be positive");
    if (!(t_min >= 0.0 && t_max <= 1.0 && t_min <= t_max)) {
        throw std::invalid_argument("linear_grid: need 0 <= t_min <= t_max <= 1");
    }
    std::vector<double> ts(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) ts[i] = t_min + (t_max - t_min) * i / steps;
    ts.back() = t_max;
    return ts;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "t,C\n";
    char buf[96];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", r.t, r.c);
        os << buf;
    }
    return os.str();
}

namespace {

// Root of f between lo (f <= 0 side when rising) and hi; keeps the sign of
// f(lo) and f(hi) invariant.
template <class F>
double bisect(F f, double lo, double hi, double tol) {
    const bool lo_positive = f(lo) > 0.0;
    while (hi - lo > tol * hi) {
        // geometric midpoint keeps relative precision near t = 0
        const double mid = lo > 0.0 && hi / lo > 4.0 ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
        if ((f(mid) > 0.0) == lo_positive) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> search_grid() {
    std::vector<double> ts{0.0};
    for (int k = -640; k < 0; ++k) ts.push_back(std::pow(10.0, k / 40.0));
    for (int i = 1; i <= 2000; ++i) ts.push_back(i / 2000.0);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

}  // namespace

std::optional<PositivityInterval> positivity_interval(double x, double y, double z, double gamma,
                                                      double tol) {
    auto f = [&](double t) { return success_C({t, x, y, z, gamma}); };
    static const std::vector<double> grid = search_grid();
    std::size_t i = 0;
    while (i < grid.size() && !(f(grid[i]) > 0.0)) ++i;
    if (i == grid.size()) return std::nullopt;

    PositivityInterval out;
    out.lower = i == 0 ? 0.0 : bisect(f, grid[i - 1], grid[i], tol);
    std::size_t j = i;
    while (j < grid.size() && f(grid[j]) > 0.0) ++j;
    if (j == grid.size()) {
        out.upper = 1.0;
        out.positive_at_one = true;
    } else {
        out.upper = bisect(f, grid[j - 1], grid[j], tol);
        out.positive_at_one = false;
    }
    return out;
}

std::optional<double> positivity_threshold(double x, double y, double z, double gamma, double tol) {
    const auto iv = positivity_interval(x, y, z, gamma, tol);
    if (!iv) return std::nullopt;
    return iv->lower;
}

}  // namespace boxlab::cabello
