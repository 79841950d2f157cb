// oracles.hpp
// Reference implementations used only by tests. Deliberately naive: a Kronecker
// product state-vector Born rule and an LP solver that enumerates every basic
// solution.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "boxlab/lp.hpp"

namespace oracle {

using cx = std::complex<double>;

// Eigenvectors written out directly: + is (cos a, e^{i p} sin a),
// - is (-e^{-i p} sin a, cos a).
inline std::array<cx, 2> basis_vector(double angle, double phase, bool plus) {
    if (plus) return {cx(std::cos(angle), 0.0), std::polar(std::sin(angle), phase)};
    return {-std::polar(std::sin(angle), -phase), cx(std::cos(angle), 0.0)};
}

// |<e_1 (x) ... (x) e_n | ghz(t)>|^2 for the n-qubit t|0..0> + |1..1>.
inline double ghz_overlap(double t, const std::vector<std::array<cx, 2>>& vecs) {
    const std::size_t n = vecs.size();
    std::vector<cx> prod{cx(1.0, 0.0)};
    for (const auto& v : vecs) {
        std::vector<cx> next;
        next.reserve(prod.size() * 2);
        for (const cx& a : prod) {
            next.push_back(a * v[0]);
            next.push_back(a * v[1]);
        }
        prod = std::move(next);
    }
    const double norm = std::sqrt(1.0 + t * t);
    std::vector<cx> psi(std::size_t{1} << n, cx(0.0, 0.0));
    psi.front() = t / norm;
    psi.back() = 1.0 / norm;
    cx amp(0.0, 0.0);
    for (std::size_t i = 0; i < psi.size(); ++i) amp += std::conj(prod[i]) * psi[i];
    return std::norm(amp);
}

// ---------------------------------------------------------------------------
// LP by basic-solution enumeration. Inequalities get slack columns, dependent
// rows are dropped, then every square column subset is tried.

struct EnumResult {
    bool feasible = false;
    double value = 0.0;
};

namespace detail {

// Row-reduces [A | b] in place; returns the rank, or nullopt when inconsistent.
inline std::optional<std::size_t> reduce(std::vector<std::vector<double>>& a, std::vector<double>& b, double tol) {
    const std::size_t m = a.size(), n = m ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        for (std::size_t i = r + 1; i < m; ++i)
            if (std::abs(a[i][c]) > std::abs(a[p][c])) p = i;
        if (std::abs(a[p][c]) < tol) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            const double f = a[i][c] / a[r][c];
            if (f == 0.0) continue;
            for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (std::abs(b[i]) > 1e-7) return std::nullopt;
    a.resize(r);
    b.resize(r);
    return r;
}

inline std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::abs(a[i][c]) > std::abs(a[p][c])) p = i;
        if (std::abs(a[p][c]) < 1e-9) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            const double f = a[i][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
            b[i] -= f * b[c];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return x;
}

}  // namespace detail

// Only meaningful for bounded feasible regions.
inline EnumResult enumerate_lp(const boxlab::lp::LinearProgram& lp) {
    using boxlab::lp::Relation;
    const std::size_t n = lp.num_variables;
    std::size_t slacks = 0;
    for (const auto& c : lp.constraints) slacks += c.relation != Relation::Equal;
    const std::size_t cols = n + slacks;

    std::vector<std::vector<double>> a;
    std::vector<double> b;
    std::size_t s = n;
    for (const auto& c : lp.constraints) {
        std::vector<double> row(cols, 0.0);
        std::copy(c.coeffs.begin(), c.coeffs.end(), row.begin());
        if (c.relation == Relation::LessEqual) row[s++] = 1.0;
        if (c.relation == Relation::GreaterEqual) row[s++] = -1.0;
        a.push_back(std::move(row));
        b.push_back(c.rhs);
    }
    const auto rank = detail::reduce(a, b, 1e-10);
    if (!rank) return {};
    const std::size_t r = *rank;

    EnumResult best;
    std::vector<bool> pick(cols, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < cols; ++j)
            if (pick[j]) idx.push_back(j);
        std::vector<std::vector<double>> basis(r, std::vector<double>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k) basis[i][k] = a[i][idx[k]];
        const auto xb = detail::solve_square(basis, b);
        if (!xb) continue;
        if (std::any_of(xb->begin(), xb->end(), [](double v) { return v < -1e-9; })) continue;
        double val = 0.0;
        for (std::size_t k = 0; k < r; ++k)
            if (idx[k] < n) val += lp.objective[idx[k]] * (*xb)[k];
        if (!best.feasible || val > best.value) best = {true, val};
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return best;
}

// Random bounded LP: a budget row keeps the region bounded; the other rows
// mix relations, include duplicates and are often infeasible together.
inline boxlab::lp::LinearProgram random_lp(std::mt19937_64& rng) {
    using boxlab::lp::Relation;
    std::uniform_int_distribution<int> nvars(1, 10), nrows(0, 5), coef(-3, 3), rel(0, 2), coin(0, 3);
    std::uniform_real_distribution<double> rhs(-2.0, 6.0), obj(-2.0, 3.0);
    const std::size_t n = static_cast<std::size_t>(nvars(rng));
    boxlab::lp::LinearProgram lp(n);
    for (auto& c : lp.objective) c = coin(rng) == 0 ? std::round(obj(rng)) : obj(rng);
    lp.add_constraint(std::vector<double>(n, 1.0), Relation::LessEqual, 1.0 + std::abs(rhs(rng)), "budget");
    const int rows = nrows(rng);
    for (int i = 0; i < rows; ++i) {
        if (i > 0 && coin(rng) == 0) {
            lp.constraints.push_back(lp.constraints.back());  // duplicated row
            continue;
        }
        std::vector<double> row(n);
        for (auto& v : row) v = coef(rng);
        const auto r = static_cast<Relation>(rel(rng));
        lp.add_constraint(std::move(row), r, std::round(rhs(rng) * 2.0) / 2.0);
    }
    return lp;
}

}  // namespace oracle
