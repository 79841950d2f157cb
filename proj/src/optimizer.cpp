#include "boxlab/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "boxlab/cabello.hpp"
#include "boxlab/parallel.hpp"
#include "boxlab/quantum_core.hpp"

namespace boxlab::opt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWorst = -std::numeric_limits<double>::infinity();

double safe_eval(const Objective& f, std::span<const double> x) {
    const double v = f(x);
    return std::isfinite(v) ? v : kWorst;
}

struct LocalResult {
    std::vector<double> x;
    double value = kWorst;
    std::size_t evaluations = 0;
};

class HookeJeeves {
public:
    HookeJeeves(const Objective& f, const std::vector<Dimension>& dims, const SearchOptions& opt)
        : f_(f), dims_(dims), opt_(opt) {}

    LocalResult run(std::vector<double> start, double start_value) {
        LocalResult res;
        std::vector<double> step(dims_.size());
        for (std::size_t j = 0; j < dims_.size(); ++j) step[j] = opt_.initial_step * range(j);

        std::vector<double> base = std::move(start);
        double fbase = start_value;
        while (evals_ < opt_.max_evaluations_per_start) {
            auto [trial, ftrial] = explore(base, fbase, step);
            if (ftrial > fbase) {
                while (evals_ < opt_.max_evaluations_per_start) {
                    std::vector<double> pattern(base.size());
                    for (std::size_t j = 0; j < base.size(); ++j) {
                        pattern[j] = clamp(j, 2.0 * trial[j] - base[j]);
                    }
                    base = trial;
                    fbase = ftrial;
                    const double fp = eval(pattern);
                    std::tie(trial, ftrial) = explore(pattern, fp, step);
                    if (!(ftrial > fbase)) break;
                }
            } else {
                bool active = false;
                for (std::size_t j = 0; j < step.size(); ++j) {
                    step[j] *= 0.5;
                    active = active || (range(j) > 0.0 && step[j] >= opt_.min_step * range(j));
                }
                if (!active) break;
            }
        }
        res.x = std::move(base);
        res.value = fbase;
        res.evaluations = evals_;
        return res;
    }

private:
    double range(std::size_t j) const { return dims_[j].upper - dims_[j].lower; }
    double clamp(std::size_t j, double v) const { return std::clamp(v, dims_[j].lower, dims_[j].upper); }

    double eval(const std::vector<double>& x) {
        ++evals_;
        return safe_eval(f_, x);
    }

    std::pair<std::vector<double>, double> explore(std::vector<double> x, double fx,
                                                   const std::vector<double>& step) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (range(j) <= 0.0) continue;
            const double orig = x[j];
            for (double dir : {+1.0, -1.0}) {
                const double cand = clamp(j, orig + dir * step[j]);
                if (cand == orig) continue;
                x[j] = cand;
                const double fc = eval(x);
                if (fc > fx) {
                    fx = fc;
                    break;
                }
                x[j] = orig;
            }
        }
        return {std::move(x), fx};
    }

    const Objective& f_;
    const std::vector<Dimension>& dims_;
    const SearchOptions& opt_;
    std::size_t evals_ = 0;
};

bool better(double va, const std::vector<double>& a, double vb, const std::vector<double>& b) {
    if (va != vb) return va > vb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

OptimizationResult maximize(const Objective& f, const std::vector<Dimension>& dims,
                            const SearchOptions& options, std::string objective_name) {
    if (dims.empty()) throw std::invalid_argument("maximize: no dimensions");
    if (options.grid_points < 2) throw std::invalid_argument("maximize: need at least 2 grid points");
    for (const auto& d : dims) {
        if (!(d.lower <= d.upper)) throw std::invalid_argument("maximize: bad bounds for " + d.name);
    }

    OptimizationResult out;
    out.objective = std::move(objective_name);
    for (const auto& d : dims) out.names.push_back(d.name);

    // Grid: mixed radix, first dimension most significant.
    std::vector<std::size_t> radix(dims.size());
    std::size_t total = 1;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        radix[j] = dims[j].upper > dims[j].lower ? static_cast<std::size_t>(options.grid_points) : 1;
        total *= radix[j];
    }
    auto grid_point = [&](std::size_t index) {
        std::vector<double> x(dims.size());
        for (std::size_t j = dims.size(); j-- > 0;) {
            const std::size_t k = index % radix[j];
            index /= radix[j];
            x[j] = radix[j] == 1 ? dims[j].lower
                                 : dims[j].lower + (dims[j].upper - dims[j].lower) * static_cast<double>(k) /
                                                       static_cast<double>(radix[j] - 1);
        }
        return x;
    };
    std::vector<double> values(total);
    parallel_for(total, [&](std::size_t i) { values[i] = safe_eval(f, grid_point(i)); });
    out.evaluations = total;

    std::vector<std::size_t> order(total);
    for (std::size_t i = 0; i < total; ++i) order[i] = i;
    const std::size_t nstarts = std::min(options.starts, total);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(nstarts), order.end(),
                      [&](std::size_t a, std::size_t b) {
                          return values[a] != values[b] ? values[a] > values[b] : a < b;
                      });
    out.stages.push_back({"grid", values[order[0]]});

    std::vector<LocalResult> local(nstarts);
    parallel_for(nstarts, [&](std::size_t k) {
        HookeJeeves hj(f, dims, options);
        local[k] = hj.run(grid_point(order[k]), values[order[k]]);
    });

    out.argmax = grid_point(order[0]);
    out.value = values[order[0]];
    for (std::size_t k = 0; k < nstarts; ++k) {
        out.evaluations += local[k].evaluations;
        if (better(local[k].value, local[k].x, out.value, out.argmax)) {
            out.value = local[k].value;
            out.argmax = local[k].x;
        }
        out.stages.push_back({"refine " + std::to_string(k + 1), out.value});
    }
    return out;
}

// ---------------------------------------------------------------------------

OptimizationResult maximize_three_qubit_cna(const ThreeQubitOptions& o) {
    constexpr double x_min = 1e-6;
    std::vector<Dimension> dims{
        {"t", o.t.value_or(0.0), o.t.value_or(1.0)},
        {"x", x_min, o.x_max},
        {"y", x_min, o.x_max},
        {"z", x_min, o.x_max},
        {"gamma", o.gamma.value_or(-kPi), o.gamma.value_or(kPi)},
    };
    auto f = [](std::span<const double> p) {
        return cabello::success_C({p[0], p[1], p[2], p[3], p[4]});
    };
    auto res = maximize(f, dims, o.search, "cna3");
    std::sort(res.argmax.begin() + 1, res.argmax.begin() + 4);
    return res;
}

OptimizationResult maximize_three_qubit_hna(const ThreeQubitOptions& o) {
    constexpr double lo = 1e-3;
    std::vector<Dimension> dims{
        {"t", o.t.value_or(lo), o.t.value_or(1.0)},
        {"x", lo, o.x_max},
        {"y", lo, o.x_max},
    };
    auto f = [](std::span<const double> p) {
        const double z = 1.0 / (p[0] * p[1] * p[2]);
        return cabello::success_C({p[0], p[1], p[2], z, 0.0});
    };
    auto res = maximize(f, dims, o.search, "hna3");
    res.names.push_back("z");
    res.argmax.push_back(1.0 / (res.argmax[0] * res.argmax[1] * res.argmax[2]));
    std::sort(res.argmax.begin() + 1, res.argmax.end());
    return res;
}

OptimizationResult maximize_cna_fixed_t(double t, const FixedTOptions& o) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("maximize_cna_fixed_t: t must lie in [0, 1]");
    const double x_cap = std::pow(10.0, o.log10_max);
    if (t == 0.0) {
        // C(0, x, y, z, gamma) = -1 / prod(1 + x_k^2): supremum at the upper corner.
        OptimizationResult res;
        res.objective = "cna3 fixed t";
        res.names = {"x", "y", "z", "gamma"};
        res.argmax = {o.x.value_or(x_cap), o.y.value_or(x_cap), o.z.value_or(x_cap), o.gamma.value_or(0.0)};
        double prod = 1.0;
        for (int k = 0; k < 3; ++k) prod *= 1.0 + res.argmax[k] * res.argmax[k];
        res.value = -1.0 / prod;
        res.stages.push_back({"analytic", res.value});
        return res;
    }
    auto pin_log = [&](const std::optional<double>& v, std::string name) {
        if (v) {
            if (!(*v > 0.0)) throw std::domain_error("maximize_cna_fixed_t: pinned x, y, z must be positive");
            return Dimension{std::move(name), std::log10(*v), std::log10(*v)};
        }
        return Dimension{std::move(name), o.log10_min, o.log10_max};
    };
    std::vector<Dimension> dims;
    if (o.symmetric) {
        dims = {pin_log(o.x, "log10 x")};
    } else {
        dims = {pin_log(o.x, "log10 x"), pin_log(o.y, "log10 y"), pin_log(o.z, "log10 z")};
    }
    dims.push_back({"gamma", o.gamma.value_or(-kPi), o.gamma.value_or(kPi)});
    const bool sym = o.symmetric;
    auto f = [t, sym](std::span<const double> p) {
        const double x = std::pow(10.0, p[0]);
        const double y = sym ? x : std::pow(10.0, p[1]);
        const double z = sym ? x : std::pow(10.0, p[2]);
        return cabello::success_C({t, x, y, z, p.back()});
    };
    auto res = maximize(f, dims, o.search, "cna3 fixed t");
    std::vector<double> xyz;
    for (std::size_t k = 0; k + 1 < res.argmax.size(); ++k) xyz.push_back(std::pow(10.0, res.argmax[k]));
    if (sym) xyz = {xyz[0], xyz[0], xyz[0]};
    res.names = {"x", "y", "z", "gamma"};
    res.argmax = {xyz[0], xyz[1], xyz[2], res.argmax.back()};
    return res;
}

// ---------------------------------------------------------------------------

TwoQubitEvaluation evaluate_two_qubit(const TwoQubitAngles& a) {
    using namespace quantum;
    if (!(a.x > 0.0 && a.y > 0.0)) throw std::domain_error("evaluate_two_qubit: x, y must be positive");
    const auto state = ghz_state(GhzParam(a.t), 2);
    std::array<QubitMeasurementAngles, 2> ang{};
    ang[0].beta = std::atan(a.x);
    ang[1].beta = std::atan(a.y);
    ang[0].alpha = std::atan(a.t / a.y);
    ang[1].alpha = std::atan(a.t / a.x);
    ang[0].delta = ang[1].delta = a.delta / 2.0;
    ang[0].gamma = kPi - ang[1].delta;
    ang[1].gamma = kPi - ang[0].delta;

    auto prob = [&](Setting s1, Setting s2, Outcome o1, Outcome o2) {
        const std::array<Setting, 2> s{s1, s2};
        const std::array<Outcome, 2> o{o1, o2};
        return joint_probability(state, ang, s, o);
    };
    TwoQubitEvaluation e;
    e.r = prob(Setting::U, Setting::U, Outcome::Plus, Outcome::Plus);
    e.s = prob(Setting::D, Setting::D, Outcome::Minus, Outcome::Minus);
    e.zero_du = prob(Setting::D, Setting::U, Outcome::Plus, Outcome::Plus);
    e.zero_ud = prob(Setting::U, Setting::D, Outcome::Plus, Outcome::Plus);
    return e;
}

OptimizationResult maximize_two_qubit_hardy(const TwoQubitOptions& o) {
    std::vector<Dimension> dims{
        {"t", o.t.value_or(0.0), o.t.value_or(1.0)},
        {"log10 y", -o.log10_range, o.log10_range},
    };
    auto f = [](std::span<const double> p) {
        const double t = p[0], y = std::pow(10.0, p[1]);
        const auto e = evaluate_two_qubit({t, 1.0 / (t * y), y, kPi});
        return e.r - e.s;
    };
    auto res = maximize(f, dims, o.search, "hna2");
    res.names = {"t", "y"};
    res.argmax[1] = std::pow(10.0, res.argmax[1]);
    return res;
}

OptimizationResult maximize_two_qubit_cabello(const TwoQubitOptions& o) {
    std::vector<Dimension> dims{
        {"t", o.t.value_or(0.0), o.t.value_or(1.0)},
        {"log10 x", -o.log10_range, o.log10_range},
        {"log10 y", -o.log10_range, o.log10_range},
        {"delta", o.delta.value_or(-kPi), o.delta.value_or(kPi)},
    };
    auto f = [](std::span<const double> p) {
        const auto e = evaluate_two_qubit({p[0], std::pow(10.0, p[1]), std::pow(10.0, p[2]), p[3]});
        return e.r - e.s;
    };
    auto res = maximize(f, dims, o.search, "cna2");
    res.names = {"t", "x", "y", "delta"};
    res.argmax[1] = std::pow(10.0, res.argmax[1]);
    res.argmax[2] = std::pow(10.0, res.argmax[2]);
    return res;
}

std::optional<OptimizationResult> optimize_target(std::string_view target) {
    if (target == "cna3") return maximize_three_qubit_cna();
    if (target == "hna3") return maximize_three_qubit_hna();
    if (target == "cna2") return maximize_two_qubit_cabello();
    if (target == "hna2") return maximize_two_qubit_hardy();
    return std::nullopt;
}

}  // namespace boxlab::opt
