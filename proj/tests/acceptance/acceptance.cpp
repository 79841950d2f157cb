// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "boxlab/box_world.hpp"
#include "boxlab/cabello.hpp"
#include "boxlab/gnst.hpp"
#include "boxlab/optimizer.hpp"
#include "boxlab/quantum_core.hpp"
#include "oracles.hpp"

using namespace boxlab;
using std::numbers::pi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void report(int id, const char* title, const std::function<void(Check&)>& body) {
    Check c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail << " [exception: " << e.what() << "]";
    }
    if (!c.ok) ++failures;
    std::printf("%s %2d %s:%s\n", c.ok ? "PASS" : "FAIL", id, title, c.detail.str().c_str());
    std::fflush(stdout);
}

std::string g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

cabello::CabelloPoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> t(1e-3, 1.0), lg(-2.0, 2.0), gm(-pi, pi);
    return {t(rng), std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng)), gm(rng)};
}

quantum::StateVector ghz3(double t) { return quantum::ghz_state(quantum::GhzParam(t), 3); }

}  // namespace

int main() {
    const auto suite_start = Clock::now();

    report(1, "global CNA maximum", [](Check& c) {
        const auto t0 = Clock::now();
        const auto r = opt::maximize_three_qubit_cna();
        const double secs = seconds_since(t0);
        const std::array<double, 5> want{1, 1, 1, 1, cabello::kGamma0};
        double arg_err = 0.0;
        for (int k = 0; k < 5; ++k) arg_err = std::max(arg_err, std::abs(r.argmax[k] - want[k]));
        c.detail << " C_max=" << g(r.value) << " argmax_err=" << g(arg_err) << " time=" << g(secs) << "s";
        c.expect(std::abs(r.value - 0.140625) <= 1e-6, "value");
        c.expect(arg_err <= 1e-3, "argmax");
        c.expect(secs < 60.0, "runtime");
    });

    report(2, "decomposition at the optimum", [](Check& c) {
        const cabello::CabelloPoint pt{1, 1, 1, 1, cabello::kGamma0};
        const auto sol = cabello::solve_constraints(pt);
        std::array<double, 3> alpha{}, beta{};
        double gsum = 0.0;
        for (int k = 0; k < 3; ++k) {
            alpha[k] = sol.angles[k].alpha;
            beta[k] = sol.angles[k].beta;
            gsum += sol.angles[k].gamma;
        }
        const double p = cabello::prob_P(1.0, alpha, sol.delta_sum);
        const double q = cabello::prob_Q(1.0, beta, gsum);
        c.detail << " P=" << g(p) << " Q=" << g(q);
        c.expect(std::abs(p - 10.0 / 64) <= 1e-9, "P");
        c.expect(std::abs(q - 1.0 / 64) <= 1e-9, "Q");
    });

    report(3, "Hardy reduction", [](Check& c) {
        const double h = cabello::hardy_profile(1.0);
        c.expect(std::abs(h - 0.125) <= 1e-12, "hardy_profile(1)");
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> t(1e-3, 1.0), lg(-1.5, 1.5);
        double worst = 0.0;
        for (int it = 0; it < 1000; ++it) {
            const double tt = t(rng), x = std::pow(10.0, lg(rng)), y = std::pow(10.0, lg(rng));
            const cabello::CabelloPoint pt{tt, x, y, 1.0 / (tt * x * y), 0.0};
            worst = std::max(worst, std::abs(cabello::success_parts(pt).q));
            const auto sol = cabello::solve_constraints(pt);
            const auto d = quantum::born_distribution(ghz3(tt), sol.angles);
            worst = std::max(worst, std::abs(d["DDD|---"]));
        }
        c.detail << " hardy_profile(1)=" << g(h) << " max|Q|=" << g(worst);
        c.expect(worst <= 1e-12, "Q on slice");
    });

    report(4, "closed form vs Born rule", [](Check& c) {
        std::mt19937_64 rng(41);
        double worst_c = 0.0, worst_zero = 0.0;
        for (int it = 0; it < 1000; ++it) {
            const auto pt = random_point(rng);
            const auto sol = cabello::solve_constraints(pt);
            const auto d = quantum::born_distribution(ghz3(pt.t), sol.angles);
            worst_c = std::max(worst_c, std::abs(cabello::success_C(pt) - (d["UUU|+++"] - d["DDD|---"])));
            for (const char* key : {"DUU|+++", "UDU|+++", "UUD|+++"}) worst_zero = std::max(worst_zero, d[key]);
        }
        c.detail << " max|dC|=" << g(worst_c) << " max zero=" << g(worst_zero);
        c.expect(worst_c <= 1e-11, "C agreement");
        c.expect(worst_zero <= 1e-12, "zero conditions");
    });

    report(5, "sign structure", [](Check& c) {
        const auto root = cabello::positivity_threshold(1, 1, 1, cabello::kGamma0);
        c.expect(root && std::abs(*root - 0.3126) <= 1e-3, "threshold 0.3126");
        const auto at = [](double t) { return cabello::success_C({t, 1e4, 1e4, 0.2, cabello::kGamma0}); };
        c.expect(at(1e-8) > 0.0, "C(1e-8) > 0");
        c.expect(at(0.8) > 0.0, "C(0.8) > 0");
        c.expect(at(0.9) < 0.0, "C(0.9) < 0");
        double mx = -1.0;
        for (const auto& row : cabello::scan_C(1e2, 1e2, 0.02, cabello::kGamma0, cabello::linear_grid(1e-4, 1.0, 100000)))
            mx = std::max(mx, row.c);
        c.detail << " root=" << (root ? g(*root) : "none") << " C(1e-8)=" << g(at(1e-8)) << " C(0.8)=" << g(at(0.8))
                 << " C(0.9)=" << g(at(0.9)) << " max=" << g(mx);
        c.expect(mx <= 3.1e-4 && mx >= 2e-4, "max in [2e-4, 3.1e-4]");
    });

    report(6, "permutation symmetry", [](Check& c) {
        std::mt19937_64 rng(61);
        double worst = 0.0;
        for (int it = 0; it < 1000; ++it) {
            const auto pt = random_point(rng);
            const double c0 = cabello::success_C(pt);
            std::array<double, 3> v{pt.x, pt.y, pt.z};
            std::sort(v.begin(), v.end());
            do {
                worst = std::max(worst, std::abs(cabello::success_C({pt.t, v[0], v[1], v[2], pt.gamma}) - c0));
            } while (std::next_permutation(v.begin(), v.end()));
        }
        c.detail << " max diff=" << g(worst);
        c.expect(worst <= 1e-12, "symmetry");
    });

    report(7, "GNST LP", [](Check& c) {
        const auto s = lp::simplex_solve(lp::build_gnst_problem());
        const auto q5 = lp::max_Q_given_P(0.5);
        const auto q51 = lp::max_Q_given_P(0.51);
        const auto q6 = lp::max_Q_given_P(0.6);
        c.detail << " C=" << g(s.value) << " maxQ(0.5)=" << g(q5.value) << " P=0.51:" << lp::to_string(q51.status)
                 << " P=0.6:" << lp::to_string(q6.status);
        c.expect(s.status == lp::Status::Optimal && std::abs(s.value - 0.5) <= 1e-9, "optimum");
        c.expect(q5.status == lp::Status::Optimal && std::abs(q5.value) <= 1e-9, "max Q at 0.5");
        c.expect(q51.status == lp::Status::Infeasible, "0.51 infeasible");
        c.expect(q6.status == lp::Status::Infeasible, "0.6 infeasible");
    });

    report(8, "Rahaman and GYNI LPs", [](Check& c) {
        const auto r = lp::simplex_solve(lp::build_rahaman_problem());
        const auto y = lp::max_gyni_nosignaling();
        c.detail << " rahaman=" << g(r.value) << " gyni=" << g(y.value);
        c.expect(r.status == lp::Status::Optimal && std::abs(r.value - 1.0 / 3) <= 1e-9, "rahaman");
        c.expect(y.status == lp::Status::Optimal && std::abs(y.value - 4.0 / 3) <= 1e-9, "gyni");
    });

    report(9, "fixture suite", [](Check& c) {
        const std::array<Rational, 4> want{Rational{1, 2}, Rational{1, 2}, Rational{1, 3}, Rational{2, 5}};
        const auto ids = box::all_fixtures();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const auto d = box::fixture_distribution(ids[i]);
            const std::string name(box::fixture_name(ids[i]));
            c.expect(box::validate(d).ok(), name + " validate");
            const auto hc = box::hardy_cabello_check(d);
            c.expect(hc.c == want[i] && hc.zeros_ok, name + " C");
            c.detail << ' ' << name << ":C=" << hc.c.str();
        }
        const auto s20 = box::fixture_distribution(box::FixtureId::Set20);
        const auto s21 = box::fixture_distribution(box::FixtureId::Set21);
        const auto s23 = box::fixture_distribution(box::FixtureId::Set23);
        c.expect(box::gyni_value(s23) == Rational{4, 3}, "set23 GYNI");
        const double sv = to_double(box::svetlichny_value(s23, box::kSvetlichnyAlternate));
        c.expect(std::abs(sv - 16.0 / 3) <= 1e-12, "set23 Svetlichny");
        for (const auto* d : {&s20, &s21}) {
            c.expect(box::gyni_value(*d) <= Rational{1}, "GYNI <= 1");
            c.expect(box::svetlichny_value(*d, box::kSvetlichnyCanonical) <= Rational{4}, "S_v1 <= 4");
            c.expect(box::svetlichny_value(*d, box::kSvetlichnyAlternate) <= Rational{4}, "S_v2 <= 4");
        }
        const double chsh = to_double(box::chsh_value(box::trace_out_third(s21)));
        c.expect(std::abs(chsh - 4.0) <= 1e-12, "set21 CHSH");
        c.detail << " set23:GYNI=" << box::gyni_value(s23).str() << ",S_v=" << g(sv) << " set21:CHSH=" << g(chsh);
    });

    report(10, "CHSH identity", [](Check& c) {
        const auto poly = lp::build_two_party_cabello_polytope();
        std::mt19937_64 rng(101);
        std::normal_distribution<double> nd;
        std::vector<box::TwoQubitDistribution> vertices;
        for (int k = 0; k < 60; ++k) {
            auto prog = poly;
            for (auto& v : prog.objective) v = nd(rng);
            const auto sol = lp::simplex_solve(prog);
            if (sol.status == lp::Status::Optimal) vertices.push_back(lp::to_two_party_distribution(sol));
        }
        c.expect(vertices.size() == 60, "vertex sampling");
        std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
        std::exponential_distribution<double> w;
        double worst = 0.0;
        int invalid = 0;
        for (int it = 0; it < 500; ++it) {
            box::TwoQubitDistribution d;
            double total = 0.0;
            for (int k = 0; k < 3; ++k) {
                const double wk = w(rng);
                total += wk;
                const auto& v = vertices[pick(rng)];
                for (std::size_t i = 0; i < 16; ++i) d.entries()[i] += wk * v.entries()[i];
            }
            for (auto& v : d.entries()) v /= total;
            const auto cab = box::two_qubit_cabello(d);
            invalid += !box::validate(d).ok() || std::abs(cab.zero_terms[0]) > 1e-12 || std::abs(cab.zero_terms[1]) > 1e-12;
            worst = std::max(worst, std::abs(box::chsh_value(d) - (2.0 + 4.0 * cab.c2)));
        }
        c.detail << " boxes=500 invalid=" << invalid << " max|CHSH-(2+4C2)|=" << g(worst);
        c.expect(invalid == 0, "boxes feasible");
        c.expect(worst <= 1e-9, "identity");
    });

    report(11, "two-qubit baselines", [](Check& c) {
        const auto t0 = Clock::now();
        const auto h = opt::maximize_two_qubit_hardy();
        const auto k = opt::maximize_two_qubit_cabello();
        const double secs = seconds_since(t0);
        c.detail << " hardy=" << g(h.value) << " cabello=" << g(k.value) << " time=" << g(secs) << "s";
        c.expect(std::abs(h.value - 0.090169) <= 1e-4, "hardy");
        c.expect(std::abs(k.value - 0.1078) <= 5e-4, "cabello");
        c.expect(secs < 120.0, "runtime");
    });

    report(12, "n-qubit formula", [](Check& c) {
        c.expect(std::abs(cabello::nqubit_hardy_max(3) - 0.125) <= 1e-15, "n=3");
        c.expect(std::abs(cabello::nqubit_hardy_max(4) - 0.09375) <= 1e-15, "n=4");
        for (int n = 3; n < 12; ++n)
            c.expect(cabello::nqubit_hardy_max(n + 1) < cabello::nqubit_hardy_max(n), "decrease at n=" + std::to_string(n));
        c.detail << " P3=" << g(cabello::nqubit_hardy_max(3)) << " P4=" << g(cabello::nqubit_hardy_max(4))
                 << " P12=" << g(cabello::nqubit_hardy_max(12));
    });

    report(13, "LP oracle and local bounds", [](Check& c) {
        std::mt19937_64 rng(131);
        int mismatches = 0, feasible = 0;
        double worst = 0.0;
        for (int it = 0; it < 200; ++it) {
            const auto prog = oracle::random_lp(rng);
            const auto want = oracle::enumerate_lp(prog);
            const auto got = lp::simplex_solve(prog);
            if (want.feasible) {
                ++feasible;
                if (got.status != lp::Status::Optimal) {
                    ++mismatches;
                    continue;
                }
                worst = std::max(worst, std::abs(got.value - want.value));
                if (std::abs(got.value - want.value) > 1e-9) ++mismatches;
            } else if (got.status != lp::Status::Infeasible) {
                ++mismatches;
            }
        }
        int local_bad = 0;
        const auto family = box::svetlichny_family();
        for (const auto& d : box::all_deterministic_boxes()) {
            bool ok = box::bell_inequality_value(d) <= Rational{0} && box::gyni_value(d) <= Rational{1};
            for (const auto& p : family) ok = ok && box::svetlichny_value(d, p) <= Rational{4};
            local_bad += !ok;
        }
        c.detail << " lps=200 feasible=" << feasible << " mismatches=" << mismatches << " max|dv|=" << g(worst)
                 << " local violations=" << local_bad << "/64";
        c.expect(mismatches == 0, "LP oracle");
        c.expect(local_bad == 0, "local bounds");
    });

    std::printf("%d of 13 criteria failed, %.1f s total\n", failures, seconds_since(suite_start));
    return failures;
}
