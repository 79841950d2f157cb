#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "boxlab/cabello.hpp"
#include "boxlab/optimizer.hpp"
#include "boxlab/parallel.hpp"

using namespace boxlab;
using namespace boxlab::opt;
using std::numbers::pi;

TEST_CASE("maximize on a smooth bowl") {
    const auto f = [](std::span<const double> v) { return -(v[0] - 0.3) * (v[0] - 0.3) - (v[1] + 1.2) * (v[1] + 1.2); };
    const auto r = maximize(f, {{"a", -1, 1}, {"b", -2, 2}});
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.argmax[0] == doctest::Approx(0.3).epsilon(1e-6));
    CHECK(r.argmax[1] == doctest::Approx(-1.2).epsilon(1e-6));
    for (std::size_t k = 1; k < r.stages.size(); ++k) CHECK(r.stages[k].best >= r.stages[k - 1].best);

    const auto pinned = maximize(f, {{"a", 0.0, 0.0}, {"b", -2, 2}});
    CHECK(pinned.argmax[0] == 0.0);
    CHECK(pinned.value == doctest::Approx(-0.09).epsilon(1e-10));

    // Same answer twice.
    const auto again = maximize(f, {{"a", -1, 1}, {"b", -2, 2}});
    CHECK(again.argmax == r.argmax);
    CHECK_THROWS(maximize(f, {{"a", 1, 0}}));
}

TEST_CASE("three-qubit Cabello maximum") {
    const auto r = maximize_three_qubit_cna();
    CHECK(std::abs(r.value - 0.140625) <= 1e-6);
    REQUIRE(r.argmax.size() == 5);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(r.argmax[k] - 1.0) <= 1e-3);
    CHECK(std::abs(r.argmax[4] - cabello::kGamma0) <= 1e-3);
    CHECK(r.argmax[1] <= r.argmax[2]);
    CHECK(r.argmax[2] <= r.argmax[3]);
}

TEST_CASE("restricted searches") {
    const auto hna = maximize_three_qubit_hna();
    CHECK(hna.value == doctest::Approx(0.125).epsilon(1e-8));
    REQUIRE(hna.argmax.size() == 4);
    CHECK(hna.argmax[0] * hna.argmax[1] * hna.argmax[2] * hna.argmax[3] == doctest::Approx(1.0).epsilon(1e-9));

    ThreeQubitOptions t0;
    t0.t = 0.0;
    CHECK(maximize_three_qubit_cna(t0).value < 0.0);

    const auto f1 = maximize_cna_fixed_t(1.0);
    CHECK(std::abs(f1.value - 0.140625) <= 1e-6);

    FixedTOptions pins;
    pins.x = pins.y = 1e4;
    pins.z = 0.2;
    pins.gamma = cabello::kGamma0;
    const auto p = maximize_cna_fixed_t(0.5, pins);
    CHECK(p.value > 0.0);
    CHECK(p.value == doctest::Approx(cabello::success_C({0.5, 1e4, 1e4, 0.2, cabello::kGamma0})).epsilon(1e-12));

    CHECK(maximize_cna_fixed_t(1e-4).value > 0.0);
    CHECK(maximize_cna_fixed_t(0.0).value < 0.0);

    FixedTOptions sym;
    sym.symmetric = true;
    CHECK(maximize_cna_fixed_t(1.0, sym).value == doctest::Approx(0.140625).epsilon(1e-6));
}

TEST_CASE("two-qubit evaluation") {
    const auto e = evaluate_two_qubit({0.5, 2.0, 1.0, pi});
    CHECK(std::abs(e.zero_du) < 1e-14);
    CHECK(std::abs(e.zero_ud) < 1e-14);
    // Closed forms for R and S with m = 1.
    const double t = 0.5, x = 2.0, y = 1.0, cd = -1.0;
    const double r = (t * t + std::pow(t, 4) / (x * y * x * y) + 2 * std::pow(t, 3) * cd / (x * y)) /
                     ((1 + t * t) * (1 + t * t / (y * y)) * (1 + t * t / (x * x)));
    const double s = (1 + t * t * x * x * y * y + 2 * t * x * y * cd) / ((1 + t * t) * (1 + x * x) * (1 + y * y));
    CHECK(e.r == doctest::Approx(r).epsilon(1e-12));
    CHECK(std::abs(e.s - s) < 1e-14);
}

TEST_CASE("two-qubit baselines") {
    const auto h = maximize_two_qubit_hardy();
    CHECK(std::abs(h.value - 0.090169) <= 1e-4);
    CHECK(h.value == doctest::Approx((5 * std::sqrt(5.0) - 11) / 2).epsilon(1e-7));

    const auto c = maximize_two_qubit_cabello();
    CHECK(std::abs(c.value - 0.1078) <= 5e-4);

    TwoQubitOptions maxent;
    maxent.t = 1.0;
    CHECK(maximize_two_qubit_hardy(maxent).value < 0.090169);
    TwoQubitOptions product;
    product.t = 0.0;
    CHECK(maximize_two_qubit_cabello(product).value <= 1e-12);
    TwoQubitOptions real_phase;
    real_phase.delta = pi;
    CHECK(maximize_two_qubit_cabello(real_phase).value >= 0.090169);
}

TEST_CASE("target dispatch") {
    CHECK(optimize_target("hna3").has_value());
    CHECK_FALSE(optimize_target("cna4").has_value());
}

TEST_CASE("parallel_for") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
    CHECK_THROWS(parallel_for(10, [](std::size_t i) {
        if (i == 7) throw std::runtime_error("boom");
    }));
    CHECK(thread_count() >= 1);
}
