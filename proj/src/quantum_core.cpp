#include "boxlab/quantum_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace boxlab::quantum {

StateVector::StateVector(std::size_t num_qubits, std::vector<complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits < 1 || num_qubits > 3) {
        throw std::invalid_argument("StateVector: only 1 to 3 qubits are supported");
    }
    if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("StateVector: amplitude count does not match 2^n");
    }
    double norm2 = 0.0;
    for (const auto& a : amplitudes_) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("StateVector: squared norm " + std::to_string(norm2) + " is not 1");
    }
}

GhzParam::GhzParam(double t) : t_(t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("GhzParam: t must lie in [0, 1]");
}

void QubitMeasurementAngles::check() const {
    constexpr double half_pi = std::numbers::pi / 2;
    if (!(alpha >= 0.0 && alpha <= half_pi) || !(beta >= 0.0 && beta <= half_pi)) {
        throw std::invalid_argument("QubitMeasurementAngles: alpha and beta must lie in [0, pi/2]");
    }
}

StateVector ghz_state(GhzParam t, std::size_t num_qubits) {
    if (num_qubits != 2 && num_qubits != 3) {
        throw std::invalid_argument("ghz_state: qubit count must be 2 or 3");
    }
    const double tv = t.value();
    const double scale = 1.0 / std::sqrt(1.0 + tv * tv);
    std::vector<complex> amps(std::size_t{1} << num_qubits);
    amps.front() = tv * scale;
    amps.back() = scale;
    return {num_qubits, std::move(amps)};
}

std::array<complex, 2> eigenvector(const QubitMeasurementAngles& angles, Setting setting,
                                   Outcome outcome) {
    const double theta = setting == Setting::U ? angles.alpha : angles.beta;
    const double phase = setting == Setting::U ? angles.delta : angles.gamma;
    const double c = std::cos(theta), s = std::sin(theta);
    if (outcome == Outcome::Plus) {
        // cos|v> + e^{i phase} sin|w>
        return {complex(c, 0.0), std::polar(s, phase)};
    }
    // -e^{-i phase} sin|v> + cos|w>
    return {-std::polar(s, -phase), complex(c, 0.0)};
}

Matrix2 measurement_projector(const QubitMeasurementAngles& angles, Setting setting,
                              Outcome outcome) {
    angles.check();
    const auto v = eigenvector(angles, setting, outcome);
    Matrix2 m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = v[i] * std::conj(v[j]);
    return m;
}

namespace {

// <e_1 e_2 ... e_n | psi> for the product of the chosen eigenvectors.
complex overlap(const StateVector& state, std::span<const std::array<complex, 2>> vecs) {
    const std::size_t n = state.num_qubits();
    complex acc{0.0, 0.0};
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        complex coeff{1.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t bit = (idx >> (n - 1 - k)) & 1u;
            coeff *= std::conj(vecs[k][bit]);
        }
        acc += coeff * state[idx];
    }
    return acc;
}

}  // namespace

double joint_probability(const StateVector& state,
                         std::span<const QubitMeasurementAngles> angles,
                         std::span<const Setting> settings,
                         std::span<const Outcome> outcomes) {
    const std::size_t n = state.num_qubits();
    if (angles.size() != n || settings.size() != n || outcomes.size() != n) {
        throw std::invalid_argument("joint_probability: dimension mismatch");
    }
    std::array<std::array<complex, 2>, 3> vecs{};
    for (std::size_t k = 0; k < n; ++k) {
        angles[k].check();
        vecs[k] = eigenvector(angles[k], settings[k], outcomes[k]);
    }
    // Rank-1 projectors: <psi|P1 x P2 x P3|psi> = |<e1 e2 e3|psi>|^2
    return std::norm(overlap(state, std::span(vecs.data(), n)));
}

namespace {

template <std::size_t N>
box::Behavior<N, double> born_behavior(const StateVector& state,
                                       std::span<const QubitMeasurementAngles, N> angles) {
    if (state.num_qubits() != N) throw std::invalid_argument("born_distribution: qubit count mismatch");
    box::Behavior<N, double> d;
    std::array<Setting, N> settings{};
    std::array<Outcome, N> outcomes{};
    for (std::size_t s = 0; s < d.kRows; ++s) {
        for (std::size_t o = 0; o < d.kRows; ++o) {
            for (std::size_t k = 0; k < N; ++k) {
                const std::size_t bit = box::bit_of<N>(k);
                settings[k] = (s & bit) ? Setting::D : Setting::U;
                outcomes[k] = (o & bit) ? Outcome::Minus : Outcome::Plus;
            }
            d.at(s, o) = joint_probability(state, angles, settings, outcomes);
        }
    }
    return d;
}

}  // namespace

box::JointDistribution born_distribution(const StateVector& state,
                                         std::span<const QubitMeasurementAngles, 3> angles) {
    return born_behavior<3>(state, angles);
}

box::TwoQubitDistribution born_distribution2(const StateVector& state,
                                             std::span<const QubitMeasurementAngles, 2> angles) {
    return born_behavior<2>(state, angles);
}

}  // namespace boxlab::quantum
