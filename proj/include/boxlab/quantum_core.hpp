// quantum_core.hpp
// Born-rule probabilities for 2- and 3-qubit pure states under local
// projective measurements. Used as the brute-force oracle for the closed forms.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "boxlab/box_world.hpp"
#include "boxlab/labels.hpp"

namespace boxlab::quantum {

using complex = std::complex<double>;
using Matrix2 = std::array<std::array<complex, 2>, 2>;

inline constexpr double kNormTolerance = 1e-12;

// Pure state on n qubits, qubit 1 is the most significant bit of the index.
// |v_k> is encoded as bit 0, |w_k> as bit 1.
class StateVector {
public:
    StateVector(std::size_t num_qubits, std::vector<complex> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const complex& operator[](std::size_t i) const { return amplitudes_[i]; }
    std::span<const complex> amplitudes() const { return amplitudes_; }

private:
    std::size_t num_qubits_;
    std::vector<complex> amplitudes_;
};

// Entanglement parameter of t|v..v> + |w..w>, restricted to [0, 1].
class GhzParam {
public:
    explicit GhzParam(double t);
    double value() const { return t_; }

private:
    double t_;
};

// (alpha, delta) define the U eigenbasis, (beta, gamma) the D eigenbasis.
struct QubitMeasurementAngles {
    double alpha = 0.0;
    double delta = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    // Throws std::invalid_argument unless 0 <= alpha, beta <= pi/2.
    void check() const;
};

StateVector ghz_state(GhzParam t, std::size_t num_qubits);

// Eigenvector of U (or D) for the given outcome, in the (v, w) basis.
std::array<complex, 2> eigenvector(const QubitMeasurementAngles& angles, Setting setting,
                                   Outcome outcome);

Matrix2 measurement_projector(const QubitMeasurementAngles& angles, Setting setting,
                              Outcome outcome);

// <psi| P_1 (x) ... (x) P_n |psi>. Sizes of the three spans must match the
// state's qubit count.
double joint_probability(const StateVector& state,
                         std::span<const QubitMeasurementAngles> angles,
                         std::span<const Setting> settings,
                         std::span<const Outcome> outcomes);

// Every joint probability of a 3-qubit state for the given bases.
box::JointDistribution born_distribution(const StateVector& state,
                                         std::span<const QubitMeasurementAngles, 3> angles);

// Two-qubit analogue.
box::TwoQubitDistribution born_distribution2(const StateVector& state,
                                             std::span<const QubitMeasurementAngles, 2> angles);

}  // namespace boxlab::quantum
