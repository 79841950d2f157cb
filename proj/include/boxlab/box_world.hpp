// box_world.hpp
// Behaviors ("boxes") of the (N,2,2) Bell scenario: a table of P(outcomes |
// settings) for N = 2 or 3 parties, plus the validators and Bell-type
// expressions evaluated on them.
//
// Index layout: entry = setting_index * 2^N + outcome_index, where each index
// packs party 1 into the most significant bit, U = 0 / D = 1, + = 0 / - = 1.
// Keys are written "UDU|+-+".

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boxlab/labels.hpp"
#include "boxlab/rational.hpp"

namespace boxlab::box {

inline constexpr double kTolerance = 1e-9;

template <std::size_t N>
struct Settings {
    std::array<Setting, N> parties{};
};

template <std::size_t N>
struct Outcomes {
    std::array<Outcome, N> parties{};
};

using SettingTriple = Settings<3>;
using OutcomeTriple = Outcomes<3>;

class SignalingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <std::size_t N>
constexpr std::size_t pack(const std::array<Setting, N>& s) {
    std::size_t idx = 0;
    for (auto v : s) idx = (idx << 1) | static_cast<std::size_t>(v);
    return idx;
}

template <std::size_t N>
constexpr std::size_t pack(const std::array<Outcome, N>& o) {
    std::size_t idx = 0;
    for (auto v : o) idx = (idx << 1) | static_cast<std::size_t>(v);
    return idx;
}

// Bit of `party` (0-based, party 0 = most significant) inside a packed index.
template <std::size_t N>
constexpr std::size_t bit_of(std::size_t party) {
    return std::size_t{1} << (N - 1 - party);
}

template <std::size_t N, class T>
class Behavior {
public:
    static constexpr std::size_t kParties = N;
    static constexpr std::size_t kRows = std::size_t{1} << N;
    static constexpr std::size_t kSize = kRows * kRows;
    using value_type = T;

    Behavior() { table_.fill(T{0}); }
    explicit Behavior(const std::array<T, kSize>& table) : table_(table) {}

    T& at(std::size_t setting, std::size_t outcome) { return table_.at(setting * kRows + outcome); }
    const T& at(std::size_t setting, std::size_t outcome) const {
        return table_.at(setting * kRows + outcome);
    }

    const T& operator()(const Settings<N>& s, const Outcomes<N>& o) const {
        return at(pack(s.parties), pack(o.parties));
    }
    T& operator()(const Settings<N>& s, const Outcomes<N>& o) { return at(pack(s.parties), pack(o.parties)); }

    // Lookup by "UDU|+-+"-style key; throws std::invalid_argument on malformed keys.
    const T& operator[](std::string_view key) const;
    T& operator[](std::string_view key);

    std::span<const T, kSize> entries() const { return table_; }
    std::span<T, kSize> entries() { return table_; }

    Behavior<N, double> to_double() const {
        std::array<double, kSize> out{};
        for (std::size_t i = 0; i < kSize; ++i) out[i] = boxlab::to_double(table_[i]);
        return Behavior<N, double>(out);
    }

    friend bool operator==(const Behavior&, const Behavior&) = default;

private:
    std::array<T, kSize> table_;
};

using JointDistribution = Behavior<3, double>;
using TwoQubitDistribution = Behavior<2, double>;
using ExactDistribution = Behavior<3, Rational>;

// Parses "UDU|+-+" into (setting index, outcome index) for an N-party key.
std::pair<std::size_t, std::size_t> parse_key(std::string_view key, std::size_t parties);
std::string format_key(std::size_t setting, std::size_t outcome, std::size_t parties);

template <std::size_t N, class T>
const T& Behavior<N, T>::operator[](std::string_view key) const {
    const auto [s, o] = parse_key(key, N);
    return at(s, o);
}

template <std::size_t N, class T>
T& Behavior<N, T>::operator[](std::string_view key) {
    const auto [s, o] = parse_key(key, N);
    return at(s, o);
}

// ---------------------------------------------------------------------------
// Validation

struct ConstraintDetail {
    std::string kind;   // "positivity", "normalization" or "no-signaling"
    std::string label;  // entry key, setting, or the equality being checked
    double residual = 0.0;
    bool ok = true;
};

struct ValidationReport {
    bool positivity_ok = true;
    bool normalization_ok = true;
    bool no_signaling_ok = true;
    double worst_negativity = 0.0;
    double worst_normalization = 0.0;
    double worst_signaling = 0.0;
    std::vector<ConstraintDetail> details;

    bool ok() const { return positivity_ok && normalization_ok && no_signaling_ok; }
    std::string to_csv() const;
};

namespace detail {
std::string setting_label(std::size_t setting, std::size_t parties);
std::string signaling_label(std::size_t party, std::size_t setting, std::size_t outcome,
                            std::size_t parties);
}  // namespace detail

// Positivity, normalization per setting, and no-signaling: for each party the
// marginal of the others must not depend on that party's setting.
template <std::size_t N, class T>
ValidationReport validate(const Behavior<N, T>& d, double tol = kTolerance) {
    using B = Behavior<N, T>;
    ValidationReport rep;
    for (std::size_t i = 0; i < B::kSize; ++i) {
        const double v = boxlab::to_double(d.entries()[i]);
        if (!std::isfinite(v)) throw std::invalid_argument("validate: non-finite entry");
    }
    for (std::size_t s = 0; s < B::kRows; ++s) {
        T sum{0};
        for (std::size_t o = 0; o < B::kRows; ++o) {
            const double v = boxlab::to_double(d.at(s, o));
            const double neg = v < 0 ? -v : 0.0;
            const bool ok = neg <= tol;
            rep.positivity_ok = rep.positivity_ok && ok;
            rep.worst_negativity = std::max(rep.worst_negativity, neg);
            rep.details.push_back({"positivity", format_key(s, o, N), neg, ok});
            sum += d.at(s, o);
        }
        const double res = std::abs(boxlab::to_double(sum - T{1}));
        const bool ok = res <= tol;
        rep.normalization_ok = rep.normalization_ok && ok;
        rep.worst_normalization = std::max(rep.worst_normalization, res);
        rep.details.push_back({"normalization", detail::setting_label(s, N), res, ok});
    }
    for (std::size_t p = 0; p < N; ++p) {
        const std::size_t bit = bit_of<N>(p);
        for (std::size_t s = 0; s < B::kRows; ++s) {
            if (s & bit) continue;
            for (std::size_t o = 0; o < B::kRows; ++o) {
                if (o & bit) continue;
                const T lhs = d.at(s, o) + d.at(s, o | bit);
                const T rhs = d.at(s | bit, o) + d.at(s | bit, o | bit);
                const double res = std::abs(boxlab::to_double(lhs - rhs));
                const bool ok = res <= tol;
                rep.no_signaling_ok = rep.no_signaling_ok && ok;
                rep.worst_signaling = std::max(rep.worst_signaling, res);
                rep.details.push_back({"no-signaling", detail::signaling_label(p, s, o, N), res, ok});
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Marginals and correlators

struct PartyEvent {
    std::size_t party = 0;  // 0-based
    Setting setting = Setting::U;
    Outcome outcome = Outcome::Plus;
};

// Probability of the listed events, summing out the remaining parties. The
// value is evaluated for every setting of the ignored parties; disagreement
// beyond tol throws SignalingError.
template <std::size_t N, class T>
T marginal(const Behavior<N, T>& d, std::span<const PartyEvent> events, double tol = kTolerance) {
    using B = Behavior<N, T>;
    std::size_t fixed_mask = 0, s_fixed = 0, o_fixed = 0;
    for (const auto& e : events) {
        if (e.party >= N) throw std::invalid_argument("marginal: party out of range");
        const std::size_t bit = bit_of<N>(e.party);
        if (fixed_mask & bit) throw std::invalid_argument("marginal: party listed twice");
        fixed_mask |= bit;
        if (e.setting == Setting::D) s_fixed |= bit;
        if (e.outcome == Outcome::Minus) o_fixed |= bit;
    }
    bool first = true;
    T reference{0};
    for (std::size_t s = 0; s < B::kRows; ++s) {
        if ((s & fixed_mask) != s_fixed) continue;
        T sum{0};
        for (std::size_t o = 0; o < B::kRows; ++o) {
            if ((o & fixed_mask) == o_fixed) sum += d.at(s, o);
        }
        if (first) {
            reference = sum;
            first = false;
        } else if (std::abs(boxlab::to_double(sum - reference)) > tol) {
            throw SignalingError("marginal: value depends on the ignored parties' settings");
        }
    }
    return reference;
}

template <std::size_t N, class T>
T expectation(const Behavior<N, T>& d, std::size_t setting) {
    T e{0};
    for (std::size_t o = 0; o < Behavior<N, T>::kRows; ++o) {
        const bool odd = std::popcount(o) % 2 == 1;
        e += odd ? -d.at(setting, o) : d.at(setting, o);
    }
    return e;
}

template <std::size_t N, class T>
T expectation(const Behavior<N, T>& d, const Settings<N>& s) {
    return expectation(d, pack(s.parties));
}

// ---------------------------------------------------------------------------
// Three-party expressions

namespace idx3 {
inline constexpr std::size_t UUU = 0, UUD = 1, UDU = 2, UDD = 3, DUU = 4, DUD = 5, DDU = 6, DDD = 7;
inline constexpr std::size_t PPP = 0, PPM = 1, PMP = 2, PMM = 3, MPP = 4, MPM = 5, MMP = 6, MMM = 7;
}  // namespace idx3

// P(UUU|+++) - P(DDD|---) - [P(DUU|+++) + P(UDU|+++) + P(UUD|+++)];
// positive means the Bell-type inequality is violated.
template <class T>
T bell_inequality_value(const Behavior<3, T>& d) {
    using namespace idx3;
    return d.at(UUU, PPP) - d.at(DDD, MMM) - (d.at(DUU, PPP) + d.at(UDU, PPP) + d.at(UUD, PPP));
}

template <class T>
struct HardyCabelloResult {
    T p{0};
    T q{0};
    T c{0};
    std::array<T, 3> zero_terms{};  // P(DUU|+++), P(UDU|+++), P(UUD|+++)
    bool zeros_ok = false;
};

template <class T>
HardyCabelloResult<T> hardy_cabello_check(const Behavior<3, T>& d, double tol = kTolerance) {
    using namespace idx3;
    HardyCabelloResult<T> r;
    r.p = d.at(UUU, PPP);
    r.q = d.at(DDD, MMM);
    r.c = r.p - r.q;
    r.zero_terms = {d.at(DUU, PPP), d.at(UDU, PPP), d.at(UUD, PPP)};
    r.zeros_ok = true;
    for (const auto& z : r.zero_terms) r.zeros_ok = r.zeros_ok && std::abs(boxlab::to_double(z)) <= tol;
    return r;
}

template <class T>
struct RahamanResult {
    T p{0};
    std::array<T, 4> zero_terms{};  // P(D1,U2|++), P(D2,U3|++), P(U1,D3|++), P(DDD|---)
    bool zeros_ok = false;
    bool ok = false;  // p > 0 and all zeros hold
};

// Pair marginals must be well defined; throws SignalingError otherwise.
template <class T>
RahamanResult<T> rahaman_check(const Behavior<3, T>& d, double tol = kTolerance) {
    using namespace idx3;
    const std::array<PartyEvent, 2> d1u2{{{0, Setting::D, Outcome::Plus}, {1, Setting::U, Outcome::Plus}}};
    const std::array<PartyEvent, 2> d2u3{{{1, Setting::D, Outcome::Plus}, {2, Setting::U, Outcome::Plus}}};
    const std::array<PartyEvent, 2> u1d3{{{0, Setting::U, Outcome::Plus}, {2, Setting::D, Outcome::Plus}}};
    RahamanResult<T> r;
    r.p = d.at(UUU, PPP);
    r.zero_terms = {marginal(d, std::span<const PartyEvent>(d1u2), tol),
                    marginal(d, std::span<const PartyEvent>(d2u3), tol),
                    marginal(d, std::span<const PartyEvent>(u1d3), tol), d.at(DDD, MMM)};
    r.zeros_ok = true;
    for (const auto& z : r.zero_terms) r.zeros_ok = r.zeros_ok && std::abs(boxlab::to_double(z)) <= tol;
    r.ok = r.zeros_ok && boxlab::to_double(r.p) > tol;
    return r;
}

// Coefficient (+1/-1) per setting triple, indexed by packed setting.
using SignPattern = std::array<int, 8>;

// E(UUU)+E(DUU)+E(UDU)+E(UUD)-E(UDD)-E(DUD)-E(DDU)-E(DDD)
inline constexpr SignPattern kSvetlichnyCanonical{+1, +1, +1, -1, +1, -1, -1, -1};
// E(UUU)-E(UUD)+E(UDU)+E(UDD)-E(DUU)+E(DUD)+E(DDU)+E(DDD)
inline constexpr SignPattern kSvetlichnyAlternate{+1, -1, +1, +1, -1, +1, +1, +1};

// |sum_s signs[s] * E(s)|; an instance is satisfied when the value is <= 4.
template <class T>
T svetlichny_value(const Behavior<3, T>& d, const SignPattern& signs) {
    T v{0};
    for (std::size_t s = 0; s < 8; ++s) v += signs[s] > 0 ? expectation(d, s) : -expectation(d, s);
    using boxlab::abs;
    using std::abs;
    return abs(v);
}

// Orbit of the canonical pattern under local relabelings (swap a party's
// settings, flip a party's outcome for one setting, permute parties), with
// patterns identified up to global sign. Sorted, canonical pattern included.
std::vector<SignPattern> svetlichny_family();

// P(UUU|+++) + P(UDD|--+) + P(DUD|+--) + P(DDU|-+-); satisfied when <= 1.
template <class T>
T gyni_value(const Behavior<3, T>& d) {
    using namespace idx3;
    return d.at(UUU, PPP) + d.at(UDD, MMP) + d.at(DUD, PMM) + d.at(DDU, MPM);
}

// Marginal over parties 1 and 2; throws SignalingError if it depends on
// party 3's setting.
template <class T>
Behavior<2, T> trace_out_third(const Behavior<3, T>& d, double tol = kTolerance) {
    Behavior<2, T> out;
    for (std::size_t s12 = 0; s12 < 4; ++s12) {
        for (std::size_t o12 = 0; o12 < 4; ++o12) {
            const T u = d.at(s12 << 1, o12 << 1) + d.at(s12 << 1, (o12 << 1) | 1);
            const T v = d.at((s12 << 1) | 1, o12 << 1) + d.at((s12 << 1) | 1, (o12 << 1) | 1);
            if (std::abs(boxlab::to_double(u - v)) > tol) {
                throw SignalingError("trace_out_third: qubit-3 setting changes the pair marginal");
            }
            out.at(s12, o12) = u;
        }
    }
    return out;
}

// E(U1,U2) - E(D1,U2) - E(U1,D2) - E(D1,D2)
template <class T>
T chsh_value(const Behavior<2, T>& d) {
    return expectation(d, 0) - expectation(d, 2) - expectation(d, 1) - expectation(d, 3);
}

// Two-party Cabello quantities: R = P(U1U2|++), S = P(D1D2|--) and the zero
// terms P(D1U2|++), P(U1D2|++).
template <class T>
struct TwoQubitCabello {
    T r{0};
    T s{0};
    T c2{0};
    std::array<T, 2> zero_terms{};
};

template <class T>
TwoQubitCabello<T> two_qubit_cabello(const Behavior<2, T>& d) {
    TwoQubitCabello<T> c;
    c.r = d.at(0, 0);
    c.s = d.at(3, 3);
    c.c2 = c.r - c.s;
    c.zero_terms = {d.at(2, 0), d.at(1, 0)};
    return c;
}

// ---------------------------------------------------------------------------
// Fixtures and deterministic boxes

enum class FixtureId { Set20, Set21, Set23, SetC04 };

ExactDistribution fixture_distribution(FixtureId id);
// Accepts "set20", "set21", "set23", "set_c04"; throws std::invalid_argument.
FixtureId fixture_from_name(std::string_view name);
std::string_view fixture_name(FixtureId id);
std::vector<FixtureId> all_fixtures();

// Local deterministic box: party k answers bit (setting) of responses[k],
// i.e. responses[k] = (outcome for U) | (outcome for D) << 1.
ExactDistribution deterministic_box(const std::array<int, 3>& responses);
std::vector<ExactDistribution> all_deterministic_boxes();

}  // namespace boxlab::box
