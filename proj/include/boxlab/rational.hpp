// rational.hpp
// Minimal exact rational number over int64 used for the fixture tables.

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace boxlab {

class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by intent
    constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }
    constexpr double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend constexpr Rational operator+(Rational a, Rational b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Rational operator-(Rational a, Rational b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Rational operator*(Rational a, Rational b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend constexpr Rational operator/(Rational a, Rational b) {
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    constexpr Rational operator-() const { return {-num_, den_}; }
    constexpr Rational& operator+=(Rational o) { return *this = *this + o; }
    constexpr Rational& operator-=(Rational o) { return *this = *this - o; }

    friend constexpr bool operator==(Rational a, Rational b) = default;
    friend constexpr std::strong_ordering operator<=>(Rational a, Rational b) {
        // denominators are positive
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    constexpr void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

constexpr Rational abs(Rational r) { return r < Rational{0} ? -r : r; }

constexpr double to_double(double x) { return x; }
constexpr double to_double(Rational r) { return r.to_double(); }

}  // namespace boxlab
