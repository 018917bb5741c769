#pragma once

#include <compare>

#include "torus/rational.hpp"

namespace torus {

// A point of the circle R/Z, stored as its canonical representative in [0, 1).
class CirclePoint {
public:
    CirclePoint() = default;  // the point 0

    const Rational& value() const noexcept { return value_; }

    bool operator==(const CirclePoint& o) const { return value_ == o.value_; }
    std::strong_ordering operator<=>(const CirclePoint& o) const { return value_ <=> o.value_; }

    std::string str() const { return value_.str(); }

private:
    friend CirclePoint reduce(const Rational& x);
    explicit CirclePoint(Rational v) : value_(std::move(v)) {}

    Rational value_;  // invariant: 0 <= value_ < 1
};

// Canonicalizes a rational mod 1: 7/6 -> 1/6, -1/6 -> 5/6.
CirclePoint reduce(const Rational& x);

// Rotation by t. Subtraction gives the representative of x - y in [0, 1).
CirclePoint operator+(const CirclePoint& x, const Rational& t);
CirclePoint operator-(const CirclePoint& x, const Rational& t);
CirclePoint antipode(const CirclePoint& x);

// d(x, y) = min(|x - y|, 1 - |x - y|), the arc-length metric; values in [0, 1/2].
Rational circle_dist(const CirclePoint& x, const CirclePoint& y);

// Comparisons of circle_dist(x, y) against a threshold without forming the
// min; these sit in the hot pair-scan loops.
bool circle_dist_gt(const CirclePoint& x, const CirclePoint& y, const Rational& eps);
bool circle_dist_lt(const CirclePoint& x, const CirclePoint& y, const Rational& eps);

}  // namespace torus
