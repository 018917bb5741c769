#include "torus/circle.hpp"

namespace torus {

CirclePoint reduce(const Rational& x) { return CirclePoint(x.mod1()); }

CirclePoint operator+(const CirclePoint& x, const Rational& t) {
    return reduce(x.value() + t);
}

CirclePoint operator-(const CirclePoint& x, const Rational& t) {
    return reduce(x.value() - t);
}

CirclePoint antipode(const CirclePoint& x) { return x + Rational(1, 2); }

Rational circle_dist(const CirclePoint& x, const CirclePoint& y) {
    Rational delta = abs(x.value() - y.value());  // in [0, 1)
    if (delta > Rational(1, 2)) delta = Rational(1) - delta;
    return delta;
}

// With delta = |x - y| in [0, 1): d > eps iff eps < delta < 1 - eps,
// and d < eps iff delta < eps or delta > 1 - eps. Both forms stay valid
// for eps >= 1/2 (the first is then never true, the second always).
bool circle_dist_gt(const CirclePoint& x, const CirclePoint& y, const Rational& eps) {
    Rational delta = abs(x.value() - y.value());
    return delta > eps && delta < Rational(1) - eps;
}

bool circle_dist_lt(const CirclePoint& x, const CirclePoint& y, const Rational& eps) {
    Rational delta = abs(x.value() - y.value());
    return delta < eps || delta > Rational(1) - eps;
}

}  // namespace torus
