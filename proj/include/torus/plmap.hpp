#pragma once

#include <utility>
#include <vector>

#include "torus/arcs.hpp"
#include "torus/circle.hpp"

namespace torus {

// Continuous piecewise-linear circle map given by a rational lift: the
// breakpoints (t_i, v_i) with t_0 = 0, t_k = 1 define F on [0, 1] by linear
// interpolation, and the circle map is x -> F(x) mod 1. F(1) - F(0) must be
// an integer (the degree) for the induced circle map to be continuous.
class PLCircleMap {
public:
    struct Breakpoint {
        Rational t, v;
    };

    // The xp map x -> p x mod 1, lift (0,0) -> (1,p).
    static PLCircleMap times_p(long p);
    static PLCircleMap from_breakpoints(std::vector<std::pair<Rational, Rational>> pts);

    CirclePoint apply(const CirclePoint& x) const;
    // Lift value F(x) for x in [0, 1].
    Rational lift_at(const Rational& x) const;

    long degree() const noexcept { return degree_; }
    const std::vector<Breakpoint>& breakpoints() const noexcept { return pts_; }
    const std::vector<Rational>& slopes() const noexcept { return slopes_; }
    bool has_constant_piece() const;

    // True when the circle map equals x -> p x for a positive integer p
    // (every slope equal to the same integer p >= 1 and F(0) an integer).
    bool is_times_p() const;
    long times_p_value() const;  // only valid when is_times_p()

    bool operator==(const PLCircleMap& o) const;

private:
    PLCircleMap() = default;

    std::vector<Breakpoint> pts_;
    std::vector<Rational> slopes_;  // slopes_[i] on [t_i, t_{i+1}]
    long degree_ = 0;
};

// Forward orbit x, f(x), ..., f^{n-1}(x); n >= 1. Iterates are cached here
// so separated-set scans never re-derive them.
struct OrbitSegment {
    CirclePoint base;
    std::vector<CirclePoint> points;
};

OrbitSegment iterate(const PLCircleMap& map, const CirclePoint& x, long n);

// Exact preimage {x : map(x) in target}. Throws UnsupportedDegenerate when a
// constant piece maps into the target (the preimage would contain a closed
// interval).
ArcUnion preimage(const PLCircleMap& map, const ArcUnion& target);

// Bowen metric d_n(x, y) = max_{0 <= i < n} d(f^i x, f^i y).
Rational bowen_dist(const PLCircleMap& map, const CirclePoint& x, const CirclePoint& y, long n);

// Bowen ball B_n(x, eps) = {y : d(f^i x, f^i y) < eps for all i < n}, an
// open arc union computed by nesting exact preimages.
ArcUnion bowen_ball(const PLCircleMap& map, const CirclePoint& x, long n, const Rational& eps);

}  // namespace torus
