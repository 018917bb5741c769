#pragma once

#include <vector>

#include "torus/arcs.hpp"
#include "torus/rng.hpp"

namespace torus::testing {

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline CirclePoint pt(long n, long d = 1) { return reduce(Rational(n, d)); }

inline std::vector<CirclePoint> grid(long denom) {
    std::vector<CirclePoint> points;
    points.reserve(static_cast<std::size_t>(denom));
    for (long i = 0; i < denom; ++i) points.push_back(pt(i, denom));
    return points;
}

// Random arc union with a handful of components, possibly wrapping.
inline ArcUnion random_arc_union(SplitMix64& rng, std::uint64_t max_den = 60) {
    std::size_t count = 1 + rng.below(4);
    std::vector<Arc> arcs;
    for (std::size_t k = 0; k < count; ++k) {
        CirclePoint start = random_point(rng, max_den);
        std::uint64_t den = 2 + rng.below(max_den);
        std::uint64_t num = 1 + rng.below(den - 1);
        arcs.push_back({start, Rational(static_cast<long>(num), static_cast<long>(den))});
    }
    return ArcUnion::from_arcs(std::move(arcs));
}

}  // namespace torus::testing
