#include "torus/plmap.hpp"

#include <algorithm>
#include <cassert>

namespace torus {

PLCircleMap PLCircleMap::times_p(long p) {
    if (p < 1) throw ValidationError("bad_times_p", "xp map requires p >= 1");
    return from_breakpoints({{Rational(0), Rational(0)}, {Rational(1), Rational(p)}});
}

PLCircleMap PLCircleMap::from_breakpoints(std::vector<std::pair<Rational, Rational>> pts) {
    if (pts.size() < 2 || !pts.front().first.is_zero() || pts.back().first != Rational(1)) {
        throw ValidationError("bad_endpoints",
                              "lift breakpoints must start at t=0 and end at t=1");
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i].first < pts[i + 1].first)) {
            throw ValidationError("non_monotone_breakpoints",
                                  "breakpoint abscissae must be strictly increasing");
        }
    }
    Rational deg = pts.back().second - pts.front().second;
    if (!deg.is_integer()) {
        throw ValidationError("non_integer_degree",
                              "F(1) - F(0) must be an integer, got " + deg.str());
    }

    PLCircleMap map;
    map.degree_ = static_cast<long>(deg.num().get_si());
    map.pts_.reserve(pts.size());
    for (auto& [t, v] : pts) map.pts_.push_back({std::move(t), std::move(v)});
    map.slopes_.reserve(map.pts_.size() - 1);
    for (std::size_t i = 0; i + 1 < map.pts_.size(); ++i) {
        map.slopes_.push_back((map.pts_[i + 1].v - map.pts_[i].v) /
                              (map.pts_[i + 1].t - map.pts_[i].t));
    }
    return map;
}

Rational PLCircleMap::lift_at(const Rational& x) const {
    assert(x.sign() >= 0 && x <= Rational(1));
    // Piece index: the last breakpoint with t_i <= x (and i < piece count).
    auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                               [](const Rational& q, const Breakpoint& b) { return q < b.t; });
    std::size_t i = static_cast<std::size_t>(it - pts_.begin());
    i = i == 0 ? 0 : i - 1;
    if (i >= slopes_.size()) i = slopes_.size() - 1;
    return pts_[i].v + slopes_[i] * (x - pts_[i].t);
}

CirclePoint PLCircleMap::apply(const CirclePoint& x) const {
    return reduce(lift_at(x.value()));
}

bool PLCircleMap::has_constant_piece() const {
    return std::any_of(slopes_.begin(), slopes_.end(),
                       [](const Rational& s) { return s.is_zero(); });
}

bool PLCircleMap::is_times_p() const {
    if (!pts_.front().v.is_integer()) return false;
    const Rational& s = slopes_.front();
    if (!s.is_integer() || s.sign() <= 0) return false;
    return std::all_of(slopes_.begin(), slopes_.end(),
                       [&](const Rational& t) { return t == s; });
}

long PLCircleMap::times_p_value() const {
    assert(is_times_p());
    return static_cast<long>(slopes_.front().num().get_si());
}

bool PLCircleMap::operator==(const PLCircleMap& o) const {
    if (pts_.size() != o.pts_.size()) return false;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (pts_[i].t != o.pts_[i].t || pts_[i].v != o.pts_[i].v) return false;
    }
    return true;
}

OrbitSegment iterate(const PLCircleMap& map, const CirclePoint& x, long n) {
    if (n < 1) throw ValidationError("bad_orbit_length", "orbit length must be >= 1");
    OrbitSegment seg;
    seg.base = x;
    seg.points.reserve(static_cast<std::size_t>(n));
    seg.points.push_back(x);
    for (long i = 1; i < n; ++i) {
        seg.points.push_back(map.apply(seg.points.back()));
    }
    return seg;
}

ArcUnion preimage(const PLCircleMap& map, const ArcUnion& target) {
    if (target.is_full()) return ArcUnion::full();
    if (target.is_empty()) return ArcUnion::empty();

    const auto& pts = map.breakpoints();
    const auto& slopes = map.slopes();

    // Target arcs as real intervals (a, b) with 0 <= a < 1, b <= 2.
    std::vector<std::pair<Rational, Rational>> targets;
    targets.reserve(target.arcs().size());
    for (const Arc& arc : target.arcs()) {
        targets.emplace_back(arc.start.value(), arc.start.value() + arc.length);
    }

    std::vector<detail::Segment> pieces;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        const Rational& t0 = pts[i].t;
        const Rational& t1 = pts[i + 1].t;
        const Rational& v0 = pts[i].v;
        const Rational& v1 = pts[i + 1].v;
        const Rational& s = slopes[i];

        if (s.is_zero()) {
            if (target.contains(reduce(v0))) {
                throw UnsupportedDegenerate(
                    "constant piece on [" + t0.str() + ", " + t1.str() + "] maps into the target");
            }
            continue;
        }

        const Rational& vlo = min(v0, v1);
        const Rational& vhi = max(v0, v1);
        for (const auto& [a, b] : targets) {
            // Integer shifts m with (a + m, b + m) meeting (vlo, vhi).
            mpz_class m_lo = (vlo - b).floor() + 1;
            mpz_class m_hi = (vhi - a).floor();  // strict overlap needs a + m < vhi
            if (vhi - a == Rational(mpz_class(m_hi), mpz_class(1))) m_hi -= 1;
            for (mpz_class m = m_lo; m <= m_hi; ++m) {
                Rational shift(m, mpz_class(1));
                Rational xa = t0 + (a + shift - v0) / s;
                Rational xb = t0 + (b + shift - v0) / s;
                if (s.sign() < 0) std::swap(xa, xb);
                const Rational& lo = max(xa, t0);
                const Rational& hi = min(xb, t1);
                if (lo < hi) pieces.push_back({lo, hi});
            }
        }
    }

    if (pieces.empty()) return ArcUnion::empty();
    std::sort(pieces.begin(), pieces.end(),
              [](const detail::Segment& x, const detail::Segment& y) { return x.lo < y.lo; });

    // Pieces from adjacent branches share an endpoint q exactly at
    // breakpoints; they join into one open arc iff map(q) lands in the
    // (open) target.
    std::vector<detail::Segment> merged;
    merged.reserve(pieces.size());
    for (auto& seg : pieces) {
        if (!merged.empty() && seg.lo == merged.back().hi &&
            target.contains(map.apply(reduce(seg.lo)))) {
            merged.back().hi = std::move(seg.hi);
        } else {
            assert(merged.empty() || seg.lo >= merged.back().hi);
            merged.push_back(std::move(seg));
        }
    }

    bool zero_joint = target.contains(map.apply(CirclePoint()));
    return detail::from_segments(std::move(merged), zero_joint);
}

Rational bowen_dist(const PLCircleMap& map, const CirclePoint& x, const CirclePoint& y, long n) {
    if (n < 1) throw ValidationError("bad_bowen_steps", "Bowen metric requires n >= 1");
    CirclePoint a = x, b = y;
    Rational best = circle_dist(a, b);
    for (long i = 1; i < n; ++i) {
        a = map.apply(a);
        b = map.apply(b);
        Rational d = circle_dist(a, b);
        if (d > best) best = d;
    }
    return best;
}

ArcUnion bowen_ball(const PLCircleMap& map, const CirclePoint& x, long n, const Rational& eps) {
    if (n < 1) throw ValidationError("bad_bowen_steps", "Bowen ball requires n >= 1");
    if (eps.sign() <= 0) throw ValidationError("nonpositive_radius", "Bowen ball radius must be positive");

    OrbitSegment orbit = iterate(map, x, n);
    // Nest from the last iterate backwards: B_k(f^i x) = ball(f^i x) cap
    // f^{-1} B_{k-1}(f^{i+1} x); intermediate unions stay canonical so the
    // fragment count is bounded by the final component count.
    ArcUnion ball = open_ball(orbit.points.back(), eps);
    for (long i = n - 2; i >= 0; --i) {
        ball = intersect(open_ball(orbit.points[static_cast<std::size_t>(i)], eps),
                         preimage(map, ball));
    }
    return ball;
}

}  // namespace torus
