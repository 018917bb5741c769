#pragma once

#include <vector>

#include "torus/circle.hpp"

namespace torus {

// Open arc traversed counterclockwise from `start` for `length`. May wrap
// past 0. length == 1 denotes the circle minus the single point `start`
// (an open arc whose two excluded endpoints coincide).
struct Arc {
    CirclePoint start;
    Rational length;  // invariant: 0 < length <= 1

    // The excluded far endpoint, start + length mod 1.
    CirclePoint end() const { return start + length; }

    bool contains(const CirclePoint& p) const;

    bool operator==(const Arc& o) const { return start == o.start && length == o.length; }
};

class ArcUnion;

namespace detail {

// Sub-interval of the fundamental domain [0, 1].
struct Segment {
    Rational lo, hi;  // 0 <= lo < hi <= 1
};

struct SegmentView {
    std::vector<Segment> segments;  // sorted, pairwise disjoint
    bool zero_interior = false;     // the point 0 belongs to the set
};

SegmentView to_segments(const ArcUnion& a);

// Rebuilds an ArcUnion from disjoint sorted segments; when zero_interior is
// set the first and last segments are joined across 0 (and a single covering
// segment becomes the full circle).
ArcUnion from_segments(std::vector<Segment> segments, bool zero_interior);

}  // namespace detail

// Finite disjoint union of open arcs in canonical form: the arcs are the
// connected components of the set, sorted by start point. Two arcs may share
// an excluded endpoint (they are then distinct components). The full circle
// is a separate variant since it is not an arc.
class ArcUnion {
public:
    ArcUnion() = default;  // empty set

    static ArcUnion empty() { return ArcUnion(); }
    static ArcUnion full();
    static ArcUnion single(Arc arc);
    // Canonicalizing union of an arbitrary arc list (overlaps merged).
    static ArcUnion from_arcs(std::vector<Arc> arcs);
    // Strict constructor for deserialization: input must already be canonical.
    static ArcUnion checked(std::vector<Arc> arcs, bool full_circle);

    bool is_empty() const noexcept { return !full_ && arcs_.empty(); }
    bool is_full() const noexcept { return full_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    Rational measure() const;
    bool contains(const CirclePoint& p) const;

    bool operator==(const ArcUnion& o) const { return full_ == o.full_ && arcs_ == o.arcs_; }

private:
    friend ArcUnion intersect(const ArcUnion&, const ArcUnion&);
    friend ArcUnion translate(const ArcUnion&, const CirclePoint&);
    friend ArcUnion complement_interior(const ArcUnion&);
    friend ArcUnion detail::from_segments(std::vector<detail::Segment>, bool);

    bool full_ = false;
    std::vector<Arc> arcs_;  // sorted by start, pairwise disjoint
};

// {y : d(c, y) < r}. For r > 1/2 the whole circle; for r == 1/2 the circle
// minus the antipode of c. Rejects r <= 0.
ArcUnion open_ball(const CirclePoint& c, const Rational& r);

ArcUnion intersect(const ArcUnion& a, const ArcUnion& b);
ArcUnion translate(const ArcUnion& a, const CirclePoint& t);

// Open interior of the set complement (drops the finitely many boundary
// points, so measures still add up to 1).
ArcUnion complement_interior(const ArcUnion& a);

bool is_subset(const ArcUnion& inner, const ArcUnion& outer);

}  // namespace torus
