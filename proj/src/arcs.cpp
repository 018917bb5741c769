#include "torus/arcs.hpp"

#include <algorithm>
#include <cassert>

namespace torus {

namespace {

const Rational& one() {
    static const Rational v(1);
    return v;
}

void validate_arc(const Arc& arc) {
    if (arc.length.sign() <= 0 || arc.length > one()) {
        throw ValidationError("bad_arc_length",
                              "arc length must lie in (0, 1], got " + arc.length.str());
    }
}

}  // namespace

bool Arc::contains(const CirclePoint& p) const {
    Rational delta = (p.value() - start.value()).mod1();
    return delta.sign() > 0 && delta < length;
}

ArcUnion ArcUnion::full() {
    ArcUnion u;
    u.full_ = true;
    return u;
}

ArcUnion ArcUnion::single(Arc arc) {
    validate_arc(arc);
    ArcUnion u;
    u.arcs_.push_back(std::move(arc));
    return u;
}

Rational ArcUnion::measure() const {
    if (full_) return one();
    Rational total(0);
    for (const Arc& a : arcs_) total += a.length;
    return total;
}

bool ArcUnion::contains(const CirclePoint& p) const {
    if (full_) return true;
    // Candidate components: the last arc starting at or before p, plus the
    // final arc, which may wrap past 0.
    if (arcs_.empty()) return false;
    auto it = std::upper_bound(arcs_.begin(), arcs_.end(), p,
                               [](const CirclePoint& q, const Arc& a) { return q < a.start; });
    if (it != arcs_.begin() && std::prev(it)->contains(p)) return true;
    return arcs_.back().contains(p);
}

namespace detail {

SegmentView to_segments(const ArcUnion& a) {
    SegmentView view;
    if (a.is_full()) {
        view.segments.push_back({Rational(0), one()});
        view.zero_interior = true;
        return view;
    }
    for (const Arc& arc : a.arcs()) {
        Rational lo = arc.start.value();
        Rational hi = lo + arc.length;
        if (hi <= one()) {
            view.segments.push_back({std::move(lo), std::move(hi)});
        } else {
            view.segments.push_back({std::move(lo), one()});
            view.segments.push_back({Rational(0), hi - one()});
            view.zero_interior = true;
        }
    }
    std::sort(view.segments.begin(), view.segments.end(),
              [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
    return view;
}

ArcUnion from_segments(std::vector<Segment> segments, bool zero_interior) {
    ArcUnion out;
    if (segments.empty()) return out;

    std::vector<Arc> arcs;
    arcs.reserve(segments.size());

    bool wrap = zero_interior && segments.front().lo.is_zero() && segments.back().hi == one();
    if (wrap && segments.size() == 1) return ArcUnion::full();

    std::size_t begin = 0, end = segments.size();
    if (wrap) {
        // Join (x, 1) and (0, y) through 0 into one wrapping arc.
        const Segment& last = segments.back();
        const Segment& first = segments.front();
        arcs.push_back({reduce(last.lo), (one() - last.lo) + first.hi});
        begin = 1;
        end = segments.size() - 1;
    }
    for (std::size_t i = begin; i < end; ++i) {
        arcs.push_back({reduce(segments[i].lo), segments[i].hi - segments[i].lo});
    }
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& x, const Arc& y) { return x.start < y.start; });
    out.arcs_ = std::move(arcs);
    return out;
}

}  // namespace detail

ArcUnion ArcUnion::from_arcs(std::vector<Arc> input) {
    if (input.empty()) return empty();
    for (const Arc& a : input) validate_arc(a);

    // Membership in the (non-canonical) input, for deciding whether touching
    // segments join through their shared endpoint.
    auto covered = [&input](const CirclePoint& p) {
        for (const Arc& a : input) {
            if (a.contains(p)) return true;
        }
        return false;
    };

    std::vector<detail::Segment> raw;
    for (const Arc& arc : input) {
        ArcUnion tmp = single(arc);
        auto view = detail::to_segments(tmp);
        raw.insert(raw.end(), view.segments.begin(), view.segments.end());
    }
    std::sort(raw.begin(), raw.end(),
              [](const detail::Segment& x, const detail::Segment& y) {
                  return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
              });

    std::vector<detail::Segment> merged;
    for (auto& seg : raw) {
        if (merged.empty()) {
            merged.push_back(std::move(seg));
            continue;
        }
        detail::Segment& cur = merged.back();
        if (seg.lo < cur.hi) {
            if (seg.hi > cur.hi) cur.hi = seg.hi;  // overlap
        } else if (seg.lo == cur.hi && covered(reduce(seg.lo))) {
            if (seg.hi > cur.hi) cur.hi = seg.hi;  // joined through an interior point
        } else if (seg.lo == cur.hi && seg.hi == cur.hi) {
            // duplicate endpoint, nothing to add
        } else {
            merged.push_back(std::move(seg));
        }
    }
    bool zero_interior = covered(CirclePoint());
    return detail::from_segments(std::move(merged), zero_interior);
}

ArcUnion ArcUnion::checked(std::vector<Arc> arcs, bool full_circle) {
    if (full_circle) {
        if (!arcs.empty()) {
            throw ValidationError("full_circle_with_arcs",
                                  "full_circle is mutually exclusive with a nonempty arc list");
        }
        return full();
    }
    for (const Arc& a : arcs) validate_arc(a);
    for (std::size_t i = 0; i + 1 < arcs.size(); ++i) {
        if (!(arcs[i].start < arcs[i + 1].start)) {
            throw ValidationError("arcs_not_sorted", "arcs must be sorted by start point");
        }
    }
    ArcUnion candidate;
    candidate.arcs_ = arcs;
    ArcUnion canonical = from_arcs(std::move(arcs));
    if (!(canonical == candidate)) {
        throw ValidationError("arcs_not_canonical",
                              "arcs must be pairwise disjoint connected components");
    }
    return canonical;
}

ArcUnion open_ball(const CirclePoint& c, const Rational& r) {
    if (r.sign() <= 0) {
        throw ValidationError("nonpositive_radius", "open_ball radius must be positive");
    }
    const Rational half(1, 2);
    if (r > half) return ArcUnion::full();
    if (r == half) return ArcUnion::single({antipode(c), one()});
    return ArcUnion::single({c - r, r + r});
}

ArcUnion intersect(const ArcUnion& a, const ArcUnion& b) {
    if (a.is_full()) return b;
    if (b.is_full()) return a;
    if (a.is_empty() || b.is_empty()) return ArcUnion::empty();

    auto va = detail::to_segments(a);
    auto vb = detail::to_segments(b);

    std::vector<detail::Segment> out;
    std::size_t i = 0, j = 0;
    while (i < va.segments.size() && j < vb.segments.size()) {
        const auto& x = va.segments[i];
        const auto& y = vb.segments[j];
        const Rational& lo = max(x.lo, y.lo);
        const Rational& hi = min(x.hi, y.hi);
        if (lo < hi) out.push_back({lo, hi});
        if (x.hi < y.hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return detail::from_segments(std::move(out), va.zero_interior && vb.zero_interior);
}

ArcUnion translate(const ArcUnion& a, const CirclePoint& t) {
    if (a.is_full() || a.is_empty()) return a;
    ArcUnion out;
    out.arcs_.reserve(a.arcs_.size());
    for (const Arc& arc : a.arcs_) {
        out.arcs_.push_back({arc.start + t.value(), arc.length});
    }
    // A rotation preserves cyclic order; restore start order with a rotate.
    auto min_it = std::min_element(out.arcs_.begin(), out.arcs_.end(),
                                   [](const Arc& x, const Arc& y) { return x.start < y.start; });
    std::rotate(out.arcs_.begin(), min_it, out.arcs_.end());
    return out;
}

ArcUnion complement_interior(const ArcUnion& a) {
    if (a.is_full()) return ArcUnion::empty();
    if (a.is_empty()) return ArcUnion::full();

    std::vector<Arc> gaps;
    const auto& arcs = a.arcs_;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& cur = arcs[i];
        const Arc& nxt = arcs[(i + 1) % arcs.size()];
        CirclePoint gap_start = cur.end();
        Rational gap_len = arcs.size() == 1 ? one() - cur.length
                                            : (nxt.start.value() - gap_start.value()).mod1();
        if (gap_len.sign() > 0) gaps.push_back({gap_start, gap_len});
    }
    std::sort(gaps.begin(), gaps.end(),
              [](const Arc& x, const Arc& y) { return x.start < y.start; });
    ArcUnion out;
    out.arcs_ = std::move(gaps);
    return out;
}

bool is_subset(const ArcUnion& inner, const ArcUnion& outer) {
    return intersect(inner, outer) == inner;
}

}  // namespace torus
