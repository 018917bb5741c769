#include <doctest.h>

#include "test_support.hpp"
#include "torus/plmap.hpp"

using namespace torus;
using namespace torus::testing;

TEST_CASE("xp map construction and evaluation") {
    PLCircleMap f2 = PLCircleMap::times_p(2);
    CHECK(f2.apply(pt(1, 4)) == pt(1, 2));
    CHECK(f2.degree() == 2);
    CHECK(f2.is_times_p());
    CHECK(f2.times_p_value() == 2);

    PLCircleMap f6 = PLCircleMap::times_p(6);
    CHECK(f6.apply(pt(1, 6)) == pt(0));

    PLCircleMap id = PLCircleMap::times_p(1);
    SplitMix64 rng(3);
    for (int k = 0; k < 20; ++k) {
        CirclePoint x = random_point(rng, 100);
        CHECK(id.apply(x) == x);
    }

    CHECK_THROWS_AS(PLCircleMap::times_p(0), ValidationError);
}

TEST_CASE("general PL lifts") {
    PLCircleMap id = PLCircleMap::from_breakpoints({{rat(0), rat(0)}, {rat(1), rat(1)}});
    CHECK(id.degree() == 1);
    CHECK(id.apply(pt(2, 7)) == pt(2, 7));

    PLCircleMap constant =
        PLCircleMap::from_breakpoints({{rat(0), rat(1, 3)}, {rat(1), rat(1, 3)}});
    CHECK(constant.degree() == 0);
    CHECK(constant.has_constant_piece());
    CHECK(constant.apply(pt(9, 10)) == pt(1, 3));

    PLCircleMap tent = PLCircleMap::from_breakpoints(
        {{rat(0), rat(0)}, {rat(1, 2), rat(1)}, {rat(1), rat(1)}});
    CHECK(tent.degree() == 1);
    CHECK(tent.apply(pt(1, 4)) == pt(1, 2));

    // distinct validation failures
    CHECK_THROWS_WITH_AS(
        (void)PLCircleMap::from_breakpoints({{rat(0), rat(0)}, {rat(1, 2), rat(1)}}),
        doctest::Contains("t=1"), ValidationError);
    CHECK_THROWS_AS(
        (void)PLCircleMap::from_breakpoints(
            {{rat(0), rat(0)}, {rat(1, 2), rat(1)}, {rat(1, 3), rat(2)}, {rat(1), rat(2)}}),
        ValidationError);
    CHECK_THROWS_AS(
        (void)PLCircleMap::from_breakpoints({{rat(0), rat(0)}, {rat(1), rat(1, 2)}}),
        ValidationError);
}

TEST_CASE("orbits") {
    PLCircleMap f2 = PLCircleMap::times_p(2);
    OrbitSegment orbit = iterate(f2, pt(1, 8), 4);
    REQUIRE(orbit.points.size() == 4);
    CHECK(orbit.points[0] == pt(1, 8));
    CHECK(orbit.points[1] == pt(1, 4));
    CHECK(orbit.points[2] == pt(1, 2));
    CHECK(orbit.points[3] == pt(0));

    PLCircleMap f6 = PLCircleMap::times_p(6);
    OrbitSegment o6 = iterate(f6, pt(1, 6), 2);
    CHECK(o6.points[1] == pt(0));

    PLCircleMap id = PLCircleMap::times_p(1);
    OrbitSegment oid = iterate(id, pt(3, 7), 3);
    CHECK(oid.points == std::vector<CirclePoint>{pt(3, 7), pt(3, 7), pt(3, 7)});

    CHECK_THROWS_AS(iterate(f2, pt(0), 0), ValidationError);
}

TEST_CASE("preimage of a ball under x6 splits into six arcs") {
    PLCircleMap f6 = PLCircleMap::times_p(6);
    ArcUnion ball = open_ball(CirclePoint(), rat(1, 6));  // (-1/6, 1/6)
    ArcUnion pre = preimage(f6, ball);
    REQUIRE(pre.arcs().size() == 6);
    CHECK(pre.measure() == rat(1, 3));
    for (long k = 0; k < 6; ++k) {
        // ((k - 1/6)/6, (k + 1/6)/6)
        ArcUnion expected = ArcUnion::single({reduce(rat(6 * k - 1, 36)), rat(1, 18)});
        CHECK(is_subset(expected, pre));
    }
}

TEST_CASE("preimage identities") {
    PLCircleMap f2 = PLCircleMap::times_p(2);
    CHECK(preimage(f2, ArcUnion::full()).is_full());
    CHECK(preimage(f2, ArcUnion::empty()).is_empty());

    PLCircleMap id = PLCircleMap::times_p(1);
    SplitMix64 rng(5);
    for (int k = 0; k < 40; ++k) {
        ArcUnion a = random_arc_union(rng);
        CHECK(preimage(id, a) == a);
    }
}

TEST_CASE("preimage semantics on random points and maps") {
    SplitMix64 rng(17);
    std::vector<PLCircleMap> maps;
    maps.push_back(PLCircleMap::times_p(2));
    maps.push_back(PLCircleMap::times_p(6));
    maps.push_back(PLCircleMap::from_breakpoints(
        {{rat(0), rat(0)}, {rat(1, 2), rat(1)}, {rat(1), rat(1)}}));  // tent-like
    maps.push_back(PLCircleMap::from_breakpoints(
        {{rat(0), rat(1, 3)}, {rat(1, 4), rat(-1)}, {rat(2, 3), rat(2)}, {rat(1), rat(4, 3)}}));

    for (const auto& map : maps) {
        for (int k = 0; k < 40; ++k) {
            ArcUnion a = random_arc_union(rng);
            ArcUnion pre;
            try {
                pre = preimage(map, a);
            } catch (const UnsupportedDegenerate&) {
                continue;  // constant piece mapping into a; nothing to check
            }
            for (int j = 0; j < 25; ++j) {
                CirclePoint x = random_point(rng, 977);
                CHECK(pre.contains(x) == a.contains(map.apply(x)));
            }
            // breakpoints themselves are the delicate spots
            for (const auto& bp : map.breakpoints()) {
                CirclePoint x = reduce(bp.t);
                CHECK(pre.contains(x) == a.contains(map.apply(x)));
            }
        }
    }
}

TEST_CASE("constant pieces are degenerate only when they hit the target") {
    PLCircleMap plateau = PLCircleMap::from_breakpoints(
        {{rat(0), rat(0)}, {rat(1, 4), rat(1, 2)}, {rat(1, 2), rat(1, 2)}, {rat(1), rat(1)}});
    ArcUnion hits = open_ball(pt(1, 2), rat(1, 10));
    CHECK_THROWS_AS(preimage(plateau, hits), UnsupportedDegenerate);

    ArcUnion misses = open_ball(pt(0), rat(1, 10));
    ArcUnion pre = preimage(plateau, misses);
    CHECK_FALSE(pre.is_empty());
    SplitMix64 rng(23);
    for (int j = 0; j < 50; ++j) {
        CirclePoint x = random_point(rng, 499);
        CHECK(pre.contains(x) == misses.contains(plateau.apply(x)));
    }
}

TEST_CASE("Bowen distance examples") {
    PLCircleMap f2 = PLCircleMap::times_p(2);
    CHECK(bowen_dist(f2, pt(0), pt(1, 4), 2) == rat(1, 2));
    CHECK(bowen_dist(f2, pt(0), pt(1, 8), 2) == rat(1, 4));
    CHECK(bowen_dist(f2, pt(3, 7), pt(3, 7), 5) == rat(0));
}

TEST_CASE("Bowen distance properties") {
    PLCircleMap f2 = PLCircleMap::times_p(2);
    SplitMix64 rng(29);
    for (int k = 0; k < 120; ++k) {
        CirclePoint x = random_point(rng, 200);
        CirclePoint y = random_point(rng, 200);
        CirclePoint z = random_point(rng, 200);
        CHECK(bowen_dist(f2, x, y, 1) == circle_dist(x, y));
        Rational d3 = bowen_dist(f2, x, y, 3);
        CHECK(bowen_dist(f2, x, y, 2) <= d3);
        CHECK(d3 <= bowen_dist(f2, x, y, 4));
        CHECK(d3 == bowen_dist(f2, y, x, 3));
        CHECK(bowen_dist(f2, x, z, 3) <= d3 + bowen_dist(f2, y, z, 3));
        CHECK((d3.is_zero()) == (x == y));
    }
}

TEST_CASE("Bowen ball base case is the plain ball") {
    for (long p : {1L, 2L, 5L, 6L}) {
        ArcUnion ball = bowen_ball(PLCircleMap::times_p(p), CirclePoint(), 1, rat(1, 6));
        REQUIRE(ball.arcs().size() == 1);
        CHECK(ball.arcs()[0].start == pt(5, 6));
        CHECK(ball.arcs()[0].length == rat(1, 3));
    }
}

TEST_CASE("two-step Bowen ball for x6 at eps = 1/6") {
    PLCircleMap f6 = PLCircleMap::times_p(6);
    ArcUnion ball = bowen_ball(f6, CirclePoint(), 2, rat(1, 6));
    ArcUnion expected = ArcUnion::from_arcs({
        {pt(35, 36), rat(1, 18)},  // (-1/36, 1/36)
        {pt(5, 36), rat(1, 36)},   // (5/36, 1/6)
        {pt(5, 6), rat(1, 36)},    // (-1/6, -5/36)
    });
    CHECK(ball == expected);
    CHECK(ball.measure() == rat(1, 9));

    // translation equivariance at x = 1/2
    ArcUnion shifted = bowen_ball(f6, pt(1, 2), 2, rat(1, 6));
    CHECK(shifted == translate(ball, pt(1, 2)));
}

TEST_CASE("Bowen ball membership matches the Bowen metric") {
    SplitMix64 rng(31);
    std::vector<PLCircleMap> maps;
    maps.push_back(PLCircleMap::times_p(2));
    maps.push_back(PLCircleMap::times_p(6));
    maps.push_back(PLCircleMap::from_breakpoints(
        {{rat(0), rat(0)}, {rat(1, 3), rat(3, 2)}, {rat(1), rat(2)}}));

    for (const auto& map : maps) {
        for (int k = 0; k < 12; ++k) {
            CirclePoint x = random_point(rng, 60);
            long n = 1 + static_cast<long>(rng.below(4));
            Rational eps(1, static_cast<long>(2 + rng.below(8)));
            ArcUnion ball = bowen_ball(map, x, n, eps);
            CHECK(ball.contains(x));
            for (int j = 0; j < 30; ++j) {
                CirclePoint y = random_point(rng, 509);
                bool inside = ball.contains(y);
                bool close = x == y || bowen_dist(map, x, y, n) < eps;
                CHECK(inside == close);
            }
        }
    }
}

TEST_CASE("Bowen balls nest as n grows") {
    SplitMix64 rng(37);
    PLCircleMap f6 = PLCircleMap::times_p(6);
    for (int k = 0; k < 10; ++k) {
        CirclePoint x = random_point(rng, 40);
        ArcUnion prev = bowen_ball(f6, x, 1, rat(1, 6));
        for (long n = 2; n <= 4; ++n) {
            ArcUnion cur = bowen_ball(f6, x, n, rat(1, 6));
            CHECK(is_subset(cur, prev));
            prev = cur;
        }
    }
}

TEST_CASE("Bowen ball translation equivariance for xp maps") {
    SplitMix64 rng(41);
    for (long p : {2L, 6L}) {
        PLCircleMap map = PLCircleMap::times_p(p);
        ArcUnion centered = bowen_ball(map, CirclePoint(), 3, rat(1, 5));
        for (int k = 0; k < 10; ++k) {
            CirclePoint x = random_point(rng, 120);
            CHECK(bowen_ball(map, x, 3, rat(1, 5)) == translate(centered, x));
        }
    }
}

TEST_CASE("x6 Bowen ball measures follow the one-third law") {
    PLCircleMap f6 = PLCircleMap::times_p(6);
    Rational expected(1, 3);
    for (long n = 1; n <= 5; ++n) {
        CHECK(bowen_ball(f6, CirclePoint(), n, rat(1, 6)).measure() == expected);
        expected = expected / rat(3);
    }
    PLCircleMap f36 = PLCircleMap::times_p(36);
    CHECK(bowen_ball(f36, CirclePoint(), 2, rat(1, 6)).measure() == rat(1, 9));
}
