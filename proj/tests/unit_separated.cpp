#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "torus/separated.hpp"

using namespace torus;
using namespace torus::testing;

namespace {

// Independent oracle: maximum separated subset by exhaustive enumeration of
// all subsets, lexicographically smallest among the maximum ones.
std::vector<int> brute_force_max_subset(const SeparationGraph& graph) {
    const std::size_t m = graph.vertex_count();
    REQUIRE(m <= 20);
    std::vector<std::uint32_t> adj(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (graph.separated(i, j)) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
        }
    }
    std::uint32_t best = 0;
    int best_size = 0;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < best_size) continue;
        bool clique = true;
        for (std::uint32_t bits = mask; bits && clique;) {
            int v = __builtin_ctz(bits);
            bits &= bits - 1;
            clique = (mask & ~(adj[static_cast<std::size_t>(v)] | (1u << v))) == 0;
        }
        if (!clique) continue;
        if (size > best_size) {
            best = mask;
            best_size = size;
        } else if (size == best_size) {
            std::uint32_t diff = mask ^ best;
            if (diff && (mask & (diff & -diff))) best = mask;  // smaller lowest differing vertex
        }
    }
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(m); ++v) {
        if (best & (1u << v)) out.push_back(v);
    }
    return out;
}

std::vector<int> report_indices(const SeparatedSetReport& report,
                                const std::vector<CirclePoint>& candidates) {
    std::vector<int> out;
    for (const auto& p : report.points) {
        auto it = std::find(candidates.begin(), candidates.end(), p);
        REQUIRE(it != candidates.end());
        out.push_back(static_cast<int>(it - candidates.begin()));
    }
    return out;
}

}  // namespace

TEST_CASE("least separating index examples") {
    PLCircleMap f2 = PLCircleMap::times_p(2);
    CHECK(least_sep_index(f2, pt(0), pt(1, 2), 1, rat(1, 3)) == 0);
    CHECK(least_sep_index(f2, pt(0), pt(1, 4), 2, rat(1, 3)) == 1);
    CHECK(least_sep_index(f2, pt(0), pt(1, 8), 2, rat(1, 3)) == std::nullopt);
    CHECK_THROWS_AS(least_sep_index(f2, pt(1, 3), pt(1, 3), 2, rat(1, 3)), ValidationError);
}

TEST_CASE("separation graph over A_2 under doubling") {
    PLCircleMap f2 = PLCircleMap::times_p(2);
    auto points = grid(4);  // {0, 1/4, 1/2, 3/4}
    SeparationGraph graph = build_separation_graph(f2, points, 2, rat(1, 3));
    CHECK(graph.all_separated());
    CHECK(graph.least_index(0, 2) == 0);
    CHECK(graph.least_index(1, 3) == 0);
    CHECK(graph.least_index(0, 1) == 1);
    CHECK(graph.least_index(0, 3) == 1);
    CHECK(graph.least_index(1, 2) == 1);
    CHECK(graph.least_index(2, 3) == 1);
    CHECK(graph.witness_dist(0, 2) == rat(1, 2));
    CHECK(graph.witness_dist(0, 1) == rat(1, 2));

    CHECK_THROWS_AS(build_separation_graph(f2, {pt(0), pt(1, 2), pt(0)}, 2, rat(1, 3)),
                    ValidationError);
}

TEST_CASE("witness minimality on random pairs") {
    SplitMix64 rng(57);
    PLCircleMap f6 = PLCircleMap::times_p(6);
    auto points = grid(30);
    SeparationGraph graph = build_separation_graph(f6, points, 3, rat(1, 3));
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t i = rng.below(points.size());
        std::size_t j = rng.below(points.size());
        if (i == j) continue;
        auto least = graph.least_index(i, j);
        OrbitSegment oi = iterate(f6, points[i], 3);
        OrbitSegment oj = iterate(f6, points[j], 3);
        if (least) {
            Rational w = graph.witness_dist(i, j);
            CHECK(w == circle_dist(oi.points[static_cast<std::size_t>(*least)],
                                   oj.points[static_cast<std::size_t>(*least)]));
            CHECK(w > rat(1, 3));
            for (long t = 0; t < *least; ++t) {
                CHECK(circle_dist(oi.points[static_cast<std::size_t>(t)],
                                  oj.points[static_cast<std::size_t>(t)]) <= rat(1, 3));
            }
        } else {
            CHECK(bowen_dist(f6, points[i], points[j], 3) <= rat(1, 3));
        }
    }
}

TEST_CASE("serial and parallel kernels agree; so do integer and generic paths") {
    PLCircleMap f2 = PLCircleMap::times_p(2);
    auto points = grid(64);
    // 1/3 stays on the integer fast path; an ugly eps denominator beyond
    // 2^31 forces the generic mpq path.
    Rational ugly_eps = rat(1, 3) + Rational(1, 3037000507L) * Rational(1, 3037000507L);

    for (const Rational& eps : {rat(1, 3), ugly_eps}) {
        SeparationGraph serial =
            build_separation_graph(f2, points, 5, eps, {ExecPolicy::serial, true});
        SeparationGraph parallel =
            build_separation_graph(f2, points, 5, eps, {ExecPolicy::parallel, true});
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                CHECK(serial.least_index(i, j) == parallel.least_index(i, j));
                if (serial.least_index(i, j)) {
                    CHECK(serial.witness_dist(i, j) == parallel.witness_dist(i, j));
                }
            }
        }
    }

    // fast path against the generic path on the same input
    SeparationGraph fast = build_separation_graph(f2, points, 5, rat(1, 3));
    SeparationGraph slow = build_separation_graph(f2, points, 5, ugly_eps);
    std::size_t diffs = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (fast.least_index(i, j) != slow.least_index(i, j)) ++diffs;
        }
    }
    // the two eps values straddle only distances exactly equal to 1/3 plus a
    // sliver; on the 1/64 grid no orbit distance falls in that sliver
    CHECK(diffs == 0);
}

TEST_CASE("is_separated certifies A_r and rejects near misses") {
    PLCircleMap f2 = PLCircleMap::times_p(2);
    for (long r = 1; r <= 8; ++r) {
        auto points = grid(1L << r);
        SeparatedSetReport report =
            is_separated(f2, points, r, rat(1, 3), {ExecPolicy::parallel, r <= 5});
        CHECK(report.certified);
        CHECK(report.size == static_cast<std::size_t>(1L << r));
        CHECK(report.method == SearchMethod::external);
    }

    SeparatedSetReport single = is_separated(f2, {pt(0)}, 3, rat(1, 3));
    CHECK(single.certified);

    SeparatedSetReport bad = is_separated(f2, {pt(0), pt(1, 8)}, 2, rat(1, 3));
    CHECK_FALSE(bad.certified);
}

TEST_CASE("ties at exactly eps are not separated") {
    PLCircleMap id = PLCircleMap::times_p(1);
    // d(0, 1/3) = 1/3 exactly: strict inequality fails
    SeparatedSetReport report = is_separated(id, {pt(0), pt(1, 3)}, 4, rat(1, 3));
    CHECK_FALSE(report.certified);
    CHECK(least_sep_index(id, pt(0), pt(1, 3), 4, rat(1, 3)) == std::nullopt);
}

TEST_CASE("greedy scan keeps the earliest compatible candidates") {
    PLCircleMap f2 = PLCircleMap::times_p(2);

    SeparatedSetReport all4 = greedy_max_separated(f2, grid(4), 2, rat(1, 3));
    CHECK(all4.certified);
    CHECK(all4.size == 4);
    CHECK(all4.method == SearchMethod::greedy);
    CHECK_FALSE(all4.maximal);

    SeparatedSetReport some = greedy_max_separated(f2, {pt(0), pt(1, 8), pt(1, 2)}, 2, rat(1, 3));
    CHECK(some.size == 2);
    CHECK(some.points == std::vector<CirclePoint>{pt(0), pt(1, 2)});

    SeparatedSetReport empty = greedy_max_separated(f2, {}, 2, rat(1, 3));
    CHECK(empty.certified);
    CHECK(empty.size == 0);
}

TEST_CASE("exact search on A_2") {
    PLCircleMap f2 = PLCircleMap::times_p(2);
    auto points = grid(4);

    SeparationGraph g2 = build_separation_graph(f2, points, 2, rat(1, 3));
    SeparatedSetReport n2 = max_separated_exact(g2);
    CHECK(n2.size == 4);
    CHECK(n2.maximal);
    CHECK(n2.certified);

    SeparationGraph g1 = build_separation_graph(f2, points, 1, rat(1, 3));
    SeparatedSetReport n1 = max_separated_exact(g1);
    CHECK(n1.size == 2);
    CHECK(n1.points == std::vector<CirclePoint>{pt(0), pt(1, 2)});  // lex over {0,2} vs {1,3}
}

TEST_CASE("exact search with no separated pairs returns a single vertex") {
    PLCircleMap id = PLCircleMap::times_p(1);
    std::vector<CirclePoint> tight = {pt(0), pt(1, 100), pt(2, 100), pt(3, 100), pt(4, 100)};
    SeparationGraph g = build_separation_graph(id, tight, 3, rat(1, 3));
    SeparatedSetReport report = max_separated_exact(g);
    CHECK(report.size == 1);
    CHECK(report.points == std::vector<CirclePoint>{pt(0)});
    CHECK(report.maximal);
}

TEST_CASE("exact search matches exhaustive enumeration on random candidates") {
    SplitMix64 rng(91);
    for (int trial = 0; trial < 40; ++trial) {
        long p = trial % 2 == 0 ? 2 : 6;
        PLCircleMap map = PLCircleMap::times_p(p);
        std::size_t count = 6 + rng.below(10);
        std::vector<CirclePoint> points;
        while (points.size() < count) {
            CirclePoint candidate = random_point(rng, 120);
            if (std::find(points.begin(), points.end(), candidate) == points.end()) {
                points.push_back(candidate);
            }
        }
        long n = 1 + static_cast<long>(rng.below(4));
        SeparationGraph graph = build_separation_graph(map, points, n, rat(1, 3));
        SeparatedSetReport exact = max_separated_exact(graph);
        std::vector<int> oracle = brute_force_max_subset(graph);
        CHECK(exact.size == oracle.size());
        CHECK(exact.maximal);
        CHECK(report_indices(exact, points) == oracle);

        SeparatedSetReport greedy = greedy_max_separated(map, points, n, rat(1, 3));
        CHECK(greedy.size <= exact.size);
    }
}

TEST_CASE("budget exhaustion degrades to best-found") {
    PLCircleMap f2 = PLCircleMap::times_p(2);
    auto points = grid(32);
    SeparationGraph graph = build_separation_graph(f2, points, 5, rat(1, 3));
    SeparatedSetReport pinched = max_separated_exact(graph, 3);
    CHECK_FALSE(pinched.maximal);
    CHECK(pinched.certified);
    CHECK(pinched.size >= 1);

    SeparatedSetReport free_run = max_separated_exact(graph);
    CHECK(free_run.maximal);
    CHECK(free_run.size >= pinched.size);
}

TEST_CASE("packing bound for powers of six") {
    CHECK(packing_upper_bound(PLCircleMap::times_p(6), 2, rat(1, 3)) == 9);
    CHECK(packing_upper_bound(PLCircleMap::times_p(6), 1, rat(1, 3)) == 3);
    CHECK(packing_upper_bound(PLCircleMap::times_p(36), 3, rat(1, 3)) == 27);

    CHECK_THROWS_AS(packing_upper_bound(PLCircleMap::times_p(5), 2, rat(1, 3)),
                    UnsupportedParameters);
    CHECK_THROWS_AS(packing_upper_bound(PLCircleMap::times_p(12), 2, rat(1, 3)),
                    UnsupportedParameters);
    CHECK_THROWS_AS(packing_upper_bound(PLCircleMap::times_p(6), 2, rat(1, 4)),
                    UnsupportedParameters);
    CHECK_THROWS_AS(
        packing_upper_bound(PLCircleMap::from_breakpoints(
                                {{rat(0), rat(0)}, {rat(1, 2), rat(1)}, {rat(1), rat(2)}}),
                            2, rat(1, 3)),
        UnsupportedParameters);
}

TEST_CASE("greedy size <= exact size <= packing bound at eps = 1/3") {
    PLCircleMap f6 = PLCircleMap::times_p(6);
    for (long n = 1; n <= 2; ++n) {
        auto candidates = grid(36);
        SeparatedSetReport greedy = greedy_max_separated(f6, candidates, n, rat(1, 3));
        SeparationGraph graph = build_separation_graph(f6, candidates, n, rat(1, 3));
        SeparatedSetReport exact = max_separated_exact(graph);
        mpz_class bound = packing_upper_bound(f6, n, rat(1, 3));
        CHECK(greedy.size <= exact.size);
        CHECK(mpz_cmp_ui(bound.get_mpz_t(), exact.size) >= 0);
    }
}

TEST_CASE("bound monitor flags fabricated oversized sets") {
    BoundMonitor::instance().clear();
    BoundMonitor::instance().record_certified(1, rat(1, 3), 4, "unit-test fabrication");
    auto events = BoundMonitor::instance().events();
    REQUIRE(events.size() == 1);
    CHECK(events[0].size == 4);
    CHECK(events[0].n == 1);

    BoundMonitor::instance().clear();
    BoundMonitor::instance().record_certified(2, rat(1, 3), 9, "within bound");
    BoundMonitor::instance().record_certified(5, rat(1, 4), 1000, "other eps ignored");
    CHECK(BoundMonitor::instance().events().empty());
}
