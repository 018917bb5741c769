#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "torus/exec.hpp"
#include "torus/plmap.hpp"

namespace torus {

// Least iterate index i < n with d(f^i x, f^i y) > eps (strict), or nullopt.
std::optional<long> least_sep_index(const PLCircleMap& map, const CirclePoint& x,
                                    const CirclePoint& y, long n, const Rational& eps);

// Complete pair table over a candidate point set: for each unordered pair
// either NotSeparated or the least separating index plus the witness
// distance at that index.
class SeparationGraph {
public:
    SeparationGraph(std::vector<CirclePoint> vertices, long n, Rational eps,
                    std::vector<std::int32_t> least, std::vector<Rational> witnesses);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t pair_count() const noexcept { return least_.size(); }
    const std::vector<CirclePoint>& vertices() const noexcept { return vertices_; }
    long n() const noexcept { return n_; }
    const Rational& eps() const noexcept { return eps_; }

    std::size_t pair_rank(std::size_t i, std::size_t j) const;
    bool separated(std::size_t i, std::size_t j) const { return least_raw(i, j) >= 0; }
    std::optional<long> least_index(std::size_t i, std::size_t j) const;
    bool has_witnesses() const noexcept { return !witnesses_.empty(); }
    const Rational& witness_dist(std::size_t i, std::size_t j) const;

    bool all_separated() const;

private:
    std::int32_t least_raw(std::size_t i, std::size_t j) const { return least_[pair_rank(i, j)]; }

    std::vector<CirclePoint> vertices_;
    long n_;
    Rational eps_;
    std::vector<std::int32_t> least_;   // flat upper triangle; -1 = NotSeparated
    std::vector<Rational> witnesses_;   // parallel to least_, may be empty
};

struct SepScanOptions {
    ExecPolicy policy = ExecPolicy::parallel;
    bool store_witnesses = true;
};

// Rejects duplicate points. Deterministic for any thread count.
SeparationGraph build_separation_graph(const PLCircleMap& map,
                                       const std::vector<CirclePoint>& points, long n,
                                       const Rational& eps, const SepScanOptions& options = {});

// Streaming all-pairs certification without materializing the table; the
// only memory is the orbit table. first_violation is the smallest flat pair
// rank that fails, or -1.
struct CertifyResult {
    bool certified = false;
    std::int64_t first_violation = -1;
    std::size_t pair_count = 0;
};

CertifyResult certify_separated(const PLCircleMap& map, const std::vector<CirclePoint>& points,
                                long n, const Rational& eps,
                                ExecPolicy policy = ExecPolicy::parallel);

namespace detail {

// Step-major orbit table: entry(t, i) = f^t(points[i]).
struct OrbitTable {
    std::vector<CirclePoint> values;  // t * count + i
    std::size_t count = 0;
    long steps = 0;

    const CirclePoint& at(long t, std::size_t i) const {
        return values[static_cast<std::size_t>(t) * count + i];
    }
};

OrbitTable build_orbit_table(const PLCircleMap& map, const std::vector<CirclePoint>& points,
                             long n);

// Exact integer fast path: when every orbit value can be written over one
// common denominator L that fits comfortably in 64 bits, pair scans reduce
// to integer compares (d > eps iff eps*L < |a-b| < (1-eps)*L, all exact).
struct ScaledOrbit {
    bool usable = false;
    std::uint64_t denom = 0;          // common denominator L
    std::uint64_t eps_num = 0, eps_den = 0;
    std::vector<std::uint64_t> values;  // t * count + i, numerators over L
    std::size_t count = 0;

    // Least separating index for the pair (i, j), or -1.
    std::int32_t least_index(std::size_t i, std::size_t j, long n) const;
};

ScaledOrbit scale_orbit(const OrbitTable& table, const Rational& eps);

}  // namespace detail

}  // namespace torus
