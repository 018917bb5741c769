#include "torus/sepgraph.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torus {

namespace {

void require_distinct(const std::vector<CirclePoint>& points) {
    std::vector<const CirclePoint*> sorted;
    sorted.reserve(points.size());
    for (const auto& p : points) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(),
              [](const CirclePoint* a, const CirclePoint* b) { return *a < *b; });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (*sorted[i] == *sorted[i + 1]) {
            throw ValidationError("duplicate_points",
                                  "candidate points must be pairwise distinct; " +
                                      sorted[i]->str() + " repeats");
        }
    }
}

}  // namespace

namespace detail {

OrbitTable build_orbit_table(const PLCircleMap& map, const std::vector<CirclePoint>& points,
                             long n) {
    OrbitTable table;
    table.count = points.size();
    table.steps = n;
    table.values.resize(static_cast<std::size_t>(n) * points.size());
    for (std::size_t i = 0; i < points.size(); ++i) table.values[i] = points[i];
    for (long t = 1; t < n; ++t) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            table.values[static_cast<std::size_t>(t) * table.count + i] =
                map.apply(table.at(t - 1, i));
        }
    }
    return table;
}

ScaledOrbit scale_orbit(const OrbitTable& table, const Rational& eps) {
    ScaledOrbit scaled;
    scaled.count = table.count;

    // 2^62 keeps every product below 2^126 with an epsilon denominator
    // bounded by 2^31.
    static const mpz_class kDenomLimit = mpz_class(1) << 62;
    static const mpz_class kEpsLimit = mpz_class(1) << 31;
    if (eps.sign() < 0 || eps.num() > kEpsLimit || eps.den() > kEpsLimit) {
        return scaled;
    }

    mpz_class lcm = 1;
    for (const CirclePoint& p : table.values) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.value().den().get_mpz_t());
        if (lcm > kDenomLimit) return scaled;
    }

    scaled.denom = mpz_get_ui(lcm.get_mpz_t());
    scaled.eps_num = mpz_get_ui(eps.num().get_mpz_t());
    scaled.eps_den = mpz_get_ui(eps.den().get_mpz_t());
    scaled.values.resize(table.values.size());
    mpz_class tmp;
    for (std::size_t k = 0; k < table.values.size(); ++k) {
        const Rational& v = table.values[k].value();
        mpz_divexact(tmp.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
        tmp *= v.num();
        scaled.values[k] = mpz_get_ui(tmp.get_mpz_t());
    }
    scaled.usable = true;
    return scaled;
}

std::int32_t ScaledOrbit::least_index(std::size_t i, std::size_t j, long n) const {
    using u128 = unsigned __int128;
    const u128 lo = static_cast<u128>(eps_num) * denom;               // eps * L
    const u128 hi = static_cast<u128>(eps_den - eps_num) * denom;     // (1 - eps) * L
    if (eps_num >= eps_den) return -1;                                // eps >= 1 never separates
    for (long t = 0; t < n; ++t) {
        const std::uint64_t* row = values.data() + static_cast<std::size_t>(t) * count;
        std::uint64_t a = row[i], b = row[j];
        std::uint64_t diff = a > b ? a - b : b - a;
        u128 d = static_cast<u128>(diff) * eps_den;
        if (d > lo && d < hi) return static_cast<std::int32_t>(t);
    }
    return -1;
}

}  // namespace detail

namespace {

// Generic exact path over the orbit table.
std::int32_t least_index_generic(const detail::OrbitTable& table, const Rational& eps,
                                 std::size_t i, std::size_t j) {
    for (long t = 0; t < table.steps; ++t) {
        if (circle_dist_gt(table.at(t, i), table.at(t, j), eps)) {
            return static_cast<std::int32_t>(t);
        }
    }
    return -1;
}

}  // namespace

std::optional<long> least_sep_index(const PLCircleMap& map, const CirclePoint& x,
                                    const CirclePoint& y, long n, const Rational& eps) {
    if (x == y) throw ValidationError("equal_points", "least_sep_index requires x != y");
    if (n < 1) throw ValidationError("bad_bowen_steps", "least_sep_index requires n >= 1");
    CirclePoint a = x, b = y;
    for (long t = 0; t < n; ++t) {
        if (t > 0) {
            a = map.apply(a);
            b = map.apply(b);
        }
        if (circle_dist_gt(a, b, eps)) return t;
    }
    return std::nullopt;
}

SeparationGraph::SeparationGraph(std::vector<CirclePoint> vertices, long n, Rational eps,
                                 std::vector<std::int32_t> least, std::vector<Rational> witnesses)
    : vertices_(std::move(vertices)),
      n_(n),
      eps_(std::move(eps)),
      least_(std::move(least)),
      witnesses_(std::move(witnesses)) {
    assert(least_.size() == vertices_.size() * (vertices_.size() - 1) / 2);
    assert(witnesses_.empty() || witnesses_.size() == least_.size());
}

std::size_t SeparationGraph::pair_rank(std::size_t i, std::size_t j) const {
    assert(i != j && i < vertices_.size() && j < vertices_.size());
    if (i > j) std::swap(i, j);
    std::size_t m = vertices_.size();
    return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

std::optional<long> SeparationGraph::least_index(std::size_t i, std::size_t j) const {
    std::int32_t v = least_raw(i, j);
    if (v < 0) return std::nullopt;
    return static_cast<long>(v);
}

const Rational& SeparationGraph::witness_dist(std::size_t i, std::size_t j) const {
    assert(has_witnesses());
    return witnesses_[pair_rank(i, j)];
}

bool SeparationGraph::all_separated() const {
    return std::all_of(least_.begin(), least_.end(), [](std::int32_t v) { return v >= 0; });
}

SeparationGraph build_separation_graph(const PLCircleMap& map,
                                       const std::vector<CirclePoint>& points, long n,
                                       const Rational& eps, const SepScanOptions& options) {
    if (n < 1) throw ValidationError("bad_bowen_steps", "separation graph requires n >= 1");
    require_distinct(points);

    const std::size_t m = points.size();
    const std::size_t pairs = m * (m - 1) / 2;
    auto table = detail::build_orbit_table(map, points, n);
    auto scaled = detail::scale_orbit(table, eps);

    std::vector<std::int32_t> least(pairs, -1);
    std::vector<Rational> witnesses;
    if (options.store_witnesses) witnesses.resize(pairs);

    auto scan_row = [&](std::size_t i) {
        std::size_t rank = i * (2 * m - i - 1) / 2;
        for (std::size_t j = i + 1; j < m; ++j, ++rank) {
            std::int32_t t = scaled.usable ? scaled.least_index(i, j, n)
                                           : least_index_generic(table, eps, i, j);
            least[rank] = t;
            if (t >= 0 && options.store_witnesses) {
                witnesses[rank] = circle_dist(table.at(t, i), table.at(t, j));
            }
        }
    };

    if (options.policy == ExecPolicy::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
            scan_row(static_cast<std::size_t>(i));
        }
    } else {
        for (std::size_t i = 0; i < m; ++i) scan_row(i);
    }

    return SeparationGraph(points, n, eps, std::move(least), std::move(witnesses));
}

CertifyResult certify_separated(const PLCircleMap& map, const std::vector<CirclePoint>& points,
                                long n, const Rational& eps, ExecPolicy policy) {
    if (n < 1) throw ValidationError("bad_bowen_steps", "certification requires n >= 1");
    require_distinct(points);

    const std::size_t m = points.size();
    CertifyResult result;
    result.pair_count = m * (m - 1) / 2;

    auto table = detail::build_orbit_table(map, points, n);
    auto scaled = detail::scale_orbit(table, eps);

    std::atomic<std::int64_t> first_violation{-1};
    auto note_violation = [&](std::int64_t rank) {
        std::int64_t seen = first_violation.load(std::memory_order_relaxed);
        while ((seen == -1 || rank < seen) &&
               !first_violation.compare_exchange_weak(seen, rank, std::memory_order_relaxed)) {
        }
    };

    auto scan_row = [&](std::size_t i) -> bool {
        std::size_t rank = i * (2 * m - i - 1) / 2;
        for (std::size_t j = i + 1; j < m; ++j, ++rank) {
            std::int32_t t = scaled.usable ? scaled.least_index(i, j, n)
                                           : least_index_generic(table, eps, i, j);
            if (t < 0) {
                note_violation(static_cast<std::int64_t>(rank));
                return false;
            }
        }
        return true;
    };

    if (policy == ExecPolicy::parallel) {
        // Rows note their first failing rank; ranks grow with the row index,
        // so the atomic minimum is the global first violation regardless of
        // scheduling.
        std::atomic<bool> ok{true};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
            if (!scan_row(static_cast<std::size_t>(i))) ok.store(false, std::memory_order_relaxed);
        }
        result.certified = ok.load();
    } else {
        bool ok = true;
        for (std::size_t i = 0; i < m; ++i) {
            if (!scan_row(i)) {
                ok = false;
                break;  // ranks are scanned in order; the first hit is minimal
            }
        }
        result.certified = ok;
    }
    result.first_violation = first_violation.load();
    return result;
}

}  // namespace torus
