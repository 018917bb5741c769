#pragma once

#include <cstdint>
#include <mutex>
#include <string>

#include "torus/sepgraph.hpp"

namespace torus {

struct WitnessEntry {
    std::size_t i, j;   // vertex indices, i < j
    long least_index;
    Rational dist;
};

enum class SearchMethod { greedy, exact, external };

const char* to_string(SearchMethod m);

struct SeparatedSetReport {
    std::vector<CirclePoint> points;
    long n = 0;
    Rational eps;
    bool certified = false;
    std::size_t size = 0;
    SearchMethod method = SearchMethod::external;
    // True only when an exact search completed within budget, proving the
    // size maximal over the candidate set.
    bool maximal = false;
    bool witnesses_stored = false;
    std::vector<WitnessEntry> witnesses;
};

// Verifies every pair and assembles the report (method = external).
SeparatedSetReport is_separated(const PLCircleMap& map, const std::vector<CirclePoint>& points,
                                long n, const Rational& eps, const SepScanOptions& options = {});

// Order-respecting greedy scan: keeps a candidate iff it is separated from
// every kept point. Certified by construction, deterministic given order.
SeparatedSetReport greedy_max_separated(const PLCircleMap& map,
                                        const std::vector<CirclePoint>& candidates, long n,
                                        const Rational& eps,
                                        ExecPolicy policy = ExecPolicy::parallel);

// Maximum clique of the Separated relation by branch and bound with greedy
// coloring bounds. Ties between maximum cliques break to the
// lexicographically smallest vertex index set. If the node budget runs out
// the best clique found so far is returned with maximal = false.
inline constexpr std::int64_t kDefaultNodeBudget = 10'000'000;

SeparatedSetReport max_separated_exact(const SeparationGraph& graph,
                                       std::int64_t node_budget = kDefaultNodeBudget);

// Packing bound floor(1 / mu(B_n(0, eps/2))) on separated-set size. Exact
// only for xp maps with p a power of 6 and eps = 1/3; anything else is
// rejected as UnsupportedParameters.
mpz_class packing_upper_bound(const PLCircleMap& map, long n, const Rational& eps);

// Global monitor for the empirical bound: every certified (n, 1/3)-separated
// set this artifact produces should have size <= 3^n. A violation is a
// reportable event of high interest, never a silent failure; it is recorded
// here and echoed to stderr.
struct BoundEvent {
    long n;
    Rational eps;
    std::size_t size;
    std::string context;
};

class BoundMonitor {
public:
    static BoundMonitor& instance();

    void record_certified(long n, const Rational& eps, std::size_t size,
                          const std::string& context);
    std::vector<BoundEvent> events() const;
    void clear();

private:
    mutable std::mutex mutex_;
    std::vector<BoundEvent> events_;
};

}  // namespace torus
