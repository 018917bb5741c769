#include "torus/separated.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>

namespace torus {

namespace {

void notify_monitor(const SeparatedSetReport& report, const std::string& context) {
    if (report.certified) {
        BoundMonitor::instance().record_certified(report.n, report.eps, report.size, context);
    }
}

std::vector<WitnessEntry> collect_witnesses(const SeparationGraph& graph) {
    std::vector<WitnessEntry> out;
    const std::size_t m = graph.vertex_count();
    out.reserve(graph.pair_count());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            auto idx = graph.least_index(i, j);
            if (idx) {
                out.push_back({i, j, *idx, graph.witness_dist(i, j)});
            }
        }
    }
    return out;
}

}  // namespace

const char* to_string(SearchMethod m) {
    switch (m) {
        case SearchMethod::greedy: return "greedy";
        case SearchMethod::exact: return "exact";
        case SearchMethod::external: return "external";
    }
    return "external";
}

SeparatedSetReport is_separated(const PLCircleMap& map, const std::vector<CirclePoint>& points,
                                long n, const Rational& eps, const SepScanOptions& options) {
    SeparatedSetReport report;
    report.points = points;
    report.n = n;
    report.eps = eps;
    report.size = points.size();
    report.method = SearchMethod::external;

    if (points.size() <= 1) {
        report.certified = true;  // no pairs
        report.witnesses_stored = options.store_witnesses;
        notify_monitor(report, "is_separated");
        return report;
    }

    if (options.store_witnesses) {
        SeparationGraph graph = build_separation_graph(map, points, n, eps, options);
        report.certified = graph.all_separated();
        report.witnesses_stored = true;
        report.witnesses = collect_witnesses(graph);
    } else {
        CertifyResult res = certify_separated(map, points, n, eps, options.policy);
        report.certified = res.certified;
    }
    notify_monitor(report, "is_separated");
    return report;
}

SeparatedSetReport greedy_max_separated(const PLCircleMap& map,
                                        const std::vector<CirclePoint>& candidates, long n,
                                        const Rational& eps, ExecPolicy policy) {
    if (n < 1) throw ValidationError("bad_bowen_steps", "greedy scan requires n >= 1");

    std::vector<CirclePoint> kept;
    if (!candidates.empty()) {
        auto table = detail::build_orbit_table(map, candidates, n);
        auto scaled = detail::scale_orbit(table, eps);
        std::vector<std::size_t> kept_idx;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            bool ok = true;
            for (std::size_t k : kept_idx) {
                if (table.at(0, k) == table.at(0, c)) {
                    ok = false;  // duplicate of a kept point
                    break;
                }
                bool separated = false;
                if (scaled.usable) {
                    separated = scaled.least_index(k, c, n) >= 0;
                } else {
                    for (long t = 0; t < n && !separated; ++t) {
                        separated = circle_dist_gt(table.at(t, k), table.at(t, c), eps);
                    }
                }
                if (!separated) {
                    ok = false;
                    break;
                }
            }
            if (ok) kept_idx.push_back(c);
        }
        kept.reserve(kept_idx.size());
        for (std::size_t k : kept_idx) kept.push_back(candidates[k]);
    }

    SeparatedSetReport report =
        is_separated(map, kept, n, eps, SepScanOptions{policy, true});
    report.method = SearchMethod::greedy;
    report.maximal = false;
    assert(report.certified);
    return report;
}

namespace {

// Fixed-width bitset helpers over vector<uint64_t> rows.
using Words = std::vector<std::uint64_t>;

int popcount_words(const Words& w) {
    int total = 0;
    for (std::uint64_t x : w) total += __builtin_popcountll(x);
    return total;
}

bool test_bit(const Words& w, std::size_t v) { return (w[v >> 6] >> (v & 63)) & 1; }
void set_bit(Words& w, std::size_t v) { w[v >> 6] |= std::uint64_t(1) << (v & 63); }
void clear_bit(Words& w, std::size_t v) { w[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }

struct CliqueSearch {
    std::size_t m, words;
    std::vector<Words> adj;
    std::int64_t budget;
    std::int64_t nodes = 0;
    bool budget_hit = false;
    std::vector<int> best;

    explicit CliqueSearch(const SeparationGraph& graph, std::int64_t node_budget)
        : m(graph.vertex_count()), words((m + 63) / 64), budget(node_budget) {
        adj.assign(m, Words(words, 0));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                if (graph.separated(i, j)) {
                    set_bit(adj[i], j);
                    set_bit(adj[j], i);
                }
            }
        }
    }

    bool tick() {
        if (budget_hit) return false;
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        return true;
    }

    // Greedy sequential coloring of the candidate set; fills `order` with
    // the candidates sorted by increasing color and returns per-vertex color
    // numbers (1-based) in `colors`, aligned with `order`.
    void color_sort(const Words& cand, std::vector<int>& order, std::vector<int>& colors) const {
        order.clear();
        colors.clear();
        Words uncolored = cand;
        int color = 0;
        while (popcount_words(uncolored) > 0) {
            ++color;
            Words avail = uncolored;
            for (std::size_t w = 0; w < words; ++w) {
                while (avail[w]) {
                    std::size_t v = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(avail[w]));
                    clear_bit(avail, v);
                    clear_bit(uncolored, v);
                    for (std::size_t ww = 0; ww < words; ++ww) avail[ww] &= ~adj[v][ww];
                    order.push_back(static_cast<int>(v));
                    colors.push_back(color);
                }
            }
        }
    }

    // Phase 1: maximum clique size.
    void expand(std::vector<int>& current, const Words& cand) {
        if (!tick()) return;
        std::vector<int> order, colors;
        color_sort(cand, order, colors);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (budget_hit) return;
            if (current.size() + static_cast<std::size_t>(colors[idx]) <= best.size()) return;
            int v = order[idx];
            current.push_back(v);
            Words next(words);
            for (std::size_t w = 0; w < words; ++w) next[w] = cand[w] & adj[static_cast<std::size_t>(v)][w];
            // Restrict to vertices not yet tried at this level.
            for (std::size_t k = idx; k < order.size(); ++k) clear_bit(next, static_cast<std::size_t>(order[k]));
            if (current.size() > best.size()) best = current;
            if (popcount_words(next) > 0) expand(current, next);
            current.pop_back();
        }
    }

    // Phase 2 primitive: does `cand` contain a clique of size >= want?
    bool exists_clique(const Words& cand, std::size_t want) {
        if (want == 0) return true;
        if (static_cast<std::size_t>(popcount_words(cand)) < want) return false;
        if (!tick()) return false;
        std::vector<int> order, colors;
        color_sort(cand, order, colors);
        if (static_cast<std::size_t>(colors.empty() ? 0 : colors.back()) < want) return false;
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (budget_hit) return false;
            if (static_cast<std::size_t>(colors[idx]) < want) return false;
            std::size_t v = static_cast<std::size_t>(order[idx]);
            if (want == 1) return true;
            Words next(words);
            for (std::size_t w = 0; w < words; ++w) next[w] = cand[w] & adj[v][w];
            for (std::size_t k = idx; k < order.size(); ++k) clear_bit(next, static_cast<std::size_t>(order[k]));
            if (exists_clique(next, want - 1)) return true;
        }
        return false;
    }

    // Phase 2: lexicographically smallest maximum clique of the proven size.
    std::vector<int> lexicographic_witness(std::size_t target) {
        std::vector<int> chosen;
        Words cand(words, 0);
        for (std::size_t v = 0; v < m; ++v) set_bit(cand, v);
        for (std::size_t v = 0; v < m && chosen.size() < target; ++v) {
            if (!test_bit(cand, v)) continue;
            Words next(words);
            for (std::size_t w = 0; w < words; ++w) next[w] = cand[w] & adj[v][w];
            for (std::size_t u = 0; u <= v; ++u) clear_bit(next, u);
            std::size_t need = target - chosen.size() - 1;
            if (exists_clique(next, need)) {
                chosen.push_back(static_cast<int>(v));
                cand = next;
            }
            if (budget_hit) break;
        }
        return chosen;
    }
};

}  // namespace

SeparatedSetReport max_separated_exact(const SeparationGraph& graph, std::int64_t node_budget) {
    const std::size_t m = graph.vertex_count();
    SeparatedSetReport report;
    report.n = graph.n();
    report.eps = graph.eps();
    report.method = SearchMethod::exact;

    if (m == 0) {
        report.certified = true;
        report.maximal = true;
        notify_monitor(report, "max_separated_exact");
        return report;
    }

    CliqueSearch search(graph, node_budget);
    std::vector<int> current;
    Words all(search.words, 0);
    for (std::size_t v = 0; v < m; ++v) set_bit(all, v);
    search.best = {0};  // a single vertex is always a clique
    search.expand(current, all);

    bool size_proven = !search.budget_hit;
    std::vector<int> witness = search.best;
    if (size_proven) {
        std::vector<int> lex = search.lexicographic_witness(witness.size());
        if (lex.size() == witness.size()) witness = lex;
    }

    report.points.reserve(witness.size());
    for (int v : witness) report.points.push_back(graph.vertices()[static_cast<std::size_t>(v)]);
    report.size = witness.size();
    report.certified = true;  // a clique of the Separated relation
    report.maximal = size_proven;
    if (graph.has_witnesses()) {
        report.witnesses_stored = true;
        for (std::size_t a = 0; a < witness.size(); ++a) {
            for (std::size_t b = a + 1; b < witness.size(); ++b) {
                std::size_t i = static_cast<std::size_t>(witness[a]);
                std::size_t j = static_cast<std::size_t>(witness[b]);
                report.witnesses.push_back({a, b, *graph.least_index(i, j), graph.witness_dist(i, j)});
            }
        }
    }
    notify_monitor(report, "max_separated_exact");
    return report;
}

mpz_class packing_upper_bound(const PLCircleMap& map, long n, const Rational& eps) {
    if (!map.is_times_p()) {
        throw UnsupportedParameters("packing bound requires a xp map");
    }
    long p = map.times_p_value();
    long q = p;
    while (q > 1 && q % 6 == 0) q /= 6;
    if (q != 1 || p < 6) {
        throw UnsupportedParameters("packing bound requires p = 6^l, got p = " + std::to_string(p));
    }
    if (eps != Rational(1, 3)) {
        throw UnsupportedParameters("packing bound requires eps = 1/3, got " + eps.str());
    }
    Rational mu = bowen_ball(map, CirclePoint(), n, eps / Rational(2)).measure();
    assert(mu.sign() > 0);
    // floor(1 / mu) = floor(den / num)
    mpz_class bound;
    mpz_fdiv_q(bound.get_mpz_t(), mu.den().get_mpz_t(), mu.num().get_mpz_t());
    return bound;
}

BoundMonitor& BoundMonitor::instance() {
    static BoundMonitor monitor;
    return monitor;
}

void BoundMonitor::record_certified(long n, const Rational& eps, std::size_t size,
                                    const std::string& context) {
    if (eps != Rational(1, 3)) return;
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 3, static_cast<unsigned long>(n));
    if (mpz_cmp_ui(bound.get_mpz_t(), size) >= 0) return;

    std::lock_guard<std::mutex> lock(mutex_);
    events_.push_back({n, eps, size, context});
    std::fprintf(stderr,
                 "[bound-monitor] certified (%ld, 1/3)-separated set of size %zu exceeds 3^%ld "
                 "(context: %s) -- this would contradict the C = 3 bound and deserves attention\n",
                 n, size, n, context.c_str());
}

std::vector<BoundEvent> BoundMonitor::events() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return events_;
}

void BoundMonitor::clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    events_.clear();
}

}  // namespace torus
