#include "torus/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torus {

EdgeColoring::EdgeColoring(std::vector<CirclePoint> vertices, long num_colors,
                           std::vector<std::int32_t> colors)
    : vertices_(std::move(vertices)), num_colors_(num_colors), colors_(std::move(colors)) {
    const std::size_t m = vertices_.size();
    if (num_colors_ < 1) {
        throw ValidationError("bad_color_count", "a coloring needs at least one color");
    }
    if (colors_.size() != m * (m - 1) / 2) {
        throw ValidationError("coloring_not_total",
                              "color table size does not match the vertex count");
    }
    for (std::int32_t c : colors_) {
        if (c < 0 || c >= num_colors_) {
            throw ValidationError("color_out_of_range",
                                  "edge color " + std::to_string(c) + " outside [0, " +
                                      std::to_string(num_colors_) + ")");
        }
    }
}

std::size_t EdgeColoring::pair_rank(std::size_t i, std::size_t j) const {
    assert(i != j && i < vertices_.size() && j < vertices_.size());
    if (i > j) std::swap(i, j);
    std::size_t m = vertices_.size();
    return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

long EdgeColoring::color(std::size_t i, std::size_t j) const { return colors_[pair_rank(i, j)]; }

void EdgeColoring::set_color(std::size_t i, std::size_t j, long c) {
    if (c < 0 || c >= num_colors_) {
        throw ValidationError("color_out_of_range", "edge color outside range");
    }
    colors_[pair_rank(i, j)] = static_cast<std::int32_t>(c);
}

bool EdgeColoring::operator==(const EdgeColoring& o) const {
    return vertices_ == o.vertices_ && num_colors_ == o.num_colors_ && colors_ == o.colors_;
}

EdgeColoring color_complete_graph(const PLCircleMap& map, const std::vector<CirclePoint>& points,
                                  long n, const Rational& eps, ExecPolicy policy) {
    SeparationGraph graph =
        build_separation_graph(map, points, n, eps, SepScanOptions{policy, false});

    const std::size_t m = points.size();
    std::vector<std::int32_t> colors;
    colors.reserve(graph.pair_count());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            auto idx = graph.least_index(i, j);
            if (!idx) {
                throw ValidationError("not_separated_pair",
                                      "pair (" + points[i].str() + ", " + points[j].str() +
                                          ") has no separating index below n = " +
                                          std::to_string(n));
            }
            colors.push_back(static_cast<std::int32_t>(*idx));
        }
    }
    return EdgeColoring(points, n, std::move(colors));
}

EdgeColoring prop12_coloring(long r, ExecPolicy policy) {
    if (r < 1) throw ValidationError("bad_rank", "prop12 coloring requires r >= 1");
    const long count = 1L << r;
    std::vector<CirclePoint> points;
    points.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        points.push_back(reduce(Rational(i, count)));
    }
    return color_complete_graph(PLCircleMap::times_p(2), points, r, Rational(1, 3), policy);
}

namespace {

using Words = std::vector<std::uint64_t>;

struct ColorClassGraph {
    std::size_t m, words;
    std::vector<Words> adj;

    ColorClassGraph(const EdgeColoring& coloring, long color)
        : m(coloring.vertex_count()), words((m + 63) / 64), adj(m, Words(words, 0)) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                if (coloring.color(i, j) == color) {
                    adj[i][j >> 6] |= std::uint64_t(1) << (j & 63);
                    adj[j][i >> 6] |= std::uint64_t(1) << (i & 63);
                }
            }
        }
    }
};

// First (lexicographically smallest) triangle in one color class, or empty.
std::vector<int> first_triangle(const ColorClassGraph& g) {
    for (std::size_t u = 0; u < g.m; ++u) {
        const Words& row_u = g.adj[u];
        for (std::size_t w = u >> 6; w < g.words; ++w) {
            std::uint64_t bits = row_u[w];
            if (w == (u >> 6)) bits &= ~((std::uint64_t(2) << (u & 63)) - 1);  // v > u
            while (bits) {
                std::size_t v = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                // common neighbor beyond v
                const Words& row_v = g.adj[v];
                for (std::size_t ww = v >> 6; ww < g.words; ++ww) {
                    std::uint64_t common = row_u[ww] & row_v[ww];
                    if (ww == (v >> 6)) common &= ~((std::uint64_t(2) << (v & 63)) - 1);
                    if (common) {
                        std::size_t x =
                            (ww << 6) + static_cast<std::size_t>(__builtin_ctzll(common));
                        return {static_cast<int>(u), static_cast<int>(v), static_cast<int>(x)};
                    }
                }
            }
        }
    }
    return {};
}

// First k-clique in one color class by ascending DFS with population pruning.
bool first_kclique_rec(const ColorClassGraph& g, long k, Words cand, std::vector<int>& chosen) {
    if (k == 0) return true;
    int avail = 0;
    for (std::uint64_t x : cand) avail += __builtin_popcountll(x);
    if (avail < k) return false;
    for (std::size_t w = 0; w < g.words; ++w) {
        std::uint64_t bits = cand[w];
        while (bits) {
            std::size_t v = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(bits));
            bits &= bits - 1;
            Words next(g.words);
            for (std::size_t ww = 0; ww < g.words; ++ww) next[ww] = cand[ww] & g.adj[v][ww];
            // restrict to > v
            for (std::size_t ww = 0; ww < (v >> 6); ++ww) next[ww] = 0;
            next[v >> 6] &= ~((std::uint64_t(2) << (v & 63)) - 1);
            chosen.push_back(static_cast<int>(v));
            if (first_kclique_rec(g, k - 1, std::move(next), chosen)) return true;
            chosen.pop_back();
            cand[w] &= ~(std::uint64_t(1) << (v & 63));  // v exhausted at this level
        }
    }
    return false;
}

std::vector<int> first_kclique(const ColorClassGraph& g, long k) {
    if (k == 3) return first_triangle(g);
    Words all(g.words, 0);
    for (std::size_t v = 0; v < g.m; ++v) all[v >> 6] |= std::uint64_t(1) << (v & 63);
    std::vector<int> chosen;
    if (first_kclique_rec(g, k, std::move(all), chosen)) return chosen;
    return {};
}

}  // namespace

std::optional<std::vector<int>> find_mono_clique(const EdgeColoring& coloring, long k,
                                                 ExecPolicy policy) {
    if (k < 3) throw ValidationError("bad_clique_size", "find_mono_clique requires k >= 3");
    if (coloring.vertex_count() < static_cast<std::size_t>(k)) return std::nullopt;

    const long colors = coloring.num_colors();
    std::vector<std::vector<int>> found(static_cast<std::size_t>(colors));

    auto scan_color = [&](long c) {
        ColorClassGraph g(coloring, c);
        found[static_cast<std::size_t>(c)] = first_kclique(g, k);
    };

    if (policy == ExecPolicy::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (long c = 0; c < colors; ++c) scan_color(c);
    } else {
        for (long c = 0; c < colors; ++c) scan_color(c);
    }

    // Deterministic winner: smallest witness tuple, ties to the lower color.
    const std::vector<int>* best = nullptr;
    for (const auto& w : found) {
        if (w.empty()) continue;
        if (!best || std::lexicographical_compare(w.begin(), w.end(), best->begin(), best->end())) {
            best = &w;
        }
    }
    if (!best) return std::nullopt;
    return *best;
}

void write_dimacs_color_class(const EdgeColoring& coloring, long color, std::ostream& out) {
    if (color < 0 || color >= coloring.num_colors()) {
        throw ValidationError("color_out_of_range", "no such color class");
    }
    const std::size_t m = coloring.vertex_count();
    std::size_t edges = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (coloring.color(i, j) == color) ++edges;
        }
    }
    out << "c color class " << color << " of a dynamical edge coloring\n";
    out << "p edge " << m << " " << edges << "\n";
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (coloring.color(i, j) == color) out << "e " << i + 1 << " " << j + 1 << "\n";
        }
    }
}

}  // namespace torus
