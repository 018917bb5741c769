#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torus/separated.hpp"

namespace torus {

// Total edge-coloring of the complete graph on the listed vertices with
// colors in {0, ..., num_colors - 1}.
class EdgeColoring {
public:
    EdgeColoring(std::vector<CirclePoint> vertices, long num_colors,
                 std::vector<std::int32_t> colors);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    long num_colors() const noexcept { return num_colors_; }
    const std::vector<CirclePoint>& vertices() const noexcept { return vertices_; }

    std::size_t pair_rank(std::size_t i, std::size_t j) const;
    long color(std::size_t i, std::size_t j) const;
    void set_color(std::size_t i, std::size_t j, long c);  // for tamper tests

    bool operator==(const EdgeColoring& o) const;

private:
    std::vector<CirclePoint> vertices_;
    long num_colors_;
    std::vector<std::int32_t> colors_;  // flat upper triangle
};

// Colors each edge {x, y} by the least separating index. The set is
// re-verified first; a pair with no separating index raises
// ValidationError("not_separated_pair").
EdgeColoring color_complete_graph(const PLCircleMap& map, const std::vector<CirclePoint>& points,
                                  long n, const Rational& eps,
                                  ExecPolicy policy = ExecPolicy::parallel);

// The r-coloring of K_{2^r} on A_r = {i/2^r} under the doubling map with
// eps = 1/3.
EdgeColoring prop12_coloring(long r, ExecPolicy policy = ExecPolicy::parallel);

// Some monochromatic k-clique (the lexicographically smallest, with ties on
// the color index) or nullopt. k = 3 runs an adjacency-bitset triangle scan
// per color class; larger k a candidate-set DFS.
std::optional<std::vector<int>> find_mono_clique(const EdgeColoring& coloring, long k,
                                                 ExecPolicy policy = ExecPolicy::parallel);

// DIMACS-like dump of one color class (1-based vertices, "e u v" lines).
void write_dimacs_color_class(const EdgeColoring& coloring, long color, std::ostream& out);

}  // namespace torus
