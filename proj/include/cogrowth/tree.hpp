#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cogrowth/errors.hpp"
#include "cogrowth/graph.hpp"
#include "cogrowth/numeric.hpp"

namespace cogrowth {

inline constexpr std::int64_t kDefaultSizeCap = 10'000'000;

// Number of vertices at distance r from the root of the (k,l)-bi-regular
// tree, root on side U (degree k). Exact for any r.
inline BigInt sphere_size(int k, int l, int r) {
    if (k < 2 || l < 2) throw std::invalid_argument("sphere_size requires k, l >= 2");
    if (r < 0) throw std::invalid_argument("sphere_size requires r >= 0");
    if (r == 0) return 1;
    BigInt s = k;
    for (int depth = 1; depth < r; ++depth)
        s *= (depth % 2 == 1) ? (l - 1) : (k - 1);
    return s;
}

inline BigInt ball_size(int k, int l, int r) {
    BigInt total = 0;
    for (int n = 0; n <= r; ++n) total += sphere_size(k, l, n);
    return total;
}

// Radius-R ball of the (k,l)-bi-regular tree (k = l gives the regular tree).
// Vertices are indexed breadth-first: root 0, then each sphere in order,
// children grouped under their parent. Depth-n vertices are on side U iff n
// is even; every vertex at depth < R has full degree, depth-R vertices are
// leaves.
struct TreeBall {
    Graph graph;
    int k = 0, l = 0;
    int radius = 0;
    int root = 0;
    std::vector<int> depth;
    std::vector<int> parent;  // -1 for the root

    int vertex_count() const { return graph.vertex_count(); }

    // Full degree of a depth-n vertex in the infinite tree.
    int ideal_degree(int n) const { return (n % 2 == 0) ? k : l; }
};

inline TreeBall generate_tree_ball(int k, int l, int radius,
                                   std::int64_t size_cap = kDefaultSizeCap) {
    if (k < 2 || l < 2) throw std::invalid_argument("generate_tree_ball requires k, l >= 2");
    if (radius < 0) throw std::invalid_argument("generate_tree_ball requires radius >= 0");

    BigInt total = ball_size(k, l, radius);
    if (total > size_cap)
        throw SizeCapExceeded("tree ball would have " + total.str() + " vertices (cap " +
                              std::to_string(size_cap) + ")");
    int n = total.convert_to<int>();

    TreeBall ball;
    ball.k = k;
    ball.l = l;
    ball.radius = radius;
    ball.depth.assign(static_cast<std::size_t>(n), 0);
    ball.parent.assign(static_cast<std::size_t>(n), -1);
    ball.graph.adj.resize(static_cast<std::size_t>(n));
    std::vector<Side> side(static_cast<std::size_t>(n), Side::U);

    int next = 1;
    for (int v = 0; v < n && next < n; ++v) {
        int d = ball.depth[static_cast<std::size_t>(v)];
        if (d >= radius) break;
        int child_count = (v == 0) ? k : ball.ideal_degree(d) - 1;
        for (int c = 0; c < child_count; ++c) {
            int w = next++;
            ball.depth[static_cast<std::size_t>(w)] = d + 1;
            ball.parent[static_cast<std::size_t>(w)] = v;
            side[static_cast<std::size_t>(w)] = ((d + 1) % 2 == 0) ? Side::U : Side::W;
            ball.graph.adj[static_cast<std::size_t>(v)].push_back(w);
            ball.graph.adj[static_cast<std::size_t>(w)].push_back(v);
        }
    }
    ball.graph.side = std::move(side);
    // BFS indexing appends the parent before any child, so lists are sorted.
    return ball;
}

}  // namespace cogrowth
