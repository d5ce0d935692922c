#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cogrowth/errors.hpp"
#include "cogrowth/graph.hpp"
#include "cogrowth/tree.hpp"
#include "cogrowth/vertex_function.hpp"

namespace cogrowth {

// Radius-R ball of the universal cover of a graph, rooted over a base
// vertex. Cover vertices are the non-backtracking paths from the base;
// projection maps each one to its endpoint in the base graph.
struct CoverBall {
    Graph graph;
    int radius = 0;
    int root = 0;
    std::vector<int> depth;
    std::vector<int> parent;      // -1 for the root
    std::vector<int> projection;  // cover vertex -> base vertex

    int vertex_count() const { return graph.vertex_count(); }
};

inline CoverBall universal_cover_ball(const Graph& g, int base, int radius,
                                      std::int64_t size_cap = kDefaultSizeCap) {
    if (base < 0 || base >= g.vertex_count()) throw std::invalid_argument("bad base vertex");
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");
    if (!is_connected(g)) throw std::invalid_argument("universal cover of a disconnected graph");

    CoverBall cover;
    cover.radius = radius;
    cover.projection.push_back(base);
    cover.depth.push_back(0);
    cover.parent.push_back(-1);
    cover.graph.adj.emplace_back();

    // BFS over non-backtracking paths; in a simple graph the continuation
    // just avoids the vertex we arrived from.
    for (int v = 0; v < static_cast<int>(cover.projection.size()); ++v) {
        if (cover.depth[static_cast<std::size_t>(v)] >= radius) break;
        int pv = cover.parent[static_cast<std::size_t>(v)];
        int from = pv < 0 ? -1 : cover.projection[static_cast<std::size_t>(pv)];
        for (int w : g.adj[static_cast<std::size_t>(cover.projection[static_cast<std::size_t>(v)])]) {
            if (w == from) continue;
            int idx = static_cast<int>(cover.projection.size());
            if (idx >= size_cap)
                throw SizeCapExceeded("cover ball exceeds vertex cap " +
                                      std::to_string(size_cap));
            cover.projection.push_back(w);
            cover.depth.push_back(cover.depth[static_cast<std::size_t>(v)] + 1);
            cover.parent.push_back(v);
            cover.graph.adj.emplace_back();
            cover.graph.adj[static_cast<std::size_t>(v)].push_back(idx);
            cover.graph.adj[static_cast<std::size_t>(idx)].push_back(v);
        }
    }

    if (g.side) {
        std::vector<Side> side;
        side.reserve(cover.projection.size());
        for (int p : cover.projection) side.push_back((*g.side)[static_cast<std::size_t>(p)]);
        cover.graph.side = std::move(side);
    }
    return cover;
}

// Pull-back of a base function along the covering projection.
inline VertexFunction lift_function(const VertexFunction& f, const CoverBall& cover,
                                    const Graph& base_graph) {
    f.check_aligned(base_graph);
    VertexFunction out;
    out.values.reserve(cover.projection.size());
    for (int p : cover.projection) out.values.push_back(f.values[static_cast<std::size_t>(p)]);
    return out;
}

}  // namespace cogrowth
