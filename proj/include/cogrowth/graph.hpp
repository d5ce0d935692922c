#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cogrowth {

inline constexpr std::int64_t kDefaultWorkCap = 100'000'000;

enum class Side : std::uint8_t { U, W };

// Finite simple undirected graph with sorted neighbor lists and an optional
// bipartition labeling (every edge must join a U-vertex to a W-vertex).
struct Graph {
    std::vector<std::vector<int>> adj;
    std::optional<std::vector<Side>> side;

    int vertex_count() const { return static_cast<int>(adj.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    std::int64_t edge_count() const {
        std::int64_t deg_sum = 0;
        for (const auto& nb : adj) deg_sum += static_cast<std::int64_t>(nb.size());
        return deg_sum / 2;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& nb : adj) d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    int min_degree() const {
        if (adj.empty()) return 0;
        int d = degree(0);
        for (const auto& nb : adj) d = std::min(d, static_cast<int>(nb.size()));
        return d;
    }

    bool has_edge(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    // Undirected edge list, each pair with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }
};

inline Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list,
                         std::optional<std::vector<Side>> side = std::nullopt) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    if (side && static_cast<int>(side->size()) != vertex_count)
        throw std::invalid_argument("side labels misaligned with vertex count");

    Graph g;
    g.adj.resize(static_cast<std::size_t>(vertex_count));
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge");
        if (side && (*side)[u] == (*side)[v])
            throw std::invalid_argument("edge within one side of the bipartition");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge");
    }
    g.side = std::move(side);
    return g;
}

// K_{m,n}: vertices 0..m-1 on side U (degree n), m..m+n-1 on side W (degree m).
inline Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite requires m, n >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m) * n);
    for (int u = 0; u < m; ++u)
        for (int w = 0; w < n; ++w) edges.emplace_back(u, m + w);
    std::vector<Side> side(static_cast<std::size_t>(m + n), Side::W);
    for (int u = 0; u < m; ++u) side[static_cast<std::size_t>(u)] = Side::U;
    return build_graph(m + n, edges, side);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, edges);
}

inline Graph complete_graph(int n) {
    if (n < 2) throw std::invalid_argument("complete graph requires n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

// One new degree-2 vertex per edge; originals keep side W, subdivision
// vertices get side U. A d-regular input yields a (2,d)-bi-regular graph.
inline Graph subdivision(const Graph& g) {
    int n = g.vertex_count();
    auto old_edges = g.edges();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * old_edges.size());
    int next = n;
    for (auto [u, v] : old_edges) {
        edges.emplace_back(u, next);
        edges.emplace_back(v, next);
        ++next;
    }
    std::vector<Side> side(static_cast<std::size_t>(next), Side::U);
    for (int v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = Side::W;
    return build_graph(next, edges, side);
}

// (d_U, d_W) when the graph is labeled and bi-regular, nullopt otherwise.
// Sides with no vertices contribute no constraint; an edgeless side pair
// is rejected (degree undefined).
inline std::optional<std::pair<int, int>> biregular_degrees(const Graph& g) {
    if (!g.side) return std::nullopt;
    int du = -1, dw = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int& d = ((*g.side)[static_cast<std::size_t>(v)] == Side::U) ? du : dw;
        if (d == -1)
            d = g.degree(v);
        else if (d != g.degree(v))
            return std::nullopt;
    }
    if (du <= 0 || dw <= 0) return std::nullopt;
    return std::make_pair(du, dw);
}

// BFS distances from src; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, int src) {
    if (src < 0 || src >= g.vertex_count()) throw std::invalid_argument("bad source vertex");
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[static_cast<std::size_t>(u)])
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

// 2-coloring by BFS when one exists (labels ignored), nullopt otherwise.
inline std::optional<std::vector<Side>> two_coloring(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[static_cast<std::size_t>(u)]) {
                if (color[static_cast<std::size_t>(v)] < 0) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    q.push(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Side> out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        out[static_cast<std::size_t>(v)] = color[static_cast<std::size_t>(v)] == 0 ? Side::U : Side::W;
    return out;
}

// Deletes one undirected edge; neighbor lists stay sorted.
inline Graph remove_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("remove_edge: no such edge");
    Graph out = g;
    auto erase_from = [&](int a, int b) {
        auto& nb = out.adj[static_cast<std::size_t>(a)];
        nb.erase(std::lower_bound(nb.begin(), nb.end(), b));
    };
    erase_from(u, v);
    erase_from(v, u);
    return out;
}

}  // namespace cogrowth
