#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cogrowth/errors.hpp"
#include "cogrowth/graph.hpp"
#include "cogrowth/numeric.hpp"
#include "cogrowth/tree.hpp"

namespace cogrowth {

// Directed-edge index for the non-backtracking (Hashimoto) operator B.
// Undirected edge m = (u,v) with u < v yields directed edges 2m (u->v)
// and 2m+1 (v->u); reversal is index xor 1. e0 -> e iff end(e0) = start(e)
// and e is not the reversal of e0.
struct DirectedEdgeSpace {
    std::vector<int> start;             // per directed edge
    std::vector<int> end;               // per directed edge
    std::vector<std::vector<int>> out;  // non-backtracking successors
    int base_vertex_count = 0;
    bool base_bipartite = false;
    bool base_connected = false;
    int base_min_degree = 0;

    int directed_count() const { return static_cast<int>(start.size()); }
    static int reversal(int e) { return e ^ 1; }
};

inline DirectedEdgeSpace directed_edge_space(const Graph& g) {
    DirectedEdgeSpace space;
    space.base_vertex_count = g.vertex_count();
    space.base_bipartite = two_coloring(g).has_value();
    space.base_connected = is_connected(g);
    space.base_min_degree = g.min_degree();

    auto undirected = g.edges();
    int m = static_cast<int>(undirected.size());
    space.start.resize(static_cast<std::size_t>(2 * m));
    space.end.resize(static_cast<std::size_t>(2 * m));

    // edge -> directed index lookup per vertex
    std::vector<std::vector<std::pair<int, int>>> out_of(
        static_cast<std::size_t>(g.vertex_count()));  // (target, directed index)
    for (int i = 0; i < m; ++i) {
        auto [u, v] = undirected[static_cast<std::size_t>(i)];
        space.start[static_cast<std::size_t>(2 * i)] = u;
        space.end[static_cast<std::size_t>(2 * i)] = v;
        space.start[static_cast<std::size_t>(2 * i + 1)] = v;
        space.end[static_cast<std::size_t>(2 * i + 1)] = u;
        out_of[static_cast<std::size_t>(u)].emplace_back(v, 2 * i);
        out_of[static_cast<std::size_t>(v)].emplace_back(u, 2 * i + 1);
    }
    for (auto& lst : out_of) std::sort(lst.begin(), lst.end());

    space.out.resize(static_cast<std::size_t>(2 * m));
    for (int e = 0; e < 2 * m; ++e) {
        int head = space.end[static_cast<std::size_t>(e)];
        for (auto [tgt, idx] : out_of[static_cast<std::size_t>(head)]) {
            (void)tgt;
            if (idx != DirectedEdgeSpace::reversal(e))
                space.out[static_cast<std::size_t>(e)].push_back(idx);
        }
    }
    return space;
}

// One application of B: (B x)(e0) = sum over successors e of x(e).
template <typename T>
std::vector<T> hashimoto_apply(const DirectedEdgeSpace& space, const std::vector<T>& vec) {
    if (static_cast<int>(vec.size()) != space.directed_count())
        throw std::invalid_argument("vector not aligned to directed edge space");
    std::vector<T> out(vec.size(), T(0));
    for (int e = 0; e < space.directed_count(); ++e) {
        T acc(0);
        for (int s : space.out[static_cast<std::size_t>(e)]) acc += vec[static_cast<std::size_t>(s)];
        out[static_cast<std::size_t>(e)] = acc;
    }
    return out;
}

// A_{r+1} = S B^r E, assembled by driving E's columns through r applications
// of B and summing along S. Exact integer counts.
inline std::vector<std::vector<BigInt>> nbw_via_hashimoto(const Graph& g, int r,
                                                          std::int64_t work_cap = kDefaultWorkCap) {
    if (r < 0) throw std::invalid_argument("r must be >= 0");
    auto space = directed_edge_space(g);
    int n = g.vertex_count();
    int de = space.directed_count();

    std::int64_t succ_total = 0;
    for (const auto& s : space.out) succ_total += static_cast<std::int64_t>(s.size());
    if (static_cast<std::int64_t>(n) * succ_total * std::max(r, 1) > work_cap)
        throw WorkCapExceeded("nbw_via_hashimoto work estimate exceeds cap");

    std::vector<std::vector<BigInt>> result(static_cast<std::size_t>(n),
                                            std::vector<BigInt>(static_cast<std::size_t>(n),
                                                                BigInt(0)));
    // column j of E is the indicator of edges ending at j
    for (int j = 0; j < n; ++j) {
        std::vector<BigInt> col(static_cast<std::size_t>(de), BigInt(0));
        for (int e = 0; e < de; ++e)
            if (space.end[static_cast<std::size_t>(e)] == j) col[static_cast<std::size_t>(e)] = 1;
        for (int step = 0; step < r; ++step) col = hashimoto_apply(space, col);
        for (int e = 0; e < de; ++e)
            result[static_cast<std::size_t>(space.start[static_cast<std::size_t>(e)])]
                  [static_cast<std::size_t>(j)] += col[static_cast<std::size_t>(e)];
    }
    return result;
}

namespace detail {

// 1-normalized power iteration on a non-negative operator; the Rayleigh-style
// ratio is the mass of the image of a unit-mass iterate. Converges on the
// successive-ratio difference. Returns 0 if the iterate dies (nilpotent part).
template <typename MatVec>
double power_iteration_ratio(MatVec&& apply, int dim, double tol, int max_iter) {
    std::vector<double> x(static_cast<std::size_t>(dim), 1.0 / dim);
    double prev = -1.0;
    for (int it = 0; it < max_iter; ++it) {
        std::vector<double> y = apply(x);
        double mass = 0.0;
        for (double v : y) mass += v;
        if (mass == 0.0) return 0.0;
        double ratio = mass;  // ||x||_1 == 1
        for (double& v : y) v /= mass;
        x = std::move(y);
        if (it > 0 && std::abs(ratio - prev) <= tol * std::max(1.0, std::abs(ratio)))
            return ratio;
        prev = ratio;
    }
    throw ConvergenceError("power iteration did not converge in " + std::to_string(max_iter) +
                           " iterations");
}

}  // namespace detail

// Perron value of B on a finite graph by power iteration; iterates B^2 and
// takes the square root when the base graph is bipartite (where B's extreme
// spectrum comes in +/- pairs).
inline double hashimoto_spectral_radius_finite(const DirectedEdgeSpace& space, double tol = 1e-12,
                                               int max_iter = 100'000) {
    if (!space.base_connected || space.base_min_degree < 2)
        throw std::invalid_argument(
            "hashimoto_spectral_radius_finite requires a connected graph with min degree >= 2");
    auto apply_b = [&space](const std::vector<double>& v) { return hashimoto_apply(space, v); };
    if (space.base_bipartite) {
        auto apply_b2 = [&](const std::vector<double>& v) { return apply_b(apply_b(v)); };
        return std::sqrt(
            detail::power_iteration_ratio(apply_b2, space.directed_count(), tol, max_iter));
    }
    return detail::power_iteration_ratio(apply_b, space.directed_count(), tol, max_iter);
}

inline double hashimoto_spectral_radius_finite(const Graph& g, double tol = 1e-12,
                                               int max_iter = 100'000) {
    return hashimoto_spectral_radius_finite(directed_edge_space(g), tol, max_iter);
}

// ||A||_2 on a finite graph (non-negative symmetric, so the spectral radius)
// by power iteration, squaring when bipartite.
inline double adjacency_spectral_norm(const Graph& g, double tol = 1e-10,
                                      int max_iter = 100'000) {
    if (g.vertex_count() == 0) return 0.0;
    auto apply_a = [&g](const std::vector<double>& v) {
        std::vector<double> out(v.size(), 0.0);
        for (int u = 0; u < g.vertex_count(); ++u) {
            double acc = 0.0;
            for (int w : g.adj[static_cast<std::size_t>(u)]) acc += v[static_cast<std::size_t>(w)];
            out[static_cast<std::size_t>(u)] = acc;
        }
        return out;
    };
    if (two_coloring(g)) {
        auto apply_a2 = [&](const std::vector<double>& v) { return apply_a(apply_a(v)); };
        return std::sqrt(
            detail::power_iteration_ratio(apply_a2, g.vertex_count(), tol, max_iter));
    }
    return detail::power_iteration_ratio(apply_a, g.vertex_count(), tol, max_iter);
}

// Ball-growth estimates sqrt(|B(v,r)|^{1/r}) of the spectral radius of B on
// the (k,l)-bi-regular tree; entry r-1 holds the radius-r estimate. The
// sequence converges to ((k-1)(l-1))^{1/4}.
inline std::vector<double> tree_ball_growth_rate(int k, int l, int r_max) {
    if (k < 2 || l < 2) throw std::invalid_argument("tree_ball_growth_rate requires k, l >= 2");
    if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
    std::vector<double> estimates;
    estimates.reserve(static_cast<std::size_t>(r_max));
    BigInt ball = 1;
    BigInt sphere = 1;
    for (int r = 1; r <= r_max; ++r) {
        sphere *= (r == 1) ? k : ((r - 1) % 2 == 1 ? l - 1 : k - 1);
        ball += sphere;
        estimates.push_back(std::exp(log_value(ball) / (2.0 * r)));
    }
    return estimates;
}

}  // namespace cogrowth
