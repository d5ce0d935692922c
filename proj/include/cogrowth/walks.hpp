#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cogrowth/cover.hpp"
#include "cogrowth/errors.hpp"
#include "cogrowth/graph.hpp"
#include "cogrowth/numeric.hpp"
#include "cogrowth/tree.hpp"
#include "cogrowth/vertex_function.hpp"

namespace cogrowth {

enum class WalkKind { walk, nbw };  // b_r / a_r

inline const char* walk_kind_name(WalkKind k) { return k == WalkKind::walk ? "b" : "a"; }

// The sequence a_r(f) or b_r(f) for r = 0..r_max. Values are kept exactly
// when the computation was exact-rational, and always in natural-log space.
// exact_flags[r] records whether entry r is the exact value of the modeled
// object: for a plain graph that is the graph itself, for a ball it is the
// infinite tree (false marks ball-truncated values).
struct CountSeries {
    WalkKind kind = WalkKind::walk;
    int base = 0;
    int r_max = 0;
    std::vector<Rational> exact;            // empty, or size r_max + 1
    std::vector<double> logvals;            // size r_max + 1, -inf for zero entries
    std::vector<std::uint8_t> exact_flags;  // size r_max + 1
    std::string provenance;
    std::optional<double> function_mass;    // sum of f, when finite and known

    bool has_exact() const { return !exact.empty(); }

    int length() const { return r_max + 1; }

    double log_at(int r) const { return logvals.at(static_cast<std::size_t>(r)); }

    const Rational& exact_at(int r) const {
        if (!has_exact()) throw std::logic_error("series has no exact values");
        return exact.at(static_cast<std::size_t>(r));
    }

    bool all_exact() const {
        for (auto f : exact_flags)
            if (!f) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Brute-force enumerators. These are the independent oracles: plain
// depth-first walk enumeration, no matrix algebra, guarded by a step budget.
// ---------------------------------------------------------------------------

inline std::vector<std::int64_t> enumerate_walks(const Graph& g, int e, int r,
                                                 std::int64_t work_cap = kDefaultWorkCap) {
    if (e < 0 || e >= g.vertex_count()) throw std::invalid_argument("bad base vertex");
    if (r < 0) throw std::invalid_argument("walk length must be >= 0");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(g.vertex_count()), 0);
    std::int64_t work = 0;
    std::function<void(int, int)> dfs = [&](int v, int remaining) {
        if (++work > work_cap) throw WorkCapExceeded("enumerate_walks step budget exceeded");
        if (remaining == 0) {
            ++counts[static_cast<std::size_t>(v)];
            return;
        }
        for (int w : g.adj[static_cast<std::size_t>(v)]) dfs(w, remaining - 1);
    };
    dfs(e, r);
    return counts;
}

inline std::vector<std::int64_t> enumerate_nbw(const Graph& g, int e, int r,
                                               std::int64_t work_cap = kDefaultWorkCap) {
    if (e < 0 || e >= g.vertex_count()) throw std::invalid_argument("bad base vertex");
    if (r < 0) throw std::invalid_argument("walk length must be >= 0");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(g.vertex_count()), 0);
    std::int64_t work = 0;
    std::function<void(int, int, int)> dfs = [&](int v, int prev, int remaining) {
        if (++work > work_cap) throw WorkCapExceeded("enumerate_nbw step budget exceeded");
        if (remaining == 0) {
            ++counts[static_cast<std::size_t>(v)];
            return;
        }
        for (int w : g.adj[static_cast<std::size_t>(v)])
            if (w != prev) dfs(w, v, remaining - 1);
    };
    dfs(e, -1, r);
    return counts;
}

// ---------------------------------------------------------------------------
// Exact count vectors by iterated sparse application.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<BigInt> apply_adjacency(const Graph& g, const std::vector<BigInt>& u) {
    std::vector<BigInt> out(u.size(), BigInt(0));
    for (int v = 0; v < g.vertex_count(); ++v) {
        BigInt acc = 0;
        for (int w : g.adj[static_cast<std::size_t>(v)]) acc += u[static_cast<std::size_t>(w)];
        out[static_cast<std::size_t>(v)] = std::move(acc);
    }
    return out;
}

}  // namespace detail

// u_r = A^r delta_e for r = 0..r_max, exact integer entries.
inline std::vector<std::vector<BigInt>> walk_count_vectors(const Graph& g, int e, int r_max) {
    if (e < 0 || e >= g.vertex_count()) throw std::invalid_argument("bad base vertex");
    if (r_max < 0) throw std::invalid_argument("r_max must be >= 0");
    std::vector<std::vector<BigInt>> u;
    u.reserve(static_cast<std::size_t>(r_max) + 1);
    std::vector<BigInt> cur(static_cast<std::size_t>(g.vertex_count()), BigInt(0));
    cur[static_cast<std::size_t>(e)] = 1;
    u.push_back(cur);
    for (int r = 1; r <= r_max; ++r) {
        cur = detail::apply_adjacency(g, cur);
        u.push_back(cur);
    }
    return u;
}

// u_r = A_r delta_e (non-backtracking walk counts into each vertex), via
// the three-term recurrence u_{r+1} = A u_r - (D - I) u_{r-1} with
// u_2 = A u_1 - D u_0. Valid on any finite simple graph.
inline std::vector<std::vector<BigInt>> nbw_count_vectors(const Graph& g, int e, int r_max) {
    if (e < 0 || e >= g.vertex_count()) throw std::invalid_argument("bad base vertex");
    if (r_max < 0) throw std::invalid_argument("r_max must be >= 0");
    int n = g.vertex_count();
    std::vector<std::vector<BigInt>> u;
    u.reserve(static_cast<std::size_t>(r_max) + 1);

    std::vector<BigInt> u0(static_cast<std::size_t>(n), BigInt(0));
    u0[static_cast<std::size_t>(e)] = 1;
    u.push_back(u0);
    if (r_max == 0) return u;

    u.push_back(detail::apply_adjacency(g, u.back()));
    for (int r = 2; r <= r_max; ++r) {
        std::vector<BigInt> next = detail::apply_adjacency(g, u.back());
        const auto& back2 = u[static_cast<std::size_t>(r - 2)];
        for (int v = 0; v < n; ++v) {
            int corr = (r == 2) ? g.degree(v) : g.degree(v) - 1;
            next[static_cast<std::size_t>(v)] -= corr * back2[static_cast<std::size_t>(v)];
        }
        u.push_back(std::move(next));
    }
    return u;
}

namespace detail {

inline CountSeries series_from_vectors(const Graph& g, int e, const VertexFunction& f,
                                       int r_max, WalkKind kind, std::optional<int> horizon,
                                       std::string provenance) {
    f.check_aligned(g);
    f.check_non_negative();
    auto vectors = (kind == WalkKind::walk) ? walk_count_vectors(g, e, r_max)
                                            : nbw_count_vectors(g, e, r_max);
    CountSeries s;
    s.kind = kind;
    s.base = e;
    s.r_max = r_max;
    s.provenance = std::move(provenance);
    s.exact.reserve(static_cast<std::size_t>(r_max) + 1);
    s.logvals.reserve(static_cast<std::size_t>(r_max) + 1);
    s.exact_flags.reserve(static_cast<std::size_t>(r_max) + 1);
    for (int r = 0; r <= r_max; ++r) {
        Rational val = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            const BigInt& c = vectors[static_cast<std::size_t>(r)][static_cast<std::size_t>(v)];
            if (c != 0) val += f.values[static_cast<std::size_t>(v)] * Rational(c);
        }
        s.logvals.push_back(log_value(val));
        s.exact.push_back(std::move(val));
        s.exact_flags.push_back(!horizon || r <= *horizon);
    }
    s.function_mass = XReal::from_rational(f.total_mass()).to_double();
    return s;
}

inline void check_horizon(int r_max, int horizon, bool allow_truncated, const char* what) {
    if (r_max > horizon && !allow_truncated)
        throw std::invalid_argument(std::string(what) +
                                    ": r_max exceeds the exactness horizon (radius - depth of "
                                    "base); pass allow_truncated for ball-truncated values");
}

}  // namespace detail

// b_r(f) = <f, A^r delta_e> on a plain finite graph (always exact).
inline CountSeries walk_counts(const Graph& g, int e, const VertexFunction& f, int r_max) {
    return detail::series_from_vectors(g, e, f, r_max, WalkKind::walk, std::nullopt, "graph");
}

// a_r(f) = <f, A_r delta_e> on a plain finite graph (always exact).
inline CountSeries nbw_counts(const Graph& g, int e, const VertexFunction& f, int r_max) {
    return detail::series_from_vectors(g, e, f, r_max, WalkKind::nbw, std::nullopt, "graph");
}

// Ball variants: walks of length r from e stay inside the ball only while
// r <= radius - depth(e), so entries past that horizon are ball-truncated
// (counts within the ball graph itself) and are flagged not exact.
inline CountSeries walk_counts(const TreeBall& ball, int e, const VertexFunction& f, int r_max,
                               bool allow_truncated = false) {
    int horizon = ball.radius - ball.depth.at(static_cast<std::size_t>(e));
    detail::check_horizon(r_max, horizon, allow_truncated, "walk_counts");
    return detail::series_from_vectors(ball.graph, e, f, r_max, WalkKind::walk, horizon,
                                       "ball(" + std::to_string(ball.k) + "," +
                                           std::to_string(ball.l) + "," +
                                           std::to_string(ball.radius) + ")");
}

inline CountSeries nbw_counts(const TreeBall& ball, int e, const VertexFunction& f, int r_max,
                              bool allow_truncated = false) {
    int horizon = ball.radius - ball.depth.at(static_cast<std::size_t>(e));
    detail::check_horizon(r_max, horizon, allow_truncated, "nbw_counts");
    return detail::series_from_vectors(ball.graph, e, f, r_max, WalkKind::nbw, horizon,
                                       "ball(" + std::to_string(ball.k) + "," +
                                           std::to_string(ball.l) + "," +
                                           std::to_string(ball.radius) + ")");
}

inline CountSeries walk_counts(const CoverBall& cover, int e, const VertexFunction& f, int r_max,
                               bool allow_truncated = false) {
    int horizon = cover.radius - cover.depth.at(static_cast<std::size_t>(e));
    detail::check_horizon(r_max, horizon, allow_truncated, "walk_counts");
    return detail::series_from_vectors(cover.graph, e, f, r_max, WalkKind::walk, horizon,
                                       "cover");
}

inline CountSeries nbw_counts(const CoverBall& cover, int e, const VertexFunction& f, int r_max,
                              bool allow_truncated = false) {
    int horizon = cover.radius - cover.depth.at(static_cast<std::size_t>(e));
    detail::check_horizon(r_max, horizon, allow_truncated, "nbw_counts");
    return detail::series_from_vectors(cover.graph, e, f, r_max, WalkKind::nbw, horizon,
                                       "cover");
}

// Dense non-backtracking walk matrices A_0..A_{r_max}; column j is
// nbw_count_vectors from base j (the matrices are symmetric).
inline std::vector<std::vector<std::vector<BigInt>>> nbw_matrices(const Graph& g, int r_max) {
    int n = g.vertex_count();
    std::vector<std::vector<std::vector<BigInt>>> out(
        static_cast<std::size_t>(r_max) + 1,
        std::vector<std::vector<BigInt>>(static_cast<std::size_t>(n),
                                         std::vector<BigInt>(static_cast<std::size_t>(n))));
    for (int j = 0; j < n; ++j) {
        auto cols = nbw_count_vectors(g, j, r_max);
        for (int r = 0; r <= r_max; ++r)
            for (int i = 0; i < n; ++i)
                out[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]
                   [static_cast<std::size_t>(j)] =
                       cols[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace cogrowth
