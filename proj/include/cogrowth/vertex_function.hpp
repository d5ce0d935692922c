#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cogrowth/graph.hpp"
#include "cogrowth/numeric.hpp"
#include "cogrowth/tree.hpp"

namespace cogrowth {

// Non-negative weights aligned to a graph's vertex indexing.
struct VertexFunction {
    std::vector<Rational> values;

    int size() const { return static_cast<int>(values.size()); }

    void check_aligned(const Graph& g) const {
        if (size() != g.vertex_count())
            throw std::invalid_argument("function not aligned to graph");
    }

    void check_non_negative() const {
        for (const auto& v : values)
            if (v < 0) throw std::invalid_argument("function value < 0");
    }

    Rational total_mass() const {
        Rational s = 0;
        for (const auto& v : values) s += v;
        return s;
    }

    static VertexFunction zero(int n) {
        VertexFunction f;
        f.values.assign(static_cast<std::size_t>(n), Rational(0));
        return f;
    }

    static VertexFunction ones(int n) {
        VertexFunction f;
        f.values.assign(static_cast<std::size_t>(n), Rational(1));
        return f;
    }

    static VertexFunction delta(int n, int v) {
        VertexFunction f = zero(n);
        f.values.at(static_cast<std::size_t>(v)) = 1;
        return f;
    }

    static VertexFunction indicator(int n, const std::vector<int>& vertices) {
        VertexFunction f = zero(n);
        for (int v : vertices) f.values.at(static_cast<std::size_t>(v)) = 1;
        return f;
    }
};

// f_m(v) = f(v) when dist(center, v) <= m, else 0. Monotone in m and
// idempotent for fixed m.
inline VertexFunction truncate_function(const Graph& g, const VertexFunction& f, int center,
                                        int m) {
    f.check_aligned(g);
    if (m < 0) throw std::invalid_argument("truncate_function requires m >= 0");
    auto dist = bfs_distances(g, center);
    VertexFunction out = VertexFunction::zero(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[static_cast<std::size_t>(v)] >= 0 && dist[static_cast<std::size_t>(v)] <= m)
            out.values[static_cast<std::size_t>(v)] = f.values[static_cast<std::size_t>(v)];
    return out;
}

// Distance-indexed weights about a tree root: either an explicit shell
// profile (zero beyond its last entry) or the geometric family c^dist.
struct RadialProfile {
    std::vector<Rational> profile;
    Rational geometric_base = 0;
    bool geometric = false;

    static RadialProfile shells(std::vector<Rational> values) {
        for (const auto& v : values)
            if (v < 0) throw std::invalid_argument("radial profile value < 0");
        RadialProfile f;
        f.profile = std::move(values);
        return f;
    }

    static RadialProfile geometric_family(const Rational& base) {
        if (base <= 0) throw std::invalid_argument("geometric base must be > 0");
        RadialProfile f;
        f.geometric = true;
        f.geometric_base = base;
        return f;
    }

    // Indicator of the distance-j sphere.
    static RadialProfile sphere_indicator(int j) {
        std::vector<Rational> p(static_cast<std::size_t>(j) + 1, Rational(0));
        p.back() = 1;
        return shells(std::move(p));
    }

    Rational value_at(int dist) const {
        if (dist < 0) throw std::invalid_argument("negative distance");
        if (geometric) {
            Rational v = 1;
            for (int i = 0; i < dist; ++i) v *= geometric_base;
            return v;
        }
        if (dist >= static_cast<int>(profile.size())) return 0;
        return profile[static_cast<std::size_t>(dist)];
    }

    // Largest shell with a nonzero weight, or -1 for the zero profile;
    // nullopt for the geometric family (unbounded support).
    std::optional<int> support_radius() const {
        if (geometric) return std::nullopt;
        for (int n = static_cast<int>(profile.size()) - 1; n >= 0; --n)
            if (profile[static_cast<std::size_t>(n)] != 0) return n;
        return -1;
    }
};

// Expands a radial profile over an explicit ball.
inline VertexFunction radial_to_vertex_function(const TreeBall& ball, const RadialProfile& f) {
    VertexFunction out = VertexFunction::zero(ball.vertex_count());
    for (int v = 0; v < ball.vertex_count(); ++v)
        out.values[static_cast<std::size_t>(v)] = f.value_at(ball.depth[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace cogrowth
