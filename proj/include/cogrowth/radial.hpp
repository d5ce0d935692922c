#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cogrowth/numeric.hpp"
#include "cogrowth/tree.hpp"
#include "cogrowth/vertex_function.hpp"
#include "cogrowth/walks.hpp"

namespace cogrowth {

// Exact big-integer/rational arithmetic by default; values switch to
// extended-range floating point once the predicted magnitude passes the
// bit threshold, or past the step cap for geometric weights (whose exact
// pairings carry ever-growing denominators).
struct RadialOptions {
    enum class Mode { automatic, exact, floating };
    Mode mode = Mode::automatic;
    long exact_bit_threshold = 10'000;
    int geometric_exact_step_cap = 600;
};

namespace detail {

inline bool radial_use_exact(int k, int l, const RadialProfile& f, int r_max,
                             const RadialOptions& opt) {
    if (opt.mode == RadialOptions::Mode::exact) return true;
    if (opt.mode == RadialOptions::Mode::floating) return false;
    double log2_base = 0.0;
    if (f.geometric) {
        if (r_max > opt.geometric_exact_step_cap) return false;
        log2_base = std::max(0.0, XReal::from_rational(f.geometric_base).log() / kLn2);
    }
    double predicted_bits =
        (static_cast<double>(r_max) + 1) * (std::log2(static_cast<double>(std::max(k, l))) + log2_base) + 64;
    return predicted_bits <= static_cast<double>(opt.exact_bit_threshold);
}

}  // namespace detail

// Shim so the shell recurrence reads the same for both scalar types.
inline XReal operator*(const XReal& a, int b) { return a * XReal::from_double(b); }

namespace detail {

// One adjacency application on radial shell values:
//   (A h)(0) = k h(1),  (A h)(n) = h(n-1) + (c_n - 1) h(n+1)
// with c_n the full degree at depth n (k even, l odd).
template <typename T>
void radial_adjacency_step(int k, int l, std::vector<T>& cur, std::vector<T>& nxt) {
    int top = static_cast<int>(cur.size()) - 1;
    nxt[0] = cur[1] * k;
    for (int n = 1; n < top; ++n) {
        int branch = (n % 2 == 0) ? k - 1 : l - 1;
        nxt[static_cast<std::size_t>(n)] =
            cur[static_cast<std::size_t>(n - 1)] + cur[static_cast<std::size_t>(n + 1)] * branch;
    }
    nxt[static_cast<std::size_t>(top)] = cur[static_cast<std::size_t>(top - 1)];
    cur.swap(nxt);
}

}  // namespace detail

// b_r(f) for radial f about the root of the (k,l)-bi-regular tree, computed
// on shells in O(r_max^2) time; identical to walk_counts on a large enough
// ball. Infinite-tree semantics: no truncation at any r.
inline CountSeries radial_walk_counts(int k, int l, const RadialProfile& f, int r_max,
                                      const RadialOptions& opt = {}) {
    if (k < 2 || l < 2) throw std::invalid_argument("radial_walk_counts requires k, l >= 2");
    if (r_max < 0) throw std::invalid_argument("r_max must be >= 0");
    bool exact = detail::radial_use_exact(k, l, f, r_max, opt);

    CountSeries s;
    s.kind = WalkKind::walk;
    s.base = 0;
    s.r_max = r_max;
    s.provenance = "radial(" + std::to_string(k) + "," + std::to_string(l) + ")";

    std::optional<int> support = f.support_radius();  // nullopt for geometric
    int weight_top = support ? std::min(*support, r_max) : r_max;

    if (exact) {
        // weights w(n) = sphere_size(n) * f(n)
        std::vector<Rational> w(static_cast<std::size_t>(weight_top) + 1);
        {
            BigInt sphere = 1;
            Rational fval = f.geometric ? Rational(1) : Rational(0);
            for (int n = 0; n <= weight_top; ++n) {
                if (n > 0) sphere *= (n == 1) ? k : ((n - 1) % 2 == 1 ? l - 1 : k - 1);
                Rational fv = f.geometric ? fval : f.value_at(n);
                w[static_cast<std::size_t>(n)] = Rational(sphere) * fv;
                if (f.geometric) fval *= f.geometric_base;
            }
        }
        std::vector<BigInt> cur(static_cast<std::size_t>(r_max) + 2, BigInt(0));
        std::vector<BigInt> nxt(cur.size(), BigInt(0));
        cur[0] = 1;
        for (int r = 0; r <= r_max; ++r) {
            Rational sum = 0;
            for (int n = r % 2; n <= std::min(r, weight_top); n += 2) {
                const BigInt& uv = cur[static_cast<std::size_t>(n)];
                if (uv != 0 && w[static_cast<std::size_t>(n)] != 0)
                    sum += w[static_cast<std::size_t>(n)] * Rational(uv);
            }
            s.logvals.push_back(log_value(sum));
            s.exact.push_back(std::move(sum));
            s.exact_flags.push_back(1);
            if (r < r_max) detail::radial_adjacency_step(k, l, cur, nxt);
        }
    } else {
        std::vector<XReal> w(static_cast<std::size_t>(weight_top) + 1);
        {
            XReal sphere = XReal::from_double(1);
            XReal fval = XReal::from_double(1);
            XReal base = f.geometric ? XReal::from_rational(f.geometric_base) : XReal{};
            for (int n = 0; n <= weight_top; ++n) {
                if (n > 0) sphere = sphere * ((n == 1) ? k : ((n - 1) % 2 == 1 ? l - 1 : k - 1));
                XReal fv = f.geometric ? fval : XReal::from_rational(f.value_at(n));
                w[static_cast<std::size_t>(n)] = sphere * fv;
                if (f.geometric) fval = fval * base;
            }
        }
        std::vector<XReal> cur(static_cast<std::size_t>(r_max) + 2);
        std::vector<XReal> nxt(cur.size());
        cur[0] = XReal::from_double(1);
        for (int r = 0; r <= r_max; ++r) {
            XReal sum;
            for (int n = r % 2; n <= std::min(r, weight_top); n += 2)
                sum += w[static_cast<std::size_t>(n)] * cur[static_cast<std::size_t>(n)];
            s.logvals.push_back(sum.log());
            s.exact_flags.push_back(0);
            if (r < r_max) detail::radial_adjacency_step(k, l, cur, nxt);
        }
    }

    if (support) {
        // total mass of f, for series tail bounds downstream
        XReal mass;
        XReal sphere = XReal::from_double(1);
        for (int n = 0; n <= *support; ++n) {
            if (n > 0) sphere = sphere * ((n == 1) ? k : ((n - 1) % 2 == 1 ? l - 1 : k - 1));
            mass += sphere * XReal::from_rational(f.value_at(n));
        }
        s.function_mass = mass.to_double();
    }
    return s;
}

// a_r(f) for radial f: every sphere vertex is hit by exactly one
// non-backtracking walk from the root, so a_r = sphere_size(r) * f(r).
inline CountSeries radial_nbw_counts(int k, int l, const RadialProfile& f, int r_max,
                                     const RadialOptions& opt = {}) {
    if (k < 2 || l < 2) throw std::invalid_argument("radial_nbw_counts requires k, l >= 2");
    if (r_max < 0) throw std::invalid_argument("r_max must be >= 0");
    bool exact = detail::radial_use_exact(k, l, f, r_max, opt);

    CountSeries s;
    s.kind = WalkKind::nbw;
    s.base = 0;
    s.r_max = r_max;
    s.provenance = "radial(" + std::to_string(k) + "," + std::to_string(l) + ")";

    if (exact) {
        BigInt sphere = 1;
        Rational fval = 1;
        for (int n = 0; n <= r_max; ++n) {
            if (n > 0) sphere *= (n == 1) ? k : ((n - 1) % 2 == 1 ? l - 1 : k - 1);
            Rational val = Rational(sphere) * (f.geometric ? fval : f.value_at(n));
            s.logvals.push_back(log_value(val));
            s.exact.push_back(std::move(val));
            s.exact_flags.push_back(1);
            if (f.geometric) fval *= f.geometric_base;
        }
    } else {
        XReal sphere = XReal::from_double(1);
        XReal fval = XReal::from_double(1);
        XReal base = f.geometric ? XReal::from_rational(f.geometric_base) : XReal{};
        for (int n = 0; n <= r_max; ++n) {
            if (n > 0) sphere = sphere * ((n == 1) ? k : ((n - 1) % 2 == 1 ? l - 1 : k - 1));
            XReal val = sphere * (f.geometric ? fval : XReal::from_rational(f.value_at(n)));
            s.logvals.push_back(val.log());
            s.exact_flags.push_back(0);
            if (f.geometric) fval = fval * base;
        }
    }

    if (auto support = f.support_radius()) {
        XReal mass;
        XReal sphere = XReal::from_double(1);
        for (int n = 0; n <= *support; ++n) {
            if (n > 0) sphere = sphere * ((n == 1) ? k : ((n - 1) % 2 == 1 ? l - 1 : k - 1));
            mass += sphere * XReal::from_rational(f.value_at(n));
        }
        s.function_mass = mass.to_double();
    }
    return s;
}

}  // namespace cogrowth
