#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cogrowth/walks.hpp"

namespace cogrowth {

enum class EstimateMethod { root, ratio, ratio2, logfit };

inline const char* estimate_method_name(EstimateMethod m) {
    switch (m) {
        case EstimateMethod::root: return "root";
        case EstimateMethod::ratio: return "ratio";
        case EstimateMethod::ratio2: return "ratio2";
        case EstimateMethod::logfit: return "logfit";
    }
    return "?";
}

inline EstimateMethod parse_estimate_method(const std::string& s) {
    if (s == "root") return EstimateMethod::root;
    if (s == "ratio") return EstimateMethod::ratio;
    if (s == "ratio2") return EstimateMethod::ratio2;
    if (s == "logfit") return EstimateMethod::logfit;
    throw std::invalid_argument("unknown estimate method '" + s + "'");
}

struct EstimateWindow {
    int lo = 0;
    int hi = 0;  // inclusive
};

// Finite-r extrapolation of limsup s_r^{1/r}. residual is the spread
// (max - min) of the per-index samples across the window; for logfit it is
// the first-order value spread implied by the worst log-fit deviation.
struct GrowthEstimate {
    double value = 0.0;
    EstimateMethod method = EstimateMethod::ratio2;
    EstimateWindow window;
    double residual = 0.0;
};

namespace detail {

inline bool eventually_zero(const CountSeries& s, int from) {
    for (int r = std::max(from, 0); r <= s.r_max; ++r)
        if (s.log_at(r) != -std::numeric_limits<double>::infinity()) return false;
    return true;
}

}  // namespace detail

// Default window: the final 10% of the series (at least two sample points).
inline EstimateWindow default_estimate_window(const CountSeries& s) {
    int hi = s.r_max;
    int lo = s.r_max - std::max(2, s.r_max / 10);
    return {std::max(lo, 0), hi};
}

inline GrowthEstimate estimate_growth_rate(const CountSeries& s, EstimateMethod method,
                                           std::optional<EstimateWindow> window = std::nullopt) {
    EstimateWindow w = window ? *window : default_estimate_window(s);
    if (w.lo < 0 || w.hi > s.r_max || w.lo > w.hi)
        throw std::invalid_argument("estimate window outside series range");

    const double neg_inf = -std::numeric_limits<double>::infinity();

    // Eventually-zero series have limsup 0 by convention.
    if (detail::eventually_zero(s, w.lo)) return {0.0, method, w, 0.0};

    std::vector<double> samples;
    if (method == EstimateMethod::logfit) {
        // least-squares slope of log s_r over the window's nonzero entries
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int cnt = 0;
        for (int r = w.lo; r <= w.hi; ++r) {
            double lv = s.log_at(r);
            if (lv == neg_inf) continue;
            sx += r;
            sy += lv;
            sxx += double(r) * r;
            sxy += r * lv;
            ++cnt;
        }
        if (cnt < 2) throw std::invalid_argument("logfit needs two nonzero points in the window");
        double denom = cnt * sxx - sx * sx;
        if (denom == 0) throw std::invalid_argument("degenerate logfit window");
        double slope = (cnt * sxy - sx * sy) / denom;
        double intercept = (sy - slope * sx) / cnt;
        double max_dev = 0;
        for (int r = w.lo; r <= w.hi; ++r) {
            double lv = s.log_at(r);
            if (lv == neg_inf) continue;
            max_dev = std::max(max_dev, std::abs(lv - (slope * r + intercept)));
        }
        double value = std::exp(slope);
        return {value, method, w, value * max_dev};
    }

    for (int r = w.lo; r <= w.hi; ++r) {
        double lv = s.log_at(r);
        switch (method) {
            case EstimateMethod::root:
                if (r == 0 || lv == neg_inf) continue;
                samples.push_back(std::exp(lv / r));
                break;
            case EstimateMethod::ratio: {
                if (r + 1 > s.r_max) continue;
                double nxt = s.log_at(r + 1);
                if (lv == neg_inf) {
                    if (nxt != neg_inf)
                        throw std::invalid_argument(
                            "ratio method hit a zero denominator (parity mismatch; use ratio2)");
                    continue;
                }
                samples.push_back(std::exp(nxt - lv));
                break;
            }
            case EstimateMethod::ratio2: {
                if (r + 2 > s.r_max) continue;
                double nxt = s.log_at(r + 2);
                if (lv == neg_inf || nxt == neg_inf) continue;  // parity-aware skip
                samples.push_back(std::exp(0.5 * (nxt - lv)));
                break;
            }
            case EstimateMethod::logfit:
                break;
        }
    }
    if (samples.empty()) throw std::invalid_argument("no usable sample points in the window");

    double sum = 0, mn = samples.front(), mx = samples.front();
    for (double v : samples) {
        sum += v;
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    return {sum / samples.size(), method, w, mx - mn};
}

// ---------------------------------------------------------------------------
// The co-growth maps and their inverses.
// ---------------------------------------------------------------------------

// beta as a function of alpha on the d-regular tree:
//   2 sqrt(d-1)                 for alpha <= sqrt(d-1)
//   alpha + (d-1)/alpha         for alpha >  sqrt(d-1)
inline double cogrowth_regular(double alpha, int d) {
    if (d < 3) throw std::invalid_argument("cogrowth_regular requires d >= 3");
    if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
    double root = std::sqrt(d - 1.0);
    if (alpha <= root) return 2.0 * root;
    return alpha + (d - 1.0) / alpha;
}

// beta as a function of alpha on the (k,l)-bi-regular tree:
//   sqrt(k-1) + sqrt(l-1)                                  below threshold
//   (alpha + (k-1)/alpha)^{1/2} (alpha + (l-1)/alpha)^{1/2} above
// with threshold ((k-1)(l-1))^{1/4}. k = l reduces to the regular map.
inline double cogrowth_biregular(double alpha, int k, int l) {
    if (k < 2 || l < 2) throw std::invalid_argument("cogrowth_biregular requires k, l >= 2");
    if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
    double threshold = std::pow((k - 1.0) * (l - 1.0), 0.25);
    if (alpha <= threshold) return std::sqrt(k - 1.0) + std::sqrt(l - 1.0);
    return std::sqrt(alpha + (k - 1.0) / alpha) * std::sqrt(alpha + (l - 1.0) / alpha);
}

// The (2,2) tree (the line) evaluates but sits outside the regular map's
// d >= 3 hypothesis; reports should carry this flag.
inline bool cogrowth_degenerate(int k, int l) { return k == 2 && l == 2; }

// Unique rho >= sqrt(d-1) with rho + (d-1)/rho = beta.
inline double inverse_cogrowth_regular(double beta, int d) {
    if (d < 3) throw std::invalid_argument("inverse_cogrowth_regular requires d >= 3");
    double root = std::sqrt(d - 1.0);
    if (beta < 2.0 * root - 1e-12)
        throw std::invalid_argument("beta below 2 sqrt(d-1) has no preimage");
    double disc = std::max(0.0, beta * beta - 4.0 * (d - 1.0));
    return (beta + std::sqrt(disc)) / 2.0;
}

// Unique rho >= ((k-1)(l-1))^{1/4} mapped to beta by the bi-regular formula;
// bisection on the (strictly increasing) upper branch.
inline double inverse_cogrowth_biregular(double beta, int k, int l) {
    if (k < 2 || l < 2) throw std::invalid_argument("inverse_cogrowth_biregular requires k, l >= 2");
    double threshold = std::pow((k - 1.0) * (l - 1.0), 0.25);
    double beta_min = std::sqrt(k - 1.0) + std::sqrt(l - 1.0);
    if (beta < beta_min - 1e-12)
        throw std::invalid_argument("beta below sqrt(k-1)+sqrt(l-1) has no preimage");

    auto forward = [&](double rho) {
        return std::sqrt(rho + (k - 1.0) / rho) * std::sqrt(rho + (l - 1.0) / rho);
    };
    double lo = threshold, hi = std::max(threshold * 2.0, beta + 1.0);
    while (forward(hi) < beta) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (forward(mid) < beta)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12 * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace cogrowth
