#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cogrowth/errors.hpp"
#include "cogrowth/graph.hpp"
#include "cogrowth/hashimoto.hpp"
#include "cogrowth/numeric.hpp"
#include "cogrowth/walks.hpp"

namespace cogrowth {

// Outcome of one identity verification. For matrix identities lhs/rhs hold
// the largest entry magnitude of each side and the gaps are entrywise; for
// scalar identities they are the two series values. passed means
// abs_gap <= tail_bound + check_tolerance.
struct IdentityReport {
    std::string identity;
    std::vector<std::pair<std::string, double>> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_gap = 0.0;
    double rel_gap = 0.0;
    int terms_used = 0;
    double tail_bound = 0.0;
    double check_tolerance = 0.0;
    bool passed = false;
    std::string note;
};

namespace detail {

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    int n = g.vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.adj[static_cast<std::size_t>(u)]) a(u, v) = 1.0;
    return a;
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

inline void finish_report(IdentityReport& rep, double gap, double scale) {
    rep.abs_gap = gap;
    rep.rel_gap = scale > 0 ? gap / scale : gap;
    rep.check_tolerance = 1e-10 * std::max(1.0, scale);
    rep.passed = gap <= rep.tail_bound + rep.check_tolerance;
}

// Pre-scaled term matrices N_r = t^r A_r via the three-term recurrence
// (N_2 = t A N_1 - t^2 D, N_{j+1} = t A N_j - t^2 (D - I) N_{j-1}); the
// entries stay bounded whenever the series converges, however many terms
// are requested.
inline std::vector<Eigen::MatrixXd> scaled_nbw_terms(const Graph& g, double t, int r_max) {
    int n = g.vertex_count();
    Eigen::MatrixXd a = adjacency_matrix(g);
    Eigen::VectorXd deg(n);
    for (int v = 0; v < n; ++v) deg(v) = g.degree(v);

    std::vector<Eigen::MatrixXd> out;
    out.reserve(static_cast<std::size_t>(r_max) + 1);
    out.push_back(Eigen::MatrixXd::Identity(n, n));
    if (r_max >= 1) out.push_back(t * a);
    for (int r = 2; r <= r_max; ++r) {
        Eigen::MatrixXd next = t * (a * out.back());
        const Eigen::MatrixXd& back2 = out[static_cast<std::size_t>(r - 2)];
        Eigen::VectorXd corr = (r == 2) ? deg : Eigen::VectorXd(deg.array() - 1.0);
        next -= (t * t) * (corr.asDiagonal() * back2);
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace detail

// Checks (z - A)^{-1} = sum_{r<=n} z^{-r-1} A^r on a finite graph against a
// dense LU inverse, with the geometric tail sum_{r>n} |z|^{-r-1} ||A||^r.
inline IdentityReport verify_resolvent_series(const Graph& g, double z, int n_terms) {
    if (n_terms < 0) throw std::invalid_argument("n_terms must be >= 0");
    double norm = adjacency_spectral_norm(g);
    if (!(std::abs(z) > norm))
        throw std::invalid_argument("|z| must exceed ||A|| = " + std::to_string(norm));

    int n = g.vertex_count();
    Eigen::MatrixXd a = detail::adjacency_matrix(g);
    Eigen::MatrixXd resolvent =
        (z * Eigen::MatrixXd::Identity(n, n) - a).partialPivLu().solve(
            Eigen::MatrixXd::Identity(n, n));

    // iterate the scaled term T_r = z^{-r-1} A^r; entries stay O(q^r)
    Eigen::MatrixXd partial = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n) / z;
    for (int r = 0; r <= n_terms; ++r) {
        partial += term;
        if (r < n_terms) term = (a * term) / z;
    }

    double q = norm / std::abs(z);
    IdentityReport rep;
    rep.identity = "resolvent-series";
    rep.params = {{"z", z}, {"norm", norm}};
    rep.terms_used = n_terms + 1;
    rep.tail_bound = std::pow(q, n_terms + 1) / (std::abs(z) * (1.0 - q));
    rep.lhs = detail::max_abs(resolvent);
    rep.rhs = detail::max_abs(partial);
    detail::finish_report(rep, detail::max_abs(resolvent - partial), rep.lhs);
    return rep;
}

// Checks (1 - t^2)(I + t^2 (D - I) - t A)^{-1} = sum_{r<=n} t^r A_r.
// The tail is empirical: forty extra terms are summed directly and the
// remainder extrapolated geometrically at the observed decay rate.
inline IdentityReport verify_nbw_generating(const Graph& g, double t, int n_terms) {
    if (n_terms < 0) throw std::invalid_argument("n_terms must be >= 0");
    int n = g.vertex_count();
    Eigen::MatrixXd a = detail::adjacency_matrix(g);
    Eigen::VectorXd dm1(n);
    for (int v = 0; v < n; ++v) dm1(v) = g.degree(v) - 1.0;

    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) +
                        (t * t) * Eigen::MatrixXd(dm1.asDiagonal()) - t * a;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (!lu.isInvertible())
        throw std::invalid_argument("I + t^2 (D - I) - t A is (near-)singular");
    Eigen::MatrixXd lhs_matrix = (1.0 - t * t) * lu.solve(Eigen::MatrixXd::Identity(n, n));

    const int extra = 40;
    auto terms = detail::scaled_nbw_terms(g, t, n_terms + extra);

    Eigen::MatrixXd partial = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> term_norms;
    for (int r = 0; r <= n_terms + extra; ++r) {
        term_norms.push_back(detail::max_abs(terms[static_cast<std::size_t>(r)]));
        if (r <= n_terms) partial += terms[static_cast<std::size_t>(r)];
    }

    double tail = 0.0;
    for (int r = n_terms + 1; r <= n_terms + extra; ++r)
        tail += term_norms[static_cast<std::size_t>(r)];
    double last = term_norms.back();
    if (last > 0.0) {
        // 8-step ratio smooths the bipartite parity oscillation
        double prev = term_norms[static_cast<std::size_t>(n_terms + extra - 8)];
        if (prev <= 0.0)
            throw std::invalid_argument("non-geometric term decay; cannot bound the tail");
        double q = std::pow(last / prev, 1.0 / 8.0);
        if (!(q < 0.999))
            throw std::invalid_argument("series ratio ||A_r||^{1/r} |t| not below 1");
        tail += 2.0 * last * q / (1.0 - q);  // headroom on the extrapolated remainder
    }

    IdentityReport rep;
    rep.identity = "nbw-generating";
    rep.params = {{"t", t}};
    rep.terms_used = n_terms + 1;
    rep.tail_bound = tail;
    rep.lhs = detail::max_abs(lhs_matrix);
    rep.rhs = detail::max_abs(partial);
    detail::finish_report(rep, detail::max_abs(lhs_matrix - partial), rep.lhs);
    return rep;
}

// Checks the bi-resolvent expansion
//   (Z - A)^{-1} = sum (z1 z2)^{-r} A^{2r} Z^{-1} + sum (z1 z2)^{-(r+1)} A^{2r+1}
// with Z = z1 I_U + z2 I_W, against a dense inverse; also asserts the
// exchange step Z^{-1} A Z^{-1} = (z1 z2)^{-1} A entrywise.
inline IdentityReport verify_biresolvent(const Graph& g, double z1, double z2, int n_terms) {
    if (n_terms < 0) throw std::invalid_argument("n_terms must be >= 0");
    if (!g.side) throw std::invalid_argument("bi-resolvent requires a bipartition");
    if (z1 == 0.0 || z2 == 0.0) throw std::invalid_argument("z1, z2 must be nonzero");
    double norm = adjacency_spectral_norm(g);
    double zz = z1 * z2;
    if (!(std::abs(zz) > norm * norm))
        throw std::invalid_argument("|z1 z2| must exceed ||A||^2 = " +
                                    std::to_string(norm * norm));

    int n = g.vertex_count();
    Eigen::MatrixXd a = detail::adjacency_matrix(g);
    Eigen::VectorXd zdiag(n), zinv(n);
    for (int v = 0; v < n; ++v) {
        double zv = ((*g.side)[static_cast<std::size_t>(v)] == Side::U) ? z1 : z2;
        zdiag(v) = zv;
        zinv(v) = 1.0 / zv;
    }

    Eigen::MatrixXd exchange = zinv.asDiagonal() * a * zinv.asDiagonal() - a / zz;
    double lemma_gap = detail::max_abs(exchange);

    Eigen::MatrixXd lhs_matrix =
        (Eigen::MatrixXd(zdiag.asDiagonal()) - a).partialPivLu().solve(
            Eigen::MatrixXd::Identity(n, n));

    // iterate the scaled power M_p = A^p |z1 z2|^{-p/2}; entries stay O(q^{p/2})
    double s = std::sqrt(std::abs(zz));
    double sgn = zz < 0 ? -1.0 : 1.0;
    Eigen::MatrixXd partial = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd scaled_power = Eigen::MatrixXd::Identity(n, n);
    for (int p = 0; p <= n_terms; ++p) {
        int flips = (p + 1) / 2;  // powers of (z1 z2)^{-1} in the coefficient
        double sign_coeff = (sgn < 0 && flips % 2 == 1) ? -1.0 : 1.0;
        if (p % 2 == 0)
            partial += sign_coeff * scaled_power * zinv.asDiagonal();
        else
            partial += (sign_coeff / s) * scaled_power;
        if (p < n_terms) scaled_power = (a * scaled_power) / s;
    }

    // geometric tails of both parities, ratio q per two powers of A
    double q = norm * norm / std::abs(zz);
    double zinv_max = std::max(std::abs(1.0 / z1), std::abs(1.0 / z2));
    int s_even = n_terms / 2 + 1;            // first even power 2s > n_terms
    int s_odd = (n_terms + 1) / 2;           // first odd power 2s+1 > n_terms
    double tail_even = zinv_max * std::pow(q, s_even) / (1.0 - q);
    double tail_odd = (norm > 0 ? std::pow(q, s_odd + 1) / (norm * (1.0 - q)) : 0.0);

    IdentityReport rep;
    rep.identity = "biresolvent";
    rep.params = {{"z1", z1}, {"z2", z2}, {"norm", norm}, {"lemma_gap", lemma_gap}};
    rep.terms_used = n_terms + 1;
    rep.tail_bound = tail_even + tail_odd;
    rep.lhs = detail::max_abs(lhs_matrix);
    rep.rhs = detail::max_abs(partial);
    detail::finish_report(rep, detail::max_abs(lhs_matrix - partial), rep.lhs);
    if (lemma_gap > 1e-13 * std::max(1.0, 1.0 / std::abs(zz))) rep.passed = false;
    return rep;
}

// ---------------------------------------------------------------------------
// Scalar identities on trees, evaluated from count series.
// ---------------------------------------------------------------------------

namespace detail {

// Sum of f over the tree recovered from a complete a-series
// (a_r = sum of f over the distance-r sphere).
inline double mass_from_series(const CountSeries& a, const CountSeries& b) {
    if (a.function_mass) return *a.function_mass;
    if (b.function_mass) return *b.function_mass;
    XReal mass;
    for (double lv : a.logvals) mass += XReal::from_log(lv);
    return mass.to_double();
}

inline void check_scalar_inputs(const CountSeries& a, const CountSeries& b) {
    if (a.kind != WalkKind::nbw || b.kind != WalkKind::walk)
        throw std::invalid_argument("expected a non-backtracking (a) and a walk (b) series");
    if (a.logvals.empty() || b.logvals.empty()) throw std::invalid_argument("empty series");
    if (a.logvals.back() != -std::numeric_limits<double>::infinity())
        throw InsufficientSeries(
            "a-series must extend past the support of f (last entry nonzero)");
}

// sum over r in [r0, len) with r = parity (mod 2) of exp(log s_r + c1 + r c2)
inline double parity_series_sum(const CountSeries& s, int parity, double c1, double c2) {
    CompensatedSum sum;
    for (int r = parity; r <= s.r_max; r += 2) {
        double lv = s.log_at(r);
        if (lv == -std::numeric_limits<double>::infinity()) continue;
        sum.add(std::exp(lv + c1 + r * c2));
    }
    return sum.value();
}

inline IdentityReport make_scalar_report(std::string name,
                                         std::vector<std::pair<std::string, double>> params,
                                         double lhs, double rhs, double tail, int terms,
                                         double rel_tol) {
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    // The a-priori tail bound must at least pin the leading digit; the
    // reported gap then shows how much closer the sides actually are.
    if (scale > 0 && !(tail < scale))
        throw InsufficientSeries("series too short: tail bound " + std::to_string(tail) +
                                 " is not below the identity value " + std::to_string(scale));
    IdentityReport rep;
    rep.identity = std::move(name);
    rep.params = std::move(params);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.terms_used = terms;
    rep.tail_bound = tail;
    rep.abs_gap = std::abs(lhs - rhs);
    rep.rel_gap = rep.abs_gap / std::max(scale, 1e-300);
    rep.check_tolerance = rel_tol * scale;
    rep.passed = rep.abs_gap <= rep.tail_bound + rep.check_tolerance;
    return rep;
}

}  // namespace detail

// sum_r b_r(f) z^{-r-1} = (rho - rho^{-1})^{-1} sum_r a_r(f) rho^{-r}
// with z = rho + (d-1)/rho, for rho > sqrt(d-1) and finitely supported f.
// The b-side truncation is bounded by b_r(f) <= (sum f) (2 sqrt(d-1))^r.
inline IdentityReport eval_regular_scalar_identity(const CountSeries& a, const CountSeries& b,
                                                   int d, double rho, double rel_tol) {
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    detail::check_scalar_inputs(a, b);
    double root = std::sqrt(d - 1.0);
    if (!(rho > root))
        throw std::invalid_argument("rho must exceed sqrt(d-1) = " + std::to_string(root));

    double z = rho + (d - 1.0) / rho;
    double log_z = std::log(z);
    double lhs = detail::parity_series_sum(b, 0, -log_z, -log_z) +
                 detail::parity_series_sum(b, 1, -log_z, -log_z);
    double prefactor = 1.0 / (rho - 1.0 / rho);
    double log_rho = std::log(rho);
    double rhs = prefactor * (detail::parity_series_sum(a, 0, 0.0, -log_rho) +
                              detail::parity_series_sum(a, 1, 0.0, -log_rho));

    double mass = detail::mass_from_series(a, b);
    double q = 2.0 * root / z;
    double tail = mass * std::pow(q, b.r_max + 1) / (z * (1.0 - q));

    return detail::make_scalar_report(
        "regular-scalar", {{"d", double(d)}, {"rho", rho}, {"z", z}, {"mass", mass}}, lhs, rhs,
        tail, b.r_max + 1, rel_tol);
}

// The even/odd split of the regular identity (substituting -rho for rho):
//   sum b_{2r} z^{-2r-1}   = (rho - rho^{-1})^{-1} sum a_{2r} rho^{-2r}
//   sum b_{2r+1} z^{-2r-2} = (rho - rho^{-1})^{-1} sum a_{2r+1} rho^{-2r-1}
inline std::pair<IdentityReport, IdentityReport> eval_parity_identities(
    const CountSeries& a, const CountSeries& b, int d, double rho, double rel_tol) {
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    detail::check_scalar_inputs(a, b);
    double root = std::sqrt(d - 1.0);
    if (!(rho > root))
        throw std::invalid_argument("rho must exceed sqrt(d-1) = " + std::to_string(root));

    double z = rho + (d - 1.0) / rho;
    double log_z = std::log(z);
    double log_rho = std::log(rho);
    double prefactor = 1.0 / (rho - 1.0 / rho);
    double mass = detail::mass_from_series(a, b);
    double q = 2.0 * root / z;

    auto tail_from = [&](int parity) {
        int r0 = b.r_max + 1;
        if (r0 % 2 != parity) ++r0;
        return mass * std::pow(q, r0) / (z * (1.0 - q * q));
    };

    IdentityReport even = detail::make_scalar_report(
        "parity-even", {{"d", double(d)}, {"rho", rho}, {"z", z}},
        detail::parity_series_sum(b, 0, -log_z, -log_z),
        prefactor * detail::parity_series_sum(a, 0, 0.0, -log_rho), tail_from(0), b.r_max + 1,
        rel_tol);
    IdentityReport odd = detail::make_scalar_report(
        "parity-odd", {{"d", double(d)}, {"rho", rho}, {"z", z}},
        detail::parity_series_sum(b, 1, -log_z, -log_z),
        prefactor * detail::parity_series_sum(a, 1, 0.0, -log_rho), tail_from(1), b.r_max + 1,
        rel_tol);
    return {even, odd};
}

// Bi-regular version, root on side U (degree k):
//   z1^{-1} sum b_{2r} (z1 z2)^{-r} + sum b_{2r+1} (z1 z2)^{-(r+1)}
//     = (rho - rho^{-1})^{-1} sum a_r rho^{-r}
// with z1 = rho + (k-1)/rho, z2 = rho + (l-1)/rho, for
// rho > ((k-1)(l-1))^{1/4}; tail via b_r(f) <= (sum f)(sqrt(k-1)+sqrt(l-1))^r.
inline IdentityReport eval_biregular_scalar_identity(const CountSeries& a, const CountSeries& b,
                                                     int k, int l, double rho, double rel_tol) {
    if (k < 2 || l < 2) throw std::invalid_argument("k, l must be >= 2");
    detail::check_scalar_inputs(a, b);
    double threshold = std::pow((k - 1.0) * (l - 1.0), 0.25);
    if (!(rho > threshold))
        throw std::invalid_argument("rho must exceed ((k-1)(l-1))^{1/4} = " +
                                    std::to_string(threshold));

    double z1 = rho + (k - 1.0) / rho;
    double z2 = rho + (l - 1.0) / rho;
    double zz = z1 * z2;
    double log_zz = std::log(zz);

    // even terms: b_{2r} zz^{-r} / z1 -> coefficient exp(-log z1 - r log zz)
    double lhs_even = detail::parity_series_sum(b, 0, -std::log(z1), -0.5 * log_zz);
    // odd terms: b_{2r+1} zz^{-(r+1)} = b_m zz^{-(m+1)/2} for odd m
    double lhs_odd = detail::parity_series_sum(b, 1, -0.5 * log_zz, -0.5 * log_zz);
    double lhs = lhs_even + lhs_odd;

    double prefactor = 1.0 / (rho - 1.0 / rho);
    double log_rho = std::log(rho);
    double rhs = prefactor * (detail::parity_series_sum(a, 0, 0.0, -log_rho) +
                              detail::parity_series_sum(a, 1, 0.0, -log_rho));

    double mass = detail::mass_from_series(a, b);
    double norm_a = std::sqrt(k - 1.0) + std::sqrt(l - 1.0);
    double qq = norm_a * norm_a / zz;  // ratio per two steps; < 1 since rho > threshold
    auto tail_from = [&](int parity) {
        int r0 = b.r_max + 1;
        if (r0 % 2 != parity) ++r0;
        // first omitted term's coefficient times the geometric sum
        double log_term = (parity == 0)
                              ? -std::log(z1) + r0 * (std::log(norm_a) - 0.5 * log_zz)
                              : -0.5 * log_zz + r0 * (std::log(norm_a) - 0.5 * log_zz);
        return mass * std::exp(log_term) / (1.0 - qq);
    };
    double tail = tail_from(0) + tail_from(1);

    return detail::make_scalar_report(
        "biregular-scalar",
        {{"k", double(k)}, {"l", double(l)}, {"rho", rho}, {"z1", z1}, {"z2", z2}, {"mass", mass}},
        lhs, rhs, tail, b.r_max + 1, rel_tol);
}

}  // namespace cogrowth
