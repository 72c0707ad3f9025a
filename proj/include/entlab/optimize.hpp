#pragma once

// Multistart see-saw optimization over product and biseparable pure states.

#include <cmath>
#include <optional>
#include <vector>

#include "entlab/witness.hpp"

namespace entlab {

struct SeesawConfig {
    int restarts = 64;
    int max_iter = 500;
    double rel_tol = 1e-12;
    std::uint64_t seed = 0;
    int threads = 0;  // 0: default_threads()

    void validate() const {
        require(restarts > 0 && max_iter > 0 && rel_tol > 0.0, "see-saw settings must be positive");
    }
};

struct ProductState {
    std::vector<Vector> factors;

    Vector amplitudes() const { return tensor_product(factors); }
};

struct OptimizationResult {
    double value = 0.0;
    ProductState argument;  // product factors, or {eta, mu} for a biseparable optimum
    int bipartition = -1;   // party X of X|YZ for biseparable results
    int restarts_used = 0;
    bool converged = false;
    bool monotone = true;
    int iterations = 0;
};

namespace detail {

// Best extremal vector of a Hermitian matrix; inside a degenerate cluster the
// previous iterate's projection is kept when it is not negligible.
inline Vector extremal_vector(const Matrix& h, bool top, const Vector* prev, double* value) {
    const auto e = hermitian_eig(h);
    const Eigen::Index n = e.values.size();
    const Eigen::Index best = top ? n - 1 : 0;
    *value = e.values(best);
    const double scale = std::max(1.0, e.values.cwiseAbs().maxCoeff());
    if (prev) {
        Vector proj = Vector::Zero(h.rows());
        int cluster = 0;
        for (Eigen::Index k = 0; k < n; ++k)
            if (std::abs(e.values(k) - *value) <= 1e-10 * scale) {
                proj += e.vectors.col(k) * e.vectors.col(k).dot(*prev);
                ++cluster;
            }
        if (cluster > 1 && proj.norm() > 1e-8) return proj / proj.norm();
    }
    return e.vectors.col(best);
}

struct Digits {
    std::vector<int> dims;
    std::vector<std::vector<int>> table;  // table[index][party]

    explicit Digits(std::vector<int> ds) : dims(std::move(ds)) {
        const long D = dim_product(dims);
        table.resize(D);
        for (long i = 0; i < D; ++i) digits_of(i, dims, table[i]);
    }
};

// <prod_{j != k} f_j | psi> as a vector on party k.
inline Vector contract_except(const Vector& psi, const Digits& dg, const std::vector<Vector>& f, int k) {
    Vector v = Vector::Zero(dg.dims[k]);
    const int n = static_cast<int>(dg.dims.size());
    for (long i = 0; i < psi.size(); ++i) {
        const auto& dig = dg.table[i];
        cplx w = psi(i);
        for (int j = 0; j < n && w != 0.0; ++j)
            if (j != k) w *= std::conj(f[j](dig[j]));
        v(dig[k]) += w;
    }
    return v;
}

inline std::vector<Vector> random_factors(const std::vector<int>& dims, Rng& rng) {
    std::vector<Vector> f;
    for (int d : dims) f.push_back(random_unit_vector(d, rng));
    return f;
}

template <class Run>
OptimizationResult multistart(const SeesawConfig& cfg, bool maximize, Run&& run) {
    cfg.validate();
    std::vector<OptimizationResult> results(cfg.restarts);
    parallel_for(
        cfg.restarts,
        [&](int r) {
            Rng rng(mix64(cfg.seed ^ static_cast<std::uint64_t>(r)));
            results[r] = run(rng);
        },
        cfg.threads);
    OptimizationResult best = results.front();
    bool all_monotone = true;
    for (const auto& r : results) {
        all_monotone = all_monotone && r.monotone;
        if (maximize ? r.value > best.value : r.value < best.value) best = r;
    }
    best.restarts_used = cfg.restarts;
    best.monotone = all_monotone;
    return best;
}

inline bool small_change(double prev, double cur, double rel_tol) {
    return std::abs(cur - prev) <= rel_tol * std::max(1.0, std::abs(cur));
}

}  // namespace detail

/// Lambda^2 = max over product states |<a_1...a_n|psi>|^2 (a lower bound from
/// multistart see-saw).
inline OptimizationResult max_product_overlap(const StateVector& psi, const SeesawConfig& cfg = {}) {
    require(psi.parties() >= 2 && psi.parties() <= 4, "product overlap supports 2 to 4 parties");
    require(std::abs(psi.amplitudes().squaredNorm() - 1.0) <= 1e-10, "state is not normalized");
    const detail::Digits dg(psi.dims());
    const int n = psi.parties();
    return detail::multistart(cfg, true, [&](Rng& rng) {
        OptimizationResult res;
        auto f = detail::random_factors(psi.dims(), rng);
        double prev = -1.0;
        for (int it = 1; it <= cfg.max_iter; ++it) {
            double cur = 0.0;
            for (int k = 0; k < n; ++k) {
                Vector v = detail::contract_except(psi.amplitudes(), dg, f, k);
                const double nv = v.norm();
                cur = nv * nv;
                if (nv > 0.0) f[k] = v / nv;
                if (cur < res.value - 1e-12) res.monotone = false;
                res.value = std::max(res.value, cur);
            }
            res.iterations = it;
            if (detail::small_change(prev, cur, cfg.rel_tol)) {
                res.converged = true;
                break;
            }
            prev = cur;
        }
        res.argument.factors = f;
        return res;
    });
}

inline double geometric_measure(const StateVector& psi, const SeesawConfig& cfg = {}) {
    return 1.0 - max_product_overlap(psi, cfg).value;
}

/// Extremum of <a_1...a_n| H |a_1...a_n> over product states.
inline OptimizationResult product_extremum(const Operator& H, bool maximize, const SeesawConfig& cfg = {}) {
    require(H.is_hermitian(1e-10), "operator must be Hermitian");
    const int n = H.parties();
    require(n >= 2, "need at least two parties");
    return detail::multistart(cfg, maximize, [&](Rng& rng) {
        OptimizationResult res;
        res.value = maximize ? -1e300 : 1e300;
        auto f = detail::random_factors(H.dims(), rng);
        double prev = 0.0;
        for (int it = 1; it <= cfg.max_iter; ++it) {
            double cur = 0.0;
            for (int k = 0; k < n; ++k) {
                std::vector<int> others;
                std::vector<Vector> of;
                for (int j = 0; j < n; ++j)
                    if (j != k) {
                        others.push_back(j);
                        of.push_back(f[j]);
                    }
                const Operator cond = partial_expectation(H, others, tensor_product(of));
                f[k] = detail::extremal_vector(cond.matrix(), maximize, &f[k], &cur);
                const bool worse = maximize ? cur < res.value - 1e-12 * std::max(1.0, std::abs(cur))
                                            : cur > res.value + 1e-12 * std::max(1.0, std::abs(cur));
                if (it > 1 && worse) res.monotone = false;
                res.value = maximize ? std::max(res.value, cur) : std::min(res.value, cur);
            }
            res.iterations = it;
            if (it > 1 && detail::small_change(prev, cur, cfg.rel_tol)) {
                res.converged = true;
                break;
            }
            prev = cur;
        }
        res.argument.factors = f;
        return res;
    });
}

/// min over product states of <abc|Pi|abc> for a projector Pi.
inline OptimizationResult min_projector_overlap(const Operator& Pi, const SeesawConfig& cfg = {}) {
    require(max_abs(Pi.matrix() * Pi.matrix() - Pi.matrix()) <= 1e-9, "operator is not idempotent");
    return product_extremum(Pi, false, cfg);
}

inline double fully_separable_max(const Operator& W, const SeesawConfig& cfg = {}) {
    return product_extremum(W, true, cfg).value;
}

/// max over X|YZ and |eta>_X|mu>_YZ of <W>, by alternating top-eigenvector updates.
inline OptimizationResult biseparable_max(const Operator& W, const SeesawConfig& cfg = {}) {
    require(W.parties() == 3, "biseparable optimization is implemented for three parties");
    require(W.is_hermitian(1e-10), "operator must be Hermitian");
    OptimizationResult best;
    best.value = -1e300;
    for (int X = 0; X < 3; ++X) {
        const std::vector<int> rest = detail::complement({X}, 3);
        SeesawConfig c = cfg;
        c.seed = derive_seed(cfg.seed, "biseparable", X);
        auto r = detail::multistart(c, true, [&](Rng& rng) {
            OptimizationResult res;
            res.value = -1e300;
            Vector eta = random_unit_vector(W.dims()[X], rng);
            Vector mu;
            double prev = 0.0, cur = 0.0;
            for (int it = 1; it <= cfg.max_iter; ++it) {
                const Operator yz = partial_expectation(W, {X}, eta);
                mu = detail::extremal_vector(yz.matrix(), true, mu.size() ? &mu : nullptr, &cur);
                if (it > 1 && cur < res.value - 1e-12 * std::max(1.0, std::abs(cur))) res.monotone = false;
                res.value = std::max(res.value, cur);
                const Operator x = partial_expectation(W, rest, mu);
                eta = detail::extremal_vector(x.matrix(), true, &eta, &cur);
                if (cur < res.value - 1e-12 * std::max(1.0, std::abs(cur))) res.monotone = false;
                res.value = std::max(res.value, cur);
                res.iterations = it;
                if (it > 1 && detail::small_change(prev, cur, cfg.rel_tol)) {
                    res.converged = true;
                    break;
                }
                prev = cur;
            }
            res.argument.factors = {eta, mu};
            return res;
        });
        r.bipartition = X;
        if (r.value > best.value) best = r;
    }
    return best;
}

/// For U^{x3}-invariant W the anchor can be fixed to |0>: the biseparable
/// maximum is the largest eigenvalue of <0|W|0> over the three bipartitions.
inline double biseparable_max_invariant(const Operator& W) {
    double m = -1e300;
    for (int X = 0; X < W.parties(); ++X) {
        const Vector zero = Vector::Unit(W.dims()[X], 0);
        m = std::max(m, max_eigenvalue(partial_expectation(W, {X}, zero).matrix()));
    }
    return m;
}

enum class EtaMode { analytic, numeric };

/// min over product states of Re(e^{i alpha} <abc|T|abc>).
inline double extremize_eta(double alpha, int d, EtaMode mode, const SeesawConfig& cfg = {}) {
    if (mode == EtaMode::analytic) {
        // smaller eigenvalue of the reduced 2x2 problem, minimized over c = cos(theta)
        const double C = 2.0 * std::cos(alpha);
        auto g = [&](double c) {
            const double h = C * c / 2.0;
            const double r = std::sqrt(h * h + std::max(0.0, 1.0 - c * c));
            return std::min(0.5 * c * (h - r), 0.5 * c * (h + r));
        };
        const int N = 20000;
        int bi = 0;
        double bv = g(-1.0);
        for (int i = 1; i <= N; ++i) {
            const double v = g(-1.0 + 2.0 * i / N);
            if (v < bv) {
                bv = v;
                bi = i;
            }
        }
        double lo = -1.0 + 2.0 * std::max(0, bi - 1) / N, hi = -1.0 + 2.0 * std::min(N, bi + 1) / N;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int it = 0; it < 200; ++it) {
            const double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
            if (g(a) < g(b))
                hi = b;
            else
                lo = a;
        }
        return std::min(bv, g(0.5 * (lo + hi)));
    }
    require(d >= 2, "local dimension must be at least 2");
    const auto p = build_permutations(d, 3);
    const cplx ph = std::polar(1.0, alpha);
    const Operator H = 0.5 * (ph * p.T() + std::conj(ph) * p.T2());
    return product_extremum(H, false, cfg).value;
}

struct ChiNormResult {
    double value;
    double bn2, cn2;  // |b_n|^2, |c_n|^2 at the optimum
};

/// max over unit b, c of |z|^2(|b_n|^2 + |c_n|^2) + 2 Re((z*)^2 b_n* c_n <c|b>).
inline ChiNormResult chi_norm_max(int d, int n, const SeesawConfig& cfg = {}) {
    require(d >= 2 && n >= 0 && n < d, "need 0 <= n < d");
    const cplx z = z_default(d);
    // both directions write the objective as |u|^2 with u = z b_n c + z* c_n b
    auto objective = [&](const Vector& b, const Vector& c) { return (z * b(n) * c + std::conj(z) * c(n) * b).squaredNorm(); };
    ChiNormResult best{-1.0, 0.0, 0.0};
    std::vector<ChiNormResult> all(cfg.restarts);
    parallel_for(
        cfg.restarts,
        [&](int r) {
            Rng rng(mix64(cfg.seed ^ static_cast<std::uint64_t>(r)));
            Vector b = random_unit_vector(d, rng), c = random_unit_vector(d, rng);
            double prev = -1.0, cur = 0.0;
            for (int it = 0; it < cfg.max_iter; ++it) {
                Matrix A = std::conj(z) * c(n) * Matrix::Identity(d, d);
                A.col(n) += z * c;
                b = detail::extremal_vector(A.adjoint() * A, true, &b, &cur);
                Matrix B = z * b(n) * Matrix::Identity(d, d);
                B.col(n) += std::conj(z) * b;
                c = detail::extremal_vector(B.adjoint() * B, true, &c, &cur);
                if (detail::small_change(prev, cur, cfg.rel_tol)) break;
                prev = cur;
            }
            all[r] = {objective(b, c), std::norm(b(n)), std::norm(c(n))};
        },
        cfg.threads);
    for (const auto& r : all)
        if (r.value > best.value) best = r;
    return best;
}

/// Lower bound 1 - d/(d^2 - 1) on the geometric measure of the flip-conjugate subspace.
inline double flip_conjugate_analytic_bound(int d) {
    require(d >= 2, "local dimension must be at least 2");
    return 1.0 - double(d) / (double(d) * d - 1.0);
}

}  // namespace entlab
