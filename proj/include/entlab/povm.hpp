#pragma once

// Qutrit-ancilla permutation test on three parties, Tr(rho^3) by three
// routes, Tsallis entropies and the generalized concentratable entanglement.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "entlab/symmetry.hpp"

namespace entlab {

/// Ancilla (dimension 3) times an n-party system, ancilla most significant.
struct HybridRegister {
    std::vector<int> system_dims;
    Vector amplitudes;  // length 3 * prod(system_dims)

    long system_dim() const { return detail::dim_product(system_dims); }

    static HybridRegister prepare(const StateVector& psi) {
        HybridRegister r{psi.dims(), Vector::Zero(3 * psi.dim())};
        r.amplitudes.head(psi.dim()) = psi.amplitudes();
        return r;
    }

    /// U on the ancilla.
    void apply_ancilla(const Matrix& U) {
        const long D = system_dim();
        Vector out = Vector::Zero(amplitudes.size());
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                if (U(i, k) != 0.0) out.segment(i * D, D) += U(i, k) * amplitudes.segment(k * D, D);
        amplitudes = std::move(out);
    }

    /// sum_k |k><k| x ops[k].
    void apply_controlled(const std::array<Matrix, 3>& ops) {
        const long D = system_dim();
        for (int k = 0; k < 3; ++k) amplitudes.segment(k * D, D) = ops[k] * amplitudes.segment(k * D, D);
    }

    double outcome_probability(int i) const {
        const long D = system_dim();
        return amplitudes.segment(i * D, D).squaredNorm();
    }
};

/// Discrete Fourier transform on a qutrit, F|j> = sum_k omega^{jk} |k> / sqrt 3.
inline Matrix qutrit_fourier() {
    Matrix f(3, 3);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) f(k, j) = std::pow(omega, j * k) / std::sqrt(3.0);
    return f;
}

struct MeasurementRecord {
    std::array<double, 3> probabilities{};
    bool exact = true;
    long shots = 0;
    std::array<long, 3> counts{};
    std::uint64_t seed = 0;
};

namespace detail {

inline double uniform01(Rng& rng) { return (rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

/// F on the ancilla, controlled {1, T^2, T}, then F^dagger; ancilla outcome
/// 0 -> Pi_S + Pi_A, 1 -> Pi_Jbar, 2 -> Pi_J. shots = 0 gives exact mode.
inline MeasurementRecord permutation_test(const StateVector& psi, long shots = 0, std::uint64_t seed = 0,
                                          int threads = 0) {
    require(psi.parties() == 3, "the permutation test acts on three parties");
    require(shots >= 0, "shots must be nonnegative");
    const int d = psi.local_dim();
    const PermutationSet p = build_permutations(d, 3);
    HybridRegister reg = HybridRegister::prepare(psi);
    const Matrix F = qutrit_fourier();
    reg.apply_ancilla(F);
    reg.apply_controlled({Matrix::Identity(psi.dim(), psi.dim()), p.T2().matrix(), p.T().matrix()});
    reg.apply_ancilla(F.adjoint());

    MeasurementRecord rec;
    double total = 0.0;
    for (int i = 0; i < 3; ++i) total += rec.probabilities[i] = reg.outcome_probability(i);
    for (auto& q : rec.probabilities) q /= total;
    rec.exact = shots == 0;
    rec.shots = shots;
    rec.seed = seed;
    if (rec.exact) return rec;

    constexpr long chunk = 10000;
    const int nchunks = static_cast<int>((shots + chunk - 1) / chunk);
    std::vector<std::array<long, 3>> partial(nchunks, {0, 0, 0});
    parallel_for(
        nchunks,
        [&](int c) {
            Rng rng(derive_seed(seed, "povm", c));
            const long n = std::min(chunk, shots - c * chunk);
            for (long s = 0; s < n; ++s) {
                const double u = detail::uniform01(rng);
                const int o = u < rec.probabilities[0] ? 0 : (u < rec.probabilities[0] + rec.probabilities[1] ? 1 : 2);
                ++partial[c][o];
            }
        },
        threads);
    for (const auto& c : partial)
        for (int i = 0; i < 3; ++i) rec.counts[i] += c[i];
    return rec;
}

namespace detail {

inline void check_density(const Operator& rho) {
    require(rho.is_hermitian(1e-10), "density operator must be Hermitian");
    require(std::abs(rho.trace() - 1.0) <= 1e-10, "density operator must have unit trace");
    require(min_eigenvalue(rho.matrix()) >= -1e-10, "density operator must be positive semidefinite");
}

}  // namespace detail

struct TraceCube {
    double permutation;   // Tr(T rho^{x3})
    double eigenvalues;   // sum lambda^3
    double probability;   // (3 p0 - 1) / 2 with p0 = Tr(Pi_0 rho^{x3})
};

/// Tr(rho^3) for a state on a single system of total dimension <= 8.
inline TraceCube trace_cube(const Operator& rho) {
    detail::check_density(rho);
    const long D = rho.dim();
    require(D <= 8, "trace_cube builds three copies and is capped at dimension 8");
    const int Di = static_cast<int>(D);
    const PermutationSet p = build_permutations(Di, 3);
    const Matrix r3 = tensor_power(rho.matrix(), 3);
    TraceCube t{};
    t.permutation = (p.T().matrix() * r3).trace().real();
    const RealVector ev = eigenvalues(rho.matrix());
    t.eigenvalues = ev.array().cube().sum();
    const Matrix P0 = (p.identity + p.T() + p.T2()).matrix() / 3.0;
    const double p0 = (P0 * r3).trace().real();
    t.probability = (3.0 * p0 - 1.0) / 2.0;
    return t;
}

/// Tr(rho^K) from the spectrum.
inline double trace_power(const Operator& rho, int K) {
    const RealVector ev = eigenvalues(rho.matrix());
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) s += std::pow(std::max(ev(i), 0.0), K);
    return s;
}

/// Tsallis entropy (1 - Tr rho^K) / (K - 1) for integer K >= 2.
inline double tsallis(const Operator& rho, int K) {
    require(K > 1, "Tsallis order must be an integer greater than 1");
    detail::check_density(rho);
    return (1.0 - trace_power(rho, K)) / (K - 1.0);
}

enum class GceRoute { eigenvalues, permutation_test };

/// Mean of T_K(rho_alpha) over all subsets alpha of s (the empty set gives 0).
/// The permutation-test route evaluates Tr(rho_alpha^3) from the outcome-0
/// probability on three copies and needs K = 3.
inline double gce(const StateVector& psi, const std::vector<int>& s, int K = 3,
                  GceRoute route = GceRoute::eigenvalues) {
    require(!s.empty(), "subsystem set must be nonempty");
    detail::check_party_set(s, psi.parties());
    require(K > 1, "Tsallis order must be an integer greater than 1");
    require(route == GceRoute::eigenvalues || K == 3, "the permutation-test route gives Tr(rho^3) only");
    const int m = static_cast<int>(s.size());
    double sum = 0.0;
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> alpha;
        for (int k = 0; k < m; ++k)
            if (mask & (1 << k)) alpha.push_back(s[k]);
        std::sort(alpha.begin(), alpha.end());
        const Operator rho = reduced_density(psi, alpha);
        if (route == GceRoute::eigenvalues)
            sum += tsallis(rho, K);
        else
            sum += (1.0 - trace_cube(rho).probability) / 2.0;
    }
    return sum / static_cast<double>(1 << m);
}

}  // namespace entlab
