#pragma once

// Gell-Mann basis, su(d) structure constants and the three-party witness
// observables built from them.

#include <cmath>
#include <string>
#include <vector>

#include "entlab/symmetry.hpp"

namespace entlab {

/// Traceless Hermitian basis of su(d) normalized to Tr(l_i l_j) = d delta_ij.
/// Order: symmetric pairs (j<k), antisymmetric pairs (j<k), diagonal l = 1..d-1.
struct GellMannBasis {
    int local_dim = 0;
    std::vector<Matrix> matrices;

    std::size_t size() const { return matrices.size(); }
};

inline GellMannBasis gellmann_basis(int d) {
    require(d >= 2, "local dimension must be at least 2");
    const double s = std::sqrt(d / 2.0);
    const cplx I(0.0, 1.0);
    GellMannBasis g{d, {}};
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Matrix m = Matrix::Zero(d, d);
            m(j, k) = m(k, j) = s;
            g.matrices.push_back(m);
        }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Matrix m = Matrix::Zero(d, d);
            m(j, k) = -I * s;
            m(k, j) = I * s;
            g.matrices.push_back(m);
        }
    for (int l = 1; l < d; ++l) {
        Matrix m = Matrix::Zero(d, d);
        const double c = s * std::sqrt(2.0 / (l * (l + 1.0)));
        for (int j = 0; j < l; ++j) m(j, j) = c;
        m(l, l) = -l * c;
        g.matrices.push_back(m);
    }
    return g;
}

/// Dense (n^3) arrays, flat index (i*n + j)*n + k.
struct StructureConstants {
    int local_dim = 0;
    int n = 0;
    std::vector<double> kappa_minus;
    std::vector<double> kappa_plus;

    double minus(int i, int j, int k) const { return kappa_minus[(i * n + j) * n + k]; }
    double plus(int i, int j, int k) const { return kappa_plus[(i * n + j) * n + k]; }
};

namespace detail {

// Tr(A B C) for all triples of a basis, flat as above.
inline std::vector<cplx> triple_traces(const std::vector<Matrix>& b) {
    const int n = static_cast<int>(b.size());
    std::vector<cplx> t(static_cast<std::size_t>(n) * n * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const Matrix jk = b[j] * b[k];
            for (int i = 0; i < n; ++i) t[(i * n + j) * n + k] = (b[i].transpose().cwiseProduct(jk)).sum();
        }
    return t;
}

}  // namespace detail

/// kappa-_{ijk} = -i/d^2 Tr(l_i [l_j, l_k]),  kappa+_{ijk} = 1/d^2 Tr(l_i {l_j, l_k}).
inline StructureConstants structure_constants(const std::vector<Matrix>& basis, int d) {
    const int n = static_cast<int>(basis.size());
    const auto t = detail::triple_traces(basis);
    StructureConstants sc{d, n, std::vector<double>(t.size()), std::vector<double>(t.size())};
    const cplx I(0.0, 1.0);
    const double dd = double(d) * d;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const cplx jk = t[(i * n + j) * n + k];
                const cplx kj = t[(i * n + k) * n + j];
                const std::size_t f = (i * n + j) * n + k;
                sc.kappa_minus[f] = (-I / dd * (jk - kj)).real();
                sc.kappa_plus[f] = ((jk + kj) / dd).real();
            }
    return sc;
}

inline StructureConstants structure_constants(int d) {
    return structure_constants(gellmann_basis(d).matrices, d);
}

namespace detail {

struct SparseEntry {
    int r, c;
    cplx v;
};

inline std::vector<SparseEntry> nonzeros(const Matrix& m, double tol = 1e-15) {
    std::vector<SparseEntry> out;
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
            if (std::abs(m(r, c)) > tol) out.push_back({r, c, m(r, c)});
    return out;
}

// sum_{ijk} coeff[ijk] b_i x b_j x b_k, skipping zero coefficients.
inline Matrix triple_sum(const std::vector<Matrix>& b, const std::vector<double>& coeff, int d) {
    const int n = static_cast<int>(b.size());
    std::vector<std::vector<SparseEntry>> nz;
    nz.reserve(n);
    for (const auto& m : b) nz.push_back(nonzeros(m));
    const long D = ipow(d, 3);
    Matrix out = Matrix::Zero(D, D);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const double c = coeff[(i * n + j) * n + k];
                if (std::abs(c) < 1e-14) continue;
                for (const auto& a : nz[i])
                    for (const auto& e : nz[j]) {
                        const cplx ae = c * a.v * e.v;
                        const long r0 = (long(a.r) * d + e.r) * d, c0 = (long(a.c) * d + e.c) * d;
                        for (const auto& f : nz[k]) out(r0 + f.r, c0 + f.c) += ae * f.v;
                    }
            }
    return out;
}

}  // namespace detail

struct WitnessPair {
    Operator minus;
    Operator plus;
    bool plus_trivial = false;  // d = 2: kappa+ vanishes and plus is the zero operator
};

/// W-+ = sum kappa-+_{ijk} l_i x l_j x l_k over an arbitrary basis with Tr(G_i G_j) = d delta_ij.
inline WitnessPair build_witnesses_from_basis(const std::vector<Matrix>& basis, int d) {
    require(static_cast<int>(basis.size()) == d * d - 1, "basis must have d^2 - 1 elements");
    const auto sc = structure_constants(basis, d);
    const std::vector<int> dims(3, d);
    WitnessPair w;
    w.minus = Operator(dims, detail::triple_sum(basis, sc.kappa_minus, d));
    w.plus = Operator(dims, detail::triple_sum(basis, sc.kappa_plus, d));
    w.plus_trivial = (d == 2);
    return w;
}

inline WitnessPair build_witnesses(int d) {
    return build_witnesses_from_basis(gellmann_basis(d).matrices, d);
}

/// The same operators from the permutation decomposition.
inline WitnessPair witnesses_from_permutations(int d) {
    const PermutationSet p = build_permutations(d, 3);
    const cplx I(0.0, 1.0);
    WitnessPair w;
    w.minus = (I * double(d)) * (p.T() - p.T2());
    if (d == 2) {
        w.plus = Operator::zero(p.identity.dims());
        w.plus_trivial = true;
    } else {
        w.plus = double(d) * (p.T() + p.T2()) - 2.0 * (p.F12() + p.F23() + p.F13()) + (4.0 / d) * p.identity;
    }
    return w;
}

struct SpectralCoefficients {
    double alpha, c_S, c_A, c_J;
};

inline SpectralCoefficients spectral_coefficients(int d) {
    require(d >= 3, "spectral coefficients of W+ need d >= 3");
    return {d * std::sqrt(3.0), 2.0 * (d - 1) * (d - 2) / d, 2.0 * (d + 1) * (d + 2) / d,
            -1.0 * (d + 2) * (d - 2) / d};
}

enum class WitnessKind { epsilon, minus, plus };

inline std::string witness_name(WitnessKind w) {
    switch (w) {
        case WitnessKind::epsilon: return "W_epsilon";
        case WitnessKind::minus: return "W_minus";
        case WitnessKind::plus: return "W_plus";
    }
    return "?";
}

/// Upper bounds on <W> for fully separable, biseparable and arbitrary states.
struct WitnessBounds {
    double fs, bs, q;
    WitnessKind witness;
};

inline WitnessBounds analytic_bounds(int d, WitnessKind w) {
    require(d >= 2, "local dimension must be at least 2");
    if (d == 2) {
        require(w != WitnessKind::plus, "W+ is the zero operator for qubits");
        return {1.0, 2.0, 2.0 * std::sqrt(3.0), WitnessKind::epsilon};
    }
    require(w != WitnessKind::epsilon, "W_epsilon is the qubit case; use minus for d >= 3");
    if (w == WitnessKind::minus) return {d / 2.0, double(d), d * std::sqrt(3.0), w};
    const auto c = spectral_coefficients(d);
    if (d == 3) return {4.0 / 3.0, 10.0 / 3.0, 40.0 / 3.0, w};
    return {c.c_S, c.c_S, c.c_A, w};
}

/// <anchor|_party W |anchor>_party on the two remaining parties.
inline Operator conditional_observable(const Operator& W, int party, const StateVector& anchor) {
    require(party >= 0 && party < W.parties(), "party index out of range");
    require(anchor.parties() == 1 && anchor.dim() == W.dims()[party],
            "anchor must be a single-party vector of matching dimension");
    return partial_expectation(W, {party}, anchor.amplitudes());
}

inline WitnessPair build_pt_witnesses(int d) {
    const auto w = build_witnesses(d);
    return {partial_transpose(w.minus, {0}), partial_transpose(w.plus, {0}), w.plus_trivial};
}

/// Tr((A x B) M) for a d^2 x d^2 matrix M.
inline cplx swap_trace(const Matrix& A, const Matrix& B, const std::vector<detail::SparseEntry>& M, int d) {
    cplx s = 0.0;
    for (const auto& e : M) {
        // (A x B)_{(a b),(c d)} with (c d) = e.r, (a b) = e.c
        const int a = e.c / d, b = e.c % d, c = e.r / d, dd = e.r % d;
        s += A(a, c) * B(b, dd) * e.v;
    }
    return s;
}

/// Partially transposed pair rebuilt with F^{T_1} inside the structure-constant trace.
inline WitnessPair pt_witnesses_swap_trick(int d) {
    const auto g = gellmann_basis(d);
    const auto& b = g.matrices;
    const int n = static_cast<int>(b.size());
    const Matrix FT1 = partial_transpose(flip_operator(2, d, 0, 1), {0}).matrix();
    const auto M = detail::nonzeros(FT1);
    const cplx I(0.0, 1.0);
    const double dd = double(d) * d;
    std::vector<double> km(static_cast<std::size_t>(n) * n * n), kp(km.size());
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const Matrix comm = b[j] * b[k] - b[k] * b[j];
            const Matrix anti = b[j] * b[k] + b[k] * b[j];
            for (int i = 0; i < n; ++i) {
                const std::size_t f = (i * n + j) * n + k;
                km[f] = (-I / dd * swap_trace(b[i], comm, M, d)).real();
                kp[f] = (swap_trace(b[i], anti, M, d) / dd).real();
            }
        }
    const std::vector<int> dims(3, d);
    return {Operator(dims, detail::triple_sum(b, km, d)), Operator(dims, detail::triple_sum(b, kp, d)), d == 2};
}

struct GmeWitnesses {
    Operator P, Pbar;
};

/// P = Pi_J - Pi_A, Pbar = Pi_Jbar - Pi_A.
inline GmeWitnesses build_gme_witnesses(int d) {
    require(d >= 3, "the GME witnesses need d >= 3");
    const auto t = tripartite_projectors(d);
    return {t.J - t.A, t.Jbar - t.A};
}

/// (4/9) 1 - Pi_J: nonnegative on fully separable states.
inline Operator chiral_fs_witness(int d) {
    return (4.0 / 9.0) * Operator::identity(3, d) - tripartite_projectors(d).J;
}

}  // namespace entlab
