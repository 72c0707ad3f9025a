#pragma once

// PPT relaxations, invariant-state boundary problems, the GME decision for
// U^{x3}-invariant states and the search for PPT entangled GME states.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "entlab/sdp.hpp"
#include "entlab/witness.hpp"

namespace entlab {

namespace detail {

inline std::pair<long, long> pt_index(long r, long c, const std::vector<int>& dims, const std::vector<bool>& mask) {
    std::vector<int> rd, cd;
    digits_of(r, dims, rd);
    digits_of(c, dims, cd);
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (mask[k]) std::swap(rd[k], cd[k]);
    return {index_of(rd, dims), index_of(cd, dims)};
}

inline std::vector<bool> party_mask(const std::vector<int>& parties, int n) {
    check_party_set(parties, n);
    std::vector<bool> m(n, false);
    for (int p : parties) m[p] = true;
    return m;
}

}  // namespace detail

struct StateSdpResult {
    double value = 0.0;
    Operator rho;
    SdpSolution solution;
};

/// max Tr(O rho) over all density matrices rho on O's space with rho^{T_S} >= 0
/// for every listed party set S. The full Hermitian matrix is the variable.
inline StateSdpResult full_state_max(const Operator& O, const std::vector<std::vector<int>>& pt_sets,
                                     const SdpOptions& opt = {}) {
    require(O.is_hermitian(1e-10), "objective must be Hermitian");
    require(O.dim() <= 36, "full-matrix state SDP is capped at dimension 36");
    const auto& dims = O.dims();
    const int D = static_cast<int>(O.dim());
    const int m = D * D;
    LmiProblem p(m);
    // variable layout: diagonal entries, then (Re, Im) of each upper off-diagonal entry
    std::vector<std::vector<Triplet>> basis(m);
    int v = 0;
    for (int k = 0; k < D; ++k) basis[v++] = {{k, k, 1.0}};
    for (int k = 0; k < D; ++k)
        for (int l = k + 1; l < D; ++l) {
            basis[v++] = {{k, l, 1.0}, {l, k, 1.0}};
            basis[v++] = {{k, l, cplx(0, 1)}, {l, k, cplx(0, -1)}};
        }
    for (int i = 0; i < m; ++i) {
        cplx tr = 0.0;
        for (const auto& e : basis[i]) tr += O.matrix()(e.c, e.r) * e.v;
        p.c(i) = -tr.real();
    }
    {
        LmiBlock& b = p.add_block(D);
        for (int i = 0; i < m; ++i) b.A[i] = basis[i];
    }
    for (const auto& S : pt_sets) {
        const auto mask = detail::party_mask(S, O.parties());
        LmiBlock& b = p.add_block(D);
        for (int i = 0; i < m; ++i)
            for (const auto& e : basis[i]) {
                const auto [r, c] = detail::pt_index(e.r, e.c, dims, mask);
                b.A[i].push_back({static_cast<int>(r), static_cast<int>(c), e.v});
            }
    }
    RealVector tr = RealVector::Zero(m);
    tr.head(D).setOnes();
    p.add_equality(tr, 1.0);
    RealVector x0 = RealVector::Zero(m);
    x0.head(D).setConstant(1.0 / D);
    StateSdpResult res;
    res.solution = solve_lmi(p, opt, x0);
    if (res.solution.status == SdpStatus::max_iter) throw convergence_error("state SDP did not converge");
    Matrix rho = Matrix::Zero(D, D);
    for (int i = 0; i < m; ++i)
        for (const auto& e : basis[i]) rho(e.r, e.c) += res.solution.x(i) * e.v;
    res.rho = Operator(dims, rho);
    res.value = -res.solution.objective;
    return res;
}

/// max Tr(Y rho) over two-party rho >= 0, Tr rho = 1, rho^{T_B} >= 0.
inline StateSdpResult ppt_relaxed_overlap(const Operator& Y, const SdpOptions& opt = {}) {
    require(Y.parties() == 2, "the relaxed overlap acts on two parties");
    for (int d : Y.dims()) require(d <= 6, "ppt_relaxed_overlap is capped at local dimension 6");
    return full_state_max(Y, {{0}}, opt);
}

// ---- U^{x3}-invariant states ----

/// {1, F12, F13, F23, T + T^2, i(T - T^2)}: a real basis of the Hermitian
/// U^{x3}-invariant operators.
inline std::vector<Operator> invariant_basis(int d) {
    const auto p = build_permutations(d, 3);
    const cplx I(0.0, 1.0);
    return {p.identity, p.F12(), p.F13(), p.F23(), p.T() + p.T2(), I * (p.T() - p.T2())};
}

/// The same basis partially transposed on the first party: a basis of the
/// Hermitian U* x U x U invariant operators.
inline std::vector<Operator> pt_invariant_basis(int d) {
    std::vector<Operator> b = invariant_basis(d);
    for (auto& op : b) op = partial_transpose(op, {0});
    return b;
}

/// rho = r0 1 + r12 F12 + r13 F13 + r23 F23 + t T + t* T^2.
struct InvariantState {
    int local_dim = 0;
    std::array<double, 6> coeffs{};  // r0, r12, r13, r23, Re t, Im t

    /// Coefficients in invariant_basis order (t T + t* T^2 = Re t (T + T^2) + Im t i(T - T^2)).
    std::array<double, 6> basis_weights() const { return coeffs; }

    Operator matrix() const {
        const auto b = invariant_basis(local_dim);
        const auto w = basis_weights();
        Operator r = Operator::zero(std::vector<int>(3, local_dim));
        for (int k = 0; k < 6; ++k) r += w[k] * b[k];
        return r;
    }

    /// a Pi_A + b Pi_S + cJ Pi_J + cJbar Pi_Jbar.
    static InvariantState from_spectral(int d, double a, double b, double cJ, double cJbar) {
        InvariantState s;
        s.local_dim = d;
        const cplx t = (a + b) / 6.0 + cJ * std::conj(omega) / 3.0 + cJbar * omega / 3.0;
        const double rij = (b - a) / 6.0;
        s.coeffs = {(a + b) / 6.0 + (cJ + cJbar) / 3.0, rij, rij, rij, t.real(), t.imag()};
        return s;
    }

    bool is_state(double psd_tol = 1e-9, double tr_tol = 1e-10) const {
        const Operator r = matrix();
        return std::abs(r.trace().real() - 1.0) <= tr_tol && min_eigenvalue(r.matrix()) >= -psd_tol;
    }
};

namespace detail {

// max Tr(O rho) over rho = sum_k x_k B_k with rho >= 0, Tr rho = 1 and the
// listed partial transposes >= 0. B_0 must be the identity.
inline StateSdpResult family_max(const std::vector<Operator>& B, const Operator& O,
                                 const std::vector<std::vector<int>>& pt_sets, const SdpOptions& opt) {
    const int m = static_cast<int>(B.size());
    const long D = O.dim();
    LmiProblem p(m);
    RealVector tr(m);
    for (int k = 0; k < m; ++k) {
        p.c(k) = -(O.matrix().cwiseProduct(B[k].matrix().transpose())).sum().real();
        tr(k) = B[k].trace().real();
    }
    {
        LmiBlock& b = p.add_block(static_cast<int>(D));
        for (int k = 0; k < m; ++k) b.set_coefficient(k, B[k].matrix());
    }
    for (const auto& S : pt_sets) {
        LmiBlock& b = p.add_block(static_cast<int>(D));
        for (int k = 0; k < m; ++k) b.set_coefficient(k, partial_transpose(B[k], S).matrix());
    }
    p.add_equality(tr, 1.0);
    RealVector x0 = RealVector::Zero(m);
    x0(0) = 1.0 / D;
    StateSdpResult res;
    res.solution = solve_lmi(p, opt, x0);
    if (res.solution.status == SdpStatus::max_iter) throw convergence_error("invariant SDP did not converge");
    Operator rho = Operator::zero(O.dims());
    for (int k = 0; k < m; ++k) rho += res.solution.x(k) * B[k];
    res.rho = rho;
    res.value = -res.solution.objective;
    return res;
}

}  // namespace detail

enum class BoundaryFamily { quantum, ppt_all, ppt_single };

/// The PT constraint sets of a family; `party` selects X for ppt_single.
inline std::vector<std::vector<int>> family_pt_sets(BoundaryFamily f, int party = 0) {
    switch (f) {
        case BoundaryFamily::quantum: return {};
        case BoundaryFamily::ppt_all: return {{0}, {1}, {2}};
        case BoundaryFamily::ppt_single:
            require(party >= 0 && party < 3, "party index out of range");
            return {{party}};
    }
    return {};
}

struct BoundaryResult {
    double value = 0.0;
    double wminus = 0.0, wplus = 0.0;  // expectations at the optimizer
    Operator rho;
};

/// max <cos(theta) A + sin(theta) B> over invariant states of the family,
/// with (A, B) = (W-, W+) (pt = false) or their first-party partial transposes.
inline BoundaryResult invariant_boundary(int d, double theta, BoundaryFamily family, int party = 0, bool pt = false,
                                         const SdpOptions& opt = {}) {
    require(d >= 2 && d <= 5, "invariant boundaries are provided for 2 <= d <= 5");
    const auto w = pt ? build_pt_witnesses(d) : witnesses_from_permutations(d);
    const Operator O = std::cos(theta) * w.minus + std::sin(theta) * w.plus;
    BoundaryResult r;
    if (family == BoundaryFamily::quantum) {
        const auto e = hermitian_eig(O);
        const Vector v = e.vectors.col(e.vectors.cols() - 1);
        r.value = e.values(e.values.size() - 1);
        r.rho = Operator(O.dims(), v * v.adjoint());
    } else {
        const auto s = detail::family_max(pt ? pt_invariant_basis(d) : invariant_basis(d), O,
                                          family_pt_sets(family, party), opt);
        r.value = s.value;
        r.rho = s.rho;
    }
    r.wminus = (w.minus * r.rho).trace().real();
    r.wplus = (w.plus * r.rho).trace().real();
    return r;
}

/// Same problem with the full d^3 x d^3 matrix variable (cross-check, d <= 3).
inline BoundaryResult full_matrix_boundary(int d, double theta, BoundaryFamily family, int party = 0,
                                           bool pt = false, const SdpOptions& opt = {}) {
    require(d >= 2 && d <= 3, "full-matrix boundaries are capped at d = 3");
    const auto w = pt ? build_pt_witnesses(d) : witnesses_from_permutations(d);
    const Operator O = std::cos(theta) * w.minus + std::sin(theta) * w.plus;
    const auto s = full_state_max(O, family_pt_sets(family, party), opt);
    BoundaryResult r;
    r.value = s.value;
    r.rho = s.rho;
    r.wminus = (w.minus * r.rho).trace().real();
    r.wplus = (w.plus * r.rho).trace().real();
    return r;
}

struct GmeVerdict {
    bool gme = false;
    double optimum = 0.0;            // min Tr(rho W) with Tr W = d^3
    std::array<double, 6> witness{};  // W in invariant_basis coordinates
    SdpSolution solution;
};

/// Minimizes Tr(rho W) over invariant W with <0|W|0> >= 0 on all three
/// bipartitions and Tr W = d^3. A negative optimum certifies GME.
inline GmeVerdict gme_decide(const InvariantState& rho, double tol = 1e-7, const SdpOptions& opt = {}) {
    const int d = rho.local_dim;
    require(d >= 2, "invalid invariant state");
    const auto B = invariant_basis(d);
    const Operator R = rho.matrix();
    LmiProblem p(6);
    RealVector tr(6);
    for (int k = 0; k < 6; ++k) {
        p.c(k) = (R.matrix().cwiseProduct(B[k].matrix().transpose())).sum().real();
        tr(k) = B[k].trace().real();
    }
    const Vector zero = Vector::Unit(d, 0);
    for (int X = 0; X < 3; ++X) {
        LmiBlock& b = p.add_block(d * d);
        for (int k = 0; k < 6; ++k) b.set_coefficient(k, partial_expectation(B[k], {X}, zero).matrix());
    }
    p.add_equality(tr, std::pow(double(d), 3));
    p.add_box({0, 1, 2, 3, 4, 5}, -1e3, 1e3);
    RealVector w0 = RealVector::Zero(6);
    w0(0) = 1.0;
    GmeVerdict v;
    v.solution = solve_lmi(p, opt, w0);
    if (v.solution.status != SdpStatus::optimal) throw convergence_error("GME decision SDP failed");
    v.optimum = v.solution.objective;
    for (int k = 0; k < 6; ++k) v.witness[k] = v.solution.x(k);
    v.gme = v.optimum < -tol;
    return v;
}

struct PptGmeRow {
    double pin = 0.0;  // requested <W+>
    double a = 0.0, b = 0.0, c = 0.0;
    double wminus = 0.0, wplus = 0.0;
    double min_pt_eig = 0.0;
    double trace_P = 0.0;
    bool gme = false;
    double gme_optimum = 0.0;
};

struct PptGmeSweep {
    int local_dim = 0;
    double pin_lo = 0.0, pin_hi = 0.0;
    std::vector<PptGmeRow> rows;
    std::string note;

    std::vector<PptGmeRow> candidates(double a_tol = 1e-4) const {
        std::vector<PptGmeRow> out;
        for (const auto& r : rows)
            if (r.a >= a_tol && r.gme) out.push_back(r);
        return out;
    }
};

namespace detail {

// rho = a Pi_A + b Pi_S + c Pi_Jbar with a, b, c >= 0, Tr rho = 1 and all
// three partial transposes >= 0; objective `obj` in (a, b, c) (minimized),
// optional pin Tr(W+ rho) = w.
inline SdpSolution ppt_family_problem(int d, const RealVector& obj, const double* pin, const SdpOptions& opt) {
    const auto t = tripartite_projectors(d);
    const auto sc = spectral_coefficients(d);
    const double trA = t.A.trace().real(), trS = t.S.trace().real(), trJ = t.Jbar.trace().real();
    LmiProblem p(3);
    p.c = obj;
    {
        RealVector e0 = RealVector::Unit(3, 0), e1 = RealVector::Unit(3, 1), e2 = RealVector::Unit(3, 2);
        p.add_linear_inequalities({e0, e1, e2}, {0.0, 0.0, 0.0});
    }
    const std::array<const Operator*, 3> P{&t.A, &t.S, &t.Jbar};
    for (int X = 0; X < 3; ++X) {
        LmiBlock& b = p.add_block(static_cast<int>(t.A.dim()));
        for (int k = 0; k < 3; ++k) b.set_coefficient(k, partial_transpose(*P[k], {X}).matrix());
    }
    RealVector tr(3);
    tr << trA, trS, trJ;
    p.add_equality(tr, 1.0);
    if (pin) {
        RealVector w(3);
        w << sc.c_A * trA, sc.c_S * trS, sc.c_J * trJ;
        p.add_equality(w, *pin);
    }
    RealVector x0(3);
    x0 << 1.0 / (3 * trA), 1.0 / (3 * trS), 1.0 / (3 * trJ);
    return solve_lmi(p, opt, x0);
}

}  // namespace detail

/// Largest antisymmetric weight a over the PPT family at Tr(W+ rho) = pin.
inline SdpSolution max_antisymmetric_weight(int d, double pin, const SdpOptions& opt = {}) {
    require(d >= 3 && d <= 4, "the PPT family sweep supports d = 3, 4");
    RealVector obj = RealVector::Zero(3);
    obj(0) = -1.0;
    return detail::ppt_family_problem(d, obj, &pin, opt);
}

/// Sweeps <W+> over its feasible range for the PPT family and maximizes the
/// antisymmetric weight a at each pin; every row is re-certified with
/// gme_decide and Tr(P rho).
inline PptGmeSweep find_ppt_gme(int d, int sweep_points, const SdpOptions& opt = {}, int threads = 0) {
    require(d >= 2 && d <= 4, "find_ppt_gme supports d = 2, 3, 4");
    require(sweep_points >= 1, "need at least one sweep point");
    PptGmeSweep out;
    out.local_dim = d;
    if (d == 2) {
        out.note = "no antisymmetric subspace for qubits; PPT and biseparability coincide for this family";
        return out;
    }
    const auto t = tripartite_projectors(d);
    const auto sc = spectral_coefficients(d);
    const double trA = t.A.trace().real(), trS = t.S.trace().real(), trJ = t.Jbar.trace().real();
    RealVector wp(3);
    wp << sc.c_A * trA, sc.c_S * trS, sc.c_J * trJ;
    const auto lo = detail::ppt_family_problem(d, wp, nullptr, opt);
    const auto hi = detail::ppt_family_problem(d, -wp, nullptr, opt);
    if (lo.status != SdpStatus::optimal || hi.status != SdpStatus::optimal)
        throw convergence_error("could not bracket the <W+> range of the PPT family");
    out.pin_lo = lo.objective;
    out.pin_hi = -hi.objective;
    const auto gme = build_gme_witnesses(d);
    out.rows.resize(sweep_points);
    parallel_for(
        sweep_points,
        [&](int k) {
            PptGmeRow& row = out.rows[k];
            row.pin = out.pin_lo + (out.pin_hi - out.pin_lo) * (k + 1.0) / (sweep_points + 1.0);
            RealVector obj = RealVector::Zero(3);
            obj(0) = -1.0;
            const auto s = detail::ppt_family_problem(d, obj, &row.pin, opt);
            if (s.status != SdpStatus::optimal) return;
            row.a = s.x(0);
            row.b = s.x(1);
            row.c = s.x(2);
            const Operator rho = row.a * t.A + row.b * t.S + row.c * t.Jbar;
            row.wplus = wp.dot(s.x);
            row.wminus = spectral_coefficients(d).alpha * row.c * trJ;
            row.min_pt_eig = 1e300;
            for (int X = 0; X < 3; ++X)
                row.min_pt_eig = std::min(row.min_pt_eig, min_eigenvalue(partial_transpose(rho, {X}).matrix()));
            row.trace_P = (gme.P * rho).trace().real();
            const auto v = gme_decide(InvariantState::from_spectral(d, row.a, row.b, 0.0, row.c), 1e-7, opt);
            row.gme = v.gme;
            row.gme_optimum = v.optimum;
        },
        threads);
    return out;
}

}  // namespace entlab
