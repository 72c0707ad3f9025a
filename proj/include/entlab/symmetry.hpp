#pragma once

// Permutation operators on (C^d)^{x n}, the tripartite symmetry projectors,
// the U*xUxU-covariant "flip-conjugate" subspaces and explicit bases.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "entlab/linalg.hpp"

namespace entlab {

/// P_sigma |a_0 ... a_{n-1}> = |a_{sigma[0]} ... a_{sigma[n-1]}>.
inline Operator permutation_operator(int n, int d, const std::vector<int>& sigma) {
    require(d >= 1 && n >= 1, "invalid permutation operator shape");
    require(static_cast<int>(sigma.size()) == n, "permutation has wrong length");
    detail::check_party_set(sigma, n);
    const std::vector<int> dims(n, d);
    const long D = detail::dim_product(dims);
    Matrix m = Matrix::Zero(D, D);
    std::vector<int> in, out(n);
    for (long c = 0; c < D; ++c) {
        detail::digits_of(c, dims, in);
        for (int k = 0; k < n; ++k) out[k] = in[sigma[k]];
        m(detail::index_of(out, dims), c) = 1.0;
    }
    return Operator(dims, std::move(m));
}

/// Exchange of parties i and j (0-based).
inline Operator flip_operator(int n, int d, int i, int j) {
    require(i >= 0 && j >= 0 && i < n && j < n && i != j, "flip needs two distinct parties");
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[i], sigma[j]);
    return permutation_operator(n, d, sigma);
}

/// |a_0 a_1 ... a_{n-1}> -> |a_{n-1} a_0 ... a_{n-2}>; for n = 3 this is T|abc> = |cab>.
inline Operator cycle_operator(int n, int d) {
    std::vector<int> sigma(n);
    for (int k = 0; k < n; ++k) sigma[k] = (k + n - 1) % n;
    return permutation_operator(n, d, sigma);
}

struct PermutationSet {
    int parties = 0;
    int local_dim = 0;
    Operator identity;
    Operator cycle;      // T
    Operator anticycle;  // T^dagger (= T^2 for three parties)
    std::map<std::pair<int, int>, Operator> flips;

    const Operator& T() const { return cycle; }
    const Operator& T2() const { return anticycle; }
    const Operator& F(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = flips.find({i, j});
        require(it != flips.end(), "no such flip");
        return it->second;
    }
    const Operator& F12() const { return F(0, 1); }
    const Operator& F13() const { return F(0, 2); }
    const Operator& F23() const { return F(1, 2); }
};

inline PermutationSet build_permutations(int d, int n = 3) {
    require(d >= 2, "local dimension must be at least 2");
    require(n >= 2 && n <= 4, "permutations are provided for 2, 3 or 4 parties");
    PermutationSet p;
    p.parties = n;
    p.local_dim = d;
    p.identity = Operator::identity(n, d);
    p.cycle = cycle_operator(n, d);
    p.anticycle = p.cycle.adjoint();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.flips.emplace(std::make_pair(i, j), flip_operator(n, d, i, j));
    return p;
}

struct PairProjectors {
    Operator S, A;
};

inline PairProjectors pair_projectors(int d) {
    require(d >= 2, "local dimension must be at least 2");
    const Operator one = Operator::identity(2, d);
    const Operator F = flip_operator(2, d, 0, 1);
    return {0.5 * (one + F), 0.5 * (one - F)};
}

struct TripartiteProjectors {
    Operator S, A, J, Jbar;
};

inline TripartiteProjectors tripartite_projectors(int d) {
    const PermutationSet p = build_permutations(d, 3);
    const Operator& one = p.identity;
    const Operator flips = p.F12() + p.F13() + p.F23();
    const Operator cyc = p.T() + p.T2();
    TripartiteProjectors out;
    out.S = (one + flips + cyc) / 6.0;
    out.A = (one - flips + cyc) / 6.0;
    out.J = (one + std::conj(omega) * p.T() + omega * p.T2()) / 3.0;
    out.Jbar = (one + omega * p.T() + std::conj(omega) * p.T2()) / 3.0;
    return out;
}

enum class SubspaceLabel { S, A, J, Jbar, J1, J2, I, Ibar, pairS, pairA };

inline std::string label_name(SubspaceLabel l) {
    switch (l) {
        case SubspaceLabel::S: return "S";
        case SubspaceLabel::A: return "A";
        case SubspaceLabel::J: return "J";
        case SubspaceLabel::Jbar: return "Jbar";
        case SubspaceLabel::J1: return "J1";
        case SubspaceLabel::J2: return "J2";
        case SubspaceLabel::I: return "I";
        case SubspaceLabel::Ibar: return "Ibar";
        case SubspaceLabel::pairS: return "pairS";
        case SubspaceLabel::pairA: return "pairA";
    }
    return "?";
}

struct SubspaceBasis {
    SubspaceLabel label;
    int local_dim;
    std::vector<StateVector> vectors;
    Operator projector;

    std::size_t size() const { return vectors.size(); }
};

/// Checks orthonormality and forms the span projector.
inline SubspaceBasis make_basis(SubspaceLabel label, int d, std::vector<StateVector> vecs) {
    require(!vecs.empty(), "empty basis");
    const auto dims = vecs.front().dims();
    Matrix P = Matrix::Zero(vecs.front().dim(), vecs.front().dim());
    for (std::size_t a = 0; a < vecs.size(); ++a) {
        require(vecs[a].dims() == dims, "basis vectors live on different spaces");
        for (std::size_t b = a + 1; b < vecs.size(); ++b)
            require(std::abs(vecs[a].inner(vecs[b])) <= 1e-12, "basis vectors are not orthogonal");
        P += vecs[a].amplitudes() * vecs[a].amplitudes().adjoint();
    }
    return {label, d, std::move(vecs), Operator(dims, std::move(P))};
}

/// Orthonormal basis of the range of a projector (eigenvalues near 1).
inline SubspaceBasis basis_from_projector(SubspaceLabel label, const Operator& P) {
    const auto eig = hermitian_eig(P);
    std::vector<StateVector> vecs;
    for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        if (eig.values(k) > 0.5) vecs.emplace_back(P.dims(), eig.vectors.col(k), 1e-10);
    return make_basis(label, P.local_dim(), std::move(vecs));
}

namespace detail {

inline StateVector cyclic_triplet(int d, std::array<int, 3> x, std::array<int, 3> y,
                                  std::array<int, 3> z) {
    const std::vector<int> dims(3, d);
    Vector v = Vector::Zero(ipow(d, 3));
    v(index_of({x[0], x[1], x[2]}, dims)) += 1.0;
    v(index_of({y[0], y[1], y[2]}, dims)) += omega;
    v(index_of({z[0], z[1], z[2]}, dims)) += omega * omega;
    return StateVector(dims, v / std::sqrt(3.0));
}

// phi_alpha, phi_beta for i<j (first = true gives the J1 part) or
// phi_gamma, phi_delta for i<j<k.
inline std::vector<StateVector> chiral_vectors(int d, bool pairs, bool triples) {
    std::vector<StateVector> out;
    if (pairs) {
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) out.push_back(cyclic_triplet(d, {i, i, j}, {i, j, i}, {j, i, i}));
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) out.push_back(cyclic_triplet(d, {j, j, i}, {j, i, j}, {i, j, j}));
    }
    if (triples) {
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                for (int k = j + 1; k < d; ++k)
                    out.push_back(cyclic_triplet(d, {i, j, k}, {j, k, i}, {k, i, j}));
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                for (int k = j + 1; k < d; ++k)
                    out.push_back(cyclic_triplet(d, {i, k, j}, {k, j, i}, {j, i, k}));
    }
    return out;
}

inline std::vector<StateVector> conjugated(const std::vector<StateVector>& v) {
    std::vector<StateVector> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.conjugate());
    return out;
}

}  // namespace detail

/// Basis of the chiral subspace (T|v> = omega|v>), or of its conjugate.
/// For d = 2 this is {|phi_1>, |phi_2>}.
inline SubspaceBasis chiral_basis(int d, bool anti = false) {
    require(d >= 2, "local dimension must be at least 2");
    auto v = detail::chiral_vectors(d, true, true);
    if (anti) v = detail::conjugated(v);
    return make_basis(anti ? SubspaceLabel::Jbar : SubspaceLabel::J, d, std::move(v));
}

/// The pair part (J1) or triple part (J2) of the chiral subspace.
inline SubspaceBasis chiral_part_basis(int d, int part) {
    require(part == 1 || part == 2, "chiral part must be 1 or 2");
    require(d >= (part == 1 ? 2 : 3), "the triple part needs d >= 3");
    return make_basis(part == 1 ? SubspaceLabel::J1 : SubspaceLabel::J2, d,
                      detail::chiral_vectors(d, part == 1, part == 2));
}

/// The two absolutely maximally entangled qutrit vectors with (i,j,k) = (0,1,2).
inline SubspaceBasis j2_basis() { return chiral_part_basis(3, 2); }

inline SubspaceBasis symmetric_basis(int d) {
    return basis_from_projector(SubspaceLabel::S, tripartite_projectors(d).S);
}

inline SubspaceBasis antisymmetric_basis(int d) {
    require(d >= 3, "three qubits have no antisymmetric subspace");
    return basis_from_projector(SubspaceLabel::A, tripartite_projectors(d).A);
}

inline cplx z_default(int d) {
    require(d >= 2, "local dimension must be at least 2");
    return 0.5 * cplx(1.0, std::sqrt((d + 1.0) / (d - 1.0)));
}

/// Modular shift X|i> = |i+1 mod d>.
inline Matrix shift_matrix(int d) {
    Matrix x = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) x((i + 1) % d, i) = 1.0;
    return x;
}

/// |phi_n> ~ z* sum_i |i n i> + z sum_i |i i n>, n = 0..d-1; `bar` swaps z and z*.
inline SubspaceBasis flip_conjugate_basis(int d, cplx z, bool bar = false) {
    require(d >= 2, "local dimension must be at least 2");
    require(std::abs(z) > 0.0, "z must be nonzero");
    if (bar) z = std::conj(z);
    const std::vector<int> dims(3, d);
    std::vector<StateVector> vecs;
    for (int n = 0; n < d; ++n) {
        Vector v = Vector::Zero(ipow(d, 3));
        for (int i = 0; i < d; ++i) {
            v(detail::index_of({i, n, i}, dims)) += std::conj(z);
            v(detail::index_of({i, i, n}, dims)) += z;
        }
        vecs.push_back(StateVector::normalized(dims, v));
    }
    return make_basis(bar ? SubspaceLabel::Ibar : SubspaceLabel::I, d, std::move(vecs));
}

inline SubspaceBasis flip_conjugate_basis(int d, bool bar = false) {
    return flip_conjugate_basis(d, z_default(d), bar);
}

/// Permutation operators partially transposed on the first party.
struct PtPermutations {
    Operator F12, F13, F23, T, T2;
};

inline PtPermutations pt_permutations(int d) {
    const PermutationSet p = build_permutations(d, 3);
    const std::vector<int> first{0};
    return {partial_transpose(p.F12(), first), partial_transpose(p.F13(), first),
            partial_transpose(p.F23(), first), partial_transpose(p.T(), first),
            partial_transpose(p.T2(), first)};
}

struct FlipConjugateProjectors {
    Operator I, Ibar;
};

/// Projectors onto the flip-conjugate subspaces from partially transposed
/// permutations. Coefficients are fixed so that Pi_I is the span projector
/// of flip_conjugate_basis(d).
inline FlipConjugateProjectors flip_conjugate_projectors(int d) {
    const PtPermutations q = pt_permutations(d);
    const cplx z = z_default(d);
    const Operator flips = std::norm(z) * (q.F12 + q.F13);
    FlipConjugateProjectors out;
    out.I = (flips + (z * z) * q.T + (std::conj(z) * std::conj(z)) * q.T2) / (d + 1.0);
    out.Ibar = (flips + (std::conj(z) * std::conj(z)) * q.T + (z * z) * q.T2) / (d + 1.0);
    return out;
}

// ---- four-party and phase-optimized states ----

/// (|100> + |010> + |001>)/sqrt 3 embedded in local dimension d.
inline StateVector w_state(int d = 2) {
    require(d >= 2, "local dimension must be at least 2");
    const std::vector<int> dims(3, d);
    Vector v = Vector::Zero(ipow(d, 3));
    v(detail::index_of({1, 0, 0}, dims)) = v(detail::index_of({0, 1, 0}, dims)) =
        v(detail::index_of({0, 0, 1}, dims)) = 1.0 / std::sqrt(3.0);
    return StateVector(dims, v);
}

/// Fully antisymmetric three-qutrit vector (1/sqrt 6) sum eps_ijk |ijk>.
inline StateVector psi3_minus() {
    const std::vector<int> dims(3, 3);
    Vector v = Vector::Zero(27);
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int p = 0; p < 6; ++p)
        v(detail::index_of({perms[p][0], perms[p][1], perms[p][2]}, dims)) = p < 3 ? 1.0 : -1.0;
    return StateVector(dims, v / std::sqrt(6.0));
}

/// Superposition of n-party unnormalized terms, each an m-party vector
/// placed on `where` (in order) with |0> on every other party.
inline Vector embed_with_zeros(int n, int d, const Vector& small, const std::vector<int>& where) {
    const std::vector<int> dims(n, d);
    const std::vector<int> sdims(where.size(), d);
    Vector out = Vector::Zero(ipow(d, n));
    std::vector<int> sd, full(n);
    for (long s = 0; s < small.size(); ++s) {
        if (small(s) == 0.0) continue;
        detail::digits_of(s, sdims, sd);
        std::fill(full.begin(), full.end(), 0);
        for (std::size_t k = 0; k < where.size(); ++k) full[where[k]] = sd[k];
        out(detail::index_of(full, dims)) += small(s);
    }
    return out;
}

/// N (x |phi+>_AC |0>_B + y |phi+>_AB |0>_C) with x = e^{i alpha}, y = x*,
/// |phi+> = sum_i |ii> unnormalized.
inline StateVector phase_state(int d, double alpha) {
    require(d >= 2, "local dimension must be at least 2");
    require(!(d == 2 && std::abs(std::cos(alpha)) < 1e-12),
            "alpha = pi/2 for qubits yields a biseparable state");
    const cplx x = std::polar(1.0, alpha);
    const std::vector<int> dims(3, d);
    Vector v = Vector::Zero(ipow(d, 3));
    for (int i = 0; i < d; ++i) {
        v(detail::index_of({i, 0, i}, dims)) += x;
        v(detail::index_of({i, i, 0}, dims)) += std::conj(x);
    }
    return StateVector::normalized(dims, v);
}

/// (|phi_1>|1> + |phi_2>|0>)/sqrt 2 on four qubits.
inline StateVector four_qubit_M() {
    const auto b = chiral_basis(2);
    const Vector zero = Vector::Unit(2, 0), one = Vector::Unit(2, 1);
    const Vector v = tensor_product(std::vector<Vector>{b.vectors[0].amplitudes(), one}) +
                     tensor_product(std::vector<Vector>{b.vectors[1].amplitudes(), zero});
    return StateVector::normalized({2, 2, 2, 2}, v);
}

/// N(x psi_ABC|0>_D + y psi_ABD|0>_C + z psi_ACD|0>_B + k psi_BCD|0>_A) with
/// psi the antisymmetric qutrit state and (x,y,z,k) = (1, -i, -1, i).
inline StateVector four_qutrit_chiral() {
    const Vector psi = psi3_minus().amplitudes();
    const cplx I(0.0, 1.0);
    const Vector v = embed_with_zeros(4, 3, psi, {0, 1, 2}) - I * embed_with_zeros(4, 3, psi, {0, 1, 3}) -
                     embed_with_zeros(4, 3, psi, {0, 2, 3}) + I * embed_with_zeros(4, 3, psi, {1, 2, 3});
    return StateVector::normalized({3, 3, 3, 3}, v);
}

}  // namespace entlab
