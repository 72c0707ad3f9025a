#include "helpers.hpp"

using namespace entlab;
using namespace testing_helpers;

namespace {

Matrix pauli_x() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = m(1, 0) = 1.0;
    return m;
}

Matrix pauli_z() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

// index-by-index oracle for the partial transpose on a three-party space
Matrix pt_oracle(const Matrix& a, const std::vector<int>& dims, int party) {
    const long D = a.rows();
    Matrix out(D, D);
    auto split = [&](long i) {
        std::vector<int> dg(3);
        dg[2] = i % dims[2];
        dg[1] = (i / dims[2]) % dims[1];
        dg[0] = i / (dims[1] * dims[2]);
        return dg;
    };
    auto join = [&](const std::vector<int>& dg) { return (long(dg[0]) * dims[1] + dg[1]) * dims[2] + dg[2]; };
    for (long r = 0; r < D; ++r)
        for (long c = 0; c < D; ++c) {
            auto rd = split(r), cd = split(c);
            std::swap(rd[party], cd[party]);
            out(join(rd), join(cd)) = a(r, c);
        }
    return out;
}

}  // namespace

TEST(Kron, IdentityBasisAndPauli) {
    EXPECT_LT(max_abs(kron(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) - Matrix::Identity(4, 4)), 1e-15);
    const auto k = kron(StateVector::basis({2}, 0), StateVector::basis({2}, 1));
    EXPECT_EQ(k.dims(), (std::vector<int>{2, 2}));
    EXPECT_NEAR(std::abs(k.amplitudes()(1)), 1.0, 1e-15);
    const Vector out = kron(pauli_x(), pauli_x()) * Vector::Unit(4, 0);
    EXPECT_NEAR(std::abs(out(3)), 1.0, 1e-15);
    EXPECT_NEAR(out.norm(), 1.0, 1e-15);
}

TEST(Kron, AssociativeAndMixedProduct) {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const Matrix A = random_hermitian(2, rng), B = random_hermitian(3, rng), C = random_hermitian(2, rng),
                     D = random_hermitian(3, rng);
        EXPECT_LT(max_abs(kron(kron(A, B), C) - kron(A, kron(B, C))), 1e-10);
        EXPECT_LT(max_abs(kron(A, B) * kron(C, D) - kron(A * C, B * D)), 1e-10);
    }
}

TEST(PartialTranspose, InvolutionIdentityAndFlip) {
    Rng rng(3);
    const Operator A({2, 3, 2}, random_hermitian(12, rng) + cplx(0, 1) * random_hermitian(12, rng));
    EXPECT_LT(max_abs(partial_transpose(partial_transpose(A, {0}), {0}).matrix() - A.matrix()), 1e-15);
    EXPECT_LT(max_abs(partial_transpose(Operator::identity(3, 2), {1, 2}).matrix() - Matrix::Identity(8, 8)), 1e-15);

    const Operator FT = partial_transpose(flip_operator(2, 2, 0, 1), {0});
    Vector phi = Vector::Zero(4);
    phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
    EXPECT_LT(max_abs(FT.matrix() - 2.0 * phi * phi.adjoint()), 1e-15);
}

TEST(PartialTranspose, MatchesIndexOracle) {
    Rng rng(5);
    const std::vector<int> dims{2, 3, 2};
    const Matrix a = random_hermitian(12, rng) + cplx(0, 1) * random_hermitian(12, rng);
    for (int p = 0; p < 3; ++p)
        EXPECT_LT(max_abs(partial_transpose(Operator(dims, a), {p}).matrix() - pt_oracle(a, dims, p)), 1e-15);
    EXPECT_THROW(partial_transpose(Operator(dims, a), {3}), domain_error);
}

TEST(PartialTrace, ProductCaseAndTracePreservation) {
    Rng rng(8);
    const Matrix rho = random_hermitian(2, rng), sigma = random_hermitian(3, rng);
    const Operator prod({2, 3}, kron(rho, sigma));
    EXPECT_LT(max_abs(partial_trace(prod, {1}).matrix() - rho * sigma.trace()), 1e-12);
    for (int t = 0; t < 20; ++t) {
        const Operator h({2, 2, 3}, random_hermitian(12, rng));
        EXPECT_NEAR(std::abs(partial_trace(h, {0, 2}).trace() - h.trace()), 0.0, 1e-12);
    }
    EXPECT_THROW(partial_trace(prod, {0, 1}), domain_error);
    EXPECT_THROW(partial_trace(prod, {2}), domain_error);
}

TEST(PartialTrace, AmeQutritVector) {
    for (const auto& v : j2_basis().vectors) {
        const Operator r = partial_trace(v.projector(), {1, 2});
        EXPECT_LT(max_abs(r.matrix() - Matrix::Identity(3, 3) / 3.0), 1e-12);
    }
}

TEST(PartialTrace, CommutesWithDisjointPartialTranspose) {
    Rng rng(9);
    const Operator A({2, 3, 2}, random_hermitian(12, rng));
    const Operator x = partial_trace(partial_transpose(A, {0}), {2});
    const Operator y = partial_transpose(partial_trace(A, {2}), {0});
    EXPECT_LT(max_abs(x.matrix() - y.matrix()), 1e-14);
}

TEST(HermitianEig, PauliZAndAppendixMatrix) {
    const auto e = hermitian_eig(pauli_z());
    EXPECT_NEAR(e.values(0), -1.0, 1e-15);
    EXPECT_NEAR(e.values(1), 1.0, 1e-15);
    // reduced 2x2 problem (cos/2) [[C cos, sin], [sin, 0]] at C = 2, cos = -1/2
    const double c = -0.5, s = std::sqrt(3.0) / 2.0;
    Matrix M(2, 2);
    M << 2.0 * c, s, s, 0.0;
    M *= c / 2.0;
    EXPECT_NEAR(min_eigenvalue(M), -0.125, 1e-14);
}

TEST(HermitianEig, ReconstructionResidualAndInvariance) {
    Rng rng(1);
    const Matrix A = random_hermitian(40, rng);
    const auto e = hermitian_eig(A);
    const double nrm = A.norm();
    EXPECT_LT(max_abs(e.vectors * e.values.cast<cplx>().asDiagonal() * e.vectors.adjoint() - A), 1e-9);
    for (int k = 0; k < 40; ++k)
        EXPECT_LT((A * e.vectors.col(k) - e.values(k) * e.vectors.col(k)).norm(), 1e-9 * nrm);
    EXPECT_LT(max_abs(e.vectors.adjoint() * e.vectors - Matrix::Identity(40, 40)), 1e-10);
    for (int k = 1; k < 40; ++k) EXPECT_LE(e.values(k - 1), e.values(k));
    const Matrix U = haar_unitary(40, rng);
    EXPECT_LT((eigenvalues(U * A * U.adjoint()) - e.values).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(HermitianEig, RejectsNonHermitian) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(hermitian_eig(m), domain_error);
}

TEST(Schmidt, Examples) {
    const auto p = schmidt_coefficients(StateVector::basis({2, 2, 2}, 0), {0});
    EXPECT_NEAR(p.front(), 1.0, 1e-15);
    for (std::size_t k = 1; k < p.size(); ++k) EXPECT_NEAR(p[k], 0.0, 1e-15);

    for (int d = 2; d <= 4; ++d) {
        const std::vector<int> dims(3, d);
        Vector g = Vector::Zero(ipow(d, 3));
        for (int i = 0; i < d; ++i) g(detail::index_of({i, i, 1}, dims)) = 1.0 / std::sqrt(double(d));
        const auto s = schmidt_coefficients(StateVector(dims, g), {0});
        for (int k = 0; k < d; ++k) EXPECT_NEAR(s[k], 1.0 / std::sqrt(double(d)), 1e-12);
    }
    Vector singlet = Vector::Zero(4);
    singlet(1) = 1.0 / std::sqrt(2.0);
    singlet(2) = -1.0 / std::sqrt(2.0);
    const auto s = schmidt_coefficients(StateVector({2, 2}, singlet), {0});
    EXPECT_NEAR(s[0], 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s[1], 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_THROW(schmidt_coefficients(StateVector({2, 2}, singlet), {0, 1}), domain_error);
}

TEST(Schmidt, SquaresAreReducedSpectrum) {
    Rng rng(4);
    for (int t = 0; t < 10; ++t) {
        const auto psi = random_state({2, 3, 2}, rng);
        for (const std::vector<int>& side : {std::vector<int>{0}, std::vector<int>{1}, std::vector<int>{0, 2}}) {
            const auto s = schmidt_coefficients(psi, side);
            RealVector ev = eigenvalues(partial_trace(psi.projector(), detail::complement(side, 3)).matrix());
            std::vector<double> sq;
            for (double x : s) sq.push_back(x * x);
            std::sort(sq.begin(), sq.end());
            std::vector<double> e(ev.data(), ev.data() + ev.size());
            // the larger side carries extra zeros
            e.erase(e.begin(), e.begin() + (e.size() - std::min(e.size(), sq.size())));
            sq.erase(sq.begin(), sq.begin() + (sq.size() - e.size()));
            for (std::size_t k = 0; k < e.size(); ++k) EXPECT_NEAR(sq[k], e[k], 1e-10);
        }
    }
}

TEST(Haar, UnitaryDeterministic) {
    const auto u1 = haar_random_unitary(1, 5);
    EXPECT_NEAR(std::abs(u1.matrix()(0, 0)), 1.0, 1e-15);
    for (int d = 2; d <= 9; ++d) {
        const auto u = haar_random_unitary(d, 100 + d);
        EXPECT_LT(max_abs(u.matrix().adjoint() * u.matrix() - Matrix::Identity(d, d)), 1e-10);
    }
    EXPECT_EQ(max_abs(haar_random_unitary(5, 42).matrix() - haar_random_unitary(5, 42).matrix()), 0.0);
}

TEST(StateVector, NormalizationEnforced) {
    Vector v = Vector::Ones(4);
    EXPECT_THROW(StateVector({2, 2}, v), domain_error);
    EXPECT_NO_THROW(StateVector::normalized({2, 2}, v));
    EXPECT_THROW(StateVector({2, 3}, Vector::Unit(4, 0)), domain_error);
    EXPECT_THROW(Operator({2, 2}, Matrix::Identity(3, 3)), domain_error);
}
