#include "helpers.hpp"

using namespace entlab;
using namespace testing_helpers;

namespace {

bool all_pt_positive(const Operator& rho) {
    for (int X = 0; X < rho.parties(); ++X)
        if (min_eigenvalue(partial_transpose(rho, {X}).matrix()) < -1e-12) return false;
    return min_eigenvalue(rho.matrix()) >= -1e-12;
}

// largest p with p sigma + (1 - p) 1/D still positive under every partial transpose
Operator mix_to_ppt(const Operator& sigma) {
    const long D = sigma.dim();
    const Operator mixed = Operator::identity(sigma.dims()) / double(D);
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 50; ++it) {
        const double p = 0.5 * (lo + hi);
        (all_pt_positive(p * sigma + (1.0 - p) * mixed) ? lo : hi) = p;
    }
    return lo * sigma + (1.0 - lo) * mixed;
}

}  // namespace

TEST(RelaxedOverlap, FlipConjugateValues) {
    for (int d : {3, 5}) {
        const auto fc = flip_conjugate_projectors(d);
        const Operator Y = partial_expectation(fc.I, {2}, Vector::Unit(d, 0));
        EXPECT_NEAR(ppt_relaxed_overlap(Y).value, double(d * d) / ((d + 1.0) * (d * d - 1.0)), 1e-6) << "d=" << d;
    }
    EXPECT_NEAR(ppt_relaxed_overlap(Operator::identity(2, 3) / 9.0).value, 1.0 / 9.0, 1e-7);
    EXPECT_THROW(ppt_relaxed_overlap(Operator::identity(2, 7)), domain_error);
}

TEST(RelaxedOverlap, BoundsProductMaximum) {
    Rng rng(61);
    for (int t = 0; t < 20; ++t) {
        const int d = t < 10 ? 2 : 3;
        const Operator Y({d, d}, random_hermitian(d * d, rng));
        const double relax = ppt_relaxed_overlap(Y).value;
        const double prod = product_extremum(Y, true, cfg(t, 16)).value;
        EXPECT_GE(relax, prod - 1e-7) << "t=" << t;
    }
}

TEST(Boundary, QuantumFamilyIsTopEigenvalue) {
    for (int d = 2; d <= 4; ++d)
        for (double th : {0.0, 0.9, 2.5, 4.0}) {
            const auto w = witnesses_from_permutations(d);
            const Operator O = std::cos(th) * w.minus + std::sin(th) * w.plus;
            EXPECT_NEAR(invariant_boundary(d, th, BoundaryFamily::quantum).value, max_eigenvalue(O.matrix()), 1e-10);
        }
}

TEST(Boundary, PptBelowQuantumAndAboveFeasibleSamples) {
    const double v = invariant_boundary(3, pi / 2, BoundaryFamily::ppt_all).value;
    EXPECT_LT(v, 40.0 / 3.0 - 1e-3);
    const Operator Wp = witnesses_from_permutations(3).plus;
    const auto t = tripartite_projectors(3);
    Rng rng(5);
    std::vector<Operator> seeds{t.A, t.S / t.S.trace().real(), t.J / t.J.trace().real()};
    for (int k = 0; k < 6; ++k) seeds.push_back(random_state({3, 3, 3}, rng).projector());
    for (const auto& s : seeds) {
        const Operator rho = mix_to_ppt(s);
        EXPECT_LE((Wp * rho).trace().real(), v + 1e-7);
    }
    for (double th : {0.0, 1.0, 3.0, 5.0}) {
        for (auto f : {BoundaryFamily::ppt_all, BoundaryFamily::ppt_single})
            EXPECT_GE(invariant_boundary(3, th, f).value, -1e-9);
        EXPECT_LE(invariant_boundary(3, th, BoundaryFamily::ppt_all).value,
                  invariant_boundary(3, th, BoundaryFamily::ppt_single).value + 1e-7);
    }
    EXPECT_THROW(invariant_boundary(6, 0.0, BoundaryFamily::quantum), domain_error);
}

TEST(Boundary, InvariantMatchesFullMatrix) {
    for (double th : {0.3, 2.0})
        for (auto f : {BoundaryFamily::ppt_all, BoundaryFamily::ppt_single})
            for (bool pt : {false, true})
                EXPECT_NEAR(invariant_boundary(2, th, f, 0, pt).value, full_matrix_boundary(2, th, f, 0, pt).value, 1e-6);
    EXPECT_NEAR(invariant_boundary(3, 1.2, BoundaryFamily::ppt_single, 1).value,
                full_matrix_boundary(3, 1.2, BoundaryFamily::ppt_single, 1).value, 1e-5);
}

TEST(Gme, DecisionExamples) {
    const auto t = tripartite_projectors(3);
    // the fully antisymmetric qutrit state is genuinely entangled
    EXPECT_TRUE(gme_decide(InvariantState::from_spectral(3, 1.0, 0.0, 0.0, 0.0)).gme);
    // maximally mixed state
    const double D = 27.0;
    EXPECT_FALSE(gme_decide(InvariantState::from_spectral(3, 1 / D, 1 / D, 1 / D, 1 / D)).gme);
    const auto s = InvariantState::from_spectral(3, 0.1 / t.A.trace().real(), 0.5 / t.S.trace().real(),
                                                 0.2 / t.J.trace().real(), 0.2 / t.J.trace().real());
    EXPECT_TRUE(s.is_state());
    const Operator rho = (0.1 / t.A.trace().real()) * t.A + (0.5 / t.S.trace().real()) * t.S +
                         (0.2 / t.J.trace().real()) * (t.J + t.Jbar);
    EXPECT_LT(max_abs(s.matrix().matrix() - rho.matrix()), 1e-12);
}

TEST(Gme, PptSweep) {
    EXPECT_TRUE(find_ppt_gme(2, 5).rows.empty());
    const auto sw = find_ppt_gme(3, 5);
    ASSERT_EQ(sw.rows.size(), 5u);
    EXPECT_LT(sw.pin_lo, sw.pin_hi);
    EXPECT_FALSE(sw.candidates().empty());
    for (const auto& r : sw.rows) {
        EXPECT_GE(r.min_pt_eig, -1e-7);
        EXPECT_NEAR(r.wplus, r.pin, 1e-6);
        if (r.trace_P < -1e-7) EXPECT_TRUE(r.gme) << "pin=" << r.pin;
    }
    const auto m = max_antisymmetric_weight(3, sw.rows[2].pin);
    EXPECT_NEAR(m.x(0), sw.rows[2].a, 1e-7);
    EXPECT_THROW(max_antisymmetric_weight(5, 0.0), domain_error);
}

TEST(Twirl, MonteCarloApproachesInvariantProjection) {
    Rng rng(71);
    const int d = 2;
    const Operator rho = random_state({2, 2, 2}, rng).projector();
    Matrix avg = Matrix::Zero(8, 8);
    const int N = 4000;
    for (int k = 0; k < N; ++k) {
        const Matrix U3 = tensor_power(haar_unitary(d, rng), 3);
        avg += U3 * rho.matrix() * U3.adjoint();
    }
    avg /= double(N);
    // orthogonal projection onto the span of the invariant basis (Gram solve)
    const auto B = invariant_basis(d);
    const int m = static_cast<int>(B.size());
    RealMatrix G(m, m);
    RealVector rhs(m);
    for (int i = 0; i < m; ++i) {
        rhs(i) = (B[i].matrix().adjoint() * rho.matrix()).trace().real();
        for (int j = 0; j < m; ++j) G(i, j) = (B[i].matrix().adjoint() * B[j].matrix()).trace().real();
    }
    const RealVector x = G.completeOrthogonalDecomposition().solve(rhs);
    Matrix proj = Matrix::Zero(8, 8);
    for (int i = 0; i < m; ++i) proj += x(i) * B[i].matrix();
    EXPECT_LT(max_abs(avg - proj), 0.03);
}
