#include "helpers.hpp"

using namespace entlab;
using namespace testing_helpers;

TEST(ProductOverlap, ReferenceStates) {
    EXPECT_NEAR(max_product_overlap(w_state(), cfg()).value, 4.0 / 9.0, 1e-9);
    EXPECT_NEAR(max_product_overlap(StateVector::basis({2, 2, 2}, 0), cfg()).value, 1.0, 1e-12);
    EXPECT_NEAR(max_product_overlap(four_qubit_M(), cfg(7, 32)).value, 2.0 / 9.0, 1e-7);
    Vector singlet = Vector::Zero(4);
    singlet(1) = 1.0 / std::sqrt(2.0);
    singlet(2) = -1.0 / std::sqrt(2.0);
    EXPECT_NEAR(max_product_overlap(StateVector({2, 2}, singlet), cfg()).value, 0.5, 1e-10);
}

TEST(GeometricMeasure, ChiralAndPhaseStates) {
    for (const auto& v : chiral_basis(2).vectors) EXPECT_NEAR(geometric_measure(v, cfg()), 5.0 / 9.0, 1e-8);
    EXPECT_NEAR(geometric_measure(phase_state(3, pi / 2), cfg()), 0.75, 1e-6);
    EXPECT_NEAR(geometric_measure(j2_basis().vectors[0], cfg()), 2.0 / 3.0, 1e-7);
}

TEST(GeometricMeasure, LocalUnitaryInvarianceAndSchmidtBound) {
    Rng rng(19);
    for (int t = 0; t < 4; ++t) {
        const auto psi = random_state({2, 2, 2}, rng);
        const StateVector moved({2, 2, 2}, local_unitary(3, 2, rng) * psi.amplitudes(), 1e-10);
        const double a = max_product_overlap(psi, cfg(3 + t)).value, b = max_product_overlap(moved, cfg(50 + t)).value;
        EXPECT_NEAR(a, b, 1e-7);
        for (int X = 0; X < 3; ++X) {
            const double s1 = schmidt_coefficients(psi, {X}).front();
            EXPECT_LE(a, s1 * s1 + 1e-10);
        }
    }
}

TEST(GeometricMeasure, FlipConjugateBasisVectorsAgree) {
    const auto b = flip_conjugate_basis(3);
    const double g0 = geometric_measure(b.vectors[0], cfg());
    for (int n = 1; n < 3; ++n) EXPECT_NEAR(geometric_measure(b.vectors[n], cfg(9 + n)), g0, 1e-7);
    EXPECT_GE(g0 + 1e-9, flip_conjugate_analytic_bound(3));
    EXPECT_NEAR(flip_conjugate_analytic_bound(3), 5.0 / 8.0, 1e-15);
}

TEST(ProjectorExtrema, ProductStates) {
    const auto t2 = tripartite_projectors(2);
    EXPECT_NEAR(min_projector_overlap(t2.S, cfg()).value, 0.25, 1e-9);
    const auto t3 = tripartite_projectors(3);
    EXPECT_NEAR(product_extremum(t3.J, true, cfg()).value, 4.0 / 9.0, 1e-8);
    EXPECT_NEAR(min_projector_overlap(t3.S + t3.A, cfg()).value, 0.25, 1e-8);
    EXPECT_THROW(min_projector_overlap(2.0 * t3.S, cfg()), domain_error);
}

TEST(Eta, AnalyticAndNumeric) {
    EXPECT_NEAR(extremize_eta(0.0, 2, EtaMode::analytic), -0.125, 1e-10);
    EXPECT_NEAR(extremize_eta(pi / 3, 2, EtaMode::analytic), -1.0 / 6.0, 1e-10);
    Rng rng(23);
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
    for (int k = 0; k < 10; ++k) {
        const double a = u(rng);
        EXPECT_NEAR(extremize_eta(a, 2, EtaMode::numeric, cfg(k, 32)), extremize_eta(a, 2, EtaMode::analytic), 1e-6)
            << "alpha=" << a;
    }
}

TEST(SeparableMaxima, WitnessBounds) {
    const auto w2 = build_witnesses(2);
    EXPECT_NEAR(fully_separable_max(w2.minus, cfg()), 1.0, 1e-8);
    EXPECT_NEAR(biseparable_max(w2.minus, cfg()).value, 2.0, 1e-8);
    const auto w3 = build_witnesses(3);
    EXPECT_NEAR(fully_separable_max(w3.minus, cfg()), 1.5, 1e-8);
    EXPECT_NEAR(fully_separable_max(w3.plus, cfg()), 4.0 / 3.0, 1e-8);
    const auto b = biseparable_max(w3.minus, cfg());
    EXPECT_NEAR(b.value, 3.0, 1e-8);
    EXPECT_GE(b.bipartition, 0);
    EXPECT_EQ(b.argument.factors.size(), 2u);
    EXPECT_NEAR(biseparable_max(w3.plus, cfg()).value, 10.0 / 3.0, 1e-8);
    EXPECT_NEAR(biseparable_max_invariant(w3.minus), 3.0, 1e-10);
    EXPECT_NEAR(biseparable_max_invariant(w3.plus), 10.0 / 3.0, 1e-10);
}

TEST(ChiNorm, ClosedForm) {
    for (int d : {3, 10}) {
        const auto r = chi_norm_max(d, 0, cfg());
        EXPECT_NEAR(r.value, double(d * d) / (d * d - 1.0), 1e-8);
        EXPECT_NEAR(r.bn2, double(d) / (d + 1.0), 1e-4);
        EXPECT_NEAR(r.cn2, double(d) / (d + 1.0), 1e-4);
    }
    EXPECT_THROW(chi_norm_max(3, 3), domain_error);
}

TEST(Seesaw, MonotoneDeterministicThreadIndependent) {
    Rng rng(29);
    const auto psi = random_state({3, 3, 3}, rng);
    SeesawConfig one = cfg(5, 24), many = cfg(5, 24);
    one.threads = 1;
    many.threads = 4;
    const auto a = max_product_overlap(psi, one), b = max_product_overlap(psi, many);
    EXPECT_TRUE(a.monotone);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.value, max_product_overlap(psi, one).value);
    const auto h = product_extremum(build_witnesses(3).plus, true, one);
    EXPECT_TRUE(h.monotone);
    SeesawConfig bad;
    bad.restarts = 0;
    EXPECT_THROW(max_product_overlap(psi, bad), domain_error);
}
