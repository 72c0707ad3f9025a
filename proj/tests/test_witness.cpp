#include <algorithm>

#include "helpers.hpp"

using namespace entlab;
using namespace testing_helpers;

namespace {

RealMatrix random_orthogonal(int n, Rng& rng) {
    std::normal_distribution<double> g;
    RealMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = g(rng);
    Eigen::HouseholderQR<RealMatrix> qr(a);
    return qr.householderQ();
}

std::vector<double> sorted_eigenvalues(const Matrix& m) {
    const RealVector e = eigenvalues(m);
    std::vector<double> v(e.data(), e.data() + e.size());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(GellMann, PauliCaseAndNormalization) {
    const auto g = gellmann_basis(2);
    ASSERT_EQ(g.size(), 3u);
    EXPECT_NEAR(std::abs(g.matrices[0](0, 1) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(g.matrices[1](0, 1) - cplx(0, -1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(g.matrices[2](1, 1) + 1.0), 0.0, 1e-15);
    for (int d = 2; d <= 5; ++d) {
        const auto b = gellmann_basis(d);
        ASSERT_EQ(static_cast<int>(b.size()), d * d - 1);
        for (std::size_t i = 0; i < b.size(); ++i) {
            EXPECT_LT(max_abs(b.matrices[i] - b.matrices[i].adjoint()), 1e-15);
            EXPECT_NEAR(std::abs(b.matrices[i].trace()), 0.0, 1e-14);
            for (std::size_t j = 0; j < b.size(); ++j)
                EXPECT_NEAR(std::abs((b.matrices[i] * b.matrices[j]).trace() - (i == j ? double(d) : 0.0)), 0.0,
                            1e-12);
        }
    }
}

TEST(GellMann, FierzCompleteness) {
    for (int d = 2; d <= 5; ++d) {
        Matrix s = Matrix::Zero(d * d, d * d);
        for (const auto& l : gellmann_basis(d).matrices) s += kron(l, l);
        const Matrix expected = double(d) * flip_operator(2, d, 0, 1).matrix() - Matrix::Identity(d * d, d * d);
        EXPECT_LT(max_abs(s - expected), 1e-12) << "d=" << d;
    }
}

TEST(StructureConstants, Symmetry) {
    for (int d = 2; d <= 4; ++d) {
        const auto sc = structure_constants(d);
        const int n = sc.n;
        double am = 0.0, sp = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    am = std::max({am, std::abs(sc.minus(i, j, k) + sc.minus(j, i, k)),
                                   std::abs(sc.minus(i, j, k) - sc.minus(j, k, i))});
                    sp = std::max({sp, std::abs(sc.plus(i, j, k) - sc.plus(j, i, k)),
                                   std::abs(sc.plus(i, j, k) - sc.plus(j, k, i))});
                }
        EXPECT_LT(am, 1e-12);
        EXPECT_LT(sp, 1e-12);
        if (d == 2) {
            double mx = 0.0;
            for (double v : sc.kappa_plus) mx = std::max(mx, std::abs(v));
            EXPECT_LT(mx, 1e-12);
        }
    }
}

TEST(Witnesses, QubitEpsilonIsChiralDifference) {
    const auto w = build_witnesses(2);
    const auto t = tripartite_projectors(2);
    EXPECT_TRUE(w.plus_trivial);
    EXPECT_LT(max_abs(w.minus.matrix() - 2.0 * std::sqrt(3.0) * (t.Jbar - t.J).matrix()), 1e-12);
    EXPECT_LT(max_abs(w.plus.matrix()), 1e-12);
}

TEST(Witnesses, PermutationFormAndSpectralDecomposition) {
    for (int d = 2; d <= 5; ++d) {
        const auto a = build_witnesses(d), b = witnesses_from_permutations(d);
        EXPECT_LT(max_abs(a.minus.matrix() - b.minus.matrix()), 1e-11) << "d=" << d;
        EXPECT_LT(max_abs(a.plus.matrix() - b.plus.matrix()), 1e-11) << "d=" << d;
        const auto t = tripartite_projectors(d);
        const double alpha = d * std::sqrt(3.0);
        EXPECT_LT(max_abs(a.minus.matrix() - alpha * (t.Jbar - t.J).matrix()), 1e-11);
        if (d >= 3) {
            const auto c = spectral_coefficients(d);
            EXPECT_NEAR(c.alpha, alpha, 1e-15);
            const Operator rebuilt = c.c_S * t.S + c.c_A * t.A + c.c_J * (t.J + t.Jbar);
            EXPECT_LT(max_abs(a.plus.matrix() - rebuilt.matrix()), 1e-11);
        }
        EXPECT_LT(max_abs((a.minus * a.plus - a.plus * a.minus).matrix()), 1e-10);
    }
    const auto c3 = spectral_coefficients(3);
    EXPECT_NEAR(c3.c_S, 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(c3.c_A, 40.0 / 3.0, 1e-15);
    EXPECT_NEAR(c3.c_J, -5.0 / 3.0, 1e-15);
    const auto c4 = spectral_coefficients(4);
    EXPECT_NEAR(c4.c_S, 3.0, 1e-15);
    EXPECT_NEAR(c4.c_A, 15.0, 1e-15);
    EXPECT_NEAR(c4.c_J, -3.0, 1e-15);
}

TEST(Witnesses, BasisIndependence) {
    Rng rng(17);
    for (int d = 2; d <= 4; ++d) {
        const auto g = gellmann_basis(d).matrices;
        const int n = static_cast<int>(g.size());
        const RealMatrix O = random_orthogonal(n, rng);
        std::vector<Matrix> h(n, Matrix::Zero(d, d));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) h[i] += O(i, j) * g[j];
        const auto a = build_witnesses(d), b = build_witnesses_from_basis(h, d);
        EXPECT_LT(max_abs(a.minus.matrix() - b.minus.matrix()), 1e-10);
        EXPECT_LT(max_abs(a.plus.matrix() - b.plus.matrix()), 1e-10);
    }
}

TEST(Bounds, ExamplesAndOrdering) {
    const auto q = analytic_bounds(2, WitnessKind::epsilon);
    EXPECT_DOUBLE_EQ(q.fs, 1.0);
    EXPECT_DOUBLE_EQ(q.bs, 2.0);
    EXPECT_NEAR(q.q, 2.0 * std::sqrt(3.0), 1e-15);
    const auto m3 = analytic_bounds(3, WitnessKind::minus);
    EXPECT_DOUBLE_EQ(m3.fs, 1.5);
    EXPECT_DOUBLE_EQ(m3.bs, 3.0);
    const auto p3 = analytic_bounds(3, WitnessKind::plus);
    EXPECT_NEAR(p3.bs, 10.0 / 3.0, 1e-15);
    EXPECT_NEAR(p3.q, 40.0 / 3.0, 1e-15);
    for (int d = 3; d <= 8; ++d)
        for (auto k : {WitnessKind::minus, WitnessKind::plus}) {
            const auto b = analytic_bounds(d, k);
            EXPECT_LE(b.fs, b.bs);
            EXPECT_LE(b.bs, b.q);
        }
    EXPECT_THROW(analytic_bounds(2, WitnessKind::plus), domain_error);
    EXPECT_THROW(analytic_bounds(3, WitnessKind::epsilon), domain_error);
    // the quantum bound is the top eigenvalue
    for (int d = 3; d <= 4; ++d) {
        const auto w = build_witnesses(d);
        EXPECT_NEAR(max_eigenvalue(w.minus.matrix()), analytic_bounds(d, WitnessKind::minus).q, 1e-10);
        EXPECT_NEAR(max_eigenvalue(w.plus.matrix()), analytic_bounds(d, WitnessKind::plus).q, 1e-10);
    }
}

TEST(Bounds, ProductSamplesRespectFullySeparableBound) {
    Rng rng(41);
    const auto w2 = build_witnesses(2);
    for (int k = 0; k < 2000; ++k) EXPECT_LE(std::abs(expect(w2.minus, random_product(3, 2, rng))), 1.0 + 1e-12);
    const Operator Z = chiral_fs_witness(3);
    const auto w3 = build_witnesses(3);
    for (int k = 0; k < 2000; ++k) {
        const Vector v = random_product(3, 3, rng);
        EXPECT_GE(expect(Z, v), -1e-12);
        EXPECT_LE(expect(w3.minus, v), 1.5 + 1e-12);
        EXPECT_LE(expect(w3.plus, v), 4.0 / 3.0 + 1e-12);
    }
}

TEST(ConditionalObservable, MinusSpectrum) {
    for (int d = 2; d <= 5; ++d) {
        const auto Y = conditional_observable(build_witnesses(d).minus, 0, StateVector::basis({d}, 0));
        for (double e : sorted_eigenvalues(Y.matrix())) {
            const double r = std::min({std::abs(e - d), std::abs(e), std::abs(e + d)});
            EXPECT_LT(r, 1e-10) << "d=" << d << " e=" << e;
        }
        EXPECT_NEAR(max_eigenvalue(Y.matrix()), double(d), 1e-10);
    }
}

TEST(ConditionalObservable, PlusSpectrumMultiset) {
    for (int d = 3; d <= 6; ++d) {
        const auto Y = conditional_observable(build_witnesses(d).plus, 0, StateVector::basis({d}, 0));
        std::vector<double> expected;
        const double s = 4.0 / d;
        auto add = [&](double v, int m) { expected.insert(expected.end(), m, v); };
        add(s - 2, (d - 1) * (d - 2) / 2);
        add(s + 2, (d - 1) * (d - 2) / 2);
        add(s + d - 4, d - 1);
        add(s - d, d - 1);
        add(s - 2, d - 1);
        add(s + 2 * d - 6, 1);
        std::sort(expected.begin(), expected.end());
        const auto got = sorted_eigenvalues(Y.matrix());
        ASSERT_EQ(got.size(), expected.size());
        for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], expected[k], 1e-10) << "d=" << d;
        EXPECT_THROW(conditional_observable(build_witnesses(d).plus, 3, StateVector::basis({d}, 0)), domain_error);
    }
}

TEST(GmeWitness, ConjugatePairAndBiseparablePositivity) {
    for (int d = 3; d <= 5; ++d) {
        const auto g = build_gme_witnesses(d);
        EXPECT_LT(max_abs(g.Pbar.matrix() - g.P.matrix().conjugate()), 1e-14);
        const Operator cond = conditional_observable(6.0 * g.P, 0, StateVector::basis({d}, 0));
        EXPECT_GE(min_eigenvalue(cond.matrix()), -1e-10) << "d=" << d;
    }
    EXPECT_THROW(build_gme_witnesses(2), domain_error);
}

TEST(PtWitnesses, SwapTrickAndInvariance) {
    Rng rng(55);
    for (int d = 2; d <= 4; ++d) {
        const auto a = build_pt_witnesses(d), b = pt_witnesses_swap_trick(d);
        EXPECT_LT(max_abs(a.minus.matrix() - b.minus.matrix()), 1e-10) << "d=" << d;
        EXPECT_LT(max_abs(a.plus.matrix() - b.plus.matrix()), 1e-10) << "d=" << d;
        const Matrix U = haar_unitary(d, rng);
        const Matrix V = tensor_product(std::vector<Matrix>{U.conjugate(), U, U});
        EXPECT_LT(max_abs(V * a.minus.matrix() * V.adjoint() - a.minus.matrix()), 1e-10);
        EXPECT_LT(max_abs(V * a.plus.matrix() * V.adjoint() - a.plus.matrix()), 1e-10);
    }
}

TEST(PtWitnesses, MinusSupportIsFlipConjugatePair) {
    for (int d = 2; d <= 5; ++d) {
        const auto e = hermitian_eig(build_pt_witnesses(d).minus.matrix());
        const long D = e.values.size();
        Matrix P = Matrix::Zero(D, D);
        std::vector<double> nz;
        for (long k = 0; k < D; ++k)
            if (std::abs(e.values(k)) > 1e-8) {
                nz.push_back(e.values(k));
                P += e.vectors.col(k) * e.vectors.col(k).adjoint();
            }
        ASSERT_EQ(static_cast<int>(nz.size()), 2 * d);
        std::sort(nz.begin(), nz.end());
        EXPECT_NEAR(nz.front(), nz[d - 1], 1e-9);
        EXPECT_NEAR(nz[d], nz.back(), 1e-9);
        EXPECT_GT(nz.back() - nz.front(), 1e-3);
        const auto fc = flip_conjugate_projectors(d);
        EXPECT_LT(max_abs(P - (fc.I + fc.Ibar).matrix()), 1e-9) << "d=" << d;
    }
}
