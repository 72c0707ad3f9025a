#pragma once

// Replays the numbered acceptance checks. Used by `entlab verify` and by the
// acceptance test binary.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "entlab/povm.hpp"
#include "entlab/statespace.hpp"

namespace entlab::acceptance {

struct Result {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    std::uint64_t seed = 1;
    int threads = 0;
    int statespace_grid = 48;
    int pptgme_points = 15;
};

namespace detail {

inline std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// Accumulates checks of one criterion.
struct Checker {
    bool ok = true;
    std::string log;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log += "FAILED " + what + "; ";
        }
    }
    void near(double measured, double target, double tol, const std::string& what) {
        const bool good = std::abs(measured - target) <= tol;
        if (!good) ok = false;
        log += fmt("%s%s=%.12g (target %.12g, tol %.0e); ", good ? "" : "FAILED ", what.c_str(), measured, target, tol);
    }
    void note(const std::string& s) { log += s + "; "; }
};

inline SeesawConfig seesaw(const Options& o, const char* tag, int index = 0) {
    SeesawConfig c;
    c.seed = derive_seed(o.seed, tag, index);
    c.threads = o.threads;
    return c;
}

inline double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline Result finish(std::string id, std::string title, Checker& c, std::chrono::steady_clock::time_point t0,
                     double budget = 0.0) {
    Result r{std::move(id), std::move(title), c.ok, c.log, elapsed(t0)};
    if (budget > 0.0) {
        r.detail += fmt("runtime %.1fs (budget %.0fs)", r.seconds, budget);
        if (r.seconds > budget) r.pass = false;
    }
    return r;
}

inline Vector random_combination(const SubspaceBasis& b, Rng& rng) {
    const Vector c = random_unit_vector(static_cast<long>(b.vectors.size()), rng);
    Vector v = Vector::Zero(b.vectors.front().dim());
    for (std::size_t k = 0; k < b.vectors.size(); ++k) v += c(k) * b.vectors[k].amplitudes();
    return v;
}

}  // namespace detail

using clock = std::chrono::steady_clock;

// 1: projector algebra
inline Result projector_algebra(const Options&) {
    const auto t0 = clock::now();
    detail::Checker c;
    double worst = 0.0;
    for (int d = 2; d <= 5; ++d) {
        const auto t = tripartite_projectors(d);
        const std::array<const Operator*, 4> P{&t.S, &t.A, &t.J, &t.Jbar};
        const long tS = long(d) * (d + 1) * (d + 2) / 6, tA = long(d) * (d - 1) * (d - 2) / 6,
                   tJ = long(d) * (d * d - 1) / 3;
        c.check(tS + tA + 2 * tJ == ipow(d, 3), detail::fmt("integer traces sum to d^3 (d=%d)", d));
        const std::array<long, 4> tr{tS, tA, tJ, tJ};
        Matrix sum = Matrix::Zero(ipow(d, 3), ipow(d, 3));
        for (int i = 0; i < 4; ++i) {
            const Matrix& a = P[i]->matrix();
            worst = std::max(worst, max_abs(a * a - a));
            worst = std::max(worst, std::abs(P[i]->trace() - double(tr[i])));
            for (int j = i + 1; j < 4; ++j) worst = std::max(worst, max_abs(a * P[j]->matrix()));
            sum += a;
        }
        worst = std::max(worst, max_abs(sum - Matrix::Identity(sum.rows(), sum.cols())));
    }
    c.near(worst, 0.0, 1e-12, "max deviation (idempotent, orthogonal, complete, traces; d=2..5)");
    return detail::finish("1", "projector algebra", c, t0, 5.0);
}

// 2 and 3: minimal product overlaps and chiral-space geometric measure
inline Result product_overlaps_qubits(const Options& o) {
    const auto t0 = clock::now();
    detail::Checker c;
    const auto t = tripartite_projectors(2);
    c.near(min_projector_overlap(t.S, detail::seesaw(o, "c2", 0)).value, 0.25, 1e-8, "min <Pi_S>");
    c.near(product_extremum(t.J, true, detail::seesaw(o, "c2", 1)).value, 4.0 / 9.0, 1e-8, "max <Pi_J>");
    c.near(min_projector_overlap(t.S + t.Jbar, detail::seesaw(o, "c2", 2)).value, 5.0 / 9.0, 1e-8,
           "min <Pi_S+Pi_Jbar> = 1 - max <Pi_J>");
    const auto b = chiral_basis(2);
    Rng rng(derive_seed(o.seed, "c2-states"));
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const StateVector psi({2, 2, 2}, detail::random_combination(b, rng), 1e-10);
        worst = std::max(worst, std::abs(geometric_measure(psi, detail::seesaw(o, "c2-gm", k)) - 5.0 / 9.0));
    }
    c.near(worst, 0.0, 1e-7, "max |G - 5/9| over 20 chiral states");
    return detail::finish("2", "three-qubit product overlaps", c, t0, 30.0);
}

inline Result product_overlaps_qudits(const Options& o) {
    const auto t0 = clock::now();
    detail::Checker c;
    for (int d = 3; d <= 4; ++d) {
        const auto t = tripartite_projectors(d);
        c.near(min_projector_overlap(t.S + t.A, detail::seesaw(o, "c3", 3 * d)).value, 0.25, 1e-7,
               detail::fmt("d=%d min <Pi_S+Pi_A>", d));
        c.near(product_extremum(t.J, true, detail::seesaw(o, "c3", 3 * d + 1)).value, 4.0 / 9.0, 1e-7,
               detail::fmt("d=%d max <Pi_J>", d));
        c.near(min_projector_overlap(t.S + t.A + t.Jbar, detail::seesaw(o, "c3", 3 * d + 2)).value, 5.0 / 9.0, 1e-7,
               detail::fmt("d=%d min <Pi_S+Pi_A+Pi_Jbar>", d));
    }
    return detail::finish("3", "qudit product overlaps", c, t0);
}

// 4: Re(e^{i alpha} <T>) over product states
inline Result eta_lemmas(const Options& o) {
    const auto t0 = clock::now();
    detail::Checker c;
    const double a0 = extremize_eta(0.0, 2, EtaMode::analytic), a1 = extremize_eta(pi / 3, 2, EtaMode::analytic);
    c.near(a0, -0.125, 1e-9, "analytic alpha=0");
    c.near(a1, -1.0 / 6.0, 1e-9, "analytic alpha=pi/3");
    double worst = 0.0;
    for (int d = 2; d <= 5; ++d) {
        worst = std::max(worst, std::abs(extremize_eta(0.0, d, EtaMode::numeric, detail::seesaw(o, "c4", 2 * d)) - a0));
        worst = std::max(worst,
                         std::abs(extremize_eta(pi / 3, d, EtaMode::numeric, detail::seesaw(o, "c4", 2 * d + 1)) - a1));
    }
    c.near(worst, 0.0, 1e-6, "max |numeric - analytic| over d=2..5");
    return detail::finish("4", "eta extremization", c, t0);
}

// 5: maximally entangled chiral qutrit states
inline Result ame_qutrits(const Options& o) {
    const auto t0 = clock::now();
    detail::Checker c;
    const auto b = j2_basis();
    const Matrix mixed = Matrix::Identity(3, 3) / 3.0;
    double worst = 0.0;
    for (const auto& v : b.vectors)
        for (int X = 0; X < 3; ++X) worst = std::max(worst, max_abs(reduced_density(v, {X}).matrix() - mixed));
    c.near(worst, 0.0, 1e-12, "max |rho_X - 1/3|");
    Rng rng(derive_seed(o.seed, "c5"));
    double gw = 0.0;
    for (int k = 0; k < 20; ++k) {
        const StateVector psi({3, 3, 3}, detail::random_combination(b, rng), 1e-10);
        double s1 = 0.0;
        for (int X = 0; X < 3; ++X) s1 = std::max(s1, schmidt_coefficients(psi, {X}).front());
        gw = std::max(gw, std::abs(1.0 - s1 * s1 - 2.0 / 3.0));
    }
    c.near(gw, 0.0, 1e-7, "max |G_GME - 2/3| over 20 states");
    return detail::finish("5", "AME chiral qutrit states", c, t0);
}

// 6: witness identities
inline Result witness_identities(const Options&) {
    const auto t0 = clock::now();
    detail::Checker c;
    double ident = 0.0, comm = 0.0, spec = 0.0;
    for (int d = 2; d <= 5; ++d) {
        const auto g = build_witnesses(d);
        const auto p = witnesses_from_permutations(d);
        ident = std::max({ident, max_abs(g.minus.matrix() - p.minus.matrix()), max_abs(g.plus.matrix() - p.plus.matrix())});
        comm = std::max(comm, max_abs((g.plus * g.minus - g.minus * g.plus).matrix()));
        const double a = d * std::sqrt(3.0);
        const RealVector em = eigenvalues(g.minus.matrix());
        for (Eigen::Index i = 0; i < em.size(); ++i)
            spec = std::max(spec, std::min({std::abs(em(i)), std::abs(em(i) - a), std::abs(em(i) + a)}));
        if (d >= 3) {
            const auto sc = spectral_coefficients(d);
            const auto t = tripartite_projectors(d);
            spec = std::max({spec, max_abs((g.plus * t.S - sc.c_S * t.S).matrix()),
                             max_abs((g.plus * t.A - sc.c_A * t.A).matrix()),
                             max_abs((g.plus * t.J - sc.c_J * t.J).matrix()),
                             max_abs((g.plus * t.Jbar - sc.c_J * t.Jbar).matrix())});
            const RealVector ev = eigenvalues(g.plus.matrix());
            for (Eigen::Index i = 0; i < ev.size(); ++i)
                spec = std::max(spec, std::min({std::abs(ev(i) - sc.c_S), std::abs(ev(i) - sc.c_A),
                                                std::abs(ev(i) - sc.c_J)}));
        }
    }
    c.near(ident, 0.0, 1e-10, "basis vs permutation form");
    c.near(comm, 0.0, 1e-10, "[W+, W-]");
    c.near(spec, 0.0, 1e-9, "spectrum vs coefficients");
    return detail::finish("6", "witness identities", c, t0);
}

// 7: separability bounds of the witnesses
inline Result witness_bounds(const Options& o) {
    const auto t0 = clock::now();
    detail::Checker c;
    for (int d = 3; d <= 5; ++d) {
        const auto w = witnesses_from_permutations(d);
        for (WitnessKind k : {WitnessKind::minus, WitnessKind::plus}) {
            const Operator& W = k == WitnessKind::minus ? w.minus : w.plus;
            const auto b = analytic_bounds(d, k);
            const std::string n = detail::fmt("d=%d %s ", d, witness_name(k).c_str());
            c.near(fully_separable_max(W, detail::seesaw(o, "c7fs", 2 * d + int(k))), b.fs, 1e-7, n + "fs");
            c.near(biseparable_max(W, detail::seesaw(o, "c7bs", 2 * d + int(k))).value, b.bs, 1e-7, n + "bs");
            c.near(max_eigenvalue(W.matrix()), b.q, 1e-7, n + "q");
        }
    }
    return detail::finish("7", "witness bounds", c, t0, 180.0);
}

struct PptGmeData {
    PptGmeSweep d2, d3, d4;
    double seconds3 = 0.0, seconds4 = 0.0;
};

inline PptGmeData ppt_gme_data(const Options& o) {
    PptGmeData g;
    g.d2 = find_ppt_gme(2, o.pptgme_points, {}, o.threads);
    auto t0 = clock::now();
    g.d3 = find_ppt_gme(3, o.pptgme_points, {}, o.threads);
    g.seconds3 = detail::elapsed(t0);
    t0 = clock::now();
    g.d4 = find_ppt_gme(4, o.pptgme_points, {}, o.threads);
    g.seconds4 = detail::elapsed(t0);
    return g;
}

// 8: PPT states that are genuinely multipartite entangled
inline Result ppt_gme(const PptGmeData& g) {
    const auto t0 = clock::now();
    detail::Checker c;
    c.check(g.d2.rows.empty(), "d=2 returns empty");
    for (const PptGmeSweep* s : {&g.d3, &g.d4}) {
        const int d = s->local_dim;
        const auto t = tripartite_projectors(d);
        int good = 0;
        const PptGmeRow* best = nullptr;
        for (const auto& r : s->rows) {
            const double tr = r.a * t.A.trace().real() + r.b * t.S.trace().real() + r.c * t.Jbar.trace().real();
            if (r.a >= 1e-4 && r.min_pt_eig >= -1e-9 && r.trace_P <= -1e-6 && r.gme && std::abs(tr - 1.0) <= 1e-9) {
                ++good;
                if (!best || r.a > best->a) best = &r;
            }
        }
        c.check(good > 0, detail::fmt("d=%d has a PPT GME state", d));
        if (best)
            c.note(detail::fmt("d=%d: %d/%zu rows qualify, best a=%.6g min PT eig=%.3g Tr(P rho)=%.6g GME optimum=%.3g", d,
                               good, s->rows.size(), best->a, best->min_pt_eig, best->trace_P, best->gme_optimum));
    }
    Result r = detail::finish("8", "PPT GME states", c, t0);
    r.seconds = g.seconds3 + g.seconds4;
    r.detail += detail::fmt("runtime d=4 %.1fs (budget 300s)", g.seconds4);
    if (g.seconds4 > 300.0) r.pass = false;
    return r;
}

// Fig. 3/4: the antisymmetric weight rises and then falls across the range
inline Result coefficient_shape(const PptGmeData& g) {
    const auto t0 = clock::now();
    detail::Checker c;
    for (const PptGmeSweep* s : {&g.d3, &g.d4}) {
        const int d = s->local_dim;
        const auto& rows = s->rows;
        std::size_t peak = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].a > rows[peak].a) peak = i;
        bool unimodal = true;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (i <= peak && rows[i].a < rows[i - 1].a - 1e-8) unimodal = false;
            if (i > peak && rows[i].a > rows[i - 1].a + 1e-8) unimodal = false;
        }
        c.check(unimodal, detail::fmt("d=%d a is unimodal", d));
        c.check(peak > 0 && peak + 1 < rows.size(), detail::fmt("d=%d peak is interior", d));
        const double amax = rows[peak].a, span = s->pin_hi - s->pin_lo;
        // a at distance eps*span from each end; it must shrink with eps (the
        // upper end at d = 3 goes like sqrt(eps), the others linearly)
        auto a_at = [&](double pin) { return max_antisymmetric_weight(d, pin).x(0); };
        const double lo3 = a_at(s->pin_lo + 1e-3 * span), lo5 = a_at(s->pin_lo + 1e-5 * span);
        const double hi3 = a_at(s->pin_hi - 1e-3 * span), hi5 = a_at(s->pin_hi - 1e-5 * span);
        c.check(lo5 <= 0.2 * lo3 && hi5 <= 0.2 * hi3, detail::fmt("d=%d a decreases towards both ends", d));
        c.check(lo5 <= 0.05 * amax && hi5 <= 0.05 * amax, detail::fmt("d=%d a vanishes at both ends", d));
        c.note(detail::fmt("d=%d: a_max=%.6g at <W+>=%.4g; a at 1e-3/1e-5 from the ends: lower %.3g/%.3g, upper %.3g/%.3g",
                           d, amax, rows[peak].pin, lo3, lo5, hi3, hi5));
    }
    return detail::finish("fig3/4", "coefficient curve shape", c, t0);
}

// 9: flip-conjugate subspace
inline Result flip_conjugate(const Options& o) {
    const auto t0 = clock::now();
    detail::Checker c;
    for (int d = 3; d <= 5; ++d) {
        const auto fc = flip_conjugate_projectors(d);
        const Operator Y = partial_expectation(fc.I, {2}, Vector::Unit(d, 0));
        c.near(ppt_relaxed_overlap(Y).value, double(d * d) / ((d + 1.0) * (d * d - 1.0)), 1e-6,
               detail::fmt("d=%d PPT overlap", d));
    }
    double worst = 0.0;
    for (int d = 3; d <= 12; ++d)
        worst = std::max(worst, std::abs(chi_norm_max(d, 0, detail::seesaw(o, "c9chi", d)).value - double(d * d) / (d * d - 1.0)));
    c.near(worst, 0.0, 1e-6, "max |chi norm - d^2/(d^2-1)| d=3..12");
    for (int d = 3; d <= 8; ++d) {
        const double G = geometric_measure(flip_conjugate_basis(d).vectors.front(), detail::seesaw(o, "c9gm", d));
        const bool ok = flip_conjugate_analytic_bound(d) <= G + 1e-9;
        c.check(ok, detail::fmt("d=%d analytic bound <= G", d));
        c.note(detail::fmt("d=%d G=%.10f bound=%.10f", d, G, flip_conjugate_analytic_bound(d)));
    }
    return detail::finish("9", "flip-conjugate subspace", c, t0);
}

// 10: four-party and phase states
inline Result four_party(const Options& o) {
    const auto t0 = clock::now();
    detail::Checker c;
    c.near(max_product_overlap(four_qubit_M(), detail::seesaw(o, "c10", 0)).value, 2.0 / 9.0, 1e-6, "Lambda^2(M)");
    c.near(geometric_measure(four_qutrit_chiral(), detail::seesaw(o, "c10", 1)), 7.0 / 8.0, 1e-4, "G(four qutrits)");
    for (int d = 3; d <= 5; ++d)
        c.near(geometric_measure(phase_state(d, pi / 2), detail::seesaw(o, "c10", 1 + d)), 1.0 - 1.0 / (2.0 * (d - 1)),
               1e-4, detail::fmt("d=%d G(phase state)", d));
    return detail::finish("10", "four-party and phase states", c, t0, 300.0);
}

// 11: state space sections
inline Result state_space(const Options& o) {
    const auto t0 = clock::now();
    detail::Checker c;
    const auto v = vertices(3);
    const double a = 3.0 * std::sqrt(3.0);
    c.near(std::max(std::abs(v[0].measured_x + a), std::abs(v[0].measured_y + 5.0 / 3.0)), 0.0, 1e-7, "chiral vertex");
    c.near(std::max(std::abs(v[1].measured_x - a), std::abs(v[1].measured_y + 5.0 / 3.0)), 0.0, 1e-7,
           "antichiral vertex");
    c.near(std::max(std::abs(v[2].measured_x), std::abs(v[2].measured_y - 40.0 / 3.0)), 0.0, 1e-7,
           "antisymmetric vertex");

    SweepOptions so;
    so.grid = o.statespace_grid;
    so.seesaw.seed = derive_seed(o.seed, "c11");
    so.threads = o.threads;
    const auto fam = parse_families("fs,bs,ppt,pptmix,quantum");
    const auto tw = sweep(3, WitnessPairKind::w, fam, so);
    const auto tp = sweep(3, WitnessPairKind::wpt, fam, so);
    const auto nw = nesting_violations(tw), np = nesting_violations(tp);
    c.check(nw.empty(), "nesting (W pair)" + (nw.empty() ? std::string() : ": " + nw.front()));
    c.check(np.empty(), "nesting (partially transposed pair)" + (np.empty() ? std::string() : ": " + np.front()));
    c.note(detail::fmt("nesting checked at %d angles per pair", so.grid));

    double poly = 0.0;
    for (const auto& r : tw.family_rows(Family::quantum)) {
        double h = -1e300;
        for (int k = 0; k < 3; ++k) h = std::max(h, std::cos(r.theta) * v[k].x + std::sin(r.theta) * v[k].y);
        poly = std::max(poly, std::abs(h - r.value));
    }
    c.near(poly, 0.0, 1e-8, "W pair quantum support vs triangle");
    const double dev = max_chord_deviation(tp, Family::quantum);
    c.check(dev > 1e-4, "partially transposed quantum boundary is curved");
    c.note(detail::fmt("chord deviation W pair %.2e, transposed pair %.4g; distinct support points %d vs %d",
                       max_chord_deviation(tw, Family::quantum), dev, distinct_support_points(tw, Family::quantum),
                       distinct_support_points(tp, Family::quantum)));
    return detail::finish("11", "state space sections", c, t0);
}

// 12: permutation test and entropies
inline Result povm(const Options& o) {
    const auto t0 = clock::now();
    detail::Checker c;
    double worst = 0.0;
    for (int d = 2; d <= 3; ++d) {
        const auto t = tripartite_projectors(d);
        const Operator P0 = t.S + t.A;
        Rng rng(derive_seed(o.seed, "c12", d));
        for (int k = 0; k < 100; ++k) {
            const auto psi = random_state({d, d, d}, rng);
            const auto m = permutation_test(psi);
            worst = std::max({worst, std::abs(m.probabilities[0] - P0.expectation(psi).real()),
                              std::abs(m.probabilities[1] - t.Jbar.expectation(psi).real()),
                              std::abs(m.probabilities[2] - t.J.expectation(psi).real())});
        }
    }
    c.near(worst, 0.0, 1e-12, "exact probabilities vs projectors");

    double zmax = 0.0;
    Rng rng(derive_seed(o.seed, "c12-shots"));
    for (int k = 0; k < 5; ++k) {
        const auto psi = random_state({3, 3, 3}, rng);
        const long shots = 100000;
        const auto m = permutation_test(psi, shots, derive_seed(o.seed, "c12-sample", k), o.threads);
        for (int i = 0; i < 3; ++i) {
            const double p = m.probabilities[i], sd = std::sqrt(p * (1 - p) / shots);
            if (sd > 0) zmax = std::max(zmax, std::abs(double(m.counts[i]) / shots - p) / sd);
        }
    }
    c.check(zmax <= 4.0, "sampled frequencies within 4 sigma");
    c.note(detail::fmt("largest deviation %.2f sigma", zmax));

    double tc = 0.0;
    for (int d = 2; d <= 3; ++d)
        for (int k = 0; k < 20; ++k) {
            const Matrix g = random_hermitian(d, rng);
            Matrix rho = g * g.adjoint();
            rho /= rho.trace().real();
            const auto t = trace_cube(Operator({d}, rho));
            tc = std::max({tc, std::abs(t.permutation - t.eigenvalues), std::abs(t.probability - t.eigenvalues)});
        }
    c.near(tc, 0.0, 1e-10, "trace_cube route agreement");

    double prod = 0.0, lu = 0.0;
    for (int d = 2; d <= 3; ++d) {
        for (int k = 0; k < 10; ++k) {
            std::vector<Vector> f;
            for (int j = 0; j < 3; ++j) f.push_back(random_unit_vector(d, rng));
            const StateVector psi({d, d, d}, tensor_product(f), 1e-10);
            prod = std::max(prod, std::abs(gce(psi, {0, 1, 2})));
        }
        const auto psi = random_state({d, d, d}, rng);
        const double g0 = gce(psi, {0, 1, 2});
        for (int k = 0; k < 10; ++k) {
            const Matrix U = tensor_product(std::vector<Matrix>{haar_unitary(d, rng), haar_unitary(d, rng), haar_unitary(d, rng)});
            lu = std::max(lu, std::abs(gce(StateVector({d, d, d}, U * psi.amplitudes(), 1e-10), {0, 1, 2}) - g0));
        }
    }
    c.near(prod, 0.0, 1e-12, "GCE of product states");
    c.near(lu, 0.0, 1e-10, "GCE local-unitary spread");
    return detail::finish("12", "permutation test", c, t0);
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n{"algebra", "bounds", "sdp", "povm", "all"};
    return n;
}

/// algebra: 1, 5, 6; bounds: 2, 3, 4, 7, 10; sdp: 8, 9, 11 and the curve
/// shape; povm: 12. `all` runs the four suites in that order.
inline std::vector<Result> run_suite(const std::string& suite, const Options& o = {},
                                     const std::function<void(const Result&)>& on_result = {}) {
    require(std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end(),
            "unknown suite '" + suite + "' (expected algebra, bounds, sdp, povm or all)");
    std::vector<Result> out;
    auto add = [&](Result r) {
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    };
    const bool all = suite == "all";
    if (all || suite == "algebra") {
        add(projector_algebra(o));
        add(ame_qutrits(o));
        add(witness_identities(o));
    }
    if (all || suite == "bounds") {
        add(product_overlaps_qubits(o));
        add(product_overlaps_qudits(o));
        add(eta_lemmas(o));
        add(witness_bounds(o));
        add(four_party(o));
    }
    if (all || suite == "sdp") {
        const auto g = ppt_gme_data(o);
        add(ppt_gme(g));
        add(coefficient_shape(g));
        add(flip_conjugate(o));
        add(state_space(o));
    }
    if (all || suite == "povm") add(povm(o));
    return out;
}

inline std::string format(const Result& r) {
    return detail::fmt("[%s] criterion %-6s %-30s %7.2fs  ", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(),
                       r.seconds) +
           r.detail;
}

}  // namespace entlab::acceptance
