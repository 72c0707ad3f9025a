#pragma once

// Small primal log-det barrier solver for linear matrix inequalities:
//
//   minimize c.x  subject to  F_b(x) = A0_b + sum_i x_i A_ib  >= 0  (each block b),
//                             E x = f.
//
// Coefficient matrices are kept as sparse triplet lists since most of them
// are (partially transposed) permutations or single matrix units.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "entlab/linalg.hpp"

namespace entlab {

struct Triplet {
    int r, c;
    cplx v;
};

struct LmiBlock {
    int n = 0;
    Matrix A0;
    std::vector<std::vector<Triplet>> A;  // per variable, full (both triangles) storage

    void set_coefficient(int var, const Matrix& m, double drop = 1e-15) {
        require(m.rows() == n && m.cols() == n, "coefficient has wrong size");
        auto& t = A.at(var);
        t.clear();
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r)
                if (std::abs(m(r, c)) > drop) t.push_back({r, c, m(r, c)});
    }

    Matrix value(const RealVector& x) const {
        Matrix F = A0;
        for (std::size_t i = 0; i < A.size(); ++i)
            if (x(i) != 0.0)
                for (const auto& e : A[i]) F(e.r, e.c) += x(i) * e.v;
        return F;
    }
};

struct LmiProblem {
    int num_vars = 0;
    RealVector c;
    std::vector<LmiBlock> blocks;
    std::vector<RealVector> eq_rows;
    std::vector<double> eq_rhs;

    explicit LmiProblem(int m = 0) : num_vars(m), c(RealVector::Zero(m)) {}

    LmiBlock& add_block(int n) {
        LmiBlock b;
        b.n = n;
        b.A0 = Matrix::Zero(n, n);
        b.A.resize(num_vars);
        blocks.push_back(std::move(b));
        return blocks.back();
    }

    void add_equality(const RealVector& row, double rhs) {
        require(row.size() == num_vars, "equality row has wrong length");
        eq_rows.push_back(row);
        eq_rhs.push_back(rhs);
    }

    /// Scalar inequalities a_k.x + b_k >= 0 gathered in one diagonal block.
    void add_linear_inequalities(const std::vector<RealVector>& a, const std::vector<double>& b) {
        require(a.size() == b.size() && !a.empty(), "inequality lists must match");
        LmiBlock& blk = add_block(static_cast<int>(a.size()));
        for (int k = 0; k < blk.n; ++k) {
            blk.A0(k, k) = b[k];
            for (int i = 0; i < num_vars; ++i)
                if (a[k](i) != 0.0) blk.A[i].push_back({k, k, a[k](i)});
        }
    }

    /// lo <= x_i <= hi for every listed variable.
    void add_box(const std::vector<int>& vars, double lo, double hi) {
        std::vector<RealVector> a;
        std::vector<double> b;
        for (int i : vars) {
            RealVector up = RealVector::Zero(num_vars), dn = RealVector::Zero(num_vars);
            up(i) = 1.0;
            dn(i) = -1.0;
            a.push_back(up);
            b.push_back(-lo);
            a.push_back(dn);
            b.push_back(hi);
        }
        add_linear_inequalities(a, b);
    }

    int num_equalities() const { return static_cast<int>(eq_rows.size()); }

    RealMatrix E() const {
        RealMatrix e(num_equalities(), num_vars);
        for (int k = 0; k < num_equalities(); ++k) e.row(k) = eq_rows[k].transpose();
        return e;
    }
    RealVector f() const {
        return Eigen::Map<const RealVector>(eq_rhs.data(), static_cast<Eigen::Index>(eq_rhs.size()));
    }

    void validate() const {
        require(num_vars > 0, "problem has no variables");
        require(c.size() == num_vars, "objective has wrong length");
        for (const auto& b : blocks) {
            require(b.A0.rows() == b.n && b.A0.cols() == b.n, "block offset has wrong size");
            require(static_cast<int>(b.A.size()) == num_vars, "block lists the wrong number of variables");
            require(max_abs(b.A0 - b.A0.adjoint()) <= 1e-12, "block offset is not Hermitian");
            for (const auto& t : b.A) {
                Matrix m = Matrix::Zero(b.n, b.n);
                for (const auto& e : t) {
                    require(e.r >= 0 && e.c >= 0 && e.r < b.n && e.c < b.n, "coefficient entry out of range");
                    m(e.r, e.c) += e.v;
                }
                require(max_abs(m - m.adjoint()) <= 1e-12, "block coefficient is not Hermitian");
            }
        }
    }
};

enum class SdpStatus { optimal, infeasible, max_iter };

inline std::string status_name(SdpStatus s) {
    switch (s) {
        case SdpStatus::optimal: return "optimal";
        case SdpStatus::infeasible: return "infeasible";
        case SdpStatus::max_iter: return "max_iter";
    }
    return "?";
}

struct SdpSolution {
    SdpStatus status = SdpStatus::max_iter;
    RealVector x;
    double objective = 0.0;
    double dual_objective = 0.0;  // from Z_b = F_b^{-1}/t and a least-squares multiplier
    double dual_residual = 0.0;
    RealVector min_block_eigs;
    double gap_estimate = 0.0;  // sum_b n_b / t
    int iterations = 0;
};

struct SdpOptions {
    double tol = 1e-8;
    int max_iter = 600;  // Newton steps, phase I included
    double mu = 20.0;
};

namespace detail {

struct BarrierState {
    std::vector<Matrix> G;  // F_b^{-1}
    double logdet = 0.0;
};

inline bool barrier_state(const LmiProblem& p, const RealVector& x, BarrierState* st) {
    if (st) st->G.clear();
    double ld = 0.0;
    for (const auto& b : p.blocks) {
        const Matrix F = b.value(x);
        Eigen::LLT<Matrix> llt(F);
        if (llt.info() != Eigen::Success) return false;
        const Matrix L = llt.matrixL();
        for (int k = 0; k < b.n; ++k) {
            const double dk = L(k, k).real();
            if (!(dk > 0.0) || !std::isfinite(dk)) return false;
            ld += 2.0 * std::log(dk);
        }
        if (st) st->G.push_back(llt.solve(Matrix::Identity(b.n, b.n)));
    }
    if (st) st->logdet = ld;
    return true;
}

inline double trace_with(const Matrix& G, const std::vector<Triplet>& A) {
    cplx s = 0.0;
    for (const auto& e : A) s += G(e.c, e.r) * e.v;
    return s.real();
}

// sum_b Re Tr(G_b A_i G_b A_j)
inline RealMatrix barrier_hessian(const LmiProblem& p, const BarrierState& st) {
    const int m = p.num_vars;
    RealMatrix H = RealMatrix::Zero(m, m);
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) {
        const auto& b = p.blocks[bi];
        const Matrix& G = st.G[bi];
        const int n = b.n;
        std::vector<int> active;
        double nnz = 0.0;
        for (int i = 0; i < m; ++i)
            if (!b.A[i].empty()) {
                active.push_back(i);
                nnz += b.A[i].size();
            }
        const double k = active.size();
        const double cost_sandwich = nnz * n * n + k * nnz;
        const double cost_product = nnz * n + k * k * n * n;
        if (cost_sandwich <= cost_product) {
            for (int i : active) {
                Matrix B = Matrix::Zero(n, n);  // G A_i G
                for (const auto& e : b.A[i]) B.noalias() += e.v * G.col(e.r) * G.row(e.c);
                for (int j : active) H(i, j) += trace_with(B, b.A[j]);
            }
        } else {
            std::vector<Matrix> C;  // G A_i
            C.reserve(active.size());
            for (int i : active) {
                Matrix Ci = Matrix::Zero(n, n);
                for (const auto& e : b.A[i]) Ci.col(e.c) += e.v * G.col(e.r);
                C.push_back(std::move(Ci));
            }
            for (std::size_t a = 0; a < active.size(); ++a)
                for (std::size_t q = a; q < active.size(); ++q) {
                    const double v = (C[a].transpose().cwiseProduct(C[q])).sum().real();
                    H(active[a], active[q]) += v;
                    if (q != a) H(active[q], active[a]) += v;
                }
        }
    }
    return H;
}

// Solves [H E^T; E 0][dx; nu] = [-g; 0]. H is shifted by rho E^T E (which
// leaves dx unchanged on E dx = 0) so that a Cholesky factor exists even
// when H is singular along directions fixed by the equalities.
inline RealVector newton_direction(RealMatrix H, const RealVector& g, const RealMatrix& E) {
    const Eigen::Index m = H.rows();
    const double scale = std::max(1e-300, H.diagonal().cwiseAbs().maxCoeff());
    if (E.rows() > 0) H += scale * E.transpose() * E;
    Eigen::LLT<RealMatrix> llt(H);
    double ridge = 1e-14 * scale;
    while (llt.info() != Eigen::Success) {
        llt.compute(H + ridge * RealMatrix::Identity(m, m));
        ridge *= 10.0;
        if (ridge > scale) throw convergence_error("Newton system is singular");
    }
    if (E.rows() == 0) return -llt.solve(g);
    const RealMatrix Y = llt.solve(E.transpose());
    const RealMatrix S = E * Y;
    const RealVector hg = llt.solve(g);
    const RealVector nu = S.ldlt().solve(-E * hg);
    return -(hg + Y * nu);
}

struct BarrierRun {
    RealVector x;
    double t = 1.0;
    int steps = 0;
    bool centered = false;
    bool stopped = false;  // stop predicate fired
    bool exhausted = false;
};

// Barrier path following from a strictly feasible x with E x = f.
inline BarrierRun barrier_path(const LmiProblem& p, RealVector x, const SdpOptions& opt, int step_budget,
                               const std::function<bool(const RealVector&)>& stop = {}) {
    const int m = p.num_vars;
    const int q = p.num_equalities();
    const RealMatrix E = p.E();
    double nu = 0.0;
    for (const auto& b : p.blocks) nu += b.n;
    BarrierRun run;
    run.t = 1.0;
    BarrierState st;
    if (!barrier_state(p, x, &st)) throw convergence_error("barrier path started outside the feasible set");
    for (;;) {
        // centering
        bool centered = false;
        for (int inner = 0; inner < 200; ++inner) {
            if (run.steps >= step_budget) {
                run.x = x;
                run.exhausted = true;
                return run;
            }
            RealVector g(m);
            for (int i = 0; i < m; ++i) {
                double s = run.t * p.c(i);
                for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) s -= trace_with(st.G[bi], p.blocks[bi].A[i]);
                g(i) = s;
            }
            const RealVector dx = newton_direction(barrier_hessian(p, st), g, E);
            const double lambda2 = -g.dot(dx);
            ++run.steps;
            if (!(lambda2 > 1e-10)) {
                centered = true;
                break;
            }
            // backtracking line search on phi = t c.x - logdet
            const double phi0 = run.t * p.c.dot(x) - st.logdet;
            double s = 1.0;
            BarrierState trial;
            bool moved = false;
            for (int ls = 0; ls < 60; ++ls) {
                const RealVector xn = x + s * dx;
                if (barrier_state(p, xn, &trial)) {
                    const double phi = run.t * p.c.dot(xn) - trial.logdet;
                    if (phi <= phi0 - 0.25 * s * lambda2) {
                        x = xn;
                        st = std::move(trial);
                        moved = true;
                        break;
                    }
                }
                s *= 0.5;
            }
            if (stop && stop(x)) {
                run.x = x;
                run.stopped = true;
                return run;
            }
            if (!moved) {  // no decrease possible at double precision
                centered = true;
                break;
            }
        }
        run.centered = centered;
        if (nu / run.t < opt.tol) break;
        run.t *= opt.mu;
    }
    run.x = x;
    return run;
}

inline RealVector project_to_equalities(const LmiProblem& p, RealVector x) {
    if (p.num_equalities() == 0) return x;
    const RealMatrix E = p.E();
    const RealVector r = p.f() - E * x;
    return x + E.transpose() * (E * E.transpose()).completeOrthogonalDecomposition().solve(r);
}

inline SdpSolution finish(const LmiProblem& p, const RealVector& x, double t, int steps, SdpStatus status) {
    SdpSolution sol;
    sol.status = status;
    sol.x = x;
    sol.objective = p.c.dot(x);
    sol.iterations = steps;
    double nu = 0.0;
    for (const auto& b : p.blocks) nu += b.n;
    sol.gap_estimate = nu / t;
    sol.min_block_eigs = RealVector(p.blocks.size());
    BarrierState st;
    const bool inside = barrier_state(p, x, &st);
    RealVector r = p.c;  // c - sum_b Tr(Z_b A_i)
    double dual = 0.0;
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) {
        const auto& b = p.blocks[bi];
        sol.min_block_eigs(bi) = min_eigenvalue(b.value(x));
        if (!inside) continue;
        const Matrix Z = st.G[bi] / t;
        for (int i = 0; i < p.num_vars; ++i) r(i) -= trace_with(Z, b.A[i]);
        dual -= (Z.cwiseProduct(b.A0.transpose())).sum().real();
    }
    if (p.num_equalities() > 0) {
        const RealMatrix Et = p.E().transpose();
        const RealVector nu_eq = Et.completeOrthogonalDecomposition().solve(r);
        dual += nu_eq.dot(p.f());
        r -= Et * nu_eq;
    }
    sol.dual_objective = dual;
    sol.dual_residual = r.norm();
    return sol;
}

}  // namespace detail

/// Interior-point solve. `start` (if given and strictly feasible after
/// projection onto the equalities) skips phase I.
inline SdpSolution solve_lmi(const LmiProblem& p, const SdpOptions& opt = {},
                             const std::optional<RealVector>& start = std::nullopt) {
    p.validate();
    require(!p.blocks.empty(), "problem has no matrix blocks");
    const int m = p.num_vars;
    RealVector x0 = start ? *start : RealVector::Zero(m);
    require(x0.size() == m, "start point has wrong length");
    x0 = detail::project_to_equalities(p, x0);
    int used = 0;
    if (!detail::barrier_state(p, x0, nullptr)) {
        // phase I: minimize s subject to F_b(x) + s I >= 0, s >= -1, E x = f
        LmiProblem q(m + 1);
        q.c(m) = 1.0;
        double worst = 0.0;
        for (const auto& b : p.blocks) {
            LmiBlock& nb = q.add_block(b.n);
            nb.A0 = b.A0;
            for (int i = 0; i < m; ++i) nb.A[i] = b.A[i];
            for (int k = 0; k < b.n; ++k) nb.A[m].push_back({k, k, 1.0});
            worst = std::max(worst, -min_eigenvalue(b.value(x0)));
        }
        {
            RealVector a = RealVector::Zero(m + 1);
            a(m) = 1.0;
            q.add_linear_inequalities({a}, {1.0});
        }
        {
            // |x - x0| <= R keeps the auxiliary problem bounded when some
            // variable only enters through the equalities or the objective
            const double R = 1e6 * std::max(1.0, x0.norm());
            LmiBlock& ball = q.add_block(m + 1);
            ball.A0 = R * Matrix::Identity(m + 1, m + 1);
            for (int i = 0; i < m; ++i) {
                ball.A0(0, i + 1) = ball.A0(i + 1, 0) = -x0(i);
                ball.A[i] = {{0, i + 1, 1.0}, {i + 1, 0, 1.0}};
            }
        }
        for (int k = 0; k < p.num_equalities(); ++k) {
            RealVector row = RealVector::Zero(m + 1);
            row.head(m) = p.eq_rows[k];
            q.add_equality(row, p.eq_rhs[k]);
        }
        RealVector y(m + 1);
        y.head(m) = x0;
        y(m) = worst + 1.0;
        SdpOptions o1 = opt;
        o1.tol = std::max(opt.tol, 1e-9);
        const auto run = detail::barrier_path(q, y, o1, opt.max_iter,
                                              [&](const RealVector& v) { return v(m) < -1e-3; });
        used = run.steps;
        const double s = run.x(m);
        if (run.exhausted && s >= 0.0) return detail::finish(p, run.x.head(m), 1.0, used, SdpStatus::max_iter);
        if (!(s < -1e-10)) {
            auto sol = detail::finish(p, run.x.head(m), 1.0, used, SdpStatus::infeasible);
            sol.objective = p.c.dot(sol.x);
            return sol;
        }
        x0 = run.x.head(m);
    }
    const auto run = detail::barrier_path(p, x0, opt, opt.max_iter - used);
    return detail::finish(p, run.x, run.t, used + run.steps,
                          run.exhausted ? SdpStatus::max_iter : SdpStatus::optimal);
}

}  // namespace entlab
