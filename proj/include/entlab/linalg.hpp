#pragma once

// Dense complex linear algebra on tensor-product spaces (C^{d_1} x ... x C^{d_n}).
// Party 0 is the most significant digit of the computational-basis index, so
// kron(a, b) places `a` on the first factor.

#include <Eigen/Dense>

#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "entlab/core.hpp"

namespace entlab {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

namespace detail {

inline long dim_product(const std::vector<int>& dims) {
    long p = 1;
    for (int d : dims) p *= d;
    return p;
}

inline void check_dims(const std::vector<int>& dims) {
    require(!dims.empty(), "tensor structure needs at least one factor");
    for (int d : dims) require(d >= 1, "local dimensions must be positive");
}

inline void check_party_set(const std::vector<int>& set, int n) {
    std::vector<bool> seen(n, false);
    for (int p : set) {
        require(p >= 0 && p < n, "party index " + std::to_string(p) + " out of range for " +
                                     std::to_string(n) + " parties");
        require(!seen[p], "party index " + std::to_string(p) + " listed twice");
        seen[p] = true;
    }
}

// Splits a flat index into per-party digits.
inline void digits_of(long index, const std::vector<int>& dims, std::vector<int>& out) {
    out.resize(dims.size());
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        out[k] = static_cast<int>(index % dims[k]);
        index /= dims[k];
    }
}

inline long index_of(const std::vector<int>& digits, const std::vector<int>& dims) {
    long idx = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
    return idx;
}

inline std::vector<int> complement(const std::vector<int>& set, int n) {
    std::vector<bool> in(n, false);
    for (int p : set) in[p] = true;
    std::vector<int> rest;
    for (int k = 0; k < n; ++k)
        if (!in[k]) rest.push_back(k);
    return rest;
}

inline std::vector<int> select(const std::vector<int>& dims, const std::vector<int>& parties) {
    std::vector<int> out;
    out.reserve(parties.size());
    for (int p : parties) out.push_back(dims[p]);
    return out;
}

// full_index[s][r]: flat index of the basis vector whose digits on `fixed`
// are those of s and whose digits on the complement are those of r.
inline std::vector<std::vector<long>> split_index_table(const std::vector<int>& dims,
                                                         const std::vector<int>& fixed) {
    const int n = static_cast<int>(dims.size());
    const auto rest = complement(fixed, n);
    const auto fdims = select(dims, fixed);
    const auto rdims = select(dims, rest);
    const long nf = dim_product(fdims), nr = dim_product(rdims);
    std::vector<std::vector<long>> table(nf, std::vector<long>(nr));
    std::vector<int> fd, rd, full(n);
    for (long s = 0; s < nf; ++s) {
        digits_of(s, fdims, fd);
        for (std::size_t k = 0; k < fixed.size(); ++k) full[fixed[k]] = fd[k];
        for (long r = 0; r < nr; ++r) {
            digits_of(r, rdims, rd);
            for (std::size_t k = 0; k < rest.size(); ++k) full[rest[k]] = rd[k];
            table[s][r] = index_of(full, dims);
        }
    }
    return table;
}

}  // namespace detail

class StateVector;

/// Dense square operator tagged with its tensor-factor structure.
class Operator {
public:
    Operator() = default;

    Operator(std::vector<int> dims, Matrix m) : dims_(std::move(dims)), m_(std::move(m)) {
        detail::check_dims(dims_);
        const long D = detail::dim_product(dims_);
        require(m_.rows() == D && m_.cols() == D,
                "matrix size " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) +
                    " does not match tensor dimension " + std::to_string(D));
    }

    static Operator uniform(int parties, int local_dim, Matrix m) {
        require(parties >= 1, "need at least one party");
        return Operator(std::vector<int>(parties, local_dim), std::move(m));
    }

    static Operator identity(std::vector<int> dims) {
        const long D = detail::dim_product(dims);
        return Operator(std::move(dims), Matrix::Identity(D, D));
    }
    static Operator identity(int parties, int local_dim) {
        return identity(std::vector<int>(parties, local_dim));
    }
    static Operator zero(std::vector<int> dims) {
        const long D = detail::dim_product(dims);
        return Operator(std::move(dims), Matrix::Zero(D, D));
    }

    const Matrix& matrix() const noexcept { return m_; }
    const std::vector<int>& dims() const noexcept { return dims_; }
    int parties() const noexcept { return static_cast<int>(dims_.size()); }
    long dim() const noexcept { return m_.rows(); }

    bool is_uniform() const {
        return std::all_of(dims_.begin(), dims_.end(), [&](int d) { return d == dims_.front(); });
    }
    int local_dim() const {
        require(is_uniform(), "operator has mixed local dimensions");
        return dims_.front();
    }

    Operator adjoint() const { return Operator(dims_, m_.adjoint()); }
    Operator conjugate() const { return Operator(dims_, m_.conjugate()); }
    Operator transpose() const { return Operator(dims_, m_.transpose()); }
    cplx trace() const { return m_.trace(); }

    bool is_hermitian(double tol = 1e-12) const { return max_abs(m_ - m_.adjoint()) <= tol; }

    cplx expectation(const StateVector& psi) const;

    Operator& operator+=(const Operator& o) {
        check_same(o);
        m_ += o.m_;
        return *this;
    }
    Operator& operator-=(const Operator& o) {
        check_same(o);
        m_ -= o.m_;
        return *this;
    }
    Operator& operator*=(cplx s) {
        m_ *= s;
        return *this;
    }

    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    friend Operator operator-(Operator a) {
        a.m_ = -a.m_;
        return a;
    }
    friend Operator operator*(const Operator& a, const Operator& b) {
        a.check_same(b);
        return Operator(a.dims_, a.m_ * b.m_);
    }
    friend Operator operator*(cplx s, Operator a) { return a *= s; }
    friend Operator operator*(double s, Operator a) { return a *= cplx(s, 0.0); }
    friend Operator operator*(Operator a, double s) { return a *= cplx(s, 0.0); }
    friend Operator operator/(Operator a, double s) { return a *= cplx(1.0 / s, 0.0); }

private:
    void check_same(const Operator& o) const {
        require(dims_ == o.dims_, "operators live on different tensor structures");
    }

    std::vector<int> dims_;
    Matrix m_;
};

/// Unit vector on a tensor-product space.
class StateVector {
public:
    StateVector() = default;

    /// Requires |amps|^2 = 1 within `tol`.
    StateVector(std::vector<int> dims, Vector amps, double tol = 1e-12)
        : dims_(std::move(dims)), v_(std::move(amps)) {
        detail::check_dims(dims_);
        require(v_.size() == detail::dim_product(dims_), "amplitude count does not match dims");
        require(std::abs(v_.squaredNorm() - 1.0) <= tol, "state vector is not normalized");
    }

    static StateVector normalized(std::vector<int> dims, Vector amps) {
        const double n = amps.norm();
        require(n > 0.0, "cannot normalize the zero vector");
        return StateVector(std::move(dims), amps / n);
    }

    static StateVector basis(std::vector<int> dims, long index) {
        const long D = detail::dim_product(dims);
        require(index >= 0 && index < D, "basis index out of range");
        Vector v = Vector::Zero(D);
        v(index) = 1.0;
        return StateVector(std::move(dims), std::move(v));
    }

    /// |digits> in the computational basis.
    static StateVector product_basis(std::vector<int> dims, const std::vector<int>& digits) {
        require(digits.size() == dims.size(), "digit count does not match party count");
        const long idx = detail::index_of(digits, dims);
        return basis(std::move(dims), idx);
    }

    const Vector& amplitudes() const noexcept { return v_; }
    const std::vector<int>& dims() const noexcept { return dims_; }
    int parties() const noexcept { return static_cast<int>(dims_.size()); }
    long dim() const noexcept { return v_.size(); }
    int local_dim() const {
        require(std::all_of(dims_.begin(), dims_.end(), [&](int d) { return d == dims_.front(); }),
                "state has mixed local dimensions");
        return dims_.front();
    }

    cplx inner(const StateVector& o) const { return v_.dot(o.v_); }  // <this|o>
    StateVector conjugate() const { return StateVector(dims_, v_.conjugate()); }
    Operator projector() const { return Operator(dims_, v_ * v_.adjoint()); }

    StateVector apply(const Operator& op) const {
        require(op.dims() == dims_, "operator and state live on different spaces");
        return StateVector::normalized(dims_, op.matrix() * v_);
    }

private:
    std::vector<int> dims_;
    Vector v_;
};

inline cplx Operator::expectation(const StateVector& psi) const {
    require(psi.dims() == dims_, "operator and state live on different spaces");
    return psi.amplitudes().dot(m_ * psi.amplitudes());
}

inline std::vector<int> concat_dims(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Operator kron(const Operator& a, const Operator& b) {
    return Operator(concat_dims(a.dims(), b.dims()), kron(a.matrix(), b.matrix()));
}

inline StateVector kron(const StateVector& a, const StateVector& b) {
    const Vector& x = a.amplitudes();
    const Vector& y = b.amplitudes();
    Vector out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out.segment(i * y.size(), y.size()) = x(i) * y;
    return StateVector(concat_dims(a.dims(), b.dims()), std::move(out), 1e-10);
}

/// Transpose on the listed tensor factors. Involution.
inline Operator partial_transpose(const Operator& a, const std::vector<int>& parties) {
    detail::check_party_set(parties, a.parties());
    const auto& dims = a.dims();
    const long D = a.dim();
    std::vector<bool> mask(dims.size(), false);
    for (int p : parties) mask[p] = true;
    Matrix out(D, D);
    std::vector<int> rd, cd;
    for (long r = 0; r < D; ++r) {
        detail::digits_of(r, dims, rd);
        for (long c = 0; c < D; ++c) {
            detail::digits_of(c, dims, cd);
            for (std::size_t k = 0; k < dims.size(); ++k)
                if (mask[k]) std::swap(rd[k], cd[k]);
            out(detail::index_of(rd, dims), detail::index_of(cd, dims)) = a.matrix()(r, c);
            for (std::size_t k = 0; k < dims.size(); ++k)
                if (mask[k]) std::swap(rd[k], cd[k]);
        }
    }
    return Operator(dims, std::move(out));
}

/// Traces out the listed tensor factors.
inline Operator partial_trace(const Operator& a, const std::vector<int>& traced) {
    detail::check_party_set(traced, a.parties());
    require(static_cast<int>(traced.size()) < a.parties(), "cannot trace out every party");
    const auto kept = detail::complement(traced, a.parties());
    const auto table = detail::split_index_table(a.dims(), kept);  // [kept][traced]
    const long nk = static_cast<long>(table.size());
    const long nt = static_cast<long>(table.front().size());
    Matrix out = Matrix::Zero(nk, nk);
    for (long r = 0; r < nk; ++r)
        for (long c = 0; c < nk; ++c) {
            cplx s = 0.0;
            for (long t = 0; t < nt; ++t) s += a.matrix()(table[r][t], table[c][t]);
            out(r, c) = s;
        }
    return Operator(detail::select(a.dims(), kept), std::move(out));
}

/// Reduced density matrix of |psi><psi| on `kept`, computed without forming
/// the full projector.
inline Operator reduced_density(const StateVector& psi, const std::vector<int>& kept) {
    detail::check_party_set(kept, psi.parties());
    require(!kept.empty(), "reduction needs at least one kept party");
    const auto table = detail::split_index_table(psi.dims(), kept);
    const long nk = static_cast<long>(table.size());
    const long nt = static_cast<long>(table.front().size());
    Matrix m(nk, nt);
    for (long k = 0; k < nk; ++k)
        for (long t = 0; t < nt; ++t) m(k, t) = psi.amplitudes()(table[k][t]);
    return Operator(detail::select(psi.dims(), kept), m * m.adjoint());
}

/// (<anchor|_fixed x 1) A (|anchor>_fixed x 1): the operator left on the
/// remaining parties after fixing `fixed` to `anchor`.
inline Operator partial_expectation(const Operator& a, const std::vector<int>& fixed,
                                    const Vector& anchor) {
    detail::check_party_set(fixed, a.parties());
    require(!fixed.empty() && static_cast<int>(fixed.size()) < a.parties(),
            "anchor must cover a nonempty proper subset of parties");
    const auto table = detail::split_index_table(a.dims(), fixed);
    const long nf = static_cast<long>(table.size());
    const long nr = static_cast<long>(table.front().size());
    require(anchor.size() == nf, "anchor dimension does not match the fixed parties");
    const Matrix& m = a.matrix();
    Matrix out = Matrix::Zero(nr, nr);
    for (long s = 0; s < nf; ++s) {
        if (anchor(s) == 0.0) continue;
        for (long t = 0; t < nf; ++t) {
            const cplx w = std::conj(anchor(s)) * anchor(t);
            if (w == 0.0) continue;
            for (long r = 0; r < nr; ++r)
                for (long c = 0; c < nr; ++c) out(r, c) += w * m(table[s][r], table[t][c]);
        }
    }
    return Operator(detail::select(a.dims(), detail::complement(fixed, a.parties())),
                    std::move(out));
}

struct EigenDecomposition {
    RealVector values;  // ascending
    Matrix vectors;     // columns
};

inline EigenDecomposition hermitian_eig(const Matrix& a) {
    require(a.rows() == a.cols(), "eigendecomposition needs a square matrix");
    const double scale = std::max(1.0, max_abs(a));
    require(max_abs(a - a.adjoint()) <= 1e-10 * scale, "matrix is not Hermitian");
    const Matrix h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success) throw convergence_error("Hermitian eigensolver failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

inline EigenDecomposition hermitian_eig(const Operator& a) { return hermitian_eig(a.matrix()); }

inline RealVector eigenvalues(const Matrix& a) { return hermitian_eig(a).values; }

inline double min_eigenvalue(const Matrix& a) { return eigenvalues(a)(0); }
inline double max_eigenvalue(const Matrix& a) {
    const RealVector v = eigenvalues(a);
    return v(v.size() - 1);
}

/// Schmidt coefficients of psi across `side | rest`, descending.
inline std::vector<double> schmidt_coefficients(const StateVector& psi,
                                                const std::vector<int>& side) {
    detail::check_party_set(side, psi.parties());
    require(!side.empty() && static_cast<int>(side.size()) < psi.parties(),
            "bipartition must split the parties into two nonempty sets");
    const auto table = detail::split_index_table(psi.dims(), side);
    const long na = static_cast<long>(table.size());
    const long nb = static_cast<long>(table.front().size());
    Matrix m(na, nb);
    for (long a = 0; a < na; ++a)
        for (long b = 0; b < nb; ++b) m(a, b) = psi.amplitudes()(table[a][b]);
    Eigen::JacobiSVD<Matrix> svd(m);
    const RealVector s = svd.singularValues();  // already descending
    return std::vector<double>(s.data(), s.data() + s.size());
}

inline Vector random_gaussian_vector(long n, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector v(n);
    for (long i = 0; i < n; ++i) {
        const double re = g(rng);
        const double im = g(rng);
        v(i) = cplx(re, im);
    }
    return v;
}

/// Haar-uniform unit vector in C^n.
inline Vector random_unit_vector(long n, Rng& rng) {
    Vector v = random_gaussian_vector(n, rng);
    return v / v.norm();
}

inline StateVector random_state(std::vector<int> dims, Rng& rng) {
    const long D = detail::dim_product(dims);
    return StateVector(std::move(dims), random_unit_vector(D, rng), 1e-10);
}

/// GUE-like random Hermitian matrix.
inline Matrix random_hermitian(long n, Rng& rng) {
    Matrix g(n, n);
    for (long j = 0; j < n; ++j) g.col(j) = random_gaussian_vector(n, rng);
    return 0.5 * (g + g.adjoint());
}

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// R's diagonal moved into Q.
inline Matrix haar_unitary(int d, Rng& rng) {
    require(d >= 1, "unitary dimension must be positive");
    Matrix g(d, d);
    for (int j = 0; j < d; ++j) g.col(j) = random_gaussian_vector(d, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(d, d);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const cplx rjj = r(j, j);
        const double a = std::abs(rjj);
        if (a > 0.0) q.col(j) *= rjj / a;
    }
    return q;
}

inline Operator haar_random_unitary(int d, std::uint64_t seed) {
    Rng rng(seed);
    return Operator({d}, haar_unitary(d, rng));
}

/// U^{(x)n}: the same local unitary on every party.
inline Matrix tensor_power(const Matrix& u, int n) {
    Matrix out = u;
    for (int k = 1; k < n; ++k) out = kron(out, u);
    return out;
}

inline Matrix tensor_product(const std::vector<Matrix>& factors) {
    require(!factors.empty(), "empty tensor product");
    Matrix out = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
    return out;
}

inline Vector tensor_product(const std::vector<Vector>& factors) {
    require(!factors.empty(), "empty tensor product");
    Vector out = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) {
        Vector next(out.size() * factors[k].size());
        for (Eigen::Index i = 0; i < out.size(); ++i)
            next.segment(i * factors[k].size(), factors[k].size()) = out(i) * factors[k];
        out = std::move(next);
    }
    return out;
}

}  // namespace entlab
