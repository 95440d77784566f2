#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qcorr {

namespace {

void check_dim(int dim) {
    if (dim != 2 && dim != 4)
        throw validation_error("matrix dimension must be 2 or 4");
}

}  // namespace

Mat::Mat(int dim) : dim_(dim) {
    check_dim(dim);
}

Mat::Mat(int dim, std::initializer_list<cplx> entries) : dim_(dim) {
    check_dim(dim);
    if (static_cast<int>(entries.size()) != dim * dim)
        throw validation_error("matrix entry count does not match dimension");
    std::copy(entries.begin(), entries.end(), e_.begin());
}

Mat Mat::identity(int dim) {
    Mat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (dim_ != o.dim_) throw validation_error("matrix dimension mismatch");
    Mat out(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (dim_ != o.dim_) throw validation_error("matrix dimension mismatch");
    Mat out(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

Mat Mat::operator*(const Mat& o) const {
    if (dim_ != o.dim_) throw validation_error("matrix dimension mismatch");
    Mat out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int k = 0; k < dim_; ++k) {
            const cplx a = (*this)(r, k);
            if (a == cplx{}) continue;
            for (int c = 0; c < dim_; ++c) out(r, c) += a * o(k, c);
        }
    return out;
}

Mat& Mat::operator+=(const Mat& o) {
    if (dim_ != o.dim_) throw validation_error("matrix dimension mismatch");
    for (int i = 0; i < dim_ * dim_; ++i) e_[i] += o.e_[i];
    return *this;
}

Mat Mat::dagger() const {
    Mat out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

cplx Mat::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double Mat::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(e_[i]));
    return m;
}

double Mat::max_abs_diff(const Mat& o) const {
    if (dim_ != o.dim_) throw validation_error("matrix dimension mismatch");
    double m = 0.0;
    for (int i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(e_[i] - o.e_[i]));
    return m;
}

double Mat::hermiticity_defect() const {
    double m = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = r; c < dim_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

Mat operator*(cplx a, const Mat& m) {
    Mat out(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) out(r, c) = a * m(r, c);
    return out;
}

Mat operator*(double a, const Mat& m) { return cplx(a, 0.0) * m; }

const Mat& pauli(int i) {
    static const Mat sx(2, {0, 1, 1, 0});
    static const Mat sy(2, {0, cplx(0, -1), cplx(0, 1), 0});
    static const Mat sz(2, {1, 0, 0, -1});
    switch (i) {
        case 1: return sx;
        case 2: return sy;
        case 3: return sz;
        default: throw validation_error("pauli index must be 1, 2 or 3");
    }
}

const Mat& identity2() {
    static const Mat i2 = Mat::identity(2);
    return i2;
}

double Spectrum::sum() const {
    double s = 0.0;
    for (int i = 0; i < count; ++i) s += values[static_cast<std::size_t>(i)];
    return s;
}

Mat tensor(const Mat& a, const Mat& b) {
    if (a.dim() * b.dim() > 4)
        throw validation_error("tensor: only 2x2 (x) 2x2 products are representable");
    Mat out(a.dim() * b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < b.dim(); ++k)
                for (int l = 0; l < b.dim(); ++l)
                    out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
    return out;
}

Mat partial_trace(const Mat& m, Subsystem keep) {
    if (m.dim() != 4) throw validation_error("partial_trace expects a 4x4 matrix");
    Mat out(2);
    if (keep == Subsystem::A) {
        for (int a = 0; a < 2; ++a)
            for (int ap = 0; ap < 2; ++ap)
                out(a, ap) = m(2 * a + 0, 2 * ap + 0) + m(2 * a + 1, 2 * ap + 1);
    } else {
        for (int b = 0; b < 2; ++b)
            for (int bp = 0; bp < 2; ++bp)
                out(b, bp) = m(0 + b, 0 + bp) + m(2 + b, 2 + bp);
    }
    return out;
}

namespace {

// One complex Jacobi rotation annihilating a(p,q), applied as
// a <- J^dagger a J.
void jacobi_rotate(Mat& a, int p, int q) {
    const cplx apq = a(p, q);
    const double h = std::abs(apq);
    if (h == 0.0) return;
    const cplx w = apq / h;  // phase of the off-diagonal entry

    const double app = std::real(a(p, p));
    const double aqq = std::real(a(q, q));
    const double tau = (aqq - app) / (2.0 * h);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    Mat j = Mat::identity(a.dim());
    j(p, p) = c;
    j(p, q) = s * w;
    j(q, p) = -s * std::conj(w);
    j(q, q) = c;
    a = j.dagger() * a * j;
}

double max_offdiag(const Mat& a) {
    double m = 0.0;
    for (int p = 0; p < a.dim(); ++p)
        for (int q = p + 1; q < a.dim(); ++q) m = std::max(m, std::abs(a(p, q)));
    return m;
}

}  // namespace

Spectrum hermitian_eigenvalues(const Mat& m) {
    if (m.hermiticity_defect() > tol::hermiticity)
        throw validation_error("hermitian_eigenvalues: input is not Hermitian");

    // Work on the Hermitian average so input round-off cannot bias rotations.
    Mat a = 0.5 * (m + m.dagger());
    const double scale = std::max(a.max_abs(), 1e-300);

    bool converged = false;
    for (int sweep = 0; sweep < 50; ++sweep) {
        if (max_offdiag(a) <= 1e-15 * scale) {
            converged = true;
            break;
        }
        for (int p = 0; p < a.dim(); ++p)
            for (int q = p + 1; q < a.dim(); ++q) jacobi_rotate(a, p, q);
    }
    if (!converged && max_offdiag(a) > 1e-12 * scale)
        throw numeric_error("Jacobi eigensolver did not converge");

    Spectrum out;
    out.count = a.dim();
    for (int i = 0; i < a.dim(); ++i) out.values[static_cast<std::size_t>(i)] = std::real(a(i, i));
    std::sort(out.values.begin(), out.values.begin() + out.count, std::greater<>());

    if (std::abs(out.sum() - std::real(m.trace())) >
        tol::eig_sum * std::max(1.0, std::abs(m.trace())))
        throw numeric_error("eigenvalue sum does not reproduce the trace");
    return out;
}

Spectrum density_eigenvalues(const Mat& rho) {
    Spectrum s = hermitian_eigenvalues(rho);
    for (int i = 0; i < s.count; ++i) {
        double& v = s.values[static_cast<std::size_t>(i)];
        if (v < -tol::eig_negative)
            throw validation_error("density matrix has a negative eigenvalue beyond tolerance");
        if (v > 1.0 + tol::trace_one)
            throw validation_error("density matrix has an eigenvalue above one");
        v = std::clamp(v, 0.0, 1.0);
    }
    return s;
}

double entropy_of(const Spectrum& s) {
    double e = 0.0;
    for (int i = 0; i < s.count; ++i) {
        const double v = s[i];
        if (v > 0.0) e -= v * std::log2(v);
    }
    return std::max(e, 0.0);
}

double von_neumann_entropy(const Mat& rho) {
    if (std::abs(rho.trace() - cplx(1.0)) > tol::trace_one)
        throw validation_error("von_neumann_entropy: trace deviates from one");
    return entropy_of(density_eigenvalues(rho));
}

}  // namespace qcorr
