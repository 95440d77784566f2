#include "qcorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace qcorr {

namespace {

std::array<double, 4> raw_eigenvalues(double r, double s, double c1, double c2, double c3) {
    const double outer = std::hypot(r + s, c1 - c2);
    const double inner = std::hypot(r - s, c1 + c2);
    return {0.25 * (1.0 + c3 + outer), 0.25 * (1.0 + c3 - outer),
            0.25 * (1.0 - c3 + inner), 0.25 * (1.0 - c3 - inner)};
}

}  // namespace

XStateParams::XStateParams(double r_, double s_, double c1_, double c2_, double c3_)
    : r(r_), s(s_), c1(c1_), c2(c2_), c3(c3_) {
    for (double v : {r, s, c1, c2, c3})
        if (!std::isfinite(v)) throw validation_error("X-state parameters must be finite");
    for (double lam : raw_eigenvalues(r, s, c1, c2, c3)) {
        if (lam < -tol::eig_negative || lam > 1.0 + tol::eig_negative) {
            std::ostringstream msg;
            msg << "unphysical X-state parameters (r=" << r << ", s=" << s << ", c1=" << c1
                << ", c2=" << c2 << ", c3=" << c3 << "): eigenvalue " << lam;
            throw validation_error(msg.str());
        }
    }
}

bool XStateParams::bell_diagonal() const {
    return std::abs(r) <= tol::bell_diagonal && std::abs(s) <= tol::bell_diagonal;
}

bool XStateParams::zero() const {
    return r == 0.0 && s == 0.0 && c1 == 0.0 && c2 == 0.0 && c3 == 0.0;
}

BellDiagonalParams::BellDiagonalParams(double c1_, double c2_, double c3_)
    : c1(c1_), c2(c2_), c3(c3_) {
    XStateParams validate(0.0, 0.0, c1, c2, c3);
    (void)validate;
}

Spectrum closed_form_eigenvalues(const XStateParams& p) {
    Spectrum out;
    out.count = 4;
    auto raw = raw_eigenvalues(p.r, p.s, p.c1, p.c2, p.c3);
    for (int i = 0; i < 4; ++i)
        out.values[static_cast<std::size_t>(i)] = std::clamp(raw[static_cast<std::size_t>(i)], 0.0, 1.0);
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
}

Mat to_density_matrix(const XStateParams& p) {
    Mat m(4);
    m(0, 0) = 0.25 * (1.0 + p.r + p.s + p.c3);
    m(1, 1) = 0.25 * (1.0 + p.r - p.s - p.c3);
    m(2, 2) = 0.25 * (1.0 - p.r + p.s - p.c3);
    m(3, 3) = 0.25 * (1.0 - p.r - p.s + p.c3);
    m(0, 3) = m(3, 0) = 0.25 * (p.c1 - p.c2);
    m(1, 2) = m(2, 1) = 0.25 * (p.c1 + p.c2);
    return m;
}

XStateParams from_density_matrix(const Mat& m) {
    if (m.dim() != 4) throw validation_error("from_density_matrix expects a 4x4 matrix");
    if (m.hermiticity_defect() > tol::hermiticity)
        throw validation_error("from_density_matrix: input is not Hermitian");
    if (std::abs(m.trace() - cplx(1.0)) > tol::trace_one)
        throw validation_error("from_density_matrix: trace deviates from one");

    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            if (r == c || r + c == 3) continue;
            if (std::abs(m(r, c)) > tol::x_shape)
                throw validation_error("from_density_matrix: matrix is not X-shaped");
        }
    if (std::abs(std::imag(m(0, 3))) > tol::x_shape || std::abs(std::imag(m(1, 2))) > tol::x_shape)
        throw validation_error(
            "from_density_matrix: anti-diagonal must be real (transverse components unsupported)");

    const double d0 = std::real(m(0, 0)), d1 = std::real(m(1, 1));
    const double d2 = std::real(m(2, 2)), d3 = std::real(m(3, 3));
    const double r_ = d0 + d1 - d2 - d3;
    const double s_ = d0 - d1 + d2 - d3;
    const double c3 = d0 - d1 - d2 + d3;
    const double c1 = 2.0 * (std::real(m(0, 3)) + std::real(m(1, 2)));
    const double c2 = 2.0 * (std::real(m(1, 2)) - std::real(m(0, 3)));
    return {r_, s_, c1, c2, c3};
}

}  // namespace qcorr
