// Two-qubit X states with local Bloch vectors along z, in the five-parameter
// Pauli representation (r, s, c1, c2, c3), and their 4x4 density matrices.
#pragma once

#include "qcorr/linalg.hpp"

namespace qcorr {

namespace tol {
inline constexpr double x_shape = 1e-10;        // off-X entries of a density matrix
inline constexpr double bell_diagonal = 1e-12;  // |r|, |s| below this count as zero
}  // namespace tol

// rho = (I(x)I + r sz(x)I + s I(x)sz + sum_i c_i s_i(x)s_i) / 4.
// Physicality (all four closed-form eigenvalues >= -tol::eig_negative)
// is validated at construction; operations may assume it.
struct XStateParams {
    double r = 0, s = 0, c1 = 0, c2 = 0, c3 = 0;

    XStateParams() = default;
    XStateParams(double r, double s, double c1, double c2, double c3);

    bool bell_diagonal() const;
    bool zero() const;  // all five parameters exactly zero (maximally mixed)
};

// The r = s = 0 subfamily.
struct BellDiagonalParams {
    double c1 = 0, c2 = 0, c3 = 0;

    BellDiagonalParams() = default;
    BellDiagonalParams(double c1, double c2, double c3);

    operator XStateParams() const { return {0.0, 0.0, c1, c2, c3}; }
};

// The four eigenvalues from the two 2x2 blocks of the X matrix:
//   (1 + c3 +- sqrt((r+s)^2 + (c1-c2)^2)) / 4,
//   (1 - c3 +- sqrt((r-s)^2 + (c1+c2)^2)) / 4,
// sorted descending, with tiny negatives clipped like density_eigenvalues.
Spectrum closed_form_eigenvalues(const XStateParams& p);

Mat to_density_matrix(const XStateParams& p);

// Inverse Pauli-basis projection. Requires an X-shaped Hermitian unit-trace
// matrix whose anti-diagonal is real (local Bloch vectors along z only).
XStateParams from_density_matrix(const Mat& m);

}  // namespace qcorr
