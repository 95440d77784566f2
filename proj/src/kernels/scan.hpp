// Internal kernels for the measurement-direction scan. The conditional
// entropy of every (theta, phi) sample depends on the density matrix only
// through its B-side Pauli contractions, packed in a BlochField; scanning
// the grid is then pure data-parallel arithmetic with a scalar reference
// implementation and an AVX2 variant selected at runtime.
#pragma once

namespace qcorr::detail {

// Pauli decomposition of M_k = Tr_B[rho (I (x) sigma_k)] = (a_k I + b_k.sigma)/2,
// k = 0..3 with sigma_0 = I. For a unit-trace rho, a[0] = 1 and b[0] is the
// Bloch vector of the reduced state of A.
struct BlochField {
    double a[4];
    double b[4][3];
};

struct ScanHit {
    double value;
    int theta_index;
    int phi_index;
};

// Conditional entropy (bits) of one measurement direction, from the field.
// Outcomes with probability below 1e-14 contribute zero.
double field_entropy(const BlochField& f, double sin_theta, double cos_theta,
                     double sin_phi, double cos_phi);

// Smallest sample over the theta x phi grid; exact ties resolve to the
// lexicographically first (theta index, phi index).
ScanHit scan_scalar(const BlochField& f, const double* thetas, int n_theta,
                    const double* phis, int n_phi);

#ifdef QCORR_HAVE_AVX2_KERNEL
ScanHit scan_avx2(const BlochField& f, const double* thetas, int n_theta,
                  const double* phis, int n_phi);
#endif

}  // namespace qcorr::detail
