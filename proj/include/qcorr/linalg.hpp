// Dense complex matrices of dimension 2 and 4 with the handful of exact
// operations the correlation pipeline needs: Kronecker products, partial
// traces, Hermitian eigenvalues, and von Neumann entropy.
#pragma once

#include <array>
#include <complex>
#include <initializer_list>

#include "qcorr/errors.hpp"

namespace qcorr {

using cplx = std::complex<double>;

namespace tol {
inline constexpr double hermiticity = 1e-10;   // max |m - m^dagger| entry
inline constexpr double eig_negative = 1e-10;  // clip floor for density spectra
inline constexpr double trace_one = 1e-9;
inline constexpr double eig_sum = 1e-9;        // |sum(eigenvalues) - trace|
}  // namespace tol

// Square complex matrix, row-major. Only 2x2 and 4x4 are constructible.
class Mat {
public:
    explicit Mat(int dim);
    Mat(int dim, std::initializer_list<cplx> entries);
    static Mat identity(int dim);

    int dim() const { return dim_; }

    cplx& operator()(int r, int c) { return e_[r * dim_ + c]; }
    const cplx& operator()(int r, int c) const { return e_[r * dim_ + c]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat& operator+=(const Mat& o);

    Mat dagger() const;
    cplx trace() const;

    double max_abs() const;
    double max_abs_diff(const Mat& o) const;
    double hermiticity_defect() const;

private:
    int dim_;
    std::array<cplx, 16> e_{};
};

Mat operator*(cplx a, const Mat& m);
Mat operator*(double a, const Mat& m);

// Pauli operators sigma_1, sigma_2, sigma_3 and the 2x2 identity.
const Mat& pauli(int i);
const Mat& identity2();

// Real eigenvalues sorted descending.
struct Spectrum {
    std::array<double, 4> values{};
    int count = 0;

    double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
    const double* begin() const { return values.data(); }
    const double* end() const { return values.data() + count; }
    double sum() const;
};

// Kronecker product. Only the 2x2 (x) 2x2 case produces a representable
// (4x4) result; anything larger is rejected.
Mat tensor(const Mat& a, const Mat& b);

enum class Subsystem { A, B };

// Reduced 2x2 operator of a 4x4 two-qubit operator.
Mat partial_trace(const Mat& m, Subsystem keep);

// Cyclic complex Jacobi diagonalization. The input must be Hermitian to
// within tol::hermiticity per entry; the eigenvalue sum reproduces the
// trace to tol::eig_sum.
Spectrum hermitian_eigenvalues(const Mat& m);

// Eigenvalues of a density matrix: values in [-tol::eig_negative, 0) are
// clipped to zero, anything below is rejected as unphysical.
Spectrum density_eigenvalues(const Mat& rho);

// Shannon entropy in bits of a probability spectrum, with 0 log 0 = 0.
double entropy_of(const Spectrum& s);

// -Tr(rho log2 rho) in bits. Validates that rho is a density matrix:
// Hermitian, unit trace to tol::trace_one, PSD to clipping tolerance.
double von_neumann_entropy(const Mat& rho);

}  // namespace qcorr
