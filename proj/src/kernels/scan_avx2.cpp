// AVX2/FMA variant of the direction scan: four (theta, phi) samples per
// iteration, with a vectorized log2 (exponent/mantissa split plus the
// classic atanh-form remainder polynomial). Tail samples fall back to the
// scalar evaluator; tie-breaking matches the scalar kernel's scan order.
#include "kernels/scan.hpp"

#include <immintrin.h>

#include <cmath>
#include <limits>
#include <vector>

namespace qcorr::detail {

namespace {

constexpr double prob_floor = 1e-14;
constexpr double xlog_floor = 1e-300;

const __m256d k_half = _mm256_set1_pd(0.5);
const __m256d k_one = _mm256_set1_pd(1.0);

// Remainder coefficients for log(1+f) on [sqrt(2)/2 - 1, sqrt(2) - 1]
// (SunSoft fdlibm constants).
const __m256d k_lg1 = _mm256_set1_pd(6.666666666666735130e-01);
const __m256d k_lg2 = _mm256_set1_pd(3.999999999940941908e-01);
const __m256d k_lg3 = _mm256_set1_pd(2.857142874366239149e-01);
const __m256d k_lg4 = _mm256_set1_pd(2.222219843214978396e-01);
const __m256d k_lg5 = _mm256_set1_pd(1.818357216161805012e-01);
const __m256d k_lg6 = _mm256_set1_pd(1.531383769920937332e-01);
const __m256d k_lg7 = _mm256_set1_pd(1.479819860511658591e-01);
const __m256d k_inv_ln2 = _mm256_set1_pd(1.4426950408889634074);

// log2(x) for normal positive x (the caller floors its argument).
inline __m256d v_log2(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);

    // biased exponent as a double, via the 2^52 shift trick
    const __m256i biased = _mm256_srli_epi64(bits, 52);
    const __m256d shifted = _mm256_castsi256_pd(
        _mm256_or_si256(biased, _mm256_set1_epi64x(0x4330000000000000LL)));
    __m256d e = _mm256_sub_pd(shifted, _mm256_set1_pd(4503599627370496.0 + 1023.0));

    // mantissa in [1, 2), then renormalized to [sqrt(2)/2, sqrt(2))
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(
        _mm256_and_si256(bits, _mm256_set1_epi64x(0x000fffffffffffffLL)),
        _mm256_set1_epi64x(0x3ff0000000000000LL)));
    const __m256d above = _mm256_cmp_pd(m, _mm256_set1_pd(1.41421356237309515), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, k_half), above);
    e = _mm256_add_pd(e, _mm256_and_pd(above, k_one));

    const __m256d f = _mm256_sub_pd(m, k_one);
    const __m256d s = _mm256_div_pd(f, _mm256_add_pd(f, _mm256_set1_pd(2.0)));
    const __m256d z = _mm256_mul_pd(s, s);
    __m256d r = _mm256_fmadd_pd(z, k_lg7, k_lg6);
    r = _mm256_fmadd_pd(z, r, k_lg5);
    r = _mm256_fmadd_pd(z, r, k_lg4);
    r = _mm256_fmadd_pd(z, r, k_lg3);
    r = _mm256_fmadd_pd(z, r, k_lg2);
    r = _mm256_fmadd_pd(z, r, k_lg1);
    r = _mm256_mul_pd(z, r);

    const __m256d hfsq = _mm256_mul_pd(_mm256_mul_pd(k_half, f), f);
    // log(1+f) = f - hfsq + s (hfsq + R)
    const __m256d ln_m =
        _mm256_add_pd(_mm256_sub_pd(f, hfsq), _mm256_mul_pd(s, _mm256_add_pd(hfsq, r)));
    return _mm256_fmadd_pd(ln_m, k_inv_ln2, e);
}

// -x log2(x), zero at and below the floor.
inline __m256d v_neg_xlog2x(__m256d x) {
    const __m256d floor_v = _mm256_set1_pd(xlog_floor);
    const __m256d safe = _mm256_max_pd(x, floor_v);
    __m256d val = _mm256_mul_pd(x, v_log2(safe));
    val = _mm256_and_pd(val, _mm256_cmp_pd(x, floor_v, _CMP_GT_OQ));
    return _mm256_sub_pd(_mm256_setzero_pd(), val);
}

// one measurement outcome (+1 or -1 branch) for four directions at once
inline __m256d outcome_term(const BlochField& f, double sign, __m256d nx, __m256d ny,
                            __m256d nz) {
    const __m256d sgn = _mm256_set1_pd(sign);
    __m256d proj = _mm256_mul_pd(nx, _mm256_set1_pd(f.a[1]));
    proj = _mm256_fmadd_pd(ny, _mm256_set1_pd(f.a[2]), proj);
    proj = _mm256_fmadd_pd(nz, _mm256_set1_pd(f.a[3]), proj);
    const __m256d p =
        _mm256_mul_pd(k_half, _mm256_fmadd_pd(sgn, proj, _mm256_set1_pd(f.a[0])));

    __m256d usq = _mm256_setzero_pd();
    for (int j = 0; j < 3; ++j) {
        __m256d bj = _mm256_mul_pd(nx, _mm256_set1_pd(f.b[1][j]));
        bj = _mm256_fmadd_pd(ny, _mm256_set1_pd(f.b[2][j]), bj);
        bj = _mm256_fmadd_pd(nz, _mm256_set1_pd(f.b[3][j]), bj);
        const __m256d uj =
            _mm256_mul_pd(k_half, _mm256_fmadd_pd(sgn, bj, _mm256_set1_pd(f.b[0][j])));
        usq = _mm256_fmadd_pd(uj, uj, usq);
    }

    // t = min(|u| / p, 1); NaN/inf from p ~ 0 resolves to 1 and is masked below
    const __m256d t = _mm256_min_pd(_mm256_div_pd(_mm256_sqrt_pd(usq), p), k_one);
    const __m256d lam_plus = _mm256_mul_pd(k_half, _mm256_add_pd(k_one, t));
    const __m256d lam_minus = _mm256_mul_pd(k_half, _mm256_sub_pd(k_one, t));
    __m256d term =
        _mm256_mul_pd(p, _mm256_add_pd(v_neg_xlog2x(lam_plus), v_neg_xlog2x(lam_minus)));
    term = _mm256_and_pd(term, _mm256_cmp_pd(p, _mm256_set1_pd(prob_floor), _CMP_GE_OQ));
    return term;
}

}  // namespace

ScanHit scan_avx2(const BlochField& f, const double* thetas, int n_theta,
                  const double* phis, int n_phi) {
    std::vector<double> sin_phi(static_cast<std::size_t>(n_phi));
    std::vector<double> cos_phi(static_cast<std::size_t>(n_phi));
    for (int j = 0; j < n_phi; ++j) {
        sin_phi[static_cast<std::size_t>(j)] = std::sin(phis[j]);
        cos_phi[static_cast<std::size_t>(j)] = std::cos(phis[j]);
    }

    ScanHit best{std::numeric_limits<double>::infinity(), 0, 0};
    for (int i = 0; i < n_theta; ++i) {
        const double st = std::sin(thetas[i]);
        const double ct = std::cos(thetas[i]);
        const __m256d vst = _mm256_set1_pd(st);
        const __m256d vct = _mm256_set1_pd(ct);

        int j = 0;
        for (; j + 4 <= n_phi; j += 4) {
            const __m256d cp = _mm256_loadu_pd(&cos_phi[static_cast<std::size_t>(j)]);
            const __m256d sp = _mm256_loadu_pd(&sin_phi[static_cast<std::size_t>(j)]);
            const __m256d nx = _mm256_mul_pd(vst, cp);
            const __m256d ny = _mm256_mul_pd(vst, sp);
            const __m256d values =
                _mm256_add_pd(outcome_term(f, 1.0, nx, ny, vct), outcome_term(f, -1.0, nx, ny, vct));

            double lane[4];
            _mm256_storeu_pd(lane, values);
            for (int l = 0; l < 4; ++l)
                if (lane[l] < best.value) best = {lane[l], i, j + l};
        }
        for (; j < n_phi; ++j) {
            const double v = field_entropy(f, st, ct, sin_phi[static_cast<std::size_t>(j)],
                                           cos_phi[static_cast<std::size_t>(j)]);
            if (v < best.value) best = {v, i, j};
        }
    }
    return best;
}

}  // namespace qcorr::detail
