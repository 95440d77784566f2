#include "qcorr/oracle.hpp"

#include <atomic>

#include "kernels/scan.hpp"

namespace qcorr {

namespace {

std::atomic<int> forced{-1};  // -1 = auto-detect

bool avx2_available() {
#if defined(QCORR_HAVE_AVX2_KERNEL) && defined(__x86_64__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

}  // namespace

ScanBackend active_scan_backend() {
    const int f = forced.load(std::memory_order_relaxed);
    if (f == static_cast<int>(ScanBackend::scalar)) return ScanBackend::scalar;
    return avx2_available() ? ScanBackend::avx2 : ScanBackend::scalar;
}

void force_scan_backend(ScanBackend b) {
    forced.store(static_cast<int>(b), std::memory_order_relaxed);
}

void reset_scan_backend() { forced.store(-1, std::memory_order_relaxed); }

namespace detail {

ScanHit run_scan(const BlochField& f, const double* thetas, int n_theta, const double* phis,
                 int n_phi) {
#ifdef QCORR_HAVE_AVX2_KERNEL
    if (active_scan_backend() == ScanBackend::avx2)
        return scan_avx2(f, thetas, n_theta, phis, n_phi);
#endif
    return scan_scalar(f, thetas, n_theta, phis, n_phi);
}

}  // namespace detail

}  // namespace qcorr
