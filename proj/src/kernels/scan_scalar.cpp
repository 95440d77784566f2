#include "kernels/scan.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace qcorr::detail {

namespace {

constexpr double prob_floor = 1e-14;   // outcomes below this contribute zero
constexpr double xlog_floor = 1e-300;  // 0 log 0 = 0 guard

inline double neg_xlog2x(double x) {
    return x > xlog_floor ? -x * std::log2(x) : 0.0;
}

}  // namespace

double field_entropy(const BlochField& f, double st, double ct, double sp, double cp) {
    const double nx = st * cp;
    const double ny = st * sp;
    const double nz = ct;

    double out = 0.0;
    for (double sign : {1.0, -1.0}) {
        const double p = 0.5 * (f.a[0] + sign * (nx * f.a[1] + ny * f.a[2] + nz * f.a[3]));
        if (p < prob_floor) continue;
        const double ux = 0.5 * (f.b[0][0] + sign * (nx * f.b[1][0] + ny * f.b[2][0] + nz * f.b[3][0]));
        const double uy = 0.5 * (f.b[0][1] + sign * (nx * f.b[1][1] + ny * f.b[2][1] + nz * f.b[3][1]));
        const double uz = 0.5 * (f.b[0][2] + sign * (nx * f.b[1][2] + ny * f.b[2][2] + nz * f.b[3][2]));
        const double t = std::min(std::sqrt(ux * ux + uy * uy + uz * uz) / p, 1.0);
        // conditional eigenvalues (1 +- t)/2
        out += p * (neg_xlog2x(0.5 * (1.0 + t)) + neg_xlog2x(0.5 * (1.0 - t)));
    }
    return out;
}

ScanHit scan_scalar(const BlochField& f, const double* thetas, int n_theta,
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
        for (int j = 0; j < n_phi; ++j) {
            const double v = field_entropy(f, st, ct, sin_phi[static_cast<std::size_t>(j)],
                                           cos_phi[static_cast<std::size_t>(j)]);
            if (v < best.value) best = {v, i, j};
        }
    }
    return best;
}

}  // namespace qcorr::detail
