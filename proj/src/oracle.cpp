#include "qcorr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "kernels/scan.hpp"

namespace qcorr {

namespace detail {
ScanHit run_scan(const BlochField& f, const double* thetas, int n_theta, const double* phis,
                 int n_phi);
}

namespace {

using detail::BlochField;
using detail::ScanHit;

constexpr double pi = std::numbers::pi;

void validate_density(const Mat& rho) {
    if (rho.dim() != 4) throw validation_error("oracle expects a 4x4 density matrix");
    if (std::abs(rho.trace() - cplx(1.0)) > tol::trace_one)
        throw validation_error("oracle: trace deviates from one");
    density_eigenvalues(rho);  // hermiticity + positivity
}

Mat direction_projector(double theta, double phi, double sign) {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    Mat n = nx * pauli(1) + ny * pauli(2);
    n += nz * pauli(3);
    return 0.5 * (identity2() + sign * n);
}

double conditional_entropy_unchecked(const Mat& rho, double theta, double phi) {
    double out = 0.0;
    for (double sign : {1.0, -1.0}) {
        const Mat proj = tensor(identity2(), direction_projector(theta, phi, sign));
        const Mat selected = proj * rho * proj;
        const double p = std::real(selected.trace());
        if (p < 1e-14) continue;
        const Mat conditional = (1.0 / p) * partial_trace(selected, Subsystem::A);
        out += p * von_neumann_entropy(conditional);
    }
    return out;
}

BlochField bloch_field(const Mat& rho) {
    BlochField f{};
    for (int k = 0; k < 4; ++k) {
        const Mat& sig_b = k == 0 ? identity2() : pauli(k);
        const Mat mk = partial_trace(rho * tensor(identity2(), sig_b), Subsystem::A);
        f.a[k] = std::real(mk.trace());
        for (int j = 0; j < 3; ++j) f.b[k][j] = std::real((mk * pauli(j + 1)).trace());
    }
    return f;
}

std::vector<double> linspace(double lo, double hi, int n, bool inclusive) {
    std::vector<double> v(static_cast<std::size_t>(n));
    const double step = (hi - lo) / (inclusive ? n - 1 : n);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + step * i;
    return v;
}

}  // namespace

double conditional_entropy(const Mat& rho, const MeasurementDirection& dir) {
    validate_density(rho);
    return conditional_entropy_unchecked(rho, dir.theta, dir.phi);
}

OracleMinimum min_conditional_entropy(const Mat& rho, const OracleSettings& settings) {
    validate_density(rho);
    if (settings.n_theta < 2 || settings.n_phi < 2)
        throw validation_error("oracle grid needs at least 2 points per angle");

    const BlochField field = bloch_field(rho);

    const std::vector<double> thetas = linspace(0.0, pi, settings.n_theta, true);
    const std::vector<double> phis = linspace(0.0, 2.0 * pi, settings.n_phi, false);
    ScanHit best = detail::run_scan(field, thetas.data(), settings.n_theta, phis.data(),
                                    settings.n_phi);
    double best_theta = thetas[static_cast<std::size_t>(best.theta_index)];
    double best_phi = phis[static_cast<std::size_t>(best.phi_index)];
    long evaluations = static_cast<long>(settings.n_theta) * settings.n_phi;

    // Window-shrink refinement around the incumbent. 41 points per axis cut
    // the step by ~13x per round, so the default 3 rounds land well inside
    // value_tol for smooth entropy landscapes.
    const int local_points = 41;
    double window = 1.5 * std::max(pi / (settings.n_theta - 1), 2.0 * pi / settings.n_phi);
    for (int round = 0; round < settings.refine_rounds; ++round) {
        const double t_lo = std::max(0.0, best_theta - window);
        const double t_hi = std::min(pi, best_theta + window);
        const std::vector<double> lthetas = linspace(t_lo, t_hi, local_points, true);
        const std::vector<double> lphis =
            linspace(best_phi - window, best_phi + window, local_points, true);

        const ScanHit local =
            detail::run_scan(field, lthetas.data(), local_points, lphis.data(), local_points);
        evaluations += static_cast<long>(local_points) * local_points;

        const double improvement = best.value - local.value;
        if (local.value < best.value) {
            best.value = local.value;
            best_theta = lthetas[static_cast<std::size_t>(local.theta_index)];
            best_phi = lphis[static_cast<std::size_t>(local.phi_index)];
        }
        window = 3.0 * (t_hi - t_lo) / (local_points - 1);
        if (improvement < settings.value_tol && round > 0) break;
    }

    // canonical azimuth
    best_phi = std::fmod(best_phi, 2.0 * pi);
    if (best_phi < 0.0) best_phi += 2.0 * pi;

    return {best.value, {best_theta, best_phi}, evaluations};
}

CorrelationBreakdown oracle_correlations(const Mat& rho, const OracleSettings& settings) {
    validate_density(rho);
    const double entropy_ab = von_neumann_entropy(rho);
    const double entropy_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
    const double entropy_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));

    const OracleMinimum minimum = min_conditional_entropy(rho, settings);

    CorrelationBreakdown out;
    out.s1 = conditional_entropy_unchecked(rho, 0.0, 0.0);            // z
    out.s2 = conditional_entropy_unchecked(rho, 0.5 * pi, 0.0);       // x
    out.s3 = conditional_entropy_unchecked(rho, 0.5 * pi, 0.5 * pi);  // y
    out.argmin_branch = Branch::s1;  // ties resolve to the lowest index
    double branch_value = out.s1;
    if (out.s2 < branch_value) {
        branch_value = out.s2;
        out.argmin_branch = Branch::s2;
    }
    if (out.s3 < branch_value) out.argmin_branch = Branch::s3;

    out.mutual_info = entropy_a + entropy_b - entropy_ab;
    out.classical = entropy_a - minimum.value;
    if (out.classical < 0.0) {
        if (out.classical < -tol::discord_clip)
            throw numeric_error("oracle classical correlation below clipping tolerance");
        out.classical = 0.0;
    }
    out.discord = out.mutual_info - out.classical;
    if (out.discord < 0.0) {
        if (out.discord < -tol::discord_clip)
            throw numeric_error("oracle discord below clipping tolerance");
        out.discord = 0.0;
        out.discord_clipped = true;
    }
    return out;
}

}  // namespace qcorr
