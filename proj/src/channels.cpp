#include "qcorr/channels.hpp"

#include <cmath>
#include <string>

namespace qcorr {

std::string_view to_string(NoiseKind k) {
    switch (k) {
        case NoiseKind::amplitude: return "amplitude";
        case NoiseKind::phase: return "phase";
        case NoiseKind::depolarizing: return "depolarizing";
    }
    throw validation_error("unknown noise kind");
}

NoiseKind noise_kind_from_string(std::string_view name) {
    if (name == "amplitude") return NoiseKind::amplitude;
    if (name == "phase") return NoiseKind::phase;
    if (name == "depolarizing") return NoiseKind::depolarizing;
    throw validation_error("unknown channel '" + std::string(name) +
                           "' (expected amplitude, phase or depolarizing)");
}

ChannelAtTime::ChannelAtTime(NoiseKind kind_, double tau_, double t_)
    : kind(kind_), tau(tau_), t(t_) {
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw validation_error("channel decay rate tau must be positive");
    if (t < 0.0 || !std::isfinite(t))
        throw validation_error("channel time must be non-negative");
}

double ChannelAtTime::control() const {
    switch (kind) {
        case NoiseKind::amplitude:
        case NoiseKind::phase:
            return std::exp(-0.5 * tau * t);
        case NoiseKind::depolarizing:
            return -std::expm1(-tau * t);
    }
    throw validation_error("unknown noise kind");
}

std::vector<Mat> kraus_single_qubit(const ChannelAtTime& ch) {
    switch (ch.kind) {
        case NoiseKind::amplitude: {
            const double eta = ch.control();
            const double omega = std::sqrt(std::max(0.0, 1.0 - eta * eta));
            // Decay toward |1><1|: E0 = diag(eta, 1), E1 = sqrt(1-eta^2) |1><0|.
            Mat e0(2, {eta, 0, 0, 1});
            Mat e1(2, {0, 0, omega, 0});
            return {e0, e1};
        }
        case NoiseKind::phase: {
            const double gamma = ch.control();
            const double omega = std::sqrt(std::max(0.0, 1.0 - gamma * gamma));
            Mat k0(2, {1, 0, 0, gamma});
            Mat k1(2, {0, 0, 0, omega});
            return {k0, k1};
        }
        case NoiseKind::depolarizing: {
            const double p = ch.control();
            const double w0 = std::sqrt(std::max(0.0, 1.0 - p));
            const double w = std::sqrt(p / 3.0);
            return {w0 * Mat::identity(2), w * pauli(1), w * pauli(2), w * pauli(3)};
        }
    }
    throw validation_error("unknown noise kind");
}

std::vector<Mat> lift_to_qubit_a(const std::vector<Mat>& ks) {
    std::vector<Mat> out;
    out.reserve(ks.size());
    for (const Mat& k : ks) {
        if (k.dim() != 2) throw validation_error("lift_to_qubit_a expects 2x2 operators");
        out.push_back(tensor(k, identity2()));
    }
    return out;
}

Mat apply_channel(const std::vector<Mat>& ks, const Mat& rho) {
    if (ks.empty()) throw validation_error("apply_channel: empty Kraus set");
    const int dim = ks.front().dim();
    if (rho.dim() != dim) throw validation_error("apply_channel: dimension mismatch");

    Mat completeness(dim);
    for (const Mat& k : ks) completeness += k.dagger() * k;
    if (completeness.max_abs_diff(Mat::identity(dim)) > tol::completeness)
        throw validation_error("apply_channel: Kraus completeness violated");

    Mat out(dim);
    for (const Mat& k : ks) out += k * rho * k.dagger();
    return out;
}

XStateParams evolve_params(const XStateParams& p0, const ChannelAtTime& ch) {
    switch (ch.kind) {
        case NoiseKind::amplitude: {
            if (!p0.bell_diagonal())
                throw validation_error(
                    "amplitude parameter map is defined for Bell-diagonal inputs (r = s = 0); "
                    "use apply_channel for general X states");
            const double eta = ch.control();
            return {eta * eta - 1.0, 0.0, eta * p0.c1, eta * p0.c2, eta * eta * p0.c3};
        }
        case NoiseKind::phase: {
            if (!p0.bell_diagonal())
                throw validation_error(
                    "phase parameter map is defined for Bell-diagonal inputs (r = s = 0); "
                    "use apply_channel for general X states");
            const double gamma = ch.control();
            return {0.0, 0.0, gamma * p0.c1, gamma * p0.c2, p0.c3};
        }
        case NoiseKind::depolarizing: {
            const double k = 1.0 - 4.0 * ch.control() / 3.0;
            return {k * p0.r, p0.s, k * p0.c1, k * p0.c2, k * p0.c3};
        }
    }
    throw validation_error("unknown noise kind");
}

}  // namespace qcorr
