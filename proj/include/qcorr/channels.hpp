// Time-parameterized single-qubit Kraus channels (amplitude, phase,
// depolarizing), their lifting to qubit A of a two-qubit system, and the
// closed-form parameter maps they induce on X states.
#pragma once

#include <string_view>
#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

namespace tol {
inline constexpr double completeness = 1e-10;  // max entry of sum K^dag K - I
}

enum class NoiseKind { amplitude, phase, depolarizing };

std::string_view to_string(NoiseKind k);
NoiseKind noise_kind_from_string(std::string_view name);

// One channel evaluated at an instant. tau is the decay rate, t the elapsed
// time. Control parameter: eta = gamma = exp(-tau t / 2) for amplitude and
// phase noise, p = 1 - exp(-tau t) for depolarizing noise; t = 0 is the
// identity channel.
struct ChannelAtTime {
    NoiseKind kind;
    double tau;
    double t;

    ChannelAtTime(NoiseKind kind, double tau, double t);

    double scaled_time() const { return tau * t; }
    double control() const;
};

// Single-qubit Kraus operators: 2 for amplitude and phase, 4 for
// depolarizing. They satisfy sum K^dag K = I to machine precision.
std::vector<Mat> kraus_single_qubit(const ChannelAtTime& ch);

// K -> K (x) I2 for every operator: noise acting on qubit A only.
std::vector<Mat> lift_to_qubit_a(const std::vector<Mat>& ks);

// rho -> sum_i K_i rho K_i^dagger. Rejects Kraus sets whose completeness
// defect exceeds tol::completeness.
Mat apply_channel(const std::vector<Mat>& ks, const Mat& rho);

// Closed-form parameter map. Amplitude and phase noise are defined on
// Bell-diagonal inputs only:
//   amplitude: (eta^2 - 1, 0, eta c1, eta c2, eta^2 c3)
//   phase:     (0, 0, gamma c1, gamma c2, c3)
// Depolarizing accepts any X state: r -> (1 - 4p/3) r, s -> s,
// c_i -> (1 - 4p/3) c_i.
XStateParams evolve_params(const XStateParams& p0, const ChannelAtTime& ch);

}  // namespace qcorr
