// Closed-form mutual information, classical correlation, and quantum
// discord for X states, via the three fixed-axis conditional entropies
// S1 (z), S2 (x), S3 (y) of measurements on qubit B.
#pragma once

#include <array>
#include <string_view>

#include "qcorr/channels.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

namespace tol {
inline constexpr double discord_clip = 1e-10;  // tiny negatives zeroed, below rejected
}

enum class Branch { s1, s2, s3 };

std::string_view to_string(Branch b);

// f(t) = -(1+t)/2 log2(1+t) - (1-t)/2 log2(1-t): the entropy of a qubit
// with Bloch length |t| minus one bit. Even; f(0) = 0, f(+-1) = -1,
// decreasing in |t|.
double entropy_shift(double t);

// All correlation quantities of one state at one instant, in bits.
struct CorrelationBreakdown {
    double mutual_info = 0;
    double classical = 0;
    double discord = 0;
    double s1 = 0, s2 = 0, s3 = 0;
    Branch argmin_branch = Branch::s1;
    bool discord_clipped = false;  // floating-point negative zeroed

    double branch_min() const;
};

// Measured-on-B conditional entropies of A for z-, x-, y-axis projective
// measurements:
//   S1 = 1 + (1+s)/2 f((r+c3)/(1+s)) + (1-s)/2 f((r-c3)/(1-s))
//   S2 = 1 + f(sqrt(r^2 + c1^2))
//   S3 = 1 + f(sqrt(r^2 + c2^2))
// At |s| = 1 the vanishing-probability term is dropped (0 x undefined = 0).
std::array<double, 3> branch_entropies(const XStateParams& p);

CorrelationBreakdown correlations(const XStateParams& p);

// Bell-diagonal state under phase noise, stated through
// chi = max{|gamma c1|, |gamma c2|, |c3|}:
//   C = (1-chi)/2 log2(1-chi) + (1+chi)/2 log2(1+chi)
//   Q = 2 + sum_i lambda_i log2 lambda_i - C.
// Agrees with correlations(evolve_params(p0, ch)) to 1e-12.
CorrelationBreakdown phase_noise_correlations(const BellDiagonalParams& p0,
                                              const ChannelAtTime& ch);

}  // namespace qcorr
