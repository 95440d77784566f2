// Time sweeps of the correlation quantities under a channel, detection of
// sudden changes (argmin-branch switches with a decay-rate kink), and
// bisection localization of the transition times.
#pragma once

#include <string_view>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/discord.hpp"

namespace qcorr {

inline constexpr double default_slope_threshold = 1e-3;  // bits per unit tau*t

enum class SweepQuantity { classical, discord };

std::string_view to_string(SweepQuantity q);

// A kink: the branch optimizing min{S1,S2,S3} switches at tau_t and the
// one-sided decay rates of the affected curve disagree.
struct SuddenChangeEvent {
    double tau_t = 0;
    Branch branch_before = Branch::s1;
    Branch branch_after = Branch::s1;
    double left_slope = 0;   // finite differences at grid resolution,
    double right_slope = 0;  // diagnostics rather than contract values
    SweepQuantity quantity = SweepQuantity::discord;
    bool weak = false;  // slope jump below the detection threshold
};

struct SweepResult {
    NoiseKind kind = NoiseKind::amplitude;
    double tau = 1.0;
    std::vector<double> grid;  // scaled times tau*t, strictly increasing
    std::vector<CorrelationBreakdown> rows;
    std::vector<SuddenChangeEvent> events;
};

std::vector<double> uniform_grid(double lo, double hi, int points);

// rows[i] = correlations(evolve_params(p0, channel at grid[i])), events
// from detect_events (skipped for grids shorter than 3 points).
SweepResult sweep(const XStateParams& p0, NoiseKind kind, double tau, std::vector<double> grid,
                  double slope_threshold = default_slope_threshold);

// One event per boundary where the argmin branch of consecutive rows
// transfers (each side strictly prefers its own branch; label flips at
// exactly tied points do not count), localized by bisection and annotated
// with the 2-point one-sided slopes of the curve that kinked hardest.
std::vector<SuddenChangeEvent> detect_events(const SweepResult& swept, const XStateParams& p0,
                                             double slope_threshold = default_slope_threshold);

// Bisection on the sign of (S_before - S_after) inside [t_lo, t_hi] (plain
// time); the bracket ends must disagree on the argmin branch. Returns the
// scaled transition time tau*t.
double locate_transition(const XStateParams& p0, NoiseKind kind, double tau, double t_lo,
                         double t_hi);

// Scaled time where the depolarizing channel reaches full mixing of the
// noisy qubit (1 - 4p/3 = 0), i.e. tau*t = ln 4. Rejects the all-zero state.
double depolarizing_zero_time(const XStateParams& p0);

}  // namespace qcorr
