#include "qcorr/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

namespace {

std::array<double, 3> branches_at(const XStateParams& p0, NoiseKind kind, double tau, double t) {
    return branch_entropies(evolve_params(p0, ChannelAtTime(kind, tau, t)));
}

double branch_value(const std::array<double, 3>& s, Branch b) {
    return s[static_cast<std::size_t>(b)];
}

Branch argmin_branch_of(const std::array<double, 3>& s) {
    Branch b = Branch::s1;
    double v = s[0];
    if (s[1] < v) { v = s[1]; b = Branch::s2; }
    if (s[2] < v) b = Branch::s3;
    return b;
}

}  // namespace

std::string_view to_string(SweepQuantity q) {
    switch (q) {
        case SweepQuantity::classical: return "classical";
        case SweepQuantity::discord: return "discord";
    }
    throw validation_error("unknown sweep quantity");
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
    if (points < 2 || lo < 0.0 || !(hi > lo))
        throw validation_error("grid requires t_min >= 0, t_max > t_min and points >= 2");
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
    return v;
}

SweepResult sweep(const XStateParams& p0, NoiseKind kind, double tau, std::vector<double> grid,
                  double slope_threshold) {
    if (grid.empty()) throw validation_error("sweep grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 0.0) throw validation_error("sweep grid times must be non-negative");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw validation_error("sweep grid must be strictly increasing");
    }

    SweepResult out;
    out.kind = kind;
    out.tau = tau;
    out.grid = std::move(grid);
    out.rows.reserve(out.grid.size());
    for (double tau_t : out.grid)
        out.rows.push_back(correlations(evolve_params(p0, ChannelAtTime(kind, tau, tau_t / tau))));
    if (out.grid.size() >= 3) out.events = detect_events(out, p0, slope_threshold);
    return out;
}

std::vector<SuddenChangeEvent> detect_events(const SweepResult& swept, const XStateParams& p0,
                                             double slope_threshold) {
    const auto& grid = swept.grid;
    const auto& rows = swept.rows;
    if (grid.size() < 3) throw validation_error("event detection needs at least 3 grid points");
    if (rows.size() != grid.size())
        throw validation_error("event detection needs one row per grid point");

    auto value_of = [](const CorrelationBreakdown& row, Branch b) {
        switch (b) {
            case Branch::s1: return row.s1;
            case Branch::s2: return row.s2;
            case Branch::s3: return row.s3;
        }
        throw validation_error("unknown branch");
    };

    std::vector<SuddenChangeEvent> events;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const Branch before = rows[i].argmin_branch;
        const Branch after = rows[i + 1].argmin_branch;
        if (before == after) continue;

        // A transfer requires each side to strictly prefer its own branch;
        // an argmin label flip at an exactly tied point (e.g. the fully
        // mixed instant of the depolarizing channel) is not a kink.
        constexpr double tie_eps = 1e-13;
        if (value_of(rows[i], after) - value_of(rows[i], before) <= tie_eps) continue;
        if (value_of(rows[i + 1], before) - value_of(rows[i + 1], after) <= tie_eps) continue;

        SuddenChangeEvent ev;
        ev.branch_before = before;
        ev.branch_after = after;
        ev.tau_t =
            locate_transition(p0, swept.kind, swept.tau, grid[i] / swept.tau, grid[i + 1] / swept.tau);

        // one-sided 2-point slopes immediately adjacent to the boundary; a
        // switch in the first or last interval degrades to the boundary
        // interval itself
        const std::size_t il = i > 0 ? i - 1 : i + 1;
        const std::size_t ir = i + 2 < rows.size() ? i + 2 : i;
        auto slope = [&](std::size_t lo, std::size_t hi, SweepQuantity q) {
            const double dq = q == SweepQuantity::discord ? rows[hi].discord - rows[lo].discord
                                                          : rows[hi].classical - rows[lo].classical;
            return dq / (grid[hi] - grid[lo]);
        };
        // both curves kink with equal magnitude when the branch transfers;
        // report discord unless classical genuinely dominates
        double best_jump = -1.0;
        for (SweepQuantity q : {SweepQuantity::discord, SweepQuantity::classical}) {
            const double left = slope(il, i, q);
            const double right = slope(i + 1, ir, q);
            const double jump = std::abs(left - right);
            if (jump > best_jump * (1.0 + 1e-9) + 1e-12) {
                best_jump = jump;
                ev.left_slope = left;
                ev.right_slope = right;
                ev.quantity = q;
            }
        }
        ev.weak = best_jump <= slope_threshold;
        events.push_back(ev);
    }
    return events;
}

double locate_transition(const XStateParams& p0, NoiseKind kind, double tau, double t_lo,
                         double t_hi) {
    if (!(t_hi > t_lo) || t_lo < 0.0)
        throw validation_error("locate_transition: invalid bracket");

    const Branch before = argmin_branch_of(branches_at(p0, kind, tau, t_lo));
    const Branch after = argmin_branch_of(branches_at(p0, kind, tau, t_hi));
    if (before == after)
        throw validation_error("locate_transition: argmin branch does not change across bracket");

    auto gap = [&](double t) {
        const auto s = branches_at(p0, kind, tau, t);
        return branch_value(s, before) - branch_value(s, after);
    };
    if (gap(t_lo) > 0.0 || gap(t_hi) < 0.0)
        throw validation_error("locate_transition: no sign change in bracket");

    double lo = t_lo, hi = t_hi;
    while (hi - lo >= 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket is at fp resolution
        (gap(mid) <= 0.0 ? lo : hi) = mid;
    }
    return tau * 0.5 * (lo + hi);
}

double depolarizing_zero_time(const XStateParams& p0) {
    if (p0.zero())
        throw validation_error("depolarizing_zero_time: state is already maximally mixed");
    return std::log(4.0);
}

}  // namespace qcorr
