#include "qcorr/discord.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

namespace {

Branch argmin_of(double s1, double s2, double s3) {
    // ties resolve to the lowest index
    Branch b = Branch::s1;
    double v = s1;
    if (s2 < v) { v = s2; b = Branch::s2; }
    if (s3 < v) { b = Branch::s3; }
    return b;
}

void clip_nonnegative(double& v, bool* flagged = nullptr) {
    if (v >= 0.0) return;
    if (v < -tol::discord_clip)
        throw numeric_error("correlation quantity below clipping tolerance");
    v = 0.0;
    if (flagged) *flagged = true;
}

}  // namespace

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::s1: return "S1";
        case Branch::s2: return "S2";
        case Branch::s3: return "S3";
    }
    throw validation_error("unknown branch");
}

double entropy_shift(double t) {
    double a = std::abs(t);
    if (a > 1.0 + 1e-12) throw validation_error("entropy_shift: |t| must be <= 1");
    a = std::min(a, 1.0);
    double out = -0.5 * (1.0 + a) * std::log2(1.0 + a);
    if (1.0 - a > 0.0) out -= 0.5 * (1.0 - a) * std::log2(1.0 - a);
    return out;
}

double CorrelationBreakdown::branch_min() const { return std::min({s1, s2, s3}); }

std::array<double, 3> branch_entropies(const XStateParams& p) {
    const double w_plus = 0.5 * (1.0 + p.s);
    const double w_minus = 0.5 * (1.0 - p.s);
    double s1 = 1.0;
    if (w_plus > 0.0) s1 += w_plus * entropy_shift((p.r + p.c3) / (1.0 + p.s));
    if (w_minus > 0.0) s1 += w_minus * entropy_shift((p.r - p.c3) / (1.0 - p.s));
    const double s2 = 1.0 + entropy_shift(std::hypot(p.r, p.c1));
    const double s3 = 1.0 + entropy_shift(std::hypot(p.r, p.c2));
    return {s1, s2, s3};
}

CorrelationBreakdown correlations(const XStateParams& p) {
    const auto [s1, s2, s3] = branch_entropies(p);
    const double entropy_a = 1.0 + entropy_shift(p.r);
    const double entropy_b = 1.0 + entropy_shift(p.s);
    const double entropy_ab = entropy_of(closed_form_eigenvalues(p));

    CorrelationBreakdown out;
    out.s1 = s1;
    out.s2 = s2;
    out.s3 = s3;
    out.argmin_branch = argmin_of(s1, s2, s3);
    out.mutual_info = entropy_a + entropy_b - entropy_ab;
    out.classical = entropy_a - out.branch_min();
    clip_nonnegative(out.classical);
    out.discord = out.mutual_info - out.classical;
    clip_nonnegative(out.discord, &out.discord_clipped);
    return out;
}

CorrelationBreakdown phase_noise_correlations(const BellDiagonalParams& p0,
                                              const ChannelAtTime& ch) {
    if (ch.kind != NoiseKind::phase)
        throw validation_error("phase_noise_correlations requires a phase channel");
    const double gamma = ch.control();
    const double chi =
        std::min(std::max({std::abs(gamma * p0.c1), std::abs(gamma * p0.c2), std::abs(p0.c3)}), 1.0);

    const XStateParams evolved(0.0, 0.0, gamma * p0.c1, gamma * p0.c2, p0.c3);
    const auto [s1, s2, s3] = branch_entropies(evolved);

    CorrelationBreakdown out;
    out.s1 = s1;
    out.s2 = s2;
    out.s3 = s3;
    out.argmin_branch = argmin_of(s1, s2, s3);

    out.classical = 0.5 * (1.0 + chi) * std::log2(1.0 + chi);
    if (1.0 - chi > 0.0) out.classical += 0.5 * (1.0 - chi) * std::log2(1.0 - chi);
    clip_nonnegative(out.classical);

    double lamlog = 0.0;
    for (double lam : closed_form_eigenvalues(evolved))
        if (lam > 0.0) lamlog += lam * std::log2(lam);
    out.mutual_info = 2.0 + lamlog;
    clip_nonnegative(out.mutual_info);

    out.discord = out.mutual_info - out.classical;
    clip_nonnegative(out.discord, &out.discord_clipped);
    return out;
}

}  // namespace qcorr
