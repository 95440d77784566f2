// Brute-force minimization of the measured conditional entropy over all
// rank-1 projective measurement directions on qubit B: a coarse grid scan
// followed by window-shrink refinement. Works from the raw density matrix
// only, so it can independently validate every analytic formula.
#pragma once

#include "qcorr/discord.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

// Bloch-sphere direction of the projectors (I +- n.sigma)/2 on B.
struct MeasurementDirection {
    double theta = 0;  // polar angle, [0, pi]
    double phi = 0;    // azimuthal angle, [0, 2 pi)
};

struct OracleSettings {
    int n_theta = 181;        // coarse grid rows, [0, pi] inclusive
    int n_phi = 360;          // coarse grid columns, [0, 2 pi) exclusive
    int refine_rounds = 3;    // window-shrink iterations around the incumbent
    double value_tol = 1e-10; // stop refining once a round improves less than this
};

// Kernel used for grid scans; AVX2 is selected automatically when the CPU
// supports it. force_scan_backend(scalar) pins the reference kernel.
enum class ScanBackend { scalar, avx2 };
ScanBackend active_scan_backend();
void force_scan_backend(ScanBackend b);
void reset_scan_backend();

// sum_i p_i S(rho_A^i) for the two outcomes of the projective measurement
// along dir; outcomes with p_i < 1e-14 contribute zero.
double conditional_entropy(const Mat& rho, const MeasurementDirection& dir);

struct OracleMinimum {
    double value = 0;
    MeasurementDirection direction;
    long evaluations = 0;
};

// Minimum over all directions: every grid and refinement sample is an upper
// bound for the returned value. Deterministic for fixed inputs and settings;
// exact ties resolve to the lexicographically smallest (theta, phi).
OracleMinimum min_conditional_entropy(const Mat& rho, const OracleSettings& settings = {});

// Full correlation breakdown from the raw matrix: mutual information from
// subsystem entropies, classical correlation from the direction minimum,
// s1/s2/s3 filled with the fixed z/x/y-axis conditional entropies.
CorrelationBreakdown oracle_correlations(const Mat& rho, const OracleSettings& settings = {});

}  // namespace qcorr
