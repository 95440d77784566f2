// CSV serialization of sweep results. Output is byte-deterministic for a
// fixed input: 12 significant digits, lowercase scientific where needed.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcorr/dynamics.hpp"

namespace qcorr {

std::string format_g12(double v);

// Per-row oracle comparison columns (optional).
struct OracleColumns {
    std::vector<double> oracle_min;
    std::vector<double> oracle_dev;
};

// Columns: tau_t, eta_or_gamma_or_p, mutual_info, classical, discord,
// s1, s2, s3, argmin_branch[, oracle_min, oracle_dev]. One header row;
// events appended as comment lines prefixed "#event".
void write_sweep_csv(std::ostream& out, const SweepResult& swept,
                     const OracleColumns* oracle = nullptr);

std::string event_line(const SuddenChangeEvent& ev);

}  // namespace qcorr
